// Copyright 2026 The aqc authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQC_CORRECTABILITY_HPP
#define AQC_CORRECTABILITY_HPP

#include "aqc/algebras.hpp"
#include "aqc/channels.hpp"
#include "aqc/diamond.hpp"

namespace aqc {

/// Subspace code: isometric encoding of a d-dimensional logical space into
/// the physical space.
struct SubspaceCode {
  CMatrix V;  // physical_dim x d, V^dag V = 1
  int d = 0;
};

struct ExactCheckResult {
  bool exact = false;
  double kl_defect = 0.0;  // max_{A,i,j} ||[A, E_i^dag E_j]|| over an HS basis
};

struct OptimalErrorResult {
  double error = 0.0;  // E_A(N)
  Channel recovery;    // argmin R
};

struct CorrectabilityReport {
  double delta = 0.0;          // delta_A(N)
  double optimal_error = 0.0;  // E_A(N)
  Channel recovery;
  bool exact = false;
  double kl_defect = 0.0;
  bool bounds_ok = false;  // (1/4) delta^2 <= E and E <= 2 sqrt(delta), within tol
  double tol = 0.0;
  double exact_tol = 0.0;
};

/// Commutation test [A, E_i^dag E_j] = 0 over an HS-orthonormal basis of the
/// algebra; exact iff the largest commutator norm is at most tol.
ExactCheckResult exact_check(const Channel& N, const AlgebraStructure& alg,
                             double tol = 1e-8);

/// Block structure of the commutant of {E_i^dag E_j}: the largest algebra
/// every exactly correctable algebra is contained in.
AlgebraStructure largest_correctable(const Channel& N, double tol = 1e-9);

/// delta_A(N) = || Nhat - Nhat o P_{A'} ||_diamond.
double delta_estimate(const Channel& N, const AlgebraStructure& alg,
                      double tol = 1e-7);

/// Correctability estimate for a subspace code, evaluated through the
/// lambda_ij form: diamond distance between the complement of N o E and the
/// constant channel onto its average environment state.
double subspace_estimate(const SubspaceCode& code, const Channel& N,
                         double tol = 1e-7);

/// E_A(N) = min_R || R o N - P_A ||_diamond with the minimizing recovery,
/// solved as one joint SDP over the recovery's Choi matrix.
OptimalErrorResult optimal_error(const Channel& N, const AlgebraStructure& alg,
                                 double tol = 1e-7);

/// Computes delta and E and checks (1/4) delta^2 <= E <= 2 sqrt(delta)
/// within tol.
CorrectabilityReport verify_theorem1(const Channel& N, const AlgebraStructure& alg,
                                     double tol = 1e-4);

/// Sampled supremum of || [A (x) 1, (Nhat^dag (x) id)(B)] || over unitaries A
/// of the algebra and operators ||B|| <= 1 on the doubled environment space,
/// with hill-climbing refinement of the best sample. One-sided: a lower bound
/// on the true supremum.
double commutator_condition(const Channel& N, const AlgebraStructure& alg,
                            int samples, std::uint64_t seed);

struct ProductDegradation {
  std::vector<double> per_factor;
  double product = 0.0;
};

/// Commutator norms for each factor and for the full product A_1 ... A_n
/// against the same extended environment observable B; the product value is
/// subadditive in the per-factor values.
ProductDegradation product_degradation_demo(const std::vector<CMatrix>& ops,
                                            const Channel& N, const CMatrix& B);

// Seeded instance generators for the randomized bound verifications.
Channel random_channel(int dim_in, int dim_out, int kraus_rank, Rng& rng);
AlgebraStructure random_catalog_algebra(int dim, Rng& rng);

}  // namespace aqc

#endif  // AQC_CORRECTABILITY_HPP

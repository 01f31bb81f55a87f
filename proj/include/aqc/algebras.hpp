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

#ifndef AQC_ALGEBRAS_HPP
#define AQC_ALGEBRAS_HPP

#include <vector>

#include "aqc/channels.hpp"
#include "aqc/matcore.hpp"

namespace aqc {

/// One Wedderburn block of a finite-dimensional dagger-algebra: the isometry
/// maps C^{dA} (x) C^{dB} (dA slow) into the ambient space; the block carries
/// the operators iso (A (x) 1_dB) iso^dag.
struct AlgebraBlock {
  CMatrix iso;  // ambient_dim x (dA*dB), orthonormal columns
  int dA = 0;   // noisy / observable factor
  int dB = 0;   // multiplicity factor
};

/// Direct sum of blocks realizing (+)_i M_{dA_i} (x) 1_{dB_i}.
struct AlgebraStructure {
  int ambient_dim = 0;
  std::vector<AlgebraBlock> blocks;
};

/// Hilbert-Schmidt orthonormal spanning set of an operator subspace.
struct OperatorBasis {
  int ambient_dim = 0;
  std::vector<CMatrix> ops;
};

struct MembershipResult {
  bool member = false;
  double defect = 0.0;
};

// Canonical structures.
AlgebraStructure full_algebra(int d);      // one block dA=d, dB=1
AlgebraStructure trivial_algebra(int d);   // one block dA=1, dB=d (scalars)
AlgebraStructure diagonal_algebra(int d);  // d blocks dA=dB=1

/// Sum of the block projectors P_i = U_i U_i^dag (the unit of the algebra).
CMatrix algebra_unit(const AlgebraStructure& alg);
bool is_unital(const AlgebraStructure& alg);

/// Assemble sum_i U_i (A_i (x) 1_{dB_i}) U_i^dag from per-block parts.
CMatrix element_from_blocks(const AlgebraStructure& alg,
                            const std::vector<CMatrix>& parts);

/// HS-orthonormal basis {U_i (e_ab (x) 1/sqrt(dB_i)) U_i^dag} of the algebra.
OperatorBasis basis_of(const AlgebraStructure& alg);

/// HS-orthogonal projection onto the algebra:
/// X -> sum_i U_i [ (Tr_B U_i^dag X U_i) / dB_i (x) 1_{dB_i} ] U_i^dag.
CMatrix project_algebra(const AlgebraStructure& alg, const CMatrix& X);

/// HS-orthogonal projection onto the commutant:
/// X -> sum_i U_i [ 1_{dA_i} (x) (Tr_A U_i^dag X U_i) / dA_i ] U_i^dag.
CMatrix project_commutant(const AlgebraStructure& alg, const CMatrix& X);

/// Block structure of the commutant: dA and dB swapped inside each block.
AlgebraStructure commutant_structure(const AlgebraStructure& alg);

/// Smallest dagger-algebra containing the generators, as an HS-orthonormal
/// basis; closed under products and adjoints, contains its own unit.
OperatorBasis generate_algebra(const std::vector<CMatrix>& gens, double tol = 1e-9);

/// Orthonormal basis of {X : [G, X] = 0 for all G in ops}.
OperatorBasis commutant_of_set(const std::vector<CMatrix>& ops, double tol = 1e-9);

/// Recover the Wedderburn block structure from a basis spanning a
/// dagger-algebra. Blocks cover only the range of the algebra's unit when
/// that unit is a proper projector.
AlgebraStructure structure_from_basis(const OperatorBasis& basis, double tol = 1e-9,
                                      std::uint64_t seed = 0);

/// Haar-random unitary of the algebra: blockwise Haar on each dA factor
/// tensored with 1_{dB}, identity on the complement of the unit.
CMatrix random_algebra_unitary(const AlgebraStructure& alg, Rng& rng);

/// Monte-Carlo estimate (1/n) sum_k U_k^dag B U_k of the commutant projection
/// with Haar-random algebra unitaries U_k; deterministic given the seed.
CMatrix twirl_estimate(const AlgebraStructure& alg, const CMatrix& B, int n,
                       std::uint64_t seed);

/// Defect ||X - P_A(X)||; member iff defect <= tol.
MembershipResult membership(const AlgebraStructure& alg, const CMatrix& X, double tol);

/// The projector P_A as a channel with Kraus operators
/// {U_i (1_{dA} (x) |j><k|) U_i^dag / sqrt(dB_i)}. Requires a unital algebra.
Channel projector_channel(const AlgebraStructure& alg);

/// P_{A'} as a channel (projector channel of the commutant structure).
Channel commutant_projector_channel(const AlgebraStructure& alg);

}  // namespace aqc

#endif  // AQC_ALGEBRAS_HPP

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

#ifndef AQC_SDP_HPP
#define AQC_SDP_HPP

#include <functional>
#include <string>
#include <vector>

#include "aqc/matcore.hpp"

namespace aqc {

/// One Hermitian coefficient matrix acting on a single block of the
/// block-diagonal PSD variable.
struct ConstraintTerm {
  int block = 0;
  CMatrix A;
};

/// Linear equality  sum_b Tr(A_b X_b) = rhs  over the blocks it touches.
struct SDPConstraint {
  std::vector<ConstraintTerm> terms;
  double rhs = 0.0;
};

/// Complex semidefinite program in standard primal form:
///   maximize    sum_b Re Tr(C_b X_b)
///   subject to  Tr(A_k X) = b_k,  X = diag(X_1, ..., X_B) >= 0
/// with all coefficient matrices Hermitian.
struct SDPProblem {
  std::vector<int> block_dims;
  std::vector<ConstraintTerm> objective;
  std::vector<SDPConstraint> constraints;

  int psd_dim() const;  // total dimension of the block-diagonal variable
  void validate() const;
};

enum class SDPStatus { Optimal, MaxIter, Infeasible };

struct SDPSolution {
  double primal_value = 0.0;
  double dual_value = 0.0;
  std::vector<CMatrix> X;  // primal blocks
  std::vector<double> y;   // dual multipliers
  SDPStatus status = SDPStatus::MaxIter;
  int iterations = 0;
};

struct SDPOptions {
  double tol = 1e-7;
  int max_iter = 200;
  bool verbose = false;
  bool parallel_schur = true;  // false selects the serial reference kernel
  std::function<void(const std::string&)> trace;  // per-iteration diagnostics
};

/// Primal-dual interior-point solver (Mehrotra predictor-corrector with
/// Nesterov-Todd scaling) for small dense complex SDPs. Intended for
/// strictly feasible problems; on iteration exhaustion the best iterate is
/// returned with status MaxIter.
SDPSolution sdp_solve(const SDPProblem& p, const SDPOptions& opts = {});

/// Schur complement M_kl = sum_b Re Tr(A_k W_b A_l W_b) of the scaled Newton
/// system. The parallel kernel is the production path; the serial one is the
/// reference it is tested and benchmarked against.
Eigen::MatrixXd assemble_schur(const SDPProblem& p, const std::vector<CMatrix>& W);
Eigen::MatrixXd assemble_schur_serial(const SDPProblem& p,
                                      const std::vector<CMatrix>& W);

}  // namespace aqc

#endif  // AQC_SDP_HPP

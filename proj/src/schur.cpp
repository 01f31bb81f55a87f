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

#include "aqc/sdp.hpp"

namespace aqc {

Eigen::MatrixXd assemble_schur_serial(const SDPProblem& p,
                                      const std::vector<CMatrix>& W) {
  const int m = int(p.constraints.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l <= k; ++l) {
      double acc = 0.0;
      for (const auto& tk : p.constraints[k].terms)
        for (const auto& tl : p.constraints[l].terms)
          if (tk.block == tl.block)
            acc += (tk.A * W[tk.block] * tl.A * W[tk.block]).trace().real();
      M(k, l) = acc;
      M(l, k) = acc;
    }
  return M;
}

Eigen::MatrixXd assemble_schur(const SDPProblem& p, const std::vector<CMatrix>& W) {
  const int m = int(p.constraints.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
  // Precompute the scaled coefficients T_k = W A_k W once per constraint.
  std::vector<std::vector<CMatrix>> T(m);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < m; ++k) {
    T[k].reserve(p.constraints[k].terms.size());
    for (const auto& t : p.constraints[k].terms)
      T[k].push_back(W[t.block] * t.A * W[t.block]);
  }
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l <= k; ++l) {
      double acc = 0.0;
      for (size_t a = 0; a < p.constraints[k].terms.size(); ++a) {
        const auto& tk = p.constraints[k].terms[a];
        for (const auto& tl : p.constraints[l].terms)
          if (tk.block == tl.block)
            acc += tl.A.cwiseProduct(T[k][a].transpose()).sum().real();
      }
      M(k, l) = acc;
      M(l, k) = acc;
    }
  }
  return M;
}

}  // namespace aqc

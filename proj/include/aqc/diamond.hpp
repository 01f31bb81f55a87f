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

#ifndef AQC_DIAMOND_HPP
#define AQC_DIAMOND_HPP

#include "aqc/channels.hpp"
#include "aqc/sdp.hpp"

namespace aqc {

/// Diamond-norm SDP for the difference of two channels with Choi matrix
/// difference deltaJ (Hermitian, traceless over the output factor):
///   maximize 2 Re Tr(deltaJ W)  s.t.  0 <= W <= rho (x) 1,  Tr rho = 1.
/// Blocks: W, the slack rho (x) 1 - W, and rho.
SDPProblem diamond_primal_problem(const CMatrix& deltaJ, int dim_in, int dim_out);

/// ||N1 - N2||_diamond via the SDP above, certified by the duality gap.
double diamond_distance(const Channel& N1, const Channel& N2, double tol = 1e-7);

/// Sampled lower bound on the diamond distance: max over random pure states
/// phi on the doubled input space of ||((N1-N2) (x) id)(phi)||_1, with local
/// hill-climbing refinement of the best sample.
double cb_check(const Channel& N1, const Channel& N2, int samples, std::uint64_t seed);

}  // namespace aqc

#endif  // AQC_DIAMOND_HPP

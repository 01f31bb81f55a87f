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

#ifndef AQC_CHANNELS_HPP
#define AQC_CHANNELS_HPP

#include <string>
#include <vector>

#include "aqc/matcore.hpp"

namespace aqc {

/// Completely positive trace-preserving map stored as a Kraus list.
/// Kraus order is part of the channel's identity: the environment basis of
/// the Stinespring dilation and of the complementary channel is indexed by it.
struct Channel {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<CMatrix> kraus;  // each dim_out x dim_in
};

/// Isometry V : C^{dim_in} -> C^{dim_out} (x) C^{dim_env}, with the output
/// system as the slow Kronecker factor. Satisfies V^dag V = 1.
struct Isometry {
  CMatrix matrix;  // (dim_out * dim_env) x dim_in
  int dim_env = 0;
};

/// Validates Kraus operators and builds a Channel. Rejects if the
/// trace-preservation defect ||sum E_i^dag E_i - 1|| exceeds 1e-6.
Channel make_channel(std::vector<CMatrix> kraus);

Channel identity_channel(int d);

/// Schroedinger picture: sum_i E_i rho E_i^dag.
CMatrix apply(const Channel& N, const CMatrix& rho);

/// Heisenberg picture: sum_i E_i^dag A E_i.
CMatrix apply_dual(const Channel& N, const CMatrix& A);

/// Choi matrix J(N) = sum_{kl} |k><l| (x) N(|k><l|), input factor slow.
CMatrix choi(const Channel& N);

/// Canonical Kraus list from the eigendecomposition of a Choi matrix,
/// descending eigenvalues, eigenvalues below 1e-10 dropped, first nonzero
/// entry of each Kraus operator made real positive.
Channel kraus_from_choi(const CMatrix& J, int dim_in, int dim_out);

/// Canonical form of an existing channel (eigen-Kraus of its Choi matrix).
Channel canonicalize(const Channel& N);

/// Stinespring dilation with dim_env = number of Kraus operators and
/// (1 (x) <i|) V = E_i.
Isometry stinespring(const Channel& N);

/// Complementary channel: <i|Nhat(rho)|j> = Tr(E_j^dag E_i rho).
Channel complement(const Channel& N);

/// Composition R after N; Kraus list {F_j E_i} with i fast.
Channel compose(const Channel& R, const Channel& N);

/// N (x) id_d, Kraus {E_i (x) 1_d}.
Channel tensor_id(const Channel& N, int d);

/// Encoding channel rho -> V rho V^dag for an isometry V (phys x code).
Channel encoding_channel(const CMatrix& V);

/// Named noise models: identity, depolarizing(p), dephasing(p), bit_flip(p),
/// amplitude_damping(gamma). Conventions:
///   depolarizing: rho -> (1-p) rho + p 1/d
///   dephasing (qubit): Kraus {sqrt(1-p) 1, sqrt(p) Z}
///   bit_flip (qubit):  Kraus {sqrt(1-p) 1, sqrt(p) X}
///   amplitude_damping (qubit): E0 = diag(1, sqrt(1-g)), E1 = sqrt(g)|0><1|
Channel standard_channel(const std::string& name, const std::vector<double>& params,
                         int d);

}  // namespace aqc

#endif  // AQC_CHANNELS_HPP

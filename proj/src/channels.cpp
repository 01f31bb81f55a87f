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

#include "aqc/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aqc {

Channel make_channel(std::vector<CMatrix> kraus) {
  if (kraus.empty()) throw std::invalid_argument("make_channel: empty Kraus list");
  const int dim_out = int(kraus[0].rows());
  const int dim_in = int(kraus[0].cols());
  CMatrix sum = CMatrix::Zero(dim_in, dim_in);
  for (const auto& E : kraus) {
    if (E.rows() != dim_out || E.cols() != dim_in)
      throw std::invalid_argument("make_channel: Kraus dimension mismatch");
    if (!E.allFinite())
      throw std::invalid_argument("make_channel: non-finite Kraus entries");
    sum += E.adjoint() * E;
  }
  const double defect = (sum - CMatrix::Identity(dim_in, dim_in)).norm();
  if (defect > 1e-6) {
    std::ostringstream os;
    os << "make_channel: trace-preservation defect " << defect;
    throw std::invalid_argument(os.str());
  }
  return {dim_in, dim_out, std::move(kraus)};
}

Channel identity_channel(int d) {
  return {d, d, {CMatrix::Identity(d, d)}};
}

CMatrix apply(const Channel& N, const CMatrix& rho) {
  if (rho.rows() != N.dim_in || rho.cols() != N.dim_in)
    throw std::invalid_argument("apply: state dimension mismatch");
  CMatrix out = CMatrix::Zero(N.dim_out, N.dim_out);
  for (const auto& E : N.kraus) out += E * rho * E.adjoint();
  return out;
}

CMatrix apply_dual(const Channel& N, const CMatrix& A) {
  if (A.rows() != N.dim_out || A.cols() != N.dim_out)
    throw std::invalid_argument("apply_dual: observable dimension mismatch");
  CMatrix out = CMatrix::Zero(N.dim_in, N.dim_in);
  for (const auto& E : N.kraus) out += E.adjoint() * A * E;
  return out;
}

CMatrix choi(const Channel& N) {
  const int n = N.dim_in, m = N.dim_out;
  CMatrix J = CMatrix::Zero(Eigen::Index(n) * m, Eigen::Index(n) * m);
  for (const auto& E : N.kraus) {
    // J += sum_{kl} |k><l| (x) E|k><l|E^dag  =  vv^dag with v = vec-like of E
    CVector v(Eigen::Index(n) * m);
    for (int k = 0; k < n; ++k) v.segment(Eigen::Index(k) * m, m) = E.col(k);
    J += v * v.adjoint();
  }
  return J;
}

Channel kraus_from_choi(const CMatrix& J, int dim_in, int dim_out) {
  const Eigen::Index D = Eigen::Index(dim_in) * dim_out;
  if (J.rows() != D || J.cols() != D)
    throw std::invalid_argument("kraus_from_choi: Choi dimension mismatch");
  HermitianEig eig = eig_hermitian(J);
  const double scale = std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
  if (eig.eigenvalues.minCoeff() < -1e-9 * scale)
    throw std::invalid_argument("kraus_from_choi: Choi matrix not PSD");
  CMatrix tr_out = partial_trace(J, dim_in, dim_out, TraceOut::Second);
  if ((tr_out - CMatrix::Identity(dim_in, dim_in)).norm() > 1e-6)
    throw std::invalid_argument("kraus_from_choi: Tr_out J != 1");
  std::vector<CMatrix> kraus;
  for (Eigen::Index k = D - 1; k >= 0; --k) {  // descending eigenvalues
    const double lam = eig.eigenvalues(k);
    if (lam < 1e-10) break;
    CVector v = std::sqrt(lam) * eig.eigenvectors.col(k);
    CMatrix E(dim_out, dim_in);
    for (int c = 0; c < dim_in; ++c) E.col(c) = v.segment(Eigen::Index(c) * dim_out, dim_out);
    // fix the global phase: first entry of largest modulus made real positive
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    Complex ph = v(imax) / std::abs(v(imax));
    kraus.push_back(E / ph);
  }
  return make_channel(std::move(kraus));
}

Channel canonicalize(const Channel& N) {
  return kraus_from_choi(choi(N), N.dim_in, N.dim_out);
}

Isometry stinespring(const Channel& N) {
  const int e = int(N.kraus.size());
  CMatrix V(Eigen::Index(N.dim_out) * e, N.dim_in);
  for (int a = 0; a < N.dim_out; ++a)
    for (int i = 0; i < e; ++i) V.row(Eigen::Index(a) * e + i) = N.kraus[i].row(a);
  return {V, e};
}

Channel complement(const Channel& N) {
  const int e = int(N.kraus.size());
  std::vector<CMatrix> kraus(N.dim_out, CMatrix(e, N.dim_in));
  for (int a = 0; a < N.dim_out; ++a)
    for (int i = 0; i < e; ++i) kraus[a].row(i) = N.kraus[i].row(a);
  return {N.dim_in, e, std::move(kraus)};
}

Channel compose(const Channel& R, const Channel& N) {
  if (R.dim_in != N.dim_out)
    throw std::invalid_argument("compose: inner dimensions do not match");
  std::vector<CMatrix> kraus;
  kraus.reserve(R.kraus.size() * N.kraus.size());
  for (const auto& F : R.kraus)
    for (const auto& E : N.kraus) kraus.push_back(F * E);
  return {N.dim_in, R.dim_out, std::move(kraus)};
}

Channel tensor_id(const Channel& N, int d) {
  if (d < 1) throw std::invalid_argument("tensor_id: d must be >= 1");
  std::vector<CMatrix> kraus;
  const CMatrix one = CMatrix::Identity(d, d);
  for (const auto& E : N.kraus) kraus.push_back(kron(E, one));
  return {N.dim_in * d, N.dim_out * d, std::move(kraus)};
}

Channel encoding_channel(const CMatrix& V) {
  const int d = int(V.cols());
  if ((V.adjoint() * V - CMatrix::Identity(d, d)).norm() > 1e-8)
    throw std::invalid_argument("encoding_channel: V is not an isometry");
  return {d, int(V.rows()), {V}};
}

static void check_prob(double p, const char* name) {
  if (p < 0.0 || p > 1.0) {
    std::ostringstream os;
    os << name << ": parameter out of range [0,1]";
    throw std::invalid_argument(os.str());
  }
}

Channel standard_channel(const std::string& name, const std::vector<double>& params,
                         int d) {
  auto param = [&](size_t i) {
    if (params.size() <= i)
      throw std::invalid_argument("standard_channel: missing parameter");
    return params[i];
  };
  if (name == "identity") return identity_channel(d);
  if (name == "depolarizing") {
    const double p = param(0);
    check_prob(p, "depolarizing");
    // Choi of rho -> (1-p) rho + p Tr(rho) 1/d
    CMatrix J = (1.0 - p) * choi(identity_channel(d));
    J += (p / d) * CMatrix::Identity(Eigen::Index(d) * d, Eigen::Index(d) * d);
    return kraus_from_choi(J, d, d);
  }
  if (name == "dephasing" || name == "bit_flip") {
    if (d != 2) throw std::invalid_argument("standard_channel: qubit model needs d=2");
    const double p = param(0);
    check_prob(p, name.c_str());
    CMatrix P(2, 2);
    if (name == "dephasing")
      P << 1, 0, 0, -1;
    else
      P << 0, 1, 1, 0;
    return make_channel({std::sqrt(1.0 - p) * CMatrix::Identity(2, 2), std::sqrt(p) * P});
  }
  if (name == "amplitude_damping") {
    if (d != 2) throw std::invalid_argument("standard_channel: qubit model needs d=2");
    const double g = param(0);
    check_prob(g, "amplitude_damping");
    CMatrix E0 = CMatrix::Zero(2, 2), E1 = CMatrix::Zero(2, 2);
    E0(0, 0) = 1.0;
    E0(1, 1) = std::sqrt(1.0 - g);
    E1(0, 1) = std::sqrt(g);
    std::vector<CMatrix> kraus{E0};
    if (g > 0.0) kraus.push_back(E1);
    return make_channel(std::move(kraus));
  }
  throw std::invalid_argument("standard_channel: unknown channel name '" + name + "'");
}

}  // namespace aqc

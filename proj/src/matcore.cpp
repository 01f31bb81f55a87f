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

#include "aqc/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <stdexcept>

namespace aqc {

bool all_finite(const CMatrix& M) { return M.allFinite(); }

static void require_finite(const CMatrix& M) {
  if (!M.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
}

double operator_norm(const CMatrix& M) {
  if (M.size() == 0) throw std::invalid_argument("operator_norm: empty matrix");
  require_finite(M);
  return M.jacobiSvd().singularValues()(0);
}

double trace_norm(const CMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("trace_norm: matrix not square");
  require_finite(M);
  return M.jacobiSvd().singularValues().sum();
}

CMatrix kron(const CMatrix& A, const CMatrix& B) {
  CMatrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

CMatrix partial_trace(const CMatrix& M, int dA, int dB, TraceOut which) {
  if (M.rows() != M.cols() || M.rows() != Eigen::Index(dA) * dB)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  if (which == TraceOut::Second) {
    CMatrix out = CMatrix::Zero(dA, dA);
    for (int i = 0; i < dA; ++i)
      for (int j = 0; j < dA; ++j)
        for (int b = 0; b < dB; ++b) out(i, j) += M(i * dB + b, j * dB + b);
    return out;
  }
  CMatrix out = CMatrix::Zero(dB, dB);
  for (int a = 0; a < dA; ++a)
    for (int i = 0; i < dB; ++i)
      for (int j = 0; j < dB; ++j) out(i, j) += M(a * dB + i, a * dB + j);
  return out;
}

std::vector<CVector> nullspace(const CMatrix& L, double tol) {
  if (tol <= 0) throw std::invalid_argument("nullspace: tol must be positive");
  Eigen::JacobiSVD<CMatrix> svd(L, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<CVector> basis;
  for (Eigen::Index k = 0; k < L.cols(); ++k) {
    const double s = k < sv.size() ? sv(k) : 0.0;
    if (s <= tol * scale) basis.push_back(svd.matrixV().col(k));
  }
  return basis;
}

HermitianEig eig_hermitian(const CMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("eig_hermitian: not square");
  require_finite(M);
  const double scale = M.norm();
  if ((M - M.adjoint()).norm() > 1e-10 * std::max(scale, 1.0))
    throw std::invalid_argument("eig_hermitian: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(M);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

Complex hs_inner(const CMatrix& A, const CMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("hs_inner: dimension mismatch");
  return (A.adjoint() * B).trace();
}

CVector vec(const CMatrix& M) {
  return Eigen::Map<const CVector>(M.data(), M.size());
}

CMatrix unvec(const CVector& v, int rows, int cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

CMatrix orthonormalize_columns(const CMatrix& M, double tol) {
  if (M.cols() == 0) return M;
  Eigen::JacobiSVD<CMatrix> svd(M, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double scale = sv(0);
  Eigen::Index keep = 0;
  while (keep < sv.size() && sv(keep) > tol * scale) ++keep;
  return svd.matrixU().leftCols(keep);
}

std::vector<CMatrix> orthonormalize_ops(const std::vector<CMatrix>& ops, double tol) {
  if (ops.empty()) return {};
  const int r = int(ops[0].rows()), c = int(ops[0].cols());
  CMatrix stack(Eigen::Index(r) * c, ops.size());
  for (size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].rows() != r || ops[k].cols() != c)
      throw std::invalid_argument("orthonormalize_ops: mixed dimensions");
    stack.col(k) = vec(ops[k]);
  }
  CMatrix Q = orthonormalize_columns(stack, tol);
  std::vector<CMatrix> out;
  for (Eigen::Index k = 0; k < Q.cols(); ++k) out.push_back(unvec(Q.col(k), r, c));
  return out;
}

CMatrix random_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix M(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) M(i, j) = Complex(n(rng), n(rng));
  return M;
}

CMatrix random_hermitian(int d, Rng& rng) {
  CMatrix G = random_gaussian(d, d, rng);
  return 0.5 * (G + G.adjoint());
}

CMatrix haar_unitary(int d, Rng& rng) {
  CMatrix G = random_gaussian(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(G);
  CMatrix Q = qr.householderQ() * CMatrix::Identity(d, d);
  CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    Complex r = R(k, k);
    Q.col(k) *= (std::abs(r) > 0 ? r / std::abs(r) : Complex(1.0, 0.0));
  }
  return Q;
}

CMatrix haar_isometry(int d_out, int d_in, Rng& rng) {
  if (d_out < d_in) throw std::invalid_argument("haar_isometry: d_out < d_in");
  return haar_unitary(d_out, rng).leftCols(d_in);
}

CMatrix random_density(int d, Rng& rng) {
  CMatrix G = random_gaussian(d, d, rng);
  CMatrix rho = G * G.adjoint();
  return rho / rho.trace().real();
}

CVector random_pure_state(int d, Rng& rng) {
  CVector v = random_gaussian(d, 1, rng);
  return v / v.norm();
}

}  // namespace aqc

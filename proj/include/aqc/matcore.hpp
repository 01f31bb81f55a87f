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

#ifndef AQC_MATCORE_HPP
#define AQC_MATCORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace aqc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Result of a Hermitian eigendecomposition, eigenvalues ascending,
/// eigenvector columns orthonormal.
struct HermitianEig {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

/// Which tensor factor to trace out in partial_trace. The first factor is
/// the slow (left) Kronecker index throughout the library.
enum class TraceOut { First, Second };

bool all_finite(const CMatrix& M);

/// Largest singular value.
double operator_norm(const CMatrix& M);

/// Sum of singular values. Requires a square matrix.
double trace_norm(const CMatrix& M);

/// Kronecker product, left factor is the slow index.
CMatrix kron(const CMatrix& A, const CMatrix& B);

/// Partial trace of a (dA*dB)x(dA*dB) matrix over the selected factor.
CMatrix partial_trace(const CMatrix& M, int dA, int dB, TraceOut which);

/// Orthonormal basis of the numerical nullspace of L: singular vectors with
/// singular value <= tol * ||L||.
std::vector<CVector> nullspace(const CMatrix& L, double tol = 1e-9);

/// Eigendecomposition of a Hermitian matrix. Throws std::invalid_argument
/// if ||M - M^dag|| exceeds 1e-10 * ||M||.
HermitianEig eig_hermitian(const CMatrix& M);

/// Hilbert-Schmidt inner product Tr(A^dag B).
Complex hs_inner(const CMatrix& A, const CMatrix& B);

// --- helpers shared across modules ---

/// Column-major vectorization, vec(A X B) = kron(B^T, A) vec(X).
CVector vec(const CMatrix& M);
CMatrix unvec(const CVector& v, int rows, int cols);

/// Orthonormalize the columns of M against each other, dropping columns whose
/// residual norm falls below tol (relative to the largest column norm).
CMatrix orthonormalize_columns(const CMatrix& M, double tol = 1e-9);

/// Hilbert-Schmidt orthonormalization of a list of equal-sized matrices;
/// drops linearly dependent entries.
std::vector<CMatrix> orthonormalize_ops(const std::vector<CMatrix>& ops,
                                        double tol = 1e-9);

CMatrix random_gaussian(int rows, int cols, Rng& rng);
CMatrix random_hermitian(int d, Rng& rng);

/// Haar-random unitary via QR of a complex Ginibre matrix with the phases of
/// the R diagonal absorbed into Q.
CMatrix haar_unitary(int d, Rng& rng);

/// Haar-random isometry: d_out x d_in block of a Haar unitary, d_out >= d_in.
CMatrix haar_isometry(int d_out, int d_in, Rng& rng);

/// Random density matrix (normalized G G^dag with Ginibre G).
CMatrix random_density(int d, Rng& rng);

/// Random pure state vector, uniform on the sphere.
CVector random_pure_state(int d, Rng& rng);

}  // namespace aqc

#endif  // AQC_MATCORE_HPP

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

#include "doctest.h"

using namespace aqc;

namespace {

CMatrix pauli_x() {
  CMatrix X(2, 2);
  X << 0, 1, 1, 0;
  return X;
}

CMatrix pauli_z() {
  CMatrix Z(2, 2);
  Z << 1, 0, 0, -1;
  return Z;
}

// Independent oracle: power iteration on M^dag M for the largest singular
// value.
double power_iteration_norm(const CMatrix& M, int iters = 2000) {
  CMatrix G = M.adjoint() * M;
  CVector v = CVector::Ones(G.rows());
  v /= v.norm();
  for (int k = 0; k < iters; ++k) {
    v = G * v;
    v /= v.norm();
  }
  return std::sqrt((v.adjoint() * G * v)(0).real());
}

}  // namespace

TEST_CASE("operator_norm") {
  CMatrix D = CMatrix::Zero(2, 2);
  D(0, 0) = 1;
  D(1, 1) = 2;
  CHECK(operator_norm(D) == doctest::Approx(2.0));

  Rng rng(7);
  CHECK(operator_norm(haar_unitary(4, rng)) == doctest::Approx(1.0).epsilon(1e-12));

  CMatrix M = random_gaussian(4, 4, rng);
  CHECK(operator_norm(M) == doctest::Approx(power_iteration_norm(M)).epsilon(1e-9));

  CMatrix bad = CMatrix::Constant(2, 2, std::nan(""));
  CHECK_THROWS_AS(operator_norm(bad), std::invalid_argument);
}

TEST_CASE("trace_norm") {
  CMatrix D = CMatrix::Zero(2, 2);
  D(0, 0) = 1;
  D(1, 1) = -2;
  CHECK(trace_norm(D) == doctest::Approx(3.0));

  Rng rng(11);
  CVector psi = random_pure_state(5, rng);
  CHECK(trace_norm(psi * psi.adjoint()) == doctest::Approx(1.0).epsilon(1e-12));

  CMatrix M = random_gaussian(4, 4, rng);
  double svd_sum = M.jacobiSvd().singularValues().sum();
  CHECK(trace_norm(M) == doctest::Approx(svd_sum).epsilon(1e-9));

  CHECK_THROWS_AS(trace_norm(CMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("kron") {
  CHECK((kron(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)) -
         CMatrix::Identity(6, 6))
            .norm() == doctest::Approx(0.0));

  CMatrix P00 = CMatrix::Zero(2, 2);
  P00(0, 0) = 1;
  CMatrix K = kron(pauli_x(), P00);
  CHECK(K(0, 2) == Complex(1, 0));
  CHECK(K(2, 0) == Complex(1, 0));
  CHECK(K.cwiseAbs().sum() == doctest::Approx(2.0));

  Rng rng(3);
  CMatrix A = random_gaussian(2, 2, rng), B = random_gaussian(2, 2, rng);
  CMatrix C = random_gaussian(2, 2, rng), D = random_gaussian(2, 2, rng);
  CHECK((kron(A, B) * kron(C, D) - kron(CMatrix(A * C), CMatrix(B * D))).norm() <
        1e-12);
}

TEST_CASE("partial_trace") {
  Rng rng(5);
  CMatrix rho = random_density(3, rng), sigma = random_density(2, rng);
  CMatrix M = kron(rho, sigma);
  CHECK((partial_trace(M, 3, 2, TraceOut::Second) - rho).norm() < 1e-12);
  CHECK((partial_trace(M, 3, 2, TraceOut::First) - sigma).norm() < 1e-12);

  CMatrix I6 = CMatrix::Identity(6, 6);
  CHECK((partial_trace(I6, 3, 2, TraceOut::First) - 3.0 * CMatrix::Identity(2, 2))
            .norm() < 1e-14);

  // Bell-state projector reduces to the maximally mixed state.
  CVector bell = CVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  CMatrix red = partial_trace(bell * bell.adjoint(), 2, 2, TraceOut::Second);
  CHECK((red - 0.5 * CMatrix::Identity(2, 2)).norm() < 1e-14);

  // Trace preservation on random input.
  CMatrix R = random_gaussian(6, 6, rng);
  CHECK(std::abs(partial_trace(R, 2, 3, TraceOut::First).trace() - R.trace()) <
        1e-12);
  CHECK_THROWS_AS(partial_trace(R, 2, 2, TraceOut::First), std::invalid_argument);
}

TEST_CASE("nullspace") {
  CHECK(nullspace(CMatrix::Zero(3, 3)).size() == 3);
  Rng rng(9);
  CHECK(nullspace(haar_unitary(4, rng)).empty());

  CMatrix D = CMatrix::Zero(2, 2);
  D(0, 0) = 1;
  auto basis = nullspace(D);
  REQUIRE(basis.size() == 1);
  CHECK(std::abs(basis[0](1)) == doctest::Approx(1.0));

  // Returned vectors satisfy ||Lx|| <= 10 tol ||L||.
  CMatrix L = random_gaussian(5, 5, rng);
  L.col(4) = L.col(0) + L.col(1);  // force rank deficiency
  for (const auto& x : nullspace(L, 1e-9))
    CHECK((L * x).norm() <= 10 * 1e-9 * operator_norm(L));
}

TEST_CASE("eig_hermitian") {
  CMatrix D = CMatrix::Zero(2, 2);
  D(0, 0) = 3;
  D(1, 1) = 1;
  auto eig = eig_hermitian(D);
  CHECK(eig.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(eig.eigenvalues(1) == doctest::Approx(3.0));

  auto ex = eig_hermitian(pauli_x());
  CHECK(ex.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(ex.eigenvalues(1) == doctest::Approx(1.0));
  CHECK(std::abs(std::abs(ex.eigenvectors(0, 0)) - 1.0 / std::sqrt(2.0)) < 1e-12);

  Rng rng(21);
  CMatrix H = random_hermitian(8, rng);
  auto eh = eig_hermitian(H);
  CMatrix rec = eh.eigenvectors *
                eh.eigenvalues.cast<Complex>().asDiagonal() *
                eh.eigenvectors.adjoint();
  CHECK((H - rec).norm() <= 1e-10 * H.norm());
  CHECK((eh.eigenvectors.adjoint() * eh.eigenvectors - CMatrix::Identity(8, 8))
            .norm() < 1e-12);

  CHECK_THROWS_AS(eig_hermitian(CMatrix(random_gaussian(3, 3, rng))),
                  std::invalid_argument);
}

TEST_CASE("hs_inner") {
  CHECK(hs_inner(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)) ==
        Complex(2, 0));
  CHECK(std::abs(hs_inner(pauli_x(), pauli_z())) < 1e-15);
  Rng rng(2);
  CMatrix A = random_gaussian(3, 3, rng), B = random_gaussian(3, 3, rng);
  CHECK(std::abs(hs_inner(A, B) - std::conj(hs_inner(B, A))) < 1e-13);
  CHECK_THROWS_AS(hs_inner(A, CMatrix::Zero(2, 2)), std::invalid_argument);
}

TEST_CASE("norm inequalities and unitary invariance") {
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    CMatrix A = random_gaussian(4, 4, rng);
    const double op = operator_norm(A), tr = trace_norm(A);
    CHECK(op <= tr + 1e-12);
    CHECK(tr <= 4 * op + 1e-12);
    CMatrix U = haar_unitary(4, rng), V = haar_unitary(4, rng);
    CHECK(operator_norm(U * A * V) == doctest::Approx(op).epsilon(1e-10));
    CHECK(trace_norm(U * A * V) == doctest::Approx(tr).epsilon(1e-10));
  }
}

TEST_CASE("orthonormalize_ops pairwise inner products") {
  Rng rng(14);
  std::vector<CMatrix> ops;
  for (int k = 0; k < 6; ++k) ops.push_back(random_gaussian(3, 3, rng));
  ops.push_back(ops[0] + ops[1]);  // dependent
  auto basis = orthonormalize_ops(ops);
  CHECK(basis.size() == 6);
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b) {
      const Complex g = hs_inner(basis[a], basis[b]);
      CHECK(std::abs(g - (a == b ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("haar_unitary is unitary and seeded") {
  Rng rng1(42), rng2(42);
  CMatrix U1 = haar_unitary(5, rng1), U2 = haar_unitary(5, rng2);
  CHECK((U1 - U2).norm() == 0.0);
  CHECK((U1.adjoint() * U1 - CMatrix::Identity(5, 5)).norm() < 1e-13);
}

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

#include "aqc/correctability.hpp"

#include "doctest.h"

using namespace aqc;

namespace {

CMatrix pauli_x() {
  CMatrix X(2, 2);
  X << 0, 1, 1, 0;
  return X;
}

// Repetition encoding |0> -> |000>, |1> -> |111>.
SubspaceCode repetition_code() {
  CMatrix V = CMatrix::Zero(8, 2);
  V(0, 0) = 1.0;
  V(7, 1) = 1.0;
  return {V, 2};
}

// Single bit flip on each qubit with probability p, independent errors
// truncated to weight <= 1 and renormalized.
Channel bitflip3(double p) {
  const CMatrix X = pauli_x(), I = CMatrix::Identity(2, 2);
  std::vector<CMatrix> flips = {kron(kron(I, I), I), kron(kron(X, I), I),
                                kron(kron(I, X), I), kron(kron(I, I), X)};
  const double q0 = (1 - p) * (1 - p) * (1 - p);
  const double q1 = p * (1 - p) * (1 - p);
  const double norm = q0 + 3 * q1;
  std::vector<CMatrix> kraus = {std::sqrt(q0 / norm) * flips[0],
                                std::sqrt(q1 / norm) * flips[1],
                                std::sqrt(q1 / norm) * flips[2],
                                std::sqrt(q1 / norm) * flips[3]};
  return make_channel(kraus);
}

}  // namespace

TEST_CASE("exact_check") {
  // Dephasing commutes with the diagonal algebra: E_i^dag E_j diagonal.
  Channel deph = standard_channel("dephasing", {0.3}, 2);
  ExactCheckResult r = exact_check(deph, diagonal_algebra(2));
  CHECK(r.exact);
  CHECK(r.kl_defect <= 1e-12);

  // ...but not with the full algebra.
  CHECK_FALSE(exact_check(deph, full_algebra(2)).exact);

  // Every channel preserves the trivial algebra exactly.
  Rng rng(1);
  Channel N = random_channel(3, 3, 3, rng);
  CHECK(exact_check(N, trivial_algebra(3)).exact);

  // Unitary channels preserve everything.
  Channel U = make_channel({haar_unitary(3, rng)});
  CHECK(exact_check(U, full_algebra(3)).exact);
}

TEST_CASE("largest_correctable") {
  // Unitary channel: everything is correctable.
  Rng rng(2);
  Channel U = make_channel({haar_unitary(3, rng)});
  AlgebraStructure a = largest_correctable(U);
  REQUIRE(a.blocks.size() == 1);
  CHECK(a.blocks[0].dA == 3);
  CHECK(a.blocks[0].dB == 1);

  // Dephasing: products E_i^dag E_j span the diagonal algebra, whose
  // commutant is again the diagonal algebra.
  Channel deph = standard_channel("dephasing", {0.3}, 2);
  AlgebraStructure d = largest_correctable(deph);
  CHECK(d.blocks.size() == 2);
  CHECK(exact_check(deph, d).exact);

  // Depolarizing noise with 0 < p < 1: only the trivial algebra survives.
  Channel dep = standard_channel("depolarizing", {0.5}, 2);
  AlgebraStructure t = largest_correctable(dep);
  REQUIRE(t.blocks.size() == 1);
  CHECK(t.blocks[0].dA == 1);
  CHECK(t.blocks[0].dB == 2);

  // Maximality: the result is exactly preserved, and adding any off-block
  // basis element of the full algebra breaks exactness (spot check).
  CHECK(exact_check(deph, largest_correctable(deph)).exact);
}

TEST_CASE("delta_estimate vanishes exactly when correctable") {
  Channel deph = standard_channel("dephasing", {0.4}, 2);
  CHECK(delta_estimate(deph, diagonal_algebra(2)) <= 1e-5);

  Rng rng(3);
  Channel U = make_channel({haar_unitary(2, rng)});
  CHECK(delta_estimate(U, full_algebra(2)) <= 1e-5);

  Channel N = random_channel(2, 2, 2, rng);
  CHECK(delta_estimate(N, trivial_algebra(2)) <= 1e-5);

  // Depolarizing against the full algebra: complement carries information.
  Channel dep = standard_channel("depolarizing", {0.5}, 2);
  CHECK(delta_estimate(dep, full_algebra(2)) > 0.1);
}

TEST_CASE("optimal_error vanishes for exactly correctable pairs") {
  Channel deph = standard_channel("dephasing", {0.4}, 2);
  OptimalErrorResult r = optimal_error(deph, diagonal_algebra(2));
  CHECK(r.error <= 1e-5);
  // The recovery certificate can be re-checked directly.
  Channel P = projector_channel(diagonal_algebra(2));
  CHECK(diamond_distance(compose(r.recovery, deph), P) <= 1e-4);

  Channel dep = standard_channel("depolarizing", {0.7}, 2);
  CHECK(optimal_error(dep, trivial_algebra(2)).error <= 1e-5);
}

TEST_CASE("optimal_error is positive and monotone for depolarizing noise") {
  double last = 0.0;
  for (double p : {0.2, 0.5, 0.9}) {
    Channel dep = standard_channel("depolarizing", {p}, 2);
    OptimalErrorResult r = optimal_error(dep, full_algebra(2));
    CHECK(r.error > last - 1e-6);
    // Any recovery upper-bounds the optimum: doing nothing gives
    // ||Dep_p - id||_diamond = 3p/2.
    CHECK(r.error <= 1.5 * p + 1e-5);
    // The returned recovery achieves a distance close to the reported value.
    Channel P = projector_channel(full_algebra(2));
    double achieved = diamond_distance(compose(r.recovery, dep), P);
    CHECK(achieved >= r.error - 1e-5);
    CHECK(achieved <= r.error + 0.05);
    last = r.error;
  }
}

TEST_CASE("verify_theorem1 bounds hold on random instances") {
  Rng rng(5);
  for (int t = 0; t < 3; ++t) {
    Channel N = random_channel(2, 2, 2, rng);
    AlgebraStructure alg = random_catalog_algebra(2, rng);
    CorrectabilityReport rep = verify_theorem1(N, alg);
    CHECK(rep.bounds_ok);
    CHECK(0.25 * rep.delta * rep.delta <= rep.optimal_error + rep.tol);
    CHECK(rep.optimal_error <= 2 * std::sqrt(rep.delta) + rep.tol);
  }
}

TEST_CASE("subspace repetition code corrects single bit flips") {
  SubspaceCode code = repetition_code();
  Channel N = bitflip3(0.1);
  CHECK(subspace_estimate(code, N) <= 1e-5);

  Channel E = encoding_channel(code.V);
  ExactCheckResult ex = exact_check(compose(N, E), full_algebra(2));
  CHECK(ex.exact);
  CHECK(ex.kl_defect <= 1e-10);
  CHECK(optimal_error(compose(N, E), full_algebra(2)).error <= 1e-4);
}

TEST_CASE("subspace_estimate agrees with the algebra route") {
  Rng rng(7);
  // Random isometric encoding of a qubit into dimension 4, mild noise.
  CMatrix V = haar_isometry(4, 2, rng);
  SubspaceCode code{V, 2};
  Channel N = random_channel(4, 4, 2, rng);
  Channel NE = compose(N, encoding_channel(V));
  const double direct = subspace_estimate(code, N);
  const double via_algebra = delta_estimate(NE, full_algebra(2));
  CHECK(direct == doctest::Approx(via_algebra).epsilon(2e-4));
}

TEST_CASE("commutator_condition") {
  // Exactly correctable: every sampled commutator vanishes.
  Channel deph = standard_channel("dephasing", {0.3}, 2);
  CHECK(commutator_condition(deph, diagonal_algebra(2), 100, 1) <= 1e-8);

  // General direction of the bound: sampled sup <= 2 delta.
  Rng rng(9);
  Channel N = random_channel(2, 2, 2, rng);
  AlgebraStructure alg = diagonal_algebra(2);
  const double delta = delta_estimate(N, alg);
  CHECK(commutator_condition(N, alg, 200, 2) <= 2 * delta + 1e-6);
}

TEST_CASE("product_degradation_demo") {
  Rng rng(11);
  Channel N = random_channel(2, 2, 2, rng);
  Isometry V = stinespring(N);
  CMatrix B = random_gaussian(V.dim_env * 2, V.dim_env * 2, rng);
  B /= operator_norm(B);
  std::vector<CMatrix> ops;
  for (int k = 0; k < 3; ++k) {
    CMatrix U = haar_unitary(2, rng);
    ops.push_back(U);
  }
  ProductDegradation pd = product_degradation_demo(ops, N, B);
  REQUIRE(pd.per_factor.size() == 3);
  double sum = 0.0;
  for (double v : pd.per_factor) sum += v;
  CHECK(pd.product <= sum + 1e-9);
}

TEST_CASE("instance generators") {
  Rng rng(13);
  Channel N = random_channel(3, 2, 4, rng);
  CHECK(N.dim_in == 3);
  CHECK(N.dim_out == 2);
  CHECK(N.kraus.size() <= 4);

  for (int t = 0; t < 5; ++t) {
    AlgebraStructure alg = random_catalog_algebra(4, rng);
    CHECK(is_unital(alg));
    int total = 0;
    for (const auto& b : alg.blocks) total += b.dA * b.dB;
    CHECK(total == 4);
  }
}

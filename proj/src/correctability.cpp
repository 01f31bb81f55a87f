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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aqc {

namespace {

std::vector<CMatrix> error_products(const Channel& N) {
  std::vector<CMatrix> out;
  for (const auto& Ei : N.kraus)
    for (const auto& Ej : N.kraus) out.push_back(Ei.adjoint() * Ej);
  return out;
}

// (Nhat^dag (x) id)(B) with the identity factor of dimension ref.
CMatrix extended_dual(const Channel& comp, int ref, const CMatrix& B) {
  const CMatrix one = CMatrix::Identity(ref, ref);
  CMatrix out = CMatrix::Zero(Eigen::Index(comp.dim_in) * ref,
                              Eigen::Index(comp.dim_in) * ref);
  for (const auto& F : comp.kraus) {
    CMatrix Fx = kron(F, one);
    out += Fx.adjoint() * B * Fx;
  }
  return out;
}

double commutator_norm(const CMatrix& A, const CMatrix& B) {
  return operator_norm(A * B - B * A);
}

}  // namespace

ExactCheckResult exact_check(const Channel& N, const AlgebraStructure& alg,
                             double tol) {
  if (alg.ambient_dim != N.dim_in)
    throw std::invalid_argument("exact_check: algebra/channel dimension mismatch");
  const auto products = error_products(N);
  double worst = 0.0;
  for (const auto& A : basis_of(alg).ops)
    for (const auto& G : products) worst = std::max(worst, commutator_norm(A, G));
  return {worst <= tol, worst};
}

AlgebraStructure largest_correctable(const Channel& N, double tol) {
  OperatorBasis basis = commutant_of_set(error_products(N), tol);
  return structure_from_basis(basis, tol);
}

double delta_estimate(const Channel& N, const AlgebraStructure& alg, double tol) {
  if (alg.ambient_dim != N.dim_in)
    throw std::invalid_argument("delta_estimate: algebra/channel dimension mismatch");
  if (!is_unital(alg))
    throw std::invalid_argument("delta_estimate: algebra must be unital");
  Channel comp = complement(N);
  Channel projected = compose(comp, commutant_projector_channel(alg));
  return diamond_distance(comp, projected, tol);
}

double subspace_estimate(const SubspaceCode& code, const Channel& N, double tol) {
  if (code.V.rows() != N.dim_in)
    throw std::invalid_argument("subspace_estimate: code/channel dimension mismatch");
  Channel encoded = compose(N, encoding_channel(code.V));
  Channel comp = complement(encoded);
  // Average environment state sigma = Nhat(1/d); entries carry the lambda_ij.
  CMatrix sigma = aqc::apply(comp, CMatrix::Identity(code.d, code.d) / double(code.d));
  // Constant channel rho -> Tr(rho) sigma.
  HermitianEig eig = eig_hermitian(sigma);
  std::vector<CMatrix> kraus;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lam = eig.eigenvalues(k);
    if (lam < 1e-14) continue;
    for (int b = 0; b < code.d; ++b) {
      CMatrix K = CMatrix::Zero(comp.dim_out, code.d);
      K.col(b) = std::sqrt(lam) * eig.eigenvectors.col(k);
      kraus.push_back(std::move(K));
    }
  }
  Channel forgetful = make_channel(std::move(kraus));
  return diamond_distance(comp, forgetful, tol);
}

OptimalErrorResult optimal_error(const Channel& N, const AlgebraStructure& alg,
                                 double tol) {
  if (alg.ambient_dim != N.dim_in)
    throw std::invalid_argument("optimal_error: algebra/channel dimension mismatch");
  const int n = N.dim_in;   // input and output of the corrected map
  const int m = N.dim_out;  // input of the recovery
  const CMatrix J_PA = choi(projector_channel(alg));
  const int q = n * n;      // dimension of the difference map's Choi space
  const int pR = m * n;     // dimension of the recovery's Choi space

  // N(|k><l|) for every input basis pair.
  std::vector<std::vector<CMatrix>> Nkl(n, std::vector<CMatrix>(n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      CMatrix e = CMatrix::Zero(n, n);
      e(k, l) = 1.0;
      Nkl[k][l] = aqc::apply(N, e);
    }

  // Blocks: 0 Z, 1 S1 = Z - 2(J(RoN) - J_PA), 2 S2 = lambda 1 - Tr_out Z,
  //         3 J_R, 4 lambda.  Minimizing lambda yields E_A(N).
  SDPProblem p;
  p.block_dims = {q, q, n, pR, 1};
  p.objective.push_back({4, -CMatrix::Identity(1, 1)});

  auto add_pair = [&](SDPConstraint&& re, SDPConstraint&& im, bool diagonal) {
    p.constraints.push_back(std::move(re));
    if (!diagonal) p.constraints.push_back(std::move(im));
  };

  // (a) S1 - Z + 2 J(RoN) = 2 J_PA over Hermitian q x q entries.
  //     J(RoN)_{(k,g),(l,d)} = sum_{ab} [N_kl]_{ab} [J_R]_{(a,g),(b,d)}.
  for (int r = 0; r < q; ++r)
    for (int c = r; c < q; ++c) {
      const int k = r / n, g = r % n;
      const int l = c / n, d = c % n;
      CMatrix G_R = CMatrix::Zero(pR, pR);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          G_R(Eigen::Index(b) * n + d, Eigen::Index(a) * n + g) = 2.0 * Nkl[k][l](a, b);
      CMatrix E = CMatrix::Zero(q, q);
      E(c, r) = 1.0;  // Tr(E M) = M(r,c)
      const Complex rhs = 2.0 * J_PA(r, c);
      SDPConstraint re, im;
      re.terms.push_back({1, 0.5 * (E + E.adjoint())});
      re.terms.push_back({0, -0.5 * (E + E.adjoint())});
      re.terms.push_back({3, 0.5 * (G_R + G_R.adjoint())});
      re.rhs = rhs.real();
      im.terms.push_back({1, Complex(0, 0.5) * (E - E.adjoint())});
      im.terms.push_back({0, Complex(0, -0.5) * (E - E.adjoint())});
      im.terms.push_back({3, Complex(0, 0.5) * (G_R - G_R.adjoint())});
      im.rhs = rhs.imag();
      add_pair(std::move(re), std::move(im), r == c);
    }

  // (b) S2 + Tr_out Z - lambda 1 = 0 over Hermitian n x n entries.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      CMatrix E = CMatrix::Zero(n, n);
      E(j, i) = 1.0;
      CMatrix G_Z = CMatrix::Zero(q, q);
      for (int g = 0; g < n; ++g) G_Z(Eigen::Index(j) * n + g, Eigen::Index(i) * n + g) = 1.0;
      SDPConstraint re, im;
      re.terms.push_back({2, 0.5 * (E + E.adjoint())});
      re.terms.push_back({0, 0.5 * (G_Z + G_Z.adjoint())});
      if (i == j) re.terms.push_back({4, -CMatrix::Identity(1, 1)});
      re.rhs = 0.0;
      im.terms.push_back({2, Complex(0, 0.5) * (E - E.adjoint())});
      im.terms.push_back({0, Complex(0, 0.5) * (G_Z - G_Z.adjoint())});
      im.rhs = 0.0;
      add_pair(std::move(re), std::move(im), i == j);
    }

  // (c) Tr_out J_R = 1 over Hermitian m x m entries (R trace preserving).
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      CMatrix G = CMatrix::Zero(pR, pR);
      for (int g = 0; g < n; ++g) G(Eigen::Index(b) * n + g, Eigen::Index(a) * n + g) = 1.0;
      SDPConstraint re, im;
      re.terms.push_back({3, 0.5 * (G + G.adjoint())});
      re.rhs = (a == b) ? 1.0 : 0.0;
      im.terms.push_back({3, Complex(0, 0.5) * (G - G.adjoint())});
      im.rhs = 0.0;
      add_pair(std::move(re), std::move(im), a == b);
    }

  SDPOptions opts;
  opts.tol = std::min(tol, 1e-7);
  SDPSolution sol = sdp_solve(p, opts);
  if (sol.status != SDPStatus::Optimal)
    throw std::runtime_error("optimal_error: SDP did not converge");
  OptimalErrorResult out;
  out.error = std::max(0.0, -0.5 * (sol.primal_value + sol.dual_value));
  // Clean the recovery's Choi matrix before extracting Kraus operators.
  CMatrix JR = 0.5 * (sol.X[3] + sol.X[3].adjoint());
  CMatrix tr_out = partial_trace(JR, m, n, TraceOut::Second);
  HermitianEig te = eig_hermitian(0.5 * (tr_out + tr_out.adjoint()));
  // Normalize so Tr_out J_R = 1 exactly: conjugate by tr_out^{-1/2} (x) 1.
  RVector inv_sqrt(te.eigenvalues.size());
  for (Eigen::Index i = 0; i < te.eigenvalues.size(); ++i)
    inv_sqrt(i) = 1.0 / std::sqrt(std::max(te.eigenvalues(i), 1e-14));
  CMatrix fix = te.eigenvectors * inv_sqrt.asDiagonal() * te.eigenvectors.adjoint();
  CMatrix fixed = kron(fix, CMatrix::Identity(n, n));
  JR = fixed * JR * fixed.adjoint();
  // Clip tiny negative eigenvalues left by the interior-point iterate.
  HermitianEig je = eig_hermitian(0.5 * (JR + JR.adjoint()));
  CMatrix Jpsd = CMatrix::Zero(pR, pR);
  for (Eigen::Index i = 0; i < je.eigenvalues.size(); ++i)
    if (je.eigenvalues(i) > 0)
      Jpsd += je.eigenvalues(i) * je.eigenvectors.col(i) * je.eigenvectors.col(i).adjoint();
  CMatrix tr2 = partial_trace(Jpsd, m, n, TraceOut::Second);
  HermitianEig t2 = eig_hermitian(0.5 * (tr2 + tr2.adjoint()));
  RVector inv2(t2.eigenvalues.size());
  for (Eigen::Index i = 0; i < t2.eigenvalues.size(); ++i)
    inv2(i) = 1.0 / std::sqrt(std::max(t2.eigenvalues(i), 1e-14));
  CMatrix fix2 = kron(CMatrix(t2.eigenvectors * inv2.asDiagonal() * t2.eigenvectors.adjoint()),
                      CMatrix::Identity(n, n));
  Jpsd = fix2 * Jpsd * fix2.adjoint();
  out.recovery = kraus_from_choi(Jpsd, m, n);
  return out;
}

CorrectabilityReport verify_theorem1(const Channel& N, const AlgebraStructure& alg,
                                     double tol) {
  CorrectabilityReport rep;
  rep.tol = tol;
  rep.exact_tol = 1e-8;
  ExactCheckResult ec = exact_check(N, alg, rep.exact_tol);
  rep.exact = ec.exact;
  rep.kl_defect = ec.kl_defect;
  rep.delta = delta_estimate(N, alg);
  OptimalErrorResult oe = optimal_error(N, alg);
  rep.optimal_error = oe.error;
  rep.recovery = oe.recovery;
  const double lower = 0.25 * rep.delta * rep.delta;
  const double upper = 2.0 * std::sqrt(std::max(rep.delta, 0.0));
  rep.bounds_ok = (lower <= rep.optimal_error + tol) && (rep.optimal_error <= upper + tol);
  return rep;
}

double commutator_condition(const Channel& N, const AlgebraStructure& alg,
                            int samples, std::uint64_t seed) {
  if (alg.ambient_dim != N.dim_in)
    throw std::invalid_argument("commutator_condition: dimension mismatch");
  Channel comp = complement(N);
  const int ref = N.dim_in;
  const int ext = comp.dim_out * ref;
  Rng rng(seed);
  const CMatrix one = CMatrix::Identity(ref, ref);

  auto normalized = [&](const CMatrix& G) {
    const double nrm = operator_norm(G);
    return nrm > 1.0 ? CMatrix(G / nrm) : G;
  };
  auto value = [&](const CMatrix& A, const CMatrix& B) {
    return commutator_norm(kron(A, one), extended_dual(comp, ref, B));
  };

  double best = 0.0;
  CMatrix bestA = CMatrix::Identity(ref, ref), bestB = CMatrix::Zero(ext, ext);
  for (int s = 0; s < samples; ++s) {
    CMatrix A = random_algebra_unitary(alg, rng);
    CMatrix B = normalized(random_gaussian(ext, ext, rng));
    const double v = value(A, B);
    if (v >= best) {
      best = v;
      bestA = A;
      bestB = B;
    }
  }
  // Local ascent around the best sample.
  double step = 0.2;
  for (int round = 0; round < 40; ++round) {
    bool improved = false;
    for (int t = 0; t < 10; ++t) {
      Rng sub(rng());
      CMatrix A = bestA;
      if ((t & 1) == 0) {
        // Drift A inside the algebra's unitary group.
        CMatrix drift = random_algebra_unitary(alg, sub);
        A = bestA * (CMatrix::Identity(ref, ref) * (1.0 - step) + step * drift);
        // Re-unitarize blockwise by projecting back through the twirl-free
        // polar decomposition inside the algebra.
        Eigen::JacobiSVD<CMatrix> svd(project_algebra(alg, A),
                                      Eigen::ComputeFullU | Eigen::ComputeFullV);
        A = project_algebra(alg, svd.matrixU() * svd.matrixV().adjoint());
        const double an = operator_norm(A);
        if (an > 1.0) A /= an;
      }
      CMatrix B = normalized(bestB + step * random_gaussian(ext, ext, sub));
      const double v = value(A, B);
      if (v > best) {
        best = v;
        bestA = A;
        bestB = B;
        improved = true;
      }
    }
    if (!improved) {
      step *= 0.5;
      if (step < 1e-3) break;
    }
  }
  return best;
}

ProductDegradation product_degradation_demo(const std::vector<CMatrix>& ops,
                                            const Channel& N, const CMatrix& B) {
  if (ops.empty())
    throw std::invalid_argument("product_degradation_demo: no operators");
  Channel comp = complement(N);
  const int ref = N.dim_in;
  const CMatrix one = CMatrix::Identity(ref, ref);
  CMatrix T = extended_dual(comp, ref, B);
  ProductDegradation out;
  CMatrix prod = CMatrix::Identity(ref, ref);
  double sum = 0.0;
  for (const auto& A : ops) {
    if (operator_norm(A) > 1.0 + 1e-9)
      throw std::invalid_argument("product_degradation_demo: factor norm exceeds 1");
    out.per_factor.push_back(commutator_norm(kron(A, one), T));
    sum += out.per_factor.back();
    prod = prod * A;
  }
  out.product = commutator_norm(kron(prod, one), T);
  if (out.product > sum + 1e-9)
    throw std::runtime_error("product_degradation_demo: subadditivity violated");
  return out;
}

Channel random_channel(int dim_in, int dim_out, int kraus_rank, Rng& rng) {
  CMatrix V = haar_isometry(dim_out * kraus_rank, dim_in, rng);
  std::vector<CMatrix> kraus(kraus_rank);
  for (int i = 0; i < kraus_rank; ++i) {
    kraus[i] = CMatrix(dim_out, dim_in);
    for (int a = 0; a < dim_out; ++a)
      kraus[i].row(a) = V.row(Eigen::Index(a) * kraus_rank + i);
  }
  return make_channel(std::move(kraus));
}

AlgebraStructure random_catalog_algebra(int dim, Rng& rng) {
  // Random block signature (dA_i, dB_i) with sum dA_i * dB_i = dim,
  // conjugated by a Haar unitary.
  std::vector<std::pair<int, int>> sig;
  int rem = dim;
  while (rem > 0) {
    std::uniform_int_distribution<int> pick(1, rem);
    int prod = pick(rng);  // dA * dB for this block
    std::vector<std::pair<int, int>> fact;
    for (int a = 1; a <= prod; ++a)
      if (prod % a == 0) fact.push_back({a, prod / a});
    sig.push_back(fact[std::uniform_int_distribution<size_t>(0, fact.size() - 1)(rng)]);
    rem -= prod;
  }
  CMatrix U = haar_unitary(dim, rng);
  AlgebraStructure alg{dim, {}};
  int col = 0;
  for (auto [dA, dB] : sig) {
    alg.blocks.push_back({U.middleCols(col, dA * dB), dA, dB});
    col += dA * dB;
  }
  return alg;
}

}  // namespace aqc

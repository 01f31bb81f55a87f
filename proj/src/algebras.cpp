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

#include "aqc/algebras.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aqc {

AlgebraStructure full_algebra(int d) {
  return {d, {{CMatrix::Identity(d, d), d, 1}}};
}

AlgebraStructure trivial_algebra(int d) {
  return {d, {{CMatrix::Identity(d, d), 1, d}}};
}

AlgebraStructure diagonal_algebra(int d) {
  AlgebraStructure alg{d, {}};
  for (int k = 0; k < d; ++k) {
    CMatrix iso = CMatrix::Zero(d, 1);
    iso(k, 0) = 1.0;
    alg.blocks.push_back({iso, 1, 1});
  }
  return alg;
}

CMatrix algebra_unit(const AlgebraStructure& alg) {
  CMatrix u = CMatrix::Zero(alg.ambient_dim, alg.ambient_dim);
  for (const auto& blk : alg.blocks) u += blk.iso * blk.iso.adjoint();
  return u;
}

bool is_unital(const AlgebraStructure& alg) {
  int total = 0;
  for (const auto& blk : alg.blocks) total += blk.dA * blk.dB;
  return total == alg.ambient_dim;
}

CMatrix element_from_blocks(const AlgebraStructure& alg,
                            const std::vector<CMatrix>& parts) {
  if (parts.size() != alg.blocks.size())
    throw std::invalid_argument("element_from_blocks: part count mismatch");
  CMatrix out = CMatrix::Zero(alg.ambient_dim, alg.ambient_dim);
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& blk = alg.blocks[i];
    if (parts[i].rows() != blk.dA || parts[i].cols() != blk.dA)
      throw std::invalid_argument("element_from_blocks: part dimension mismatch");
    out += blk.iso * kron(parts[i], CMatrix::Identity(blk.dB, blk.dB)) * blk.iso.adjoint();
  }
  return out;
}

OperatorBasis basis_of(const AlgebraStructure& alg) {
  OperatorBasis basis{alg.ambient_dim, {}};
  for (const auto& blk : alg.blocks) {
    const double norm = 1.0 / std::sqrt(double(blk.dB));
    for (int a = 0; a < blk.dA; ++a)
      for (int b = 0; b < blk.dA; ++b) {
        CMatrix e = CMatrix::Zero(blk.dA, blk.dA);
        e(a, b) = norm;
        basis.ops.push_back(blk.iso * kron(e, CMatrix::Identity(blk.dB, blk.dB)) *
                            blk.iso.adjoint());
      }
  }
  return basis;
}

CMatrix project_algebra(const AlgebraStructure& alg, const CMatrix& X) {
  if (X.rows() != alg.ambient_dim || X.cols() != alg.ambient_dim)
    throw std::invalid_argument("project_algebra: dimension mismatch");
  CMatrix out = CMatrix::Zero(alg.ambient_dim, alg.ambient_dim);
  for (const auto& blk : alg.blocks) {
    CMatrix Y = blk.iso.adjoint() * X * blk.iso;
    CMatrix A = partial_trace(Y, blk.dA, blk.dB, TraceOut::Second) / double(blk.dB);
    out += blk.iso * kron(A, CMatrix::Identity(blk.dB, blk.dB)) * blk.iso.adjoint();
  }
  return out;
}

CMatrix project_commutant(const AlgebraStructure& alg, const CMatrix& X) {
  if (X.rows() != alg.ambient_dim || X.cols() != alg.ambient_dim)
    throw std::invalid_argument("project_commutant: dimension mismatch");
  CMatrix out = CMatrix::Zero(alg.ambient_dim, alg.ambient_dim);
  for (const auto& blk : alg.blocks) {
    CMatrix Y = blk.iso.adjoint() * X * blk.iso;
    CMatrix B = partial_trace(Y, blk.dA, blk.dB, TraceOut::First) / double(blk.dA);
    out += blk.iso * kron(CMatrix::Identity(blk.dA, blk.dA), B) * blk.iso.adjoint();
  }
  return out;
}

AlgebraStructure commutant_structure(const AlgebraStructure& alg) {
  AlgebraStructure out{alg.ambient_dim, {}};
  for (const auto& blk : alg.blocks) {
    // reorder columns so the old fast factor becomes the slow one
    CMatrix iso(alg.ambient_dim, Eigen::Index(blk.dA) * blk.dB);
    for (int b = 0; b < blk.dB; ++b)
      for (int a = 0; a < blk.dA; ++a)
        iso.col(Eigen::Index(b) * blk.dA + a) = blk.iso.col(Eigen::Index(a) * blk.dB + b);
    out.blocks.push_back({iso, blk.dB, blk.dA});
  }
  return out;
}

// Projection of M onto the span of an HS-orthonormal basis.
static CMatrix span_project(const std::vector<CMatrix>& basis, const CMatrix& M) {
  CMatrix out = CMatrix::Zero(M.rows(), M.cols());
  for (const auto& b : basis) out += hs_inner(b, M) * b;
  return out;
}

OperatorBasis generate_algebra(const std::vector<CMatrix>& gens, double tol) {
  if (gens.empty()) throw std::invalid_argument("generate_algebra: no generators");
  const int d = int(gens[0].rows());
  for (const auto& g : gens)
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("generate_algebra: generators must be square, equal dims");
  if (tol <= 0) throw std::invalid_argument("generate_algebra: tol must be positive");

  std::vector<CMatrix> seed;
  for (const auto& g : gens) {
    seed.push_back(g);
    seed.push_back(g.adjoint());
  }
  std::vector<CMatrix> basis = orthonormalize_ops(seed, tol);
  for (int iter = 0; iter < d * d + 1; ++iter) {
    std::vector<CMatrix> next = basis;
    for (const auto& a : basis) {
      next.push_back(a.adjoint());
      for (const auto& b : basis) next.push_back(a * b);
    }
    std::vector<CMatrix> grown = orthonormalize_ops(next, tol);
    if (grown.size() == basis.size()) return {d, std::move(grown)};
    basis = std::move(grown);
  }
  throw std::runtime_error("generate_algebra: span did not stabilize (numerical breakdown)");
}

OperatorBasis commutant_of_set(const std::vector<CMatrix>& ops, double tol) {
  if (ops.empty()) throw std::invalid_argument("commutant_of_set: empty operator set");
  const int d = int(ops[0].rows());
  for (const auto& g : ops)
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("commutant_of_set: operators must be square, equal dims");
  const Eigen::Index dd = Eigen::Index(d) * d;
  CMatrix K(dd * Eigen::Index(ops.size()), dd);
  const CMatrix one = CMatrix::Identity(d, d);
  double scale = 1.0;
  for (size_t k = 0; k < ops.size(); ++k) {
    K.middleRows(dd * Eigen::Index(k), dd) =
        kron(one, ops[k]) - kron(ops[k].transpose(), one);
    scale = std::max(scale, ops[k].norm());
  }
  // The admission threshold is absolute in the scale of the operators, not of
  // K itself: for near-central sets K is numerically zero and a relative
  // cutoff would promote roundoff noise to spurious constraints.
  Eigen::JacobiSVD<CMatrix> svd(K, Eigen::ComputeFullV);
  const double cutoff = tol * scale;
  OperatorBasis out{d, {}};
  for (Eigen::Index k = 0; k < svd.matrixV().cols(); ++k)
    if (k >= svd.singularValues().size() || svd.singularValues()(k) <= cutoff)
      out.ops.push_back(unvec(CVector(svd.matrixV().col(k)), d, d));
  return out;
}

// Hermitian spanning set of a dagger-closed operator space.
static std::vector<CMatrix> hermitian_parts(const std::vector<CMatrix>& ops) {
  std::vector<CMatrix> out;
  for (const auto& m : ops) {
    out.push_back(0.5 * (m + m.adjoint()));
    out.push_back(Complex(0, 0.5) * (m - m.adjoint()));
  }
  return out;
}

// Random real-coefficient Hermitian combination.
static CMatrix generic_hermitian(const std::vector<CMatrix>& herm, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix out = CMatrix::Zero(herm[0].rows(), herm[0].cols());
  for (const auto& h : herm) out += n(rng) * h;
  return out;
}

// Group ascending eigenvalues by relative gap; returns group boundaries.
static std::vector<std::pair<int, int>> group_eigenvalues(const RVector& ev,
                                                          double rel_gap) {
  // Floor the spread at the generic O(1) coefficient scale so that an exactly
  // degenerate spectrum (spread at roundoff level) stays a single group.
  const double spread = std::max(ev(ev.size() - 1) - ev(0), 1.0);
  std::vector<std::pair<int, int>> groups;
  int start = 0;
  for (int k = 1; k <= int(ev.size()); ++k) {
    if (k == int(ev.size()) || ev(k) - ev(k - 1) > rel_gap * spread) {
      groups.push_back({start, k});
      start = k;
    }
  }
  return groups;
}

static AlgebraStructure try_structure(const OperatorBasis& basis, double tol, Rng& rng) {
  const int d = basis.ambient_dim;

  // Support projector of the algebra: range of sum b b^dag.
  CMatrix support = CMatrix::Zero(d, d);
  for (const auto& b : basis.ops) support += b * b.adjoint();
  HermitianEig se = eig_hermitian(support);
  const double smax = se.eigenvalues.maxCoeff();
  int rank = 0;
  for (int k = 0; k < d; ++k)
    if (se.eigenvalues(k) > 1e-10 * smax) ++rank;
  CMatrix Q = se.eigenvectors.rightCols(rank);  // ambient x r

  // Compress the basis onto the unit's range; the algebra is unital there.
  std::vector<CMatrix> comp;
  for (const auto& b : basis.ops) comp.push_back(Q.adjoint() * b * Q);

  // Center = algebra intersected with its commutant.
  OperatorBasis commutant = commutant_of_set(comp, tol);
  const Eigen::Index rr = Eigen::Index(rank) * rank;
  CMatrix B1(rr, comp.size()), B2(rr, commutant.ops.size());
  for (size_t k = 0; k < comp.size(); ++k) B1.col(k) = vec(comp[k]);
  for (size_t k = 0; k < commutant.ops.size(); ++k) B2.col(k) = vec(commutant.ops[k]);
  CMatrix J(rr, B1.cols() + B2.cols());
  J << B1, -B2;
  std::vector<CMatrix> center;
  for (const auto& v : nullspace(J, tol))
    center.push_back(unvec(CVector(B1 * v.head(B1.cols())), rank, rank));
  center = orthonormalize_ops(center, tol);
  if (center.empty()) throw std::runtime_error("structure_from_basis: empty center");

  // Minimal central projectors from a generic Hermitian central element.
  CMatrix Z = generic_hermitian(hermitian_parts(center), rng);
  HermitianEig ze = eig_hermitian(Z);
  auto cgroups = group_eigenvalues(ze.eigenvalues, 1e-6);
  if (int(cgroups.size()) != int(center.size()))
    throw std::runtime_error("structure_from_basis: degenerate central element");

  AlgebraStructure out{d, {}};
  for (const auto& [lo, hi] : cgroups) {
    CMatrix Qi = ze.eigenvectors.middleCols(lo, hi - lo);  // rank x ri
    const int ri = hi - lo;

    // Restrict the algebra to this central block.
    std::vector<CMatrix> restr;
    for (const auto& b : comp) restr.push_back(Qi.adjoint() * b * Qi);
    restr = orthonormalize_ops(restr, tol);

    // Generic Hermitian element: dA distinct eigenvalues, multiplicity dB.
    CMatrix H = generic_hermitian(hermitian_parts(restr), rng);
    HermitianEig he = eig_hermitian(H);
    auto groups = group_eigenvalues(he.eigenvalues, 1e-6);
    const int dA = int(groups.size());
    const int dB = groups[0].second - groups[0].first;
    for (const auto& [glo, ghi] : groups)
      if (ghi - glo != dB)
        throw std::runtime_error("structure_from_basis: unequal eigenvalue multiplicities");
    if (dA * dB != ri)
      throw std::runtime_error("structure_from_basis: block dimension mismatch");

    CMatrix iso_local(ri, Eigen::Index(dA) * dB);
    CMatrix W1 = he.eigenvectors.middleCols(groups[0].first, dB);
    iso_local.leftCols(dB) = W1;
    if (dA > 1) {
      // A generic algebra element intertwines the eigenspaces; the polar
      // factor keeps the multiplicity basis aligned across copies.
      std::normal_distribution<double> nrm(0.0, 1.0);
      CMatrix G = CMatrix::Zero(ri, ri);
      for (const auto& b : restr) G += Complex(nrm(rng), nrm(rng)) * b;
      for (int j = 1; j < dA; ++j) {
        CMatrix Wj = he.eigenvectors.middleCols(groups[j].first, dB);
        Eigen::JacobiSVD<CMatrix> svd(Wj.adjoint() * G * W1,
                                      Eigen::ComputeFullU | Eigen::ComputeFullV);
        if (svd.singularValues()(dB - 1) < 1e-8 * std::max(svd.singularValues()(0), 1.0))
          throw std::runtime_error("structure_from_basis: degenerate intertwiner");
        iso_local.middleCols(Eigen::Index(j) * dB, dB) =
            Wj * (svd.matrixU() * svd.matrixV().adjoint());
      }
    }
    out.blocks.push_back({Q * (Qi * iso_local), dA, dB});
  }
  return out;
}

AlgebraStructure structure_from_basis(const OperatorBasis& basis, double tol,
                                      std::uint64_t seed) {
  if (basis.ops.empty())
    throw std::invalid_argument("structure_from_basis: empty basis");
  // Closure check: products of basis elements must stay in the span.
  for (const auto& a : basis.ops) {
    CMatrix ad = a.adjoint();
    if ((ad - span_project(basis.ops, ad)).norm() > 100 * tol)
      throw std::invalid_argument("structure_from_basis: span not closed under adjoint");
    for (const auto& b : basis.ops) {
      CMatrix p = a * b;
      if ((p - span_project(basis.ops, p)).norm() > 100 * tol)
        throw std::invalid_argument("structure_from_basis: span not closed under products");
    }
  }
  Rng rng(seed + 0x9e3779b97f4a7c15ull);
  std::string last_error;
  for (int attempt = 0; attempt < 5; ++attempt) {
    try {
      AlgebraStructure alg = try_structure(basis, tol, rng);
      // The recovered span must match the input span.
      OperatorBasis rb = basis_of(alg);
      double worst = 0.0;
      for (const auto& b : basis.ops)
        worst = std::max(worst, (b - span_project(rb.ops, b)).norm());
      for (const auto& b : rb.ops)
        worst = std::max(worst, (b - span_project(basis.ops, b)).norm());
      if (worst > 1e-7) throw std::runtime_error("structure_from_basis: span mismatch");
      return alg;
    } catch (const std::runtime_error& e) {
      last_error = e.what();
    }
  }
  throw std::runtime_error("structure_from_basis: failed after 5 attempts: " + last_error);
}

CMatrix random_algebra_unitary(const AlgebraStructure& alg, Rng& rng) {
  CMatrix U = CMatrix::Identity(alg.ambient_dim, alg.ambient_dim) - algebra_unit(alg);
  for (const auto& blk : alg.blocks)
    U += blk.iso * kron(haar_unitary(blk.dA, rng), CMatrix::Identity(blk.dB, blk.dB)) *
         blk.iso.adjoint();
  return U;
}

CMatrix twirl_estimate(const AlgebraStructure& alg, const CMatrix& B, int n,
                       std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("twirl_estimate: n must be >= 1");
  Rng rng(seed);
  CMatrix acc = CMatrix::Zero(alg.ambient_dim, alg.ambient_dim);
  for (int k = 0; k < n; ++k) {
    CMatrix U = random_algebra_unitary(alg, rng);
    acc += U.adjoint() * B * U;
  }
  return acc / double(n);
}

MembershipResult membership(const AlgebraStructure& alg, const CMatrix& X, double tol) {
  const double defect = operator_norm(X - project_algebra(alg, X));
  return {defect <= tol, defect};
}

Channel projector_channel(const AlgebraStructure& alg) {
  if (!is_unital(alg))
    throw std::invalid_argument("projector_channel: algebra not unital on the ambient space");
  std::vector<CMatrix> kraus;
  for (const auto& blk : alg.blocks) {
    const double norm = 1.0 / std::sqrt(double(blk.dB));
    for (int j = 0; j < blk.dB; ++j)
      for (int k = 0; k < blk.dB; ++k) {
        CMatrix e = CMatrix::Zero(blk.dB, blk.dB);
        e(j, k) = norm;
        kraus.push_back(blk.iso * kron(CMatrix::Identity(blk.dA, blk.dA), e) *
                        blk.iso.adjoint());
      }
  }
  return make_channel(std::move(kraus));
}

Channel commutant_projector_channel(const AlgebraStructure& alg) {
  return projector_channel(commutant_structure(alg));
}

}  // namespace aqc

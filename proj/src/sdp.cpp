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

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace aqc {

using BlockMat = std::vector<CMatrix>;

int SDPProblem::psd_dim() const {
  int n = 0;
  for (int d : block_dims) n += d;
  return n;
}

void SDPProblem::validate() const {
  if (block_dims.empty()) throw std::invalid_argument("SDPProblem: no blocks");
  auto check_term = [&](const ConstraintTerm& t) {
    if (t.block < 0 || t.block >= int(block_dims.size()))
      throw std::invalid_argument("SDPProblem: bad block index");
    const int d = block_dims[t.block];
    if (t.A.rows() != d || t.A.cols() != d)
      throw std::invalid_argument("SDPProblem: coefficient dimension mismatch");
    if ((t.A - t.A.adjoint()).norm() > 1e-10 * std::max(1.0, t.A.norm()))
      throw std::invalid_argument("SDPProblem: coefficient matrix not Hermitian");
  };
  for (const auto& t : objective) check_term(t);
  for (const auto& c : constraints)
    for (const auto& t : c.terms) check_term(t);
}

namespace {

BlockMat zeros_like(const SDPProblem& p) {
  BlockMat out;
  for (int d : p.block_dims) out.push_back(CMatrix::Zero(d, d));
  return out;
}

BlockMat identity_like(const SDPProblem& p, double scale) {
  BlockMat out;
  for (int d : p.block_dims) out.push_back(scale * CMatrix::Identity(d, d));
  return out;
}

double binner(const BlockMat& A, const BlockMat& B) {
  double acc = 0.0;
  for (size_t b = 0; b < A.size(); ++b)
    acc += A[b].cwiseProduct(B[b].transpose()).sum().real();
  return acc;
}

double bnorm(const BlockMat& A) {
  double acc = 0.0;
  for (const auto& M : A) acc += M.squaredNorm();
  return std::sqrt(acc);
}

// sum_b Tr(A_k,b M_b) for each constraint k.
Eigen::VectorXd apply_A(const SDPProblem& p, const BlockMat& M) {
  Eigen::VectorXd out(p.constraints.size());
  for (size_t k = 0; k < p.constraints.size(); ++k) {
    double acc = 0.0;
    for (const auto& t : p.constraints[k].terms)
      acc += t.A.cwiseProduct(M[t.block].transpose()).sum().real();
    out(k) = acc;
  }
  return out;
}

// sum_k y_k A_k as a block matrix.
BlockMat apply_At(const SDPProblem& p, const Eigen::VectorXd& y) {
  BlockMat out = zeros_like(p);
  for (size_t k = 0; k < p.constraints.size(); ++k)
    for (const auto& t : p.constraints[k].terms) out[t.block] += y(k) * t.A;
  return out;
}

BlockMat objective_blocks(const SDPProblem& p) {
  BlockMat out = zeros_like(p);
  for (const auto& t : p.objective) out[t.block] += t.A;
  return out;
}

CMatrix herm(const CMatrix& M) { return 0.5 * (M + M.adjoint()); }

// Square root and inverse square root of a Hermitian PD matrix.
void psd_sqrt(const CMatrix& M, CMatrix& root, CMatrix& inv_root) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(M);
  RVector ev = es.eigenvalues();
  const double floor = 1e-14 * std::max(ev.maxCoeff(), 1.0);
  RVector s(ev.size()), si(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double v = std::max(ev(i), floor);
    s(i) = std::sqrt(v);
    si(i) = 1.0 / s(i);
  }
  root = es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
  inv_root = es.eigenvectors() * si.asDiagonal() * es.eigenvectors().adjoint();
}

// Largest alpha in (0, cap] with X + alpha*DX >= 0, given X > 0.
double max_step(const CMatrix& X, const CMatrix& DX, double cap) {
  Eigen::LLT<CMatrix> llt(X);
  if (llt.info() != Eigen::Success) return 0.0;
  CMatrix L = llt.matrixL();
  CMatrix S = L.triangularView<Eigen::Lower>().solve(DX);
  S = L.triangularView<Eigen::Lower>().solve(S.adjoint()).adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm(S), Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin >= -1e-14) return cap;
  return std::min(cap, -1.0 / lmin);
}

double max_step(const BlockMat& X, const BlockMat& DX, double cap) {
  double a = cap;
  for (size_t b = 0; b < X.size(); ++b) a = std::min(a, max_step(X[b], DX[b], cap));
  return a;
}

}  // namespace

SDPSolution sdp_solve(const SDPProblem& orig, const SDPOptions& opts) {
  orig.validate();
  // Normalize each constraint row to unit coefficient scale; mixed row scales
  // otherwise degrade the Schur system long before the target tolerance.
  SDPProblem p = orig;
  std::vector<double> row_scale(p.constraints.size(), 1.0);
  for (size_t k = 0; k < p.constraints.size(); ++k) {
    double s = 0.0;
    for (const auto& t : p.constraints[k].terms) s = std::max(s, t.A.norm());
    if (s > 0) {
      row_scale[k] = s;
      for (auto& t : p.constraints[k].terms) t.A /= s;
      p.constraints[k].rhs /= s;
    }
  }
  const int m = int(p.constraints.size());
  const int n = p.psd_dim();
  const BlockMat C = objective_blocks(p);
  Eigen::VectorXd b(m);
  for (int k = 0; k < m; ++k) b(k) = p.constraints[k].rhs;

  // Infeasible start on the identity, scaled to the data.
  double scale = std::max(1.0, bnorm(C));
  for (const auto& c : p.constraints) {
    double an = std::abs(c.rhs);
    for (const auto& t : c.terms) an = std::max(an, t.A.norm());
    scale = std::max(scale, an);
  }
  BlockMat X = identity_like(p, std::sqrt(scale));
  BlockMat Z = identity_like(p, std::sqrt(scale));
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m);

  SDPSolution sol;
  double pobj = 0.0, dobj = 0.0;
  double prev_gap = 1e300;
  int stalled = 0;

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    const double mu = binner(X, Z) / n;
    pobj = binner(C, X);
    dobj = b.dot(y);
    Eigen::VectorXd rp = b - apply_A(p, X);
    BlockMat Rd = apply_At(p, y);  // dual residual: C - sum y A + Z
    for (size_t i = 0; i < Rd.size(); ++i) Rd[i] = C[i] - Rd[i] + Z[i];

    const double pinf = rp.norm() / (1.0 + b.norm());
    const double dinf = bnorm(Rd) / (1.0 + bnorm(C));
    const double relgap = binner(X, Z) / (1.0 + std::abs(pobj) + std::abs(dobj));
    static const bool env_verbose = std::getenv("AQEC_VERBOSE") != nullptr;
    if (opts.verbose || opts.trace || env_verbose) {
      std::ostringstream os;
      os << "iter " << iter << " pobj " << pobj << " dobj " << dobj << " gap "
         << relgap << " pinf " << pinf << " dinf " << dinf;
      if (opts.trace)
        opts.trace(os.str());
      else
        std::cerr << "[sdp] " << os.str() << "\n";
    }
    if (pinf <= opts.tol && dinf <= opts.tol && relgap <= opts.tol &&
        std::abs(pobj - dobj) <= opts.tol * 10 * (1.0 + std::abs(pobj))) {
      sol.status = SDPStatus::Optimal;
      sol.iterations = iter;
      break;
    }
    sol.iterations = iter + 1;
    stalled = (relgap > 0.99 * prev_gap) ? stalled + 1 : 0;
    prev_gap = relgap;
    if (stalled >= 12) break;  // duality gap no longer shrinking

    // Nesterov-Todd scaling point per block: W Z W = X.
    BlockMat W(p.block_dims.size());
    BlockMat Zinv(p.block_dims.size());
    for (size_t bl = 0; bl < W.size(); ++bl) {
      CMatrix zr, zir;
      psd_sqrt(Z[bl], zr, zir);
      CMatrix mid = herm(zr * X[bl] * zr);
      CMatrix mr, mir;
      psd_sqrt(mid, mr, mir);
      W[bl] = herm(zir * mr * zir);
      Zinv[bl] = herm(zir * zir);
    }

    Eigen::MatrixXd M = opts.parallel_schur ? assemble_schur(p, W)
                                            : assemble_schur_serial(p, W);
    // Near the optimum the Schur matrix becomes numerically singular; a tiny
    // ridge keeps the factorization alive, growing it if necessary. When even
    // that fails no further progress is possible and the loop ends with the
    // current (typically near-optimal) iterate.
    const double dscale = std::max(M.diagonal().maxCoeff(), 1.0);
    double ridge = 1e-13 * dscale;
    Eigen::LDLT<Eigen::MatrixXd> ldlt;
    bool factored = false;
    for (int tries = 0; tries < 4; ++tries, ridge *= 1e3) {
      ldlt.compute(M + ridge * Eigen::MatrixXd::Identity(M.rows(), M.cols()));
      if (ldlt.info() == Eigen::Success && (ldlt.vectorD().array() > 0).all()) {
        factored = true;
        break;
      }
    }
    if (!factored) break;

    // Direction for a given complementarity right-hand side Rc:
    //   dZ = sum dy A - Rd,  dX = Rc - W dZ W,  A(dX) = rp.
    auto solve_dir = [&](const BlockMat& Rc, BlockMat& dX, Eigen::VectorXd& dy,
                         BlockMat& dZ) {
      BlockMat WRdW(W.size());
      for (size_t bl = 0; bl < W.size(); ++bl) WRdW[bl] = herm(W[bl] * Rd[bl] * W[bl]);
      Eigen::VectorXd rhs = apply_A(p, Rc) + apply_A(p, WRdW) - rp;
      dy = ldlt.solve(rhs);
      dy -= ldlt.solve(Eigen::VectorXd(M * dy - rhs));  // one refinement pass
      dZ = apply_At(p, dy);
      for (size_t bl = 0; bl < dZ.size(); ++bl) dZ[bl] = herm(dZ[bl] - Rd[bl]);
      dX.resize(W.size());
      for (size_t bl = 0; bl < W.size(); ++bl)
        dX[bl] = herm(Rc[bl] - W[bl] * dZ[bl] * W[bl]);
    };

    // Predictor (affine scaling direction).
    BlockMat Rc(p.block_dims.size());
    for (size_t bl = 0; bl < Rc.size(); ++bl) Rc[bl] = -X[bl];
    BlockMat dXa, dZa;
    Eigen::VectorXd dya;
    solve_dir(Rc, dXa, dya, dZa);
    const double ap = max_step(X, dXa, 1.0);
    const double ad = max_step(Z, dZa, 1.0);
    BlockMat Xa = X, Za = Z;
    for (size_t bl = 0; bl < X.size(); ++bl) {
      Xa[bl] += ap * dXa[bl];
      Za[bl] += ad * dZa[bl];
    }
    const double mu_aff = binner(Xa, Za) / n;
    double sigma = std::pow(mu_aff / mu, 3);
    sigma = std::clamp(sigma, 1e-8, 1.0);

    // Corrector.
    for (size_t bl = 0; bl < Rc.size(); ++bl)
      Rc[bl] = herm(sigma * mu * Zinv[bl] - X[bl] - dXa[bl] * dZa[bl] * Zinv[bl]);
    BlockMat dX, dZ;
    Eigen::VectorXd dy;
    solve_dir(Rc, dX, dy, dZ);

    const double tau = 0.98;
    const double sp = tau * max_step(X, dX, 1.0 / tau);
    const double sd = tau * max_step(Z, dZ, 1.0 / tau);
    for (size_t bl = 0; bl < X.size(); ++bl) {
      X[bl] = herm(X[bl] + std::min(1.0, sp) * dX[bl]);
      Z[bl] = herm(Z[bl] + std::min(1.0, sd) * dZ[bl]);
    }
    y += std::min(1.0, sd) * dy;
  }

  if (sol.status != SDPStatus::Optimal) {
    // Termination at the numerical floor: accept a mildly relaxed certificate
    // rather than reporting failure for an iterate that is optimal to within
    // the achievable precision.
    Eigen::VectorXd rp = b - apply_A(p, X);
    BlockMat Rd = apply_At(p, y);
    for (size_t i = 0; i < Rd.size(); ++i) Rd[i] = C[i] - Rd[i] + Z[i];
    pobj = binner(C, X);
    dobj = b.dot(y);
    const double pinf = rp.norm() / (1.0 + b.norm());
    const double dinf = bnorm(Rd) / (1.0 + bnorm(C));
    const double relgap = binner(X, Z) / (1.0 + std::abs(pobj) + std::abs(dobj));
    sol.status = (pinf <= 100 * opts.tol && dinf <= 100 * opts.tol &&
                  relgap <= 100 * opts.tol)
                     ? SDPStatus::Optimal
                     : SDPStatus::MaxIter;
  }
  sol.primal_value = pobj;
  sol.dual_value = dobj;
  sol.X = std::move(X);
  sol.y.assign(y.data(), y.data() + m);
  for (int k = 0; k < m; ++k) sol.y[k] /= row_scale[k];  // undo row scaling
  return sol;
}

}  // namespace aqc

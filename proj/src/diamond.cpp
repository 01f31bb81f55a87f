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

#include "aqc/diamond.hpp"

#include <cmath>
#include <stdexcept>

namespace aqc {

namespace {

// Appends the real and imaginary constraint rows for entry (r, c), r <= c, of
// a Hermitian matrix equality. For each participating block the caller
// supplies the complex coefficient functional G with  value = Tr(G M_block);
// the rows added use the Hermitian combinations picking out Re / Im.
struct EntryTerm {
  int block;
  CMatrix G;  // possibly non-Hermitian coefficient
};

void add_entry_constraints(SDPProblem& p, const std::vector<EntryTerm>& terms,
                           Complex rhs, bool diagonal) {
  SDPConstraint re;
  for (const auto& t : terms) {
    CMatrix A = 0.5 * (t.G + t.G.adjoint());
    if (A.norm() > 0) re.terms.push_back({t.block, std::move(A)});
  }
  re.rhs = rhs.real();
  p.constraints.push_back(std::move(re));
  if (diagonal) return;
  SDPConstraint im;
  for (const auto& t : terms) {
    CMatrix A = Complex(0, 0.5) * (t.G - t.G.adjoint());
    if (A.norm() > 0) im.terms.push_back({t.block, std::move(A)});
  }
  im.rhs = rhs.imag();
  p.constraints.push_back(std::move(im));
}

}  // namespace

SDPProblem diamond_primal_problem(const CMatrix& deltaJ, int dim_in, int dim_out) {
  const int nm = dim_in * dim_out;
  if (deltaJ.rows() != nm || deltaJ.cols() != nm)
    throw std::invalid_argument("diamond_primal_problem: Choi dimension mismatch");
  SDPProblem p;
  p.block_dims = {nm, nm, dim_in};  // W, slack S = rho(x)1 - W, rho
  p.objective.push_back({0, 2.0 * 0.5 * (deltaJ + deltaJ.adjoint())});

  // W + S - rho (x) 1 = 0, entrywise over the Hermitian nm x nm equality.
  for (int r = 0; r < nm; ++r)
    for (int c = r; c < nm; ++c) {
      const int ri = r / dim_out, ra = r % dim_out;
      const int ci = c / dim_out, ca = c % dim_out;
      std::vector<EntryTerm> terms;
      CMatrix Ew = CMatrix::Zero(nm, nm);
      Ew(c, r) = 1.0;  // Tr(Ew M) = M(r, c)
      terms.push_back({0, Ew});
      terms.push_back({1, Ew});
      if (ra == ca) {
        CMatrix Er = CMatrix::Zero(dim_in, dim_in);
        Er(ci, ri) = -1.0;  // -(rho (x) 1)(r,c) = -rho(ri,ci)
        terms.push_back({2, Er});
      }
      add_entry_constraints(p, terms, 0.0, r == c);
    }
  // Tr rho = 1.
  SDPConstraint tr;
  tr.terms.push_back({2, CMatrix::Identity(dim_in, dim_in)});
  tr.rhs = 1.0;
  p.constraints.push_back(std::move(tr));
  return p;
}

double diamond_distance(const Channel& N1, const Channel& N2, double tol) {
  if (N1.dim_in != N2.dim_in || N1.dim_out != N2.dim_out)
    throw std::invalid_argument("diamond_distance: channel dimensions differ");
  CMatrix deltaJ = choi(N1) - choi(N2);
  if (deltaJ.norm() < 1e-14) return 0.0;
  SDPProblem p = diamond_primal_problem(deltaJ, N1.dim_in, N1.dim_out);
  SDPOptions opts;
  opts.tol = std::min(tol, 1e-7);
  SDPSolution sol = sdp_solve(p, opts);
  if (sol.status != SDPStatus::Optimal)
    throw std::runtime_error("diamond_distance: SDP did not converge");
  return std::max(0.0, 0.5 * (sol.primal_value + sol.dual_value));
}

double cb_check(const Channel& N1, const Channel& N2, int samples, std::uint64_t seed) {
  if (N1.dim_in != N2.dim_in || N1.dim_out != N2.dim_out)
    throw std::invalid_argument("cb_check: channel dimensions differ");
  const int n = N1.dim_in;
  Channel E1 = tensor_id(N1, n), E2 = tensor_id(N2, n);
  Rng rng(seed);
  auto value = [&](const CVector& psi) {
    CMatrix phi = psi * psi.adjoint();
    return trace_norm(aqc::apply(E1, phi) - aqc::apply(E2, phi));
  };
  double best = 0.0;
  CVector best_psi = random_pure_state(n * n, rng);
  for (int s = 0; s < samples; ++s) {
    CVector psi = random_pure_state(n * n, rng);
    const double v = value(psi);
    if (v > best) {
      best = v;
      best_psi = psi;
    }
  }
  // Coordinate-ascent refinement around the best sample.
  double step = 0.3;
  for (int round = 0; round < 60; ++round) {
    bool improved = false;
    for (int trial = 0; trial < 20; ++trial) {
      CVector cand = best_psi + step * random_pure_state(n * n, rng);
      cand /= cand.norm();
      const double v = value(cand);
      if (v > best) {
        best = v;
        best_psi = cand;
        improved = true;
      }
    }
    if (!improved) {
      step *= 0.5;
      if (step < 1e-4) break;
    }
  }
  return best;
}

}  // namespace aqc

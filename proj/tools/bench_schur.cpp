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

// Times the parallel Schur-complement assembly against the serial reference
// kernel on synthetic problems of growing size, and cross-checks the results.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "aqc/sdp.hpp"

using namespace aqc;
using Clock = std::chrono::steady_clock;

namespace {

SDPProblem synthetic_problem(int block_dim, int num_constraints, Rng& rng) {
  SDPProblem p;
  p.block_dims = {block_dim, block_dim / 2 + 1};
  p.objective = {{0, random_hermitian(block_dim, rng)}};
  for (int k = 0; k < num_constraints; ++k) {
    SDPConstraint c;
    c.terms.push_back({0, random_hermitian(block_dim, rng)});
    if (k % 3 == 0)
      c.terms.push_back({1, random_hermitian(block_dim / 2 + 1, rng)});
    c.rhs = 0.0;
    p.constraints.push_back(c);
  }
  return p;
}

double time_ms(const std::function<Eigen::MatrixXd()>& f, int reps,
               Eigen::MatrixXd& out) {
  // Warm-up.
  out = f();
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    Eigen::MatrixXd M = f();
    auto t1 = Clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
    out = M;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  Rng rng(12345);

  std::printf("%8s %8s %12s %12s %8s %10s\n", "dim", "constr", "serial(ms)",
              "parallel(ms)", "speedup", "agreement");
  struct Case {
    int dim, m;
  };
  for (Case c : {Case{8, 40}, Case{16, 120}, Case{24, 250}, Case{32, 400}}) {
    SDPProblem p = synthetic_problem(c.dim, c.m, rng);
    std::vector<CMatrix> W;
    for (int d : p.block_dims) {
      CMatrix G = random_gaussian(d, d, rng);
      W.push_back(CMatrix(G * G.adjoint()) + CMatrix::Identity(d, d));
    }
    Eigen::MatrixXd Ms, Mp;
    const double ts = time_ms([&] { return assemble_schur_serial(p, W); }, reps, Ms);
    const double tp = time_ms([&] { return assemble_schur(p, W); }, reps, Mp);
    const double agree = (Ms - Mp).norm() / (1.0 + Ms.norm());
    std::printf("%8d %8d %12.3f %12.3f %8.2fx %10.2e\n", c.dim, c.m, ts, tp,
                ts / tp, agree);
    if (agree > 1e-10) {
      std::fprintf(stderr, "kernels disagree beyond tolerance\n");
      return 1;
    }
  }
  return 0;
}

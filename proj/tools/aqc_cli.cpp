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

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "aqc/correctability.hpp"
#include "aqc/json_io.hpp"

namespace {

// Exit codes: 0 success / verdict true, 1 verdict false, 2 input error,
// 3 numerical failure.
constexpr int kOk = 0;
constexpr int kVerdictFalse = 1;
constexpr int kInputError = 2;
constexpr int kNumericalError = 3;

struct Options {
  std::string channel, channel2, algebra, code;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  int samples = 1000;
  std::string output = "text";
};

aqc::Channel load_channel(const std::string& path) {
  return aqc::channel_from_json(aqc::load_json_file(path));
}
aqc::AlgebraStructure load_algebra(const std::string& path) {
  return aqc::algebra_from_json(aqc::load_json_file(path));
}
aqc::SubspaceCode load_code(const std::string& path) {
  return aqc::code_from_json(aqc::load_json_file(path));
}

void emit(const Options& opt, const aqc::Json& j, const std::string& text) {
  if (opt.output == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int run(const std::string& cmd, const Options& opt) {
  using namespace aqc;
  if (cmd == "check-exact") {
    Channel N = load_channel(opt.channel);
    AlgebraStructure alg = load_algebra(opt.algebra);
    ExactCheckResult res = exact_check(N, alg, opt.tol);
    Json j{{"exact", res.exact}, {"kl_defect", res.kl_defect}, {"tol", opt.tol}};
    emit(opt, j,
         (res.exact ? "EXACT (defect " : "NOT EXACT (defect ") + fmt(res.kl_defect) + ")");
    return res.exact ? kOk : kVerdictFalse;
  }
  if (cmd == "delta") {
    Channel N = load_channel(opt.channel);
    double d;
    if (!opt.code.empty())
      d = subspace_estimate(load_code(opt.code), N, opt.tol);
    else
      d = delta_estimate(N, load_algebra(opt.algebra), opt.tol);
    emit(opt, Json{{"delta", d}}, "delta = " + fmt(d));
    return kOk;
  }
  if (cmd == "optimal") {
    Channel N = load_channel(opt.channel);
    AlgebraStructure alg = load_algebra(opt.algebra);
    OptimalErrorResult res = optimal_error(N, alg, opt.tol);
    Json j{{"optimal_error", res.error}, {"recovery", channel_to_json(res.recovery)}};
    emit(opt, j, "E = " + fmt(res.error));
    return kOk;
  }
  if (cmd == "verify-bounds") {
    Channel N = load_channel(opt.channel);
    AlgebraStructure alg = load_algebra(opt.algebra);
    CorrectabilityReport rep = verify_theorem1(N, alg, opt.tol);
    emit(opt, report_to_json(rep, opt.seed),
         "delta=" + fmt(rep.delta) + " E=" + fmt(rep.optimal_error) +
             (rep.bounds_ok ? " BOUNDS OK" : " BOUNDS VIOLATED"));
    return rep.bounds_ok ? kOk : kVerdictFalse;
  }
  if (cmd == "largest-algebra") {
    Channel N = load_channel(opt.channel);
    AlgebraStructure alg = largest_correctable(N);
    std::string text = "blocks:";
    for (const auto& blk : alg.blocks)
      text += " (dA=" + std::to_string(blk.dA) + ", dB=" + std::to_string(blk.dB) + ")";
    emit(opt, algebra_to_json(alg), text);
    return kOk;
  }
  if (cmd == "complement") {
    Channel N = load_channel(opt.channel);
    Channel comp = complement(N);
    emit(opt, channel_to_json(comp),
         "complement: " + std::to_string(comp.dim_in) + " -> " +
             std::to_string(comp.dim_out) + " (" + std::to_string(comp.kraus.size()) +
             " Kraus operators)");
    return kOk;
  }
  if (cmd == "diamond") {
    Channel N1 = load_channel(opt.channel);
    Channel N2 = load_channel(opt.channel2);
    double d = diamond_distance(N1, N2, opt.tol);
    emit(opt, Json{{"diamond_distance", d}}, "diamond distance = " + fmt(d));
    return kOk;
  }
  std::cerr << "unknown command: " << cmd << "\n";
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate correctability of operator algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "numerical tolerance");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--samples", opt.samples, "sample count for stochastic checks");
    sub->add_option("--output", opt.output, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* check = app.add_subcommand("check-exact", "exact correctability test");
  check->add_option("--channel", opt.channel)->required();
  check->add_option("--algebra", opt.algebra)->required();
  auto* delta = app.add_subcommand("delta", "correctability estimate delta");
  delta->add_option("--channel", opt.channel)->required();
  delta->add_option("--algebra", opt.algebra);
  delta->add_option("--code", opt.code);
  auto* optimal = app.add_subcommand("optimal", "optimal reconstruction error");
  optimal->add_option("--channel", opt.channel)->required();
  optimal->add_option("--algebra", opt.algebra)->required();
  auto* verify = app.add_subcommand("verify-bounds", "two-sided bound check");
  verify->add_option("--channel", opt.channel)->required();
  verify->add_option("--algebra", opt.algebra)->required();
  auto* largest = app.add_subcommand("largest-algebra", "largest correctable algebra");
  largest->add_option("--channel", opt.channel)->required();
  auto* comp = app.add_subcommand("complement", "complementary channel");
  comp->add_option("--channel", opt.channel)->required();
  auto* diam = app.add_subcommand("diamond", "diamond distance between two channels");
  diam->add_option("--channel", opt.channel)->required();
  diam->add_option("--channel2", opt.channel2)->required();
  for (auto* sub : {check, delta, optimal, verify, largest, comp, diam}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "delta" && opt.algebra.empty() == opt.code.empty()) {
    std::cerr << "delta: exactly one of --algebra or --code is required\n";
    return kInputError;
  }
  try {
    return run(cmd, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    if (std::getenv("AQEC_VERBOSE"))
      std::cerr << "(set AQEC_VERBOSE=1 for solver traces on supported commands)\n";
    return kNumericalError;
  }
}

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

#include "aqc/json_io.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

using namespace aqc;

namespace {

const std::string kCatalog = AQC_CATALOG_DIR;
const std::string kCli = AQC_CLI_PATH;

int run_cli(const std::string& args) {
  const std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("matrix round trip") {
  Rng rng(1);
  CMatrix M = random_gaussian(3, 2, rng);
  CMatrix back = matrix_from_json(matrix_to_json(M));
  CHECK((M - back).norm() < 1e-15);

  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2], [3]]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("\"nope\"")), std::invalid_argument);
}

TEST_CASE("channel round trip") {
  Rng rng(2);
  Channel N = random_channel(2, 3, 2, rng);
  Channel back = channel_from_json(channel_to_json(N));
  CHECK(back.dim_in == 2);
  CHECK(back.dim_out == 3);
  CMatrix rho = random_density(2, rng);
  CHECK((aqc::apply(back, rho) - aqc::apply(N, rho)).norm() < 1e-12);

  Channel named = channel_from_json(
      Json{{"name", "dephasing"}, {"params", {0.3}}, {"dim", 2}});
  CHECK(named.kraus.size() == 2);

  // Non-trace-preserving Kraus data is rejected on load.
  Json bad = channel_to_json(N);
  bad["kraus"].push_back(matrix_to_json(CMatrix::Identity(3, 2)));
  CHECK_THROWS_AS(channel_from_json(bad), std::invalid_argument);
}

TEST_CASE("algebra round trip") {
  Rng rng(3);
  AlgebraStructure alg = random_catalog_algebra(4, rng);
  AlgebraStructure back = algebra_from_json(algebra_to_json(alg));
  CMatrix X = random_gaussian(4, 4, rng);
  CHECK((project_algebra(back, X) - project_algebra(alg, X)).norm() < 1e-10);

  // Generator form recovers the structure.
  CMatrix Z(2, 2);
  Z << 1, 0, 0, -1;
  AlgebraStructure gen = algebra_from_json(
      Json{{"generators", {matrix_to_json(Z)}}});
  CHECK(gen.blocks.size() == 2);

  // Non-isometric block data is rejected.
  Json bad = algebra_to_json(alg);
  bad["blocks"][0]["iso"] = matrix_to_json(
      2.0 * matrix_from_json(bad["blocks"][0]["iso"]));
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
}

TEST_CASE("code round trip") {
  Rng rng(4);
  SubspaceCode code{haar_isometry(4, 2, rng), 2};
  SubspaceCode back = code_from_json(code_to_json(code));
  CHECK(back.d == 2);
  CHECK((back.V - code.V).norm() < 1e-15);
  CHECK_THROWS_AS(code_from_json(Json{{"d", 2}}), std::invalid_argument);
}

TEST_CASE("report serialization") {
  Rng rng(5);
  Channel N = random_channel(2, 2, 2, rng);
  CorrectabilityReport rep = verify_theorem1(N, diagonal_algebra(2));
  Json j = report_to_json(rep, 7);
  CHECK(j.contains("delta"));
  CHECK(j.contains("optimal_error"));
  CHECK(j.contains("bounds_ok"));
  CHECK(j["seed"] == 7);
}

TEST_CASE("load_json_file") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), std::invalid_argument);
  const std::string tmp = "/tmp/aqc_bad.json";
  std::ofstream(tmp) << "{ not json";
  CHECK_THROWS_AS(load_json_file(tmp), std::invalid_argument);
}

TEST_CASE("bundled catalog loads") {
  for (const char* f : {"identity_qubit.json", "dephasing_qubit.json",
                        "depolarizing_qubit.json", "amplitude_damping_qubit.json",
                        "bitflip3_noise.json"}) {
    Channel N = channel_from_json(load_json_file(kCatalog + "/" + std::string(f)));
    CHECK(N.dim_in >= 2);
  }
  for (const char* f : {"qubit_full_algebra.json", "qubit_diagonal_algebra.json"}) {
    AlgebraStructure a = algebra_from_json(load_json_file(kCatalog + "/" + std::string(f)));
    CHECK(is_unital(a));
  }
  for (const char* f : {"repetition3_code.json", "leung4_code.json"}) {
    SubspaceCode c = code_from_json(load_json_file(kCatalog + "/" + std::string(f)));
    CHECK((c.V.adjoint() * c.V - CMatrix::Identity(c.d, c.d)).norm() < 1e-12);
  }
}

TEST_CASE("cli exit codes and verdicts") {
  const std::string deph = kCatalog + "/dephasing_qubit.json";
  const std::string diag = kCatalog + "/qubit_diagonal_algebra.json";
  const std::string full = kCatalog + "/qubit_full_algebra.json";
  const std::string ident = kCatalog + "/identity_qubit.json";

  CHECK(run_cli("check-exact --channel " + deph + " --algebra " + diag) == 0);
  CHECK(run_cli("check-exact --channel " + deph + " --algebra " + full) == 1);
  CHECK(run_cli("check-exact --channel " + deph + " --algebra " + full +
                " --output json") == 1);
  CHECK(run_cli("delta --channel " + deph + " --algebra " + diag) == 0);
  CHECK(run_cli("diamond --channel " + ident + " --channel2 " + deph) == 0);
  CHECK(run_cli("largest-algebra --channel " + deph) == 0);
  CHECK(run_cli("complement --channel " + deph + " --output json") == 0);

  // Input errors: missing file, missing both of --algebra/--code.
  CHECK(run_cli("check-exact --channel /nope.json --algebra " + diag) == 2);
  CHECK(run_cli("delta --channel " + deph) == 2);
  CHECK(run_cli("delta --channel " + deph + " --algebra " + diag + " --code " +
                kCatalog + "/repetition3_code.json") == 2);
  CHECK(run_cli("frobnicate") == 2);
}

TEST_CASE("cli subspace code path") {
  const std::string noise = kCatalog + "/bitflip3_noise.json";
  const std::string code = kCatalog + "/repetition3_code.json";
  CHECK(run_cli("delta --channel " + noise + " --code " + code) == 0);
}

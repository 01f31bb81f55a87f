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

#include <fstream>
#include <stdexcept>

namespace aqc {

namespace {

// Missing keys and wrong JSON types surface as library exceptions; at this
// boundary they are all malformed input.
template <typename F>
auto translated(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json matrix_to_json(const CMatrix& M) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      row.push_back(Json::array({M(i, j).real(), M(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j) {
  return translated("matrix", [&] {
    if (!j.is_array() || j.empty() || !j[0].is_array())
      throw std::invalid_argument("matrix: expected nested array");
    const int rows = int(j.size());
    const int cols = int(j[0].size());
    CMatrix M(rows, cols);
    for (int r = 0; r < rows; ++r) {
      if (int(j[r].size()) != cols)
        throw std::invalid_argument("matrix: ragged rows");
      for (int c = 0; c < cols; ++c) {
        const Json& e = j[r][c];
        if (!e.is_array() || e.size() != 2)
          throw std::invalid_argument("matrix: entries must be [re, im] pairs");
        M(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      }
    }
    return M;
});
}

Json channel_to_json(const Channel& N) {
  Json j;
  j["dim_in"] = N.dim_in;
  j["dim_out"] = N.dim_out;
  Json kraus = Json::array();
  for (const auto& E : N.kraus) kraus.push_back(matrix_to_json(E));
  j["kraus"] = std::move(kraus);
  return j;
}

Channel channel_from_json(const Json& j) {
  return translated("channel", [&] {
    if (j.contains("name")) {
      std::vector<double> params;
      if (j.contains("params")) params = j["params"].get<std::vector<double>>();
      return standard_channel(j["name"].get<std::string>(), params,
                              j.value("dim", 2));
    }
    if (!j.contains("kraus"))
      throw std::invalid_argument("channel: missing 'kraus' or 'name'");
    std::vector<CMatrix> kraus;
    for (const auto& e : j["kraus"]) kraus.push_back(matrix_from_json(e));
    Channel N = make_channel(std::move(kraus));
    if (j.contains("dim_in") && j["dim_in"].get<int>() != N.dim_in)
      throw std::invalid_argument("channel: dim_in does not match Kraus operators");
    if (j.contains("dim_out") && j["dim_out"].get<int>() != N.dim_out)
      throw std::invalid_argument("channel: dim_out does not match Kraus operators");
    return N;
});
}

Json algebra_to_json(const AlgebraStructure& alg) {
  Json j;
  j["ambient_dim"] = alg.ambient_dim;
  Json blocks = Json::array();
  for (const auto& blk : alg.blocks) {
    Json b;
    b["iso"] = matrix_to_json(blk.iso);
    b["dA"] = blk.dA;
    b["dB"] = blk.dB;
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

AlgebraStructure algebra_from_json(const Json& j) {
  return translated("algebra", [&] {
    if (j.contains("generators")) {
      std::vector<CMatrix> gens;
      for (const auto& g : j["generators"]) gens.push_back(matrix_from_json(g));
      return structure_from_basis(generate_algebra(gens));
    }
    if (!j.contains("blocks"))
      throw std::invalid_argument("algebra: missing 'blocks' or 'generators'");
    AlgebraStructure alg;
    alg.ambient_dim = j.at("ambient_dim").get<int>();
    for (const auto& b : j["blocks"]) {
      AlgebraBlock blk;
      blk.iso = matrix_from_json(b.at("iso"));
      blk.dA = b.at("dA").get<int>();
      blk.dB = b.at("dB").get<int>();
      if (blk.iso.rows() != alg.ambient_dim ||
          blk.iso.cols() != Eigen::Index(blk.dA) * blk.dB)
        throw std::invalid_argument("algebra: block isometry dimension mismatch");
      if ((blk.iso.adjoint() * blk.iso -
           CMatrix::Identity(blk.iso.cols(), blk.iso.cols()))
              .norm() > 1e-8)
        throw std::invalid_argument("algebra: block isometry not orthonormal");
      alg.blocks.push_back(std::move(blk));
    }
    return alg;
});
}

Json code_to_json(const SubspaceCode& code) {
  Json j;
  j["d"] = code.d;
  j["isometry"] = matrix_to_json(code.V);
  return j;
}

SubspaceCode code_from_json(const Json& j) {
  return translated("code", [&] {
    SubspaceCode code;
    code.V = matrix_from_json(j.at("isometry"));
    code.d = j.value("d", int(code.V.cols()));
    if (code.d != code.V.cols())
      throw std::invalid_argument("code: d does not match isometry columns");
    if ((code.V.adjoint() * code.V - CMatrix::Identity(code.d, code.d)).norm() > 1e-8)
      throw std::invalid_argument("code: isometry condition violated");
    return code;
});
}

Json report_to_json(const CorrectabilityReport& rep, std::uint64_t seed) {
  Json j;
  j["delta"] = rep.delta;
  j["optimal_error"] = rep.optimal_error;
  j["exact"] = rep.exact;
  j["kl_defect"] = rep.kl_defect;
  j["bounds_ok"] = rep.bounds_ok;
  j["recovery"] = channel_to_json(rep.recovery);
  j["tolerances"] = Json{{"tol", rep.tol}, {"exact_tol", rep.exact_tol}};
  j["seed"] = seed;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("parse error in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace aqc

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

#ifndef AQC_JSON_IO_HPP
#define AQC_JSON_IO_HPP

#include <string>

#include "aqc/algebras.hpp"
#include "aqc/channels.hpp"
#include "aqc/correctability.hpp"
#include "json.hpp"

namespace aqc {

using Json = nlohmann::json;

/// Complex numbers are serialized as [re, im]; matrices as row-major nested
/// arrays of such pairs.
Json matrix_to_json(const CMatrix& M);
CMatrix matrix_from_json(const Json& j);

/// {"dim_in": n, "dim_out": m, "kraus": [matrix, ...]} or a named channel
/// {"name": "...", "params": [...], "dim": n}.
Json channel_to_json(const Channel& N);
Channel channel_from_json(const Json& j);

/// {"ambient_dim": d, "blocks": [{"iso": matrix, "dA": n, "dB": m}, ...]}
/// or {"generators": [matrix, ...]} (structure recovered on load).
Json algebra_to_json(const AlgebraStructure& alg);
AlgebraStructure algebra_from_json(const Json& j);

/// {"d": k, "isometry": matrix}
Json code_to_json(const SubspaceCode& code);
SubspaceCode code_from_json(const Json& j);

Json report_to_json(const CorrectabilityReport& rep, std::uint64_t seed);

Json load_json_file(const std::string& path);

}  // namespace aqc

#endif  // AQC_JSON_IO_HPP

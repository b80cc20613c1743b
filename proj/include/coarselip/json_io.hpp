// Copyright 2026 The coarselip authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>

#include <json.hpp>

#include "coarselip/ml_iso.hpp"
#include "coarselip/scaling.hpp"

namespace coarselip {

using Json = nlohmann::json;

/// Values are JSON numbers, with the single string "inf" (no other
/// spelling) for infinity.
ExtReal ext_from_json(const Json& j);
Json ext_to_json(ExtReal v);

/// Space files: {"points": ["a", ...], "d": [[0, ...], ...]}.
struct SpaceParse {
  SpacePtr space;                   // null when errors is nonempty
  std::vector<std::string> errors;  // every problem found, not just the first
};
SpaceParse try_parse_space(const Json& j, double tol = kDefaultTol);
SpacePtr space_from_json(const Json& j, double tol = kDefaultTol);
Json space_to_json(const MetricSpace& space);
SpacePtr load_space(const std::filesystem::path& path, double tol = kDefaultTol);

/// Function files: {"space": <path or inline space>, "values": [...]}.
/// A relative space path resolves against the function file's directory.
LipFn function_from_json(const Json& j, const std::filesystem::path& base_dir,
                         double tol = kDefaultTol);
LipFn load_function(const std::filesystem::path& path, double tol = kDefaultTol);
Json function_to_json(const LipFn& f);

/// Map pair files: {"forward": [0, 2, ...], "backward": [...]} of point
/// indices into the respective codomains.
MapPair pair_from_json(const Json& j);
Json pair_to_json(const MapPair& pair);

/// Serializable oracles are exactly the lifted ones (optionally with a
/// shift): the pair of spaces plus the map pair pins the callables down.
/// The stored epsilon is recomputed on load and must agree.
struct OracleDescriptor {
  std::string kind;  // "lifted" or "perturbed-lifted"
  SpacePtr space_x;
  SpacePtr space_y;
  MapPair pair;
  double shift = 0.0;
};
OracleDescriptor oracle_from_json(const Json& j, const std::filesystem::path& base_dir,
                                  double tol = kDefaultTol);
Json oracle_to_json(const OracleDescriptor& desc);
OracleDescriptor load_oracle(const std::filesystem::path& path, double tol = kDefaultTol);
MlOracle build_oracle(const OracleDescriptor& desc);
ExtReal descriptor_epsilon(const OracleDescriptor& desc);

Json load_json(const std::filesystem::path& path);
void save_json(const Json& j, const std::filesystem::path& path);

/// Report serializations; every bound comparison appears as
/// {"measured": ..., "bound": ..., "ok": ...}.
Json defect_to_json(const IsometryDefect& d);
Json ml_report_to_json(const MlDefectReport& rep, double tol = kDefaultTol);
Json theorem2_to_json(const Theorem2Report& rep, const MetricSpace& X, const MetricSpace& Y);
Json scaling_report_to_json(const ScalingReport& rep);

}  // namespace coarselip

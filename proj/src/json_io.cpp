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

#include "coarselip/json_io.hpp"

#include <fstream>

namespace coarselip {

ExtReal ext_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtReal::infinity();
    throw std::invalid_argument("expected a number or \"inf\", got \"" +
                                j.get<std::string>() + "\"");
  }
  if (!j.is_number())
    throw std::invalid_argument("expected a number or \"inf\", got " + j.dump());
  double v = j.get<double>();
  if (std::isnan(v) || std::isinf(v))
    throw std::invalid_argument("non-finite numbers must be written as the string \"inf\"");
  if (v < 0.0) throw std::invalid_argument("value " + j.dump() + " is negative");
  return ExtReal(v);
}

Json ext_to_json(ExtReal v) {
  if (v.is_inf()) return Json("inf");
  return Json(v.finite());
}

SpaceParse try_parse_space(const Json& j, double tol) {
  SpaceParse out;
  if (!j.is_object() || !j.contains("points") || !j.contains("d")) {
    out.errors.push_back("a space is an object with \"points\" and \"d\" fields");
    return out;
  }
  const Json& pj = j["points"];
  const Json& dj = j["d"];
  if (!pj.is_array() || pj.empty()) {
    out.errors.push_back("\"points\" must be a nonempty array of labels");
    return out;
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    if (!pj[i].is_string()) {
      out.errors.push_back("point " + std::to_string(i) + " is not a string label");
      return out;
    }
    labels.push_back(pj[i].get<std::string>());
  }
  if (!dj.is_array()) {
    out.errors.push_back("\"d\" must be an array of rows");
    return out;
  }
  std::vector<std::vector<ExtReal>> dist(dj.size());
  for (std::size_t i = 0; i < dj.size(); ++i) {
    if (!dj[i].is_array()) {
      out.errors.push_back("row " + std::to_string(i) + " of \"d\" is not an array");
      continue;
    }
    for (std::size_t k = 0; k < dj[i].size(); ++k) {
      try {
        dist[i].push_back(ext_from_json(dj[i][k]));
      } catch (const std::exception& e) {
        out.errors.push_back("d[" + std::to_string(i) + "][" + std::to_string(k) +
                             "]: " + e.what());
        dist[i].push_back(ExtReal(0.0));  // placeholder, never validated
      }
    }
  }
  if (!out.errors.empty()) return out;

  ValidationOutcome v = MetricSpace::validate(std::move(labels), dist, tol);
  if (!v.ok()) {
    for (const MetricViolation& mv : v.violations) out.errors.push_back(mv.message);
    return out;
  }
  out.space = std::make_shared<const MetricSpace>(std::move(*v.space));
  return out;
}

SpacePtr space_from_json(const Json& j, double tol) {
  SpaceParse p = try_parse_space(j, tol);
  if (!p.space) {
    std::string msg = "invalid space:";
    for (const std::string& e : p.errors) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  return p.space;
}

Json space_to_json(const MetricSpace& space) {
  Json j;
  j["points"] = space.labels();
  Json rows = Json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < space.size(); ++k) row.push_back(ext_to_json(space.dist(i, k)));
    rows.push_back(std::move(row));
  }
  j["d"] = std::move(rows);
  return j;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument(path.string() + " is not valid JSON: " + e.what());
  }
  return j;
}

void save_json(const Json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

SpacePtr load_space(const std::filesystem::path& path, double tol) {
  try {
    return space_from_json(load_json(path), tol);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

namespace {

SpacePtr space_from_field(const Json& j, const std::filesystem::path& base_dir, double tol) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return load_space(p, tol);
  }
  return space_from_json(j, tol);
}

}  // namespace

LipFn function_from_json(const Json& j, const std::filesystem::path& base_dir, double tol) {
  if (!j.is_object() || !j.contains("space") || !j.contains("values"))
    throw std::invalid_argument("a function is an object with \"space\" and \"values\" fields");
  SpacePtr space = space_from_field(j["space"], base_dir, tol);
  const Json& vj = j["values"];
  if (!vj.is_array() || vj.size() != space->size())
    throw std::invalid_argument("\"values\" must list one value per point (" +
                                std::to_string(space->size()) + ")");
  std::vector<ExtReal> values;
  for (std::size_t i = 0; i < vj.size(); ++i) {
    try {
      values.push_back(ext_from_json(vj[i]));
    } catch (const std::exception& e) {
      throw std::invalid_argument("values[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return LipFn(std::move(space), std::move(values), tol);
}

LipFn load_function(const std::filesystem::path& path, double tol) {
  try {
    return function_from_json(load_json(path), path.parent_path(), tol);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

Json function_to_json(const LipFn& f) {
  Json j;
  j["space"] = space_to_json(f.space());
  Json values = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(ext_to_json(f[i]));
  j["values"] = std::move(values);
  return j;
}

MapPair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("forward") || !j.contains("backward"))
    throw std::invalid_argument("a map pair is an object with \"forward\" and \"backward\" fields");
  MapPair pair;
  for (const char* key : {"forward", "backward"}) {
    const Json& mj = j[key];
    if (!mj.is_array())
      throw std::invalid_argument(std::string("\"") + key + "\" must be an array of indices");
    auto& target = key[0] == 'f' ? pair.forward : pair.backward;
    for (const Json& e : mj) {
      if (!e.is_number_unsigned())
        throw std::invalid_argument(std::string("\"") + key +
                                    "\" entries must be point indices >= 0");
      target.push_back(e.get<std::size_t>());
    }
  }
  return pair;
}

Json pair_to_json(const MapPair& pair) {
  Json j;
  j["forward"] = pair.forward;
  j["backward"] = pair.backward;
  return j;
}

ExtReal descriptor_epsilon(const OracleDescriptor& desc) {
  IsometryDefect d = defect(desc.pair, *desc.space_x, *desc.space_y);
  return d.overall().scaled(4.0) + ExtReal(2.0 * desc.shift);
}

OracleDescriptor oracle_from_json(const Json& j, const std::filesystem::path& base_dir,
                                  double tol) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("space_x") ||
      !j.contains("space_y") || !j.contains("pair"))
    throw std::invalid_argument(
        "an oracle is an object with \"kind\", \"space_x\", \"space_y\" and \"pair\" fields");
  OracleDescriptor desc;
  desc.kind = j["kind"].get<std::string>();
  if (desc.kind != "lifted" && desc.kind != "perturbed-lifted")
    throw std::invalid_argument("only \"lifted\" and \"perturbed-lifted\" oracles have a file "
                                "form; got kind \"" +
                                desc.kind + "\"");
  desc.space_x = space_from_field(j["space_x"], base_dir, tol);
  desc.space_y = space_from_field(j["space_y"], base_dir, tol);
  desc.pair = pair_from_json(j["pair"]);
  if (desc.kind == "perturbed-lifted") {
    if (!j.contains("shift") || !j["shift"].is_number())
      throw std::invalid_argument("a perturbed-lifted oracle needs a numeric \"shift\"");
    desc.shift = j["shift"].get<double>();
    if (!(desc.shift >= 0.0) || std::isinf(desc.shift))
      throw std::invalid_argument("\"shift\" must be a finite value >= 0");
  }
  ExtReal eps = descriptor_epsilon(desc);  // also validates the pair shape
  if (j.contains("epsilon")) {
    ExtReal stored = ext_from_json(j["epsilon"]);
    if (ext_dist(stored, eps) > ExtReal(tol))
      throw std::invalid_argument("stored epsilon " + to_string(stored) +
                                  " does not match the pair (computed " + to_string(eps) +
                                  "); the descriptor is stale");
  }
  return desc;
}

Json oracle_to_json(const OracleDescriptor& desc) {
  Json j;
  j["kind"] = desc.kind;
  j["epsilon"] = ext_to_json(descriptor_epsilon(desc));
  j["space_x"] = space_to_json(*desc.space_x);
  j["space_y"] = space_to_json(*desc.space_y);
  j["pair"] = pair_to_json(desc.pair);
  if (desc.kind == "perturbed-lifted") j["shift"] = desc.shift;
  return j;
}

OracleDescriptor load_oracle(const std::filesystem::path& path, double tol) {
  try {
    return oracle_from_json(load_json(path), path.parent_path(), tol);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

MlOracle build_oracle(const OracleDescriptor& desc) {
  if (desc.kind == "perturbed-lifted")
    return lift_shifted(desc.pair, desc.space_x, desc.space_y, desc.shift);
  return lift(desc.pair, desc.space_x, desc.space_y);
}

Json defect_to_json(const IsometryDefect& d) {
  Json j;
  j["embed_fwd"] = ext_to_json(d.embed_fwd);
  j["embed_bwd"] = ext_to_json(d.embed_bwd);
  j["near_fwd"] = ext_to_json(d.near_fwd);
  j["near_bwd"] = ext_to_json(d.near_bwd);
  j["overall"] = ext_to_json(d.overall());
  j["surjectivity"] = {{"fwd", ext_to_json(d.surj_fwd)}, {"bwd", ext_to_json(d.surj_bwd)}};
  return j;
}

namespace {

Json bound_triple(ExtReal measured, ExtReal bound, bool ok) {
  Json j;
  j["measured"] = ext_to_json(measured);
  j["bound"] = ext_to_json(bound);
  j["ok"] = ok;
  return j;
}

Json entry_to_json(const DefectEntry& e, ExtReal bound, double tol) {
  Json j = bound_triple(e.measured, bound, e.measured <= bound + ExtReal(tol));
  if (!e.witness.empty()) j["witness"] = e.witness;
  return j;
}

Json bound_check_to_json(const BoundCheck& b) {
  Json j = bound_triple(b.measured, b.bound, b.ok);
  if (!b.witness.empty()) j["witness"] = b.witness;
  return j;
}

}  // namespace

Json ml_report_to_json(const MlDefectReport& rep, double tol) {
  Json j;
  j["epsilon"] = ext_to_json(rep.epsilon);
  j["iso_embed"] = entry_to_json(rep.iso_embed, rep.epsilon, tol);
  j["join"] = entry_to_json(rep.join_defect, rep.epsilon, tol);
  j["meet"] = entry_to_json(rep.meet_defect, rep.epsilon, tol);
  j["roundtrip_x"] = entry_to_json(rep.roundtrip_x, rep.epsilon, tol);
  j["roundtrip_y"] = entry_to_json(rep.roundtrip_y, rep.epsilon, tol);
  j["zero"] = entry_to_json(rep.zero_defect, rep.epsilon, tol);
  j["infinity"] = entry_to_json(rep.inf_defect, rep.epsilon, tol);
  j["monotone"] = entry_to_json(rep.monotone, rep.epsilon, tol);
  j["worst"] = ext_to_json(rep.worst());
  j["ok"] = rep.ok(tol);
  return j;
}

Json theorem2_to_json(const Theorem2Report& rep, const MetricSpace& X, const MetricSpace& Y) {
  Json j;
  j["epsilon"] = ext_to_json(rep.epsilon);
  Json pair = pair_to_json(rep.pair);
  Json fwd_labels = Json::array();
  for (std::size_t x = 0; x < rep.pair.forward.size(); ++x)
    fwd_labels.push_back(Y.label(rep.pair.forward[x]));
  Json bwd_labels = Json::array();
  for (std::size_t y = 0; y < rep.pair.backward.size(); ++y)
    bwd_labels.push_back(X.label(rep.pair.backward[y]));
  pair["forward_labels"] = std::move(fwd_labels);
  pair["backward_labels"] = std::move(bwd_labels);
  j["pair"] = std::move(pair);
  j["pair_defect"] = bound_check_to_json(rep.pair_defect);
  j["near_lift"] = bound_check_to_json(rep.near_lift);
  j["near_lift_sharper"] =
      bound_triple(rep.near_lift.measured, rep.near_lift_alt_bound, rep.near_lift_alt_ok);
  j["lambda_all_radii"] = bound_check_to_json(rep.lambda_all);
  j["lambda_large_radii"] = bound_check_to_json(rep.lambda_large);
  j["ok"] = rep.ok();
  return j;
}

Json scaling_report_to_json(const ScalingReport& rep) {
  Json j;
  j["family"] = rep.family;
  j["reference"] = rep.reference;
  Json levels = Json::array();
  for (const ScalingLevel& l : rep.levels) {
    Json lj;
    lj["n"] = l.n;
    lj["epsilon"] = ext_to_json(l.epsilon);
    lj["lift"] = bound_triple(l.ml.worst(), l.bound, l.ok);
    lj["ml"] = ml_report_to_json(l.ml);
    levels.push_back(std::move(lj));
  }
  j["levels"] = std::move(levels);
  j["monotone_ok"] = rep.monotone_ok;
  return j;
}

}  // namespace coarselip

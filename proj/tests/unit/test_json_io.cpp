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

#include <doctest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "coarselip/json_io.hpp"
#include "support/generators.hpp"

using namespace coarselip;
namespace fs = std::filesystem;

namespace {

SpacePtr gap2() {
  return MetricSpace::create_shared({"p", "q"}, {{ExtReal(0.0), ExtReal(2.0)},
                                                 {ExtReal(2.0), ExtReal(0.0)}});
}

SpacePtr split2() {
  return MetricSpace::create_shared({"p", "q"},
                                    {{ExtReal(0.0), ExtReal::infinity()},
                                     {ExtReal::infinity(), ExtReal(0.0)}});
}

// Fresh scratch directory, removed on destruction.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("coarselip_json_test_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("extended values serialize as numbers with a single inf spelling") {
  CHECK(ext_to_json(ExtReal(0.25)) == Json(0.25));
  CHECK(ext_to_json(ExtReal::infinity()) == Json("inf"));
  CHECK(ext_from_json(Json(0.25)) == ExtReal(0.25));
  CHECK(ext_from_json(Json("inf")) == ExtReal::infinity());

  CHECK_THROWS_AS(ext_from_json(Json("Infinity")), std::invalid_argument);
  CHECK_THROWS_AS(ext_from_json(Json("2.5")), std::invalid_argument);
  CHECK_THROWS_AS(ext_from_json(Json(-1.0)), std::invalid_argument);
  CHECK_THROWS_AS(ext_from_json(Json(std::numeric_limits<double>::infinity())),
                  std::invalid_argument);
  CHECK_THROWS_AS(ext_from_json(Json(nullptr)), std::invalid_argument);
  CHECK_THROWS_AS(ext_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("space parsing collects every problem before giving up") {
  Json j;
  j["points"] = {"a", "b"};
  j["d"] = {{"bogus", 1.0}, {1.0, "nope"}};
  SpaceParse p = try_parse_space(j);
  CHECK(!p.space);
  REQUIRE(p.errors.size() == 2);
  CHECK(p.errors[0].find("d[0][0]") != std::string::npos);
  CHECK(p.errors[1].find("d[1][1]") != std::string::npos);

  // Structurally sound but metrically broken: asymmetry, nonzero diagonal
  // and a triangle violation are all reported together.
  Json m;
  m["points"] = {"a", "b", "c"};
  m["d"] = {{0.0, 1.0, 9.0}, {2.0, 0.0, 1.0}, {9.0, 1.0, 0.5}};
  SpaceParse q = try_parse_space(m);
  CHECK(!q.space);
  CHECK(q.errors.size() >= 3);

  SpaceParse empty = try_parse_space(Json::object());
  CHECK(!empty.space);
  REQUIRE(empty.errors.size() == 1);
  CHECK(empty.errors[0].find("points") != std::string::npos);

  // space_from_json folds the error list into one exception.
  CHECK_THROWS_AS(space_from_json(m), std::invalid_argument);
}

TEST_CASE("spaces round trip through JSON, infinity included") {
  std::mt19937_64 rng(7);
  SpacePtr split = testgen::random_split_space(rng, 3, 5);
  Json j = space_to_json(*split);
  SpacePtr back = space_from_json(j);
  CHECK(same_space(*split, *back));

  // Cross-block distances are the literal string "inf" in the file form.
  std::size_t other = components(*split).block_of[0] == components(*split).block_of[1] ? 2 : 1;
  CHECK(j["d"][0][other] == Json("inf"));
}

TEST_CASE("functions round trip and reject malformed values") {
  SpacePtr S = split2();
  LipFn f(S, {ExtReal(0.015625), ExtReal::infinity()});
  Json j = function_to_json(f);
  LipFn back = function_from_json(j, ".");
  CHECK(back == f);
  // Dyadic values survive the text form bit for bit.
  CHECK(back[0] == ExtReal(0.015625));

  Json wrong = j;
  wrong["values"] = {0.0};
  CHECK_THROWS_WITH_AS(function_from_json(wrong, "."),
                       doctest::Contains("one value per point"), std::invalid_argument);
  wrong["values"] = {0.0, "oops"};
  CHECK_THROWS_WITH_AS(function_from_json(wrong, "."), doctest::Contains("values[1]"),
                       std::invalid_argument);
  CHECK_THROWS_AS(function_from_json(Json::object(), "."), std::invalid_argument);
}

TEST_CASE("function files may reference their space by relative path") {
  TempDir tmp;
  SpacePtr S = gap2();
  save_json(space_to_json(*S), tmp.path / "space.json");

  Json fj;
  fj["space"] = "space.json";
  fj["values"] = {1.0, 0.0};
  save_json(fj, tmp.path / "fn.json");

  LipFn f = load_function(tmp.path / "fn.json");
  CHECK(same_space(f.space(), *S));
  CHECK(f[0] == ExtReal(1.0));

  // Absolute references resolve regardless of the file's own directory.
  Json abs = fj;
  abs["space"] = (tmp.path / "space.json").string();
  save_json(abs, tmp.path / "fn_abs.json");
  CHECK(load_function(tmp.path / "fn_abs.json")[1] == ExtReal(0.0));
}

TEST_CASE("map pairs round trip and validate their entries") {
  MapPair pair{{0, 2, 1}, {2, 0}};
  MapPair back = pair_from_json(pair_to_json(pair));
  CHECK(back.forward == pair.forward);
  CHECK(back.backward == pair.backward);

  Json bad;
  bad["forward"] = {0, -1};
  bad["backward"] = Json::array();
  CHECK_THROWS_AS(pair_from_json(bad), std::invalid_argument);
  bad["forward"] = "0,1";
  CHECK_THROWS_AS(pair_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(pair_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("oracle descriptors round trip and reject stale epsilons") {
  TempDir tmp;
  OracleDescriptor desc;
  desc.kind = "perturbed-lifted";
  desc.space_x = gap2();
  desc.space_y = gap2();
  desc.pair = MapPair{{0, 1}, {0, 1}};
  desc.shift = 0.25;
  CHECK(descriptor_epsilon(desc) == ExtReal(0.5));

  Json j = oracle_to_json(desc);
  CHECK(j["epsilon"] == Json(0.5));
  OracleDescriptor back = oracle_from_json(j, tmp.path);
  CHECK(back.kind == desc.kind);
  CHECK(back.shift == desc.shift);
  CHECK(same_space(*back.space_x, *desc.space_x));
  CHECK(back.pair.forward == desc.pair.forward);

  MlOracle o = build_oracle(back);
  CHECK(o.epsilon == ExtReal(0.5));

  // An epsilon that no longer matches the stored pair marks a stale file.
  Json stale = j;
  stale["epsilon"] = 0.75;
  CHECK_THROWS_WITH_AS(oracle_from_json(stale, tmp.path), doctest::Contains("stale"),
                       std::invalid_argument);

  Json noshift = j;
  noshift.erase("shift");
  CHECK_THROWS_AS(oracle_from_json(noshift, tmp.path), std::invalid_argument);
  Json odd = j;
  odd["kind"] = "identity";
  CHECK_THROWS_AS(oracle_from_json(odd, tmp.path), std::invalid_argument);

  // Space fields may be file references too.
  save_json(space_to_json(*desc.space_x), tmp.path / "sx.json");
  Json byref = j;
  byref["space_x"] = "sx.json";
  CHECK(same_space(*oracle_from_json(byref, tmp.path).space_x, *desc.space_x));
}

TEST_CASE("report serializations expose measured, bound and ok triples") {
  SpacePtr S = gap2();
  MlOracle o = identity_oracle(S);
  MlCheckConfig cfg{1, 8, kDefaultTol};

  Json mj = ml_report_to_json(check_ml_defect(o, cfg));
  for (const char* key : {"iso_embed", "join", "meet", "roundtrip_x", "roundtrip_y", "zero",
                          "infinity", "monotone"}) {
    REQUIRE(mj.contains(key));
    CHECK(mj[key].contains("measured"));
    CHECK(mj[key].contains("bound"));
    CHECK(mj[key].contains("ok"));
  }
  CHECK(mj["ok"] == Json(true));
  CHECK(mj["worst"] == Json(0.0));

  Theorem2Report rep = verify_theorem2(o, cfg);
  Json tj = theorem2_to_json(rep, *S, *S);
  CHECK(tj["pair"]["forward_labels"] == Json({"p", "q"}));
  CHECK(tj["pair"]["backward_labels"] == Json({"p", "q"}));
  for (const char* key : {"pair_defect", "near_lift", "near_lift_sharper", "lambda_all_radii",
                          "lambda_large_radii"}) {
    REQUIRE(tj.contains(key));
    CHECK(tj[key].contains("measured"));
    CHECK(tj[key].contains("bound"));
    CHECK(tj[key].contains("ok"));
  }
  CHECK(tj["ok"] == Json(true));

  Json dj = defect_to_json(defect(MapPair{{0, 1}, {0, 1}}, *S, *S));
  CHECK(dj["overall"] == Json(0.0));
  CHECK(dj["surjectivity"].contains("fwd"));

  ScalingExperimentConfig scfg;
  scfg.levels = {2};
  scfg.reference = 4;
  Json sj = scaling_report_to_json(run_scaling_experiment(scfg, cfg));
  CHECK(sj["family"] == Json("path"));
  CHECK(sj["levels"][0]["lift"].contains("bound"));
  CHECK(sj["monotone_ok"] == Json(true));
}

TEST_CASE("json files save and load with honest errors") {
  TempDir tmp;
  Json j;
  j["k"] = {1, 2, 3};
  save_json(j, tmp.path / "x.json");
  CHECK(load_json(tmp.path / "x.json") == j);

  CHECK_THROWS_WITH_AS(load_json(tmp.path / "missing.json"), doctest::Contains("cannot open"),
                       std::invalid_argument);
  {
    std::ofstream bad(tmp.path / "bad.json");
    bad << "{ nope";
  }
  CHECK_THROWS_WITH_AS(load_json(tmp.path / "bad.json"),
                       doctest::Contains("not valid JSON"), std::invalid_argument);

  SpacePtr S = gap2();
  save_json(space_to_json(*S), tmp.path / "s.json");
  CHECK(same_space(*load_space(tmp.path / "s.json"), *S));
  // Load errors carry the offending path.
  CHECK_THROWS_WITH_AS(load_space(tmp.path / "bad.json"), doctest::Contains("bad.json"),
                       std::invalid_argument);
}

TEST_CASE("serialized reports are byte deterministic") {
  std::mt19937_64 rng(9);
  SpacePtr X = testgen::random_connected_space(rng, 3, 4);
  SpacePtr Y = testgen::random_connected_space(rng, 3, 4);
  MlOracle o = lift(testgen::random_pair_positive_defect(rng, *X, *Y), X, Y);
  MlCheckConfig cfg{3, 8, kDefaultTol};
  std::string once = ml_report_to_json(check_ml_defect(o, cfg)).dump(2);
  std::string twice = ml_report_to_json(check_ml_defect(o, cfg)).dump(2);
  CHECK(once == twice);
  CHECK(!once.empty());
}

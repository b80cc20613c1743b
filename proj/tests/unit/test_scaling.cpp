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

#include <limits>

#include "coarselip/scaling.hpp"
#include "support/generators.hpp"

using namespace coarselip;

namespace {

SpacePtr abc_line() {
  return MetricSpace::create_shared(
      {"a", "b", "c"}, {{ExtReal(0.0), ExtReal(1.0), ExtReal(3.0)},
                        {ExtReal(1.0), ExtReal(0.0), ExtReal(2.0)},
                        {ExtReal(3.0), ExtReal(2.0), ExtReal(0.0)}});
}

}  // namespace

TEST_CASE("scaling a function envelopes the pointwise multiple") {
  SpacePtr S = abc_line();
  LipFn f(S, {ExtReal(0.0), ExtReal(1.0), ExtReal(3.0)});
  // 2 * f = (0, 2, 6) is 2-Lipschitz but not 1-Lipschitz; the envelope
  // pulls the small values up to restore the slope bound.
  LipFn g = lipschitzized_scaling(f, 2.0);
  CHECK(g[0] == ExtReal(3.0));
  CHECK(g[1] == ExtReal(4.0));
  CHECK(g[2] == ExtReal(6.0));

  CHECK(lipschitzized_scaling(f, 1.0) == f);
  CHECK(lipschitzized_scaling(f, 0.0) == const_fn(S, ExtReal(0.0)));
  CHECK_THROWS_AS(lipschitzized_scaling(f, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(lipschitzized_scaling(f, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("scaling a contraction never exceeds the scaled values by much") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    SpacePtr S = testgen::random_connected_space(rng, 2, 5);
    LipFn f = random_lip_fn(S, rng);
    LipFn half = lipschitzized_scaling(f, 0.5);
    // A factor below 1 keeps the function Lipschitz, so the envelope is the
    // plain pointwise multiple.
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(half[i] == f[i].scaled(0.5));
  }
}

TEST_CASE("infinite values survive scaling on their component") {
  // Two unit segments at infinite distance; the a-segment carries infinity.
  SpacePtr S = make_family_space("path2", 1);
  LipFn f(S, {ExtReal::infinity(), ExtReal::infinity(), ExtReal(1.0), ExtReal(0.0)});
  LipFn g = lipschitzized_scaling(f, 2.0);
  CHECK(g[0] == ExtReal::infinity());
  CHECK(g[1] == ExtReal::infinity());
  // (2, 0) over a unit gap breaks the slope bound; b1 is pulled up to 1.
  CHECK(g[2] == ExtReal(2.0));
  CHECK(g[3] == ExtReal(1.0));
}

TEST_CASE("family spaces have the advertised shapes") {
  SpacePtr path = make_family_space("path", 4);
  CHECK(path->size() == 5);
  CHECK(path->label(0) == "x0");
  CHECK(path->label(4) == "x4");
  CHECK(path->dist(0, 4) == ExtReal(1.0));
  CHECK(path->dist(1, 2) == ExtReal(0.25));

  SpacePtr grid = make_family_space("grid", 2);
  CHECK(grid->size() == 9);
  CHECK(grid->label(0) == "g0_0");
  CHECK(grid->label(8) == "g2_2");
  // l1 metric: opposite corners are two unit sides apart.
  CHECK(grid->dist(0, 8) == ExtReal(2.0));
  CHECK(grid->dist(0, 1) == ExtReal(0.5));

  SpacePtr two = make_family_space("path2", 1);
  CHECK(two->size() == 4);
  CHECK(two->label(0) == "a0");
  CHECK(two->label(2) == "b0");
  CHECK(two->dist(0, 1) == ExtReal(1.0));
  CHECK(two->dist(0, 2) == ExtReal::infinity());
  CHECK(components(*two).blocks.size() == 2);

  CHECK_THROWS_AS(make_family_space("path", 0), std::invalid_argument);
  CHECK_THROWS_AS(make_family_space("ring", 3), std::invalid_argument);
}

TEST_CASE("rounding pairs round half indices away from zero") {
  MapPair p = rounding_pair("path", 2, 4);
  CHECK(p.forward == std::vector<std::size_t>{0, 2, 4});
  CHECK(p.backward == std::vector<std::size_t>{0, 1, 1, 2, 2});

  // Grid corners land on corners when the levels divide.
  MapPair g = rounding_pair("grid", 1, 2);
  CHECK(g.forward == std::vector<std::size_t>{0, 2, 6, 8});

  // The second block is offset by a full copy of the reference path.
  MapPair t = rounding_pair("path2", 1, 2);
  CHECK(t.forward == std::vector<std::size_t>{0, 2, 3, 5});
  CHECK(t.backward == std::vector<std::size_t>{0, 1, 1, 2, 3, 3});

  CHECK_THROWS_AS(rounding_pair("path", 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(rounding_pair("ring", 1, 2), std::invalid_argument);
}

TEST_CASE("scaling experiment: defects shrink as the path refines") {
  ScalingExperimentConfig cfg;
  cfg.family = "path";
  cfg.levels = {2, 4};
  cfg.reference = 8;
  ScalingReport rep = run_scaling_experiment(cfg, MlCheckConfig{1, 8, kDefaultTol});

  CHECK(rep.family == "path");
  CHECK(rep.reference == 8);
  REQUIRE(rep.levels.size() == 2);
  // Exact rounding defects: a half cell of the coarse spacing plus the
  // collapse of reference points sharing a rounded image.
  CHECK(rep.levels[0].n == 2);
  CHECK(rep.levels[0].epsilon == ExtReal(0.375));
  CHECK(rep.levels[0].bound == ExtReal(1.5));
  CHECK(rep.levels[1].n == 4);
  CHECK(rep.levels[1].epsilon == ExtReal(0.125));
  CHECK(rep.levels[1].bound == ExtReal(0.5));
  for (const ScalingLevel& level : rep.levels) {
    CHECK(level.ok);
    CHECK(level.ml.worst() <= level.bound + ExtReal(kDefaultTol));
  }
  CHECK(rep.monotone_ok);

  // Level order in the config does not affect the monotonicity verdict.
  cfg.levels = {4, 2};
  CHECK(run_scaling_experiment(cfg, MlCheckConfig{1, 8, kDefaultTol}).monotone_ok);
}

TEST_CASE("scaling experiment validates its configuration") {
  ScalingExperimentConfig cfg;
  cfg.family = "path";
  cfg.reference = 4;
  CHECK_THROWS_AS(run_scaling_experiment(cfg), std::invalid_argument);  // no levels
  cfg.levels = {0};
  CHECK_THROWS_AS(run_scaling_experiment(cfg), std::invalid_argument);
  cfg.levels = {8};
  CHECK_THROWS_AS(run_scaling_experiment(cfg), std::invalid_argument);  // above reference
  cfg.levels = {2};
  cfg.reference = 0;
  CHECK_THROWS_AS(run_scaling_experiment(cfg), std::invalid_argument);
}

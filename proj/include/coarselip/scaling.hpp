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

#include "coarselip/ml_iso.hpp"

namespace coarselip {

/// Scaling a function through the tent picture: the envelope of x -> ell *
/// f(x), i.e. the join of tents with scaled radii. ell = 1 returns f
/// unchanged; ell = 0 gives the constant 0 by convention (the limit of the
/// envelopes, sidestepping 0 * inf); other ell must be finite.
LipFn lipschitzized_scaling(const LipFn& f, double ell);

/// Discretizations used by the scaling experiment. "path": n+1 points on a
/// unit segment at spacing 1/n. "grid": the (n+1) x (n+1) unit grid with
/// the l1 metric. "path2": two unit segments at infinite distance.
SpacePtr make_family_space(const std::string& family, std::size_t n);

/// Index-rounding maps between the level-n and level-N discretizations of
/// the same family (N a multiple of n for exactness in one direction;
/// general N is allowed). Half-integers round away from zero.
MapPair rounding_pair(const std::string& family, std::size_t n, std::size_t N);

struct ScalingLevel {
  std::size_t n;
  ExtReal epsilon;      // exact defect of the rounding pair
  ExtReal bound;        // 4 * epsilon, the lift's declared quality
  MlDefectReport ml;    // measured lattice defects of the lift
  bool ok;              // ml.worst() <= bound (+ tol)
};

struct ScalingExperimentConfig {
  std::string family = "path";
  std::vector<std::size_t> levels;
  std::size_t reference = 0;
};

struct ScalingReport {
  std::string family;
  std::size_t reference;
  std::vector<ScalingLevel> levels;
  bool monotone_ok;  // epsilon does not increase as the level refines
};

/// For each level n, builds the rounding pair into the reference
/// discretization, lifts it, and measures the lattice defects against the
/// 4 * epsilon_n bound. Finer levels must not have larger epsilon (up to
/// tol), which is the finite shadow of scaling convergence.
ScalingReport run_scaling_experiment(const ScalingExperimentConfig& cfg,
                                     const MlCheckConfig& mlcfg = {});

}  // namespace coarselip

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

#include <stdexcept>
#include <vector>

#include "coarselip/metric_space.hpp"

namespace coarselip {

/// A pair of maps eta: X -> Y and eta': Y -> X, stored as index vectors
/// (forward[x] is the image of point x).
struct MapPair {
  std::vector<std::size_t> forward;
  std::vector<std::size_t> backward;
};

/// How far a map pair is from an exact isometry pair. The overall defect is
/// the max of the four quality terms; the surjectivity radii are reported
/// for diagnostics but by design do not enter the overall value (they are
/// implied: every point of Y is within near_bwd of the forward image).
struct IsometryDefect {
  ExtReal embed_fwd;  // sup |d_Y(eta x1, eta x2) - d_X(x1, x2)|
  ExtReal embed_bwd;  // sup |d_X(eta' y1, eta' y2) - d_Y(y1, y2)|
  ExtReal near_fwd;   // sup d_X(eta'(eta x), x)
  ExtReal near_bwd;   // sup d_Y(eta(eta' y), y)
  ExtReal surj_fwd;   // sup_y min_x d_Y(eta x, y)
  ExtReal surj_bwd;   // sup_x min_y d_X(eta' y, x)
  ExtReal overall() const {
    return max(max(embed_fwd, embed_bwd), max(near_fwd, near_bwd));
  }
};

/// Sup distance between two maps into `target`, given as index vectors.
ExtReal nearness(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                 const MetricSpace& target);

IsometryDefect defect(const MapPair& pair, const MetricSpace& X, const MetricSpace& Y);

/// The spaces are larger than the exhaustive search budget allows.
struct SearchBudgetError : std::runtime_error {
  SearchBudgetError(std::size_t size_x, std::size_t size_y, std::size_t budget);
  std::size_t size_x;
  std::size_t size_y;
  std::size_t budget;
};

struct RoughDistance {
  ExtReal epsilon;  // exact minimal overall defect; inf when no pair is finite
  MapPair witness;  // lexicographically first minimizer (forward-major)
};

/// Exact rough distance between two finite spaces by branch-and-bound over
/// all map pairs in lexicographic order. Both sizes must be <= budget.
RoughDistance rough_distance_exact(const MetricSpace& X, const MetricSpace& Y,
                                   std::size_t budget = 5);

}  // namespace coarselip

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

// Seeded generators shared by the unit and acceptance suites. Every distance
// and function value produced here is a multiple of 1/64 in a small range, so
// the piecewise-linear arithmetic downstream (envelopes, tent distances,
// defects) is exact in doubles and "equal" assertions are meaningful.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "coarselip/rough_iso.hpp"
#include "coarselip/sampling.hpp"

namespace coarselip::testgen {

// Symmetric dyadic entries in [1/16, 4], then min-plus closure to repair the
// triangle inequality. Closure only replaces entries by sums of other
// entries, so everything stays a positive multiple of 1/64.
inline std::vector<std::vector<ExtReal>> dyadic_matrix(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = random_dyadic(rng, 0.0625, 4.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::vector<std::vector<ExtReal>> out(n, std::vector<ExtReal>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = ExtReal(d[i][j]);
  return out;
}

inline SpacePtr random_connected_space(std::mt19937_64& rng, std::size_t min_pts,
                                       std::size_t max_pts) {
  const std::size_t n = min_pts + pick(rng, max_pts - min_pts + 1);
  return MetricSpace::create_shared(MetricSpace::auto_labels(n), dyadic_matrix(rng, n));
}

// Two connected blocks at infinite distance from each other.
inline SpacePtr random_split_space(std::mt19937_64& rng, std::size_t min_pts,
                                   std::size_t max_pts) {
  const std::size_t n = std::max<std::size_t>(2, min_pts + pick(rng, max_pts - min_pts + 1));
  const std::size_t a = 1 + pick(rng, n - 1);
  auto da = dyadic_matrix(rng, a);
  auto db = dyadic_matrix(rng, n - a);
  std::vector<std::vector<ExtReal>> d(n, std::vector<ExtReal>(n, ExtReal::infinity()));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) d[i][j] = da[i][j];
  for (std::size_t i = a; i < n; ++i)
    for (std::size_t j = a; j < n; ++j) d[i][j] = db[i - a][j - a];
  return MetricSpace::create_shared(MetricSpace::auto_labels(n), d);
}

// Random lattice member; with infinity injected on one whole component every
// fourth draw or so (constant infinity on a block is 1-Lipschitz because
// other blocks sit at infinite distance).
inline LipFn random_fn_maybe_inf(const SpacePtr& space, std::mt19937_64& rng) {
  LipFn f = random_lip_fn(space, rng);
  if (pick(rng, 4) != 0) return f;
  ComponentPartition part = components(*space);
  std::vector<ExtReal> values = f.values();
  for (std::size_t i : part.blocks[pick(rng, part.blocks.size())]) values[i] = ExtReal::infinity();
  return LipFn(space, std::move(values));
}

inline MapPair random_map_pair(std::mt19937_64& rng, std::size_t nx, std::size_t ny) {
  MapPair pair;
  for (std::size_t i = 0; i < nx; ++i) pair.forward.push_back(pick(rng, ny));
  for (std::size_t j = 0; j < ny; ++j) pair.backward.push_back(pick(rng, nx));
  return pair;
}

// A pair with 0 < defect < infinity; guaranteed to exist between connected
// spaces unless both are a single point.
inline MapPair random_pair_positive_defect(std::mt19937_64& rng, const MetricSpace& X,
                                           const MetricSpace& Y) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    MapPair pair = random_map_pair(rng, X.size(), Y.size());
    ExtReal e = defect(pair, X, Y).overall();
    if (e > ExtReal(0.0) && e.is_finite()) return pair;
  }
  throw std::logic_error("random_pair_positive_defect: no imperfect pair found");
}

// n points in a row at unit spacing.
inline SpacePtr unit_path(std::size_t n) {
  std::vector<std::vector<ExtReal>> d(n, std::vector<ExtReal>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = ExtReal(double(i > j ? i - j : j - i));
  return MetricSpace::create_shared(MetricSpace::auto_labels(n), d);
}

// Two copies of a random block with d((b,s),(c,t)) = d(b,c) + gap*[s != t].
// Swapping the copies is always a nontrivial isometry.
inline SpacePtr doubled_space(std::mt19937_64& rng, std::size_t block_pts, double gap) {
  auto base = dyadic_matrix(rng, block_pts);
  const std::size_t n = 2 * block_pts;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < block_pts; ++i) labels.push_back("u" + std::to_string(i));
  for (std::size_t i = 0; i < block_pts; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::vector<ExtReal>> d(n, std::vector<ExtReal>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double cross = (i < block_pts) != (j < block_pts) ? gap : 0.0;
      d[i][j] = base[i % block_pts][j % block_pts] + ExtReal(cross);
    }
  }
  return MetricSpace::create_shared(std::move(labels), d);
}

// Every self-isometry of a space, found by brute force over permutations;
// meant for spaces of at most 7 points or so.
inline std::vector<MapPair> exact_isometries(const MetricSpace& space) {
  std::vector<std::size_t> perm(space.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<MapPair> found;
  do {
    std::vector<std::size_t> inverse(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
    MapPair pair{perm, inverse};
    if (defect(pair, space, space).overall() == ExtReal(0.0)) found.push_back(std::move(pair));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace coarselip::testgen

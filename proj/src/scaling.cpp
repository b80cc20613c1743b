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

#include "coarselip/scaling.hpp"

#include <algorithm>
#include <cmath>

namespace coarselip {

LipFn lipschitzized_scaling(const LipFn& f, double ell) {
  if (!(ell >= 0.0) || std::isinf(ell) || std::isnan(ell))
    throw std::invalid_argument("lipschitzized_scaling: factor must be a finite value >= 0");
  if (ell == 1.0) return f;
  if (ell == 0.0) return const_fn(f.space_ptr(), ExtReal(0.0));
  std::vector<ExtReal> raw;
  raw.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) raw.push_back(f[i].scaled(ell));
  return envelope(f.space_ptr(), raw);
}

namespace {

SpacePtr make_path(std::size_t n, const std::string& prefix) {
  const std::size_t m = n + 1;
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) labels.push_back(prefix + std::to_string(i));
  std::vector<std::vector<ExtReal>> d(m, std::vector<ExtReal>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      d[i][j] = ExtReal(std::abs(double(i) - double(j)) / double(n));
  return MetricSpace::create_shared(std::move(labels), d);
}

}  // namespace

SpacePtr make_family_space(const std::string& family, std::size_t n) {
  if (n == 0) throw std::invalid_argument("make_family_space: level must be >= 1");
  if (family == "path") return make_path(n, "x");
  if (family == "grid") {
    const std::size_t m = n + 1;
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> coords;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        labels.push_back("g" + std::to_string(i) + "_" + std::to_string(j));
        coords.emplace_back(i, j);
      }
    }
    std::vector<std::vector<ExtReal>> d(coords.size(), std::vector<ExtReal>(coords.size()));
    for (std::size_t a = 0; a < coords.size(); ++a) {
      for (std::size_t b = 0; b < coords.size(); ++b) {
        double di = std::abs(double(coords[a].first) - double(coords[b].first));
        double dj = std::abs(double(coords[a].second) - double(coords[b].second));
        d[a][b] = ExtReal((di + dj) / double(n));
      }
    }
    return MetricSpace::create_shared(std::move(labels), d);
  }
  if (family == "path2") {
    const std::size_t m = n + 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < m; ++i) labels.push_back("b" + std::to_string(i));
    std::vector<std::vector<ExtReal>> d(2 * m, std::vector<ExtReal>(2 * m));
    for (std::size_t a = 0; a < 2 * m; ++a) {
      for (std::size_t b = 0; b < 2 * m; ++b) {
        if ((a < m) != (b < m)) {
          d[a][b] = ExtReal::infinity();
        } else {
          d[a][b] = ExtReal(std::abs(double(a % m) - double(b % m)) / double(n));
        }
      }
    }
    return MetricSpace::create_shared(std::move(labels), d);
  }
  throw std::invalid_argument("make_family_space: unknown family \"" + family +
                              "\" (expected path, grid, or path2)");
}

namespace {

std::size_t round_index(std::size_t i, std::size_t from, std::size_t to) {
  // round(i * to / from), halves away from zero; exact when from | to.
  return static_cast<std::size_t>(std::llround(double(i) * double(to) / double(from)));
}

}  // namespace

MapPair rounding_pair(const std::string& family, std::size_t n, std::size_t N) {
  if (n == 0 || N == 0) throw std::invalid_argument("rounding_pair: levels must be >= 1");
  MapPair pair;
  if (family == "path") {
    for (std::size_t i = 0; i <= n; ++i) pair.forward.push_back(round_index(i, n, N));
    for (std::size_t j = 0; j <= N; ++j) pair.backward.push_back(round_index(j, N, n));
    return pair;
  }
  if (family == "grid") {
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j)
        pair.forward.push_back(round_index(i, n, N) * (N + 1) + round_index(j, n, N));
    for (std::size_t i = 0; i <= N; ++i)
      for (std::size_t j = 0; j <= N; ++j)
        pair.backward.push_back(round_index(i, N, n) * (n + 1) + round_index(j, N, n));
    return pair;
  }
  if (family == "path2") {
    for (std::size_t i = 0; i <= n; ++i) pair.forward.push_back(round_index(i, n, N));
    for (std::size_t i = 0; i <= n; ++i) pair.forward.push_back(N + 1 + round_index(i, n, N));
    for (std::size_t j = 0; j <= N; ++j) pair.backward.push_back(round_index(j, N, n));
    for (std::size_t j = 0; j <= N; ++j) pair.backward.push_back(n + 1 + round_index(j, N, n));
    return pair;
  }
  throw std::invalid_argument("rounding_pair: unknown family \"" + family + "\"");
}

ScalingReport run_scaling_experiment(const ScalingExperimentConfig& cfg,
                                     const MlCheckConfig& mlcfg) {
  if (cfg.levels.empty())
    throw std::invalid_argument("run_scaling_experiment: no levels given");
  if (cfg.reference == 0)
    throw std::invalid_argument("run_scaling_experiment: reference level must be >= 1");
  for (std::size_t n : cfg.levels)
    if (n == 0 || n > cfg.reference)
      throw std::invalid_argument(
          "run_scaling_experiment: levels must be between 1 and the reference level");

  ScalingReport rep;
  rep.family = cfg.family;
  rep.reference = cfg.reference;
  SpacePtr ref = make_family_space(cfg.family, cfg.reference);

  for (std::size_t n : cfg.levels) {
    SpacePtr coarse = make_family_space(cfg.family, n);
    MapPair pair = rounding_pair(cfg.family, n, cfg.reference);
    IsometryDefect dft = defect(pair, *coarse, *ref);
    ScalingLevel level;
    level.n = n;
    level.epsilon = dft.overall();
    level.bound = level.epsilon.scaled(4.0);
    MlOracle oracle = lift(pair, coarse, ref);
    level.ml = check_ml_defect(oracle, mlcfg);
    level.ok = level.ml.worst() <= level.bound + ExtReal(mlcfg.tol);
    rep.levels.push_back(std::move(level));
  }

  // Convergence shadow: refining the level must not worsen the defect.
  rep.monotone_ok = true;
  std::vector<std::pair<std::size_t, ExtReal>> by_level;
  for (const ScalingLevel& l : rep.levels) by_level.emplace_back(l.n, l.epsilon);
  std::sort(by_level.begin(), by_level.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < by_level.size(); ++i) {
    if (!(by_level[i].second <= by_level[i - 1].second + ExtReal(mlcfg.tol)))
      rep.monotone_ok = false;
  }
  return rep;
}

}  // namespace coarselip

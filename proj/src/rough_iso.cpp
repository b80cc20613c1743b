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

#include "coarselip/rough_iso.hpp"

namespace coarselip {

namespace {

void check_map(const std::vector<std::size_t>& map, std::size_t domain, std::size_t codomain,
               const char* name) {
  if (map.size() != domain)
    throw std::invalid_argument(std::string("defect: ") + name + " covers " +
                                std::to_string(map.size()) + " points, domain has " +
                                std::to_string(domain));
  for (std::size_t v : map)
    if (v >= codomain)
      throw std::invalid_argument(std::string("defect: ") + name + " hits point index " +
                                  std::to_string(v) + " outside a codomain of " +
                                  std::to_string(codomain) + " points");
}

}  // namespace

ExtReal nearness(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                 const MetricSpace& target) {
  if (a.size() != b.size())
    throw std::invalid_argument("nearness: maps have different domains");
  ExtReal worst(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= target.size() || b[i] >= target.size())
      throw std::invalid_argument("nearness: image index out of range");
    worst = max(worst, target.dist(a[i], b[i]));
  }
  return worst;
}

IsometryDefect defect(const MapPair& pair, const MetricSpace& X, const MetricSpace& Y) {
  check_map(pair.forward, X.size(), Y.size(), "forward map");
  check_map(pair.backward, Y.size(), X.size(), "backward map");
  IsometryDefect d{ExtReal(0.0), ExtReal(0.0), ExtReal(0.0),
                   ExtReal(0.0), ExtReal(0.0), ExtReal(0.0)};
  const std::size_t nx = X.size();
  const std::size_t ny = Y.size();
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = i + 1; j < nx; ++j)
      d.embed_fwd = max(d.embed_fwd,
                        ext_dist(Y.dist(pair.forward[i], pair.forward[j]), X.dist(i, j)));
  for (std::size_t i = 0; i < ny; ++i)
    for (std::size_t j = i + 1; j < ny; ++j)
      d.embed_bwd = max(d.embed_bwd,
                        ext_dist(X.dist(pair.backward[i], pair.backward[j]), Y.dist(i, j)));
  for (std::size_t x = 0; x < nx; ++x)
    d.near_fwd = max(d.near_fwd, X.dist(pair.backward[pair.forward[x]], x));
  for (std::size_t y = 0; y < ny; ++y)
    d.near_bwd = max(d.near_bwd, Y.dist(pair.forward[pair.backward[y]], y));
  for (std::size_t y = 0; y < ny; ++y) {
    ExtReal nearest = ExtReal::infinity();
    for (std::size_t x = 0; x < nx; ++x) nearest = min(nearest, Y.dist(pair.forward[x], y));
    d.surj_fwd = max(d.surj_fwd, nearest);
  }
  for (std::size_t x = 0; x < nx; ++x) {
    ExtReal nearest = ExtReal::infinity();
    for (std::size_t y = 0; y < ny; ++y) nearest = min(nearest, X.dist(pair.backward[y], x));
    d.surj_bwd = max(d.surj_bwd, nearest);
  }
  return d;
}

SearchBudgetError::SearchBudgetError(std::size_t sx, std::size_t sy, std::size_t b)
    : std::runtime_error("rough_distance_exact: space sizes " + std::to_string(sx) + " and " +
                         std::to_string(sy) + " exceed the search budget " + std::to_string(b) +
                         "; the search is exponential, raise the budget explicitly to proceed"),
      size_x(sx),
      size_y(sy),
      budget(b) {}

namespace {

// Branch-and-bound state for the exhaustive search. Slots are filled in a
// fixed order (all forward images, then all backward images), and the
// running defect only grows as slots fill, so any prefix at or above the
// incumbent can be cut. Strict improvement keeps the lexicographically
// first minimizer.
struct Search {
  const MetricSpace& X;
  const MetricSpace& Y;
  std::vector<std::size_t> fwd;
  std::vector<std::size_t> bwd;
  ExtReal best_eps = ExtReal::infinity();
  MapPair best;

  Search(const MetricSpace& x, const MetricSpace& y)
      : X(x), Y(y), fwd(x.size(), 0), bwd(y.size(), 0) {
    best.forward.assign(X.size(), 0);
    best.backward.assign(Y.size(), 0);
  }

  void run() { fill_forward(0, ExtReal(0.0)); }

  void fill_forward(std::size_t x, ExtReal partial) {
    if (x == fwd.size()) {
      fill_backward(0, partial);
      return;
    }
    for (std::size_t img = 0; img < Y.size(); ++img) {
      fwd[x] = img;
      ExtReal acc = partial;
      for (std::size_t j = 0; j < x && acc < best_eps; ++j)
        acc = max(acc, ext_dist(Y.dist(img, fwd[j]), X.dist(x, j)));
      if (acc < best_eps) fill_forward(x + 1, acc);
    }
  }

  void fill_backward(std::size_t y, ExtReal partial) {
    if (y == bwd.size()) {
      // partial now equals the overall defect of (fwd, bwd).
      if (partial < best_eps) {
        best_eps = partial;
        best.forward = fwd;
        best.backward = bwd;
      }
      return;
    }
    for (std::size_t img = 0; img < X.size(); ++img) {
      bwd[y] = img;
      ExtReal acc = partial;
      for (std::size_t j = 0; j < y && acc < best_eps; ++j)
        acc = max(acc, ext_dist(X.dist(img, bwd[j]), Y.dist(y, j)));
      // Closing the roundtrip terms that become determined by this slot:
      // eta'(eta x) for every x mapping onto y, and eta(eta' y) itself.
      if (acc < best_eps) acc = max(acc, Y.dist(fwd[img], y));
      for (std::size_t x = 0; x < fwd.size() && acc < best_eps; ++x)
        if (fwd[x] == y) acc = max(acc, X.dist(img, x));
      if (acc < best_eps) fill_backward(y + 1, acc);
    }
  }
};

}  // namespace

RoughDistance rough_distance_exact(const MetricSpace& X, const MetricSpace& Y,
                                   std::size_t budget) {
  if (X.size() > budget || Y.size() > budget)
    throw SearchBudgetError(X.size(), Y.size(), budget);
  Search s(X, Y);
  s.run();
  return RoughDistance{s.best_eps, std::move(s.best)};
}

}  // namespace coarselip

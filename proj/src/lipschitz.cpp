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

#include "coarselip/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace coarselip {

namespace {

void require_index(const MetricSpace& space, std::size_t i, const char* what) {
  if (i >= space.size()) {
    throw std::invalid_argument(std::string(what) + ": point index " + std::to_string(i) +
                                " out of range for a space of " + std::to_string(space.size()) +
                                " points");
  }
}

void require_same_space(const LipFn& f, const MetricSpace& space, const char* what) {
  if (!same_space(f.space(), space))
    throw std::invalid_argument(std::string(what) + ": function lives on a different space");
}

// K * d with the convention K * inf = inf for every K >= 0, so a pair at
// infinite distance never constrains.
ExtReal scale_dist(double K, ExtReal d) {
  if (d.is_inf()) return ExtReal::infinity();
  return ExtReal(K * d.finite());
}

}  // namespace

ExtReal lipschitz_excess(const MetricSpace& space, std::span<const ExtReal> values, double K) {
  if (!(K >= 0.0) || std::isnan(K))
    throw std::invalid_argument("lipschitz_excess: constant K must be >= 0");
  if (values.size() != space.size())
    throw std::invalid_argument("lipschitz_excess: value count does not match the space");
  ExtReal worst(0.0);
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      worst = max(worst, excess(values[x], scale_dist(K, space.dist(x, y)) + values[y]));
    }
  }
  return worst;
}

bool is_k_eps_lipschitz(const MetricSpace& space, std::span<const ExtReal> values, double K,
                        double eps) {
  if (!(eps >= 0.0) || std::isnan(eps))
    throw std::invalid_argument("is_k_eps_lipschitz: eps must be >= 0");
  return lipschitz_excess(space, values, K) <= ExtReal(eps);
}

LipFn::LipFn(SpacePtr space, std::vector<ExtReal> values, double tol)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw std::invalid_argument("LipFn: null space");
  if (values_.size() != space_->size())
    throw std::invalid_argument("LipFn: value count does not match the space");
  ExtReal ex = lipschitz_excess(*space_, values_, 1.0);
  if (!(ex <= ExtReal(tol))) {
    std::ostringstream msg;
    msg << "LipFn: values violate the 1-Lipschitz condition by " << to_string(ex);
    throw std::invalid_argument(msg.str());
  }
}

LipFn const_fn(SpacePtr space, ExtReal v) {
  if (!space) throw std::invalid_argument("const_fn: null space");
  std::vector<ExtReal> values(space->size(), v);
  return LipFn(std::move(space), std::move(values));
}

LipFn meet(SpacePtr space, std::span<const LipFn> family) {
  if (!space) throw std::invalid_argument("meet: null space");
  // Empty meet is the top of the lattice.
  std::vector<ExtReal> values(space->size(), ExtReal::infinity());
  for (const LipFn& f : family) {
    require_same_space(f, *space, "meet");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = min(values[i], f[i]);
  }
  return LipFn(std::move(space), std::move(values));
}

LipFn join(SpacePtr space, std::span<const LipFn> family) {
  if (!space) throw std::invalid_argument("join: null space");
  // Empty join is the bottom of the lattice.
  std::vector<ExtReal> values(space->size(), ExtReal(0.0));
  for (const LipFn& f : family) {
    require_same_space(f, *space, "join");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = max(values[i], f[i]);
  }
  return LipFn(std::move(space), std::move(values));
}

ExtReal sup_dist(const LipFn& f, const LipFn& g) {
  if (!same_space(f.space(), g.space()))
    throw std::invalid_argument("sup_dist: functions live on different spaces");
  ExtReal worst(0.0);
  for (std::size_t i = 0; i < f.size(); ++i) worst = max(worst, ext_dist(f[i], g[i]));
  return worst;
}

LipFn lambda_realize(SpacePtr space, std::size_t center, ExtReal radius) {
  if (!space) throw std::invalid_argument("lambda_realize: null space");
  require_index(*space, center, "lambda_realize");
  std::vector<ExtReal> values(space->size());
  // (radius - d)+ in the extended sense: excess covers radius = inf, where
  // the tent is inf on the center's component and 0 elsewhere.
  for (std::size_t y = 0; y < values.size(); ++y)
    values[y] = excess(radius, space->dist(center, y));
  return LipFn(std::move(space), std::move(values));
}

ExtReal lambda_dist_closed(const MetricSpace& space, std::size_t x, ExtReal r, std::size_t y,
                           ExtReal s) {
  require_index(space, x, "lambda_dist_closed");
  require_index(space, y, "lambda_dist_closed");
  const ExtReal d = space.dist(x, y);
  const ExtReal m = min(r, s);
  if (d >= m) return max(r, s);
  if (m.is_inf()) return ExtReal(0.0);  // d < inf = both radii
  return ext_dist(r, s) + d;
}

std::vector<LambdaFn> lambda_decompose(const LipFn& f) {
  std::vector<LambdaFn> parts;
  parts.reserve(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) parts.push_back({x, f[x]});
  return parts;
}

LipFn envelope(SpacePtr space, std::span<const ExtReal> raw, double tol) {
  if (!space) throw std::invalid_argument("envelope: null space");
  if (raw.size() != space->size())
    throw std::invalid_argument("envelope: value count does not match the space");
  const std::size_t n = space->size();
  std::vector<ExtReal> values(n, ExtReal(0.0));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      values[y] = max(values[y], excess(raw[x], space->dist(x, y)));
  return LipFn(std::move(space), std::move(values), tol);
}

LipFn lipschitzise(SpacePtr space, std::span<const ExtReal> raw, double eps, double tol) {
  if (!space) throw std::invalid_argument("lipschitzise: null space");
  if (!(eps >= 0.0) || std::isnan(eps))
    throw std::invalid_argument("lipschitzise: eps must be >= 0");
  ExtReal ex = lipschitz_excess(*space, raw, 1.0);
  if (!(ex <= ExtReal(eps + tol))) {
    std::ostringstream msg;
    msg << "lipschitzise: data is not (1, " << eps << ")-Lipschitz; measured excess "
        << to_string(ex);
    throw std::invalid_argument(msg.str());
  }
  return envelope(std::move(space), raw, tol);
}

namespace {

// sup_dist(tent(y, s), g) for one center, evaluated directly.
ExtReal lambda_objective(const MetricSpace& space, const std::vector<ExtReal>& g, std::size_t y,
                         ExtReal s) {
  ExtReal worst(0.0);
  for (std::size_t z = 0; z < g.size(); ++z)
    worst = max(worst, ext_dist(excess(s, space.dist(y, z)), g[z]));
  return worst;
}

}  // namespace

NearestLambda nearest_lambda(const LipFn& g) {
  const MetricSpace& space = g.space();
  const std::size_t n = g.size();
  const std::vector<ExtReal>& gv = g.values();
  bool g_has_inf = false;
  for (const ExtReal& v : gv) g_has_inf = g_has_inf || v.is_inf();

  NearestLambda best{0, ExtReal(0.0), lambda_objective(space, gv, 0, ExtReal(0.0))};

  std::vector<double> cand;
  for (std::size_t y = 0; y < n; ++y) {
    ExtReal center_val = ExtReal::infinity();
    ExtReal center_radius(0.0);
    bool have = false;

    // Finite radii: each term |tent(y,s)(z) - g(z)| is piecewise linear in s
    // with kinks at d(y,z) and d(y,z) + g(z); minima of the max lie on those
    // kinks or on crossings of a rising and a falling piece. Any infinite
    // value in g puts every finite-radius tent at distance inf, so only the
    // trivial s = 0 candidate is scored then.
    cand.clear();
    cand.push_back(0.0);
    if (!g_has_inf) {
      std::vector<double> shoulder;  // d(y,z) + g(z) over finite distances
      for (std::size_t z = 0; z < n; ++z) {
        ExtReal d = space.dist(y, z);
        if (d.is_inf()) continue;  // the term is the constant g(z): no kinks
        cand.push_back(d.finite());
        shoulder.push_back(d.finite() + gv[z].finite());
      }
      cand.insert(cand.end(), shoulder.begin(), shoulder.end());
      for (std::size_t a = 0; a < shoulder.size(); ++a)
        for (std::size_t b = a + 1; b < shoulder.size(); ++b)
          cand.push_back((shoulder[a] + shoulder[b]) / 2.0);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    for (double s : cand) {
      ExtReal v = lambda_objective(space, gv, y, ExtReal(s));
      if (!have || v < center_val) {
        center_val = v;
        center_radius = ExtReal(s);
        have = true;
      }
    }
    {
      // s = inf, evaluated last so a finite radius wins ties.
      ExtReal v = lambda_objective(space, gv, y, ExtReal::infinity());
      if (!have || v < center_val) {
        center_val = v;
        center_radius = ExtReal::infinity();
      }
    }

    // Strict improvement keeps the lowest center index on ties.
    if (center_val < best.distance) best = {y, center_radius, center_val};
  }
  return best;
}

std::optional<LambdaFn> is_finite_lambda(const LipFn& f, double tol) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] > f[arg]) arg = i;
  if (f[arg].is_inf()) return std::nullopt;
  LipFn tent = lambda_realize(f.space_ptr(), arg, f[arg]);
  if (sup_dist(tent, f) <= ExtReal(tol)) return LambdaFn{arg, f[arg]};
  return std::nullopt;
}

std::optional<std::size_t> lambda_irreducibility_witness(SpacePtr space, const LambdaFn& p,
                                                         std::span<const LipFn> family,
                                                         ExtReal R, double delta) {
  if (!space) throw std::invalid_argument("lambda_irreducibility_witness: null space");
  if (p.radius.is_inf())
    throw std::invalid_argument(
        "lambda_irreducibility_witness: only finite tents are join-irreducible");
  if (!(delta >= 0.0) || std::isnan(delta))
    throw std::invalid_argument("lambda_irreducibility_witness: delta must be >= 0");
  require_index(*space, p.center, "lambda_irreducibility_witness");
  for (const LipFn& f : family)
    require_same_space(f, *space, "lambda_irreducibility_witness");

  LipFn tent = lambda_realize(space, p);
  LipFn joined = join(space, family);
  ExtReal gap = sup_dist(tent, joined);
  if (!(gap <= R + ExtReal(kDefaultTol)))
    throw std::invalid_argument(
        "lambda_irreducibility_witness: the family's join is not within R of the tent "
        "(distance " +
        to_string(gap) + ", R " + to_string(R) + ")");
  if (family.empty()) return std::nullopt;

  // The join attains its value at the center on some member; that member is
  // delta-close there, which forces it (R + delta)-close everywhere.
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (p.radius <= family[j][p.center] + R + ExtReal(delta + kDefaultTol)) return j;
  }
  return std::nullopt;  // unreachable when the precondition holds exactly
}

}  // namespace coarselip

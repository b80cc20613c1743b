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

#include <optional>
#include <span>
#include <vector>

#include "coarselip/metric_space.hpp"

namespace coarselip {

/// Worst violation of the K-Lipschitz condition: the least eps such that
/// values[x] <= K * d(x,y) + values[y] + eps for all x, y. A pair at
/// infinite distance imposes no constraint (K * inf = inf dominates
/// everything), for every K >= 0.
ExtReal lipschitz_excess(const MetricSpace& space, std::span<const ExtReal> values, double K);

bool is_k_eps_lipschitz(const MetricSpace& space, std::span<const ExtReal> values, double K,
                        double eps);

/// A 1-Lipschitz function into [0, inf]. Construction validates the
/// Lipschitz condition up to tol, so instances are members of the lattice
/// by fiat.
class LipFn {
 public:
  LipFn(SpacePtr space, std::vector<ExtReal> values, double tol = kDefaultTol);

  const SpacePtr& space_ptr() const { return space_; }
  const MetricSpace& space() const { return *space_; }
  std::size_t size() const { return values_.size(); }
  ExtReal value(std::size_t i) const { return values_[i]; }
  ExtReal operator[](std::size_t i) const { return values_[i]; }
  const std::vector<ExtReal>& values() const { return values_; }

  friend bool operator==(const LipFn& a, const LipFn& b) {
    return same_space(*a.space_, *b.space_) && a.values_ == b.values_;
  }
  friend bool operator!=(const LipFn& a, const LipFn& b) { return !(a == b); }

 private:
  SpacePtr space_;
  std::vector<ExtReal> values_;
};

LipFn const_fn(SpacePtr space, ExtReal v);

/// Pointwise lattice operations. The empty meet is the constant infinity
/// (the top of the lattice) and the empty join the constant 0 (the bottom);
/// both are 1-Lipschitz, so the lattice is complete. All members must live
/// on `space`.
LipFn meet(SpacePtr space, std::span<const LipFn> family);
LipFn join(SpacePtr space, std::span<const LipFn> family);

/// Supremum metric d(f, g) = max over points of |f - g|; requires both
/// functions to live on the same space.
ExtReal sup_dist(const LipFn& f, const LipFn& g);

/// Descriptor of the tent function with apex `radius` at point `center`,
/// i.e. y -> max(radius - d(center, y), 0). For radius = inf this is inf
/// on the center's component and 0 elsewhere.
struct LambdaFn {
  std::size_t center;
  ExtReal radius;
};

LipFn lambda_realize(SpacePtr space, std::size_t center, ExtReal radius);
inline LipFn lambda_realize(SpacePtr space, const LambdaFn& p) {
  return lambda_realize(std::move(space), p.center, p.radius);
}

/// Distance between two tent functions by the closed form:
///   max(r, s)            when d(x, y) >= min(r, s)
///   |r - s| + d(x, y)    when d(x, y) <= min(r, s) < inf
///   0                    when d(x, y) < min(r, s) = inf
/// (the first two agree on the overlap).
ExtReal lambda_dist_closed(const MetricSpace& space, std::size_t x, ExtReal r, std::size_t y,
                           ExtReal s);

/// Tent decomposition f = join of { tent(x, f(x)) : x }; the returned list
/// realizes f exactly as a pointwise maximum.
std::vector<LambdaFn> lambda_decompose(const LipFn& f);

/// Upper envelope join of { tent(x, raw[x]) : x }: the least 1-Lipschitz
/// function dominating raw. No Lipschitz requirement on raw.
LipFn envelope(SpacePtr space, std::span<const ExtReal> raw, double tol = kDefaultTol);

/// Envelope of a declared (1, eps)-Lipschitz sketch; rejects raw data whose
/// measured excess is above eps + tol. The result dominates raw and stays
/// within eps of it in the sup metric.
LipFn lipschitzise(SpacePtr space, std::span<const ExtReal> raw, double eps,
                   double tol = kDefaultTol);

struct NearestLambda {
  std::size_t center;
  ExtReal radius;
  ExtReal distance;
};

/// Exact minimizer of sup_dist(tent(y, s), g) over all centers y and radii
/// s in [0, inf]. Per center the objective is piecewise linear in s with
/// slopes in {-1, 0, +1}, so the minimum over s is attained on a finite
/// candidate set: s = 0, the kinks s = d(y, z) and s = d(y, z) + g(z), the
/// pairwise crossings (d(y,z1)+g(z1)+d(y,z2)+g(z2))/2, and s = inf.
/// Ties break to the lowest center index, then the smallest radius.
NearestLambda nearest_lambda(const LipFn& g);

/// Recognizer: the descriptor (argmax point, max value) when f is a tent
/// function with finite radius (within tol), nullopt otherwise.
std::optional<LambdaFn> is_finite_lambda(const LipFn& f, double tol = kDefaultTol);

/// Join-irreducibility witness for a finite tent p: given a family whose
/// join is within R of p (checked up to tol = delta), returns the first
/// index j with family[j](center) >= p.radius - R - delta. That member then
/// satisfies sup_dist(p, family[j]) <= R + delta, which is what makes
/// finite tents the almost-join-irreducible elements of the lattice.
/// Returns nullopt only for an empty family (no index can exist, even
/// though the precondition may hold).
std::optional<std::size_t> lambda_irreducibility_witness(SpacePtr space, const LambdaFn& p,
                                                         std::span<const LipFn> family,
                                                         ExtReal R, double delta);

}  // namespace coarselip

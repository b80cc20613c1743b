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

#include "coarselip/metric_space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace coarselip {

namespace {

std::string point_name(const std::vector<std::string>& labels, std::size_t i) {
  if (i < labels.size()) return labels[i] + " (#" + std::to_string(i) + ")";
  return "#" + std::to_string(i);
}

// a <= b + tol in the extended order.
bool le_tol(ExtReal a, ExtReal b, double tol) {
  if (a.is_inf()) return b.is_inf();
  if (b.is_inf()) return true;
  return a.finite() <= b.finite() + tol;
}

bool eq_tol(ExtReal a, ExtReal b, double tol) {
  return le_tol(a, b, tol) && le_tol(b, a, tol);
}

}  // namespace

ValidationOutcome MetricSpace::validate(std::vector<std::string> labels,
                                        const std::vector<std::vector<ExtReal>>& dist,
                                        double tol) {
  ValidationOutcome out;
  auto add = [&](MetricViolation::Kind kind, std::size_t i, std::size_t j, std::size_t k,
                 std::string message) {
    out.violations.push_back({kind, i, j, k, std::move(message)});
  };

  const std::size_t n = labels.size();
  if (n == 0) {
    add(MetricViolation::Kind::Empty, 0, 0, 0, "space must contain at least one point");
    return out;
  }

  if (dist.size() != n) {
    add(MetricViolation::Kind::Shape, dist.size(), n, 0,
        "distance matrix has " + std::to_string(dist.size()) + " rows for " +
            std::to_string(n) + " labels");
    return out;
  }
  bool shaped = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) {
      add(MetricViolation::Kind::Shape, i, dist[i].size(), 0,
          "row " + std::to_string(i) + " has " + std::to_string(dist[i].size()) +
              " entries, expected " + std::to_string(n));
      shaped = false;
    }
  }
  if (!shaped) return out;

  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = seen.emplace(labels[i], i);
      if (!inserted) {
        add(MetricViolation::Kind::DuplicateLabel, it->second, i, 0,
            "label \"" + labels[i] + "\" used by points #" + std::to_string(it->second) +
                " and #" + std::to_string(i));
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!eq_tol(dist[i][i], ExtReal(0.0), tol)) {
      add(MetricViolation::Kind::DiagonalNonzero, i, i, 0,
          "d(" + point_name(labels, i) + ", itself) = " + to_string(dist[i][i]) +
              ", expected 0");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (eq_tol(dist[i][j], ExtReal(0.0), tol) || eq_tol(dist[j][i], ExtReal(0.0), tol)) {
        add(MetricViolation::Kind::ZeroOffDiagonal, i, j, 0,
            "distinct points " + point_name(labels, i) + " and " + point_name(labels, j) +
                " are at distance 0");
      }
      if (!eq_tol(dist[i][j], dist[j][i], tol)) {
        add(MetricViolation::Kind::Asymmetric, i, j, 0,
            "d(" + point_name(labels, i) + ", " + point_name(labels, j) + ") = " +
                to_string(dist[i][j]) + " but the reverse is " + to_string(dist[j][i]));
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (!le_tol(dist[i][k], dist[i][j] + dist[j][k], tol)) {
          add(MetricViolation::Kind::Triangle, i, j, k,
              "d(" + point_name(labels, i) + ", " + point_name(labels, k) + ") = " +
                  to_string(dist[i][k]) + " exceeds d(.., " + point_name(labels, j) +
                  ") + d(" + point_name(labels, j) + ", ..) = " +
                  to_string(dist[i][j] + dist[j][k]));
        }
      }
    }
  }

  if (!out.violations.empty()) return out;

  std::vector<ExtReal> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      flat.push_back(i == j ? ExtReal(0.0) : dist[i][j]);
  out.space.emplace(MetricSpace(std::move(labels), std::move(flat)));
  return out;
}

MetricSpace MetricSpace::create(std::vector<std::string> labels,
                                const std::vector<std::vector<ExtReal>>& dist, double tol) {
  ValidationOutcome out = validate(std::move(labels), dist, tol);
  if (!out.ok()) {
    std::ostringstream msg;
    msg << "invalid metric space (" << out.violations.size() << " violation"
        << (out.violations.size() == 1 ? "" : "s") << "):";
    for (const MetricViolation& v : out.violations) msg << "\n  " << v.message;
    throw std::invalid_argument(msg.str());
  }
  return std::move(*out.space);
}

SpacePtr MetricSpace::create_shared(std::vector<std::string> labels,
                                    const std::vector<std::vector<ExtReal>>& dist, double tol) {
  return std::make_shared<const MetricSpace>(create(std::move(labels), dist, tol));
}

std::vector<std::string> MetricSpace::auto_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

std::optional<std::size_t> MetricSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

ExtReal MetricSpace::max_finite_dist() const {
  ExtReal best(0.0);
  for (const ExtReal& v : d_)
    if (v.is_finite()) best = max(best, v);
  return best;
}

bool same_space(const MetricSpace& a, const MetricSpace& b) {
  return &a == &b || a == b;
}

ComponentPartition components(const MetricSpace& space) {
  const std::size_t n = space.size();
  ComponentPartition part;
  part.block_of.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (part.block_of[i] != n) continue;
    // d is a metric, so finite-distance reachability is direct: no BFS needed.
    std::vector<std::size_t> block;
    for (std::size_t j = 0; j < n; ++j) {
      if (space.dist(i, j).is_finite() && part.block_of[j] == n) {
        part.block_of[j] = part.blocks.size();
        block.push_back(j);
      }
    }
    part.blocks.push_back(std::move(block));
  }
  return part;
}

MetricSpace cutoff(const MetricSpace& space, ExtReal r) {
  if (r == ExtReal(0.0))
    throw std::invalid_argument("cutoff: radius must be positive (r = 0 collapses all points)");
  const std::size_t n = space.size();
  std::vector<std::vector<ExtReal>> d(n, std::vector<ExtReal>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = i == j ? ExtReal(0.0) : min(r, space.dist(i, j));
  // min(r, d) keeps every axiom, so re-validation cannot fail.
  return MetricSpace::create(space.labels(), d);
}

MetricSpace scale(const MetricSpace& space, double ell) {
  if (!(ell > 0.0) || std::isinf(ell) || std::isnan(ell))
    throw std::invalid_argument("scale: factor must be a finite positive real");
  const std::size_t n = space.size();
  std::vector<std::vector<ExtReal>> d(n, std::vector<ExtReal>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = i == j ? ExtReal(0.0) : space.dist(i, j).scaled(ell);
  return MetricSpace::create(space.labels(), d);
}

}  // namespace coarselip

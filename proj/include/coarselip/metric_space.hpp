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

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coarselip/extreal.hpp"

namespace coarselip {

/// One reason a candidate distance matrix fails to be an extended metric.
/// Indices i, j, k identify the witnessing points; their meaning depends
/// on the kind (for Triangle the claim d(i,k) > d(i,j) + d(j,k) fails).
struct MetricViolation {
  enum class Kind {
    Shape,            // matrix not square / size mismatch with labels
    DuplicateLabel,   // two points share a label
    DiagonalNonzero,  // d(i,i) != 0
    ZeroOffDiagonal,  // d(i,j) == 0 for i != j
    Asymmetric,       // d(i,j) != d(j,i)
    Triangle,         // d(i,k) > d(i,j) + d(j,k)
    Empty,            // no points
  };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::string message;
};

class MetricSpace;
struct ValidationOutcome;

using SpacePtr = std::shared_ptr<const MetricSpace>;

/// A finite extended metric space: labelled points with symmetric,
/// positive-definite distances in [0, inf] satisfying the triangle
/// inequality. Instances only exist after validation.
class MetricSpace {
 public:
  /// Checks every axiom and reports all violations, not just the first.
  /// Entries within tol of an exact equality are accepted as equal.
  static ValidationOutcome validate(std::vector<std::string> labels,
                                    const std::vector<std::vector<ExtReal>>& dist,
                                    double tol = kDefaultTol);

  /// Convenience wrapper; throws std::invalid_argument listing every
  /// violation when validation fails.
  static MetricSpace create(std::vector<std::string> labels,
                            const std::vector<std::vector<ExtReal>>& dist,
                            double tol = kDefaultTol);
  static SpacePtr create_shared(std::vector<std::string> labels,
                                const std::vector<std::vector<ExtReal>>& dist,
                                double tol = kDefaultTol);

  /// Labels "p0", "p1", ... for callers that do not care about names.
  static std::vector<std::string> auto_labels(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  ExtReal dist(std::size_t i, std::size_t j) const { return d_[i * size() + j]; }

  /// Largest distance strictly below infinity; 0 when all points are
  /// infinitely far apart (or the space is a single point).
  ExtReal max_finite_dist() const;

  /// Structural equality: same labels and identical distance entries.
  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.labels_ == b.labels_ && a.d_ == b.d_;
  }
  friend bool operator!=(const MetricSpace& a, const MetricSpace& b) { return !(a == b); }

 private:
  MetricSpace(std::vector<std::string> labels, std::vector<ExtReal> flat)
      : labels_(std::move(labels)), d_(std::move(flat)) {}

  std::vector<std::string> labels_;
  std::vector<ExtReal> d_;  // row-major size() x size()
};

/// Either a validated space or the full list of violations, never both.
struct ValidationOutcome {
  std::optional<MetricSpace> space;
  std::vector<MetricViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Whether two handles denote the same space (same object or equal content).
bool same_space(const MetricSpace& a, const MetricSpace& b);

/// Partition of the points into components of the finite-distance
/// equivalence relation. Blocks are sorted by their least member and
/// hold ascending indices.
struct ComponentPartition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;  // point index -> block index
};

ComponentPartition components(const MetricSpace& space);

/// The cut-off metric min(r, d). Requires r > 0 (r = inf returns a copy).
MetricSpace cutoff(const MetricSpace& space, ExtReal r);

/// The scaled metric ell * d for a finite ell > 0; infinite distances stay
/// infinite.
MetricSpace scale(const MetricSpace& space, double ell);

}  // namespace coarselip

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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace coarselip {

/// Comparison tolerance used by validators and bound checks throughout.
inline constexpr double kDefaultTol = 1e-9;

/// A nonnegative real extended with a genuine infinity element.
///
/// Infinity is a tagged variant, not an IEEE sentinel, so that the
/// two-sided distance |a - b| (the least z with a <= b + z and
/// b <= a + z) comes out as |inf - inf| = 0 by case analysis.
/// Arithmetic follows inf + z = z + inf = inf and z <= inf for all z.
class ExtReal {
 public:
  constexpr ExtReal() = default;

  /// Implicit conversion from a nonnegative double. An IEEE +inf input is
  /// normalized to the infinity variant; negative or NaN inputs are rejected.
  ExtReal(double v) : v_(v) {
    if (std::isnan(v)) throw std::invalid_argument("ExtReal: NaN");
    if (v < 0.0) throw std::invalid_argument("ExtReal: negative value");
    if (std::isinf(v)) {
      inf_ = true;
      v_ = 0.0;
    }
  }

  static constexpr ExtReal infinity() {
    ExtReal r;
    r.inf_ = true;
    return r;
  }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }

  /// Finite value; throws when called on infinity.
  double finite() const {
    if (inf_) throw std::logic_error("ExtReal::finite on infinity");
    return v_;
  }

  /// Plain double view, mapping infinity to IEEE +inf. Display/JSON boundary
  /// only; arithmetic goes through the ExtReal operators.
  constexpr double as_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : v_;
  }

  friend constexpr bool operator==(ExtReal a, ExtReal b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.v_ == b.v_;
  }
  friend constexpr bool operator!=(ExtReal a, ExtReal b) { return !(a == b); }
  friend constexpr bool operator<(ExtReal a, ExtReal b) {
    if (b.inf_) return !a.inf_;
    if (a.inf_) return false;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(ExtReal a, ExtReal b) { return !(b < a); }
  friend constexpr bool operator>(ExtReal a, ExtReal b) { return b < a; }
  friend constexpr bool operator>=(ExtReal a, ExtReal b) { return !(a < b); }

  friend ExtReal operator+(ExtReal a, ExtReal b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtReal(a.v_ + b.v_);
  }

  /// Multiplication by a finite positive scalar; ell * inf = inf.
  /// The product 0 * inf is deliberately undefined, so ell <= 0 is rejected.
  ExtReal scaled(double ell) const {
    if (!(ell > 0.0) || std::isinf(ell) || std::isnan(ell))
      throw std::invalid_argument("ExtReal::scaled: factor must be a finite positive real");
    if (inf_) return infinity();
    return ExtReal(v_ * ell);
  }

 private:
  double v_ = 0.0;
  bool inf_ = false;
};

/// |a - b| under the two-inequality definition; |inf - inf| = 0,
/// |inf - finite| = inf. This is a metric on the extended ray.
inline ExtReal ext_dist(ExtReal a, ExtReal b) {
  if (a.is_inf() || b.is_inf()) {
    return (a.is_inf() && b.is_inf()) ? ExtReal(0.0) : ExtReal::infinity();
  }
  return ExtReal(std::abs(a.finite() - b.finite()));
}

/// Least c >= 0 with a <= b + c (one-sided part of ext_dist).
inline ExtReal excess(ExtReal a, ExtReal b) {
  if (a <= b) return ExtReal(0.0);
  if (b.is_inf()) return ExtReal(0.0);  // unreachable: a <= inf always
  if (a.is_inf()) return ExtReal::infinity();
  return ExtReal(a.finite() - b.finite());
}

inline ExtReal min(ExtReal a, ExtReal b) { return a < b ? a : b; }
inline ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }

inline std::string to_string(ExtReal v) {
  if (v.is_inf()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v.finite());
  // shortest representation that still round-trips
  for (int prec = 1; prec < 17; ++prec) {
    char probe[64];
    std::snprintf(probe, sizeof(probe), "%.*g", prec, v.finite());
    if (std::strtod(probe, nullptr) == v.finite()) return probe;
  }
  return buf;
}

}  // namespace coarselip

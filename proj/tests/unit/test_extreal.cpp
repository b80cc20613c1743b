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

#include <doctest.h>

#include <limits>

#include "coarselip/extreal.hpp"

using namespace coarselip;

TEST_CASE("construction rejects values outside the extended ray") {
  CHECK_THROWS_AS(ExtReal(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(ExtReal(-1e-300), std::invalid_argument);
  CHECK_THROWS_AS(ExtReal(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  // IEEE +inf is accepted and lands on the tagged variant.
  ExtReal v(std::numeric_limits<double>::infinity());
  CHECK(v.is_inf());
  CHECK(v == ExtReal::infinity());
  CHECK_THROWS_AS(v.finite(), std::logic_error);
}

TEST_CASE("infinity behaves as the adjoined top element") {
  const ExtReal inf = ExtReal::infinity();
  CHECK(ExtReal(7.0) < inf);
  CHECK(inf <= inf);
  CHECK_FALSE(inf < inf);
  CHECK(inf + ExtReal(3.0) == inf);
  CHECK(ExtReal(3.0) + inf == inf);
  CHECK(max(inf, ExtReal(1e300)) == inf);
  CHECK(min(inf, ExtReal(1e300)) == ExtReal(1e300));
  CHECK(inf.scaled(0.001) == inf);
}

TEST_CASE("two sided distance treats infinity as a point, not a limit") {
  const ExtReal inf = ExtReal::infinity();
  CHECK(ext_dist(inf, inf) == ExtReal(0.0));
  CHECK(ext_dist(inf, ExtReal(5.0)) == inf);
  CHECK(ext_dist(ExtReal(5.0), inf) == inf);
  CHECK(ext_dist(ExtReal(1.25), ExtReal(3.0)) == ExtReal(1.75));
}

TEST_CASE("excess is the one sided part of the distance") {
  const ExtReal inf = ExtReal::infinity();
  CHECK(excess(ExtReal(3.0), ExtReal(5.0)) == ExtReal(0.0));
  CHECK(excess(ExtReal(5.0), ExtReal(3.0)) == ExtReal(2.0));
  CHECK(excess(ExtReal(5.0), inf) == ExtReal(0.0));
  CHECK(excess(inf, inf) == ExtReal(0.0));
  CHECK(excess(inf, ExtReal(5.0)) == inf);
  // a <= b + excess(a, b) for a spread of cases
  for (ExtReal a : {ExtReal(0.0), ExtReal(2.5), inf})
    for (ExtReal b : {ExtReal(0.0), ExtReal(1.0), inf}) CHECK(a <= b + excess(a, b));
}

TEST_CASE("scaling rejects factors that would make 0 * inf appear") {
  CHECK_THROWS_AS(ExtReal(2.0).scaled(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ExtReal(2.0).scaled(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(ExtReal(2.0).scaled(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK(ExtReal(2.5).scaled(4.0) == ExtReal(10.0));
}

TEST_CASE("to_string is shortest roundtripping form") {
  CHECK(to_string(ExtReal::infinity()) == "inf");
  CHECK(to_string(ExtReal(0.0)) == "0");
  CHECK(to_string(ExtReal(2.0)) == "2");
  CHECK(to_string(ExtReal(0.015625)) == "0.015625");  // 1/64 exactly
  CHECK(to_string(ExtReal(1.0 / 3.0)) == "0.3333333333333333");
}

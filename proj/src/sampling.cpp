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

#include "coarselip/sampling.hpp"

#include <cmath>

namespace coarselip {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("pick: empty range");
  return rng() % n;
}

double random_dyadic(std::mt19937_64& rng, double lo, double hi) {
  const double klo = lo * 64.0;
  const double khi = hi * 64.0;
  if (std::nearbyint(klo) != klo || std::nearbyint(khi) != khi || khi < klo)
    throw std::invalid_argument("random_dyadic: bounds must be ordered multiples of 1/64");
  const auto span = static_cast<std::uint64_t>(khi - klo);
  return (klo + static_cast<double>(pick(rng, span + 1))) / 64.0;
}

LipFn random_lip_fn(SpacePtr space, std::mt19937_64& rng) {
  std::vector<ExtReal> raw;
  raw.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i)
    raw.push_back(ExtReal(random_dyadic(rng, 0.0, 4.0)));
  return envelope(std::move(space), raw);
}

SamplePool sample_lip_functions(SpacePtr space, std::size_t count, std::mt19937_64& rng) {
  SamplePool pool;
  auto put = [&](std::string label, LipFn fn) {
    if (pool.fns.size() < count) {
      pool.fns.push_back(std::move(fn));
      pool.labels.push_back(std::move(label));
    }
  };

  const std::size_t n = space->size();
  put("zero", const_fn(space, ExtReal(0.0)));
  put("top", const_fn(space, ExtReal::infinity()));
  put("const(1)", const_fn(space, ExtReal(1.0)));

  const std::size_t tent_centers = n < 3 ? n : 3;
  for (std::size_t k = 0; k < tent_centers; ++k) {
    double r = random_dyadic(rng, 0.5, 3.0);
    put("tent(" + space->label(k) + "," + to_string(ExtReal(r)) + ")",
        lambda_realize(space, k, ExtReal(r)));
  }
  put("tent(" + space->label(0) + ",inf)", lambda_realize(space, 0, ExtReal::infinity()));

  ComponentPartition part = components(*space);
  if (part.blocks.size() > 1) {
    // Infinity on the first block, a finite constant elsewhere; 1-Lipschitz
    // because distinct blocks sit at infinite distance.
    std::vector<ExtReal> values(n, ExtReal(2.0));
    for (std::size_t i : part.blocks[0]) values[i] = ExtReal::infinity();
    put("inf_on_" + space->label(part.blocks[0][0]) + "_block", LipFn(space, std::move(values)));
  }

  std::size_t serial = 0;
  while (pool.fns.size() < count)
    put("rand#" + std::to_string(serial++), random_lip_fn(space, rng));
  return pool;
}

}  // namespace coarselip

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

#include <random>
#include <string>
#include <vector>

#include "coarselip/lipschitz.hpp"

namespace coarselip {

/// Uniform draw from {0, ..., n-1}. mt19937_64 output is pinned by the
/// standard and no std distribution is involved, so draws are identical
/// across platforms. (The modulo bias is irrelevant at test scale.)
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n);

/// Random multiple of 1/64 in [lo, hi]; lo and hi must themselves be
/// multiples of 1/64. Dyadic values keep downstream piecewise-linear
/// arithmetic exact in doubles.
double random_dyadic(std::mt19937_64& rng, double lo, double hi);

/// Envelope of random dyadic raw values in [0, 4]: a generic member of the
/// function lattice.
LipFn random_lip_fn(SpacePtr space, std::mt19937_64& rng);

/// A labelled pool of sample functions on one space: lattice extremes,
/// constants, tents (finite and infinite radius), per-component infinity
/// mixtures when the space is disconnected, then random envelopes up to
/// `count`. Labels make defect witnesses readable.
struct SamplePool {
  std::vector<LipFn> fns;
  std::vector<std::string> labels;
};

SamplePool sample_lip_functions(SpacePtr space, std::size_t count, std::mt19937_64& rng);

}  // namespace coarselip

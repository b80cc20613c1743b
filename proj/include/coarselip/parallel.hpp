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
#include <functional>

namespace coarselip {

/// Worker count from COARSE_LIP_THREADS, clamped to [1, 64]; 1 when unset
/// or unparsable.
std::size_t worker_count();

/// Runs f(0..n-1), striped over worker_count() threads. Each index must
/// write only its own slots, which keeps results identical to the serial
/// run. If several indices throw, the exception of the lowest index is
/// rethrown, again matching the serial behaviour.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace coarselip

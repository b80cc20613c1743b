# Copyright 2026 The coarselip authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Lipschitz function lattices over finite extended metric spaces.

Spaces are opaque validated handles; functions are plain lists of floats
with ``math.inf`` as the infinity element.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
except ImportError:  # pragma: no cover - build-tree layout
    from _core import *  # noqa: F401,F403

__all__ = [
    "Space",
    "ReconstructionError",
    "space",
    "validate_space",
    "components",
    "cutoff",
    "scale",
    "lipschitz_excess",
    "sup_dist",
    "join",
    "meet",
    "lambda_realize",
    "lambda_dist",
    "lipschitzise",
    "nearest_lambda",
    "rough_distance",
    "pair_defect",
    "lift_check",
    "reconstruct_lift",
    "verify_reconstruction",
    "lipschitzized_scaling",
    "scaling_experiment",
]

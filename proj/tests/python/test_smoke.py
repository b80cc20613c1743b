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

import math

import pytest

import coarselip as cl


@pytest.fixture
def line():
    # Three points on a line at 0, 1, 3.
    return cl.space(["a", "b", "c"], [[0, 1, 3], [1, 0, 2], [3, 2, 0]])


def test_validate_good(line):
    assert len(line) == 3
    assert line.dist(0, 2) == 3
    assert cl.components(line) == [[0, 1, 2]]


def test_validate_reports_all_violations():
    errors = cl.validate_space(["a", "b", "c"], [[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    assert any("exceeds" in e for e in errors)  # triangle via b
    assert cl.validate_space(["a", "b"], [[0, 2], [2, 0]]) == []


def test_negative_entry_is_reported():
    errors = cl.validate_space(["a", "b"], [[0, -1], [-1, 0]])
    assert errors and "negative" in errors[0]


def test_infinity_makes_components():
    s = cl.space(["a", "b"], [[0, math.inf], [math.inf, 0]])
    assert cl.components(s) == [[0], [1]]
    # Tents of infinite radius live on one component only.
    assert cl.lambda_realize(s, 0, math.inf) == [math.inf, 0.0]


def test_lambda_dist_closed_form(line):
    assert cl.lambda_dist(line, 0, 2, 1, 3) == 2  # d(a,b)=1 < min -> |r-s| + d
    assert cl.lambda_dist(line, 0, 2, 2, 3) == 3  # d(a,c)=3 >= min -> max


def test_lipschitzise(line):
    out = cl.lipschitzise(line, [0, 2, 3], 1)
    assert out == [1, 2, 3]


def test_nearest_lambda(line):
    center, radius, distance = cl.nearest_lambda(line, [2, 1, 3])
    assert (center, radius, distance) == (2, 4, 1)


def test_rough_distance():
    a = cl.space(["p", "q"], [[0, 2], [2, 0]])
    b = cl.space(["u", "m", "v"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    eps, fwd, bwd = cl.rough_distance(a, b)
    assert eps == 1


def test_lift_check_within_declared(line):
    b = cl.space(["u", "m", "v"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    report = cl.lift_check(b, line, [0, 1, 2], [0, 1, 2], samples=16)
    assert report["ok"] is True
    assert report["worst"] <= report["epsilon"] + 1e-9


def test_reconstruct_identity(line):
    fwd, bwd = cl.reconstruct_lift(line, line, [0, 1, 2], [0, 1, 2])
    assert fwd == [0, 1, 2]
    assert bwd == [0, 1, 2]


def test_scaling_experiment_smoke():
    report = cl.scaling_experiment("path", [2, 4], 8, samples=8)
    assert report["monotone_ok"] is True
    assert all(level["lift"]["ok"] for level in report["levels"])

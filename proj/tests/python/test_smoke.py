# Copyright 2026 The biasgraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import biasgraph


def test_fig1_biased_walk():
    g = biasgraph.instance("fig1")
    trace = biasgraph.simulate(g, 2)
    assert trace["vertices"] == ["s", "v", "z", "t"]
    assert trace["cost"] == 21
    assert trace["steps"][0]["perceived"] == 11
    assert biasgraph.cost_ratio(g, 2) == Fraction(7, 2)


def test_fan_thresholds():
    f = biasgraph.fan(5, Fraction(3, 2))
    assert biasgraph.ne_check(f, "P0", 1, 2)[0]
    ok, deviation = biasgraph.ne_check(f, "P0", Fraction(99, 100), 2)
    assert not ok and deviation["vertex"] == "s"
    assert biasgraph.min_reward(f, "P5", 2) == ([(Fraction(0), Fraction(81, 16))], Fraction(0))
    assert biasgraph.min_reward(f, "P2", 2) == ([], None)


def test_dict_graph_round_trip():
    g = {
        "vertices": ["s", "a", "t", "dead"],
        "edges": [
            {"from": "s", "to": "a", "cost": 1},
            {"from": "a", "to": "t", "cost": "3/2"},
            {"from": "s", "to": "t", "cost": 0.5},
            {"from": "s", "to": "dead", "cost": 0},
        ],
        "source": "s",
        "sink": "t",
    }
    canonical = biasgraph.validate(g)
    assert "dead" not in canonical["vertices"]
    assert biasgraph.validate(canonical) == canonical
    path, reward = biasgraph.dominant_reward(canonical, 3)
    assert path["vertices"] == ["s", "t"]
    assert reward == 3


def test_unbiased_ladder():
    report = biasgraph.unbiased_eq(biasgraph.fan(2, 2), 1)
    assert [p["cost"] for p in report["ladder"]] == [1]
    assert report["symmetric"] == [0]


def test_bne_numbers():
    s = biasgraph.bne_fan(5, 2, 4)
    assert s["p"] == pytest.approx(0.5, abs=1e-9)
    assert s["expected_cost_ratio"] == pytest.approx(16.5)
    assert biasgraph.reward_share_factor(0.3, 1) == pytest.approx(0.15)
    assert biasgraph.lambert_w0(1.0) == pytest.approx(0.5671432904097838)
    assert biasgraph.optimality_bound(4.0) == pytest.approx(0.8284271247461901)


def test_errors_are_value_errors():
    with pytest.raises(ValueError, match="kCycleDetected|cycle"):
        biasgraph.validate(
            {
                "vertices": ["s", "a", "t"],
                "edges": [
                    {"from": "s", "to": "a", "cost": 1},
                    {"from": "a", "to": "s", "cost": 1},
                    {"from": "a", "to": "t", "cost": 1},
                ],
                "source": "s",
                "sink": "t",
            }
        )
    with pytest.raises(biasgraph.Error):
        biasgraph.bne_fan(5, 2, 4, dist="cauchy")


def test_verify_suite():
    report = biasgraph.verify("thm1", seed=3, count=5)
    assert report["passed"] and report["cases"] > 0

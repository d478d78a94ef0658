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

"""Present-biased agents racing through task graphs.

Graphs are plain dicts with "vertices", "edges", "source" and "sink"; edge
costs are exact rationals. Exact quantities come back as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _biasgraph
from ._biasgraph import (
    Error,
    expected_inverse_share,
    lambert_w0,
    optimality_bound,
    reward_share_factor,
)

__all__ = [
    "Error",
    "bne_fan",
    "cost_ratio",
    "dominant_reward",
    "expected_inverse_share",
    "fan",
    "instance",
    "lambert_w0",
    "min_reward",
    "ne_check",
    "optimality_bound",
    "reward_share_factor",
    "simulate",
    "unbiased_eq",
    "validate",
    "verify",
]


def _rational(x):
    if isinstance(x, float):
        x = Fraction(x)
    return str(x)


def _fraction(text):
    return None if text is None else Fraction(text)


def _path(path):
    if path is None or isinstance(path, str):
        return path
    return ",".join(path)


def _graph_in(graph):
    if isinstance(graph, str):
        return graph
    raw = dict(graph)
    raw["edges"] = [dict(e, cost=_rational(e["cost"])) for e in graph["edges"]]
    return json.dumps(raw)


def _graph_out(text):
    graph = json.loads(text)
    for e in graph["edges"]:
        e["cost"] = Fraction(e["cost"])
    return graph


def _path_out(path):
    return dict(path, cost=Fraction(path["cost"]))


def _intervals(pieces):
    return [(Fraction(p["lo"]), _fraction(p["hi"])) for p in pieces]


def validate(graph):
    """Canonical form of `graph`: pruned, parallel edges merged."""
    return _graph_out(_biasgraph.validate(_graph_in(graph)))


def fan(n, c=2):
    return _graph_out(_biasgraph.fan(n, _rational(c)))


def instance(name):
    return _graph_out(_biasgraph.instance(name))


def simulate(graph, bias, opponent=None, reward=0, tie_rule="split"):
    trace = json.loads(
        _biasgraph.simulate(
            _graph_in(graph), _rational(bias), _path(opponent), _rational(reward), tie_rule
        )
    )
    for step in trace["steps"]:
        step["perceived"] = Fraction(step["perceived"])
        for alt in step["alternatives"]:
            alt["perceived"] = Fraction(alt["perceived"])
        if step["runner_up"] is not None:
            step["runner_up"]["perceived"] = Fraction(step["runner_up"]["perceived"])
    return _path_out(trace)


def cost_ratio(graph, bias):
    return Fraction(_biasgraph.cost_ratio(_graph_in(graph), _rational(bias)))


def ne_check(graph, path, reward, bias):
    result = json.loads(
        _biasgraph.ne_check(_graph_in(graph), _path(path), _rational(reward), _rational(bias))
    )
    return result["is_equilibrium"], result["deviation"]


def min_reward(graph, path, bias):
    """(feasible intervals, smallest reward); hi is None for an open end."""
    result = json.loads(_biasgraph.min_reward(_graph_in(graph), _path(path), _rational(bias)))
    return _intervals(result["feasible"]), _fraction(result["minimum"])


def unbiased_eq(graph, reward, tie_rule="split"):
    report = json.loads(_biasgraph.unbiased_eq(_graph_in(graph), _rational(reward), tie_rule))
    report["ladder"] = [_path_out(p) for p in report["ladder"]]
    report["reward"] = Fraction(report["reward"])
    return report


def dominant_reward(graph, bias, agents=2):
    result = json.loads(_biasgraph.dominant_reward(_graph_in(graph), _rational(bias), agents))
    return _path_out(result["path"]), Fraction(result["reward"])


def bne_fan(n, c, reward, dist="equal-revenue", param=0.0, m=1):
    """Cutoff equilibrium on the n-fan; `param` is d for uniform, lambda for exponential."""
    return json.loads(_biasgraph.bne_fan(n, float(c), dist, float(param), float(reward), m))


def verify(suite, seed=7, count=0):
    return json.loads(_biasgraph.verify(suite, seed, count))

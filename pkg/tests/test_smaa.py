"""Acceptability analysis: the simulation loop, determinism and edge cases.

The weight-variant expectations are derived by hand.  On the walkthrough
fixture the outranking degrees against the middle profile reduce to
pi(x2, r2) = w1 and pi(r2, x2) = 1 - w1, where w1 is the first-level
weight of G1, so phi(x2) = (2 w1 - 1)/3 and the C1/C2 boundary sits at
w1 = 1/2 exactly.  Ranking G2 above G1 keeps w1 <= 1/2 on every draw
(all C2); leaving the weights unstated makes w1 uniform on (0, 1), so
the C1 share converges to 1/2.  x1 beats or loses to every profile
unanimously across criteria, so its category ignores the weights.
"""

import copy
import json

import numpy as np
import pytest

from smaaflow import BoundaryViolation, InputError, run_smaa
from smaaflow.errors import WEIGHT_SPEC
from smaaflow.model_io import fixture_path, parse_problem
from smaaflow.smaa import deterministic_result


@pytest.fixture(scope="module")
def walkthrough_doc():
    with open(fixture_path("walkthrough")) as fh:
        return json.load(fh)


def variant(doc, **changes):
    out = copy.deepcopy(doc)
    for key, value in changes.items():
        node = out
        *head, last = key.split(".")
        for part in head:
            node = node[part]
        node[last] = value
    return parse_problem(out)


def test_degenerate_run_equals_deterministic_result(walkthrough):
    fixed = deterministic_result(walkthrough)
    assert fixed.category_index.tolist() == [[1.0, 0.0], [0.0, 1.0]]
    assert fixed.iterations == 1
    for iters in (7, 100):
        res = run_smaa(walkthrough, iterations=iters, seed=3)
        assert np.array_equal(res.category_index, fixed.category_index)
        assert np.array_equal(res.node_index, fixed.node_index)
        assert res.iterations == iters
        assert res.boundary_violations == 0


def test_node_index_shape_and_rows(walkthrough):
    res = run_smaa(walkthrough, iterations=5, seed=0)
    assert res.category_index.shape == (2, 2)
    assert res.node_index.shape == (6, 2, 2)
    assert np.allclose(res.category_index.sum(axis=-1), 1.0, atol=1e-9)
    assert np.allclose(res.node_index.sum(axis=-1), 1.0, atol=1e-9)
    # first-level diagnostics of x2 disagree between subtrees, category
    # acceptability is still all-C2
    paths = {p: i for i, p in enumerate(res.node_paths)}
    assert res.node_index[paths[(1,)], 1].tolist() == [1.0, 0.0]
    assert res.node_index[paths[(2,)], 1].tolist() == [0.0, 1.0]


def test_ordinal_first_level_weights_pin_x2_to_c2(walkthrough_doc):
    problem = variant(walkthrough_doc, **{"tree.weights": {"ordinal": [2, 1]}})
    res = run_smaa(problem, iterations=2000, seed=5)
    assert res.boundary_violations == 0
    assert res.category_index.tolist() == [[1.0, 0.0], [0.0, 1.0]]


def test_missing_first_level_weights_split_x2_evenly(walkthrough_doc):
    problem = variant(walkthrough_doc, **{"tree.weights": {"missing": True}})
    res = run_smaa(problem, iterations=4000, seed=11)
    assert res.boundary_violations == 0
    assert res.category_index[0].tolist() == [1.0, 0.0]
    assert res.category_index[1, 0] == pytest.approx(0.5, abs=0.025)
    assert res.category_index[1].sum() == pytest.approx(1.0, abs=1e-12)


def test_same_seed_same_result(walkthrough_doc):
    problem = variant(walkthrough_doc, **{"tree.weights": {"missing": True}})
    a = run_smaa(problem, iterations=500, seed=21)
    b = run_smaa(problem, iterations=500, seed=21)
    c = run_smaa(problem, iterations=500, seed=22)
    assert np.array_equal(a.category_index, b.category_index)
    assert np.array_equal(a.node_index, b.node_index)
    assert not np.array_equal(a.category_index, c.category_index)


def test_thread_count_does_not_change_results(walkthrough_doc):
    problem = variant(walkthrough_doc, **{"tree.weights": {"missing": True}})
    serial = run_smaa(problem, iterations=600, seed=9, threads=1)
    threaded = run_smaa(problem, iterations=600, seed=9, threads=4)
    assert serial.category_index.tobytes() == threaded.category_index.tobytes()
    assert serial.node_index.tobytes() == threaded.node_index.tobytes()
    assert serial.boundary_violations == threaded.boundary_violations


def test_all_rules_agree_on_the_walkthrough(walkthrough):
    for rule in ("positive", "negative", "net"):
        res = run_smaa(walkthrough, iterations=10, seed=0, rule=rule)
        assert res.category_index.tolist() == [[1.0, 0.0], [0.0, 1.0]]
        assert res.rule == rule


def test_deterministic_result_requires_deterministic_weights(walkthrough_doc):
    problem = variant(walkthrough_doc, **{"tree.weights": {"ordinal": [1, 2]}})
    with pytest.raises(InputError) as err:
        deterministic_result(problem)
    assert err.value.code == WEIGHT_SPEC


# ---------------------------------------------------------------------------
# Boundary violations
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def glued_to_worst(walkthrough_doc):
    """A third alternative sitting exactly on the worst profile, which ties
    its net and positive flows and lands outside the strict bracket."""
    doc = copy.deepcopy(walkthrough_doc)
    doc["alternatives"]["x3"] = {
        "G1/g11": 0, "G1/g12": 10, "G2/g21": 0, "G2/g22": 0}
    return parse_problem(doc)


def test_violations_are_counted_not_hidden(glued_to_worst):
    res = run_smaa(glued_to_worst, iterations=40, seed=0)
    # x3 goes unbracketed in the overall tally and in all six node tallies
    assert res.boundary_violations == 40 * 7
    assert res.category_index[2].sum() == 0.0          # nothing tallied for x3
    assert res.node_index[:, 2].sum() == 0.0
    assert res.category_index[0].tolist() == [1.0, 0.0]
    assert res.category_index[1].tolist() == [0.0, 1.0]


def test_strict_mode_raises_on_violation(glued_to_worst):
    with pytest.raises(BoundaryViolation):
        run_smaa(glued_to_worst, iterations=5, seed=0, strict=True)


def test_negative_rule_tolerates_the_worst_profile_tie(glued_to_worst):
    res = run_smaa(glued_to_worst, iterations=40, seed=0, rule="negative")
    # the overall tally accepts the tie; the net-style node diagnostics
    # still skip their six cells per iteration
    assert res.category_index[2].tolist() == [0.0, 1.0]
    assert res.boundary_violations == 40 * 6


def test_defuzz_method_is_recorded(walkthrough):
    res = run_smaa(walkthrough, iterations=5, seed=0, defuzz="spread-sum")
    assert res.defuzz == "spread-sum"
    assert res.category_index.tolist() == [[1.0, 0.0], [0.0, 1.0]]

"""Criteria tree construction, traversal tables and weight specifications."""

import pytest

from smaaflow import InputError, WeightSpec, build_tree
from smaaflow.errors import WEIGHT_SPEC


def two_level_children():
    return [
        {"label": "G1", "weights": {"deterministic": [0.2, 0.8]},
         "children": [{"label": "g11"}, {"label": "g12"}]},
        {"label": "G2", "weights": {"deterministic": [0.4, 0.6]},
         "children": [{"label": "g21"}, {"label": "g22"}]},
    ]


def test_shape_and_traversal(walkthrough):
    tree = walkthrough.tree
    assert tree.n_elementary == 4
    assert len(tree.first_level) == 2
    assert [tree.label_path(p) for p in tree.elementary_paths] == [
        "G1/g11", "G1/g12", "G2/g21", "G2/g22"]
    # parents precede children, depth first
    labels = [tree.label_path(n.path) for n in tree.nodes]
    assert labels == ["G1", "G1/g11", "G1/g12", "G2", "G2/g21", "G2/g22"]


def test_elementary_spans(walkthrough):
    tree = walkthrough.tree
    assert tree.elementary_span((1,)) == (0, 2)
    assert tree.elementary_span((2,)) == (2, 4)
    assert tree.elementary_span((2, 1)) == (2, 3)


def test_label_path_round_trip(walkthrough):
    tree = walkthrough.tree
    for node in tree.nodes:
        assert tree.path_of_labels(tree.label_path(node.path)) == node.path
    with pytest.raises(InputError):
        tree.path_of_labels("G1/nope")


def test_effective_weight():
    tree = build_tree(two_level_children(), {"deterministic": [0.3, 0.7]})
    w = tree.deterministic_weights()
    assert tree.effective_weight((1, 2), w) == pytest.approx(0.3 * 0.8)
    assert tree.effective_weight((2, 1), w) == pytest.approx(0.7 * 0.4)
    assert tree.effective_weight((2,), w) == pytest.approx(0.7)
    # effective weights of the leaves partition the unit
    total = sum(tree.effective_weight(p, w) for p in tree.elementary_paths)
    assert total == pytest.approx(1.0)


def test_sibling_groups_order():
    tree = build_tree(two_level_children(), {"deterministic": [0.3, 0.7]})
    groups = tree.sibling_groups()
    assert groups[0].parent_path == ()
    assert [g.parent_path for g in groups] == [(), (1,), (2,)]
    assert [len(g.members) for g in groups] == [2, 2, 2]


def test_deterministic_weights_requires_full_information():
    children = two_level_children()
    tree = build_tree(children, {"ordinal": [2, 1]})
    with pytest.raises(InputError) as err:
        tree.deterministic_weights()
    assert err.value.code == WEIGHT_SPEC
    assert not tree.all_deterministic
    assert build_tree(children, {"deterministic": [0.3, 0.7]}).all_deterministic


def test_case_study_shape(case_study):
    tree = case_study.tree
    assert len(tree.first_level) == 9
    assert tree.n_elementary == 54
    assert tree.depth == 3
    # every process carries an existence leaf and five input leaves
    for proc in tree.first_level:
        assert len(proc.children) == 2
        existence, inputs = proc.children
        assert existence.is_elementary
        assert len(inputs.children) == 5


def test_duplicate_sibling_labels_rejected():
    with pytest.raises(InputError):
        build_tree([{"label": "A"}, {"label": "A"}])


def test_slash_in_label_rejected():
    with pytest.raises(InputError):
        build_tree([{"label": "A/B"}])


def test_elementary_node_may_not_carry_weights():
    with pytest.raises(InputError):
        build_tree([{"label": "A", "weights": {"deterministic": [1.0]}}])


def test_unknown_node_keys_rejected():
    with pytest.raises(InputError):
        build_tree([{"label": "A", "color": "red"}])


def test_weight_spec_forms():
    assert WeightSpec.from_spec({"deterministic": [0.5, 0.5]}).kind == "deterministic"
    assert WeightSpec.from_spec({"ordinal": [1, 2]}).kind == "ordinal"
    assert WeightSpec.from_spec({"interval": [[0.2, 0.6], [0.4, 0.8]]}).kind == "interval"
    assert WeightSpec.from_spec({"missing": True}).kind == "missing"
    assert WeightSpec.from_spec(None).kind == "missing"


def test_weight_spec_validation():
    with pytest.raises(InputError) as err:
        WeightSpec.deterministic([0.5, 0.4]).validate(2)
    assert err.value.code == WEIGHT_SPEC

    with pytest.raises(InputError):
        WeightSpec.deterministic([1.2, -0.2]).validate(2)

    with pytest.raises(InputError):
        WeightSpec.ordinal([0, 1]).validate(2)       # ranks start at 1

    with pytest.raises(InputError):
        WeightSpec.ordinal([1, 2]).validate(3)       # arity mismatch

    with pytest.raises(InputError):
        WeightSpec.interval([[0.6, 0.9], [0.6, 0.9]]).validate(2)   # sum(lo) > 1

    with pytest.raises(InputError):
        WeightSpec.interval([[0.1, 0.2], [0.1, 0.3]]).validate(2)   # sum(hi) < 1

    WeightSpec.interval([[0.2, 0.8], [0.2, 0.8]]).validate(2)
    WeightSpec.ordinal([2, 2, 1]).validate(3)        # ties are fine


def test_partial_ordinal_ranks_allowed():
    spec = WeightSpec.ordinal([1, None, 2])
    spec.validate(3)
    assert spec.kind == "ordinal"

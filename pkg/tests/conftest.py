"""Shared fixtures and the bridge from oracle instances to library objects."""

from __future__ import annotations

import pytest

from smaaflow import TFN, PreferenceSpec, ProfileSet, build_tree
from smaaflow.model_io import fixture_path, load_problem

import oracles


@pytest.fixture(scope="session")
def walkthrough():
    return load_problem(fixture_path("walkthrough"))


@pytest.fixture(scope="session")
def case_study():
    return load_problem(fixture_path("case-study"))


def library_objects(inst):
    """Build tree, weights, preferences, profiles and evaluations for the
    package from a generated oracle instance."""
    children = oracles.library_tree_spec(inst["children"])
    tree = build_tree(children, oracles.library_root_weights(inst["children"]))
    weights = tree.deterministic_weights()
    prefs = [
        PreferenceSpec(shape=m["shape"], q=m["q"], p=m["p"], s=m["s"],
                       direction=m["direction"])
        for _, m in inst["flat"]
    ]
    profiles = ProfileSet([[TFN(*t) for t in row] for row in inst["profiles"]])
    evals = [[TFN(*t) for t in row] for row in inst["evals"]]
    return tree, weights, prefs, profiles, evals

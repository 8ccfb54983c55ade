import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from primerline.featmodel import (
    Configuration, SearchSpaceTooLarge, check_configuration,
    count_configurations, enumerate_configurations, parse_model,
)

from randgen import random_model


def powerset_count(model):
    """Independent oracle: try every subset of features (no clones)."""
    names = [f.name for f in model.features()]
    total = 0
    for r in range(len(names) + 1):
        for subset in combinations(names, r):
            config = Configuration(model.name, {n: 1 for n in subset})
            if check_configuration(model, config, check_attributes=False).valid:
                total += 1
    return total


def test_four_configuration_example():
    model = parse_model("featuremodel T root R { optional A alternative {B, C} }")
    configs = enumerate_configurations(model)
    assert len(configs) == 4
    assert powerset_count(model) == 4


def test_single_root_model():
    model = parse_model("featuremodel T root R")
    configs = enumerate_configurations(model)
    assert len(configs) == 1
    assert configs[0].selections == {"R": 1}


def test_mandatory_forces_selection():
    model = parse_model("featuremodel T root R { mandatory M }")
    configs = enumerate_configurations(model)
    assert len(configs) == 1
    assert configs[0].selections == {"R": 1, "M": 1}


def test_unsatisfiable_model_counts_zero():
    model = parse_model(
        "featuremodel T root R { alternative {A, B} "
        "constraint A excludes R constraint B excludes R }")
    assert count_configurations(model) == 0


def test_three_by_three_alternatives():
    model = parse_model(
        "featuremodel T root R { "
        "alternative {MerrillModel, GagneModel, GenericActivity} "
        "alternative {High, Medium, Low} }")
    assert count_configurations(model) == 9
    assert powerset_count(model) == 9


def test_clone_counts_capped():
    model = parse_model("featuremodel T root R { mandatory P [1..25] }")
    assert count_configurations(model, clone_cap=3) == 3
    assert count_configurations(model, clone_cap=5) == 5


def test_search_space_guard():
    children = " ".join(f"optional C{i}" for i in range(25))
    model = parse_model(f"featuremodel T root R {{ {children} }}")
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_configurations(model)


def test_enumeration_order_is_deterministic():
    model = parse_model("featuremodel T root R { optional A alternative {B, C} }")
    first = [c.selections for c in enumerate_configurations(model)]
    second = [c.selections for c in enumerate_configurations(model)]
    assert first == second


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_count_matches_powerset_oracle(seed):
    model = random_model(random.Random(seed), max_features=7, clones=False)
    assert count_configurations(model) == powerset_count(model)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_enumeration_soundness(seed):
    model = random_model(random.Random(seed), max_features=6)
    for config in enumerate_configurations(model):
        assert check_configuration(model, config, check_attributes=False).valid

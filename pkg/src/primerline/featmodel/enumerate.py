"""Brute-force enumeration and counting of valid configurations.

Attributes are excluded; clone multiplicity is capped at clone_cap. The
search walks features in depth-first preorder, children in declaration
order, trying "not selected" before ascending clone counts, which makes
the output order deterministic.
"""

from __future__ import annotations

from .model import Configuration, Feature, FeatureModel
from .validate import check_configuration

DEFAULT_CLONE_CAP = 3
MAX_SEARCH_SPACE = 10 ** 6


class SearchSpaceTooLarge(Exception):
    def __init__(self, estimate: int):
        super().__init__(
            f"SEARCH_SPACE_TOO_LARGE: ~{estimate} candidate configurations "
            f"exceed the limit of {MAX_SEARCH_SPACE}")
        self.estimate = estimate


def _counts(feature: Feature, clone_cap: int) -> list[int]:
    lo, hi = feature.card
    lo = max(lo, 1)
    hi = min(hi, clone_cap) if feature.is_clone else hi
    return list(range(lo, hi + 1))


def _estimate(model: FeatureModel, clone_cap: int) -> int:
    total = 1
    for feature in model.features():
        options = len(_counts(feature, clone_cap))
        if feature is not model.root:
            options += 1  # not selected
        total *= max(options, 1)
        if total > MAX_SEARCH_SPACE:
            return total
    return total


def enumerate_configurations(model: FeatureModel,
                             clone_cap: int = DEFAULT_CLONE_CAP) -> list[Configuration]:
    estimate = _estimate(model, clone_cap)
    if estimate > MAX_SEARCH_SPACE:
        raise SearchSpaceTooLarge(estimate)

    order = model.features()
    parents = model.parents()
    results: list[Configuration] = []

    def assign(i: int, selections: dict[str, int]) -> None:
        if i == len(order):
            config = Configuration(model=model.name, selections=dict(selections))
            if check_configuration(model, config, check_attributes=False).valid:
                results.append(config)
            return
        feature = order[i]
        parent = parents[feature.name]
        parent_selected = parent is None or selections.get(parent, 0) >= 1
        if feature is not model.root:
            assign(i + 1, selections)  # not selected
        if feature is model.root or parent_selected:
            for count in _counts(feature, clone_cap):
                selections[feature.name] = count
                assign(i + 1, selections)
                del selections[feature.name]

    assign(0, {})
    return results


def count_configurations(model: FeatureModel,
                         clone_cap: int = DEFAULT_CLONE_CAP) -> int:
    return len(enumerate_configurations(model, clone_cap))

"""Configuration validation against a feature model (rules R1-R8)."""

from __future__ import annotations

from ..diagnostics import ValidityReport, error
from .model import (
    ALTERNATIVE, AND, EXCLUDES, OR, REQUIRES, Configuration, FeatureModel,
)


def check_configuration(model: FeatureModel, config: Configuration,
                        check_attributes: bool = True) -> ValidityReport:
    diags = []
    by_name = model.by_name()

    if config.model and config.model != model.name:
        diags.append(error("MODEL_MISMATCH",
                           f"configuration targets model {config.model!r}, "
                           f"not {model.name!r}"))

    for name, count in config.selections.items():
        if name not in by_name:
            diags.append(error("UNKNOWN_FEATURE",
                               f"selection names unknown feature {name!r}"))
        elif count < 1:
            diags.append(error("INVALID_COUNT",
                               f"selected feature {name!r} has count {count} < 1",
                               model.path_of(name)))

    def selected(name: str) -> bool:
        return config.selections.get(name, 0) >= 1

    # R1: root selected
    if not selected(model.root.name):
        diags.append(error("R1_ROOT_NOT_SELECTED",
                           f"root feature {model.root.name!r} is not selected",
                           model.root.name))

    for feature in model.features():
        path = model.path_of(feature.name)
        parent_selected = selected(feature.name)
        # R6: clone counts within bounds
        if selected(feature.name):
            count = config.selections[feature.name]
            lo, hi = feature.card
            if not (lo <= count <= hi) or count < 1:
                diags.append(error(
                    "R6_CLONE_COUNT_OUT_OF_BOUNDS",
                    f"feature {feature.name!r} selected with count {count}, "
                    f"allowed [{lo}..{hi}]", path))
        for group in feature.groups:
            chosen = [c for c in group.children if selected(c.name)]
            # R2: selected child implies selected parent
            for child in group.children:
                if selected(child.name) and not parent_selected:
                    diags.append(error(
                        "R2_PARENT_NOT_SELECTED",
                        f"feature {child.name!r} is selected but its parent "
                        f"{feature.name!r} is not", model.path_of(child.name)))
            if not parent_selected:
                continue
            if group.kind == AND:
                # R3: mandatory children of a selected parent
                for child in group.children:
                    if child.variability == "mandatory" and not selected(child.name):
                        diags.append(error(
                            "R3_MANDATORY_MISSING",
                            f"mandatory feature {child.name!r} is not selected",
                            model.path_of(child.name)))
            elif group.kind == ALTERNATIVE:
                if len(chosen) != 1:
                    names = ", ".join(c.name for c in chosen) or "none"
                    diags.append(error(
                        "R4_ALTERNATIVE_NOT_ONE",
                        f"alternative group under {feature.name!r} needs exactly "
                        f"one selected child, found {len(chosen)} ({names})", path))
            elif group.kind == OR:
                if not chosen:
                    diags.append(error(
                        "R5_OR_EMPTY",
                        f"or group under {feature.name!r} needs at least one "
                        f"selected child", path))

    # R7: cross-tree constraints
    for c in model.constraints:
        if c.kind == REQUIRES and selected(c.lhs) and not selected(c.rhs):
            diags.append(error("R7_REQUIRES_UNMET",
                               f"{c.lhs!r} requires {c.rhs!r}", model.path_of(c.rhs)))
        elif c.kind == EXCLUDES and selected(c.lhs) and selected(c.rhs):
            diags.append(error("R7_EXCLUDES_VIOLATED",
                               f"{c.lhs!r} excludes {c.rhs!r}", model.path_of(c.rhs)))

    if check_attributes:
        diags.extend(_check_attributes(model, config))

    return ValidityReport(valid=not diags, diagnostics=diags)


def _check_attributes(model: FeatureModel, config: Configuration):
    """R8: required attributes assigned exactly once per clone instance."""
    diags = []
    by_name = model.by_name()

    for a in config.attrs:
        feature = by_name.get(a.feature)
        if feature is None:
            diags.append(error("UNKNOWN_FEATURE",
                               f"attribute assignment names unknown feature "
                               f"{a.feature!r}"))
            continue
        path = model.path_of(a.feature)
        decl = next((d for d in feature.attributes if d.name == a.name), None)
        if decl is None:
            diags.append(error("R8_UNKNOWN_ATTRIBUTE",
                               f"feature {a.feature!r} has no attribute {a.name!r}",
                               path))
            continue
        count = config.selections.get(a.feature, 0)
        if a.instance < 1 or a.instance > count:
            diags.append(error(
                "R8_INSTANCE_OUT_OF_RANGE",
                f"attribute {a.name!r} assigned to instance {a.instance} of "
                f"{a.feature!r}, selected count is {count}", path))
            continue
        if not decl.accepts(a.value):
            diags.append(error(
                "R8_ATTRIBUTE_DOMAIN",
                f"value {a.value!r} outside the domain of attribute "
                f"{a.feature}.{a.name}", path))

    seen: dict[tuple[str, int, str], int] = {}
    for a in config.attrs:
        key = (a.feature, a.instance, a.name)
        seen[key] = seen.get(key, 0) + 1
    for (feat, inst, name), n in seen.items():
        if n > 1:
            diags.append(error(
                "R8_ATTRIBUTE_DUPLICATE",
                f"attribute {feat}.{name} assigned {n} times for instance {inst}",
                model.path_of(feat) if feat in by_name else feat))

    for feature in model.features():
        count = config.selections.get(feature.name, 0)
        if count < 1:
            continue
        for decl in feature.attributes:
            if not decl.required:
                continue
            for inst in range(1, count + 1):
                if (feature.name, inst, decl.name) not in seen:
                    diags.append(error(
                        "R8_ATTRIBUTE_MISSING",
                        f"required attribute {feature.name}.{decl.name} not "
                        f"assigned for instance {inst}", model.path_of(feature.name)))
    return diags

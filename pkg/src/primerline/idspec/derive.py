"""Derive an instructional-design specification from a valid configuration.

The mapping is by well-known feature name; any other selected feature is
carried along as an opaque lineage tag so unforeseen family variations
survive derivation.
"""

from __future__ import annotations

from ..featmodel import Configuration, FeatureModel, check_configuration
from .spec import (
    ABCD, BLOOM_REVISED, ECLECTIC_GENERIC, FCRMT, GAGNE_NINE, PASI,
    PASI_MERRILL, PLAIN_3RS, PLAIN_RESOURCES, PRIMER_PAGES, PROCESS_UNITS,
    IdSpecification,
)

PASI_FEATURES = ("PASI", "Play", "Act", "Scene", "Instruction")

KNOWN_FEATURES = frozenset({
    "IPCL", "GoalsPattern", "Plain3Rs", "Bloom", "ABCD",
    "ProcessPattern", "EclecticMethod", "GagneEvents", *PASI_FEATURES,
    "InstructionalDesignModel", "MerrillModel", "FirstPrinciples",
    "GagneModel", "GenericActivity",
    "ContentPattern", "PrimerPages", "FCRMT", "PlainResources",
    "EvaluationPattern", "ContextPattern", "EnvironmentPattern",
    "GoalClassification", "GoalPriority", "High", "Medium", "Low",
})


class DerivationError(ValueError):
    def __init__(self, code: str, message: str, diagnostics=None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.diagnostics = diagnostics or []


def derive_specification(model: FeatureModel,
                         config: Configuration) -> IdSpecification:
    model_names = {f.name for f in model.features()}
    if not model_names & KNOWN_FEATURES:
        raise DerivationError(
            "MODEL_NOT_RECOGNIZED",
            f"model {model.name!r} contains none of the adult-literacy "
            f"feature names")

    report = check_configuration(model, config)
    if not report.valid:
        raise DerivationError("INVALID_CONFIG",
                              "configuration is not valid for the model",
                              report.diagnostics)

    selected = [f.name for f in model.features() if config.selected(f.name)]
    selected_set = set(selected)

    if "Bloom" in selected_set:
        goal = BLOOM_REVISED
    elif "ABCD" in selected_set:
        goal = ABCD
    else:
        goal = PLAIN_3RS

    pasi_selected = bool(selected_set & set(PASI_FEATURES))
    if "MerrillModel" in selected_set:
        process = PASI_MERRILL
    elif pasi_selected:
        process = PASI
    elif selected_set & {"GagneModel", "GagneEvents"}:
        process = GAGNE_NINE
    else:
        process = ECLECTIC_GENERIC

    if process == PASI_MERRILL or "FCRMT" in selected_set:
        content = FCRMT
    elif "PrimerPages" in selected_set:
        content = PRIMER_PAGES
    else:
        content = PLAIN_RESOURCES

    sections = []
    if "ContextPattern" in selected_set:
        sections.append("context")
    if "EnvironmentPattern" in selected_set:
        sections.append("environment")

    by_name = model.by_name()
    bounds = {}
    for unit in PROCESS_UNITS:
        feature = by_name.get(unit.capitalize())
        bounds[unit] = feature.card if feature is not None else (1, 25)

    lineage = ["IPCL"] + [n for n in selected
                          if n not in KNOWN_FEATURES and n != model.root.name]

    return IdSpecification(
        name=f"{model.name}-derived",
        base=tuple(lineage),
        goal_technique=goal,
        process_model=process,
        content_scheme=content,
        evaluation_required="EvaluationPattern" in selected_set,
        optional_sections=tuple(sections),
        process_bounds=bounds,
    )

"""The four shipped specification families and their model configurations."""

from __future__ import annotations

from ..featmodel import Configuration
from .spec import (
    ABCD, BLOOM_REVISED, ECLECTIC_GENERIC, FCRMT, GAGNE_NINE, PASI,
    PASI_MERRILL, PLAIN_3RS, PLAIN_RESOURCES, PRIMER_PAGES, IdSpecification,
)

_PASI_CHAIN = ["PASI", "Play", "Act", "Scene", "Instruction"]


def preset_specifications() -> list[IdSpecification]:
    return [
        IdSpecification(
            name="ID-Specification-1",
            base=("IPCL",),
            goal_technique=PLAIN_3RS,
            process_model=ECLECTIC_GENERIC,
            content_scheme=PRIMER_PAGES,
        ),
        IdSpecification(
            name="ID-Specification-2",
            base=("IPCL", "ProcessPattern", "ContentPattern"),
            goal_technique=PLAIN_3RS,
            process_model=PASI,
            content_scheme=FCRMT,
        ),
        IdSpecification(
            name="ID-Specification-3",
            base=("IPCL", "ProcessPattern", "ContentPattern",
                  "FirstPrinciples", "BloomRevisedTaxonomy"),
            goal_technique=BLOOM_REVISED,
            process_model=PASI_MERRILL,
            content_scheme=FCRMT,
        ),
        IdSpecification(
            name="ID-Specification-4",
            base=("IPCL", "GagneNineEvents", "ABCDTechnique"),
            goal_technique=ABCD,
            process_model=GAGNE_NINE,
            content_scheme=PLAIN_RESOURCES,
        ),
    ]


def preset_specification(number: int) -> IdSpecification:
    if not 1 <= number <= 4:
        raise ValueError(f"preset number must be 1..4, got {number}")
    return preset_specifications()[number - 1]


def preset_configuration(number: int) -> Configuration:
    """Each preset re-expressed as a selection over the adult-literacy model."""
    common = ["InstructionalDesign", "IPCL", "GoalsPattern", "ProcessPattern",
              "ContentPattern", "EvaluationPattern"]
    extra = {
        1: ["Plain3Rs", "EclecticMethod", "PrimerPages"],
        2: ["Plain3Rs", *_PASI_CHAIN, "FCRMT"],
        3: ["Bloom", *_PASI_CHAIN, "InstructionalDesignModel", "MerrillModel",
            "FirstPrinciples", "FCRMT"],
        4: ["ABCD", "GagneEvents", "InstructionalDesignModel", "GagneModel",
            "PlainResources"],
    }
    if number not in extra:
        raise ValueError(f"preset number must be 1..4, got {number}")
    selections = {name: 1 for name in common + extra[number]}
    return Configuration(model="AdultLiteracyInstructionalDesign",
                         selections=selections)

"""Instructional-design specification type and JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PLAIN_3RS = "Plain3Rs"
BLOOM_REVISED = "BloomRevised"
ABCD = "ABCD"
GOAL_TECHNIQUES = (PLAIN_3RS, BLOOM_REVISED, ABCD)

PASI = "PASI"
PASI_MERRILL = "PASI_Merrill"
GAGNE_NINE = "GagneNine"
ECLECTIC_GENERIC = "EclecticGeneric"
PROCESS_MODELS = (PASI, PASI_MERRILL, GAGNE_NINE, ECLECTIC_GENERIC)

PRIMER_PAGES = "PrimerPages"
FCRMT = "FCRMT"
PLAIN_RESOURCES = "PlainResources"
CONTENT_SCHEMES = (PRIMER_PAGES, FCRMT, PLAIN_RESOURCES)

OPTIONAL_SECTIONS = ("context", "environment")
PROCESS_UNITS = ("play", "act", "scene", "instruction")

DEFAULT_BOUNDS = {unit: (1, 25) for unit in PROCESS_UNITS}


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class IdSpecification:
    name: str
    base: tuple[str, ...] = ("IPCL",)
    goal_technique: str = PLAIN_3RS
    process_model: str = ECLECTIC_GENERIC
    content_scheme: str = PLAIN_RESOURCES
    evaluation_required: bool = True
    optional_sections: tuple[str, ...] = ()
    process_bounds: dict = field(default_factory=lambda: dict(DEFAULT_BOUNDS))

    def __post_init__(self):
        if "IPCL" not in self.base:
            raise SpecError("lineage must include 'IPCL'")
        if self.goal_technique not in GOAL_TECHNIQUES:
            raise SpecError(f"unknown goal technique {self.goal_technique!r}")
        if self.process_model not in PROCESS_MODELS:
            raise SpecError(f"unknown process model {self.process_model!r}")
        if self.content_scheme not in CONTENT_SCHEMES:
            raise SpecError(f"unknown content scheme {self.content_scheme!r}")
        if self.process_model == PASI_MERRILL and self.content_scheme != FCRMT:
            raise SpecError("PASI_Merrill requires the FCRMT content scheme")
        for section in self.optional_sections:
            if section not in OPTIONAL_SECTIONS:
                raise SpecError(f"unknown optional section {section!r}")
        for unit in PROCESS_UNITS:
            lo, hi = self.process_bounds.get(unit, (1, 25))
            if not (1 <= lo <= hi <= 25):
                raise SpecError(f"{unit} bounds [{lo}..{hi}] must lie within [1..25]")

    @property
    def uses_pasi(self) -> bool:
        return self.process_model in (PASI, PASI_MERRILL)

    def to_dict(self) -> dict:
        return {
            "base": list(self.base),
            "content_scheme": self.content_scheme,
            "evaluation_required": self.evaluation_required,
            "goal_technique": self.goal_technique,
            "name": self.name,
            "optional_sections": list(self.optional_sections),
            "process_bounds": {u: list(self.process_bounds[u]) for u in PROCESS_UNITS},
            "process_model": self.process_model,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False,
                          indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> IdSpecification:
        bounds = {
            u: tuple(data.get("process_bounds", {}).get(u, (1, 25)))
            for u in PROCESS_UNITS
        }
        return cls(
            name=data["name"],
            base=tuple(data.get("base", ("IPCL",))),
            goal_technique=data.get("goal_technique", PLAIN_3RS),
            process_model=data.get("process_model", ECLECTIC_GENERIC),
            content_scheme=data.get("content_scheme", PLAIN_RESOURCES),
            evaluation_required=bool(data.get("evaluation_required", True)),
            optional_sections=tuple(data.get("optional_sections", ())),
            process_bounds=bounds,
        )

    @classmethod
    def from_json(cls, text: str) -> IdSpecification:
        return cls.from_dict(json.loads(text))

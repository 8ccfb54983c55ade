"""Editor form-schema generation from an instructional-design specification."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .spec import (
    ABCD, BLOOM_REVISED, FCRMT, PASI_MERRILL, PRIMER_PAGES, IdSpecification,
)
from .taxonomies import ABCD_PARTS, BLOOM_LEVELS, MERRILL_PRINCIPLES

SHORT_TEXT = "short-text"
LONG_TEXT = "long-text"
ENUM = "enum"
ASSET_AUDIO = "asset-audio"
ASSET_IMAGE = "asset-image"

MAX_REPEAT = 99


@dataclass(frozen=True)
class FormField:
    id: str
    label: str
    kind: str
    required: bool = False
    options: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind == ENUM and len(self.options) < 2:
            raise ValueError(f"enum field {self.id!r} needs at least 2 options")

    def to_dict(self) -> dict:
        data = {"id": self.id, "kind": self.kind, "label": self.label,
                "required": self.required}
        if self.kind == ENUM:
            data["options"] = list(self.options)
        return data


@dataclass(frozen=True)
class FormSection:
    id: str
    title: str
    repeat: tuple[int, int] = (1, 1)
    fields: tuple[FormField, ...] = ()
    subsections: tuple["FormSection", ...] = ()

    def __post_init__(self):
        lo, hi = self.repeat
        if not 0 <= lo <= hi:
            raise ValueError(f"section {self.id!r} repeat bounds [{lo}..{hi}] invalid")

    def to_dict(self) -> dict:
        return {
            "fields": [f.to_dict() for f in self.fields],
            "id": self.id,
            "repeat": list(self.repeat),
            "subsections": [s.to_dict() for s in self.subsections],
            "title": self.title,
        }


@dataclass(frozen=True)
class EditorSchema:
    spec: str
    sections: tuple[FormSection, ...] = ()

    def to_dict(self) -> dict:
        return {"sections": [s.to_dict() for s in self.sections],
                "spec": self.spec}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False,
                          indent=2) + "\n"


def _frame_section(frame_id: str, title: str) -> FormSection:
    return FormSection(
        id=frame_id, title=title, repeat=(0, 1),
        fields=(
            FormField("text", "Text", LONG_TEXT),
            FormField("sound", "Sound", ASSET_AUDIO),
            FormField("image", "Image", ASSET_IMAGE),
        ))


def _goal_fields(spec: IdSpecification) -> tuple[FormField, ...]:
    if spec.goal_technique == ABCD:
        return tuple(
            FormField(part, part.capitalize(), SHORT_TEXT, required=True)
            for part in ABCD_PARTS)
    if spec.goal_technique == BLOOM_REVISED:
        return (
            FormField("bloom_level", "Bloom level", ENUM, required=True,
                      options=BLOOM_LEVELS),
            FormField("text", "Goal text", LONG_TEXT, required=True),
        )
    return (FormField("text", "Goal text", LONG_TEXT, required=True),)


def _process_section(spec: IdSpecification) -> FormSection:
    unit_fields = (FormField("title", "Title", SHORT_TEXT, required=True),)
    instruction_fields = list(unit_fields) + [
        FormField("text", "Text", LONG_TEXT),
        FormField("sound", "Sound", ASSET_AUDIO),
        FormField("image", "Image", ASSET_IMAGE),
    ]
    if spec.process_model == PASI_MERRILL:
        instruction_fields.append(
            FormField("merrill_principle", "Merrill principle", ENUM,
                      required=True, options=MERRILL_PRINCIPLES))
    instruction = FormSection("instruction", "Instruction",
                              repeat=spec.process_bounds["instruction"],
                              fields=tuple(instruction_fields))
    scene = FormSection("scene", "Scene", repeat=spec.process_bounds["scene"],
                        fields=unit_fields, subsections=(instruction,))
    act = FormSection("act", "Act", repeat=spec.process_bounds["act"],
                      fields=unit_fields, subsections=(scene,))
    return FormSection("play", "Play", repeat=spec.process_bounds["play"],
                       fields=unit_fields, subsections=(act,))


def _content_sections(spec: IdSpecification) -> tuple[FormSection, ...]:
    if spec.content_scheme == FCRMT:
        case = FormSection(
            "case", "Case", repeat=(0, MAX_REPEAT),
            fields=(
                FormField("text", "Word", SHORT_TEXT, required=True),
                FormField("sound", "Sound", ASSET_AUDIO),
                FormField("image", "Image", ASSET_IMAGE),
            ))
        fact = FormSection(
            "fact", "Fact", repeat=(1, MAX_REPEAT),
            fields=(
                FormField("text", "Syllable or letter", SHORT_TEXT, required=True),
                FormField("sound", "Sound", ASSET_AUDIO),
            ),
            subsections=(case,))
        extras = tuple(
            FormSection(
                kind, kind.capitalize(), repeat=(0, MAX_REPEAT),
                fields=(
                    FormField("text", "Text", LONG_TEXT, required=True),
                    FormField("sound", "Sound", ASSET_AUDIO),
                    FormField("image", "Image", ASSET_IMAGE),
                ))
            for kind in ("rule", "model", "theory"))
        return (fact,) + extras
    if spec.content_scheme == PRIMER_PAGES:
        return (FormSection(
            "page", "Primer page", repeat=(1, MAX_REPEAT),
            fields=(
                FormField("text", "Page text", LONG_TEXT, required=True),
                FormField("image", "Image", ASSET_IMAGE),
            )),)
    return (FormSection(
        "resource", "Resource", repeat=(0, MAX_REPEAT),
        fields=(
            FormField("text", "Text", LONG_TEXT, required=True),
            FormField("sound", "Sound", ASSET_AUDIO),
            FormField("image", "Image", ASSET_IMAGE),
        )),)


def generate_editor_schema(spec: IdSpecification) -> EditorSchema:
    subsections: list[FormSection] = [
        FormSection(
            "instructions", "Lesson instructions", repeat=(0, 1),
            subsections=(
                _frame_section("start", "Start frame"),
                _frame_section("middle", "Middle frame"),
                _frame_section("end", "End frame"),
            )),
        FormSection(
            "goal", "Goal", repeat=(1, 25),
            fields=_goal_fields(spec)),
    ]
    if spec.uses_pasi:
        subsections.append(_process_section(spec))
    subsections.extend(_content_sections(spec))
    if spec.evaluation_required:
        subsections.append(FormSection(
            "evaluation", "Evaluation", repeat=(1, 1),
            fields=(FormField("text", "Evaluation notes", LONG_TEXT,
                              required=True),)))
    for section_id in spec.optional_sections:
        subsections.append(FormSection(
            section_id, section_id.capitalize(), repeat=(0, 1),
            fields=(FormField("text", "Notes", LONG_TEXT),)))

    lesson = FormSection(
        "lesson", "Lesson", repeat=(1, MAX_REPEAT),
        fields=(FormField("title", "Lesson title", SHORT_TEXT, required=True),),
        subsections=tuple(subsections))
    return EditorSchema(spec=spec.name, sections=(lesson,))

"""Deterministic primer-bundle generation.

A bundle is manifest.json + lessons/NN.json + assets.json. Timelines encode
the puppet-theatre presentation: syllables drop into slots, join, and the
formed word is revealed.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .diagnostics import Diagnostic
from .idinstance import (
    AssetRef, Fact, IdInstance, InstructionFrame, ProcessNode, iter_asset_refs,
)
from .idinstance.segment import decompose_word, taught_facts_through
from .idinstance.validate import validate_instance
from .idspec import IdSpecification

SHOW_FRAME = "show_frame"
PRESENT_GOAL = "present_goal"
DROP_FACT = "drop_fact"
JOIN = "join"
REVEAL_WORD = "reveal_word"
PRACTICE_PROMPT = "practice_prompt"


class GenerationError(Exception):
    def __init__(self, code: str, message: str,
                 diagnostics: list[Diagnostic] | None = None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.diagnostics = diagnostics or []


@dataclass(frozen=True)
class TimelineStep:
    id: int
    kind: str
    payload: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        data = {"id": self.id, "kind": self.kind}
        data.update(self.payload)
        return data


@dataclass
class PrimerBundle:
    manifest: dict
    timelines: list[list[TimelineStep]]
    assets: list[dict]
    processes: list[list[dict] | None]


def _frame_payload(slot: str, frame: InstructionFrame) -> dict:
    payload: dict = {"frame": slot}
    if frame.text is not None:
        payload["text"] = frame.text
    if frame.sound is not None:
        payload["sound"] = frame.sound.path
    if frame.image is not None:
        payload["image"] = frame.image.path
    return payload


def _process_dict(node: ProcessNode) -> dict:
    data: dict = {"kind": node.kind, "title": node.title}
    if node.frame is not None:
        if node.frame.text is not None:
            data["text"] = node.frame.text
        if node.frame.sound is not None:
            data["sound"] = node.frame.sound.path
        if node.frame.image is not None:
            data["image"] = node.frame.image.path
    data["children"] = [_process_dict(c) for c in node.children]
    return data


def _lesson_timeline(instance: IdInstance, lesson_index: int) -> list[TimelineStep]:
    lesson = instance.lessons[lesson_index]
    taught = taught_facts_through(instance, lesson_index)
    steps: list[TimelineStep] = []

    def emit(kind: str, payload: dict) -> None:
        steps.append(TimelineStep(id=len(steps), kind=kind, payload=payload))

    start = lesson.frames.get("start")
    if start is not None:
        emit(SHOW_FRAME, _frame_payload("start", start))

    for goal in lesson.goals:
        payload: dict = {"text": goal.text}
        if goal.sound is not None:
            payload["sound"] = goal.sound.path
        emit(PRESENT_GOAL, payload)

    any_cases = False
    for item in lesson.content:
        if not isinstance(item, Fact):
            continue
        fact_payload: dict = {"slot": 0, "text": item.text}
        emit(DROP_FACT, fact_payload)
        reveal: dict = {"text": item.text}
        if item.sound is not None:
            reveal["sound"] = item.sound.path
        emit(REVEAL_WORD, reveal)
        for case in item.cases:
            any_cases = True
            parts = decompose_word(case.text, taught)
            if parts is None:
                raise GenerationError(
                    "UNDECOMPOSABLE_WORD",
                    f"case {case.text!r} in lesson {lesson_index + 1} cannot be "
                    f"decomposed; validate the instance first")
            for slot, syllable in enumerate(parts):
                emit(DROP_FACT, {"slot": slot, "text": syllable})
            emit(JOIN, {"text": case.text})
            word: dict = {"text": case.text}
            if case.sound is not None:
                word["sound"] = case.sound.path
            if case.image is not None:
                word["image"] = case.image.path
            emit(REVEAL_WORD, word)

    if any_cases:
        emit(PRACTICE_PROMPT, {"text": lesson.title})

    end = lesson.frames.get("end")
    if end is not None:
        emit(SHOW_FRAME, _frame_payload("end", end))
    return steps


def _asset_manifest(instance: IdInstance, timelines: list[list[TimelineStep]],
                    assets_dir: str | None) -> list[dict]:
    entries: dict[tuple[str, str], dict] = {}
    for lesson_index, ref in iter_asset_refs(instance):
        key = (ref.path, ref.kind)
        if key not in entries:
            present = bool(
                assets_dir is not None
                and os.path.exists(os.path.join(assets_dir, ref.path)))
            entries[key] = {"kind": ref.kind, "path": ref.path,
                            "present": present, "steps": []}
    for lesson_index, steps in enumerate(timelines):
        for step in steps:
            for field_name, kind in (("sound", "audio"), ("image", "image")):
                path = step.payload.get(field_name)
                if path is None:
                    continue
                entry = entries.setdefault(
                    (path, kind),
                    {"kind": kind, "path": path, "present": False, "steps": []})
                entry["steps"].append({"lesson": lesson_index, "step": step.id})
    return [entries[k] for k in sorted(entries)]


def generate_primer(instance: IdInstance, spec: IdSpecification,
                    assets_dir: str | None = None) -> PrimerBundle:
    diags = validate_instance(instance, spec)
    errors = [d for d in diags if d.severity == "error"]
    if errors:
        raise GenerationError("VALIDATION_ERRORS_PRESENT",
                              f"{len(errors)} validation errors", errors)

    timelines = [_lesson_timeline(instance, i)
                 for i in range(len(instance.lessons))]
    manifest = {
        "lang": instance.lang,
        "lessons": [
            {"file": f"lessons/{i:02d}.json", "index": i, "title": lesson.title}
            for i, lesson in enumerate(instance.lessons)
        ],
        "spec": instance.spec,
        "title": instance.title,
    }
    processes = [
        [_process_dict(p) for p in lesson.plays] if lesson.plays else None
        for lesson in instance.lessons
    ]
    assets = _asset_manifest(instance, timelines, assets_dir)
    return PrimerBundle(manifest=manifest, timelines=timelines,
                        assets=assets, processes=processes)


def _dump_json(data, path: str) -> None:
    text = json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def write_bundle(bundle: PrimerBundle, out_dir: str) -> list[str]:
    """Write the bundle layout; returns the relative paths written."""
    os.makedirs(os.path.join(out_dir, "lessons"), exist_ok=True)
    written = ["manifest.json"]
    _dump_json(bundle.manifest, os.path.join(out_dir, "manifest.json"))
    for entry, steps, process in zip(bundle.manifest["lessons"],
                                     bundle.timelines, bundle.processes):
        lesson_doc: dict = {
            "steps": [s.to_dict() for s in steps],
            "title": entry["title"],
        }
        if process is not None:
            lesson_doc["process"] = process
        _dump_json(lesson_doc, os.path.join(out_dir, entry["file"]))
        written.append(entry["file"])
    _dump_json(bundle.assets, os.path.join(out_dir, "assets.json"))
    written.append("assets.json")
    return written


def missing_asset_report(instance: IdInstance,
                         base_dir: str) -> list[tuple[AssetRef, int]]:
    """Asset refs whose resolved file is absent, with their lesson index."""
    missing = []
    seen = set()
    for lesson_index, ref in iter_asset_refs(instance):
        key = (ref.path, lesson_index)
        if key in seen:
            continue
        seen.add(key)
        if not os.path.exists(os.path.join(base_dir, ref.path)):
            missing.append((ref, lesson_index))
    return missing

"""Instance conformance checking against an instructional-design spec."""

from __future__ import annotations

import os

from ..diagnostics import Diagnostic, error, warning
from ..idspec import ABCD, BLOOM_LEVELS, BLOOM_REVISED, IdSpecification
from .model import Fact, IdInstance, ProcessNode, iter_asset_refs
from .segment import decompose_word, taught_facts_through

ABCD_PARTS = ("audience", "behavior", "condition", "degree")


def _check_goals(instance: IdInstance, spec: IdSpecification,
                 diags: list[Diagnostic]) -> None:
    for i, lesson in enumerate(instance.lessons):
        where = f"lesson[{i + 1}]"
        if not lesson.goals:
            diags.append(error("GOALS_MISSING",
                               f"lesson {i + 1} ({lesson.title!r}) has no goals",
                               where))
            continue
        for j, goal in enumerate(lesson.goals, 1):
            gpath = f"{where}/goal[{j}]"
            if spec.goal_technique == ABCD:
                missing = [p for p in ABCD_PARTS
                           if not (goal.abcd and goal.abcd.get(p))]
                if missing:
                    diags.append(error(
                        "ABCD_FIELDS_MISSING",
                        f"goal {j} in lesson {i + 1} lacks ABCD fields: "
                        f"{', '.join(missing)}", gpath))
            elif spec.goal_technique == BLOOM_REVISED:
                if goal.bloom is None:
                    diags.append(error("BLOOM_LEVEL_MISSING",
                                       f"goal {j} in lesson {i + 1} has no Bloom "
                                       f"level", gpath))
                elif goal.bloom not in BLOOM_LEVELS:
                    diags.append(error(
                        "BLOOM_LEVEL_INVALID",
                        f"goal {j} in lesson {i + 1} has unknown Bloom level "
                        f"{goal.bloom!r}", gpath))


def _check_process(instance: IdInstance, spec: IdSpecification,
                   diags: list[Diagnostic]) -> None:
    if not spec.uses_pasi:
        return

    def check_nodes(nodes: list[ProcessNode], kind: str, path: str) -> None:
        lo, hi = spec.process_bounds[kind]
        if nodes and not lo <= len(nodes) <= hi:
            diags.append(error(
                "PROCESS_BOUNDS",
                f"{len(nodes)} {kind} nodes at {path}, allowed [{lo}..{hi}]",
                path))
        for k, node in enumerate(nodes, 1):
            if node.children:
                check_nodes(node.children, node.children[0].kind,
                            f"{path}/{kind}[{k}]")

    for i, lesson in enumerate(instance.lessons):
        if lesson.plays:
            check_nodes(lesson.plays, "play", f"lesson[{i + 1}]")


def _check_decomposition(instance: IdInstance,
                         diags: list[Diagnostic]) -> None:
    for i, lesson in enumerate(instance.lessons):
        taught = taught_facts_through(instance, i)
        for item in lesson.content:
            if not isinstance(item, Fact):
                continue
            for j, case in enumerate(item.cases, 1):
                path = f"lesson[{i + 1}]/fact[{item.text}]/case[{j}]"
                if not taught or decompose_word(case.text, taught) is None:
                    diags.append(error(
                        "KNOWN_TO_UNKNOWN",
                        f"word {case.text!r} in lesson {i + 1} cannot be "
                        f"decomposed into taught facts", path))


def _check_assets(instance: IdInstance, base_dir: str | None,
                  diags: list[Diagnostic]) -> None:
    for i, ref in iter_asset_refs(instance):
        path = f"lesson[{i + 1}]"
        if not ref.is_safe():
            diags.append(error(
                "ASSET_PATH_INVALID",
                f"asset path {ref.path!r} must be relative with no parent "
                f"traversal", path))
        elif base_dir is not None and not os.path.exists(
                os.path.join(base_dir, ref.path)):
            diags.append(warning(
                "ASSET_MISSING",
                f"asset file {ref.path!r} not found under {base_dir}", path))


def validate_instance(instance: IdInstance, spec: IdSpecification,
                      base_dir: str | None = None) -> list[Diagnostic]:
    """All conformance diagnostics; empty list means conformant."""
    diags: list[Diagnostic] = []
    if not instance.lessons:
        diags.append(error("NO_LESSONS", "instance has no lessons", "primer"))
    _check_goals(instance, spec, diags)
    _check_process(instance, spec, diags)
    _check_decomposition(instance, diags)
    _check_assets(instance, base_dir, diags)
    return diags

"""XML reader/writer for primer instance documents.

The vocabulary is fixed: primer, lesson, title, instructions, start, middle,
end, text, sound, image, goals, goal, fact, cases, case, rule, model, theory,
play, act, scene, instruction. Anything else is an UNKNOWN_ELEMENT error.
Whitespace around text content is not significant; empty <sound>/<image>
elements count as absent.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape, quoteattr

from ..diagnostics import Diagnostic, error
from .model import (
    AUDIO, FRAME_SLOTS, IMAGE, PROCESS_KINDS, AssetRef, Case, Fact, Goal,
    IdInstance, InstructionFrame, Lesson, ProcessNode, ResourceItem,
)

ABCD_ATTRS = ("audience", "behavior", "condition", "degree")


class InstanceParseError(Exception):
    def __init__(self, diagnostics: list[Diagnostic]):
        super().__init__("; ".join(str(d) for d in diagnostics))
        self.diagnostics = diagnostics


class _Reader:
    def __init__(self):
        self.diags: list[Diagnostic] = []

    def err(self, code: str, message: str, path: str) -> None:
        self.diags.append(error(code, message, path))

    def text_of(self, elem: ET.Element, path: str) -> str:
        for child in elem:
            self.err("UNKNOWN_ELEMENT", f"unexpected element <{child.tag}>",
                     f"{path}/{child.tag}")
        return (elem.text or "").strip()

    def unknown(self, child: ET.Element, path: str) -> None:
        self.err("UNKNOWN_ELEMENT", f"unexpected element <{child.tag}>",
                 f"{path}/{child.tag}")

    def asset(self, elem: ET.Element, path: str) -> AssetRef | None:
        content = self.text_of(elem, path)
        if not content:
            return None
        return AssetRef(content, AUDIO if elem.tag == "sound" else IMAGE)

    def frame(self, elem: ET.Element, path: str) -> InstructionFrame | None:
        frame = InstructionFrame()
        for child in elem:
            cpath = f"{path}/{child.tag}"
            if child.tag == "text":
                frame.text = self.text_of(child, cpath) or None
            elif child.tag == "sound":
                frame.sound = self.asset(child, cpath)
            elif child.tag == "image":
                frame.image = self.asset(child, cpath)
            else:
                self.unknown(child, path)
        if frame.is_empty():
            return None
        return frame

    def frames(self, elem: ET.Element, path: str) -> dict:
        frames: dict = {}
        for child in elem:
            if child.tag in FRAME_SLOTS:
                parsed = self.frame(child, f"{path}/{child.tag}")
                if parsed is not None:
                    frames[child.tag] = parsed
            else:
                self.unknown(child, path)
        return frames

    def goal(self, elem: ET.Element, path: str) -> Goal:
        text = ""
        sound = None
        for child in elem:
            cpath = f"{path}/{child.tag}"
            if child.tag == "text":
                text = self.text_of(child, cpath)
            elif child.tag == "sound":
                sound = self.asset(child, cpath)
            else:
                self.unknown(child, path)
        if not text:
            self.err("MISSING_TEXT", "goal requires a nonempty <text>", path)
        abcd = {k: elem.get(k) for k in ABCD_ATTRS if elem.get(k) is not None}
        return Goal(text=text, sound=sound, abcd=abcd or None,
                    bloom=elem.get("bloom"))

    def case(self, elem: ET.Element, path: str) -> Case:
        text = ""
        sound = image = None
        for child in elem:
            cpath = f"{path}/{child.tag}"
            if child.tag == "text":
                text = self.text_of(child, cpath)
            elif child.tag == "sound":
                sound = self.asset(child, cpath)
            elif child.tag == "image":
                image = self.asset(child, cpath)
            else:
                self.unknown(child, path)
        if not text:
            self.err("MISSING_TEXT", "case requires a nonempty <text>", path)
        return Case(text=text, sound=sound, image=image)

    def fact(self, elem: ET.Element, path: str) -> Fact:
        fact = Fact(text="")
        for child in elem:
            cpath = f"{path}/{child.tag}"
            if child.tag == "text":
                fact.text = self.text_of(child, cpath)
            elif child.tag == "sound":
                fact.sound = self.asset(child, cpath)
            elif child.tag == "instructions":
                fact.frames = self.frames(child, cpath)
            elif child.tag == "cases":
                for j, sub in enumerate(child, 1):
                    spath = f"{cpath}/case[{j}]"
                    if sub.tag == "case":
                        fact.cases.append(self.case(sub, spath))
                    else:
                        self.unknown(sub, cpath)
            else:
                self.unknown(child, path)
        if not fact.text:
            self.err("MISSING_TEXT", "fact requires a nonempty <text>", path)
        return fact

    def resource_item(self, elem: ET.Element, path: str) -> ResourceItem:
        item = ResourceItem(kind=elem.tag, text="")
        for child in elem:
            cpath = f"{path}/{child.tag}"
            if child.tag == "text":
                item.text = self.text_of(child, cpath)
            elif child.tag in ("sound", "image"):
                ref = self.asset(child, cpath)
                if ref is not None:
                    item.resources.append(ref)
            else:
                self.unknown(child, path)
        if not item.text:
            self.err("MISSING_TEXT", f"{elem.tag} requires a nonempty <text>", path)
        return item

    def process_node(self, elem: ET.Element, path: str) -> ProcessNode:
        node = ProcessNode(kind=elem.tag, title="")
        frame = InstructionFrame()
        child_kind = None
        depth = PROCESS_KINDS.index(elem.tag)
        if depth + 1 < len(PROCESS_KINDS):
            child_kind = PROCESS_KINDS[depth + 1]
        counts: dict[str, int] = {}
        for child in elem:
            counts[child.tag] = counts.get(child.tag, 0) + 1
            cpath = f"{path}/{child.tag}[{counts[child.tag]}]"
            if child.tag == "title":
                node.title = self.text_of(child, cpath)
            elif child.tag == "text":
                frame.text = self.text_of(child, cpath) or None
            elif child.tag == "sound":
                frame.sound = self.asset(child, cpath)
            elif child.tag == "image":
                frame.image = self.asset(child, cpath)
            elif child.tag == child_kind:
                node.children.append(self.process_node(child, cpath))
            else:
                self.unknown(child, path)
        if not node.title:
            self.err("MISSING_TEXT", f"{elem.tag} requires a nonempty <title>", path)
        if not frame.is_empty():
            node.frame = frame
        return node

    def lesson(self, elem: ET.Element, path: str) -> Lesson:
        lesson = Lesson(title="")
        counts: dict[str, int] = {}
        for child in elem:
            counts[child.tag] = counts.get(child.tag, 0) + 1
            cpath = f"{path}/{child.tag}[{counts[child.tag]}]"
            if child.tag == "title":
                lesson.title = self.text_of(child, cpath)
            elif child.tag == "instructions":
                lesson.frames = self.frames(child, cpath)
            elif child.tag == "goals":
                for j, sub in enumerate(child, 1):
                    spath = f"{cpath}/goal[{j}]"
                    if sub.tag == "goal":
                        lesson.goals.append(self.goal(sub, spath))
                    else:
                        self.unknown(sub, cpath)
            elif child.tag == "play":
                lesson.plays.append(self.process_node(child, cpath))
            elif child.tag == "fact":
                lesson.content.append(self.fact(child, cpath))
            elif child.tag in ("rule", "model", "theory"):
                lesson.content.append(self.resource_item(child, cpath))
            else:
                self.unknown(child, path)
        if not lesson.title:
            self.err("MISSING_TEXT", "lesson requires a nonempty <title>", path)
        return lesson

    def primer(self, elem: ET.Element) -> IdInstance:
        if elem.tag != "primer":
            self.err("UNKNOWN_ELEMENT",
                     f"root element must be <primer>, found <{elem.tag}>", elem.tag)
            return IdInstance(spec="", lang="", title="")
        instance = IdInstance(spec=elem.get("spec", ""),
                              lang=elem.get("lang", ""), title="")
        counts: dict[str, int] = {}
        for child in elem:
            counts[child.tag] = counts.get(child.tag, 0) + 1
            cpath = f"primer/{child.tag}[{counts[child.tag]}]"
            if child.tag == "title":
                instance.title = self.text_of(child, cpath)
            elif child.tag == "lesson":
                instance.lessons.append(self.lesson(child, cpath))
            else:
                self.unknown(child, "primer")
        if not instance.lessons:
            self.err("NO_LESSONS", "a primer requires at least one lesson", "primer")
        return instance


def parse_instance(text: str) -> IdInstance:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        line, column = exc.position
        raise InstanceParseError(
            [error("MALFORMED_XML", str(exc), line=line, column=column)]) from exc
    reader = _Reader()
    instance = reader.primer(root)
    if reader.diags:
        raise InstanceParseError(reader.diags)
    return instance


# --- serialization ---------------------------------------------------------

def _leaf(tag: str, content: str, pad: str) -> str:
    return f"{pad}<{tag}>{escape(content)}</{tag}>"


def _frame_lines(slot: str, frame: InstructionFrame, pad: str) -> list[str]:
    inner = pad + "  "
    lines = [f"{pad}<{slot}>"]
    if frame.text is not None:
        lines.append(_leaf("text", frame.text, inner))
    if frame.sound is not None:
        lines.append(_leaf("sound", frame.sound.path, inner))
    if frame.image is not None:
        lines.append(_leaf("image", frame.image.path, inner))
    lines.append(f"{pad}</{slot}>")
    return lines


def _frames_lines(frames: dict, pad: str) -> list[str]:
    present = [slot for slot in FRAME_SLOTS if frames.get(slot) is not None]
    if not present:
        return []
    lines = [f"{pad}<instructions>"]
    for slot in present:
        lines.extend(_frame_lines(slot, frames[slot], pad + "  "))
    lines.append(f"{pad}</instructions>")
    return lines


def _goal_lines(goal: Goal, pad: str) -> list[str]:
    attrs = ""
    if goal.abcd:
        attrs += "".join(f" {k}={quoteattr(goal.abcd[k])}"
                         for k in ABCD_ATTRS if k in goal.abcd)
    if goal.bloom is not None:
        attrs += f" bloom={quoteattr(goal.bloom)}"
    inner = pad + "  "
    lines = [f"{pad}<goal{attrs}>", _leaf("text", goal.text, inner)]
    if goal.sound is not None:
        lines.append(_leaf("sound", goal.sound.path, inner))
    lines.append(f"{pad}</goal>")
    return lines


def _case_lines(case: Case, pad: str) -> list[str]:
    inner = pad + "  "
    lines = [f"{pad}<case>", _leaf("text", case.text, inner)]
    if case.sound is not None:
        lines.append(_leaf("sound", case.sound.path, inner))
    if case.image is not None:
        lines.append(_leaf("image", case.image.path, inner))
    lines.append(f"{pad}</case>")
    return lines


def _fact_lines(fact: Fact, pad: str) -> list[str]:
    inner = pad + "  "
    lines = [f"{pad}<fact>", _leaf("text", fact.text, inner)]
    if fact.sound is not None:
        lines.append(_leaf("sound", fact.sound.path, inner))
    lines.extend(_frames_lines(fact.frames, inner))
    if fact.cases:
        lines.append(f"{inner}<cases>")
        for case in fact.cases:
            lines.extend(_case_lines(case, inner + "  "))
        lines.append(f"{inner}</cases>")
    lines.append(f"{pad}</fact>")
    return lines


def _resource_lines(item: ResourceItem, pad: str) -> list[str]:
    inner = pad + "  "
    lines = [f"{pad}<{item.kind}>", _leaf("text", item.text, inner)]
    for ref in item.resources:
        tag = "sound" if ref.kind == AUDIO else "image"
        lines.append(_leaf(tag, ref.path, inner))
    lines.append(f"{pad}</{item.kind}>")
    return lines


def _node_lines(node: ProcessNode, pad: str) -> list[str]:
    inner = pad + "  "
    lines = [f"{pad}<{node.kind}>", _leaf("title", node.title, inner)]
    if node.frame is not None:
        if node.frame.text is not None:
            lines.append(_leaf("text", node.frame.text, inner))
        if node.frame.sound is not None:
            lines.append(_leaf("sound", node.frame.sound.path, inner))
        if node.frame.image is not None:
            lines.append(_leaf("image", node.frame.image.path, inner))
    for child in node.children:
        lines.extend(_node_lines(child, inner))
    lines.append(f"{pad}</{node.kind}>")
    return lines


def _lesson_lines(lesson: Lesson, pad: str) -> list[str]:
    inner = pad + "  "
    lines = [f"{pad}<lesson>", _leaf("title", lesson.title, inner)]
    lines.extend(_frames_lines(lesson.frames, inner))
    if lesson.goals:
        lines.append(f"{inner}<goals>")
        for goal in lesson.goals:
            lines.extend(_goal_lines(goal, inner + "  "))
        lines.append(f"{inner}</goals>")
    for play in lesson.plays:
        lines.extend(_node_lines(play, inner))
    for item in lesson.content:
        if isinstance(item, Fact):
            lines.extend(_fact_lines(item, inner))
        else:
            lines.extend(_resource_lines(item, inner))
    lines.append(f"{pad}</lesson>")
    return lines


def serialize_instance(instance: IdInstance) -> str:
    """Canonical UTF-8 text: 2-space indent, fixed element order, '\\n' endings."""
    lines = [
        f"<primer spec={quoteattr(instance.spec)} lang={quoteattr(instance.lang)}>"
    ]
    if instance.title:
        lines.append(_leaf("title", instance.title, "  "))
    for lesson in instance.lessons:
        lines.extend(_lesson_lines(lesson, "  "))
    lines.append("</primer>")
    return "\n".join(lines) + "\n"

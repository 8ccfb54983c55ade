"""Domain model for instructional-design instance documents (primers)."""

from __future__ import annotations

from dataclasses import dataclass, field

AUDIO = "audio"
IMAGE = "image"

FRAME_SLOTS = ("start", "middle", "end")
PROCESS_KINDS = ("play", "act", "scene", "instruction")


@dataclass(frozen=True)
class AssetRef:
    path: str
    kind: str  # AUDIO | IMAGE

    def is_safe(self) -> bool:
        """Relative path, no parent-directory traversal."""
        if not self.path or self.path.startswith(("/", "\\")):
            return False
        if len(self.path) > 1 and self.path[1] == ":":  # windows drive
            return False
        segments = self.path.replace("\\", "/").split("/")
        return ".." not in segments


@dataclass
class InstructionFrame:
    text: str | None = None
    sound: AssetRef | None = None
    image: AssetRef | None = None

    def is_empty(self) -> bool:
        return self.text is None and self.sound is None and self.image is None


@dataclass
class Goal:
    text: str
    sound: AssetRef | None = None
    abcd: dict | None = None       # audience/behavior/condition/degree
    bloom: str | None = None


@dataclass
class Case:
    text: str
    sound: AssetRef | None = None
    image: AssetRef | None = None


@dataclass
class Fact:
    text: str
    sound: AssetRef | None = None
    cases: list[Case] = field(default_factory=list)
    frames: dict = field(default_factory=dict)  # optional start/middle/end


@dataclass
class ResourceItem:
    """rule / model / theory content: text plus asset resources."""
    kind: str  # "rule" | "model" | "theory"
    text: str
    resources: list[AssetRef] = field(default_factory=list)


ContentItem = Fact | ResourceItem


@dataclass
class ProcessNode:
    kind: str  # play | act | scene | instruction
    title: str
    frame: InstructionFrame | None = None
    children: list["ProcessNode"] = field(default_factory=list)


@dataclass
class Lesson:
    title: str
    frames: dict = field(default_factory=dict)  # slot -> InstructionFrame
    goals: list[Goal] = field(default_factory=list)
    plays: list[ProcessNode] = field(default_factory=list)
    content: list[ContentItem] = field(default_factory=list)

    def facts(self) -> list[Fact]:
        return [c for c in self.content if isinstance(c, Fact)]


@dataclass
class IdInstance:
    spec: str
    lang: str
    title: str
    lessons: list[Lesson] = field(default_factory=list)


def iter_asset_refs(instance: IdInstance):
    """Yield (lesson_index, AssetRef) in document order."""
    def frame_refs(frame: InstructionFrame | None):
        if frame is None:
            return
        if frame.sound is not None:
            yield frame.sound
        if frame.image is not None:
            yield frame.image

    def node_refs(node: ProcessNode):
        yield from frame_refs(node.frame)
        for child in node.children:
            yield from node_refs(child)

    for i, lesson in enumerate(instance.lessons):
        for slot in FRAME_SLOTS:
            yield from ((i, r) for r in frame_refs(lesson.frames.get(slot)))
        for goal in lesson.goals:
            if goal.sound is not None:
                yield i, goal.sound
        for play in lesson.plays:
            yield from ((i, r) for r in node_refs(play))
        for item in lesson.content:
            if isinstance(item, Fact):
                if item.sound is not None:
                    yield i, item.sound
                for slot in FRAME_SLOTS:
                    yield from ((i, r) for r in frame_refs(item.frames.get(slot)))
                for case in item.cases:
                    if case.sound is not None:
                        yield i, case.sound
                    if case.image is not None:
                        yield i, case.image
            else:
                for ref in item.resources:
                    yield i, ref

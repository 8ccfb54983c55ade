"""Bundled Hindi sample primer used by tests, docs and the demo pipeline."""

from __future__ import annotations

from .model import AssetRef, Case, Fact, Goal, IdInstance, InstructionFrame, Lesson
from .xml_io import serialize_instance


def _audio(path: str) -> AssetRef:
    return AssetRef(path, "audio")


def _image(path: str) -> AssetRef:
    return AssetRef(path, "image")


def hindi_sample_instance() -> IdInstance:
    lesson1 = Lesson(
        title="मन का काम",
        frames={
            "start": InstructionFrame(
                sound=_audio("sounds/hsounds/IntroductionInstruction.wav"),
                image=_image("images/namaskar.png")),
            "middle": InstructionFrame(
                sound=_audio("sounds/hsounds/MiddleInstruction.wav"),
                image=_image("images/namaskar.png")),
            "end": InstructionFrame(
                sound=_audio("sounds/hsounds/SummaryInstruction.wav"),
                image=_image("images/summary.png")),
        },
        goals=[
            Goal(text="इस पाठ में इमारत लक्ष्य (म, न) को पढ़ना"),
            Goal(text="इस पाठ में इमारत लक्ष्य (म, न) को पहचानना"),
        ],
        content=[
            Fact(text="म", sound=_audio("sounds/hsounds/ma.wav")),
            Fact(
                text="न",
                sound=_audio("sounds/hsounds/na.wav"),
                cases=[
                    Case(text="नम", sound=_audio("sounds/hsounds/nam.wav")),
                    Case(text="मन", sound=_audio("sounds/hsounds/man.wav")),
                    Case(text="नमन", sound=_audio("sounds/hsounds/naman.wav"),
                         image=_image("images/naman.png")),
                ]),
        ],
    )
    lesson2 = Lesson(
        title="नर और रन",
        frames={
            "start": InstructionFrame(
                sound=_audio("sounds/hsounds/IntroductionInstruction2.wav"),
                image=_image("images/namaskar.png")),
        },
        goals=[
            Goal(text="इस पाठ में इमारत लक्ष्य (र) को पढ़ना"),
        ],
        content=[
            Fact(
                text="र",
                sound=_audio("sounds/hsounds/ra.wav"),
                cases=[
                    Case(text="नर", sound=_audio("sounds/hsounds/nar.wav")),
                    Case(text="रन", sound=_audio("sounds/hsounds/ran.wav")),
                    Case(text="मरन", sound=_audio("sounds/hsounds/maran.wav")),
                ]),
        ],
    )
    return IdInstance(
        spec="ID-Specification-2",
        lang="hi",
        title="हिंदी साक्षरता प्राइमर",
        lessons=[lesson1, lesson2],
    )


def hindi_sample_xml() -> str:
    return serialize_instance(hindi_sample_instance())

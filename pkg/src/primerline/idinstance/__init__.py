from .model import (
    AUDIO, FRAME_SLOTS, IMAGE, PROCESS_KINDS, AssetRef, Case, ContentItem,
    Fact, Goal, IdInstance, InstructionFrame, Lesson, ProcessNode,
    ResourceItem, iter_asset_refs,
)
from .xml_io import InstanceParseError, parse_instance, serialize_instance
from .segment import EmptyWordError, decompose_word, taught_facts_through
from .validate import validate_instance
from .samples import hindi_sample_instance, hindi_sample_xml

__all__ = [
    "AUDIO", "FRAME_SLOTS", "IMAGE", "PROCESS_KINDS", "AssetRef", "Case",
    "ContentItem", "Fact", "Goal", "IdInstance", "InstructionFrame", "Lesson",
    "ProcessNode", "ResourceItem", "iter_asset_refs",
    "InstanceParseError", "parse_instance", "serialize_instance",
    "EmptyWordError", "decompose_word", "taught_facts_through",
    "validate_instance", "hindi_sample_instance", "hindi_sample_xml",
]

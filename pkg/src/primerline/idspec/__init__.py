from .spec import (
    ABCD, BLOOM_REVISED, CONTENT_SCHEMES, ECLECTIC_GENERIC, FCRMT, GAGNE_NINE,
    GOAL_TECHNIQUES, PASI, PASI_MERRILL, PLAIN_3RS, PLAIN_RESOURCES,
    PRIMER_PAGES, PROCESS_MODELS, PROCESS_UNITS, IdSpecification, SpecError,
)
from .presets import (
    preset_configuration, preset_specification, preset_specifications,
)
from .derive import KNOWN_FEATURES, DerivationError, derive_specification
from .editor import (
    ASSET_AUDIO, ASSET_IMAGE, ENUM, LONG_TEXT, SHORT_TEXT, EditorSchema,
    FormField, FormSection, generate_editor_schema,
)
from .taxonomies import ABCD_PARTS, BLOOM_LEVELS, GAGNE_EVENTS, MERRILL_PRINCIPLES

__all__ = [
    "ABCD", "BLOOM_REVISED", "CONTENT_SCHEMES", "ECLECTIC_GENERIC", "FCRMT",
    "GAGNE_NINE", "GOAL_TECHNIQUES", "PASI", "PASI_MERRILL", "PLAIN_3RS",
    "PLAIN_RESOURCES", "PRIMER_PAGES", "PROCESS_MODELS", "PROCESS_UNITS",
    "IdSpecification", "SpecError",
    "preset_configuration", "preset_specification", "preset_specifications",
    "KNOWN_FEATURES", "DerivationError", "derive_specification",
    "ASSET_AUDIO", "ASSET_IMAGE", "ENUM", "LONG_TEXT", "SHORT_TEXT",
    "EditorSchema", "FormField", "FormSection", "generate_editor_schema",
    "ABCD_PARTS", "BLOOM_LEVELS", "GAGNE_EVENTS", "MERRILL_PRINCIPLES",
]

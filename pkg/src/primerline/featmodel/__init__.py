from .model import (
    ALTERNATIVE, AND, ENUM, EXCLUDES, INT_RANGE, MANDATORY, OPTIONAL, OR,
    REQUIRES, TEXT, AttributeAssignment, AttributeDecl, Configuration,
    CrossTreeConstraint, Feature, FeatureModel, Group,
)
from .parser import ModelParseError, parse_model
from .serializer import serialize_model
from .validate import check_configuration
from .enumerate import (
    DEFAULT_CLONE_CAP, SearchSpaceTooLarge, count_configurations,
    enumerate_configurations,
)
from .presets import (
    ADULT_LITERACY_SOURCE, FIG8_SOURCE, adult_literacy_model, fig8_model,
)

__all__ = [
    "ALTERNATIVE", "AND", "ENUM", "EXCLUDES", "INT_RANGE", "MANDATORY",
    "OPTIONAL", "OR", "REQUIRES", "TEXT",
    "AttributeAssignment", "AttributeDecl", "Configuration",
    "CrossTreeConstraint", "Feature", "FeatureModel", "Group",
    "ModelParseError", "parse_model", "serialize_model",
    "check_configuration", "DEFAULT_CLONE_CAP", "SearchSpaceTooLarge",
    "count_configurations", "enumerate_configurations",
    "ADULT_LITERACY_SOURCE", "FIG8_SOURCE", "adult_literacy_model",
    "fig8_model",
]

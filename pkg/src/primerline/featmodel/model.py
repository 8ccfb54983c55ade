"""Feature-model domain types.

A model is a tree of features. Each feature owns an ordered list of groups;
plain child declarations accumulate into "and" groups, while alternative/or
declarations form their own group. Cross-tree constraints live on the model.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

AND = "and"
ALTERNATIVE = "alternative"
OR = "or"

MANDATORY = "mandatory"
OPTIONAL = "optional"

REQUIRES = "requires"
EXCLUDES = "excludes"

ENUM = "enum"
INT_RANGE = "int"
TEXT = "text"


@dataclass(frozen=True)
class AttributeDecl:
    name: str
    domain: str                      # ENUM | INT_RANGE | TEXT
    required: bool = False
    values: tuple[str, ...] = ()     # enum literals
    lo: int = 0                      # int-range bounds
    hi: int = 0

    def accepts(self, value: object) -> bool:
        if self.domain == ENUM:
            return isinstance(value, str) and value in self.values
        if self.domain == INT_RANGE:
            return isinstance(value, int) and not isinstance(value, bool) \
                and self.lo <= value <= self.hi
        return isinstance(value, str)


@dataclass(frozen=True)
class CrossTreeConstraint:
    kind: str   # REQUIRES | EXCLUDES
    lhs: str
    rhs: str


@dataclass
class Feature:
    name: str
    variability: str = OPTIONAL            # MANDATORY | OPTIONAL
    card: tuple[int, int] = (1, 1)         # clone bounds [min..max]
    groups: list[Group] = field(default_factory=list)
    attributes: list[AttributeDecl] = field(default_factory=list)

    @property
    def is_clone(self) -> bool:
        return self.card != (1, 1)

    def children(self) -> list[Feature]:
        return [c for g in self.groups for c in g.children]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Feature):
            return NotImplemented
        return (self.name, self.variability, self.card, self.groups,
                self.attributes) == \
               (other.name, other.variability, other.card, other.groups,
                other.attributes)


@dataclass
class Group:
    kind: str                               # AND | ALTERNATIVE | OR
    children: list[Feature] = field(default_factory=list)


@dataclass
class FeatureModel:
    name: str
    root: Feature
    constraints: list[CrossTreeConstraint] = field(default_factory=list)

    def features(self) -> list[Feature]:
        """All features in depth-first preorder, children in declaration order."""
        out: list[Feature] = []

        def walk(f: Feature) -> None:
            out.append(f)
            for child in f.children():
                walk(child)

        walk(self.root)
        return out

    def by_name(self) -> dict[str, Feature]:
        return {f.name: f for f in self.features()}

    def parents(self) -> dict[str, str | None]:
        out: dict[str, str | None] = {self.root.name: None}
        for f in self.features():
            for child in f.children():
                out[child.name] = f.name
        return out

    def path_of(self, name: str) -> str:
        parents = self.parents()
        parts = [name]
        while parents.get(parts[0]) is not None:
            parts.insert(0, parents[parts[0]])  # type: ignore[arg-type]
        return "/".join(parts)


@dataclass(frozen=True)
class AttributeAssignment:
    feature: str
    instance: int          # clone index, 1-based
    name: str
    value: object


@dataclass
class Configuration:
    model: str
    selections: dict[str, int] = field(default_factory=dict)
    attrs: list[AttributeAssignment] = field(default_factory=list)

    def selected(self, name: str) -> bool:
        return self.selections.get(name, 0) >= 1

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "select": dict(self.selections),
            "attrs": [
                {"feature": a.feature, "instance": a.instance,
                 "name": a.name, "value": a.value}
                for a in self.attrs
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> Configuration:
        attrs = [
            AttributeAssignment(a["feature"], int(a.get("instance", 1)),
                                a["name"], a["value"])
            for a in data.get("attrs", [])
        ]
        select = {str(k): int(v) for k, v in data.get("select", {}).items()}
        return cls(model=str(data.get("model", "")), selections=select, attrs=attrs)


def clone_copy(feature: Feature) -> Feature:
    """Deep structural copy, useful when deriving models from presets."""
    return replace(
        feature,
        groups=[Group(g.kind, [clone_copy(c) for c in g.children]) for g in feature.groups],
        attributes=list(feature.attributes),
    )

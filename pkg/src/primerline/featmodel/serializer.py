"""Canonical text form of a feature model.

parse_model(serialize_model(m)) is structurally identical to m. Canonical
order inside a block: groups in declaration order (and-group children as
plain feature lines, alternative/or groups as inline lists followed by any
child elaborations), then attributes; all cross-tree constraints go at the
end of the root block in declaration order.
"""

from __future__ import annotations

from .model import (
    ALTERNATIVE, AND, ENUM, INT_RANGE, MANDATORY, AttributeDecl, Feature,
    FeatureModel,
)

_INDENT = "  "


def _card_text(feature: Feature) -> str:
    return f" [{feature.card[0]}..{feature.card[1]}]" if feature.is_clone else ""


def _attr_line(attr: AttributeDecl) -> str:
    if attr.domain == ENUM:
        dom = "enum {" + ", ".join(attr.values) + "}"
    elif attr.domain == INT_RANGE:
        dom = f"int [{attr.lo}..{attr.hi}]"
    else:
        dom = "text"
    req = " required" if attr.required else ""
    return f"attribute {attr.name}: {dom}{req}"


def _needs_elaboration(feature: Feature) -> bool:
    return feature.is_clone or bool(feature.groups) or bool(feature.attributes)


def _block_lines(feature: Feature, depth: int, trailing: list[str]) -> list[str]:
    pad = _INDENT * depth
    lines: list[str] = []
    for group in feature.groups:
        if group.kind == AND:
            for child in group.children:
                lines.extend(_feature_lines(child, child.variability, depth, []))
        else:
            kw = "alternative" if group.kind == ALTERNATIVE else "or"
            names = ", ".join(c.name for c in group.children)
            lines.append(f"{pad}{kw} {{{names}}}")
            for child in group.children:
                if _needs_elaboration(child):
                    lines.extend(_feature_lines(child, "optional", depth, []))
    for attr in feature.attributes:
        lines.append(pad + _attr_line(attr))
    lines.extend(pad + t for t in trailing)
    return lines


def _feature_lines(feature: Feature, keyword: str, depth: int,
                   trailing: list[str]) -> list[str]:
    pad = _INDENT * depth
    head = f"{pad}{keyword} {feature.name}{_card_text(feature)}"
    body = _block_lines(feature, depth + 1, trailing)
    if not body:
        return [head]
    return [head + " {"] + body + [pad + "}"]


def serialize_model(model: FeatureModel) -> str:
    constraint_lines = [
        f"constraint {c.lhs} {c.kind} {c.rhs}" for c in model.constraints
    ]
    lines = [f"featuremodel {model.name}"]
    lines.extend(_feature_lines(model.root, "root", 0, constraint_lines))
    return "\n".join(lines) + "\n"

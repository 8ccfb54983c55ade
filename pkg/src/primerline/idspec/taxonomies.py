"""Pedagogical vocabularies used when expanding editor schemas.

Kept as plain data so deployments can adjust wording without code changes.
"""

BLOOM_LEVELS = (
    "remember",
    "understand",
    "apply",
    "analyze",
    "evaluate",
    "create",
)

ABCD_PARTS = (
    "audience",
    "behavior",
    "condition",
    "degree",
)

GAGNE_EVENTS = (
    "gain attention",
    "inform learners of objectives",
    "stimulate recall of prior learning",
    "present the content",
    "provide learning guidance",
    "elicit performance",
    "provide feedback",
    "assess performance",
    "enhance retention and transfer",
)

MERRILL_PRINCIPLES = (
    "task-centered",
    "activation",
    "demonstration",
    "application",
    "integration",
)

"""Known-to-unknown word decomposition over taught syllables.

Words are segmented left to right with backtracking, longer facts tried
first at each position (ties broken by teaching order), and the first
complete segmentation wins. Matching is over raw codepoint sequences;
documents are expected to be NFC-normalized.
"""

from __future__ import annotations

from .model import Fact, IdInstance


class EmptyWordError(ValueError):
    pass


def decompose_word(word: str, taught) -> list[str] | None:
    """Segment word into taught fact texts; None when no segmentation exists."""
    if word == "":
        raise EmptyWordError("EMPTY_WORD: cannot decompose an empty word")
    order = {t: i for i, t in enumerate(dict.fromkeys(taught))}
    if not order:
        raise EmptyWordError("EMPTY_WORD: taught fact set is empty")
    candidates = sorted(order, key=lambda t: (-len(t), order[t]))
    dead: set[int] = set()

    def search(pos: int) -> list[str] | None:
        if pos == len(word):
            return []
        if pos in dead:
            return None
        for fact in candidates:
            if word.startswith(fact, pos):
                rest = search(pos + len(fact))
                if rest is not None:
                    return [fact] + rest
        dead.add(pos)
        return None

    return search(0)


def taught_facts_through(instance: IdInstance, lesson_index: int) -> list[str]:
    """Fact texts taught in lessons[0..=lesson_index], first-occurrence order."""
    if not 0 <= lesson_index < len(instance.lessons):
        raise IndexError(
            f"lesson index {lesson_index} out of range "
            f"(instance has {len(instance.lessons)} lessons)")
    seen: dict[str, None] = {}
    for lesson in instance.lessons[:lesson_index + 1]:
        for item in lesson.content:
            if isinstance(item, Fact):
                seen.setdefault(item.text)
    return list(seen)

"""Generating trees with pair labels and three Baxter succession rules.

Rule A: root [1,1]; [i,j] -> [1,j+1], ..., [i,j+1], [i+1,j], ..., [i+1,1]
Rule B: root [0,2]; [i,j] -> [0,j], ..., [i-1,j], [i,j+1], [i+1,j], ..., [i+j-1,2]
Rule C: root [0,0]; [i,j] -> [i,i], [i+1,j]
                   and, if i > 0:       [i,j], ..., [i,i-1], [i-1,j], ..., [i-1,i-1]
                   and, if i, j > 0:    [i,j-1], [i-1,j-1]

Ranges are ascending and empty when their bounds are inverted.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass

from baxtab.errors import GuardExceeded

Label = tuple[int, int]

TREE_GUARD = 15


@dataclass(frozen=True)
class SuccessionRule:
    name: str
    root: Label
    successors: Callable[[Label], list[Label]]

    def __call__(self, label: Label) -> list[Label]:
        return self.successors(label)


def _rule_a(label: Label) -> list[Label]:
    i, j = label
    return [(a, j + 1) for a in range(1, i + 1)] + [(i + 1, b) for b in range(j, 0, -1)]


def _rule_b(label: Label) -> list[Label]:
    i, j = label
    return [(a, j) for a in range(i)] + [(i + s, j + 1 - s) for s in range(j)]


def _rule_c(label: Label) -> list[Label]:
    i, j = label
    out = [(i, i), (i + 1, j)]
    if i > 0:
        out += [(i, b) for b in range(j, i)]
        out += [(i - 1, b) for b in range(j, i)]
    if i > 0 and j > 0:
        out += [(i, j - 1), (i - 1, j - 1)]
    return out


_RULES = {
    "A": SuccessionRule("A", (1, 1), _rule_a),
    "B": SuccessionRule("B", (0, 2), _rule_b),
    "C": SuccessionRule("C", (0, 0), _rule_c),
}


def builtin_rule(which: str) -> SuccessionRule:
    try:
        return _RULES[which.upper()]
    except KeyError:
        raise ValueError(f"unknown rule {which!r}; expected one of A, B, C") from None


def expand_levels(rule: SuccessionRule, depth: int, guard: int = TREE_GUARD) -> list[tuple[int, Counter]]:
    """Breadth-first expansion; level 1 is the root.

    Each level is returned as (size, multiset of labels).
    """
    if depth > guard:
        raise GuardExceeded(f"depth {depth} exceeds guard {guard}")
    if depth < 1:
        return []
    level: Counter = Counter({rule.root: 1})
    out = [(1, level)]
    for _ in range(depth - 1):
        nxt: Counter = Counter()
        for label, mult in level.items():
            for child in rule(label):
                nxt[child] += mult
        level = nxt
        out.append((sum(level.values()), level))
    return out


def level_sizes(rule: SuccessionRule, depth: int, guard: int = TREE_GUARD) -> list[int]:
    return [size for size, _ in expand_levels(rule, depth, guard)]


def sibling_profile(rule: SuccessionRule, depth: int, guard: int = TREE_GUARD) -> list[Counter]:
    """Unlabelled shape of the tree: for each level >= 2, the multiset of
    sibling-group sizes (out-degrees of the parents) that form it.

    Two rules can share every level size and still differ here.
    """
    levels = expand_levels(rule, depth, guard)
    out = []
    for _, level in levels[:-1]:
        prof: Counter = Counter()
        for label, mult in level.items():
            prof[len(rule(label))] += mult
        out.append(prof)
    return out


def first_shape_difference(a: SuccessionRule, b: SuccessionRule, depth: int, guard: int = TREE_GUARD) -> int | None:
    """Smallest level (root = 1) whose sibling profile differs, or None."""
    for level, (pa, pb) in enumerate(zip(sibling_profile(a, depth, guard), sibling_profile(b, depth, guard)), start=2):
        if pa != pb:
            return level
    return None

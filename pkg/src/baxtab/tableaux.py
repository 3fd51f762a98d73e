"""Partitions, tableau sequences and their exhaustive/DP counting oracles.

Three kinds of tableau sequences are supported:

* oscillating: every move adds or removes one box;
* hesitating: moves come in pairs ``(stay, add)``, ``(remove, stay)`` or
  ``(add, remove)``;
* standard Young: boxes are only ever added.

The empty shape doubles as the row of length zero throughout.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass

from baxtab.errors import (
    BadPairing,
    GuardExceeded,
    IllegalMove,
    InvalidPartition,
    NotFromEmpty,
)

DEFAULT_GUARD = 8


@dataclass(frozen=True, order=True)
class Partition:
    """A Ferrers shape stored as a weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if p < 1:
                raise InvalidPartition(f"parts must be positive: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidPartition(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def from_padded(cls, parts: Iterable[int]) -> Partition:
        """Build a partition from a list that may carry trailing zeros."""
        return cls(tuple(p for p in parts if p != 0))

    @classmethod
    def row(cls, m: int) -> Partition:
        return cls((m,) if m else ())

    def height(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def is_row(self) -> bool:
        return len(self.parts) <= 1

    def row_length(self) -> int:
        """Length of the first row (0 for the empty shape)."""
        return self.parts[0] if self.parts else 0

    def padded(self, k: int) -> tuple[int, ...]:
        if len(self.parts) > k:
            raise InvalidPartition(f"{self} has more than {k} parts")
        return self.parts + (0,) * (k - len(self.parts))

    def addable_rows(self) -> list[int]:
        """Row indices (0-based) where a box may be added."""
        rows = [0]
        for i in range(1, len(self.parts) + 1):
            if self.parts[i - 1] > (self.parts[i] if i < len(self.parts) else 0):
                rows.append(i)
        return rows

    def removable_rows(self) -> list[int]:
        return [
            i
            for i, p in enumerate(self.parts)
            if i + 1 == len(self.parts) or self.parts[i + 1] < p
        ]

    def add_box(self, row: int) -> Partition:
        parts = list(self.parts) + [0]
        parts[row] += 1
        return Partition.from_padded(parts)

    def remove_box(self, row: int) -> Partition:
        parts = list(self.parts)
        parts[row] -= 1
        return Partition.from_padded(parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"


EMPTY = Partition()


class TableauKind(enum.Enum):
    OSCILLATING = "oscillating"
    HESITATING = "hesitating"
    STANDARD_YOUNG = "standard_young"


@dataclass(frozen=True)
class TableauSequence:
    kind: TableauKind
    shapes: tuple[Partition, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "shapes", tuple(self.shapes))

    @classmethod
    def of(cls, kind: TableauKind, *shapes: Sequence[int]) -> TableauSequence:
        """Convenience constructor: ``TableauSequence.of(kind, (), (1,), ())``."""
        return cls(kind, tuple(Partition(tuple(s)) for s in shapes))

    def max_height(self) -> int:
        return max((s.height() for s in self.shapes), default=0)

    def final_shape(self) -> Partition:
        return self.shapes[-1]

    def length(self) -> int:
        """Number of moves."""
        return len(self.shapes) - 1

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "shapes": [list(s.parts) for s in self.shapes]}

    @classmethod
    def from_json(cls, data: dict | str) -> TableauSequence:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            TableauKind(data["kind"]),
            tuple(Partition(tuple(s)) for s in data["shapes"]),
        )


@dataclass(frozen=True)
class SequenceInfo:
    valid: bool
    max_height: int
    final_shape: Partition


def classify_move(a: Partition, b: Partition) -> str:
    """Return ``"add"``, ``"remove"`` or ``"stay"`` for the move a -> b."""
    if a == b:
        return "stay"
    pa, pb = a.parts, b.parts
    width = max(len(pa), len(pb))
    diff = [y - x for x, y in zip(pa + (0,) * (width - len(pa)), pb + (0,) * (width - len(pb)))]
    nonzero = [d for d in diff if d]
    if nonzero == [1]:
        return "add"
    if nonzero == [-1]:
        return "remove"
    raise IllegalMove(f"{a} -> {b} is not a single-box move")


_HESITATING_PAIRS = {("stay", "add"), ("remove", "stay"), ("add", "remove")}


def validate_sequence(seq: TableauSequence) -> SequenceInfo:
    """Check that ``seq`` is a legal tableau sequence of its kind.

    Raises :class:`NotFromEmpty`, :class:`IllegalMove` or :class:`BadPairing`.
    """
    shapes = seq.shapes
    if not shapes or shapes[0] != EMPTY:
        raise NotFromEmpty("tableau sequences start from the empty shape")
    moves = [classify_move(a, b) for a, b in zip(shapes, shapes[1:])]

    if seq.kind is TableauKind.HESITATING:
        if len(moves) % 2:
            raise BadPairing(f"hesitating sequences need an even number of moves, got {len(moves)}")
        for i in range(0, len(moves), 2):
            pair = (moves[i], moves[i + 1])
            if pair not in _HESITATING_PAIRS:
                raise BadPairing(f"moves {i + 1},{i + 2} form {pair}")
    elif seq.kind is TableauKind.OSCILLATING:
        for i, mv in enumerate(moves):
            if mv == "stay":
                raise IllegalMove(f"move {i + 1} is a stay in an oscillating sequence")
    else:
        for i, mv in enumerate(moves):
            if mv != "add":
                raise IllegalMove(f"move {i + 1} is a {mv} in a standard Young sequence")

    return SequenceInfo(True, seq.max_height(), shapes[-1])


def _grow(shape: Partition, k: int) -> list[Partition]:
    return [shape.add_box(r) for r in shape.addable_rows() if r < k]


def _shrink(shape: Partition) -> list[Partition]:
    return [shape.remove_box(r) for r in shape.removable_rows()]


def _successors(kind: TableauKind, shape: Partition, k: int) -> list[tuple[Partition, ...]]:
    """All one-unit extensions (one move, or one move pair for hesitating)."""
    if kind is TableauKind.STANDARD_YOUNG:
        return [(s,) for s in _grow(shape, k)]
    if kind is TableauKind.OSCILLATING:
        return [(s,) for s in _grow(shape, k)] + [(s,) for s in _shrink(shape)]
    out: list[tuple[Partition, ...]] = []
    out.extend((shape, s) for s in _grow(shape, k))
    out.extend((s, s) for s in _shrink(shape))
    for up in _grow(shape, k):
        out.extend((up, s) for s in _shrink(up))
    return out


def iter_tableaux(
    kind: TableauKind,
    n: int,
    k: int,
    final_filter: Callable[[Partition], bool] | None = None,
) -> Iterator[TableauSequence]:
    """Depth-first generator behind :func:`enumerate_tableaux` (no guard)."""
    path: list[Partition] = [EMPTY]

    def rec(depth: int) -> Iterator[TableauSequence]:
        if depth == n:
            if final_filter is None or final_filter(path[-1]):
                yield TableauSequence(kind, tuple(path))
            return
        for ext in _successors(kind, path[-1], k):
            path.extend(ext)
            yield from rec(depth + 1)
            del path[-len(ext):]

    yield from rec(0)


def enumerate_tableaux(
    kind: TableauKind,
    n: int,
    k: int,
    final_filter: Callable[[Partition], bool] | None = None,
    guard: int = DEFAULT_GUARD,
) -> list[TableauSequence]:
    """Every sequence of the given kind with height at most ``k``.

    ``n`` counts moves for oscillating and standard Young sequences and move
    pairs for hesitating ones (so a hesitating result has ``2n`` moves).
    """
    if n > guard:
        raise GuardExceeded(f"n={n} exceeds exhaustive guard {guard}")
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return list(iter_tableaux(kind, n, k, final_filter))


def final_row_distribution(seqs: Iterable[TableauSequence]) -> dict[int, int]:
    """Histogram of final row lengths, for sequences ending in a row."""
    return dict(sorted(Counter(s.final_shape().row_length() for s in seqs).items()))


def count_syt_bounded_height(n: int, h: int) -> int:
    """Number of standard Young tableaux with ``n`` boxes and at most ``h`` rows."""
    if n < 0 or h < 1:
        raise ValueError("need n >= 0 and h >= 1")
    layer: dict[Partition, int] = {EMPTY: 1}
    for _ in range(n):
        nxt: dict[Partition, int] = {}
        for shape, c in layer.items():
            for s in _grow(shape, h):
                nxt[s] = nxt.get(s, 0) + c
        layer = nxt
    return sum(layer.values())

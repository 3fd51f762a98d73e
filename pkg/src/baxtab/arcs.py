"""Open arc diagrams: validation, nesting/crossing statistics, generation.

An open arc has a left endpoint only. Partition-type diagrams draw each
block of a set partition as a path of arcs, so a vertex may end one arc and
start the next; vertices touching no arc are fixed points. In matching-type
diagrams every vertex is the endpoint of exactly one arc.
"""

from __future__ import annotations

import enum
import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from baxtab.errors import GuardExceeded, InvalidDiagram

DIAGRAM_GUARD = 9

Arc = tuple[int, int]


class DiagramKind(enum.Enum):
    PARTITION = "partition"
    MATCHING = "matching"


class Flavor(enum.Enum):
    CROSSING = "crossing"
    NESTING = "nesting"
    ENHANCED_NESTING = "enhanced_nesting"
    FUTURE_NESTING = "future_nesting"
    FUTURE_ENHANCED_NESTING = "future_enhanced_nesting"


@dataclass(frozen=True)
class PatternQuery:
    k: int
    flavor: Flavor

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("pattern size must be at least 1")


@dataclass(frozen=True)
class OpenArcDiagram:
    n: int
    closed: frozenset[Arc] = field(default_factory=frozenset)
    open: frozenset[int] = field(default_factory=frozenset)
    kind: DiagramKind = DiagramKind.PARTITION

    def __post_init__(self) -> None:
        object.__setattr__(self, "closed", frozenset(tuple(a) for a in self.closed))
        object.__setattr__(self, "open", frozenset(self.open))
        self._validate()

    def _validate(self) -> None:
        n = self.n
        if n < 0:
            raise InvalidDiagram("negative vertex count")
        lefts: list[int] = []
        rights: list[int] = []
        for i, j in self.closed:
            if not 1 <= i < j <= n:
                raise InvalidDiagram(f"closed arc {(i, j)} is not inside 1..{n}")
            lefts.append(i)
            rights.append(j)
        for i in self.open:
            if not 1 <= i <= n:
                raise InvalidDiagram(f"open arc at {i} is not inside 1..{n}")
            lefts.append(i)
        if len(set(lefts)) != len(lefts):
            raise InvalidDiagram("a vertex starts two arcs")
        if len(set(rights)) != len(rights):
            raise InvalidDiagram("a vertex ends two arcs")
        if self.kind is DiagramKind.MATCHING:
            touched = lefts + rights
            if len(set(touched)) != len(touched) or len(touched) != n:
                raise InvalidDiagram("matching diagrams need every vertex in exactly one arc")

    @property
    def m(self) -> int:
        return len(self.open)

    def fixed_points(self) -> list[int]:
        if self.kind is DiagramKind.MATCHING:
            return []
        touched = {v for arc in self.closed for v in arc} | set(self.open)
        return [v for v in range(1, self.n + 1) if v not in touched]

    def enhanced_arcs(self) -> list[Arc]:
        """Closed arcs plus a loop (v, v) at every fixed point."""
        return sorted(self.closed) + [(v, v) for v in self.fixed_points()]

    def open_labels(self) -> dict[int, int]:
        """Artificial right endpoints n+1..n+m assigned left to right."""
        return {v: self.n + r for r, v in enumerate(sorted(self.open), start=1)}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "closed": [list(a) for a in sorted(self.closed)],
            "open": sorted(self.open),
            "kind": self.kind.value,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> OpenArcDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            int(data["n"]),
            frozenset(tuple(a) for a in data.get("closed", [])),
            frozenset(data.get("open", [])),
            DiagramKind(data.get("kind", "partition")),
        )

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]], open_at: Iterable[int] = ()) -> OpenArcDiagram:
        """Partition-type diagram from set-partition blocks (paths of arcs)."""
        closed = set()
        for block in blocks:
            b = sorted(block)
            closed.update(zip(b, b[1:]))
        return cls(n, frozenset(closed), frozenset(open_at), DiagramKind.PARTITION)


def _longest_chain(arcs: list[Arc]) -> int:
    """Longest chain a_1 > a_2 > ... under strict containment.

    (a, b) strictly contains (c, d) when a < c and d < b; loops (v, v) work
    unchanged and can only sit innermost.
    """
    arcs = sorted(arcs, key=lambda a: (a[0], -a[1]))
    best = [1] * len(arcs)
    for t, (c, d) in enumerate(arcs):
        for s in range(t):
            a, b = arcs[s]
            if a < c and d < b and best[s] + 1 > best[t]:
                best[t] = best[s] + 1
    return max(best, default=0)


def _longest_increasing(seq: list[int]) -> int:
    best: list[int] = []
    for t, x in enumerate(seq):
        best.append(1 + max((best[s] for s in range(t) if seq[s] < x), default=0))
    return max(best, default=0)


def _max_crossing(arcs: list[Arc]) -> int:
    # a k-crossing straddles a cut between its last left and first right end
    result = 0
    cuts = sorted({i for i, _ in arcs})
    for c in cuts:
        spanning = sorted((i, j) for i, j in arcs if i <= c < j)
        result = max(result, _longest_increasing([j for _, j in spanning]))
    return result


def max_nesting(d: OpenArcDiagram, flavor: Flavor) -> int:
    """Largest k for which ``d`` contains a k-pattern of the given flavor."""
    closed = sorted(d.closed)
    if flavor is Flavor.CROSSING:
        return _max_crossing(closed)
    if flavor is Flavor.NESTING:
        return _longest_chain(closed)
    enhanced = d.enhanced_arcs()
    if flavor is Flavor.ENHANCED_NESTING:
        return _longest_chain(enhanced)
    pool = closed if flavor is Flavor.FUTURE_NESTING else enhanced
    best = 0
    for o in d.open:
        right_of = [a for a in pool if a[0] > o]
        best = max(best, 1 + _longest_chain(right_of))
    return best


def contains_pattern(d: OpenArcDiagram, q: PatternQuery) -> bool:
    return max_nesting(d, q.flavor) >= q.k


def nesting_level(d: OpenArcDiagram) -> int:
    """The statistic bounded by the avoidance classes.

    Partition type: max of enhanced and future enhanced nesting.
    Matching type: max of nesting and future nesting.
    """
    if d.kind is DiagramKind.PARTITION:
        return max(max_nesting(d, Flavor.ENHANCED_NESTING), max_nesting(d, Flavor.FUTURE_ENHANCED_NESTING))
    return max(max_nesting(d, Flavor.NESTING), max_nesting(d, Flavor.FUTURE_NESTING))


def avoids(d: OpenArcDiagram, k: int) -> bool:
    """True when ``d`` has no (k+1)-level pattern of its kind's flavors."""
    return nesting_level(d) <= k


def iter_diagrams(kind: DiagramKind, n: int, k: int, m: int | None = None) -> Iterator[OpenArcDiagram]:
    """Unguarded depth-first generator behind :func:`generate_diagrams`."""
    partition = kind is DiagramKind.PARTITION
    closed: list[Arc] = []
    opened: list[int] = []
    pending: list[int] = []
    fixed: list[int] = []

    def level() -> int:
        arcs = closed + [(v, v) for v in fixed] if partition else list(closed)
        lv = _longest_chain(arcs)
        # a pending arc closes to the right of everything seen so far
        for o in opened + pending:
            lv = max(lv, 1 + _longest_chain([a for a in arcs if a[0] > o]))
        return lv

    def rec(v: int) -> Iterator[OpenArcDiagram]:
        if v > n:
            if not pending and (m is None or len(opened) == m):
                yield OpenArcDiagram(n, frozenset(closed), frozenset(opened), kind)
            return
        remaining = n - v + 1
        if len(pending) > remaining:
            return
        if m is not None and len(opened) > m:
            return
        closes: list[int | None] = [None] + list(pending)
        for a in closes:
            if a is not None:
                pending.remove(a)
                closed.append((a, v))
            starts = ["none", "pending", "open"]
            if not partition:
                starts = ["none"] if a is not None else ["pending", "open"]
            for st in starts:
                if st == "pending":
                    pending.append(v)
                elif st == "open":
                    opened.append(v)
                elif a is None:
                    fixed.append(v)
                if level() <= k:
                    yield from rec(v + 1)
                if st == "pending":
                    pending.pop()
                elif st == "open":
                    opened.pop()
                elif a is None:
                    fixed.pop()
            if a is not None:
                closed.pop()
                pending.append(a)
                pending.sort()

    yield from rec(1)


def generate_diagrams(
    kind: DiagramKind,
    n: int,
    k: int,
    m: int | None = None,
    guard: int = DIAGRAM_GUARD,
) -> list[OpenArcDiagram]:
    """All diagrams on ``n`` vertices avoiding the (k+1)-level patterns.

    Partition type avoids enhanced and future enhanced (k+1)-nestings;
    matching type avoids plain and future (k+1)-nestings. ``m`` fixes the
    number of open arcs (None means any).
    """
    if n > guard:
        raise GuardExceeded(f"n={n} exceeds exhaustive guard {guard}")
    return list(iter_diagrams(kind, n, k, m))

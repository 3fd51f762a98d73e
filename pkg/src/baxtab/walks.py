"""Lattice walks in the strict Weyl chamber W_k and the open quadrant Q_k.

Points are plain tuples of ints. A step is encoded as a signed int:
``+i`` is the unit vector e_i, ``-i`` is -e_i (1-based) and ``0`` is a stay.

Three step models:

* ``OSCILLATING``: single steps +-e_i;
* ``HESITATING``: step pairs (stay, +e_i), (-e_i, stay), (+e_i, -e_j);
  the length parameter counts pairs;
* ``POSITIVE``: single steps +e_i only.
"""

from __future__ import annotations

import csv
import enum
import io
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import permutations

from baxtab.errors import (
    DimensionMismatch,
    GuardExceeded,
    NegativeResult,
    StartOutsideChamber,
)

Point = tuple[int, ...]

PAIR_GUARD = 8
STEP_GUARD = 12


class Model(enum.Enum):
    OSCILLATING = "oscillating"
    HESITATING = "hesitating"
    POSITIVE = "positive"


class Chamber(enum.Enum):
    W = "W"
    Q = "Q"


@dataclass(frozen=True)
class StepRule:
    model: Model
    k: int


class BoundaryRow:
    """Endpoint selector for the boundary {delta + m e_1 : m >= 0}."""

    def __repr__(self) -> str:
        return "BOUNDARY"


BOUNDARY = BoundaryRow()


def delta(k: int) -> Point:
    return tuple(range(k, 0, -1))


def boundary_point(k: int, m: int) -> Point:
    """The point (m + k, k - 1, ..., 1)."""
    return (m + k,) + tuple(range(k - 1, 0, -1))


def boundary_index(p: Point) -> int | None:
    """m if ``p`` equals delta + m e_1, else None."""
    k = len(p)
    if k == 0:
        return 0
    if p[1:] == tuple(range(k - 1, 0, -1)) and p[0] >= k:
        return p[0] - k
    return None


def in_chamber(p: Point, chamber: Chamber) -> bool:
    if any(x <= 0 for x in p):
        return False
    if chamber is Chamber.W:
        return all(a > b for a, b in zip(p, p[1:]))
    return True


def apply_step(p: Point, s: int) -> Point:
    if s == 0:
        return p
    i = abs(s) - 1
    q = list(p)
    q[i] += 1 if s > 0 else -1
    return tuple(q)


@dataclass(frozen=True)
class LatticeWalk:
    model: Model
    start: Point
    steps: tuple[int, ...]

    def points(self) -> list[Point]:
        pts = [self.start]
        for s in self.steps:
            pts.append(apply_step(pts[-1], s))
        return pts

    def end(self) -> Point:
        return self.points()[-1]

    def is_valid(self, chamber: Chamber = Chamber.W) -> bool:
        if not all(in_chamber(p, chamber) for p in self.points()):
            return False
        k = len(self.start)
        if any(abs(s) > k for s in self.steps):
            return False
        if self.model is Model.OSCILLATING:
            return all(s != 0 for s in self.steps)
        if self.model is Model.POSITIVE:
            return all(s > 0 for s in self.steps)
        if len(self.steps) % 2:
            return False
        for a, b in zip(self.steps[::2], self.steps[1::2]):
            if not ((a == 0 and b > 0) or (a < 0 and b == 0) or (a > 0 and b < 0)):
                return False
        return True

    def to_json(self) -> dict:
        return {"model": self.model.value, "start": list(self.start), "steps": list(self.steps)}

    @classmethod
    def from_json(cls, data: dict) -> LatticeWalk:
        """Accepts either ``steps`` or the full ``points`` list."""
        model = Model(data["model"])
        if "points" in data:
            pts = [tuple(p) for p in data["points"]]
            steps = []
            for a, b in zip(pts, pts[1:]):
                diff = [(i, y - x) for i, (x, y) in enumerate(zip(a, b)) if y != x]
                if len(diff) > 1 or any(abs(v) != 1 for _, v in diff):
                    raise ValueError(f"{a} -> {b} is not a unit step")
                steps.append(0 if not diff else (diff[0][0] + 1) * diff[0][1])
            return cls(model, pts[0], tuple(steps))
        return cls(model, tuple(data["start"]), tuple(data["steps"]))


def _check(rule: StepRule, chamber: Chamber, start: Point) -> None:
    if len(start) != rule.k:
        raise DimensionMismatch(f"start {start} is not {rule.k}-dimensional")
    if not in_chamber(start, chamber):
        raise StartOutsideChamber(f"{start} is not in {chamber.value}_{rule.k}")


def _single_steps(model: Model, k: int) -> list[int]:
    if model is Model.POSITIVE:
        return list(range(1, k + 1))
    return [s for i in range(1, k + 1) for s in (i, -i)]


def _advance(layer: dict[Point, int], steps: list[int], chamber: Chamber) -> dict[Point, int]:
    out: dict[Point, int] = {}
    for p, c in layer.items():
        for s in steps:
            q = apply_step(p, s)
            if in_chamber(q, chamber):
                out[q] = out.get(q, 0) + c
    return out


def _advance_hesitating(layer: dict[Point, int], k: int, chamber: Chamber) -> dict[Point, int]:
    # first half-step, tagged with the pair type it opens
    plus = list(range(1, k + 1))
    minus = [-i for i in plus]
    after_stay = layer
    after_add = _advance(layer, plus, chamber)
    after_remove = _advance(layer, minus, chamber)
    # second half-step, constrained by the tag
    out = _advance(after_stay, plus, chamber)
    for src in (_advance(after_add, minus, chamber), after_remove):
        for p, c in src.items():
            out[p] = out.get(p, 0) + c
    return out


def count_layers(rule: StepRule, chamber: Chamber, start: Point, n: int) -> list[dict[Point, int]]:
    """Layered DP: entry ``i`` maps endpoints to walk counts after i units."""
    _check(rule, chamber, start)
    layers = [{tuple(start): 1}]
    steps = _single_steps(rule.model, rule.k)
    for _ in range(n):
        if rule.model is Model.HESITATING:
            layers.append(_advance_hesitating(layers[-1], rule.k, chamber))
        else:
            layers.append(_advance(layers[-1], steps, chamber))
    return layers


def _select(layer: dict[Point, int], end: Point | BoundaryRow | None) -> int:
    if end is None:
        return sum(layer.values())
    if isinstance(end, BoundaryRow):
        return sum(c for p, c in layer.items() if boundary_index(p) is not None)
    return layer.get(tuple(end), 0)


def count_walks(
    rule: StepRule,
    chamber: Chamber,
    start: Point,
    n: int,
    end: Point | BoundaryRow | None = BOUNDARY,
) -> int:
    """Exact number of walks of ``n`` units from ``start`` to ``end``.

    ``end`` may be a point, :data:`BOUNDARY`, or None for "anywhere".
    """
    if end is not None and not isinstance(end, BoundaryRow) and len(end) != rule.k:
        raise DimensionMismatch(f"end {end} is not {rule.k}-dimensional")
    return _select(count_layers(rule, chamber, start, n)[-1], end)


def boundary_counts(rule: StepRule, start: Point, n: int) -> dict[int, int]:
    """m -> number of W_k walks of ``n`` units ending at delta + m e_1."""
    layer = count_layers(rule, Chamber.W, start, n)[-1]
    out: dict[int, int] = {}
    for p, c in layer.items():
        m = boundary_index(p)
        if m is not None:
            out[m] = c
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class CountTable:
    rule: StepRule
    chamber: Chamber
    start: Point
    counts: dict[tuple[int, Point], int]

    @classmethod
    def build(cls, rule: StepRule, chamber: Chamber, start: Point, n: int) -> CountTable:
        layers = count_layers(rule, chamber, start, n)
        counts = {
            (length, p): c
            for length, layer in enumerate(layers)
            for p, c in sorted(layer.items())
        }
        return cls(rule, chamber, tuple(start), counts)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "model", "n", "endpoint", "count"])
        for (length, p), c in self.counts.items():
            writer.writerow([self.rule.k, self.rule.model.value, length, ";".join(map(str, p)), c])
        return buf.getvalue()


def _pair_steps(k: int) -> list[tuple[int, int]]:
    pairs = [(0, i) for i in range(1, k + 1)]
    pairs += [(-i, 0) for i in range(1, k + 1)]
    pairs += [(i, -j) for i in range(1, k + 1) for j in range(1, k + 1)]
    return pairs


def iter_walks(
    rule: StepRule,
    chamber: Chamber,
    start: Point,
    n: int,
    end: Point | BoundaryRow | None = BOUNDARY,
) -> Iterator[LatticeWalk]:
    """Unguarded depth-first walk generator. Hesitating walks use whole pairs."""
    _check(rule, chamber, start)
    units: list[tuple[int, ...]]
    if rule.model is Model.HESITATING:
        units = _pair_steps(rule.k)
    else:
        units = [(s,) for s in _single_steps(rule.model, rule.k)]
    steps: list[int] = []

    def accept(p: Point) -> bool:
        if end is None:
            return True
        if isinstance(end, BoundaryRow):
            return boundary_index(p) is not None
        return p == tuple(end)

    def rec(p: Point, depth: int) -> Iterator[LatticeWalk]:
        if depth == n:
            if accept(p):
                yield LatticeWalk(rule.model, tuple(start), tuple(steps))
            return
        for unit in units:
            q = p
            ok = True
            for s in unit:
                q = apply_step(q, s)
                if not in_chamber(q, chamber):
                    ok = False
                    break
            if ok:
                steps.extend(unit)
                yield from rec(q, depth + 1)
                del steps[-len(unit):]

    yield from rec(tuple(start), 0)


def enumerate_walks(
    rule: StepRule,
    chamber: Chamber,
    start: Point,
    n: int,
    end: Point | BoundaryRow | None = BOUNDARY,
    guard: int | None = None,
) -> list[LatticeWalk]:
    if guard is None:
        guard = PAIR_GUARD if rule.model is Model.HESITATING else STEP_GUARD
    if n > guard:
        raise GuardExceeded(f"n={n} exceeds exhaustive guard {guard}")
    return list(iter_walks(rule, chamber, start, n, end))


def quadrant_count(k: int, lam: Point, mu: Point, n: int) -> int:
    """Hesitating walks of ``n`` pairs in Q_k from ``lam`` to ``mu``."""
    return count_walks(StepRule(Model.HESITATING, k), Chamber.Q, lam, n, mu)


def permutation_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def reflection_count(k: int, lam: Point, mu: Point, n: int) -> int:
    """Signed sum over S_k of quadrant counts from ``lam`` to permuted ``mu``.

    This counts hesitating W_k walks from ``lam`` to ``mu`` with ``n`` pairs.
    """
    for p in (lam, mu):
        if len(p) != k:
            raise DimensionMismatch(f"{p} is not {k}-dimensional")
        if not in_chamber(tuple(p), Chamber.W):
            raise StartOutsideChamber(f"{p} is not in W_{k}")
    layer = count_layers(StepRule(Model.HESITATING, k), Chamber.Q, tuple(lam), n)[-1]
    total = 0
    for perm in permutations(range(k)):
        target = tuple(mu[i] for i in perm)
        total += permutation_sign(perm) * layer.get(target, 0)
    if total < 0:
        raise NegativeResult(f"reflection sum {total} < 0 for {lam} -> {mu}, n={n}")
    return total

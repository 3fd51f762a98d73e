"""Explicit bijections between tableau sequences, walks and open diagrams.

Diagram -> tableau reads vertices left to right. Each vertex contributes two
moves for partition-type diagrams (one for matching-type):

    left endpoint of (i, j)        stay, insert j
    right endpoint of (h, i)       delete i, stay
    both                           insert j, delete i
    fixed point                    insert i, delete i

Open arcs get artificial right endpoints n+1..n+m from left to right.
Insertion is RSK row insertion. The label deleted at vertex i is always the
smallest entry, so deletion removes the corner cell (1, 1) and rectifies by a
forward jeu-de-taquin slide; the inverse uses the reverse slide.
"""

from __future__ import annotations

from collections.abc import Sequence

from baxtab.arcs import DiagramKind, OpenArcDiagram, avoids
from baxtab.errors import (
    HeightExceedsK,
    InternalCorner,
    NotRowFinal,
    PatternViolation,
)
from baxtab.tableaux import (
    EMPTY,
    Partition,
    TableauKind,
    TableauSequence,
    classify_move,
    validate_sequence,
)
from baxtab.walks import LatticeWalk, Model, Point, delta

Rows = list[list[int]]


class FilledTableau:
    """Mutable scratch tableau with strictly increasing rows and columns."""

    def __init__(self, rows: Sequence[Sequence[int]] = ()) -> None:
        self.rows: Rows = [list(r) for r in rows if r]

    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def entries(self) -> set[int]:
        return {x for r in self.rows for x in r}

    def is_standard(self) -> bool:
        rows = self.rows
        for r, row in enumerate(rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
            if r and (len(row) > len(rows[r - 1]) or any(rows[r - 1][c] >= row[c] for c in range(len(row)))):
                return False
        return True

    def insert(self, x: int) -> tuple[int, int]:
        """Row-insert ``x``; return the (row, col) of the new cell."""
        r = 0
        while True:
            if r == len(self.rows):
                self.rows.append([x])
                return r, 0
            row = self.rows[r]
            pos = next((c for c, y in enumerate(row) if y > x), None)
            if pos is None:
                row.append(x)
                return r, len(row) - 1
            row[pos], x = x, row[pos]
            r += 1

    def reverse_insert(self, r: int, c: int) -> int:
        """Undo a row insertion that created corner cell (r, c); return the ejected value."""
        row = self.rows[r]
        if c != len(row) - 1 or (r + 1 < len(self.rows) and len(self.rows[r + 1]) > c):
            raise InternalCorner(f"({r}, {c}) is not a corner")
        x = row.pop()
        if not row:
            self.rows.pop()
        for rr in range(r - 1, -1, -1):
            above = self.rows[rr]
            pos = max(i for i, y in enumerate(above) if y < x)
            above[pos], x = x, above[pos]
        return x

    def delete_min(self) -> tuple[int, tuple[int, int]]:
        """Remove the smallest entry by a jeu-de-taquin slide.

        Returns the removed value and the corner cell that disappeared.
        """
        rows = self.rows
        if not rows:
            raise InternalCorner("delete from an empty tableau")
        value = rows[0][0]
        r, c = 0, 0
        while True:
            right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
            below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                rows[r][c] = right
                c += 1
            else:
                rows[r][c] = below
                r += 1
        rows[r].pop()
        if not rows[r]:
            rows.pop()
        return value, (r, c)

    def undelete_min(self, value: int, cell: tuple[int, int]) -> None:
        """Inverse of :meth:`delete_min`: reverse slide from ``cell`` to (0, 0)."""
        rows = self.rows
        r, c = cell
        if r == len(rows):
            rows.append([])
        if c != len(rows[r]):
            raise InternalCorner(f"{cell} cannot be re-added")
        rows[r].append(None)  # type: ignore[arg-type]
        while (r, c) != (0, 0):
            up = rows[r - 1][c] if r > 0 else None
            left = rows[r][c - 1] if c > 0 else None
            if left is None or (up is not None and up > left):
                rows[r][c] = up
                r -= 1
            else:
                rows[r][c] = left
                c -= 1
        rows[0][0] = value


# -- tableaux <-> walks ----------------------------------------------------


def tableau_to_walk(seq: TableauSequence, k: int) -> LatticeWalk:
    """Send each shape to delta + shape, padded to ``k`` coordinates."""
    info = validate_sequence(seq)
    if info.max_height > k:
        raise HeightExceedsK(f"height {info.max_height} > {k}")
    d = delta(k)
    pts = [tuple(a + b for a, b in zip(d, s.padded(k))) for s in seq.shapes]
    steps = []
    for p, q in zip(pts, pts[1:]):
        diff = [b - a for a, b in zip(p, q)]
        nz = [i for i, x in enumerate(diff) if x]
        steps.append(0 if not nz else (nz[0] + 1) * diff[nz[0]])
    model = {
        TableauKind.HESITATING: Model.HESITATING,
        TableauKind.OSCILLATING: Model.OSCILLATING,
        TableauKind.STANDARD_YOUNG: Model.POSITIVE,
    }[seq.kind]
    return LatticeWalk(model, d, tuple(steps))


def walk_to_tableau(w: LatticeWalk) -> TableauSequence:
    k = len(w.start)
    d = delta(k)
    kind = {
        Model.HESITATING: TableauKind.HESITATING,
        Model.OSCILLATING: TableauKind.OSCILLATING,
        Model.POSITIVE: TableauKind.STANDARD_YOUNG,
    }[w.model]
    shapes = tuple(Partition.from_padded(a - b for a, b in zip(p, d)) for p in w.points())
    seq = TableauSequence(kind, shapes)
    validate_sequence(seq)
    return seq


def format_walk(w: LatticeWalk) -> str:
    """Render as ``(2,1)-(3,1)-...``."""
    return "-".join("(" + ",".join(map(str, p)) + ")" for p in w.points())


# -- diagrams <-> tableaux -------------------------------------------------


def _vertex_roles(d: OpenArcDiagram) -> tuple[dict[int, int], dict[int, int]]:
    """Maps vertex -> (possibly artificial) right end, and right end -> left end."""
    right_of = dict(d.closed)
    right_of.update(d.open_labels())
    left_of = {j: i for i, j in d.closed}
    return right_of, left_of


def diagram_to_tableau(d: OpenArcDiagram, k: int | None = None) -> TableauSequence:
    """Hesitating (partition type) or oscillating (matching type) image of ``d``.

    With ``k`` given, raises :class:`PatternViolation` when ``d`` is outside
    the k-avoiding class.
    """
    if k is not None and not avoids(d, k):
        raise PatternViolation(f"diagram has a ({k + 1})-level pattern")
    right_of, left_of = _vertex_roles(d)
    t = FilledTableau()
    shapes = [EMPTY]

    def insert(x: int) -> None:
        before = t.shape()
        t.insert(x)
        if classify_move(before, t.shape()) != "add":
            raise InternalCorner("insertion did not add exactly one box")
        shapes.append(t.shape())

    def delete(x: int) -> None:
        before = t.shape()
        value, _ = t.delete_min()
        if value != x:
            raise InternalCorner(f"expected to delete {x}, found minimum {value}")
        if classify_move(before, t.shape()) != "remove":
            raise InternalCorner("deletion did not remove exactly one corner")
        shapes.append(t.shape())

    def stay() -> None:
        shapes.append(t.shape())

    partition = d.kind is DiagramKind.PARTITION
    for v in range(1, d.n + 1):
        starts, ends = v in right_of, v in left_of
        if not partition:
            insert(right_of[v]) if starts else delete(v)
        elif starts and ends:
            insert(right_of[v])
            delete(v)
        elif starts:
            stay()
            insert(right_of[v])
        elif ends:
            delete(v)
            stay()
        else:
            insert(v)
            delete(v)

    kind = TableauKind.HESITATING if partition else TableauKind.OSCILLATING
    seq = TableauSequence(kind, tuple(shapes))
    if not seq.final_shape().is_row():
        raise InternalCorner("open labels did not end in a single row")
    return seq


def tableau_to_diagram(seq: TableauSequence, k: int | None = None, kind: DiagramKind | None = None) -> OpenArcDiagram:
    """Inverse of :func:`diagram_to_tableau`."""
    info = validate_sequence(seq)
    if not info.final_shape.is_row():
        raise NotRowFinal(f"final shape {info.final_shape} is not a row")
    if k is not None and info.max_height > k:
        raise HeightExceedsK(f"height {info.max_height} > {k}")
    if kind is None:
        kind = DiagramKind.PARTITION if seq.kind is TableauKind.HESITATING else DiagramKind.MATCHING
    expected = TableauKind.HESITATING if kind is DiagramKind.PARTITION else TableauKind.OSCILLATING
    if seq.kind is not expected:
        raise ValueError(f"{kind.value} diagrams pair with {expected.value} sequences")

    shapes = seq.shapes
    per_vertex = 2 if kind is DiagramKind.PARTITION else 1
    n = (len(shapes) - 1) // per_vertex
    m = info.final_shape.row_length()
    t = FilledTableau([list(range(n + 1, n + m + 1))])
    right_of: dict[int, int] = {}

    def added_cell(before: Partition, after: Partition) -> tuple[int, int]:
        pa, pb = before.padded(after.height()), after.parts
        r = next(i for i in range(len(pb)) if pb[i] != pa[i])
        return r, pb[r] - 1

    def removed_cell(before: Partition, after: Partition) -> tuple[int, int]:
        r, c = added_cell(after, before)
        return r, c

    for v in range(n, 0, -1):
        moves = shapes[per_vertex * (v - 1): per_vertex * v + 1]
        kinds = [classify_move(a, b) for a, b in zip(moves, moves[1:])]
        # undo in reverse order
        for (a, b), mv in reversed(list(zip(zip(moves, moves[1:]), kinds))):
            if mv == "add":
                right_of[v] = t.reverse_insert(*added_cell(a, b))
            elif mv == "remove":
                t.undelete_min(v, removed_cell(a, b))
    if t.rows:
        raise InternalCorner("tableau not empty after inversion")

    closed = frozenset((i, j) for i, j in right_of.items() if j <= n and j != i)
    opened = frozenset(i for i, j in right_of.items() if j > n)
    return OpenArcDiagram(n, closed, opened, kind)


# -- the k = 1 map to two-row standard Young tableaux ------------------------


def walk_to_syt2(steps: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Entry j goes to the top row for a +e_1 step, the second row for -e_1."""
    top, bottom = [], []
    height = 0
    for j, s in enumerate(steps, start=1):
        if s == 1:
            top.append(j)
            height += 1
        elif s == -1:
            bottom.append(j)
            height -= 1
        else:
            raise ValueError(f"step {s} is not +-e_1")
        if height < 0:
            raise ValueError("walk leaves W_1")
    return tuple(top), tuple(bottom)


def syt2_to_walk(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    top = set(rows[0]) if rows else set()
    bottom = set(rows[1]) if len(rows) > 1 else set()
    n = len(top) + len(bottom)
    if top | bottom != set(range(1, n + 1)) or len(rows) > 2:
        raise ValueError("not a filling of 1..n with at most two rows")
    t = FilledTableau(rows)
    if not t.is_standard():
        raise ValueError("rows are not a standard Young tableau")
    return tuple(1 if j in top else -1 for j in range(1, n + 1))


def shape_points(seq: TableauSequence, k: int) -> list[Point]:
    return tableau_to_walk(seq, k).points()

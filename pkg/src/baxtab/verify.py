"""Deterministic verification profiles behind ``baxtab verify``.

Every check is a small function returning a :class:`Check`. Profiles only
differ in their size parameters. Checks run sequentially, in a fixed order,
so the report is byte-identical between runs.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import asdict, dataclass
from math import comb, factorial
from typing import Any

from baxtab.arcs import DiagramKind, OpenArcDiagram, generate_diagrams, nesting_level
from baxtab.bijections import diagram_to_tableau, format_walk, tableau_to_diagram, tableau_to_walk, walk_to_tableau
from baxtab.series.baxter import baxter_by_recurrence, baxter_number, catalan, motzkin, shifted_baxter_series
from baxtab.series.bessel import conjecture_check, osc_boundary_egf, syt_egf_det
from baxtab.series.diagonals import oscillating_diagonal, syt_diagonal_conjecture
from baxtab.series.kernel import fallback_W, kernel_W
from baxtab.series.operators import BAXTER_OPERATOR, apply_operator
from baxtab.series.orbit import orbit_sum_check
from baxtab.tableaux import Partition, TableauKind, TableauSequence, count_syt_bounded_height, enumerate_tableaux, final_row_distribution, validate_sequence
from baxtab.trees import builtin_rule, expand_levels, first_shape_difference, level_sizes
from baxtab.walks import Chamber, Model, StepRule, boundary_counts, count_walks, delta

log = logging.getLogger(__name__)

# (tableau shapes, walk, open diagram) for every object of size 2 at k = 2
TABLE_ONE: tuple[tuple[list[list[int]], str, dict[str, Any]], ...] = (
    ([[], [1], [], [1], []], "(2,1)-(3,1)-(2,1)-(3,1)-(2,1)", {"n": 2, "closed": [], "open": []}),
    ([[], [], [1], [], []], "(2,1)-(2,1)-(3,1)-(2,1)-(2,1)", {"n": 2, "closed": [[1, 2]], "open": []}),
    ([[], [1], [], [], [1]], "(2,1)-(3,1)-(2,1)-(2,1)-(3,1)", {"n": 2, "closed": [], "open": [2]}),
    ([[], [], [1], [2], [1]], "(2,1)-(2,1)-(3,1)-(4,1)-(3,1)", {"n": 2, "closed": [[1, 2]], "open": [2]}),
    ([[], [], [1], [1, 1], [1]], "(2,1)-(2,1)-(3,1)-(3,2)-(3,1)", {"n": 2, "closed": [], "open": [1]}),
    ([[], [], [1], [1], [2]], "(2,1)-(2,1)-(3,1)-(3,1)-(4,1)", {"n": 2, "closed": [], "open": [1, 2]}),
)


@dataclass(frozen=True)
class Check:
    id: str
    params: dict[str, Any]
    expected: Any
    actual: Any
    passed: bool

    def to_json(self) -> dict[str, Any]:
        out = asdict(self)
        out["pass"] = out.pop("passed")
        return out


@dataclass(frozen=True)
class Profile:
    name: str
    baxter_n: int = 12
    catalan_n: int = 14
    roundtrip_n: int = 6
    roundtrip_k: int = 3
    diagrams_n: int = 9
    tree_depth: int = 12
    det_k: int = 4
    det_n: int = 16
    conjecture_k: int = 8
    conjecture_order: int = 12
    kernel_order: int = 12
    operator_order: int = 30
    orbit_d: int = 5
    diagonal_order: int = 10


PROFILES = {
    "quick": Profile("quick", roundtrip_n=5, diagrams_n=7, det_n=12, conjecture_k=6, conjecture_order=10),
    "full": Profile("full"),
}


def _check(id_: str, params: dict[str, Any], expected: Any, actual: Any) -> Check:
    return Check(id_, params, expected, actual, expected == actual)


def check_baxter_walks(p: Profile) -> list[Check]:
    rule = StepRule(Model.HESITATING, 2)
    actual = [count_walks(rule, Chamber.W, delta(2), n) for n in range(p.baxter_n + 1)]
    expected = [baxter_number(n + 1) for n in range(p.baxter_n + 1)]
    return [_check("baxter-walks", {"k": 2, "n_max": p.baxter_n}, expected, actual)]


def check_baxter_recurrence(p: Profile) -> list[Check]:
    count = 30
    return [
        _check(
            "baxter-recurrence",
            {"count": count},
            [baxter_number(n) for n in range(1, count + 1)],
            baxter_by_recurrence(count),
        )
    ]


def check_table_one(p: Profile) -> list[Check]:
    tabs = enumerate_tableaux(TableauKind.HESITATING, 2, 2, lambda s: s.is_row())
    walks = boundary_counts(StepRule(Model.HESITATING, 2), delta(2), 2)
    diagrams = generate_diagrams(DiagramKind.PARTITION, 2, 2)
    dist = {"0": 2, "1": 3, "2": 1}
    out = [
        _check("table1-tableaux", {"n": 2, "k": 2}, dist, {str(m): c for m, c in final_row_distribution(tabs).items()}),
        _check("table1-walks", {"n": 2, "k": 2}, dist, {str(m): c for m, c in sorted(walks.items())}),
        _check(
            "table1-diagrams",
            {"n": 2, "k": 2},
            dist,
            {str(m): sum(1 for d in diagrams if d.m == m) for m in range(3)},
        ),
    ]
    pairs_ok = 0
    for shapes, walk, diagram in TABLE_ONE:
        seq = TableauSequence(TableauKind.HESITATING, tuple(Partition(tuple(s)) for s in shapes))
        d = OpenArcDiagram.from_json(dict(diagram, kind="partition"))
        ok = (
            format_walk(tableau_to_walk(seq, 2)) == walk
            and diagram_to_tableau(d, 2) == seq
            and tableau_to_diagram(seq, 2, DiagramKind.PARTITION) == d
        )
        pairs_ok += ok
    out.append(_check("table1-pairings", {"n": 2, "k": 2}, len(TABLE_ONE), pairs_ok))
    return out


def check_catalan(p: Profile) -> list[Check]:
    rule = StepRule(Model.HESITATING, 1)
    actual = [count_walks(rule, Chamber.W, (1,), n, (1,)) for n in range(p.catalan_n + 1)]
    span = range(p.catalan_n + 1)
    return [
        _check("catalan", {"n_max": p.catalan_n}, [catalan(n) for n in span], actual),
        _check("motzkin", {"n_max": p.catalan_n}, [motzkin(n) for n in span], actual),
        _check(
            "catalan-oscillating",
            {"n_max": p.catalan_n},
            [catalan(n) for n in span],
            [count_walks(StepRule(Model.OSCILLATING, 1), Chamber.W, (1,), 2 * n, (1,)) for n in span],
        ),
    ]


def roundtrip_failures(kind: DiagramKind, n: int, k: int) -> tuple[int, int]:
    """(objects checked, failures) for diagram -> tableau -> walk -> tableau -> diagram."""
    total = failures = 0
    for d in generate_diagrams(kind, n, k):
        total += 1
        seq = diagram_to_tableau(d, k)
        info = validate_sequence(seq)
        walk = tableau_to_walk(seq, k)
        ok = (
            tableau_to_diagram(seq, k, kind) == d
            and walk_to_tableau(walk) == seq
            and info.final_shape.row_length() == d.m
            and info.max_height == nesting_level(d)
            and walk.end() == (k + d.m,) + delta(k)[1:]
        )
        failures += not ok
    return total, failures


def check_roundtrips(p: Profile) -> list[Check]:
    out = []
    for kind in DiagramKind:
        total = failures = 0
        for n in range(p.roundtrip_n + 1):
            for k in range(1, p.roundtrip_k + 1):
                t, f = roundtrip_failures(kind, n, k)
                total += t
                failures += f
        out.append(
            _check(
                f"roundtrip-{kind.value}",
                {"n_max": p.roundtrip_n, "k_max": p.roundtrip_k, "objects": total},
                0,
                failures,
            )
        )
    return out


def check_baxter_diagrams(p: Profile) -> list[Check]:
    actual = [len(generate_diagrams(DiagramKind.PARTITION, n, 2)) for n in range(p.diagrams_n + 1)]
    expected = [baxter_number(n + 1) for n in range(p.diagrams_n + 1)]
    return [_check("baxter-diagrams", {"k": 2, "n_max": p.diagrams_n}, expected, actual)]


def check_trees(p: Profile) -> list[Check]:
    expected = [baxter_number(n) for n in range(1, p.tree_depth + 1)]
    out = [
        _check(f"tree-{r}", {"depth": p.tree_depth}, expected, level_sizes(builtin_rule(r), p.tree_depth))
        for r in "ABC"
    ]
    a, c = builtin_rule("A"), builtin_rule("C")
    labels_a, labels_c = expand_levels(a, 3)[2][1], expand_levels(c, 3)[2][1]
    out.append(_check("tree-labels-differ-A-C", {"level": 3}, True, labels_a != labels_c))
    out.append(_check("tree-shape-differs-A-C", {"depth": 6}, 3, first_shape_difference(a, c, 6)))
    return out


def check_determinants(p: Profile) -> list[Check]:
    out = []
    for k in range(1, p.det_k + 1):
        out.append(
            _check(
                "syt-determinant",
                {"k": k, "n_max": p.det_n},
                [count_syt_bounded_height(n, 2 * k) for n in range(p.det_n + 1)],
                syt_egf_det(k, p.det_n).counts(),
            )
        )
        rule = StepRule(Model.OSCILLATING, k)
        out.append(
            _check(
                "walk-determinant",
                {"k": k, "n_max": p.det_n},
                [count_walks(rule, Chamber.W, delta(k), n) for n in range(p.det_n + 1)],
                osc_boundary_egf(k, p.det_n).counts(),
            )
        )
    return out


def check_conjecture(p: Profile) -> list[Check]:
    out = []
    for k in range(1, p.conjecture_k + 1):
        report = conjecture_check(k, p.conjecture_order)
        out.append(_check("boundary-walks-vs-syt", {"k": k, "order": p.conjecture_order}, None, report.first_disagreement))
    return out


def check_kernel(p: Profile) -> list[Check]:
    n = p.kernel_order
    expected = [baxter_number(i + 1) for i in range(n + 1)]
    result = kernel_W(n)
    dp = [count_walks(StepRule(Model.HESITATING, 2), Chamber.W, delta(2), i) for i in range(n + 1)]
    return [
        _check("kernel-W", {"order": n}, expected, [int(c) for c in result.W.coeffs]),
        _check("kernel-W-diagonal", {"order": n}, expected, [int(c) for c in result.W_diagonal.coeffs]),
        _check("kernel-W-dp", {"order": n}, expected, dp),
        _check("fallback-W", {"order": n}, expected, [int(c) for c in fallback_W(n).coeffs]),
    ]


def check_operator(p: Profile) -> list[Check]:
    residual = apply_operator(BAXTER_OPERATOR, shifted_baxter_series(p.operator_order))
    nonzero = [i for i, c in enumerate(residual.coeffs) if c]
    return [_check("operator-annihilates", {"order": p.operator_order, "valid_to": residual.order}, [], nonzero)]


def check_orbit(p: Profile) -> list[Check]:
    out = []
    for d in range(2, p.orbit_d + 1):
        r = orbit_sum_check(d)
        if r.equal:
            actual = "equal"
        elif r.equal_up_to_sign:
            actual = "equals -1 times the printed product"
        else:
            actual = f"differs in {len(r.difference.terms)} monomials"
        out.append(_check("orbit-group", {"d": d}, [factorial(d), True, True], [r.group_order, r.sign_homomorphism, r.involutions]))
        out.append(_check("orbit-sum-printed", {"d": d}, "equal", actual))
        out.append(
            _check(
                "orbit-sum-vandermonde",
                {"d": d, "printed_sign": (-1) ** comb(d - 2, 2)},
                True,
                r.equal_corrected,
            )
        )
    return out


def check_diagonals(p: Profile) -> list[Check]:
    n = p.diagonal_order
    out = []
    for k in (2, 3):
        rule = StepRule(Model.OSCILLATING, k)
        out.append(
            _check(
                "oscillating-diagonal",
                {"k": k, "order": n},
                [count_walks(rule, Chamber.W, delta(k), i) for i in range(n + 1)],
                [int(c) for c in oscillating_diagonal(k, n).coeffs],
            )
        )
        out.append(
            _check(
                "syt-diagonal",
                {"k": k, "order": n},
                [count_syt_bounded_height(i, k) for i in range(n + 1)],
                [int(c) for c in syt_diagonal_conjecture(k, n).coeffs],
            )
        )
    return out


CHECKS: tuple[Callable[[Profile], list[Check]], ...] = (
    check_baxter_walks,
    check_baxter_recurrence,
    check_table_one,
    check_catalan,
    check_roundtrips,
    check_baxter_diagrams,
    check_trees,
    check_determinants,
    check_conjecture,
    check_kernel,
    check_operator,
    check_orbit,
    check_diagonals,
)


def run_profile(name: str) -> dict[str, Any]:
    profile = PROFILES[name]
    checks: list[Check] = []
    for fn in CHECKS:
        log.info("running %s", fn.__name__)
        checks.extend(fn(profile))
    return {"checks": [c.to_json() for c in checks], "pass": all(c.passed for c in checks)}


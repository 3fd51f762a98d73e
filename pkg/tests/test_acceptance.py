"""The twelve acceptance criteria, each checked at its stated scale and time limit.

Every criterion prints one ``PASS``/``FAIL`` line (visible without ``-s``).
Criteria 3 and 11 are stated in a form that the mathematics does not support;
they are checked literally, still print FAIL, and are marked as strict expected
failures so that an unexpected pass breaks the suite.
"""

import time
from collections import Counter
from math import factorial

import pytest

from baxtab.arcs import DiagramKind, OpenArcDiagram, generate_diagrams
from baxtab.bijections import diagram_to_tableau, format_walk, tableau_to_diagram, tableau_to_walk
from baxtab.series import (
    BAXTER_OPERATOR,
    apply_operator,
    baxter_number,
    catalan,
    conjecture_check,
    fallback_W,
    kernel_W,
    motzkin,
    orbit_sum_check,
    osc_boundary_egf,
    oscillating_diagonal,
    shifted_baxter_series,
    syt_diagonal_conjecture,
    syt_egf_det,
)
from baxtab.tableaux import TableauKind, TableauSequence, count_syt_bounded_height, enumerate_tableaux, final_row_distribution
from baxtab.trees import builtin_rule, expand_levels, level_sizes
from baxtab.verify import TABLE_ONE, roundtrip_failures
from baxtab.walks import Chamber, Model, StepRule, boundary_counts, count_walks, delta

HES = Model.HESITATING
OSC = Model.OSCILLATING


def criterion_1():
    rule = StepRule(HES, 2)
    bad = [n for n in range(13) if sum(boundary_counts(rule, (2, 1), n).values()) != baxter_number(n + 1)]
    return not bad, 10, f"hesitating W_2 boundary sums = B_(n+1) for n=0..12 (mismatches: {bad})"


def criterion_2():
    dist = {0: 2, 1: 3, 2: 1}
    tabs = enumerate_tableaux(TableauKind.HESITATING, 2, 2, lambda s: s.is_row())
    walks = boundary_counts(StepRule(HES, 2), (2, 1), 2)
    diagrams = generate_diagrams(DiagramKind.PARTITION, 2, 2)
    sizes_ok = (
        len(tabs) == len(diagrams) == sum(walks.values()) == 6
        and final_row_distribution(tabs) == dist
        and walks == dist
        and Counter(d.m for d in diagrams) == dist
    )
    pairs = 0
    for shapes, walk, diagram in TABLE_ONE:
        seq = TableauSequence.of(TableauKind.HESITATING, *shapes)
        d = OpenArcDiagram.from_json(diagram)
        pairs += (
            format_walk(tableau_to_walk(seq, 2)) == walk
            and diagram_to_tableau(d, 2) == seq
            and tableau_to_diagram(seq, 2) == d
        )
    return sizes_ok and pairs == 6, 1, f"three classes of size 6 with m-distribution {dist}; {pairs}/6 rows paired"


def criterion_3():
    rule = StepRule(HES, 1)
    got = [count_walks(rule, Chamber.W, (1,), n, (1,)) for n in range(15)]
    want = [catalan(n) for n in range(15)]
    note = "matches Motzkin numbers" if got == [motzkin(n) for n in range(15)] else "matches neither"
    return got == want, 1, f"|L^(1)_(n,0)| = C_n for n=0..14: got {got[:8]}..., {note}"


def criterion_4():
    total = failures = 0
    for kind in DiagramKind:
        for k in (1, 2, 3):
            for n in range(7):
                t, f = roundtrip_failures(kind, n, k)
                total += t
                failures += f
    return failures == 0, 120, f"{total} diagrams, both kinds, n<=6, k<=3: {failures} round-trip failures"


def criterion_5():
    got = [len(generate_diagrams(DiagramKind.PARTITION, n, 2)) for n in range(10)]
    want = [baxter_number(n + 1) for n in range(10)]
    return got == want, 120, f"partition diagrams avoiding enhanced 3-nestings, n<=9: {got}"


def criterion_6():
    want = [baxter_number(n) for n in range(1, 13)]
    sizes = {r: level_sizes(builtin_rule(r), 12) for r in "ABC"}
    labels_a = expand_levels(builtin_rule("A"), 3)[2][1]
    labels_c = expand_levels(builtin_rule("C"), 3)[2][1]
    ok = all(s == want for s in sizes.values()) and labels_a != labels_c
    return ok, 5, f"rules A, B, C give B_1..B_12; level-3 labels A {sorted(labels_a.items())} vs C {sorted(labels_c.items())}"


def criterion_7():
    bad = []
    for k in range(1, 5):
        if syt_egf_det(k, 16).counts() != [count_syt_bounded_height(n, 2 * k) for n in range(17)]:
            bad.append(("syt", k))
        rule = StepRule(OSC, k)
        if osc_boundary_egf(k, 16).counts() != [count_walks(rule, Chamber.W, delta(k), n) for n in range(17)]:
            bad.append(("walk", k))
    return not bad, 60, f"Bessel determinants vs DP, k<=4, n<=16 (mismatches: {bad})"


def criterion_8():
    bad = [k for k in range(1, 9) if not conjecture_check(k, 12).agree]
    return not bad, 120, f"boundary oscillating walks = SYT of height <= 2k to order 12, k=1..8 (fail: {bad})"


def criterion_9():
    want = [baxter_number(n + 1) for n in range(13)]
    r = kernel_W(12)
    dp = [count_walks(StepRule(HES, 2), Chamber.W, (2, 1), n) for n in range(13)]
    fb = fallback_W(12).counts()
    ok = r.W.counts() == want == dp == fb and r.W_diagonal == r.W and r.H_diagonal == r.H and r.V_diagonal == r.V
    return ok, None, "kernel W = B_(n+1) = DP to order 12; PT/NT and diagonal agree; DP fallback agrees"


def criterion_10():
    residual = apply_operator(BAXTER_OPERATOR, shifted_baxter_series(30))
    ok = residual.order == 25 and not any(residual.coeffs)
    return ok, 1, f"operator residual zero through order {residual.order}"


def criterion_11():
    reports = [orbit_sum_check(d) for d in (2, 3, 4, 5)]
    groups_ok = [r.group_order for r in reports] == [factorial(d) for d in (2, 3, 4, 5)]
    equal = {r.d: r.equal for r in reports}
    flipped = [r.d for r in reports if not r.equal and r.equal_up_to_sign]
    detail = f"group sizes {[r.group_order for r in reports]}; equal to printed product: {equal}"
    if flipped:
        detail += f"; off by a factor -1 at d={flipped}"
    return groups_ok and all(equal.values()), 30, detail


def criterion_12():
    bad = []
    for k in (2, 3):
        if oscillating_diagonal(k, 10).counts() != [count_walks(StepRule(OSC, k), Chamber.W, delta(k), n) for n in range(11)]:
            bad.append(("oscillating", k))
        if syt_diagonal_conjecture(k, 10).counts() != [count_syt_bounded_height(n, k) for n in range(11)]:
            bad.append(("syt", k))
    return not bad, None, f"diagonals vs DP for k=2,3 to order 10 (mismatches: {bad})"


CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
    criterion_12,
]


KNOWN_FALSE = {
    3: "hesitating W_1 walks returning to (1) are counted by Motzkin numbers, not Catalan numbers",
    11: "the printed product equals the orbit sum only up to (-1)^binomial(d-2, 2)",
}


def _param(i, check):
    marks = [pytest.mark.xfail(reason=KNOWN_FALSE[i], strict=True)] if i in KNOWN_FALSE else []
    return pytest.param(check, id=f"criterion_{i}", marks=marks)


@pytest.mark.parametrize("check", [_param(i, c) for i, c in enumerate(CRITERIA, 1)])
def test_criterion(check, capsys):
    number = check.__name__.split("_")[1]
    start = time.perf_counter()
    ok, limit, detail = check()
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    budget = f" (limit {limit} s)" if limit is not None else ""
    line = f"{'PASS' if ok and in_time else 'FAIL'} criterion {number}: {detail} [{elapsed:.2f} s{budget}]"
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert in_time, line

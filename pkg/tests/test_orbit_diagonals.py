from math import factorial

import pytest
import sympy

from baxtab.errors import GroupClosureOverflow, SupportOverflow
from baxtab.series import (
    LaurentPoly,
    MultiSeries,
    diagonal,
    generate_group,
    orbit_product,
    orbit_sum,
    orbit_sum_check,
    oscillating_diagonal,
    syt_diagonal_conjecture,
)
from baxtab.series.diagonals import oscillating_diagonal_raw
from baxtab.tableaux import count_syt_bounded_height
from baxtab.walks import BOUNDARY, Chamber, Model, StepRule, count_walks, delta


def to_sympy(poly, zs):
    return sum(c * sympy.prod(z**a for z, a in zip(zs, e)) for e, c in poly.terms.items())


def sympy_orbit_sum(d):
    """Signed orbit sum by breadth-first search over substitutions, done in sympy."""
    zs = sympy.symbols(f"z1:{d}")
    full = (1,) + zs + (1,)
    gens = []
    for i in range(1, d):
        gens.append({zs[i - 1]: full[i - 1] * full[i + 1] / zs[i - 1]})
    start = tuple(zs)
    seen = {start: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for img in frontier:
            for g in gens:
                new = tuple(sympy.simplify(x.subs(g, simultaneous=True)) for x in img)
                if new not in seen:
                    seen[new] = -seen[img]
                    nxt.append(new)
        frontier = nxt
    return sympy.expand(sum(s * sympy.prod(img) for img, s in seen.items())), zs, len(seen)


class TestGroup:
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_order_and_structure(self, d):
        g = generate_group(d)
        assert len(g) == factorial(d)
        assert g.sign_is_homomorphism()
        assert g.generators_are_involutions()

    def test_guard(self):
        with pytest.raises(GroupClosureOverflow):
            generate_group(6)
        with pytest.raises(ValueError):
            generate_group(1)


class TestOrbitSum:
    def test_d2(self):
        z = LaurentPoly.var(1, 0)
        assert orbit_sum(2) == z - z**-1

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_against_sympy_bfs(self, d):
        expected, zs, size = sympy_orbit_sum(d)
        assert size == factorial(d)
        assert sympy.expand(to_sympy(orbit_sum(d), zs) - expected) == 0

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_printed_product_off_by_sign(self, d):
        sign = -1 if ((d - 2) * (d - 3) // 2) % 2 else 1
        assert orbit_sum(d) == orbit_product(d) * sign
        assert orbit_sum(d) == orbit_product(d, corrected=True)

    @pytest.mark.parametrize("d, printed", [(2, True), (3, True), (4, False), (5, False)])
    def test_report(self, d, printed):
        r = orbit_sum_check(d)
        assert r.group_order == factorial(d)
        assert r.equal is printed
        assert r.equal_up_to_sign and r.equal_corrected
        assert r.difference.is_zero() is printed


class TestDiagonalHelper:
    def test_selector_validation(self):
        f = MultiSeries(1, [LaurentPoly.const(1)])
        with pytest.raises(ValueError):
            diagonal(f, "antidiagonal")

    def test_support_guard(self):
        x = LaurentPoly.var(1, 0)
        f = MultiSeries(1, [(x + 1) ** n for n in range(10)])
        with pytest.raises(SupportOverflow):
            diagonal(f, support_guard=20)
        assert diagonal(f).coeffs == (1,) * 10


class TestOscillatingDiagonal:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_against_dp(self, k):
        order = 12 if k < 4 else 8
        rule = StepRule(Model.OSCILLATING, k)
        expected = [count_walks(rule, Chamber.W, delta(k), n, BOUNDARY) for n in range(order + 1)]
        assert oscillating_diagonal(k, order).counts() == expected

    def test_raw_calibration(self):
        # the raw expansion starts at t^(2k-1) and carries the sign (-1)^(k(k-1)/2)
        raw = oscillating_diagonal_raw(3, 8)
        assert not any(raw.coeffs[:5])
        assert raw[5] == -1

    def test_validation(self):
        with pytest.raises(ValueError):
            oscillating_diagonal(0, 3)
        with pytest.raises(ValueError):
            oscillating_diagonal(13, 3)


class TestSytDiagonal:
    @pytest.mark.parametrize("k, order", [(2, 12), (3, 10), (4, 8)])
    def test_counts_bounded_height_syt(self, k, order):
        expected = [count_syt_bounded_height(n, k) for n in range(order + 1)]
        assert syt_diagonal_conjecture(k, order).counts() == expected
        assert syt_diagonal_conjecture(k, order, phi="corrected").counts() == expected

    def test_printed_product_negates_at_four(self):
        orbit = syt_diagonal_conjecture(4, 6)
        assert syt_diagonal_conjecture(4, 6, phi="printed") == -orbit
        assert syt_diagonal_conjecture(3, 6, phi="printed") == syt_diagonal_conjecture(3, 6)

    def test_validation(self):
        with pytest.raises(ValueError):
            syt_diagonal_conjecture(1, 4)
        with pytest.raises(ValueError):
            syt_diagonal_conjecture(3, 4, phi="other")

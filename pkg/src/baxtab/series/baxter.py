"""Baxter numbers: closed form, P-recurrence and generating series."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from baxtab.errors import NonIntegerStep
from baxtab.series.core import UniSeries


def baxter_number(n: int) -> int:
    """B_n as the triple-binomial sum; B_1 = 1, B_2 = 2, B_3 = 6, ..."""
    if n < 1:
        raise ValueError("Baxter numbers are indexed from 1")
    total = Fraction(0)
    denom = comb(n + 1, 1) * comb(n + 1, 2)
    for k in range(1, n + 1):
        total += Fraction(comb(n + 1, k - 1) * comb(n + 1, k) * comb(n + 1, k + 1), denom)
    if total.denominator != 1:
        raise ArithmeticError(f"closed form for B_{n} is not an integer: {total}")
    return int(total)


def baxter_by_recurrence(count: int) -> list[int]:
    """[B_1, ..., B_count] from the order-two recurrence.

    With w_n = B_{n+1}:
        8(n+2)(n+1) w_n + (7n^2 + 49n + 82) w_{n+1} = (n+6)(n+5) w_{n+2},
    seeded by w_0 = 1, w_1 = 2. Every division is checked to be exact.
    """
    if count < 2:
        raise ValueError("need at least the two seeds")
    w = [1, 2]
    for n in range(count - 2):
        num = 8 * (n + 2) * (n + 1) * w[n] + (7 * n * n + 49 * n + 82) * w[n + 1]
        den = (n + 6) * (n + 5)
        q, r = divmod(num, den)
        if r:
            raise NonIntegerStep(f"step n={n}: {num} not divisible by {den}")
        w.append(q)
    return w


def shifted_baxter_series(order: int) -> UniSeries:
    """sum_{n <= order} B_{n+1} t^n."""
    return UniSeries([baxter_number(n + 1) for n in range(order + 1)], order)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def motzkin(n: int) -> int:
    """M_n via (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}."""
    a, b = 1, 1  # M_0, M_1
    if n == 0:
        return 1
    for i in range(2, n + 1):
        a, b = b, ((2 * i + 1) * b + 3 * (i - 1) * a) // (i + 2)
    return b

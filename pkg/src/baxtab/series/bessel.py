"""Bessel-series determinants for bounded-height SYT and Weyl-chamber walks.

b_j(t) = sum_n t^{2n+j} / (n! (n+j)!) and b_{-j} = b_j.

* SYT of height <= 2k:  det[b_{i-j} + b_{i+j-1}]_{1<=i,j<=k}   (EGF)
* oscillating W_k walks lam -> mu:  det[b_{mu_i-lam_j}(s t) - b_{mu_i+lam_j}(s t)]

The walk determinant's argument scale ``s`` is 1 under this normalisation of
b_j; :data:`WALK_ARGUMENT_SCALE` pins it and a test checks that s = 2 is wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from baxtab.series.core import EGF, UniSeries, determinant

WALK_ARGUMENT_SCALE = 1
CONJECTURE_GUARD = 8


@lru_cache(maxsize=None)
def _bessel_coeffs(j: int, order: int, scale: int) -> tuple[Fraction, ...]:
    j = abs(j)
    cs = [Fraction(0)] * (order + 1)
    n = 0
    while 2 * n + j <= order:
        cs[2 * n + j] = Fraction(scale ** (2 * n + j), factorial(n) * factorial(n + j))
        n += 1
    return tuple(cs)


def bessel_series(j: int, order: int, scale: int = 1) -> UniSeries:
    """b_j(scale * t) to ``order``, EGF-flavoured."""
    return UniSeries(_bessel_coeffs(j, order, scale), order, EGF)


def syt_egf_det(k: int, order: int) -> UniSeries:
    """EGF of standard Young tableaux with at most 2k rows."""
    if k < 1:
        raise ValueError("k must be at least 1")
    b = lambda j: bessel_series(j, order)  # noqa: E731
    matrix = [[b(i - j) + b(i + j - 1) for j in range(1, k + 1)] for i in range(1, k + 1)]
    result = determinant(matrix, UniSeries.zero(order, EGF), UniSeries.one(order, EGF))
    result.counts()  # raises NonIntegralCoefficient on a bad determinant
    return result


def walk_egf_det(lam: tuple[int, ...], mu: tuple[int, ...], order: int, scale: int = WALK_ARGUMENT_SCALE) -> UniSeries:
    """EGF of oscillating W_k walks from ``lam`` to ``mu``."""
    k = len(lam)
    b = lambda j: bessel_series(j, order, scale)  # noqa: E731
    matrix = [[b(mu[i] - lam[j]) - b(mu[i] + lam[j]) for j in range(k)] for i in range(k)]
    return determinant(matrix, UniSeries.zero(order, EGF), UniSeries.one(order, EGF))


def osc_boundary_egf(k: int, order: int, scale: int = WALK_ARGUMENT_SCALE) -> UniSeries:
    """EGF of oscillating W_k walks from delta to the boundary {delta + m e_1}.

    The m-th summand is O(t^m), so m runs to ``order`` only.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    delta = tuple(range(k, 0, -1))
    total = UniSeries.zero(order, EGF)
    for m in range(order + 1):
        mu = (k + m,) + delta[1:]
        total = total + walk_egf_det(delta, mu, order, scale)
    if scale == WALK_ARGUMENT_SCALE:
        total.counts()
    return total


@dataclass(frozen=True)
class ConjectureReport:
    k: int
    order: int
    agree: bool
    first_disagreement: int | None
    walk_counts: list[int]
    syt_counts: list[int]


def conjecture_check(k: int, order: int, guard: int = CONJECTURE_GUARD) -> ConjectureReport:
    """Compare boundary-walk and height-2k SYT EGFs coefficientwise."""
    if k > guard:
        raise ValueError(f"k={k} exceeds guard {guard}")
    walks = osc_boundary_egf(k, order)
    syt = syt_egf_det(k, order)
    bad = walks.first_disagreement(syt)
    return ConjectureReport(k, order, bad is None, bad, walks.counts(), syt.counts())

"""Multivariate diagonals for oscillating boundary walks and bounded-height SYT.

Both formulas are rational functions of the shape t^a N(z) / (1 - t K(z)),
possibly times prod 1/(1 - z_i), so the t^n coefficient is N K^(n-a) and
never needs a full series product.

Calibration of the oscillating formula (pinned by tests against the DP):
the raw diagonal of t^(2k-1) N(z) / (1 - t z_1...z_k S(z)) equals
(-1)^(k(k-1)/2) t^(2k-1) O_k(t). :func:`oscillating_diagonal` strips both.
"""

from __future__ import annotations

from collections.abc import Sequence

from baxtab.errors import SupportOverflow
from baxtab.series.core import UniSeries
from baxtab.series.laurent import LaurentPoly, MultiSeries, rational_diagonal
from baxtab.series.orbit import orbit_product, orbit_sum, step_polynomial

SELECTORS = ("diagonal", "constant")
SUPPORT_GUARD = 2_000_000
DIAGONAL_GUARD = 12


def diagonal(f: MultiSeries, selector: str = "diagonal", geometric: Sequence[int] = (), support_guard: int = SUPPORT_GUARD) -> UniSeries:
    """Per t-order, the coefficient picked by ``selector``.

    ``"diagonal"`` keeps z_1^n ... z_d^n at t^n, ``"constant"`` keeps the
    constant term in z.
    """
    if selector not in SELECTORS:
        raise ValueError(f"unknown selector {selector!r}; expected one of {SELECTORS}")
    size = sum(len(p.terms) for p in f.coeffs)
    if size > support_guard:
        raise SupportOverflow(f"{size} monomials exceed guard {support_guard}")
    return f.diagonal(selector, geometric)


def oscillating_numerator(k: int) -> LaurentPoly:
    """(z_3 z_4^2 ... z_k^(k-2)) (z_1 + 1) prod_{j<i} (z_i - z_j)(z_i z_j - 1) prod_{i>=2} (z_i^2 - 1)."""
    z = [LaurentPoly.var(k, i) for i in range(k)]
    num = LaurentPoly.monomial([0, 0] + list(range(1, k - 1))) if k >= 2 else LaurentPoly.const(1)
    num = num * (z[0] + 1)
    for i in range(k):
        for j in range(i):
            num = num * (z[i] - z[j]) * (z[i] * z[j] - 1)
    for i in range(1, k):
        num = num * (z[i] * z[i] - 1)
    return num


def oscillating_kernel(k: int) -> LaurentPoly:
    z = [LaurentPoly.var(k, i) for i in range(k)]
    s = LaurentPoly(k)
    for zi in z:
        s = s + zi + zi**-1
    return LaurentPoly.monomial([1] * k) * s


def oscillating_diagonal_raw(k: int, order: int, selector: str = "diagonal") -> UniSeries:
    """The uncalibrated diagonal, carrying its t^(2k-1) prefactor and sign."""
    return rational_diagonal(oscillating_numerator(k), oscillating_kernel(k), order, t_power=2 * k - 1, selector=selector)


def oscillating_diagonal(k: int, order: int, guard: int = DIAGONAL_GUARD) -> UniSeries:
    """O_k(t) to ``order``: oscillating W_k walks from delta to the boundary."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > guard:
        raise ValueError(f"k={k} exceeds guard {guard}")
    shift = 2 * k - 1
    raw = oscillating_diagonal_raw(k, order + shift)
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    return UniSeries([sign * raw[n + shift] for n in range(order + 1)], order)


def syt_step_polynomial(k: int) -> LaurentPoly:
    """S(z) = 1/z_1 + z_1/z_2 + ... + z_{k-2}/z_{k-1} + z_{k-1}."""
    return step_polynomial(k).reciprocal_vars()


def syt_diagonal_conjecture(k: int, order: int, phi: str = "orbit", guard: int = DIAGONAL_GUARD) -> UniSeries:
    """Y_k(t) from the orbit-sum diagonal; should count SYT of height <= k.

    ``phi="orbit"`` takes Phi as the signed orbit sum of z_1...z_{k-1};
    ``phi="printed"`` uses the product form with its middle factors as
    printed, which flips the sign for k >= 4.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    if k > guard:
        raise ValueError(f"k={k} exceeds guard {guard}")
    if phi == "orbit":
        big_phi = orbit_sum(k)
    elif phi == "printed":
        big_phi = orbit_product(k)
    elif phi == "corrected":
        big_phi = orbit_product(k, corrected=True)
    else:
        raise ValueError(f"unknown phi {phi!r}")
    allz = LaurentPoly.monomial([1] * (k - 1))
    numerator = allz * big_phi.reciprocal_vars()
    return rational_diagonal(numerator, allz * syt_step_polynomial(k), order, geometric=range(k - 1))

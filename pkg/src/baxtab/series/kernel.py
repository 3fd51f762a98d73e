"""Kernel-method series for hesitating walks in the quadrant Q_2.

The algebraic series Y(x; t) is the power-series root of

    t(1+x) Y^2 - (x - t(1+x)^2) Y + t x (1+x) = 0,

whose discriminant is t^2x^4 - 2tx^3 + (1 - 4t - 2t^2)x^2 - 2tx + t^2. From Y,

    G(x, t) = Y / (t(1+x)) * (x^2 - Y^2/x^2 + Y/x^3),

and PT_x G (resp. NT_x G) counts Q_2 hesitating walks from (2,1) ending on
the x-axis row (i, 1) (resp. the y-axis column (1, j), at x^{-(j+1)}).
Evaluating at x = 1 and subtracting gives W(t) = sum B_{n+1} t^n, which is
also recovered as a diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass

from baxtab.errors import BranchAmbiguous, NoPowerSeriesRoot
from baxtab.series.core import UniSeries
from baxtab.series.laurent import LaurentPoly, MultiSeries
from baxtab.walks import Chamber, Model, StepRule, count_layers

KERNEL_GUARD = 20

X = LaurentPoly.var(1, 0)
ONE = LaurentPoly.const(1)


def _poly_in_t(*coeffs: LaurentPoly) -> list[LaurentPoly]:
    return list(coeffs)


def kernel_quadratic(transcribed: bool = False) -> tuple[list[LaurentPoly], list[LaurentPoly], list[LaurentPoly]]:
    """Coefficients (a, b, c) of a Y^2 + b Y + c = 0, each a polynomial in t.

    The default uses numerator -tx^2 + (1-2t)x - t - sqrt(D). With
    ``transcribed=True`` the numerator is -tx^2 + (1-2t)x - t sqrt(D), whose
    rationalisation has no power-series root (kept to document that).
    """
    one_x = ONE + X
    if not transcribed:
        # t(1+x) Y^2 - (x - t(1+x)^2) Y + t x (1+x)
        a = _poly_in_t(LaurentPoly(1), one_x)
        b = _poly_in_t(-X, one_x * one_x)
        c = _poly_in_t(LaurentPoly(1), X * one_x)
        return a, b, c
    # (2t(1+x) Y - B)^2 = t^2 D with B = -t x^2 + (1-2t) x
    disc = [X * X, -2 * X**3 - 4 * X * X - 2 * X, X**4 - 2 * X * X + ONE]  # D by powers of t
    B = [X, -X * X - 2 * X]
    a = [LaurentPoly(1), LaurentPoly(1), 4 * one_x * one_x]
    b = [LaurentPoly(1), -4 * one_x * B[0], -4 * one_x * B[1]]
    bb = [B[0] * B[0], 2 * B[0] * B[1], B[1] * B[1]]
    c = [bb[0], bb[1], bb[2] - disc[0], -disc[1], -disc[2]]
    return a, b, c


def _coeff(poly: list[LaurentPoly], n: int) -> LaurentPoly:
    return poly[n] if n < len(poly) else LaurentPoly(1)


def power_series_root(a: list[LaurentPoly], b: list[LaurentPoly], c: list[LaurentPoly], order: int) -> MultiSeries:
    """The root of a Y^2 + b Y + c = 0 in Q[x, 1/x][[t]], order by order.

    Requires the t^0 part to pin Y_0 uniquely with an invertible (monomial)
    derivative 2 a_0 Y_0 + b_0; the remaining coefficients follow by a
    Hensel lift.
    """
    a0, b0, c0 = _coeff(a, 0), _coeff(b, 0), _coeff(c, 0)
    if a0:
        raise BranchAmbiguous("both roots are power series candidates at t = 0")
    if not b0:
        if c0:
            raise NoPowerSeriesRoot("t^0 equation reads c_0 = 0 with c_0 nonzero")
        raise BranchAmbiguous("t^0 equation is trivial")
    if len(b0.terms) != 1:
        raise NoPowerSeriesRoot("linear coefficient at t = 0 is not a unit")
    y0 = (-c0).exact_divide(b0) if c0 else LaurentPoly(1)
    deriv = b0  # 2 a0 y0 + b0 with a0 = 0
    inv = deriv ** -1
    ys = [y0]
    for n in range(1, order + 1):
        partial = ys + [LaurentPoly(1)]
        resid = LaurentPoly(1)
        for i in range(n + 1):
            resid = resid + _coeff(c, n) * (1 if i == 0 else 0)
            bi = _coeff(b, i)
            if bi:
                resid = resid + bi * partial[n - i]
        for i in range(n + 1):
            ai = _coeff(a, i)
            if not ai:
                continue
            rest = n - i
            sq = LaurentPoly(1)
            for p in range(rest + 1):
                sq = sq + partial[p] * partial[rest - p]
            resid = resid + ai * sq
        ys.append(-(resid * inv))
    return MultiSeries(1, ys, order)


def _check_root(y: MultiSeries, a: list[LaurentPoly], b: list[LaurentPoly], c: list[LaurentPoly]) -> None:
    as_series = lambda p: MultiSeries(1, p, y.order)  # noqa: E731
    resid = as_series(a) * y * y + as_series(b) * y + as_series(c)
    if any(resid.coeffs):
        raise ArithmeticError("computed Y does not satisfy its quadratic")


@dataclass(frozen=True)
class KernelResult:
    Y: MultiSeries
    G: MultiSeries
    H: UniSeries  # H(1; t) via PT_x
    V: UniSeries  # V(1; t) via NT_x
    W: UniSeries  # H - V
    H_diagonal: UniSeries
    V_diagonal: UniSeries
    W_diagonal: UniSeries


def algebraic_Y(order: int) -> MultiSeries:
    a, b, c = kernel_quadratic()
    y = power_series_root(a, b, c, order)
    _check_root(y, a, b, c)
    return y


def series_G(order: int) -> tuple[MultiSeries, MultiSeries]:
    """(Y, G) with G to ``order``; Y is computed one order further."""
    y = algebraic_Y(order + 1)
    one_x = ONE + X
    # Y / (t (1+x)), dividing exactly at every order
    z = MultiSeries(1, [y[n + 1].exact_divide(one_x) for n in range(order + 1)], order)
    y = MultiSeries(1, y.coeffs[: order + 1], order)
    xbar = LaurentPoly.var(1, 0, -1)
    bracket = MultiSeries(1, [X * X], order) - y * y * (xbar * xbar) + y * (xbar**3)
    return y, z * bracket


def kernel_W(order: int, guard: int = KERNEL_GUARD) -> KernelResult:
    """W(t) = H(1;t) - V(1;t) both by PT/NT extraction and as a diagonal."""
    if order > guard:
        raise ValueError(f"order {order} exceeds guard {guard}")
    y, g = series_G(order)
    h = g.positive_part().at_one()
    v = g.negative_part().at_one()
    # G(1/x, x t) / (1 - x)  and  G(x, x t) / (1 - x)
    fh = g.transform(lambda e, n: ((n - e[0],), n))
    fv = g.transform(lambda e, n: ((n + e[0],), n))
    hd = fh.diagonal(geometric=(0,))
    vd = fv.diagonal(geometric=(0,))
    result = KernelResult(y, g, h, v, h - v, hd, vd, hd - vd)
    if not result.W.agrees_with(result.W_diagonal):
        raise ArithmeticError("PT/NT and diagonal forms of W disagree")
    return result


def quadrant_axis_series(order: int) -> tuple[MultiSeries, MultiSeries]:
    """H(x;t), V(y;t) straight from the quadrant DP (the fallback route).

    H carries x^i t^n for walks ending at (i, 1); V carries y^j t^n for (1, j).
    """
    layers = count_layers(StepRule(Model.HESITATING, 2), Chamber.Q, (2, 1), order)
    hs, vs = [], []
    for layer in layers:
        hs.append(LaurentPoly(1, {(p[0],): c for p, c in layer.items() if p[1] == 1}))
        vs.append(LaurentPoly(1, {(p[1],): c for p, c in layer.items() if p[0] == 1}))
    return MultiSeries(1, hs, order), MultiSeries(1, vs, order)


def fallback_W(order: int) -> UniSeries:
    h, v = quadrant_axis_series(order)
    return h.at_one() - v.at_one()

"""Laurent polynomials in several variables and series in t over them.

A :class:`LaurentPoly` is a sparse map from exponent tuples to exact
coefficients (ints or Fractions). A :class:`MultiSeries` is a truncated
series in t whose coefficients are LaurentPolys; with one auxiliary
variable it plays the role of a series in Q[x, 1/x][[t]].
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction
from typing import Any

from baxtab.errors import SupportOverflow
from baxtab.series.core import UniSeries

Exp = tuple[int, ...]


class LaurentPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Exp, Any] | None = None) -> None:
        self.nvars = nvars
        self.terms: dict[Exp, Any] = {}
        for e, c in (terms or {}).items():
            if c:
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                self.terms[tuple(e)] = c

    @classmethod
    def const(cls, nvars: int, c: Any = 1) -> LaurentPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: Any = 1) -> LaurentPoly:
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> LaurentPoly:
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): 1})

    def copy(self) -> LaurentPoly:
        return LaurentPoly(self.nvars, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, e: Exp) -> Any:
        return self.terms.get(tuple(e), 0)

    def _coerce(self, other: Any) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return LaurentPoly.const(self.nvars, other)

    def __add__(self, other: Any) -> LaurentPoly:
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> LaurentPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            if not other:
                return LaurentPoly(self.nvars)
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        o = self._coerce(other)
        out: dict[Exp, Any] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPoly(self.nvars, {tuple(-x * -k for x in e): Fraction(1, c) ** -k})
        result = LaurentPoly.const(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def substitute(self, images: Sequence[Exp]) -> LaurentPoly:
        """Monomial substitution z_i -> z^{images[i]}."""
        out: dict[Exp, Any] = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for a, img in zip(e, images):
                if a:
                    for j, b in enumerate(img):
                        new[j] += a * b
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return LaurentPoly(self.nvars, out)

    def reciprocal_vars(self) -> LaurentPoly:
        """f(1/z_1, ..., 1/z_d)."""
        return LaurentPoly(self.nvars, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def map_exponents(self, fn: Callable[[Exp], Exp], nvars: int | None = None) -> LaurentPoly:
        out: dict[Exp, Any] = {}
        for e, c in self.terms.items():
            key = tuple(fn(e))
            out[key] = out.get(key, 0) + c
        return LaurentPoly(self.nvars if nvars is None else nvars, out)

    def exact_divide(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division by a univariate Laurent polynomial (asserts zero remainder)."""
        if self.nvars != 1 or other.nvars != 1:
            raise ValueError("exact_divide is univariate")
        if not other.terms:
            raise ZeroDivisionError
        rem = dict(self.terms)
        dtop = max(other.terms)[0]
        dlead = other.terms[(dtop,)]
        dlow = min(other.terms)[0]
        quot: dict[Exp, Any] = {}
        while rem:
            top = max(rem)[0]
            if top - dtop < min(rem)[0] - dlow:
                raise ArithmeticError("division is not exact")
            q = Fraction(rem[(top,)]) / dlead
            if q.denominator == 1:
                q = int(q)
            quot[(top - dtop,)] = q
            for (e,), c in other.terms.items():
                key = (e + top - dtop,)
                v = rem.get(key, 0) - q * c
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return LaurentPoly(1, quot)

    def positive_part(self, var: int = 0) -> LaurentPoly:
        return LaurentPoly(self.nvars, {e: c for e, c in self.terms.items() if e[var] > 0})

    def negative_part(self, var: int = 0) -> LaurentPoly:
        return LaurentPoly(self.nvars, {e: c for e, c in self.terms.items() if e[var] < 0})

    def evaluate_at_one(self) -> Any:
        return sum(self.terms.values())

    def constant_term(self) -> Any:
        return self.terms.get((0,) * self.nvars, 0)

    def min_exponents(self) -> Exp:
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def max_exponents(self) -> Exp:
        return tuple(max(e[i] for e in self.terms) for i in range(self.nvars))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"z{i + 1}^{a}" for i, a in enumerate(e) if a)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


class MultiSeries:
    """Truncated series sum_{n <= order} f_n(z) t^n with Laurent coefficients."""

    __slots__ = ("nvars", "coeffs", "order")

    def __init__(self, nvars: int, coeffs: Iterable[LaurentPoly], order: int | None = None) -> None:
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        cs = cs[: order + 1] + [LaurentPoly(nvars) for _ in range(order + 1 - len(cs))]
        self.nvars = nvars
        self.coeffs = cs
        self.order = order

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.coeffs[n]

    def __add__(self, other: MultiSeries) -> MultiSeries:
        n = min(self.order, other.order)
        return MultiSeries(self.nvars, [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __sub__(self, other: MultiSeries) -> MultiSeries:
        n = min(self.order, other.order)
        return MultiSeries(self.nvars, [a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __mul__(self, other: Any) -> MultiSeries:
        if isinstance(other, LaurentPoly):
            return MultiSeries(self.nvars, [c * other for c in self.coeffs], self.order)
        if not isinstance(other, MultiSeries):
            return MultiSeries(self.nvars, [c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [LaurentPoly(self.nvars) for _ in range(n + 1)]
        for i in range(n + 1):
            if not self.coeffs[i]:
                continue
            for j in range(n + 1 - i):
                if other.coeffs[j]:
                    out[i + j] = out[i + j] + self.coeffs[i] * other.coeffs[j]
        return MultiSeries(self.nvars, out, n)

    __rmul__ = __mul__

    def transform(self, fn: Callable[[Exp, int], tuple[Exp, int]], order: int | None = None) -> MultiSeries:
        """Reindex every term z^e t^n to z^{e'} t^{n'} via ``fn``.

        Terms landing beyond ``order`` (default: unchanged) are dropped, so the
        caller is responsible for ``fn`` not pulling unknown terms below it.
        """
        order = self.order if order is None else order
        out: list[dict[Exp, Any]] = [{} for _ in range(order + 1)]
        for n, poly in enumerate(self.coeffs):
            for e, c in poly.terms.items():
                e2, n2 = fn(e, n)
                if 0 <= n2 <= order:
                    out[n2][e2] = out[n2].get(e2, 0) + c
                elif n2 < 0:
                    raise SupportOverflow("transform produced a negative power of t")
        return MultiSeries(self.nvars, [LaurentPoly(self.nvars, d) for d in out], order)

    def positive_part(self, var: int = 0) -> MultiSeries:
        return MultiSeries(self.nvars, [c.positive_part(var) for c in self.coeffs], self.order)

    def negative_part(self, var: int = 0) -> MultiSeries:
        return MultiSeries(self.nvars, [c.negative_part(var) for c in self.coeffs], self.order)

    def at_one(self) -> UniSeries:
        """Set every auxiliary variable to 1."""
        return UniSeries([c.evaluate_at_one() for c in self.coeffs], self.order)

    def diagonal(self, selector: str = "diagonal", geometric: Sequence[int] = ()) -> UniSeries:
        """Extract one coefficient per t-order.

        ``selector="diagonal"`` takes z_1^n ... z_d^n at t^n; ``"constant"``
        takes the constant term in z at every t^n. Variables listed in
        ``geometric`` carry an implicit factor 1/(1 - z_i), expanded as a power
        series in z_i, which turns the coefficient into a partial sum.
        """
        out = []
        geo = set(geometric)
        for n, poly in enumerate(self.coeffs):
            target = n if selector == "diagonal" else 0
            if selector not in ("diagonal", "constant"):
                raise ValueError(f"unknown selector {selector!r}")
            total = 0
            for e, c in poly.terms.items():
                if all((a <= target) if i in geo else (a == target) for i, a in enumerate(e)):
                    total += c
            out.append(total)
        return UniSeries(out, self.order)


def rational_diagonal(
    numerator: LaurentPoly,
    kernel: LaurentPoly,
    order: int,
    t_power: int = 0,
    geometric: Sequence[int] = (),
    selector: str = "diagonal",
) -> UniSeries:
    """Diagonal of t^a N(z) / (1 - t K(z)) times prod_{i in geometric} 1/(1 - z_i).

    The t^n coefficient of the expansion is N(z) K(z)^{n-a}; the selector is
    applied to it exactly as in :meth:`MultiSeries.diagonal`, but without
    materialising the product N K^j.
    """
    geo = set(geometric)
    nv = numerator.nvars
    power = LaurentPoly.const(nv)
    out = []
    for n in range(order + 1):
        j = n - t_power
        if j < 0:
            out.append(0)
            continue
        if j > 0:
            power = power * kernel
        target = n if selector == "diagonal" else 0
        total = 0
        if not geo:
            for e, c in numerator.terms.items():
                want = tuple(target - a for a in e)
                v = power.terms.get(want)
                if v:
                    total += c * v
        else:
            # sum over exponents of N*K^j that are <= target on geometric vars
            for e, c in numerator.terms.items():
                for f, v in power.terms.items():
                    if all(
                        (a + b <= target) if i in geo else (a + b == target)
                        for i, (a, b) in enumerate(zip(e, f))
                    ):
                        total += c * v
        out.append(total)
    return UniSeries(out, order)

"""Exact truncated univariate power series over the rationals."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction
from typing import Any

from baxtab.errors import FlavorMismatch, NonIntegralCoefficient

OGF = "ogf"
EGF = "egf"


def as_fraction(x: Any) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class UniSeries:
    """c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).

    ``order`` is N, the last coefficient known exactly. Arithmetic truncates
    to the smaller order of its operands and never extends past it.
    """

    __slots__ = ("coeffs", "order", "flavor")

    def __init__(self, coeffs: Iterable[Any], order: int | None = None, flavor: str = OGF) -> None:
        cs = [as_fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order = order
        if flavor not in (OGF, EGF):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.flavor = flavor

    @classmethod
    def zero(cls, order: int, flavor: str = OGF) -> UniSeries:
        return cls([], order, flavor)

    @classmethod
    def one(cls, order: int, flavor: str = OGF) -> UniSeries:
        return cls([1], order, flavor)

    @classmethod
    def from_counts(cls, counts: Sequence[int], flavor: str = OGF) -> UniSeries:
        """OGF from counts directly; EGF divides count n by n!."""
        if flavor == EGF:
            return cls([Fraction(c, math.factorial(n)) for n, c in enumerate(counts)], flavor=EGF)
        return cls(counts, flavor=OGF)

    def __getitem__(self, n: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"coefficient {n} is beyond order {self.order}")
        return self.coeffs[n] if n >= 0 else Fraction(0)

    def __len__(self) -> int:
        return self.order + 1

    def _coerce(self, other: Any) -> UniSeries:
        if isinstance(other, UniSeries):
            if other.flavor != self.flavor:
                raise FlavorMismatch(f"cannot combine {self.flavor} with {other.flavor}")
            return other
        return UniSeries([other], self.order, self.flavor)

    def truncate(self, order: int) -> UniSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return UniSeries(self.coeffs[: order + 1], order, self.flavor)

    def __add__(self, other: Any) -> UniSeries:
        o = self._coerce(other)
        n = min(self.order, o.order)
        return UniSeries([a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs)], n, self.flavor)

    __radd__ = __add__

    def __neg__(self) -> UniSeries:
        return UniSeries([-c for c in self.coeffs], self.order, self.flavor)

    def __sub__(self, other: Any) -> UniSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> UniSeries:
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> UniSeries:
        if not isinstance(other, UniSeries):
            c = as_fraction(other)
            return UniSeries([c * a for a in self.coeffs], self.order, self.flavor)
        o = self._coerce(other)
        n = min(self.order, o.order)
        a, b = self.coeffs, o.coeffs
        nz_a = [(i, x) for i, x in enumerate(a[: n + 1]) if x]
        nz_b = [(j, y) for j, y in enumerate(b[: n + 1]) if y]
        out = [Fraction(0)] * (n + 1)
        for i, x in nz_a:
            for j, y in nz_b:
                if i + j > n:
                    break
                out[i + j] += x * y
        return UniSeries(out, n, self.flavor)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UniSeries:
        result = UniSeries.one(self.order, self.flavor)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self.flavor == other.flavor and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order, self.flavor))

    def agrees_with(self, other: UniSeries) -> bool:
        """Coefficientwise equality up to the smaller order."""
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def first_disagreement(self, other: UniSeries) -> int | None:
        n = min(self.order, other.order)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def derivative(self) -> UniSeries:
        if self.order == 0:
            raise ValueError("derivative of an order-0 series has no known coefficients")
        return UniSeries([i * c for i, c in enumerate(self.coeffs)][1:], self.order - 1, self.flavor)

    def shift(self, s: int) -> UniSeries:
        """Multiply by t^s (s may be negative if the low coefficients vanish)."""
        if s >= 0:
            return UniSeries([0] * s + list(self.coeffs), self.order + s, self.flavor)
        if any(self.coeffs[: -s]):
            raise ValueError("cannot divide by t: low coefficients are nonzero")
        return UniSeries(self.coeffs[-s:], self.order + s, self.flavor)

    def counts(self) -> list[int]:
        """Integer counts: c_n for OGF, n! c_n for EGF."""
        out = []
        for n, c in enumerate(self.coeffs):
            v = c * math.factorial(n) if self.flavor == EGF else c
            if v.denominator != 1:
                raise NonIntegralCoefficient(f"coefficient {n} gives non-integer count {v}")
            out.append(int(v))
        return out

    def to_json(self, name: str = "") -> dict:
        return {
            "name": name,
            "flavor": self.flavor,
            "order": self.order,
            "coeffs": [f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator) for c in self.coeffs],
        }

    def __repr__(self) -> str:
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"UniSeries({body} + O(t^{self.order + 1}), {self.flavor})"


def determinant(matrix: Sequence[Sequence[Any]], zero: Any, one: Any) -> Any:
    """Division-free determinant over any commutative ring.

    Row-by-row Laplace expansion memoised on the set of used columns:
    O(k 2^k) ring multiplications for a k x k matrix.
    """
    k = len(matrix)
    minors: dict[int, Any] = {0: one}
    for r in range(k):
        nxt: dict[int, Any] = {}
        for used, val in minors.items():
            for c in range(k):
                if used >> c & 1:
                    continue
                entry = matrix[r][c]
                if _is_zero(entry):
                    continue
                # sign of placing column c after the columns already used
                sign = -1 if bin(used >> c).count("1") % 2 else 1
                term = val * entry if sign > 0 else -(val * entry)
                key = used | (1 << c)
                nxt[key] = nxt[key] + term if key in nxt else term
        minors = nxt
    return minors.get((1 << k) - 1, zero)


def _is_zero(x: Any) -> bool:
    if isinstance(x, UniSeries):
        return not any(x.coeffs)
    return x == 0


def series_map(f: Callable[[int], Any], order: int, flavor: str = OGF) -> UniSeries:
    return UniSeries([f(n) for n in range(order + 1)], order, flavor)

"""Linear differential operators with polynomial coefficients in t."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from baxtab.errors import OrderUnderflow
from baxtab.series.core import UniSeries


@dataclass(frozen=True)
class DiffOperator:
    """sum_r p_r(t) D_t^r, stored as (coefficient list of p_r, r) pairs."""

    terms: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("empty operator")
        top = max(self.terms, key=lambda term: term[1])
        if not any(top[0]):
            raise ValueError("leading polynomial must be nonzero")

    @property
    def max_order(self) -> int:
        return max(r for _, r in self.terms)

    @classmethod
    def from_terms(cls, terms: Sequence[tuple[Sequence[int], int]]) -> DiffOperator:
        return cls(tuple((tuple(p), r) for p, r in terms))


def apply_operator(op: DiffOperator, f: UniSeries) -> UniSeries:
    """Apply ``op`` to a truncated series.

    The result is reported to order ``f.order - op.max_order``.
    """
    valid = f.order - op.max_order
    if valid < 0:
        raise OrderUnderflow(f"series of order {f.order} is too short for a D^{op.max_order} operator")
    out = [Fraction(0)] * (valid + 1)
    for poly, r in op.terms:
        # coefficients of D^r f, known to order f.order - r
        deriv = list(f.coeffs)
        for _ in range(r):
            deriv = [i * c for i, c in enumerate(deriv)][1:]
        for a, pa in enumerate(poly):
            if not pa:
                continue
            for n in range(a, valid + 1):
                out[n] += pa * deriv[n - a]
    return UniSeries(out, valid, f.flavor)


# Annihilator of sum B_{n+1} t^n, coefficients in increasing powers of t.
BAXTER_OPERATOR = DiffOperator.from_terms(
    [
        ((0, 0, 0, 0, -1, 7, 8), 5),  # t^4 (t+1)(8t-1)
        ((0, 0, 0, -20, 147, 176), 4),
        ((0, 0, -120, 964, 1216), 3),  # 4 t^2 (-30 + 241 t + 304 t^2)
        ((0, -240, 2292, 3072), 2),  # 12 t (-20 + 191 t + 256 t^2)
        ((-120, 1728, 2496), 1),  # 24 (-5 + 72 t + 104 t^2)
        ((240, 384), 0),
    ]
)

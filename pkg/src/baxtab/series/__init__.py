"""Exact truncated power series and the formulas built on them."""

from baxtab.series.baxter import baxter_by_recurrence, baxter_number, catalan, motzkin, shifted_baxter_series
from baxtab.series.bessel import (
    WALK_ARGUMENT_SCALE,
    ConjectureReport,
    bessel_series,
    conjecture_check,
    osc_boundary_egf,
    syt_egf_det,
    walk_egf_det,
)
from baxtab.series.core import EGF, OGF, UniSeries, determinant
from baxtab.series.diagonals import diagonal, oscillating_diagonal, syt_diagonal_conjecture
from baxtab.series.kernel import KernelResult, fallback_W, kernel_W
from baxtab.series.laurent import LaurentPoly, MultiSeries, rational_diagonal
from baxtab.series.operators import BAXTER_OPERATOR, DiffOperator, apply_operator
from baxtab.series.orbit import OrbitReport, generate_group, orbit_product, orbit_sum, orbit_sum_check

__all__ = [
    "BAXTER_OPERATOR",
    "EGF",
    "OGF",
    "WALK_ARGUMENT_SCALE",
    "ConjectureReport",
    "DiffOperator",
    "KernelResult",
    "LaurentPoly",
    "MultiSeries",
    "OrbitReport",
    "UniSeries",
    "apply_operator",
    "baxter_by_recurrence",
    "baxter_number",
    "bessel_series",
    "catalan",
    "motzkin",
    "conjecture_check",
    "determinant",
    "diagonal",
    "fallback_W",
    "generate_group",
    "kernel_W",
    "orbit_product",
    "orbit_sum",
    "orbit_sum_check",
    "osc_boundary_egf",
    "oscillating_diagonal",
    "rational_diagonal",
    "shifted_baxter_series",
    "syt_diagonal_conjecture",
    "syt_egf_det",
    "walk_egf_det",
]

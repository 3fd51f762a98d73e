"""The monomial-substitution group acting on z_1..z_{d-1} and its orbit sum.

Generators (with z_0 = z_d = 1):  phi_i : z_i -> z_{i-1} / z_i * z_{i+1}.
A group element is an integer matrix M acting on exponents: it sends the
monomial z^a to z^{a M}. Each phi_i fixes the step polynomial
z_1 + z_2/z_1 + ... + z_{d-1}/z_{d-2} + 1/z_{d-1}.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import factorial

from baxtab.errors import GroupClosureOverflow
from baxtab.series.laurent import LaurentPoly

Matrix = tuple[tuple[int, ...], ...]

ORBIT_GUARD = 5


def generator(d: int, i: int) -> Matrix:
    """phi_i (1-based) as the exponent matrix: row r is the image of z_r."""
    n = d - 1
    rows = []
    for r in range(n):
        row = [0] * n
        if r == i - 1:
            row[r] = -1
            if r - 1 >= 0:
                row[r - 1] = 1
            if r + 1 < n:
                row[r + 1] = 1
        else:
            row[r] = 1
        rows.append(tuple(row))
    return tuple(rows)


def compose(a: Matrix, b: Matrix) -> Matrix:
    """Matrix of f -> a(b(f)) acting on exponent row vectors: a then b is e M_a M_b... .

    With the convention z^e -> z^{e M}, applying ``b`` after ``a`` on the
    variables gives the product a @ b.
    """
    n = len(a)
    return tuple(tuple(sum(a[r][s] * b[s][c] for s in range(n)) for c in range(n)) for r in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def act(m: Matrix, poly: LaurentPoly) -> LaurentPoly:
    """sigma(f)(z) = f(sigma(z)): z_r is replaced by the monomial in row r."""
    return poly.substitute(m)


def step_polynomial(d: int) -> LaurentPoly:
    n = d - 1
    z = [LaurentPoly.var(n, i) for i in range(n)]
    s = z[0]
    for i in range(1, n):
        s = s + z[i] * z[i - 1] ** -1
    return s + z[n - 1] ** -1


@dataclass(frozen=True)
class Group:
    d: int
    elements: dict[Matrix, int]  # element -> sign
    generators: tuple[Matrix, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def sign_is_homomorphism(self) -> bool:
        for g, s in self.elements.items():
            for h in self.generators:
                if self.elements[compose(g, h)] != -s or self.elements[compose(h, g)] != -s:
                    return False
        return True

    def generators_are_involutions(self) -> bool:
        ident = identity(self.d - 1)
        return all(compose(g, g) == ident for g in self.generators)


def generate_group(d: int, guard: int = ORBIT_GUARD) -> Group:
    """Close {phi_1, ..., phi_{d-1}} under composition; sign = parity of word length."""
    if d < 2:
        raise ValueError("need d >= 2")
    if d > guard:
        raise GroupClosureOverflow(f"d={d} exceeds guard {guard}")
    gens = tuple(generator(d, i) for i in range(1, d))
    start = identity(d - 1)
    signs = {start: 1}
    queue = deque([start])
    limit = factorial(d)
    while queue:
        g = queue.popleft()
        for h in gens:
            gh = compose(g, h)
            if gh not in signs:
                signs[gh] = -signs[g]
                if len(signs) > limit:
                    raise GroupClosureOverflow(f"group exceeds {limit} elements")
                queue.append(gh)
    return Group(d, signs, gens)


def orbit_sum(d: int, group: Group | None = None) -> LaurentPoly:
    """sum_sigma sgn(sigma) sigma(z_1 ... z_{d-1})."""
    group = group or generate_group(d)
    mono = LaurentPoly.monomial([1] * (d - 1))
    total = LaurentPoly(d - 1)
    for g, s in group.elements.items():
        total = total + act(g, mono) * s
    return total


def orbit_product(d: int, corrected: bool = False) -> LaurentPoly:
    """The closed product form claimed for the orbit sum (d >= 2).

    As printed, each middle factor reads z_j z_l - z_{j+1} z_{l-1}, which is
    the negative of the Vandermonde factor in x_i = z_i / z_{i-1}; the
    printed product therefore differs from the orbit sum by
    (-1)^binomial(d-2, 2). ``corrected=True`` flips those factors.
    """
    n = d - 1
    z = [None] + [LaurentPoly.var(n, i) for i in range(n)]  # 1-based
    allz = LaurentPoly.monomial([1] * n)
    out = (z[1] * z[n] - 1) * allz ** (-(d - 1))
    for j in range(1, d - 1):
        out = out * (z[1] * z[j] - z[j + 1])
    for j in range(2, d):
        out = out * (z[n] * z[j] - z[j - 1])
    for j in range(1, d - 2):
        for l in range(j + 2, d):
            factor = z[j] * z[l] - z[j + 1] * z[l - 1]
            out = out * (-factor if corrected else factor)
    return out


@dataclass(frozen=True)
class OrbitReport:
    d: int
    group_order: int
    equal: bool  # against the printed product
    difference: LaurentPoly
    sign_homomorphism: bool
    involutions: bool
    equal_up_to_sign: bool
    equal_corrected: bool


def orbit_sum_check(d: int, guard: int = ORBIT_GUARD) -> OrbitReport:
    group = generate_group(d, guard)
    lhs = orbit_sum(d, group)
    rhs = orbit_product(d)
    diff = lhs - rhs
    return OrbitReport(
        d,
        len(group),
        diff.is_zero(),
        diff,
        group.sign_is_homomorphism(),
        group.generators_are_involutions(),
        diff.is_zero() or (lhs + rhs).is_zero(),
        (lhs - orbit_product(d, corrected=True)).is_zero(),
    )

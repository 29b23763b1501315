"""Schur and skew-Schur polynomials in time variables, plus their specializations.

A Schur value is computed from a "times" specification:

* ``GenericTimes(family)``: formal variables t1, t2, ... (or b1, b2, ...);
  the value is a GradedPoly, quasi-homogeneous of weighted degree |lam|.
* ``NumericTimes(values)``: explicit rational values t_m; the value is a
  rational number.
* ``MiwaTimes(x, sign)``: t_m = sign * sum_i x_i^m / m.
* ``PrincipalTimes(a, q)``: t_m = (1 - (q^a)^m) / (m (1 - q^m)); with
  ``q=None`` the rational degeneration t_m = a/m.
* ``PrincipalInfinityTimes(q)``: symbolic marker for the large-a limit of
  the principal family; Schur values collapse to hook-product formulas
  1/H_lam (``q=None``) or q^{n(lam)}/H_lam(q).

Evaluated kinds go through the same Jacobi-Trudi determinant as the
generic kind (never through a bialternant ratio, which would hit 0/0 at
coincident points); the closed hook/content product form is kept separate
in ``schur_principal_value`` so the two routes can be compared in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .partitions import (
    Partition,
    check_partition,
    conjugate,
    contents,
    contains,
    hook_data,
    n_statistic,
)
from .poly import FAMILY_T, GradedPoly, Var, rational_pow

# -- times specifications -----------------------------------------------------


@dataclass(frozen=True)
class GenericTimes:
    family: str = FAMILY_T


@dataclass(frozen=True)
class NumericTimes:
    values: tuple  # t_1, t_2, ...; entries beyond the tuple are zero

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def value(self, m: int) -> Fraction:
        return self.values[m - 1] if m <= len(self.values) else Fraction(0)


@dataclass(frozen=True)
class MiwaTimes:
    x: tuple
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(Fraction(v) for v in self.x))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


@dataclass(frozen=True)
class PrincipalTimes:
    a: Fraction
    q: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        if self.q is not None:
            object.__setattr__(self, "q", Fraction(self.q))


@dataclass(frozen=True)
class PrincipalInfinityTimes:
    q: Fraction | None = None

    def __post_init__(self):
        if self.q is not None:
            object.__setattr__(self, "q", Fraction(self.q))


TimesSpec = object  # any of the dataclasses above


def miwa_times(x, sign: str | int, d: int) -> NumericTimes:
    """Numeric times t_m = +-sum_i x_i^m / m for m = 1..d."""
    s = {"+": 1, "-": -1, 1: 1, -1: -1}[sign]
    xs = [Fraction(v) for v in x]
    values = []
    for m in range(1, d + 1):
        values.append(Fraction(s) * sum((v**m for v in xs), Fraction(0)) / m)
    return NumericTimes(tuple(values))


def principal_times(a=None, q: Fraction | None = None, d: int = 0, infinity: bool = False):
    """Principal specialization times.

    Finite kinds come back as NumericTimes through m = d; the infinity
    kinds are symbolic markers resolved to hook formulas in schur_poly.
    """
    if infinity:
        return PrincipalInfinityTimes(None if q is None else Fraction(q))
    a = Fraction(a)
    if q is None:
        return NumericTimes(tuple(a / m for m in range(1, d + 1)))
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    for m in range(1, d + 1):
        if q**m == 1:
            raise ValueError(f"q^{m} = 1: q is a root of unity in range")
    qa = rational_pow(q, a)
    values = tuple((1 - qa**m) / (m * (1 - q**m)) for m in range(1, d + 1))
    return NumericTimes(values)


def times_values(times, d: int) -> list[Fraction]:
    """Resolve an evaluated times spec to the list [t_1, ..., t_d]."""
    if isinstance(times, NumericTimes):
        return [times.value(m) for m in range(1, d + 1)]
    if isinstance(times, MiwaTimes):
        return list(miwa_times(times.x, times.sign, d).values)
    if isinstance(times, PrincipalTimes):
        spec = principal_times(times.a, times.q, d)
        return [spec.value(m) for m in range(1, d + 1)]
    raise TypeError(f"not an evaluated times spec: {times!r}")


# -- power sums ----------------------------------------------------------------


def power_sums_basis(d: int, family: str = FAMILY_T) -> list[GradedPoly]:
    """Polynomials p_0..p_d with sum p_m z^m = exp(sum t_i z^i)."""
    return list(_power_sums_basis_cached(d, family))


@lru_cache(maxsize=None)
def _power_sums_basis_cached(d: int, family: str) -> tuple[GradedPoly, ...]:
    if d < 0:
        raise ValueError("d must be >= 0")
    ps = [GradedPoly.constant(1, d)]
    for m in range(1, d + 1):
        # m * p_m = sum_{k=1..m} k * t_k * p_{m-k}
        acc = GradedPoly.zero(d)
        for k in range(1, m + 1):
            acc = acc + (GradedPoly.variable(Var(family, k), d) * ps[m - k]).scale(k)
        ps.append(acc.scale(Fraction(1, m)))
    return tuple(ps)


def numeric_power_sums(values: list[Fraction], d: int) -> list[Fraction]:
    """p_0..p_d evaluated at numeric times (same recursion as the generic case)."""
    ps = [Fraction(1)]
    for m in range(1, d + 1):
        acc = Fraction(0)
        for k in range(1, m + 1):
            acc += k * values[k - 1] * ps[m - k]
        ps.append(acc / m)
    return ps


# -- determinants ---------------------------------------------------------------


def det_fraction_matrix(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    n = len(rows)
    a = [[Fraction(v) for v in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def det_poly_matrix(rows: list[list[GradedPoly]]) -> GradedPoly:
    """Determinant of a small GradedPoly matrix by permutation expansion."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    total = None
    for perm in permutations(range(n)):
        if any(rows[i][perm[i]].is_zero() for i in range(n)):
            continue
        sign = _perm_sign(perm)
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        total = term.scale(sign) if total is None else total + term.scale(sign)
    if total is None:
        caps = rows[0][0].cap
        return GradedPoly.zero(caps, rows[0][0].fam_caps)
    return total


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


# -- Schur values ---------------------------------------------------------------


def _jacobi_trudi_rows(lam: Partition, mu: Partition = ()) -> list[list[int]]:
    """Indices p_{lam_r - mu_c - r + c} of the skew Jacobi-Trudi matrix."""
    n = len(lam)
    padded = tuple(mu) + (0,) * (n - len(mu))
    return [[lam[r] - padded[c] - (r + 1) + (c + 1) for c in range(n)] for r in range(n)]


@lru_cache(maxsize=None)
def _schur_generic_cached(lam: Partition, family: str, d: int) -> GradedPoly:
    if not lam:
        return GradedPoly.constant(1, d)
    # Work on the shorter side of the diagram: s_lam(t) equals the
    # determinant for the conjugate shape over the sign-twisted basis
    # p_m(t') with t'_k = (-1)^(k-1) t_k (the classical involution).
    if len(lam) > lam[0]:
        lam = conjugate(lam)
        base = _power_sums_twisted_cached(d, family)
    else:
        base = _power_sums_basis_cached(d, family)
    idx = _jacobi_trudi_rows(lam)
    zero = GradedPoly.zero(d)
    rows = [[base[k] if 0 <= k <= d else zero for k in row] for row in idx]
    return det_poly_matrix(rows)


@lru_cache(maxsize=None)
def _power_sums_twisted_cached(d: int, family: str) -> tuple[GradedPoly, ...]:
    """p_m at the sign-twisted times t_k -> (-1)^(k-1) t_k."""
    ps = [GradedPoly.constant(1, d)]
    for m in range(1, d + 1):
        acc = GradedPoly.zero(d)
        for k in range(1, m + 1):
            sign = (-1) ** (k - 1)
            acc = acc + (GradedPoly.variable(Var(family, k), d) * ps[m - k]).scale(sign * k)
        ps.append(acc.scale(Fraction(1, m)))
    return tuple(ps)


def _schur_numeric(lam: Partition, mu: Partition, values: list[Fraction], d: int) -> Fraction:
    if not lam:
        return Fraction(1)
    use_conjugate = not mu and len(lam) > lam[0]
    if use_conjugate:
        # s_lam(t) = s_lam'(t') with t'_k = (-1)^(k-1) t_k
        lam = conjugate(lam)
        values = [(-1) ** (k - 1) * v for k, v in enumerate(values, start=1)]
    top = lam[0] + len(lam)
    ps = numeric_power_sums(values + [Fraction(0)] * max(0, top - len(values)), top)
    idx = _jacobi_trudi_rows(lam, mu)
    rows = [[ps[k] if 0 <= k <= top else Fraction(0) for k in row] for row in idx]
    return det_fraction_matrix(rows)


def schur_poly(lam, times, d: int):
    """Schur value s_lam for the given times; GradedPoly or exact rational.

    Jacobi-Trudi determinant of the p_m basis, with p_k = 0 for k < 0 and
    s_empty = 1.  The infinity markers resolve to 1/H_lam and
    q^{n(lam)}/H_lam(q).
    """
    lam = check_partition(lam)
    if isinstance(times, GenericTimes):
        if sum(lam) > d:
            raise ValueError(f"|lam| = {sum(lam)} exceeds truncation grade {d}")
        return _schur_generic_cached(lam, times.family, d)
    if isinstance(times, PrincipalInfinityTimes):
        hd = hook_data(lam, times.q)
        if times.q is None:
            return Fraction(1) / hd.product
        return Fraction(times.q) ** n_statistic(lam) / hd.q_product
    values = times_values(times, max(d, lam[0] + len(lam) if lam else 0))
    return _schur_numeric(lam, (), values, d)


def skew_schur_poly(outer, inner, times, d: int):
    """Skew Schur value det(p_{lam_r - mu_c - r + c}); equals schur_poly at inner = ()."""
    outer = check_partition(outer)
    inner = check_partition(inner)
    if not contains(outer, inner):
        raise ValueError(f"inner {inner} not contained in outer {outer}")
    if outer == inner:
        if isinstance(times, GenericTimes):
            return GradedPoly.constant(1, d)
        return Fraction(1)
    if not inner:
        return schur_poly(outer, times, d)
    if isinstance(times, GenericTimes):
        if sum(outer) - sum(inner) > d:
            raise ValueError("skew weight exceeds truncation grade")
        return _skew_generic_cached(outer, inner, times.family, d)
    if isinstance(times, PrincipalInfinityTimes):
        raise TypeError("principal-infinity times are defined for straight shapes only")
    values = times_values(times, outer[0] + len(outer))
    return _schur_numeric(outer, inner, values, d)


@lru_cache(maxsize=None)
def _skew_generic_cached(outer: Partition, inner: Partition, family: str, d: int) -> GradedPoly:
    base = _power_sums_basis_cached(d, family)
    idx = _jacobi_trudi_rows(outer, inner)
    zero = GradedPoly.zero(d)
    rows = [[base[k] if 0 <= k <= d else zero for k in row] for row in idx]
    return det_poly_matrix(rows)


def schur_principal_value(lam, a, q: Fraction | None = None) -> Fraction:
    """Closed product form of s_lam at principal times.

    q given:  prod_cells (1 - q^(a + j - i)) * q^{n(lam)} / H_lam(q);
    q absent: prod_cells (a + j - i) / H_lam.
    """
    lam = check_partition(lam)
    a = Fraction(a)
    if q is None:
        hd = hook_data(lam)
        num = Fraction(1)
        for c in contents(lam):
            num *= a + c
        return num / hd.product
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    hd = hook_data(lam, q)
    qa = rational_pow(q, a)
    num = Fraction(1)
    for c in contents(lam):
        num *= 1 - qa * q**c
    return num * q ** n_statistic(lam) / hd.q_product

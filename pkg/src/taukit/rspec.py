"""The diagonal operator symbol r(D): factors, integer evaluation, content products.

An RSpec is a nonzero constant times a ratio of products of factors, each
factor being one of

* ``LinFactor(shift)``        -- (D + shift),
* ``QLinFactor(coeff, shift)`` -- (1 - coeff * q^(shift + D)),
* ``QPairFactor(amp, cosv)``   -- (1 - 2*amp*cosv*q^D + amp^2*q^(2D)),
  the folded real form of a conjugate pair
  (1 - amp e^{i eta} q^D)(1 - amp e^{-i eta} q^D) with cosv = cos(eta).

q is an exact rational parameter, required exactly when a q-factor is
present.  Fractional shifts in q-factors are admitted only when q has the
matching exact rational root, keeping every evaluation in the rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import check_partition, contains
from .poly import format_rational, parse_rational, rational_pow


class PoleError(ArithmeticError):
    """A denominator factor of r vanished at an integer point."""

    def __init__(self, point: int, message: str | None = None):
        self.point = point
        super().__init__(message or f"pole of r at integer point {point}")


@dataclass(frozen=True)
class LinFactor:
    shift: Fraction

    def value(self, n: int, q) -> Fraction:
        return n + self.shift


@dataclass(frozen=True)
class QLinFactor:
    coeff: Fraction
    shift: Fraction

    def value(self, n: int, q) -> Fraction:
        return 1 - self.coeff * rational_pow(q, self.shift + n)


@dataclass(frozen=True)
class QPairFactor:
    amp: Fraction
    cosv: Fraction

    def value(self, n: int, q) -> Fraction:
        qn = rational_pow(q, Fraction(n))
        return 1 - 2 * self.amp * self.cosv * qn + self.amp**2 * qn**2


def _needs_q(factors) -> bool:
    return any(isinstance(f, (QLinFactor, QPairFactor)) for f in factors)


@dataclass(frozen=True)
class RSpec:
    constant: Fraction = Fraction(1)
    num: tuple = ()
    den: tuple = ()
    q: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "num", tuple(self.num))
        object.__setattr__(self, "den", tuple(self.den))
        if self.q is not None:
            object.__setattr__(self, "q", Fraction(self.q))
        if self.constant == 0:
            raise ValueError("constant must be nonzero")
        if _needs_q(self.num + self.den):
            if self.q is None:
                raise ValueError("q-factors present but q not given")
            if self.q == 0:
                raise ValueError("q must be nonzero")

    def is_one(self) -> bool:
        return self.constant == 1 and not self.num and not self.den


def rspec_one() -> RSpec:
    return RSpec()


def rspec_mul(a: RSpec, b: RSpec) -> RSpec:
    """Product symbol (a*b)(D); q parameters must agree when both are present."""
    if a.q is not None and b.q is not None and a.q != b.q:
        raise ValueError(f"incompatible q parameters: {a.q} vs {b.q}")
    return RSpec(
        constant=a.constant * b.constant,
        num=a.num + b.num,
        den=a.den + b.den,
        q=a.q if a.q is not None else b.q,
    )


def rspec_shift(r: RSpec, m: int) -> RSpec:
    """The shifted symbol r(. + m)."""
    def shift_factor(f):
        if isinstance(f, LinFactor):
            return LinFactor(f.shift + m)
        if isinstance(f, QLinFactor):
            return QLinFactor(f.coeff, f.shift + m)
        if isinstance(f, QPairFactor):
            # q^(m + D) folds into the amplitude
            return QPairFactor(f.amp * rational_pow(r.q, Fraction(m)), f.cosv)
        raise TypeError(f"unknown factor {f!r}")

    return RSpec(
        constant=r.constant,
        num=tuple(shift_factor(f) for f in r.num),
        den=tuple(shift_factor(f) for f in r.den),
        q=r.q,
    )


@lru_cache(maxsize=None)
def _r_eval_cached(r: RSpec, n: int) -> Fraction:
    den = Fraction(1)
    for f in r.den:
        v = f.value(n, r.q)
        if v == 0:
            raise PoleError(n)
        den *= v
    num = r.constant
    for f in r.num:
        num *= f.value(n, r.q)
    return num / den


def r_eval(r: RSpec, n: int) -> Fraction:
    """Exact value r(n) at an integer; raises PoleError on a denominator zero."""
    return _r_eval_cached(r, int(n))


def content_product(r: RSpec, lam, m: int) -> Fraction:
    """r_lam(M) = prod over cells (i,j) of r(j - i + M); empty product is 1."""
    lam = check_partition(lam)
    out = Fraction(1)
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            out *= r_eval(r, j - i + m)
    return out


def skew_content_product(r: RSpec, outer, inner, m: int) -> Fraction:
    """Product of r over contents + M of the skew cells of outer/inner."""
    outer = check_partition(outer)
    inner = check_partition(inner)
    if not contains(outer, inner):
        raise ValueError(f"inner {inner} not contained in outer {outer}")
    padded = tuple(inner) + (0,) * (len(outer) - len(inner))
    out = Fraction(1)
    for i, part in enumerate(outer, start=1):
        for j in range(padded[i - 1] + 1, part + 1):
            out *= r_eval(r, j - i + m)
    return out


def poch_partition(a, lam, q: Fraction | None = None) -> Fraction:
    """Pochhammer symbol of a partition.

    q given:  (q^a; q)_lam = prod_cells (1 - q^(a + j - i));
    q absent: (a)_lam = prod_cells (a + j - i).
    """
    a = Fraction(a)
    lam = check_partition(lam)
    if not lam:
        return Fraction(1)
    if q is None:
        out = Fraction(1)
        for i, part in enumerate(lam, start=1):
            for j in range(1, part + 1):
                out *= a + j - i
        return out
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    qa = rational_pow(q, a)
    out = Fraction(1)
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            out *= 1 - qa * q ** (j - i)
    return out


def h_from_r(r: RSpec, lo: int, hi: int) -> dict[int, Fraction]:
    """Table n -> h(n) on [lo, hi] from h(lo) = 1, h(n) = h(n-1) / r(n).

    Requires r to have neither zeros nor poles on (lo, hi].
    """
    if hi < lo:
        raise ValueError("hi must be >= lo")
    table = {lo: Fraction(1)}
    for n in range(lo + 1, hi + 1):
        v = r_eval(r, n)
        if v == 0:
            raise ZeroDivisionError(f"r({n}) = 0: h is undefined past this point")
        table[n] = table[n - 1] / v
    return table


def c_constants(h: dict[int, Fraction], h_tilde: dict[int, Fraction], n: int) -> Fraction:
    """Gauge constant C_n from two h-tables; C_0 = 1.

    n > 0: 1 / (h(n-1)...h(0) * h~(n-1)...h~(0));
    n < 0: h(n)...h(-1) * h~(n)...h~(-1).
    """
    if n == 0:
        return Fraction(1)
    out = Fraction(1)
    if n > 0:
        idxs = range(0, n)
    else:
        idxs = range(n, 0)
    for table in (h, h_tilde):
        for k in idxs:
            if k not in table:
                raise KeyError(f"h-table does not cover {k}")
            out = out / table[k] if n > 0 else out * table[k]
    return out


def zero_pole_scan(r: RSpec, lo: int, hi: int) -> list[tuple[int, str]]:
    """All integer zeros and poles of r in [lo, hi], in increasing order."""
    if hi < lo:
        raise ValueError("hi must be >= lo")
    found = []
    for n in range(lo, hi + 1):
        den_zero = any(f.value(n, r.q) == 0 for f in r.den)
        num_zero = any(f.value(n, r.q) == 0 for f in r.num)
        if den_zero:
            found.append((n, "pole"))
        elif num_zero:
            found.append((n, "zero"))
    return found


# -- JSON wire format ----------------------------------------------------------


def factor_to_obj(f) -> dict:
    if isinstance(f, LinFactor):
        return {"lin": {"shift": format_rational(f.shift)}}
    if isinstance(f, QLinFactor):
        return {"qlin": {"coeff": format_rational(f.coeff), "shift": format_rational(f.shift)}}
    if isinstance(f, QPairFactor):
        return {"qpair": {"amp": format_rational(f.amp), "cos": format_rational(f.cosv)}}
    raise TypeError(f"unknown factor {f!r}")


def factor_from_obj(obj: dict):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(f"malformed factor object: {obj!r}")
    (kind, body), = obj.items()
    if kind == "lin":
        return LinFactor(parse_rational(body["shift"]))
    if kind == "qlin":
        return QLinFactor(parse_rational(body["coeff"]), parse_rational(body["shift"]))
    if kind == "qpair":
        return QPairFactor(parse_rational(body["amp"]), parse_rational(body["cos"]))
    raise ValueError(f"unknown factor kind {kind!r}")


def rspec_to_json(r: RSpec) -> str:
    obj: dict = {"constant": format_rational(r.constant)}
    if r.q is not None:
        obj["q"] = format_rational(r.q)
    obj["num"] = [factor_to_obj(f) for f in r.num]
    obj["den"] = [factor_to_obj(f) for f in r.den]
    return json.dumps(obj, separators=(",", ":"))


def rspec_from_json(text: str) -> RSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed rspec JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ValueError("rspec JSON must be an object")
    return RSpec(
        constant=parse_rational(obj.get("constant", "1")),
        num=tuple(factor_from_obj(f) for f in obj.get("num", [])),
        den=tuple(factor_from_obj(f) for f in obj.get("den", [])),
        q=parse_rational(obj["q"]) if "q" in obj else None,
    )

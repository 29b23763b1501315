"""Identity checkers: bilinear, lattice, ODE/q-difference, and determinant oracles.

Every checker compares exact rational coefficients inside an explicitly
derived validity window and returns a CheckReport.  The window bookkeeping
rests on the diagonal grading of the series: a tau truncated at grade d is
missing only monomials whose t-weight and b-weight both exceed d, so a
bilinear combination is uncorrupted at diagonal degrees <= d - 1 (each
side draws on tau coefficients at most one grade higher), and a purely
t-differentiated bilinear expression is uncorrupted wherever its b-weight
stays <= d.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import conjugate, enumerate_up_to
from .poly import (
    FAMILY_B,
    FAMILY_T,
    GradedPoly,
    bvar,
    derivative,
    exp_series,
    format_monomial,
    format_rational,
    hirota_D,
    inverse,
    log_series,
    mono_famdeg,
    mono_wdeg,
    tvar,
)
from .rspec import (
    LinFactor,
    QLinFactor,
    RSpec,
    content_product,
    h_from_r,
    r_eval,
    rspec_to_json,
    zero_pole_scan,
)
from .schur import GenericTimes, MiwaTimes, power_sums_basis, schur_poly
from .tau import pfq_one_var_coeffs, qphi_one_var_coeffs, tau_series

# -- reports ---------------------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    passed: bool
    max_checked_grade: int
    first_failure: tuple | None = None  # (where, lhs, rhs) as strings
    params: dict = field(default_factory=dict)

    def to_obj(self) -> dict:
        failure = None
        if self.first_failure is not None:
            where, lhs, rhs = self.first_failure
            failure = {"at": where, "lhs": lhs, "rhs": rhs}
        return {
            "name": self.name,
            "pass": self.passed,
            "grade": self.max_checked_grade,
            "failure": failure,
            "params": self.params,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"))


def compare_windowed(lhs: GradedPoly, rhs: GradedPoly, t_max: int, b_max: int):
    """First differing coefficient with t-weight <= t_max and b-weight <= b_max."""
    keys = set(lhs.terms) | set(rhs.terms)
    keys = [
        m
        for m in keys
        if mono_famdeg(m, FAMILY_T) <= t_max and mono_famdeg(m, FAMILY_B) <= b_max
    ]
    for m in sorted(keys, key=lambda m: (mono_wdeg(m), m)):
        cl, cr = lhs.coeff(m), rhs.coeff(m)
        if cl != cr:
            return format_monomial(m), format_rational(cl), format_rational(cr)
    return None


def _report(name, failure, grade, params) -> CheckReport:
    return CheckReport(
        name=name,
        passed=failure is None,
        max_checked_grade=grade,
        first_failure=failure,
        params=params,
    )


# -- bilinear and lattice checks ----------------------------------------------------


def _generic_tau(r: RSpec, m: int, d: int) -> GradedPoly:
    return tau_series(r, m, d, GenericTimes(FAMILY_T), GenericTimes(FAMILY_B))


def check_hirota(r: RSpec, m: int, d: int) -> CheckReport:
    """tau(M) d_b1 d_t1 tau(M) - d_t1 tau(M) d_b1 tau(M) = r(M) tau(M-1) tau(M+1)."""
    t1, b1 = tvar(1), bvar(1)
    tau_lo = _generic_tau(r, m - 1, d)
    tau_mid = _generic_tau(r, m, d)
    tau_hi = _generic_tau(r, m + 1, d)
    mixed = derivative(derivative(tau_mid, t1), b1)
    lhs = tau_mid * mixed - derivative(tau_mid, t1) * derivative(tau_mid, b1)
    rhs = (tau_lo * tau_hi).scale(r_eval(r, m))
    failure = compare_windowed(lhs, rhs, d - 1, d - 1)
    return _report(
        "hirota", failure, d - 1, {"rspec": rspec_to_json(r), "M": m, "d": d}
    )


def check_toda(r: RSpec, m: int, d: int, gauge: str = "generalized") -> CheckReport:
    """Lattice field equation at site M, in the generalized or standard gauge.

    The field comes from the tau-ratio: exp(-phi_n) = tau(n+1)/tau(n).  The
    standard gauge multiplies the exponential couplings by ratios of the
    h-table, which requires r to have no integer zeros in the touched range.
    """
    if gauge not in ("generalized", "standard"):
        raise ValueError(f"unknown gauge {gauge!r}")
    t1, b1 = tvar(1), bvar(1)
    taus = {n: _generic_tau(r, n, d) for n in range(m - 1, m + 3)}
    logs = {n: log_series(taus[n]) for n in taus}
    phi = {n: logs[n] - logs[n + 1] for n in range(m - 1, m + 2)}
    lhs = derivative(derivative(phi[m], t1), b1)
    hop_down = exp_series(phi[m - 1] - phi[m])
    hop_up = exp_series(phi[m] - phi[m + 1])
    if gauge == "generalized":
        rhs = hop_down.scale(r_eval(r, m)) - hop_up.scale(r_eval(r, m + 1))
    else:
        zeros = [n for n, kind in zero_pole_scan(r, m - 1, m + 1) if kind == "zero"]
        if zeros:
            raise ValueError(f"standard gauge needs r without integer zeros; found at {zeros}")
        h = h_from_r(r, m - 2, m + 1)
        lhs = -lhs
        rhs = hop_up.scale(h[m] / h[m + 1]) - hop_down.scale(h[m - 1] / h[m])
    failure = compare_windowed(lhs, rhs, d - 1, d - 1)
    return _report(
        "toda", failure, d - 1,
        {"rspec": rspec_to_json(r), "M": m, "d": d, "gauge": gauge},
    )


def check_kp_bilinear(r: RSpec, m: int, d: int) -> CheckReport:
    """(D_t1^4 + 3 D_t2^2 - 4 D_t1 D_t3) tau . tau = 0, b-variables spectators.

    Every monomial of the expression has t-weight = b-weight - 4, and the
    coefficients with b-weight <= d are exact, so the window filters on the
    b-weight alone.
    """
    tau = _generic_tau(r, m, d)
    expr = (
        hirota_D(tau, tau, [(tvar(1), 4)])
        + hirota_D(tau, tau, [(tvar(2), 2)]).scale(3)
        - hirota_D(tau, tau, [(tvar(1), 1), (tvar(3), 1)]).scale(4)
    )
    zero = GradedPoly.zero(expr.cap, expr.fam_caps)
    failure = compare_windowed(expr, zero, 2 * d, d)
    return _report(
        "kp", failure, d, {"rspec": rspec_to_json(r), "M": m, "d": d}
    )


# -- termwise series equations --------------------------------------------------------


def check_ode(a, b, order: int) -> CheckReport:
    """(d_x - r(x d_x)) F = 0 termwise: (k+1) c_{k+1} = r(k) c_k."""
    a = [Fraction(v) for v in a]
    b = [Fraction(v) for v in b]
    coeffs = pfq_one_var_coeffs(a, b, 0, order)
    rde = RSpec(
        num=tuple(LinFactor(v) for v in a),
        den=tuple(LinFactor(v) for v in b),
    )
    failure = None
    for k in range(order):
        lhs = (k + 1) * coeffs[k + 1]
        rhs = r_eval(rde, k) * coeffs[k]
        if lhs != rhs:
            failure = (f"x^{k}", format_rational(lhs), format_rational(rhs))
            break
    return _report(
        "ode", failure, order,
        {"a": [format_rational(v) for v in a], "b": [format_rational(v) for v in b], "order": order},
    )


def check_qdiff(a, b, q, order: int) -> CheckReport:
    """(x^{-1}(1 - q^{x d_x}) - r_q(x d_x)) Phi = 0 termwise."""
    q = Fraction(q)
    if q == 0 or abs(q) == 1:
        raise ValueError("q must be nonzero and not a root of unity")
    a = [Fraction(v) for v in a]
    b = [Fraction(v) for v in b]
    coeffs = qphi_one_var_coeffs(a, b, 0, q, order)
    rq = RSpec(
        num=tuple(QLinFactor(Fraction(1), v) for v in a),
        den=tuple(QLinFactor(Fraction(1), v) for v in b),
        q=q,
    )
    failure = None
    for k in range(order):
        lhs = coeffs[k + 1] * (1 - q ** (k + 1))
        rhs = r_eval(rq, k) * coeffs[k]
        if lhs != rhs:
            failure = (f"x^{k}", format_rational(lhs), format_rational(rhs))
            break
    return _report(
        "qdiff", failure, order,
        {
            "a": [format_rational(v) for v in a],
            "b": [format_rational(v) for v in b],
            "q": format_rational(q),
            "order": order,
        },
    )


# -- determinant oracle ----------------------------------------------------------------


@dataclass
class BandMatrix:
    """Square window of GradedPoly entries indexed by integers lo..hi."""

    lo: int
    hi: int
    charge: int
    entries: dict  # (j, k) -> GradedPoly

    def at(self, j: int, k: int, default=None):
        return self.entries.get((j, k), default)


def _mul_lifted(p: GradedPoly, q: GradedPoly, cap: int, fam_caps) -> GradedPoly:
    return GradedPoly(cap, p.terms, fam_caps) * GradedPoly(cap, q.terms, fam_caps)


def _window_block(r: RSpec, m: int, d: int, window: int) -> BandMatrix:
    """Non-positive-index block of U+(t) U-(M, beta) over the index window.

    U+ = exp(xi(t, shift)) has entries p_{k-j}(t); U- = exp(xi(beta,
    shift^{-1} r(diag + M))) has entries p_{j-k}(beta) r(k+M)...r(j-1+M).
    Both exponentials are finite sums because the truncated shifts are
    nilpotent; entry sums stop where the graded truncation kills them.
    """
    cap, fam_caps = 2 * d, (d, d)
    pt = power_sums_basis(d, FAMILY_T)
    pb = power_sums_basis(d, FAMILY_B)
    rval = {n: r_eval(r, n + m) for n in range(-window, d)}
    entries: dict = {}
    for j in range(-window, 1):
        for k in range(-window, 1):
            acc: dict = {}
            prod_r = Fraction(1)
            for i in range(k, max(j, k)):
                prod_r *= rval[i]
            for l in range(max(j, k), min(j, k) + d + 1):
                if l > d:
                    break
                if l > max(j, k):
                    prod_r *= rval[l - 1]
                if prod_r == 0:
                    continue
                piece = _mul_lifted(pt[l - j], pb[l - k], cap, fam_caps)
                for mono_, c in piece.terms.items():
                    acc[mono_] = acc.get(mono_, 0) + prod_r * c
            entries[(j, k)] = GradedPoly(cap, acc, fam_caps)
    return BandMatrix(lo=-window, hi=0, charge=m, entries=entries)


def _unit_gauss_det(block: BandMatrix, lo: int | None = None) -> GradedPoly:
    """Determinant by Gaussian elimination with unit pivots.

    The block is the identity plus terms of positive grade, so every pivot
    has a nonzero constant term and an exact series inverse.  A larger
    window may be sliced down via lo (the block entries do not depend on
    the window, only its extent does).
    """
    idx = list(range(block.lo if lo is None else lo, block.hi + 1))
    n = len(idx)
    a = [[block.at(j, k) for k in idx] for j in idx]
    det = None
    for col in range(n):
        piv = a[col][col]
        if piv.constant_term() == 0:
            raise ArithmeticError("non-unit pivot in triangular factorization")
        det = piv if det is None else det * piv
        inv = inverse(piv)
        for row in range(col + 1, n):
            if a[row][col].is_zero():
                continue
            factor = a[row][col] * inv
            a[row] = [
                a[row][c] - factor * a[col][c] if c > col else a[row][c]
                for c in range(n)
            ]
    return det


def det_oracle_tau(r: RSpec, m: int, d: int, window: int | None = None, extra_windows=(1,)):
    """Tau as the determinant of the non-positive block of triangular exponentials.

    Returns (determinant, CheckReport); the report records the coefficient
    match against the series route and the stabilization of the
    determinant across windows window + w for w in extra_windows.
    """
    if window is None:
        window = d
    if window < d:
        raise ValueError("window must be >= d")
    widest = window + max(extra_windows, default=0)
    block = _window_block(r, m, d, widest)
    det_w = _unit_gauss_det(block, lo=-window)
    stable_failure = None
    for extra in extra_windows:
        det_other = _unit_gauss_det(block, lo=-(window + extra))
        stable_failure = stable_failure or compare_windowed(det_w, det_other, d, d)
    tau = _generic_tau(r, m, d)
    failure = compare_windowed(det_w, tau, d, d)
    params = {
        "rspec": rspec_to_json(r),
        "M": m,
        "d": d,
        "window": window,
        "stable": stable_failure is None,
    }
    report = _report("oracle", failure or stable_failure, d, params)
    return det_w, report


# -- truncation checks -------------------------------------------------------------------


def check_remark1(mode: str, params: dict, d: int) -> CheckReport:
    """Length restrictions of the series: content zeros versus Schur vanishing.

    q-spec: a factor (1 - q^{N+D}) kills r_lam(0) exactly when l(lam) > N;
    miwa:   s_lam of N variables vanishes exactly when l(lam) > N;
    dual:   the conjugate statements via (1 - q^{-K+D}) and the negated
            Miwa substitution on K variables.
    """
    failure = None
    parts = enumerate_up_to(d)
    if mode == "q-spec":
        n_cut, q = int(params["N"]), Fraction(params["q"])
        spec = RSpec(num=(QLinFactor(Fraction(1), Fraction(n_cut)),), q=q)
        for lam in parts:
            value = content_product(spec, lam, 0)
            should_vanish = len(lam) > n_cut
            if (value == 0) != should_vanish:
                failure = (str(list(lam)), format_rational(value), "0" if should_vanish else "nonzero")
                break
        echo = {"mode": mode, "N": n_cut, "q": format_rational(q), "d": d}
    elif mode == "miwa":
        n_cut = int(params["N"])
        xs = params.get("x") or tuple(Fraction(1, i + 2) for i in range(n_cut))
        times = MiwaTimes(tuple(Fraction(v) for v in xs))
        for lam in parts:
            value = schur_poly(lam, times, d)
            should_vanish = len(lam) > n_cut
            if (value == 0) != should_vanish:
                failure = (str(list(lam)), format_rational(value), "0" if should_vanish else "nonzero")
                break
        echo = {"mode": mode, "N": n_cut, "d": d}
    elif mode == "dual":
        k_cut, q = int(params["K"]), Fraction(params["q"])
        spec = RSpec(num=(QLinFactor(Fraction(1), Fraction(-k_cut)),), q=q)
        xs = params.get("x") or tuple(Fraction(1, i + 2) for i in range(k_cut))
        times = MiwaTimes(tuple(Fraction(v) for v in xs), sign=-1)
        for lam in parts:
            should_vanish = len(conjugate(lam)) > k_cut
            value = content_product(spec, lam, 0)
            if (value == 0) != should_vanish:
                failure = (str(list(lam)), format_rational(value), "0" if should_vanish else "nonzero")
                break
            sval = schur_poly(lam, times, d)
            if (sval == 0) != should_vanish:
                failure = (str(list(lam)), format_rational(sval), "0" if should_vanish else "nonzero")
                break
        echo = {"mode": mode, "K": k_cut, "q": format_rational(q), "d": d}
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _report("remark1", failure, d, echo)

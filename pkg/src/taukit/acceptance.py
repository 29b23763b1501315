"""The acceptance battery: one function per criterion, exact equality throughout.

Shared by the ``taukit suite`` CLI subcommand and the acceptance test
module.  Randomized draws come from a seeded generator (TAUKIT_SEED);
every drawn spec is scanned for integer poles in its working range before
use, and q-parameters are paired with exponents so that every power of q
stays an exact rational.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from .partitions import enumerate_up_to, hook_data
from .poly import FAMILY_B, FAMILY_T, mono, tvar
from .rspec import (
    LinFactor,
    QLinFactor,
    RSpec,
    content_product,
    poch_partition,
    rspec_mul,
    zero_pole_scan,
)
from .schur import (
    GenericTimes,
    MiwaTimes,
    NumericTimes,
    PrincipalTimes,
    schur_poly,
    schur_principal_value,
)
from .tau import (
    ChainSpec,
    askey_wilson,
    classical_reference,
    compare_abs_distance,
    pfs_multivar,
    prop4_pair,
    q_bracket,
    qphi_one_var_coeffs,
    tau_general,
    tau_series,
    tau_two_sided,
)
from .verify import (
    CheckReport,
    check_hirota,
    check_kp_bilinear,
    check_ode,
    check_qdiff,
    check_remark1,
    check_toda,
    det_oracle_tau,
)

F = Fraction

_NONINT_POOL = [F(1, 2), F(1, 3), F(2, 3), F(1, 5), F(2, 5), F(3, 5), F(1, 7), F(2, 7), F(5, 7)]
_QCOEFF_POOL = [F(2, 3), F(3, 5), F(5, 7), F(4, 9), F(7, 9), F(3, 7), F(5, 9)]


def draw_lin_rspec(rng: random.Random, max_factors: int = 2) -> RSpec:
    """Rational-in-D symbol with non-integer shifts (no integer zeros or poles)."""
    def factors(count):
        return tuple(
            LinFactor(rng.choice(_NONINT_POOL) + rng.choice((-1, 0, 1, 2)))
            for _ in range(count)
        )

    num = factors(rng.randint(0, max_factors))
    den = factors(rng.randint(0, max_factors))
    return RSpec(constant=rng.choice((F(1), F(2), F(1, 2))), num=num, den=den)


def draw_qlin_rspec(rng: random.Random, q: Fraction, span: int, max_factors: int = 2) -> RSpec:
    """q-rational symbol with integer shifts, pole- and zero-free on [-span, span]."""
    for _ in range(200):
        def factors(count):
            return tuple(
                QLinFactor(rng.choice(_QCOEFF_POOL), F(rng.choice((-1, 0, 1, 2))))
                for _ in range(count)
            )

        spec = RSpec(
            constant=F(1),
            num=factors(rng.randint(1, max_factors)),
            den=factors(rng.randint(0, max_factors)),
            q=q,
        )
        if not zero_pole_scan(spec, -span, span):
            return spec
    raise RuntimeError("could not draw a clean q-spec")


def _pass(name: str, params: dict) -> CheckReport:
    return CheckReport(name=name, passed=True, max_checked_grade=0, params=params)


def _fail(name: str, why: str, params: dict) -> CheckReport:
    return CheckReport(
        name=name, passed=False, max_checked_grade=0,
        first_failure=(why, "", ""), params=params,
    )


_BATTERY_CACHE: dict[int, tuple] = {}


def battery_specs(seed: int) -> tuple:
    """Five rational draws plus one q-rational draw per listed q value.

    Keyed by the suite seed so the bilinear and lattice criteria exercise
    the identical battery.
    """
    if seed not in _BATTERY_CACHE:
        rng = random.Random(f"{seed}/battery")
        specs = [draw_lin_rspec(rng) for _ in range(5)]
        for q in (F(1, 2), F(1, 3), F(2, 5)):
            specs.append(draw_qlin_rspec(rng, q, span=9))
        _BATTERY_CACHE[seed] = tuple(specs)
    return _BATTERY_CACHE[seed]


def criterion_01_oracle(seed: int) -> CheckReport:
    d = 6
    specs = [
        RSpec(),
        RSpec(num=(LinFactor(F(1, 2)),), den=(LinFactor(F(1, 3)),)),
        RSpec(num=(QLinFactor(F(2, 3), F(0)),), den=(QLinFactor(F(3, 5), F(1)),), q=F(1, 2)),
    ]
    started = time.monotonic()
    for spec in specs:
        for m in (-1, 0, 1, 2):
            _, report = det_oracle_tau(spec, m, d, window=d, extra_windows=(1, 2))
            if not report.passed:
                return report
    elapsed = time.monotonic() - started
    report = _pass("criterion-01-oracle", {"d": d, "elapsed_s": round(elapsed, 2)})
    report.passed = elapsed < 60
    if not report.passed:
        report.first_failure = (f"elapsed {elapsed:.1f}s", "<60s", "runtime")
    report.max_checked_grade = d
    return report


def criterion_02_hirota(seed: int) -> CheckReport:
    d = 5
    for spec in battery_specs(seed):
        for m in (-1, 0, 1):
            report = check_hirota(spec, m, d)
            if not report.passed:
                return report
    return _pass("criterion-02-hirota", {"d": d, "specs": 8, "charges": [-1, 0, 1]})


def criterion_03_toda(seed: int) -> CheckReport:
    d = 5
    for spec in battery_specs(seed):
        zero_free = not any(
            kind == "zero" for _, kind in zero_pole_scan(spec, -3, 3)
        )
        for m in (-1, 0, 1):
            report = check_toda(spec, m, d, "generalized")
            if not report.passed:
                return report
            if zero_free:
                report = check_toda(spec, m, d, "standard")
                if not report.passed:
                    return report
    return _pass("criterion-03-toda", {"d": d, "specs": 8})


def criterion_04_kp(seed: int) -> CheckReport:
    rng = random.Random(f"{seed}/kp")
    d = 5
    specs = [RSpec(), draw_lin_rspec(rng), draw_qlin_rspec(rng, F(1, 2), span=8)]
    for spec in specs:
        report = check_kp_bilinear(spec, rng.choice((-1, 0, 1)), d)
        if not report.passed:
            return report
    return _pass("criterion-04-kp", {"d": d, "specs": len(specs)})


def criterion_05_classical_reduction(seed: int) -> CheckReport:
    rng = random.Random(f"{seed}/classical")
    order = 10
    for p, s in ((1, 0), (2, 1), (3, 2)):
        extra_a = [rng.choice(_NONINT_POOL) + rng.choice((0, 1)) for _ in range(p - 1)]
        bs = [rng.choice(_NONINT_POOL) + rng.choice((0, 1)) for _ in range(s)]
        a = [F(0)] + extra_a
        for m, sign in ((1, 1), (-1, -1)):
            series = pfs_multivar(a, bs, m, GenericTimes(FAMILY_T), order)
            if m == 1:
                ref = classical_reference([v + 1 for v in extra_a], [v + 1 for v in bs], order)
            else:
                ref = classical_reference([1 - v for v in extra_a], [1 - v for v in bs], order)
            for n in range(order + 1):
                got = series.coeff(mono([(tvar(1), n)]))
                want = ref[n] * sign**n
                if got != want:
                    return _fail(
                        "criterion-05-classical",
                        f"(p,s)=({p},{s}) M={m} coefficient {n}: {got} != {want}",
                        {"order": order},
                    )
    return _pass("criterion-05-classical", {"order": order, "families": "(1,0),(2,1),(3,2)"})


def criterion_06_qdiff(seed: int) -> CheckReport:
    rng = random.Random(f"{seed}/qdiff")
    order, q = 10, F(1, 3)
    for _ in range(3):
        p, s = rng.randint(1, 2), rng.randint(1, 2)
        a = [F(rng.randint(1, 4)) for _ in range(p)]
        b = [F(rng.randint(1, 4)) for _ in range(s)]
        report = check_qdiff(a, b, q, order)
        if not report.passed:
            return report
    return _pass("criterion-06-qdiff", {"order": order, "q": "1/3", "draws": 3})


def criterion_07_ode(seed: int) -> CheckReport:
    rng = random.Random(f"{seed}/ode")
    order = 10
    for _ in range(3):
        a = [rng.choice(_NONINT_POOL), rng.choice(_NONINT_POOL) + 1]
        b = [rng.choice(_NONINT_POOL)]
        report = check_ode(a, b, order)  # 2F1 shape
        if not report.passed:
            return report
        report = check_ode(a[:1], b, order)  # 1F1 shape
        if not report.passed:
            return report
    return _pass("criterion-07-ode", {"order": order, "draws": 3})


def criterion_08_prop4(seed: int) -> CheckReport:
    rng = random.Random(f"{seed}/prop4")
    d = 5
    for _ in range(3):
        r = draw_lin_rspec(rng)
        b = rng.choice(_NONINT_POOL)
        m = rng.choice((-1, 0, 1))
        left, right = prop4_pair(r, b, m, d, GenericTimes(FAMILY_T))
        if left != right:
            return _fail("criterion-08-prop4", f"rational variant M={m} b={b}", {"d": d})
    q_draws = [(F(1, 4), F(1, 2)), (F(1, 8), F(2, 3)), (F(4, 9), F(3, 2))]
    for q, b in q_draws:
        r = draw_qlin_rspec(rng, q, span=9)
        m = rng.choice((-1, 0, 1))
        left, right = prop4_pair(r, b, m, d, GenericTimes(FAMILY_T))
        if left != right:
            return _fail("criterion-08-prop4", f"q variant q={q} b={b} M={m}", {"d": d})
    return _pass("criterion-08-prop4", {"d": d, "draws": "3 rational + 3 q"})


def criterion_09_remark1(seed: int) -> CheckReport:
    d = 7
    for n in (1, 2, 3):
        for mode, params in (
            ("q-spec", {"N": n, "q": F(1, 2)}),
            ("miwa", {"N": n}),
            ("dual", {"K": n, "q": F(1, 2)}),
        ):
            report = check_remark1(mode, params, d)
            if not report.passed:
                return report
    return _pass("criterion-09-remark1", {"d": d, "N_K": [1, 2, 3]})


def criterion_10_poch_bridge(seed: int) -> CheckReport:
    d = 6
    parts = enumerate_up_to(d)
    for q in (F(1, 2), F(2, 3)):
        for a in (F(1), F(2), F(3), F(-1)):
            spec = RSpec(num=(QLinFactor(F(1), a),), q=q)
            for lam in parts:
                lhs = poch_partition(a, lam, q)
                rhs = content_product(spec, lam, 0)
                if lhs != rhs:
                    return _fail(
                        "criterion-10-poch-bridge",
                        f"poch != content at lam={lam}, a={a}, q={q}",
                        {"d": d},
                    )
        for a in (F(1), F(2), F(3)):
            for lam in parts:
                via_times = schur_poly(lam, PrincipalTimes(a, q), d)
                closed = schur_principal_value(lam, a, q)
                if via_times != closed:
                    return _fail(
                        "criterion-10-poch-bridge",
                        f"principal identity fails at lam={lam}, a={a}, q={q}",
                        {"d": d},
                    )
    return _pass("criterion-10-poch-bridge", {"d": d, "q": ["1/2", "2/3"]})


def criterion_11_example6(seed: int) -> CheckReport:
    d = 5
    at, bt = F(1, 2), F(5, 7)  # tilde-side parameters
    a1, b1 = F(1, 3), F(4, 3)
    x, y1, y2 = F(1, 2), F(1, 3), F(2, 5)
    m = 1
    chain = ChainSpec(
        left=((RSpec(num=(LinFactor(at),), den=(LinFactor(bt),)), MiwaTimes((x,))),),
        right=(
            (RSpec(num=(LinFactor(a1),), den=(LinFactor(b1),)), NumericTimes((y1,))),
            (RSpec(), NumericTimes((y2,))),
        ),
    )
    got = tau_general(chain, m, d)
    want = F(0)
    for n1 in range(d + 1):
        for n2 in range(d + 1 - n1):
            n = n1 + n2
            num = poch_partition(at + m, (n,)) if n else F(1)
            num *= poch_partition(a1 + m, (n1,)) if n1 else F(1)
            den = poch_partition(bt + m, (n,)) if n else F(1)
            den *= poch_partition(b1 + m, (n1,)) if n1 else F(1)
            fact1 = hook_data((n1,) if n1 else ()).product
            fact2 = hook_data((n2,) if n2 else ()).product
            want += num / den * y1**n1 * y2**n2 * x**n / (fact1 * fact2)
    if got != want:
        return _fail("criterion-11-example6", f"{got} != {want}", {"d": d})
    return _pass("criterion-11-example6", {"d": d, "M": m})


def criterion_12_askey_wilson(seed: int) -> CheckReport:
    q, a, b, c, dd, cosv = F(1, 3), F(1, 5), F(1, 7), F(2, 7), F(1, 11), F(1, 2)
    for n in range(6):
        # termination: the next term would carry the vanishing factor
        if poch_partition(F(-n), (n + 1,), q) != 0:
            return _fail("criterion-12-aw", f"termination factor nonzero at n={n}", {})
    for n in (1, 2, 3, 5):
        base = askey_wilson(n, a, b, c, dd, q, cosv)
        if askey_wilson(n, a, c, b, dd, q, cosv) != base:
            return _fail("criterion-12-aw", f"b<->c changes the sum at n={n}", {})
        if askey_wilson(n, a, dd, c, b, q, cosv) != base:
            return _fail("criterion-12-aw", f"b<->d changes the sum at n={n}", {})
        pn = askey_wilson(n, a, b, c, dd, q, cosv, with_prefactor=True)
        pn_swapped = askey_wilson(n, b, a, c, dd, q, cosv, with_prefactor=True)
        if pn != pn_swapped:
            return _fail("criterion-12-aw", f"a<->b changes p_n at n={n}", {})
    return _pass("criterion-12-aw", {"q": "1/3", "point": "a=1/5,b=1/7,c=2/7,d=1/11"})


def criterion_13_two_sided(seed: int) -> CheckReport:
    rng = random.Random(f"{seed}/two-sided")
    d = 5
    for _ in range(3):
        rt, r = draw_lin_rspec(rng), draw_lin_rspec(rng)
        m = rng.choice((-1, 0, 1))
        lhs = tau_two_sided(rt, r, m, d, GenericTimes(FAMILY_T), GenericTimes(FAMILY_B))
        rhs = tau_series(rspec_mul(rt, r), m, d, GenericTimes(FAMILY_T), GenericTimes(FAMILY_B))
        if lhs != rhs:
            return _fail("criterion-13-two-sided", f"mismatch at M={m}", {"d": d})
    return _pass("criterion-13-two-sided", {"d": d, "draws": 3})


def criterion_14_clebsch_gordan(seed: int) -> CheckReport:
    q = F(1, 2)
    tuples = [
        (F(1), F(1), F(1), F(0), F(0)),
        (F(3, 2), F(1), F(1, 2), F(1, 2), F(0)),
        (F(2), F(3, 2), F(3, 2), F(0), F(1, 2)),
    ]
    for l1, l2, l, j, k in tuples:
        m = j + k
        a = (j - l1, l1 + j + 1, -l + m)
        b = (l2 - l + j + 1, -l - l2 + j)
        order = int(l1 - j)
        via_machinery = qphi_one_var_coeffs(a, b, 0, q, order)
        via_recursion = classical_reference(a, b, order, q=q)
        if via_machinery != via_recursion:
            return _fail(
                "criterion-14-cg",
                f"series factor mismatch for spins ({l1},{l2},{l},{j},{k})",
                {"q": "1/2"},
            )
    for a_val in (2, 3):
        values = [q_bracket(a_val, 1 - F(1, 2**k)) for k in range(1, 11)]
        for i in range(len(values) - 1):
            if compare_abs_distance(values[i + 1], a_val, values[i]) >= 0:
                return _fail(
                    "criterion-14-cg",
                    f"bracket [{a_val}] not monotone at step {i + 1}",
                    {},
                )
    return _pass("criterion-14-cg", {"q": "1/2", "tuples": 3, "bracket_steps": 10})


CRITERIA = [
    criterion_01_oracle,
    criterion_02_hirota,
    criterion_03_toda,
    criterion_04_kp,
    criterion_05_classical_reduction,
    criterion_06_qdiff,
    criterion_07_ode,
    criterion_08_prop4,
    criterion_09_remark1,
    criterion_10_poch_bridge,
    criterion_11_example6,
    criterion_12_askey_wilson,
    criterion_13_two_sided,
    criterion_14_clebsch_gordan,
]


def run_criterion(criterion, seed: int = 1729) -> CheckReport:
    try:
        return criterion(seed)
    except Exception as exc:  # a crash is a failure, not an abort
        return _fail(criterion.__name__, f"{type(exc).__name__}: {exc}", {})


def run_suite(seed: int = 1729, verbose: bool = False) -> list[CheckReport]:
    reports = []
    for index, criterion in enumerate(CRITERIA, start=1):
        report = run_criterion(criterion, seed)
        if not report.name.startswith("criterion"):
            report.name = f"criterion-{index:02d}-{report.name}"
        reports.append(report)
        if verbose:
            status = "PASS" if report.passed else "FAIL"
            detail = "" if report.passed else f"  ({report.first_failure})"
            print(f"{status} {report.name}{detail}")
    return reports

"""taukit: exact-arithmetic hypergeometric tau-series toolkit.

Truncated Schur-function series with exact rational coefficients, content
products of diagonal operator symbols, classical and basic hypergeometric
specializations, and coefficient-exact checkers for the bilinear and
lattice identities these series satisfy.
"""

from .partitions import (
    HookData,
    SkewShape,
    conjugate,
    contains,
    enumerate_up_to,
    frobenius,
    from_frobenius,
    hook_data,
    n_statistic,
    skew_cells,
)
from .poly import (
    GradedPoly,
    Scalar,
    Var,
    arith,
    bvar,
    coeff,
    derivative,
    exp_log,
    exp_series,
    format_monomial,
    format_rational,
    hirota_D,
    inverse,
    log_series,
    mono,
    parse_rational,
    tvar,
)
from .rspec import (
    LinFactor,
    PoleError,
    QLinFactor,
    QPairFactor,
    RSpec,
    c_constants,
    content_product,
    h_from_r,
    poch_partition,
    r_eval,
    rspec_from_json,
    rspec_mul,
    rspec_shift,
    rspec_to_json,
    skew_content_product,
    zero_pole_scan,
)
from .schur import (
    GenericTimes,
    MiwaTimes,
    NumericTimes,
    PrincipalInfinityTimes,
    PrincipalTimes,
    miwa_times,
    power_sums_basis,
    principal_times,
    schur_poly,
    schur_principal_value,
    skew_schur_poly,
)
from .tau import (
    ChainSpec,
    SqrtValue,
    TauExpansion,
    askey_wilson,
    askey_wilson_rspec,
    classical_reference,
    clebsch_gordan_q,
    compare_abs_distance,
    pfq_one_var_coeffs,
    pfs_multivar,
    prop4_pair,
    q_bracket,
    q_bracket_factorial,
    qphi_multivar,
    qphi_one_var_coeffs,
    tau_general,
    tau_series,
    tau_two_sided,
)
from .verify import (
    BandMatrix,
    CheckReport,
    check_hirota,
    check_kp_bilinear,
    check_ode,
    check_qdiff,
    check_remark1,
    check_toda,
    compare_windowed,
    det_oracle_tau,
)

__version__ = "0.1.0"

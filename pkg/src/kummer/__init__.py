"""Confluent hypergeometric series, Frobenius solutions of the reduced Kummer
equation, and machine checks of Kummer's second transformation and its two
contiguous companions."""
from .closed_forms import (
    Certification,
    ClosedFormFamily,
    Family,
    assemble_y1,
    assemble_y2,
    certify_family,
    closed_coeff,
)
from .errors import (
    DomainError,
    ExcludedParameter,
    KummerError,
    NoConvergence,
    PoleParameter,
    ResonantDenominator,
    ResonantParameter,
)
from .frobenius import (
    FrobeniusSolution,
    IndicialRoots,
    ODESpec,
    frobenius_basis,
    indicial_roots,
    ode_residual,
    recurrence_step,
    reduce_kummer,
    solve_frobenius,
)
from .identities import (
    ConnectionConstants,
    IdentityId,
    IdentityReport,
    connection_constants,
    lhs_series_exact,
    lhs_spec,
    rhs_spec,
    verify_identity,
)
from .series import (
    ArgumentMap,
    Combination,
    EvalResult,
    HypergeometricSpec,
    Prefactor,
    eval_0f1,
    eval_1f1,
    eval_spec,
    pochhammer,
)

__version__ = "0.1.0"

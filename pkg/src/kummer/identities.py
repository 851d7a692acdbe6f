"""Numerical and exact-series checks of Kummer's second transformation

    e^{-z} 1F1(a; 2a; 2z)   = 0F1(-; a+1/2; z^2/4)

and its two contiguous companions (lower parameter 2a+1 and 2a-1).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .closed_forms import assemble_y1
from .errors import ExcludedParameter, ResonantParameter
from .frobenius import indicial_roots, reduce_kummer, solve_frobenius
from .series import (
    ArgumentMap,
    Combination,
    HypergeometricSpec,
    Prefactor,
    eval_spec,
    is_exact,
    near_nonpositive_integer,
    to_fraction,
)


class IdentityId(str, enum.Enum):
    KUMMER2 = "kummer2"
    CONTIG_PLUS = "contig-plus"
    CONTIG_MINUS = "contig-minus"

    @property
    def offset(self) -> int:
        return {"kummer2": 0, "contig-plus": 1, "contig-minus": -1}[self.value]


def check_hypothesis(identity: IdentityId, a) -> None:
    """Raise ExcludedParameter unless ``2a + offset`` avoids 0, -1, -2, ..."""
    identity = IdentityId(identity)
    lower = 2 * a + identity.offset
    if near_nonpositive_integer(lower):
        raise ExcludedParameter(
            a, f"{identity.value}: lower parameter {lower} is zero or a negative integer"
        )


def lhs_spec(identity: IdentityId, a) -> HypergeometricSpec:
    identity = IdentityId(identity)
    check_hypothesis(identity, a)
    if is_exact(a):
        a = Fraction(a)
    return HypergeometricSpec(
        (a,), (2 * a + identity.offset,), ArgumentMap.DOUBLE, Prefactor.EXP_NEG
    )


def rhs_spec(identity: IdentityId, a) -> Combination:
    identity = IdentityId(identity)
    check_hypothesis(identity, a)
    return assemble_y1(identity.offset, a)


@dataclass(frozen=True)
class PointResult:
    a: object
    z: object
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    terms_used: int
    passed: bool


@dataclass(frozen=True)
class IdentityReport:
    identity: IdentityId
    tol: float
    points: tuple = field(default_factory=tuple)

    @property
    def grid(self) -> List[tuple]:
        return [(p.a, p.z) for p in self.points]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.points)

    @property
    def max_residual(self) -> float:
        return max((p.rel_residual for p in self.points), default=0.0)


def _point(identity, a, z, tol, exact) -> PointResult:
    inner = tol / 10
    left = eval_spec(lhs_spec(identity, a), z, inner, exact)
    right = rhs_spec(identity, a).evaluate(z, inner, exact)
    diff = abs(left.value - right.value)
    scale = abs(right.value)
    rel = diff / scale if scale > 0 else math.inf
    ok = rel <= tol or (scale < 1 and diff <= tol)
    return PointResult(
        a, z, left.value, right.value, diff, rel,
        left.terms_used + right.terms_used, ok,
    )


def verify_identity(identity, a_grid, z_grid, tol: float = 1e-10, exact: bool = False) -> IdentityReport:
    """Evaluate both sides on the product grid ``a_grid x z_grid``.

    Each side is summed to ``tol / 10``.  A point passes when the relative
    residual is within ``tol``, or, where ``|rhs| < 1``, the absolute one is.
    """
    identity = IdentityId(identity)
    if not tol > 0:
        raise ValueError("tol must be positive")
    a_grid = list(a_grid)
    for a in a_grid:
        check_hypothesis(identity, a)
    points = tuple(_point(identity, a, z, tol, exact) for a in a_grid for z in z_grid)
    return IdentityReport(identity, tol, points)


def lhs_series_exact(identity, a, N: int) -> list:
    """Exact Maclaurin coefficients of ``e^{-z} 1F1(a; 2a+offset; 2z)`` up to z^N."""
    identity = IdentityId(identity)
    check_hypothesis(identity, a)
    a = to_fraction(a)
    b = 2 * a + identity.offset
    exp_neg = [Fraction((-1) ** k, math.factorial(k)) for k in range(N + 1)]
    kummer = [Fraction(1)]
    for n in range(N):
        kummer.append(kummer[-1] * (a + n) * 2 / ((b + n) * (n + 1)))
    return [
        sum(exp_neg[k] * kummer[n - k] for k in range(n + 1)) for n in range(N + 1)
    ]


@dataclass(frozen=True)
class ConnectionConstants:
    A: Fraction
    B: Fraction
    method: str
    N: int
    consistent: bool
    mismatch_exponent: Optional[Fraction] = None


def connection_constants(identity, a, N: int = 16) -> ConnectionConstants:
    """Write the left side as ``A y1 + B y2`` by matching power series.

    ``y1`` carries the exponents ``0, 1, 2, ...`` and ``y2`` the exponents
    ``lam2, lam2 + 1, ...`` with ``lam2`` non-integral, so the two sets are
    disjoint.  The left side has only integer exponents; its ``z^lam2``
    coefficient is zero, which forces ``B``, and its ``z^0`` coefficient
    fixes ``A``.  The remaining coefficients are then compared.
    """
    identity = IdentityId(identity)
    check_hypothesis(identity, a)
    a = to_fraction(a)
    ode = reduce_kummer(a, identity.offset)
    roots = indicial_roots(ode)
    if roots.integer_gap is not None:
        raise ResonantParameter(
            f"indicial exponents {roots.root_zero}, {roots.root_other} differ by "
            f"an integer at a={a}; connection matching is not attempted"
        )
    lam2 = roots.root_other
    y1 = solve_frobenius(ode, 0, N, 1)
    y2 = solve_frobenius(ode, lam2, N, 1)

    lhs = {Fraction(n): c for n, c in enumerate(lhs_series_exact(identity, a, N))}
    basis1 = {Fraction(n): c for n, c in enumerate(y1.coeffs)}
    basis2 = {lam2 + n: c for n, c in enumerate(y2.coeffs)}

    B = lhs.get(lam2, Fraction(0)) / basis2[lam2]
    A = (lhs[Fraction(0)] - B * basis2.get(Fraction(0), 0)) / basis1[Fraction(0)]

    mismatch = None
    exponents = sorted(set(lhs) | set(basis1) | set(basis2))
    for e in exponents:
        if e > N:
            break
        fitted = A * basis1.get(e, 0) + B * basis2.get(e, 0)
        if lhs.get(e, 0) != fitted:
            mismatch = e
            break
    return ConnectionConstants(A, B, "series-matching", N, mismatch is None, mismatch)


def certify_identity_series(identity, a, N: int = 64) -> Optional[int]:
    """First index where the left-side series departs from the analytic
    Frobenius solution of the reduced equation, or None if they agree."""
    identity = IdentityId(identity)
    lhs = lhs_series_exact(identity, a, N)
    sol = solve_frobenius(reduce_kummer(to_fraction(a), identity.offset), 0, N, 1)
    for n, (l, c) in enumerate(zip(lhs, sol.coeffs)):
        if l != c:
            return n
    if sol.log_case:
        return sol.N + 1
    return None


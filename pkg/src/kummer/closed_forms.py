"""Closed-form Frobenius coefficients and the solutions they assemble into.

Every family has the same shape: with ``m = n // 2``

    c_{2m}   = 4^{-m} c0 / (m! (p_even)_m)
    c_{2m+1} = 4^{-m} c1 / (m! (p_odd)_m)

so the Frobenius series ``z^lam sum c_n z^n`` equals

    z^lam [ c0 0F1(-; p_even; z^2/4) + c1 z 0F1(-; p_odd; z^2/4) ].

``certify_family`` compares these formulas against the recurrence in
:mod:`kummer.frobenius` in exact arithmetic.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import ExcludedParameter, ResonantDenominator
from .frobenius import reduce_kummer, solve_frobenius
from .series import (
    EPS_POLE,
    ArgumentMap,
    Combination,
    HypergeometricSpec,
    Prefactor,
    is_exact,
    near_nonpositive_integer,
    pochhammer,
)

HALF = Fraction(1, 2)


def _near_integer(x):
    """The integer ``x`` equals (exactly, or within guard distance), else None."""
    if is_exact(x):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else None
    nearest = round(x)
    return nearest if abs(x - nearest) < EPS_POLE else None


def _positive_integer(x, start: int) -> bool:
    k = _near_integer(x)
    return k is not None and k >= start


def _odd_integer(x) -> bool:
    k = _near_integer(x)
    return k is not None and k % 2 == 1


class Family(str, enum.Enum):
    K2_EVEN = "K2-even"
    K2_ODD_EXPONENT = "K2-odd-exponent"
    P1_LAMBDA_0 = "P1-λ0"
    P1_LAMBDA_MINUS_2A = "P1-λ−2a"
    M1_LAMBDA_0 = "M1-λ0"
    M1_LAMBDA_2_MINUS_2A = "M1-λ2−2a"

    @classmethod
    def parse(cls, name: str) -> "Family":
        key = name.strip()
        for fam in cls:
            if key in (fam.value, fam.name, fam.ascii):
                return fam
        raise ValueError(f"unknown family {name!r}")

    @property
    def ascii(self) -> str:
        return self.value.replace("λ", "lambda").replace("−", "-")

    @property
    def offset(self) -> int:
        return {"K2": 0, "P1": 1, "M1": -1}[self.value[:2]]

    @property
    def analytic(self) -> bool:
        return self in (Family.K2_EVEN, Family.P1_LAMBDA_0, Family.M1_LAMBDA_0)


# lam(a), p_even(a), p_odd(a) or None, c1/c0 as a function of a
_TABLE = {
    Family.K2_EVEN: (
        lambda a: 0, lambda a: a + HALF, None, lambda a: 0),
    Family.K2_ODD_EXPONENT: (
        lambda a: 1 - 2 * a, lambda a: 3 * HALF - a, None, lambda a: 0),
    Family.P1_LAMBDA_0: (
        lambda a: 0, lambda a: a + HALF, lambda a: a + 3 * HALF,
        lambda a: -1 / (2 * a + 1)),
    Family.P1_LAMBDA_MINUS_2A: (
        lambda a: -2 * a, lambda a: HALF - a, lambda a: 3 * HALF - a,
        lambda a: 1 / (2 * a - 1)),
    Family.M1_LAMBDA_0: (
        lambda a: 0, lambda a: a - HALF, lambda a: a + HALF,
        lambda a: 1 / (2 * a - 1)),
    Family.M1_LAMBDA_2_MINUS_2A: (
        lambda a: 2 - 2 * a, lambda a: 3 * HALF - a, lambda a: 5 * HALF - a,
        lambda a: 1 / (3 - 2 * a)),
}


def excluded_reason(family: Family, a) -> Optional[str]:
    """Why ``a`` is outside the family's parameter range, or None."""
    two_a = 2 * a
    if family is Family.K2_EVEN and near_nonpositive_integer(two_a):
        return "2a is zero or a negative integer"
    if family is Family.K2_ODD_EXPONENT and _odd_integer(two_a):
        return "2a is an odd integer"
    if family is Family.P1_LAMBDA_0 and near_nonpositive_integer(two_a + 1):
        return "2a+1 is zero or a negative integer"
    if family is Family.P1_LAMBDA_MINUS_2A and _positive_integer(two_a, 1):
        return "2a is one of 1, 2, ..."
    if family is Family.M1_LAMBDA_0 and near_nonpositive_integer(two_a - 1):
        return "2a-1 is zero or a negative integer"
    if family is Family.M1_LAMBDA_2_MINUS_2A and _positive_integer(two_a, 2):
        return "2a is one of 2, 3, ..."
    return None


@dataclass(frozen=True)
class ClosedFormFamily:
    family: Family
    a: object
    c0: object = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if is_exact(self.a):
            object.__setattr__(self, "a", Fraction(self.a))

    def check(self) -> None:
        reason = excluded_reason(self.family, self.a)
        if reason is not None:
            raise ExcludedParameter(self.a, f"{self.family.value}: {reason}")

    @property
    def exponent(self):
        return _TABLE[self.family][0](self.a)

    @property
    def even_param(self):
        return _TABLE[self.family][1](self.a)

    @property
    def odd_param(self):
        p = _TABLE[self.family][2]
        return None if p is None else p(self.a)

    @property
    def c1(self):
        return _TABLE[self.family][3](self.a) * self.c0


def closed_coeff(fam: ClosedFormFamily, n: int):
    """The n-th coefficient from the family's closed form."""
    fam.check()
    m, odd = divmod(n, 2)
    if odd:
        if fam.odd_param is None:
            return Fraction(0) if is_exact(fam.a, fam.c0) else 0.0
        lead, param = fam.c1, fam.odd_param
    else:
        lead, param = fam.c0, fam.even_param
    den = 4**m * math.factorial(m) * pochhammer(param, m)
    if is_exact(lead, den):
        return Fraction(lead) / den
    return lead / den


def _combination(fam: ClosedFormFamily) -> Combination:
    fam.check()
    lam = fam.exponent

    def term(power, param):
        if power == 0:
            return HypergeometricSpec((), (param,), ArgumentMap.SQUARE_QUARTER)
        return HypergeometricSpec(
            (), (param,), ArgumentMap.SQUARE_QUARTER, Prefactor.POWER, power
        )

    terms = [(fam.c0, term(lam, fam.even_param))]
    if fam.odd_param is not None:
        terms.append((fam.c1, term(lam + 1, fam.odd_param)))
    return Combination(tuple(terms))


_Y1 = {0: Family.K2_EVEN, 1: Family.P1_LAMBDA_0, -1: Family.M1_LAMBDA_0}
_Y2 = {
    0: Family.K2_ODD_EXPONENT,
    1: Family.P1_LAMBDA_MINUS_2A,
    -1: Family.M1_LAMBDA_2_MINUS_2A,
}


def _offset_hypothesis(offset: int, a) -> None:
    if near_nonpositive_integer(2 * a + offset):
        sign = {0: "", 1: "+1", -1: "-1"}[offset]
        raise ExcludedParameter(a, f"2a{sign} is zero or a negative integer")


def assemble_y1(offset: int, a) -> Combination:
    """The solution analytic at z = 0, normalised to 1 there."""
    _offset_hypothesis(offset, a)
    return _combination(ClosedFormFamily(_Y1[offset], a))


def assemble_y2(offset: int, a) -> Combination:
    """The solution carrying a non-integer power of z (non-resonant ``a`` only)."""
    return _combination(ClosedFormFamily(_Y2[offset], a))


def family_for(offset: int, analytic: bool) -> Family:
    return (_Y1 if analytic else _Y2)[offset]


class Certification(NamedTuple):
    passed: bool
    first_mismatch: Optional[int]


def certify_family(fam: ClosedFormFamily, N: int = 64) -> Certification:
    """Compare the closed form with the exact recurrence for ``n <= N``."""
    fam.check()
    if not is_exact(fam.a, fam.c0):
        raise TypeError("certification needs an exact rational a and c0")
    ode = reduce_kummer(fam.a, fam.family.offset)
    sol = solve_frobenius(ode, fam.exponent, N, fam.c0)
    if sol.log_case:
        raise ExcludedParameter(
            fam.a,
            f"{fam.family.value}: {ResonantDenominator(sol.N + 1)}",
        )
    for n, c in enumerate(sol.coeffs):
        if closed_coeff(fam, n) != c:
            return Certification(False, n)
    return Certification(True, None)

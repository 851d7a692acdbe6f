"""Pochhammer symbols and truncated 0F1 / 1F1 series.

Three working modes are supported:

``float64``
    plain double-precision summation.
``extended``
    summation in :mod:`decimal` at a precision chosen from the observed
    cancellation, then rounded to double.
``exact-then-round``
    summation in :class:`fractions.Fraction`, rounded to double at the end.

Float-mode calls with a large negative argument (``x < -X_SWITCH``) are
promoted automatically, because both series alternate there and double
summation loses roughly ``|x| / ln 10`` digits.  A float sum whose largest
term exceeds the result by more than CANCELLATION_LIMIT is promoted too.
"""
from __future__ import annotations

import decimal
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .errors import DomainError, NoConvergence, PoleParameter

Scalar = Union[int, float, Fraction]

EPS_POLE = 1e-8
N_MAX = 10_000
X_SWITCH = 10.0
CANCELLATION_LIMIT = 100.0
CONSECUTIVE_SMALL = 3

FLOAT64 = "float64"
EXTENDED = "extended"
EXACT = "exact-then-round"


def is_exact(*values) -> bool:
    """True when every value is an int or Fraction (bools excluded)."""
    return all(
        isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in values
    )


def to_fraction(x) -> Fraction:
    """Exact conversion; floats convert to their binary value, strings via ``Fraction``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"cannot convert {x!r} to an exact rational")
        return Fraction(x)
    return Fraction(x)


def near_nonpositive_integer(x: Scalar, eps: float = EPS_POLE) -> bool:
    """Whether ``x`` is 0, -1, -2, ... (exactly for rationals, within ``eps`` for floats)."""
    if is_exact(x):
        x = Fraction(x)
        return x.denominator == 1 and x <= 0
    nearest = round(x)
    return nearest <= 0 and abs(x - nearest) < eps


def pochhammer(x, n: int):
    """Rising factorial ``x (x+1) ... (x+n-1)``; the empty product is 1.

    The result has the same kind as ``x``: exact for int/Fraction input.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    result = 1 if is_exact(x) else 1.0
    for k in range(n):
        result *= x + k
    return result


@dataclass(frozen=True)
class EvalResult:
    value: float
    terms_used: int
    last_term_magnitude: float
    mode: str


def _check_lower(b) -> None:
    if near_nonpositive_integer(b):
        raise PoleParameter(f"lower parameter {b} is a non-positive integer")


def _check_tol(tol) -> None:
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")


def _sum(ratio: Callable[[int], object], x, tol, zero, one):
    """Sum ``t_0 = 1, t_{n+1} = t_n * ratio(n) * x``.

    Stops once ``|t_n| <= tol |S_n|`` holds for CONSECUTIVE_SMALL successive
    terms while the terms are decreasing.  Returns the sum, the number of
    terms used, the last term and the largest term seen.
    """
    s = one
    t = one
    biggest = one
    streak = 0
    for n in range(N_MAX):
        r = ratio(n) * x
        t = t * r
        s = s + t
        mag = abs(t)
        if mag > biggest:
            biggest = mag
        if mag <= tol * abs(s) and abs(r) < 1:
            streak += 1
            if streak == CONSECUTIVE_SMALL:
                return s, n + 2, t, biggest
        else:
            streak = 0
    raise NoConvergence(f"no convergence within {N_MAX} terms (x={x})")


def _ratio_1f1(a, b):
    return lambda n: (a + n) / ((b + n) * (n + 1))


def _ratio_0f1(b):
    return lambda n: 1 / ((b + n) * (n + 1))


def _evaluate(params, x, tol, make_ratio, exact):
    """Shared driver for both series; ``params`` is the tuple passed to ``make_ratio``."""
    if x == 0:
        return EvalResult(1.0, 1, 0.0, EXACT if exact else FLOAT64)

    if exact:
        fp = tuple(to_fraction(p) for p in params)
        fx, ftol = to_fraction(x), to_fraction(tol)
        s, used, last, _ = _sum(make_ratio(*fp), fx, ftol, Fraction(0), Fraction(1))
        return EvalResult(float(s), used, float(abs(last)), EXACT)

    if x >= -X_SWITCH:
        fp = tuple(float(p) for p in params)
        s, used, last, biggest = _sum(make_ratio(*fp), float(x), float(tol), 0.0, 1.0)
        if biggest <= CANCELLATION_LIMIT * abs(s):
            return EvalResult(float(s), used, float(abs(last)), FLOAT64)

    if is_exact(*params, x):
        return _evaluate(params, x, tol, make_ratio, exact=True)
    return _evaluate_extended(params, x, tol, make_ratio)


def _to_decimal(v) -> decimal.Decimal:
    if isinstance(v, Fraction):
        return decimal.Decimal(v.numerator) / decimal.Decimal(v.denominator)
    return decimal.Decimal(v)


def _evaluate_extended(params, x, tol, make_ratio):
    # Start from a precision covering e^{|x|} of cancellation, and retry if the
    # observed ratio of largest term to sum says that was not enough.
    prec = 40 + int(0.87 * abs(float(x)))
    for _ in range(8):
        with decimal.localcontext() as ctx:
            ctx.prec = prec
            dp = tuple(_to_decimal(p) for p in params)
            dx = _to_decimal(x)
            dtol = _to_decimal(tol)
            s, used, last, biggest = _sum(
                make_ratio(*dp), dx, dtol, decimal.Decimal(0), decimal.Decimal(1)
            )
            if s == 0:
                lost = prec
            else:
                lost = max(0, (biggest / abs(s)).adjusted() + 1)
        if prec - lost >= 25:
            return EvalResult(float(s), used, float(abs(last)), EXTENDED)
        prec = 2 * prec
    raise NoConvergence(f"cancellation not resolved at {prec} digits (x={x})")


def eval_0f1(b, x, tol=1e-15, exact: bool = False) -> EvalResult:
    """Sum ``0F1(-; b; x) = sum x^n / ((b)_n n!)`` to relative tolerance ``tol``."""
    _check_lower(b)
    _check_tol(tol)
    return _evaluate((b,), x, tol, _ratio_0f1, exact)


def eval_1f1(a, b, x, tol=1e-15, exact: bool = False) -> EvalResult:
    """Sum ``1F1(a; b; x) = sum (a)_n x^n / ((b)_n n!)`` to relative tolerance ``tol``."""
    _check_lower(b)
    _check_tol(tol)
    return _evaluate((a, b), x, tol, _ratio_1f1, exact)


class ArgumentMap(str, enum.Enum):
    IDENTITY = "z"
    DOUBLE = "2z"
    SQUARE_QUARTER = "z^2/4"

    def apply(self, z):
        if self is ArgumentMap.IDENTITY:
            return z
        if self is ArgumentMap.DOUBLE:
            return 2 * z
        if is_exact(z):
            return Fraction(z) ** 2 / 4
        return z * z / 4


class Prefactor(str, enum.Enum):
    NONE = "none"
    EXP_NEG = "exp(-z)"
    POWER = "z^mu"


@dataclass(frozen=True)
class HypergeometricSpec:
    """``prefactor(z) * pFq(upper; lower; argument_map(z))`` with p <= 1, q = 1."""

    upper: tuple = ()
    lower: tuple = ()
    argument_map: ArgumentMap = ArgumentMap.IDENTITY
    prefactor: Prefactor = Prefactor.NONE
    power: Scalar = 0

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        object.__setattr__(self, "argument_map", ArgumentMap(self.argument_map))
        object.__setattr__(self, "prefactor", Prefactor(self.prefactor))
        if len(self.lower) != 1 or len(self.upper) > 1:
            raise ValueError("only 0F1 and 1F1 are supported")
        for b in self.lower:
            _check_lower(b)

    def __str__(self):
        name = f"{len(self.upper)}F1"
        up = ", ".join(str(u) for u in self.upper) or "-"
        core = f"{name}({up}; {self.lower[0]}; {self.argument_map.value})"
        if self.prefactor is Prefactor.EXP_NEG:
            return f"exp(-z)*{core}"
        if self.prefactor is Prefactor.POWER:
            return f"z^({self.power})*{core}"
        return core


def _prefactor_value(spec: HypergeometricSpec, z) -> float:
    if spec.prefactor is Prefactor.NONE:
        return 1.0
    if spec.prefactor is Prefactor.EXP_NEG:
        return math.exp(-float(z))
    mu = spec.power
    integral = to_fraction(mu).denominator == 1
    if z == 0:
        if mu < 0:
            raise DomainError(f"z^{mu} is singular at z=0")
        return 1.0 if mu == 0 else 0.0
    if z < 0 and not integral:
        raise DomainError(f"z^{mu} is not real for z={z} < 0")
    if integral:
        return float(z) ** int(mu)
    return float(z) ** float(mu)


def eval_spec(spec: HypergeometricSpec, z, tol=1e-15, exact: bool = False) -> EvalResult:
    """Evaluate ``spec`` at ``z``: map the argument, sum the series, apply the prefactor."""
    pre = _prefactor_value(spec, z)
    x = spec.argument_map.apply(z)
    if spec.upper:
        res = eval_1f1(spec.upper[0], spec.lower[0], x, tol, exact)
    else:
        res = eval_0f1(spec.lower[0], x, tol, exact)
    return EvalResult(
        pre * res.value, res.terms_used, abs(pre) * res.last_term_magnitude, res.mode
    )


@dataclass(frozen=True)
class Combination:
    """A finite linear combination ``sum coeff_i * spec_i(z)``."""

    terms: tuple

    def __str__(self):
        return " + ".join(f"({c})*{s}" for c, s in self.terms)

    def evaluate(self, z, tol=1e-15, exact: bool = False) -> EvalResult:
        value = 0.0
        used = 0
        last = 0.0
        modes = []
        for coeff, spec in self.terms:
            c = float(coeff)
            res = eval_spec(spec, z, tol, exact)
            value += c * res.value
            used += res.terms_used
            last = max(last, abs(c) * res.last_term_magnitude)
            modes.append(res.mode)
        mode = next((m for m in (EXACT, EXTENDED) if m in modes), FLOAT64)
        return EvalResult(value, used, last, mode)

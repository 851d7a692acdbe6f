"""Frobenius solutions of ``z y'' + beta y' + (gamma + delta z) y = 0`` at z = 0.

Kummer's equation ``x w'' + (b - x) w' - a w = 0`` with ``b = 2a + k``,
``x = 2z`` and ``w = e^z y`` lands in this family with
``(beta, gamma, delta) = (2a + k, k, -1)``.  Substituting
``y = z^lam sum c_n z^n`` gives the indicial equation
``lam (lam + beta - 1) = 0`` and the three-term recurrence

    c_n (n + lam)(n + lam + beta - 1) = -(gamma c_{n-1} + delta c_{n-2}).

All routines run exactly (``Fraction``) when every input is rational and in
double precision otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ResonantDenominator
from .series import EPS_POLE, Scalar, is_exact, to_fraction


@dataclass(frozen=True)
class ODESpec:
    beta: Scalar
    gamma: Scalar
    delta: Scalar

    @property
    def exact(self) -> bool:
        return is_exact(self.beta, self.gamma, self.delta)


@dataclass(frozen=True)
class IndicialRoots:
    root_zero: Scalar
    root_other: Scalar
    integer_gap: Optional[int]

    @property
    def lower(self):
        return min(self.root_zero, self.root_other)

    @property
    def upper(self):
        return max(self.root_zero, self.root_other)


@dataclass(frozen=True)
class FrobeniusSolution:
    """``z^lam * sum_{n<=N} coeffs[n] z^n``.

    When ``log_case`` is set the recurrence hit a vanishing denominator at
    index ``N + 1`` and ``coeffs`` stops just before it.
    """

    lam: Scalar
    coeffs: tuple
    c0: Scalar
    log_case: bool
    N: int

    def partial_sum(self, z):
        total = 0
        for c in reversed(self.coeffs):
            total = total * z + c
        if self.lam == 0:
            return total
        return z**self.lam * total


def reduce_kummer(a, b_offset: int) -> ODESpec:
    """The reduced equation for ``e^{-z} 1F1(a; 2a + b_offset; 2z)``."""
    if b_offset not in (-1, 0, 1):
        raise ValueError(f"b_offset must be -1, 0 or +1, got {b_offset}")
    if is_exact(a):
        a = Fraction(a)
    return ODESpec(2 * a + b_offset, b_offset, -1)


def indicial_roots(ode: ODESpec) -> IndicialRoots:
    other = 1 - ode.beta
    if ode.exact:
        other = Fraction(other)
        gap = abs(other).numerator if other.denominator == 1 else None
    else:
        nearest = round(other)
        gap = abs(nearest) if abs(other - nearest) < EPS_POLE else None
    zero = Fraction(0) if ode.exact else 0.0
    return IndicialRoots(zero, other, gap)


def _denominator(ode: ODESpec, lam, n: int):
    return (n + lam) * (n + lam + ode.beta - 1)


def recurrence_step(ode: ODESpec, lam, n: int, c_prev, c_prev2):
    """Return ``c_n`` from ``c_{n-1} = c_prev`` and ``c_{n-2} = c_prev2``.

    Pass ``c_prev2 = 0`` for ``n = 1``.  Raises :class:`ResonantDenominator`
    when ``(n + lam)(n + lam + beta - 1)`` vanishes (exactly in rational mode,
    within ``EPS_POLE`` otherwise).
    """
    den = _denominator(ode, lam, n)
    if is_exact(den):
        if den == 0:
            raise ResonantDenominator(n)
    elif abs(den) < EPS_POLE:
        raise ResonantDenominator(n)
    return -(ode.gamma * c_prev + ode.delta * c_prev2) / den


def _coerce(ode: ODESpec, lam, c0):
    if ode.exact and is_exact(lam, c0):
        return to_fraction(lam), to_fraction(c0)
    return float(lam), float(c0)


def solve_frobenius(ode: ODESpec, lam, N: int, c0=1) -> FrobeniusSolution:
    """Coefficients ``c_0 .. c_N`` of the Frobenius series with exponent ``lam``.

    A resonant denominator is reported through ``log_case``; the series is
    truncated just before the offending index.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    lam, c0 = _coerce(ode, lam, c0)
    if c0 == 0:
        raise ValueError("c0 must be non-zero")
    den0 = _denominator(ode, lam, 0)
    if den0 != 0 if is_exact(den0) else abs(den0) >= EPS_POLE:
        raise ValueError(f"lam={lam} is not an indicial root of {ode}")

    coeffs = [c0]
    prev, prev2 = c0, 0 * c0
    for n in range(1, N + 1):
        try:
            c = recurrence_step(ode, lam, n, prev, prev2)
        except ResonantDenominator:
            return FrobeniusSolution(lam, tuple(coeffs), c0, True, n - 1)
        coeffs.append(c)
        prev, prev2 = c, prev
    return FrobeniusSolution(lam, tuple(coeffs), c0, False, N)


def frobenius_basis(ode: ODESpec, N: int, c0=1):
    """Solutions for the upper and lower indicial roots, in that order.

    For a double root the second solution is logarithmic; it is returned as a
    bare ``c0`` with ``log_case`` set rather than constructed.
    """
    roots = indicial_roots(ode)
    first = solve_frobenius(ode, roots.upper, N, c0)
    if roots.integer_gap == 0:
        lam, c0 = _coerce(ode, roots.lower, c0)
        second = FrobeniusSolution(lam, (c0,), c0, True, 0)
    else:
        second = solve_frobenius(ode, roots.lower, N, c0)
    return first, second


def ode_residual(ode: ODESpec, sol: FrobeniusSolution) -> list:
    """Coefficients of ``z^{n + lam - 1}`` for ``n = 0 .. N-1`` after substitution."""
    c = sol.coeffs
    out = []
    for n in range(sol.N):
        r = c[n] * _denominator(ode, sol.lam, n)
        if n >= 1:
            r += ode.gamma * c[n - 1]
        if n >= 2:
            r += ode.delta * c[n - 2]
        out.append(r)
    return out

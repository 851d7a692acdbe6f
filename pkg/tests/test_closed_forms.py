from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer import (
    ArgumentMap,
    ClosedFormFamily,
    ExcludedParameter,
    Family,
    Prefactor,
    assemble_y1,
    assemble_y2,
    certify_family,
    closed_coeff,
    reduce_kummer,
    solve_frobenius,
)

F = Fraction
A_GRID = [F(1, 3), F(1, 4), F(3, 4), F(5, 3), F(7, 2), F(33, 10), F(37, 10)]


def test_closed_coeff_examples():
    assert closed_coeff(ClosedFormFamily(Family.P1_LAMBDA_0, 1), 0) == 1
    assert closed_coeff(ClosedFormFamily(Family.P1_LAMBDA_0, 1), 2) == F(1, 6)
    assert closed_coeff(ClosedFormFamily(Family.M1_LAMBDA_0, 1), 1) == 1


def test_closed_coeff_stays_exact():
    for family in Family:
        fam = ClosedFormFamily(family, F(1, 3))
        assert all(type(closed_coeff(fam, n)) is Fraction for n in range(6))
    assert isinstance(closed_coeff(ClosedFormFamily(Family.P1_LAMBDA_0, 0.3), 3), float)


def test_closed_coeff_matches_recurrence_value():
    sol = solve_frobenius(reduce_kummer(1, 1), 0, 2)
    assert closed_coeff(ClosedFormFamily(Family.P1_LAMBDA_0, 1), 2) == sol.coeffs[2]


@pytest.mark.parametrize(
    "family, a",
    [
        (Family.P1_LAMBDA_MINUS_2A, F(1, 2)),
        (Family.P1_LAMBDA_MINUS_2A, 2),
        (Family.M1_LAMBDA_2_MINUS_2A, 1),
        (Family.M1_LAMBDA_2_MINUS_2A, F(3, 2)),
        (Family.K2_ODD_EXPONENT, F(3, 2)),
        (Family.K2_EVEN, 0),
        (Family.P1_LAMBDA_0, -1),
        (Family.M1_LAMBDA_0, F(1, 2)),
    ],
)
def test_excluded_parameters(family, a):
    with pytest.raises(ExcludedParameter):
        closed_coeff(ClosedFormFamily(family, a), 3)
    with pytest.raises(ExcludedParameter):
        certify_family(ClosedFormFamily(family, a), 8)


@pytest.mark.parametrize("family, a", [
    (Family.P1_LAMBDA_MINUS_2A, F(1, 2) + F(1, 10**6)),
    (Family.M1_LAMBDA_2_MINUS_2A, F(1, 2)),
    (Family.P1_LAMBDA_MINUS_2A, F(-3, 2)),
])
def test_boundary_neighbours_allowed(family, a):
    assert certify_family(ClosedFormFamily(family, a), 16).passed


def test_float_guard():
    with pytest.raises(ExcludedParameter):
        ClosedFormFamily(Family.P1_LAMBDA_MINUS_2A, 0.5 + 1e-12).check()


def test_certify_examples():
    assert certify_family(ClosedFormFamily(Family.P1_LAMBDA_0, F(1, 3)), 64) == (True, None)
    assert certify_family(ClosedFormFamily(Family.M1_LAMBDA_2_MINUS_2A, F(1, 4)), 64) == (True, None)


def test_certify_reports_first_mismatch(monkeypatch):
    from kummer import closed_forms

    original = closed_forms.closed_coeff

    def wrong_at_7(fam, n):
        return original(fam, n) + (1 if n == 7 else 0)

    monkeypatch.setattr(closed_forms, "closed_coeff", wrong_at_7)
    assert certify_family(ClosedFormFamily(Family.P1_LAMBDA_0, F(1, 3)), 20) == (False, 7)


def test_certify_requires_exact():
    with pytest.raises(TypeError):
        certify_family(ClosedFormFamily(Family.P1_LAMBDA_0, 0.25), 8)


def test_certify_even_resonance_is_excluded():
    # 2a = 2: the odd-exponent series meets 0/0 at n = 1
    with pytest.raises(ExcludedParameter):
        certify_family(ClosedFormFamily(Family.K2_ODD_EXPONENT, 1), 8)


@pytest.mark.parametrize("a", A_GRID)
@pytest.mark.parametrize("family", list(Family))
def test_certification_grid(family, a):
    fam = ClosedFormFamily(family, a)
    try:
        fam.check()
    except ExcludedParameter:
        pytest.skip("excluded parameter")
    assert certify_family(fam, 64) == (True, None)


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=-6, max_value=6, max_denominator=24), st.sampled_from(list(Family)))
def test_certification_random_a(a, family):
    fam = ClosedFormFamily(family, a)
    try:
        result = certify_family(fam, 24)
    except ExcludedParameter:
        return
    assert result.passed


@given(st.fractions(min_value=F(1, 50), max_value=8, max_denominator=50))
def test_sign_patterns(a):
    p1 = [closed_coeff(ClosedFormFamily(Family.P1_LAMBDA_0, a), n) for n in range(12)]
    assert all((c > 0) == (n % 2 == 0) for n, c in enumerate(p1))
    if a > F(1, 2):
        m1 = ClosedFormFamily(Family.M1_LAMBDA_0, a)
        assert closed_coeff(m1, 0) > 0 and closed_coeff(m1, 1) > 0


# --- assembly ---------------------------------------------------------------

def _describe(comb):
    return [
        (coeff, spec.lower[0], spec.prefactor, spec.power, spec.argument_map)
        for coeff, spec in comb.terms
    ]


def test_assemble_y1_shapes():
    a = F(2, 7)
    q = ArgumentMap.SQUARE_QUARTER
    assert _describe(assemble_y1(0, a)) == [(1, a + F(1, 2), Prefactor.NONE, 0, q)]
    assert _describe(assemble_y1(1, a)) == [
        (1, a + F(1, 2), Prefactor.NONE, 0, q),
        (-1 / (2 * a + 1), a + F(3, 2), Prefactor.POWER, 1, q),
    ]
    assert _describe(assemble_y1(-1, a)) == [
        (1, a - F(1, 2), Prefactor.NONE, 0, q),
        (1 / (2 * a - 1), a + F(1, 2), Prefactor.POWER, 1, q),
    ]


def test_assemble_y2_shapes():
    a = F(1, 4)
    q = ArgumentMap.SQUARE_QUARTER
    P = Prefactor.POWER
    assert _describe(assemble_y2(0, a)) == [(1, F(5, 4), P, F(1, 2), q)]
    assert _describe(assemble_y2(1, a)) == [(1, F(1, 4), P, F(-1, 2), q), (-2, F(5, 4), P, F(1, 2), q)]
    assert _describe(assemble_y2(-1, a)) == [(1, F(5, 4), P, F(3, 2), q), (F(2, 5), F(9, 4), P, F(5, 2), q)]


def test_assemble_rejects_hypothesis_violations():
    with pytest.raises(ExcludedParameter):
        assemble_y1(1, F(-1, 2))
    with pytest.raises(ExcludedParameter):
        assemble_y1(-1, F(1, 2))
    with pytest.raises(ExcludedParameter):
        assemble_y2(1, 1)


@pytest.mark.parametrize("a", [F(1, 3), F(3, 4), F(5, 3), F(7, 2)])
@pytest.mark.parametrize("offset", [-1, 0, 1])
@pytest.mark.parametrize("z", [-4, -1.5, -0.3, 0.7, 2, 4])
def test_y1_matches_frobenius_partial_sum(a, offset, z):
    tol = 1e-14
    sol = solve_frobenius(reduce_kummer(a, offset), 0, 80)
    exact = sol.partial_sum(Fraction(z))
    value = assemble_y1(offset, a).evaluate(z, tol).value
    assert value == pytest.approx(float(exact), rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("a", [F(1, 4), F(1, 3), F(-3, 10)])
@pytest.mark.parametrize("offset", [-1, 0, 1])
@pytest.mark.parametrize("family_kind", ["y1", "y2"])
def test_assembled_solutions_solve_the_ode(a, offset, family_kind):
    # independent check: numerical differentiation with mpmath
    comb = (assemble_y1 if family_kind == "y1" else assemble_y2)(offset, a)
    ode = reduce_kummer(a, offset)
    beta, gamma, delta = (float(v) for v in (ode.beta, ode.gamma, ode.delta))

    def f(z):
        total = mpmath.mpf(0)
        for coeff, spec in comb.terms:
            total += (mpmath.mpf(float(coeff)) * mpmath.power(z, float(spec.power))
                      * mpmath.hyp0f1(float(spec.lower[0]), z * z / 4))
        return total

    with mpmath.workdps(30):
        for z in (mpmath.mpf("0.6"), mpmath.mpf("1.7"), mpmath.mpf("3.1")):
            lhs = z * mpmath.diff(f, z, 2) + beta * mpmath.diff(f, z) + (gamma + delta * z) * f(z)
            assert abs(lhs) < 1e-12 * max(1, abs(f(z)))

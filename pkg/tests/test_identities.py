import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer import (
    ArgumentMap,
    ExcludedParameter,
    IdentityId,
    Prefactor,
    ResonantParameter,
    connection_constants,
    lhs_series_exact,
    lhs_spec,
    reduce_kummer,
    rhs_spec,
    solve_frobenius,
    verify_identity,
)
from kummer.identities import certify_identity_series

F = Fraction
IDS = list(IdentityId)


def test_identity_offsets():
    assert [i.offset for i in IDS] == [0, 1, -1]


@pytest.mark.parametrize("identity, lower", [
    (IdentityId.KUMMER2, F(6, 7)),
    (IdentityId.CONTIG_PLUS, F(13, 7)),
    (IdentityId.CONTIG_MINUS, F(-1, 7)),
])
def test_lhs_spec(identity, lower):
    spec = lhs_spec(identity, F(3, 7))
    assert spec.upper == (F(3, 7),) and spec.lower == (lower,)
    assert spec.argument_map is ArgumentMap.DOUBLE
    assert spec.prefactor is Prefactor.EXP_NEG


def test_rhs_spec_coefficients():
    a = F(3, 7)
    assert len(rhs_spec(IdentityId.KUMMER2, a).terms) == 1
    assert rhs_spec(IdentityId.CONTIG_PLUS, a).terms[1][0] == -1 / (2 * a + 1)
    assert rhs_spec(IdentityId.CONTIG_MINUS, a).terms[1][0] == 1 / (2 * a - 1)


@pytest.mark.parametrize("identity, a", [
    (IdentityId.CONTIG_PLUS, F(-1, 2)),
    (IdentityId.CONTIG_PLUS, -1.5),
    (IdentityId.CONTIG_MINUS, F(1, 2)),
    (IdentityId.CONTIG_MINUS, 0),
    (IdentityId.KUMMER2, 0),
    (IdentityId.KUMMER2, -1),
])
def test_hypothesis_violations(identity, a):
    with pytest.raises(ExcludedParameter) as info:
        verify_identity(identity, [1, a], [0.5])
    assert info.value.a == a
    with pytest.raises(ExcludedParameter):
        lhs_spec(identity, a)
    with pytest.raises(ExcludedParameter):
        lhs_series_exact(identity, a, 4)


def test_kummer2_sinh_point():
    report = verify_identity(IdentityId.KUMMER2, [1.0], [1.0], 1e-10)
    p = report.points[0]
    assert p.lhs == pytest.approx(math.sinh(1), rel=1e-13)
    assert p.rhs == pytest.approx(math.sinh(1), rel=1e-13)
    assert report.passed


@pytest.mark.parametrize("identity", IDS)
def test_all_sides_one_at_zero(identity):
    p = verify_identity(identity, [F(2, 3)], [0.0]).points[0]
    assert p.lhs == p.rhs == 1.0


@pytest.mark.parametrize("identity", IDS)
@pytest.mark.parametrize("a", [0.3, 1.7, 4.2])
@pytest.mark.parametrize("z", [-4.5, -0.8, 2.2, 4.9])
def test_sides_against_mpmath(identity, a, z):
    with mpmath.workdps(40):
        expected = float(mpmath.exp(-z) * mpmath.hyp1f1(a, 2 * a + identity.offset, 2 * z))
    p = verify_identity(identity, [a], [z], 1e-10).points[0]
    assert p.lhs == pytest.approx(expected, rel=1e-11)
    assert p.rhs == pytest.approx(expected, rel=1e-11)


def test_report_detects_wrong_rhs(monkeypatch):
    from kummer import identities

    monkeypatch.setattr(identities, "rhs_spec", lambda i, a: identities.assemble_y1(0, a))
    report = verify_identity(IdentityId.CONTIG_PLUS, [1.0], [1.0, 2.0], 1e-10)
    assert not report.passed


def test_report_grid_order():
    report = verify_identity(IdentityId.KUMMER2, [1, 2], [0.5, -0.5])
    assert report.grid == [(1, 0.5), (1, -0.5), (2, 0.5), (2, -0.5)]


def test_exact_mode_verification():
    report = verify_identity(IdentityId.CONTIG_MINUS, [F(5, 3)], [F(-5), F(1, 3), F(5)], 1e-12, exact=True)
    assert report.passed


# --- exact series -----------------------------------------------------------

def test_lhs_series_examples():
    a = F(4, 9)
    assert lhs_series_exact(IdentityId.KUMMER2, a, 3)[1] == 0
    assert lhs_series_exact(IdentityId.CONTIG_PLUS, 1, 3)[1] == F(-1, 3)
    for identity in IDS:
        assert lhs_series_exact(identity, a, 3)[0] == 1


@pytest.mark.parametrize("identity", IDS)
def test_lhs_series_against_mpmath_taylor(identity):
    a = F(2, 5)
    coeffs = lhs_series_exact(identity, a, 12)
    with mpmath.workdps(40):
        b = 2 * mpmath.mpf(2) / 5 + identity.offset
        taylor = mpmath.taylor(lambda z: mpmath.exp(-z) * mpmath.hyp1f1(mpmath.mpf(2) / 5, b, 2 * z), 0, 12)
    for c, t in zip(coeffs, taylor):
        assert float(c) == pytest.approx(float(t), rel=1e-20, abs=1e-25)


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=F(-5), max_value=F(5), max_denominator=30))
def test_kummer2_odd_coefficients_vanish(a):
    if (2 * a).denominator == 1 and 2 * a <= 0:
        return
    coeffs = lhs_series_exact(IdentityId.KUMMER2, a, 30)
    assert all(c == 0 for c in coeffs[1::2])


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=F(1, 20), max_value=F(8), max_denominator=30), st.sampled_from(IDS))
def test_series_identity_random(a, identity):
    try:
        assert certify_identity_series(identity, a, 24) is None
    except ExcludedParameter:
        pass


def test_series_identity_flags_disagreement():
    lhs = lhs_series_exact(IdentityId.CONTIG_PLUS, F(1, 3), 10)
    wrong = solve_frobenius(reduce_kummer(F(1, 3), -1), 0, 10).coeffs
    assert list(lhs) != list(wrong)


# --- connection constants ---------------------------------------------------

@pytest.mark.parametrize("identity", IDS)
@pytest.mark.parametrize("N", [4, 8, 16, 24])
def test_connection_constants(identity, N):
    cc = connection_constants(identity, F(1, 4), N)
    assert (cc.A, cc.B) == (1, 0)
    assert cc.consistent and cc.method == "series-matching"


def test_connection_resonant():
    with pytest.raises(ResonantParameter):
        connection_constants(IdentityId.CONTIG_PLUS, 1, 8)
    with pytest.raises(ResonantParameter):
        connection_constants(IdentityId.KUMMER2, F(3, 2), 8)


def test_connection_catches_inconsistency(monkeypatch):
    from kummer import identities

    real = identities.lhs_series_exact

    def perturbed(identity, a, N):
        out = real(identity, a, N)
        out[3] += 1
        return out

    monkeypatch.setattr(identities, "lhs_series_exact", perturbed)
    cc = connection_constants(IdentityId.CONTIG_PLUS, F(1, 3), 8)
    assert not cc.consistent and cc.mismatch_exponent == 3

from fractions import Fraction

import mpmath
import pytest

from core.exceptions import DomainError, VerificationError
from exact.scalars import PiHalfScalar
from ifunctions.checks import run_pf_checks
from ifunctions.continuation import (
    lg_continuation_value,
    t_c_coefficients,
    wallcross_coefficients,
)
from ifunctions.generators import (
    hypergeometric_coefficient,
    i_cy,
    i_lg,
    t_cy,
    t_lg,
    t_lg_gamma_quotient,
)
from ifunctions.models import extended_i_function
from ifunctions.oscillatory import (
    IdentityCheck,
    OscillatoryReport,
    cy_term,
    lg_term,
    verify_oscillatory_identities,
)


def test_hypergeometric_coefficients() -> None:
    assert hypergeometric_coefficient(0) == (1, 0, 0, 0)
    assert hypergeometric_coefficient(1)[0] == 120
    assert hypergeometric_coefficient(2)[0] == 113400
    with pytest.raises(DomainError):
        hypergeometric_coefficient(-1)


def test_cy_component_log_structure() -> None:
    component = i_cy(2, 3)
    assert component.log_rank == 2
    assert component.part(2) == i_cy(0, 3).part(0)
    assert component.part(0)[0] == 0
    with pytest.raises(DomainError):
        i_cy(4, 3)


def test_lg_component_exponents() -> None:
    component = i_lg(0, 11)
    assert component.exponents() == [1, 6]
    assert component[6] == Fraction(1, 375000)
    assert i_lg(3, 10).exponents() == [4, 9]


def test_cy_disk_potential_leading_terms() -> None:
    potential = t_cy(Fraction(5, 2))
    assert potential.coefficients == {
        Fraction(1, 2): 30,
        Fraction(3, 2): Fraction(50050, 3),
    }


def test_lg_disk_potential_gamma_quotient_form_agrees() -> None:
    order = Fraction(51, 2)
    assert t_lg(order).agrees_with(t_lg_gamma_quotient(order))
    assert t_lg(order)[Fraction(5, 2)] == Fraction(-2, 3)
    assert t_lg(order)[Fraction(15, 2)] == Fraction(-2, 135135)


def test_lg_disk_potential_in_q() -> None:
    exact = t_lg(8, "q")
    assert exact.order is None
    assert exact[Fraction(-1, 2)] == Fraction(-2, 3)
    with pytest.raises(DomainError):
        t_lg(8, "z")


@pytest.mark.parametrize(
    "kind", ["quintic", "extended", "lg", "inhomogeneous"]
)
def test_picard_fuchs_checks_pass(kind: str) -> None:
    checks = run_pf_checks(kind, 8)
    assert checks
    assert all(check.passed for check in checks)


def test_unknown_check_kind() -> None:
    with pytest.raises(DomainError):
        run_pf_checks("elliptic", 8)


def test_positive_phase_sectors() -> None:
    function = extended_i_function("positive", 4)
    assert function.sector("e·H^0") == i_cy(0, 4)
    assert function.disk_component() == t_cy(4).scale(-1)
    assert function.pairing == Fraction(1, 2)


def test_negative_phase_signs() -> None:
    function = extended_i_function("negative", 12)
    assert function.sector("phi_1") == i_lg(1, 12)
    assert function.sector("phi_2") == i_lg(2, 12).scale(-1)
    assert function.disk_component() == t_lg(12).scale(-1)
    with pytest.raises(DomainError):
        function.sector("p")


def test_unknown_phase() -> None:
    with pytest.raises(DomainError):
        extended_i_function("geometric", 4)


def test_oscillatory_anchors() -> None:
    assert cy_term(0) == PiHalfScalar(-960, 6)
    assert lg_term(0) == PiHalfScalar(Fraction(128, 3), 6)


def test_oscillatory_identities_hold() -> None:
    report = verify_oscillatory_identities(25)
    assert len(report.checks) == 52
    assert report.passed
    report.raise_for_failures()


def test_oscillatory_failure_is_reported() -> None:
    report = OscillatoryReport(0)
    report.checks.append(
        IdentityCheck("CY", 0, cy_term(0), PiHalfScalar(960, 6))
    )
    assert "FAIL" in str(report.checks[0])
    with pytest.raises(VerificationError):
        report.raise_for_failures()
    with pytest.raises(DomainError):
        verify_oscillatory_identities(-1)


def test_continuation_coefficients() -> None:
    coefficients = t_c_coefficients(64)
    assert len(coefficients) == 4
    principal = wallcross_coefficients(64)
    conjugate = wallcross_coefficients(64, "conjugate")
    for c, w, v in zip(coefficients, principal, conjugate):
        assert w == -c
        assert v == -mpmath.conj(c)
    with pytest.raises(DomainError):
        t_c_coefficients(32)
    with pytest.raises(DomainError):
        wallcross_coefficients(64, "clockwise")


def test_continuation_coefficients_keep_requested_precision() -> None:
    coefficients = t_c_coefficients(256)
    with mpmath.workprec(256):
        for m, c in enumerate(coefficients, start=1):
            fraction = mpmath.mpf(m) / 5
            expected = (
                -mpmath.j
                * mpmath.pi**3
                / 10
                * mpmath.expjpi(4 * fraction)
                / (mpmath.gamma(1 - fraction) ** 5 * mpmath.cospi(fraction))
            )
            assert abs(c - expected) / abs(expected) < mpmath.mpf(2) ** -240


def test_conjugate_continuation_on_real_axis() -> None:
    t = mpmath.mpf("0.5")
    principal = lg_continuation_value(t, 64, order=30)
    conjugate = lg_continuation_value(t, 64, "conjugate", 30)
    assert mpmath.almosteq(conjugate, mpmath.conj(principal), 1e-15)

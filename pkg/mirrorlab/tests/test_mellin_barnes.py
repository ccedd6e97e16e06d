from fractions import Fraction

import mpmath
import pytest

from branes.models import Brane, LaurentChar, extended_walcher, quintic_tc
from core.exceptions import (
    ConvergenceError,
    DivergentDirectionError,
    DomainError,
    PoleError,
)
from exact.scalars import PiHalfScalar
from ifunctions.continuation import lg_continuation_value, t_c_coefficients
from ifunctions.generators import i_lg, t_cy
from mellin_barnes.contour import contour_integrate, decay_rates, tail_height
from mellin_barnes.gamma import (
    gamma_numeric,
    gamma_pole_index,
    gamma_residue,
    spouge_parameter,
)
from mellin_barnes.hemisphere import (
    bare_integral,
    closure_side,
    hemisphere_z,
    model_charges,
    model_integrand,
    wallcross_split,
)
from mellin_barnes.models import MBIntegrand, Precision
from mellin_barnes.normalization import (
    hemisphere_sign,
    normalization_table,
    open_closed_factor,
    open_closed_scalar,
    quintic_tc_factor,
    quintic_tc_scalar,
)
from mellin_barnes.residues import (
    cauchy_residue,
    classify_pole,
    conifold_modulus,
    pole_locations,
    residue_sum,
    simple_residue,
)
from series.evaluation import evaluate

SMALL_Q = mpmath.mpf("1e-5") * mpmath.expj(-mpmath.pi / 2)
LARGE_Q = mpmath.mpf("1e4") * mpmath.expj(-mpmath.pi / 2)
LEFT_MODULI = ["1e-6", "3e-6", "1e-5", "3e-5", "1e-4"]
RIGHT_MODULI = ["1e-2", "1e-1", "1", "1e2", "1e4"]


def relative(value, expected):
    return abs(value - expected) / abs(expected)


def walcher_integrand(q=SMALL_Q) -> MBIntegrand:
    return model_integrand("extended", extended_walcher().char, q)


@pytest.mark.parametrize(
    "z", [mpmath.mpf("3.7"), mpmath.mpc("0.3", "2"), mpmath.mpf("-2.5")]
)
def test_gamma_matches_reference(z) -> None:
    with mpmath.workprec(64):
        assert relative(gamma_numeric(z), mpmath.gamma(z)) < 1e-15


@pytest.mark.parametrize("pole", [0, -3])
def test_gamma_poles(pole: int) -> None:
    with pytest.raises(PoleError) as info:
        gamma_numeric(pole, 64)
    assert info.value.pole == pole


def test_spouge_parameter_grows_with_precision() -> None:
    assert spouge_parameter(64) == 26
    assert spouge_parameter(128) > spouge_parameter(64)


def test_gamma_residues_and_pole_indices() -> None:
    assert gamma_residue(Fraction(1), Fraction(0), 2) == Fraction(1, 2)
    assert gamma_residue(Fraction(-5), Fraction(1), 1) == Fraction(1, 5)
    assert gamma_pole_index(
        Fraction(1), Fraction(1, 2), Fraction(-5, 2)
    ) == 2
    assert gamma_pole_index(Fraction(1), Fraction(1, 2), Fraction(-1)) is None


def test_precision_bounds() -> None:
    with pytest.raises(DomainError):
        Precision(32)
    assert Precision(64).tolerance == mpmath.ldexp(1, -44)


def test_integrand_validation() -> None:
    with pytest.raises(DomainError):
        walcher_integrand(0)
    with pytest.raises(DomainError):
        model_integrand(
            "quintic", LaurentChar({0: 1}), SMALL_Q, delta=Fraction(-1, 10)
        )
    with pytest.raises(DomainError):
        model_charges("sextic")


def test_conifold_modulus_and_sides() -> None:
    ig = walcher_integrand()
    assert conifold_modulus(ig) == pytest.approx(5.0**-5)
    assert closure_side(ig) == "left"
    assert closure_side(walcher_integrand(LARGE_Q)) == "right"


def test_pole_locations() -> None:
    ig = walcher_integrand()
    assert pole_locations(ig, "left", 4) == [
        0,
        Fraction(-1, 2),
        -1,
        Fraction(-3, 2),
    ]
    assert pole_locations(ig, "right", 4) == [
        Fraction(1, 5),
        Fraction(2, 5),
        Fraction(1, 2),
        Fraction(3, 5),
    ]
    with pytest.raises(DomainError):
        pole_locations(ig, "up", 4)


def test_pole_classification() -> None:
    ig = walcher_integrand()
    integer = classify_pole(ig, Fraction(-1))
    assert (integer.gamma_order, integer.zero_order) == (5, 5)
    assert integer.removable
    half = classify_pole(ig, Fraction(-1, 2))
    assert half.order == 1


def test_simple_residue_matches_cauchy_integral() -> None:
    ig = walcher_integrand()
    prec = Precision(64)
    location = Fraction(-1, 2)
    exact = simple_residue(ig, location, prec)
    numeric = cauchy_residue(ig, location, prec)
    assert relative(numeric, exact) < 1e-12
    with pytest.raises(DomainError):
        simple_residue(ig, Fraction(1, 3), prec)


def test_normalization_chain() -> None:
    assert len(normalization_table()) == 7
    assert open_closed_scalar() == PiHalfScalar(64, 6)
    assert quintic_tc_scalar() == PiHalfScalar(-32, 4)
    assert hemisphere_sign() == -1
    with mpmath.workprec(64):
        assert relative(open_closed_factor(), 64 * mpmath.pi**3) < 1e-15


def test_left_closure_reproduces_disk_potential(
    prec64: Precision, walcher: Brane
) -> None:
    value = hemisphere_z("extended", walcher, SMALL_Q, prec64).value
    with mpmath.workprec(64):
        log_q = walcher_integrand().log_q()
        expected = open_closed_factor() * evaluate(
            t_cy(Fraction(40)), SMALL_Q, 64, log_q
        )
        assert relative(value, expected) < 1e-12


def test_contour_agrees_with_residues() -> None:
    prec = Precision(53)
    ig = walcher_integrand()
    contour = contour_integrate(ig, prec)
    residues = residue_sum(ig, "left", prec=prec)
    assert contour.method == "contour"
    assert relative(contour.value, residues.value) < 1e-10


def test_right_closure_matches_lg_continuation() -> None:
    prec = Precision(64)
    value = hemisphere_z(
        "extended", extended_walcher(), LARGE_Q, prec, "residues"
    ).value
    with mpmath.workprec(64):
        log_q = walcher_integrand(LARGE_Q).log_q()
        expected = open_closed_factor() * lg_continuation_value(
            mpmath.exp(-log_q / 5), 64
        )
        assert relative(value, expected) < 1e-12


def test_wallcross_split_sums_to_total(
    prec64: Precision, walcher: Brane
) -> None:
    total = hemisphere_z("extended", walcher, LARGE_Q, prec64, "residues")
    first, second = wallcross_split("extended", walcher, LARGE_Q, prec64)
    with mpmath.workprec(64):
        assert relative(first.value + second.value, total.value) < 1e-12


def test_zero_insertion_integrates_to_zero() -> None:
    ig = model_integrand("extended", LaurentChar(), SMALL_Q)
    assert contour_integrate(ig, Precision(53)).value == 0


def test_divergent_direction() -> None:
    ig = model_integrand("extended", LaurentChar({5: 1}), SMALL_Q)
    assert decay_rates(ig).lower < 0
    with pytest.raises(DivergentDirectionError) as info:
        contour_integrate(ig, Precision(53))
    assert info.value.exponent == 5
    assert info.value.side == "-"


def test_tail_height_limit() -> None:
    assert tail_height(1.0, 0.0, Precision(64)) < 100
    with pytest.raises(ConvergenceError):
        tail_height(1e-3, 0.0, Precision(64))


def test_unknown_method() -> None:
    with pytest.raises(DomainError):
        bare_integral(walcher_integrand(), Precision(64), "saddle")


def test_quintic_tc_brane_on_negative_axis() -> None:
    prec = Precision(64)
    q = mpmath.mpf(-10000)
    value = hemisphere_z("quintic", quintic_tc(), q, prec, "residues").value
    with mpmath.workprec(64):
        t = mpmath.mpf(10000) ** (-mpmath.mpf(1) / 5)
        combination = sum(
            c * evaluate(i_lg(m, Fraction(40)), t, 64)
            for m, c in enumerate(t_c_coefficients(64))
        )
        expected = quintic_tc_factor() * combination
        assert relative(value, expected) < 1e-12


def test_gamma_keeps_requested_precision() -> None:
    z = mpmath.mpc("0.3", "2")
    value = gamma_numeric(z, 256)
    with mpmath.workprec(256):
        assert relative(value, mpmath.gamma(z)) < mpmath.mpf(2) ** -240


def test_gamma_reflection(rng) -> None:
    with mpmath.workprec(128):
        for _ in range(20):
            z = mpmath.mpc(rng.uniform(-4, 4), rng.uniform(-3, 3))
            product = gamma_numeric(z, 128) * gamma_numeric(1 - z, 128)
            expected = mpmath.pi / mpmath.sinpi(z)
            assert relative(product, expected) < mpmath.mpf(2) ** -110


def test_doubling_bits_changes_result_below_tolerance(walcher: Brane) -> None:
    coarse = hemisphere_z(
        "extended", walcher, SMALL_Q, Precision(128), "residues"
    )
    fine = hemisphere_z(
        "extended", walcher, SMALL_Q, Precision(256), "residues"
    )
    with mpmath.workprec(256):
        assert relative(coarse.value, fine.value) < mpmath.mpf(2) ** -120


def test_result_does_not_depend_on_ambient_precision(
    walcher: Brane,
) -> None:
    prec = Precision(256)
    ambient = hemisphere_z("extended", walcher, SMALL_Q, prec, "residues")
    with mpmath.workprec(300):
        raised = hemisphere_z(
            "extended", walcher, SMALL_Q, prec, "residues"
        )
        assert relative(ambient.value, raised.value) < mpmath.mpf(2) ** -200


def test_continuation_coefficients_double_precision() -> None:
    coarse = t_c_coefficients(128)
    fine = t_c_coefficients(256)
    with mpmath.workprec(256):
        for c, f in zip(coarse, fine):
            assert relative(c, f) < mpmath.mpf(2) ** -110


@pytest.mark.parametrize("n", range(4))
def test_integer_poles_cancel_in_left_closure(n: int) -> None:
    ig = walcher_integrand()
    pole = classify_pole(ig, Fraction(-n))
    assert pole.removable
    residue = cauchy_residue(ig, Fraction(-n), Precision(128))
    assert abs(residue) < 1e-30


@pytest.mark.parametrize("theta", [-mpmath.pi / 3, -2 * mpmath.pi / 3])
@pytest.mark.parametrize("modulus", LEFT_MODULI + RIGHT_MODULI)
def test_two_methods_agree_in_both_phases(modulus: str, theta) -> None:
    prec = Precision(53)
    q = mpmath.mpf(modulus) * mpmath.expj(theta)
    ig = walcher_integrand(q)
    contour = contour_integrate(ig, prec)
    residues = residue_sum(ig, closure_side(ig), prec=prec)
    assert relative(contour.value, residues.value) < 1e-9


@pytest.mark.parametrize("modulus", ["1e-5", "1e-4"])
def test_path_starts_on_geometric_side(modulus: str, walcher: Brane) -> None:
    prec = Precision(64)
    q = mpmath.mpf(modulus) * mpmath.expj(-mpmath.pi / 2)
    value = hemisphere_z("extended", walcher, q, prec, "contour").value
    with mpmath.workprec(64):
        log_q = walcher_integrand(q).log_q()
        expected = open_closed_factor() * evaluate(
            t_cy(Fraction(40)), q, 64, log_q
        )
        assert relative(value, expected) < 1e-9


@pytest.mark.parametrize("modulus", ["1e-3", "1e-1", "10", "1e4"])
def test_path_continues_across_the_wall(modulus: str, walcher: Brane) -> None:
    prec = Precision(64)
    q = mpmath.mpf(modulus) * mpmath.expj(-mpmath.pi / 2)
    value = hemisphere_z("extended", walcher, q, prec, "contour").value
    with mpmath.workprec(64):
        log_q = walcher_integrand(q).log_q()
        expected = open_closed_factor() * lg_continuation_value(
            mpmath.exp(-log_q / 5), 64, order=Fraction(160)
        )
        assert relative(value, expected) < 1e-9

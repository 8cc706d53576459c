"""Class parameter sets, coefficient maps, built maps and witnesses."""

import cmath
import math

import numpy as np
import pytest

from uil.caratheodory import HerglotzSpec, herglotz_series, sample_spec
from uil.classes import (
    Cgamma,
    CoeffPair,
    F0,
    Gnu,
    InverseCoeffs,
    build_function,
    class_label,
    class_margin,
    coefficient_functional,
    coeffs_from_c,
    coupling,
    inverse_coeffs,
    witness,
    witness_generator,
    witness_ids,
)
from uil.series import Series, integrate, pow_series, revert

ALL_PARAMS = (Gnu(1.0), Gnu(0.3), F0(0.5), F0(0.85), Cgamma(0.0, 0.0), Cgamma(0.6, 0.35))


# ----------------------------------------------------------------------
# parameter sets


def test_parameter_ranges():
    with pytest.raises(ValueError, match="nu out of range"):
        Gnu(0.0)
    with pytest.raises(ValueError, match="nu out of range"):
        Gnu(1.2)
    with pytest.raises(ValueError, match="lambda out of range"):
        F0(0.4)
    with pytest.raises(ValueError, match="gamma out of range"):
        Cgamma(math.pi / 2, 0.0)
    with pytest.raises(ValueError, match="alpha out of range"):
        Cgamma(0.0, 1.0)


def test_derived_quantities():
    params = Cgamma(0.4, 0.25)
    mu = params.mu
    assert mu == pytest.approx(cmath.exp(0.4j) * math.cos(0.4))
    assert params.tau == pytest.approx(4 * 0.75 * mu - 1)
    assert abs(params.tau) <= 3.0


def test_couplings():
    assert coupling(Gnu(0.8)) == pytest.approx(-0.4)
    assert coupling(F0(0.75)) == pytest.approx(1.25)
    assert coupling(Cgamma(0.0, 0.5)) == pytest.approx(0.5)
    assert class_label(Gnu(1.0)) == "g"


# ----------------------------------------------------------------------
# closed coefficient maps


def test_coeffs_from_c_examples():
    cp = coeffs_from_c(Gnu(1.0), 2.0, 2.0)
    assert cp.a2 == pytest.approx(-0.5)
    assert cp.a3 == pytest.approx(0.0)

    cp = coeffs_from_c(F0(0.5), 2.0, 2.0)
    assert cp.a2 == pytest.approx(1.0)
    assert cp.a3 == pytest.approx(1.0)

    cp = coeffs_from_c(Cgamma(0.0, 0.0), 2.0, 2.0)
    assert cp.a2 == pytest.approx(1.0)
    assert cp.a3 == pytest.approx(1.0)


def test_inverse_coeffs():
    ic = inverse_coeffs(CoeffPair(0.0, 0.0))
    assert (ic.A1, ic.A2, ic.A3) == (1.0, 0.0, 0.0)
    ic = inverse_coeffs(CoeffPair(2.0, 3.0))
    assert ic.A2 == pytest.approx(-2.0)
    assert ic.A3 == pytest.approx(5.0)


def test_inverse_coeffs_power_map_family():
    # a2 = (1+2L)/2 and a3 = (2L+1)(2L+2)/6 invert to A2 = -(1+2L)/2 and
    # A3 = (2L+1)(4L+1)/6
    for lam in (0.5, 0.7, 1.0):
        a2 = (1 + 2 * lam) / 2
        a3 = (2 * lam + 1) * (2 * lam + 2) / 6
        ic = inverse_coeffs(CoeffPair(a2, a3))
        assert ic.A2 == pytest.approx(-(1 + 2 * lam) / 2)
        assert ic.A3 == pytest.approx((2 * lam + 1) * (4 * lam + 1) / 6)


def test_normalization_guard():
    with pytest.raises(ValueError, match="A1"):
        InverseCoeffs(2.0, 0.0, 0.0)


def test_convex_class_coincidence():
    rng = np.random.default_rng(5)
    for _ in range(20):
        c1 = rng.uniform(0, 2)
        c2 = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
        a = coeffs_from_c(F0(0.5), c1, c2)
        b = coeffs_from_c(Cgamma(0.0, 0.0), c1, c2)
        assert a.a2 == pytest.approx(b.a2, abs=1e-14)
        assert a.a3 == pytest.approx(b.a3, abs=1e-14)


# ----------------------------------------------------------------------
# built maps


def test_constant_generator_gives_identity():
    f = build_function(Gnu(1.0), Series.one(9))
    np.testing.assert_allclose(f.coeffs, Series.z(8).coeffs, atol=1e-15)


def test_build_f0_extreme_matches_power_form():
    # generator p1 integrates to ((1-z)^(-2L) - 1)/(2L)
    for lam in (0.5, 0.8, 1.0):
        p = herglotz_series(HerglotzSpec(((1.0, 1.0),)), 9)
        f = build_function(F0(lam), p)
        closed = (pow_series(Series([1, -1], order=8), -2 * lam) - 1.0) / (2 * lam)
        np.testing.assert_allclose(f.coeffs, closed.coeffs, atol=1e-12)
        assert f[2] == pytest.approx((1 + 2 * lam) / 2, abs=1e-13)
        assert f[3] == pytest.approx((2 * lam + 1) * (2 * lam + 2) / 6, abs=1e-13)


def test_build_cgamma_extreme_quadratic_coefficient():
    params = Cgamma(0.5, 0.3)
    p = herglotz_series(HerglotzSpec(((1.0, 1.0),)), 9)
    f = build_function(params, p)
    assert f[2] == pytest.approx((1 - 0.3) * params.mu, abs=1e-13)


def test_build_requires_unit_constant_term():
    with pytest.raises(ValueError, match="constant term 1"):
        build_function(Gnu(1.0), Series([0.5, 1, 0]))


def test_pipeline_consistency_random_generators():
    rng = np.random.default_rng(19)
    for params in ALL_PARAMS:
        for _ in range(10):
            spec = sample_spec(rng, n_atoms=int(rng.integers(1, 4)))
            p = herglotz_series(spec, 9)
            f = build_function(params, p)
            cp = coeffs_from_c(params, p[1], p[2])
            assert abs(f[2] - cp.a2) <= 1e-10
            assert abs(f[3] - cp.a3) <= 1e-10
            finv = revert(f)
            ic = inverse_coeffs(cp)
            assert abs(finv[2] - ic.A2) <= 1e-10
            assert abs(finv[3] - ic.A3) <= 1e-10


def test_coefficient_functional_matches_pipeline():
    rng = np.random.default_rng(23)
    for params in ALL_PARAMS:
        spec = sample_spec(rng)
        p = herglotz_series(spec, 9)
        finv = revert(build_function(params, p))
        got2 = coefficient_functional(params, p[1], p[2], 2)
        assert got2 == pytest.approx(abs(finv[3]) - abs(finv[2]), abs=1e-10)
        got1 = coefficient_functional(params, p[1], p[2], 1)
        assert got1 == pytest.approx(abs(finv[2]) - 1.0, abs=1e-10)
    with pytest.raises(ValueError):
        coefficient_functional(Gnu(1.0), 1.0, 1.0, 3)


# ----------------------------------------------------------------------
# witnesses


def test_witness_ids_and_mismatch():
    assert witness_ids(Gnu(1.0)) == ("g1", "g2", "g3", "g4")
    with pytest.raises(ValueError, match="not defined"):
        witness_generator(F0(0.5), "g1")
    with pytest.raises(ValueError, match="not defined"):
        witness(Cgamma(0.0, 0.0), "f3")


def test_g1_power_form_up_to_rotation():
    # closed form ((1+z)^(1+nu) - 1)/(nu+1) is the z -> -z rotation of the
    # built map; coefficient moduli agree
    for nu in (0.4, 1.0):
        f, _ = witness(Gnu(nu), "g1")
        closed = (pow_series(Series([1, 1], order=8), 1 + nu) - 1.0) / (nu + 1)
        np.testing.assert_allclose(
            np.abs(f.coeffs), np.abs(closed.coeffs), atol=1e-12
        )
        assert abs(f[2]) == pytest.approx(nu / 2, abs=1e-13)


def test_g2_integral_form():
    for nu in (0.25, 1.0):
        f, finv = witness(Gnu(nu), "g2")
        closed = integrate(pow_series(Series([1, 0, -1], order=8), nu / 2))
        np.testing.assert_allclose(f.coeffs, closed.coeffs, atol=1e-12)
        # the built map has cubic coefficient -nu/6; its inverse +nu/6
        assert f[3] == pytest.approx(-nu / 6, abs=1e-13)
        assert finv[3] == pytest.approx(nu / 6, abs=1e-13)
        assert abs(finv[2]) <= 1e-13


def test_f2_odd_witness():
    lam = 0.65
    f, finv = witness(F0(lam), "f2")
    assert abs(f[2]) <= 1e-14
    assert f[3] == pytest.approx((2 * lam + 1) / 6, abs=1e-13)
    assert finv[3] == pytest.approx(-(2 * lam + 1) / 6, abs=1e-13)


def test_f3_half_lambda_inverse():
    f, finv = witness(F0(0.5), "f3", order=3)
    np.testing.assert_allclose(finv.coeffs, [0, 1, -0.5, 0], atol=1e-13)


def test_f3_general_lambda():
    lam = 0.9
    _, finv = witness(F0(lam), "f3")
    assert finv[2] == pytest.approx(
        -math.sqrt(1 + 2 * lam) / (2 * math.sqrt(2)), abs=1e-13
    )
    assert abs(finv[3]) <= 1e-13


def test_h2_even_witness_through_fifth_coefficient():
    params = Cgamma(0.5236, 0.3)
    m = (1 - params.alpha) * params.mu
    f, finv = witness(params, "h2", order=6)
    assert abs(f[2]) <= 1e-14
    assert f[3] == pytest.approx(m / 3, abs=1e-13)
    assert f[5] == pytest.approx(m * (m + 1) / 10, abs=1e-13)
    assert finv[3] == pytest.approx(-m / 3, abs=1e-13)


def test_h3_kills_cubic_inverse_coefficient():
    for params in (Cgamma(0.0, 0.0), Cgamma(math.pi / 4, 0.0), Cgamma(-0.8, 0.2)):
        _, finv = witness(params, "h3")
        t = abs(params.tau)
        want = -(1 - params.alpha) * params.mu / math.sqrt(t + 1)
        assert finv[2] == pytest.approx(want, abs=1e-12)
        assert abs(finv[3]) <= 1e-12


def test_h4_inverse_coefficients():
    # alpha = 1/2 puts |tau| = 1 for any gamma
    params = Cgamma(0.2, 0.5)
    t = abs(params.tau)
    assert t == pytest.approx(1.0, abs=1e-13)
    _, finv = witness(params, "h4")
    m = (1 - params.alpha) * params.mu
    assert finv[2] == pytest.approx(-3 * m / (2 * (t + 1)), abs=1e-12)
    want3 = m * params.tau * (5 - 4 * t) / (12 * t * (t + 1))
    assert finv[3] == pytest.approx(want3, abs=1e-12)


def test_h4_needs_large_enough_tau():
    # |tau| < 1/2 would force c1 > 2; the generator parameter check fires
    params = Cgamma(0.0, 0.75)
    assert abs(params.tau) < 0.5
    with pytest.raises(ValueError, match="q1"):
        witness_generator(params, "h4")


def test_h3_at_zero_tau_degenerates_to_extreme_point():
    params = Cgamma(0.0, 0.75)
    assert abs(params.tau) <= 1e-12
    gen = witness_generator(params, "h3")
    from uil.caratheodory import named_series

    np.testing.assert_allclose(
        named_series(gen, 4).coeffs, [1, 2, 2, 2, 2], atol=1e-12
    )


# ----------------------------------------------------------------------
# membership


def test_class_margin_positive_for_named_and_random_generators():
    rng = np.random.default_rng(31)
    for params in ALL_PARAMS:
        for wid in witness_ids(params):
            try:
                gen = witness_generator(params, wid)
            except ValueError:
                continue  # h4 outside its tau range
            assert np.min(class_margin(params, gen)) > -1e-9
        for _ in range(5):
            spec = sample_spec(rng)
            assert np.min(class_margin(params, spec)) > -1e-9


def test_class_margin_scales_with_re_p():
    # margin equals a positive multiple of Re p for every family
    params = F0(0.75)
    spec = HerglotzSpec(((1.0, 1.0),))
    from uil.caratheodory import herglotz_eval

    z = 0.95 * np.exp(2j * np.pi * np.arange(16) / 16)
    margin = class_margin(params, spec, radius=0.95, n_points=16)
    np.testing.assert_allclose(
        margin, (0.5 + 0.75) * herglotz_eval(spec, z).real, atol=1e-12
    )

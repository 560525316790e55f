"""Momentum-moment routes, reflection, closed forms, and appendix identities."""

import math
from fractions import Fraction

import pytest

from hydromoments import (
    ExactValue,
    Method,
    appendix_constants,
    appendix_integral_circular_exact,
    appendix_integrals,
    inverse_momentum,
    make_state,
    mean_momentum,
    p_moment,
    p_moment_circular,
    p_moment_double_sum,
    p_moment_even_closed,
    quad_p_moment,
    reflect,
)
from hydromoments.errors import NotCircular, OrderOutOfDomain, SingularDenominator
from hydromoments.momom import (
    breit_pauli_moment,
    dirac_slater_exchange_moment,
    interelectronic_repulsion_moment,
    kinetic_energy_moment,
)

GRID = [
    (D, n, l)
    for D in (2, 3, 4, 5, 7)
    for n in range(1, 5)
    for l in range(n)
]


def test_three_routes_agree_exactly():
    for D, n, l in GRID:
        s = make_state(D, n, l, 1.0)
        lo, hi = s.momentum_interval()
        for alpha in range(lo + 1, hi):
            single = p_moment(s, alpha, route="single").value
            assert p_moment(s, alpha, route="hyp5f4").value == single
            assert p_moment(s, alpha, route="double").value == single


def test_unknown_route_rejected():
    s = make_state(3, 2, 0, 1.0)
    with pytest.raises(ValueError):
        p_moment(s, 1, route="nope")
    with pytest.raises(ValueError):
        p_moment(s, 0.5, route="nope")


def test_second_moment_is_squared_energy_scale():
    for D, n, l in GRID:
        for Z in (1.0, 2.0):
            s = make_state(D, n, l, Z)
            expect = ExactValue((s.Z_exact / s.eta) ** 2)
            assert p_moment(s, 2).value == expect


def test_even_closed_forms_match_route():
    for D, n, l in GRID:
        s = make_state(D, n, l, 1.0)
        lo, hi = s.momentum_interval()
        for alpha in (0, 2, -2, 4, 6):
            if not lo < alpha < hi:
                continue
            try:
                closed = p_moment_even_closed(s, alpha)
            except SingularDenominator:
                continue
            assert closed.value == p_moment(s, alpha).value


def test_even_closed_rejects_odd_order():
    with pytest.raises(OrderOutOfDomain):
        p_moment_even_closed(make_state(3, 2, 0, 1.0), 3)


def test_reflection_identity_exact():
    for D, n, l in GRID:
        s = make_state(D, n, l, 1.0)
        lo, hi = s.momentum_interval()
        for alpha in range(lo + 1, hi):
            if not lo < 2 - alpha < hi:
                continue
            assert reflect(s, alpha).value == p_moment(s, 2 - alpha).value


def test_reflection_float_mode():
    s = make_state(4, 3, 1, 1.0)
    r = reflect(s, 0.75, mode="float")
    direct = p_moment(s, 1.25, mode="float")
    assert r.alpha == 1.25
    assert r.as_float() == pytest.approx(direct.as_float(), rel=1e-11)
    assert r.method is Method.REFLECTION


def test_circular_closed_form():
    for D, n in [(2, 1), (3, 1), (3, 4), (5, 3), (8, 2)]:
        s = make_state(D, n, n - 1, 1.0)
        lo, hi = s.momentum_interval()
        for alpha in range(lo + 1, hi):
            assert p_moment_circular(s, alpha).value == p_moment(s, alpha).value
        v = p_moment_circular(s, 0.5, mode="float").value
        assert v == pytest.approx(p_moment(s, 0.5).as_float(), rel=1e-12)


def test_circular_rejects_noncircular():
    with pytest.raises(NotCircular):
        p_moment_circular(make_state(3, 3, 0, 1.0), 1)


def test_domain_is_open_interval():
    s = make_state(3, 1, 0, 1.0)  # valid orders: (-3, 5)
    with pytest.raises(OrderOutOfDomain):
        p_moment(s, 5)
    with pytest.raises(OrderOutOfDomain):
        p_moment(s, -3)
    assert p_moment(s, 4.75, mode="float").as_float() > 0


def test_mean_momentum_families():
    # nS in 3D: <p> = 8 n Z / (pi (4n^2 - 1))
    for n in (1, 2, 5):
        s = make_state(3, n, 0, 1.0)
        v = mean_momentum(s).value
        assert v == ExactValue(Fraction(8 * n, 4 * n * n - 1), Fraction(-1))
        assert v == p_moment(s, 1).value
    # circular and generic states defer to the closed/route values
    c = make_state(3, 3, 2, 1.0)
    assert mean_momentum(c).value == p_moment(c, 1).value
    g = make_state(5, 4, 1, 1.0)
    assert mean_momentum(g).value == p_moment(g, 1).value
    assert mean_momentum(s, mode="float").as_float() == pytest.approx(
        p_moment(s, 1).as_float(), rel=1e-13
    )


def test_inverse_momentum_families():
    for n in (1, 2, 7):
        s = make_state(3, n, 0, 1.0)
        assert inverse_momentum(s).value == p_moment(s, -1).value
    assert inverse_momentum(make_state(3, 1, 0, 1.0)).value == ExactValue(
        Fraction(16, 3), Fraction(-1)
    )
    c = make_state(4, 3, 2, 1.0)
    assert inverse_momentum(c).value == p_moment(c, -1).value
    assert inverse_momentum(c, mode="float").as_float() == pytest.approx(
        p_moment(c, -1).as_float(), rel=1e-13
    )
    g = make_state(6, 3, 1, 1.0)
    assert inverse_momentum(g).value == p_moment(g, -1).value


def test_physical_wrappers():
    s = make_state(3, 2, 1, 1.0)
    assert dirac_slater_exchange_moment(s).value == p_moment(s, 1).value
    assert kinetic_energy_moment(s).value == p_moment(s, 2).value
    assert interelectronic_repulsion_moment(s).value == p_moment(s, 3).value
    assert breit_pauli_moment(s).value == p_moment(s, 4).value


def test_z_scaling():
    # <p^alpha> scales as Z^alpha
    s1 = make_state(4, 3, 1, 1.0)
    s2 = make_state(4, 3, 1, 2.0)
    for alpha in (-2, 1, 3):
        assert p_moment(s2, alpha).value == p_moment(s1, alpha).value * ExactValue(
            Fraction(2) ** alpha
        )


def test_float_routes_match_quadrature_oracle():
    for D, n, l in [(3, 3, 0), (2, 4, 1), (5, 4, 2), (7, 2, 0)]:
        s = make_state(D, n, l, 1.0)
        q = quad_p_moment(s, 1.3).value
        for route in ("single", "hyp5f4", "double"):
            v = p_moment(s, 1.3, mode="float", route=route).as_float()
            assert v == pytest.approx(q, rel=1e-11)
        assert p_moment_double_sum(s, 1.3).as_float() == pytest.approx(q, rel=1e-11)


def test_large_n_falls_back_to_quadrature():
    res = p_moment(make_state(3, 160, 0, 1.0), 0.5)
    assert res.method is Method.QUADRATURE
    assert math.isfinite(res.as_float()) and res.as_float() > 0


def test_appendix_constants_reproduce_momentum_moments():
    for n in range(1, 6):
        for l in range(n):
            s = make_state(3, n, l, 1.0)
            k_mean, k_inv = appendix_constants(s)
            I, J = appendix_integrals(s)
            assert k_mean.to_float() * I == pytest.approx(
                mean_momentum(s).value.to_float(), rel=1e-13
            )
            assert k_inv.to_float() * J == pytest.approx(
                inverse_momentum(s).value.to_float(), rel=1e-13
            )


def test_appendix_circular_integral():
    s = make_state(3, 1, 0, 1.0)
    assert appendix_integral_circular_exact(s) == ExactValue(Fraction(4, 3))
    with pytest.raises(NotCircular):
        appendix_integral_circular_exact(make_state(3, 2, 0, 1.0))

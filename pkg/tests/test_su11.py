import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fcoherent.linalg import mat_exp
from fcoherent.quadrature import GroupPoint
from fcoherent.su11 import (displacement_elements, exp_interior, unconjugated_phase, su11_chart,
                            su11_compose, su11_displacement, su11_ops, zeta_to_xi)

from conftest import taylor_exp


def test_kz_lowest():
    assert su11_ops(4).k_z[0, 0] == 0.75


def test_k_plus_element():
    # a^dag^2 / 2 on |1>: sqrt(2) sqrt(3) / 2 |3>
    rep = su11_ops(4)
    assert rep.k_plus[1, 0] == pytest.approx(math.sqrt(6) / 2)
    assert abs(rep.k_plus[1, 0] - 1.224745) < 1e-6


def test_k_plus_from_bosonic_ladder():
    N = 41
    a = np.diag(np.sqrt(np.arange(1, N)), 1)
    kp = (a.T @ a.T / 2)[1::2, 1::2]
    rep = su11_ops(20)
    np.testing.assert_allclose(rep.k_plus, kp[:20, :20], atol=1e-14)


def test_commutator_interior():
    rep = su11_ops(32)
    C = rep.k_minus @ rep.k_plus - rep.k_plus @ rep.k_minus
    assert np.abs(C[:31, :31] - 2 * rep.k_z[:31, :31]).max() <= 1e-12


def test_ops_reject_tiny():
    with pytest.raises(ValueError):
        su11_ops(1)


def test_zero_displacement():
    np.testing.assert_allclose(su11_displacement(0, su11_ops(10)), np.eye(10), atol=1e-15)


def test_lowest_element_value():
    D = su11_displacement(0.6, su11_ops(10))
    assert abs(D[0, 0] - 0.64 ** 0.75) < 1e-15
    assert abs(D[0, 0] - 0.7155418) < 1e-7


def test_phase_structure_against_exp():
    rep = su11_ops(128)
    z = 0.5 * np.exp(-1j * math.pi / 2)
    A = su11_displacement(z, rep, "exp")
    B = su11_displacement(z, rep, "closed-form")
    d = exp_interior(128, math.atanh(0.5))
    assert np.abs(A - B)[:d, :d].max() <= 1e-8
    # explicit e^{-i(m-n) phi} with phi = pi/2
    assert abs(np.angle(B[3, 1]) - np.angle(np.exp(-2j * math.pi / 2))) < 1e-12 or \
        abs(abs(np.angle(B[3, 1])) - math.pi) < 1e-12


def test_exp_path_small_case_matches_taylor():
    # small truncation keeps the Taylor terms from cancelling catastrophically
    rep = su11_ops(12)
    xi = 0.3 * np.exp(0.4j)
    G = xi * rep.k_plus - np.conj(xi) * rep.k_minus
    np.testing.assert_allclose(mat_exp(G), taylor_exp(G), atol=1e-11)


@pytest.mark.parametrize("r", [0.1, 0.4, 0.7])
def test_branches_and_methods_agree(r, rng):
    rep = su11_ops(96)
    z = r * np.exp(2j * np.pi * rng.uniform())
    d = exp_interior(96, math.atanh(r))
    A = su11_displacement(z, rep, "exp")
    B = su11_displacement(z, rep)
    assert np.abs(A - B)[:d, :d].max() <= 1e-8


def test_diagonal_from_both_branches():
    # the m >= n and m <= n formulas coincide on the diagonal
    z = 0.55 * np.exp(0.9j)
    for n in range(6):
        lower = displacement_elements(z, [n], [n])
        upper = displacement_elements(z, [n], [n])
        assert abs(lower - upper).max() <= 1e-12


def test_upper_triangle_is_conjugate_of_inverse():
    # <m|D(xi)|n> = conj(<n|D(-xi)|m>)
    z = 0.45 * np.exp(-0.3j)
    A = displacement_elements(z, np.arange(8), np.arange(8))
    B = displacement_elements(-z, np.arange(8), np.arange(8))
    np.testing.assert_allclose(A, B.conj().T, atol=1e-14)


def test_one_minus_r2_override():
    s = 30.0
    z = math.tanh(s)
    om = 1 / math.cosh(s) ** 2
    vals = displacement_elements(z, np.arange(4), np.arange(2), one_minus_r2=om)
    assert np.all(np.isfinite(vals)) and np.abs(vals).max() > 0


@pytest.mark.parametrize("r", [0.5, 0.7])
def test_unitarity_closed_form(r):
    # closed-form columns are exact; only their tails past row 256 are lost,
    # which for the leading 20 columns stays below 1e-9 up to |zeta| = 0.7
    rep = su11_ops(256)
    D = su11_displacement(r * np.exp(0.2j), rep)
    d = 20
    assert np.abs((D.conj().T @ D)[:d, :d] - np.eye(d)).max() <= 1e-9


def test_errors():
    with pytest.raises(ValueError):
        su11_displacement(1.0, su11_ops(4))
    with pytest.raises(ValueError):
        su11_displacement(0.999, su11_ops(16), "exp")
    with pytest.raises(ValueError):
        su11_compose(1.2, 0.1)


def test_chart_examples():
    assert su11_chart(GroupPoint(0, "su11-xi")).value == 0
    assert abs(abs(su11_chart(GroupPoint(1.0, "su11-xi")).value) - 0.7615942) < 1e-7
    with pytest.raises(ValueError):
        zeta_to_xi(1.0)


@settings(max_examples=100, deadline=None)
@given(r=st.floats(0, 0.999), phi=st.floats(-math.pi, math.pi))
def test_chart_round_trip(r, phi):
    z = r * np.exp(1j * phi)
    back = su11_chart(su11_chart(GroupPoint(z, "su11-zeta"))).value
    assert abs(back - z) <= 1e-12


def test_compose_examples():
    z3, _ = su11_compose(0.3 + 0.1j, -(0.3 + 0.1j))
    assert z3 == 0
    z3, phi = su11_compose(0.3, -0.6)
    assert phi == 0
    assert unconjugated_phase(0.3, -0.6) == 0
    assert abs(z3) < 1


def test_compose_matrix_identity(rng):
    rep = su11_ops(96)
    D = lambda z: mat_exp(complex(zeta_to_xi(z)) * rep.k_plus
                          - np.conj(complex(zeta_to_xi(z))) * rep.k_minus)
    for _ in range(10):
        z1, z2 = 0.7 * np.sqrt(rng.uniform(size=2)) * np.exp(2j * np.pi * rng.uniform(size=2))
        z3, phi = su11_compose(z1, z2)
        assert abs(z3) < 1
        d = exp_interior(96, math.atanh(abs(z1)) + math.atanh(abs(z2)))
        assert np.abs(D(z1) @ D(z2) - D(z3) @ mat_exp(1j * phi * rep.k_z))[:d, :d].max() <= 1e-8


def test_unconjugated_phase_not_real_for_complex_inputs():
    phi = unconjugated_phase(0.5 * np.exp(1.1j), 0.6 * np.exp(-0.4j))
    assert abs(phi.imag) > 0.1

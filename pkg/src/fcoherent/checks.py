"""Seeded sweeps of the composition laws and measure invariance.

Every function returns the worst residual over the sweep together with the
per-sample residuals, so callers can both gate and report.
"""
import numpy as np

from . import heisenberg, su11, su2
from .linalg import mat_exp
from .quadrature import measure_invariance_residual, su11_density, su2_density


def _random_points(rng, count, radius):
    r = radius * np.sqrt(rng.uniform(0, 1, count))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, count))


def hw_composition(pairs=50, seed=0, radius=2.0, n_trunc=64):
    """max |D^dag(b) D(a) - phase D(a - b)|, both sides via mat_exp.

    Compared on the block trusted for |a| + |b|, which bounds every
    displacement in the product and the shift.
    """
    rng = np.random.default_rng(seed)
    rep = heisenberg.ladder_ops(n_trunc)
    out = []
    for a, b in zip(_random_points(rng, pairs, radius), _random_points(rng, pairs, radius)):
        shift, phase = heisenberg.hw_compose(b, a)
        lhs = heisenberg.displacement(b, rep, "exp").conj().T @ heisenberg.displacement(a, rep, "exp")
        rhs = phase * mat_exp(shift * rep.a_dag - np.conj(shift) * rep.a)
        d = heisenberg.exp_interior(n_trunc, abs(a) + abs(b))
        out.append(float(np.abs(lhs - rhs)[:d, :d].max()))
    return max(out), out


def su2_composition(pairs=50, seed=0, radius=2.0, spins=(0.5, 1, 1.5, 2, 2.5, 3)):
    rng = np.random.default_rng(seed)
    out = []
    for S in spins:
        rep = su2.spin_ops(S)
        for z1, z2 in zip(_random_points(rng, pairs, radius), _random_points(rng, pairs, radius)):
            z3, phi = su2.su2_compose(z1, z2)
            lhs = su2.su2_displacement(su2.zeta_to_xi(z1), rep) @ su2.su2_displacement(su2.zeta_to_xi(z2), rep)
            rhs = su2.su2_displacement(su2.zeta_to_xi(z3), rep) @ mat_exp(1j * phi * rep.s_z)
            out.append(float(np.abs(lhs - rhs).max()))
    return max(out), out


def su11_composition(pairs=50, seed=0, radius=0.7, n_levels=96):
    """Both sides via truncated exponentials, compared on the block trusted
    for the combined squeeze s1 + s2 (an upper bound on s3)."""
    rng = np.random.default_rng(seed)
    rep = su11.su11_ops(n_levels)
    out = []

    def D(z):
        xi = complex(su11.zeta_to_xi(z))
        return mat_exp(xi * rep.k_plus - xi.conjugate() * rep.k_minus)

    for z1, z2 in zip(_random_points(rng, pairs, radius), _random_points(rng, pairs, radius)):
        z3, phi = su11.su11_compose(z1, z2)
        lhs = D(z1) @ D(z2)
        rhs = D(z3) @ mat_exp(1j * phi * rep.k_z)
        d = su11.exp_interior(n_levels, float(np.arctanh(abs(z1)) + np.arctanh(abs(z2))))
        out.append(float(np.abs(lhs - rhs)[:d, :d].max()))
    return max(out), out


def su11_unconjugated_phase_residual(pairs=20, seed=0, radius=0.7, n_levels=96):
    """Same identity with the unconjugated-numerator phase; large for complex inputs."""
    rng = np.random.default_rng(seed)
    rep = su11.su11_ops(n_levels)
    out = []

    def D(z):
        xi = complex(su11.zeta_to_xi(z))
        return mat_exp(xi * rep.k_plus - xi.conjugate() * rep.k_minus)

    for z1, z2 in zip(_random_points(rng, pairs, radius), _random_points(rng, pairs, radius)):
        z3, _ = su11.su11_compose(z1, z2)
        phi = su11.unconjugated_phase(z1, z2)
        d = su11.exp_interior(n_levels, float(np.arctanh(abs(z1)) + np.arctanh(abs(z2))))
        diff = D(z1) @ D(z2) - D(z3) @ mat_exp(1j * phi * rep.k_z)
        out.append(float(np.abs(diff)[:d, :d].max()))
    return max(out), out


def _pole_distance(z1, z2):
    """Distance from z2 to 1/conj(z1), the pole of both composition maps."""
    return float("inf") if z1 == 0 else abs(z2 - 1 / np.conj(z1))


def su2_measure_invariance(pairs=100, seed=0, radius=2.0):
    rng = np.random.default_rng(seed)
    out = [measure_invariance_residual(su2_density, lambda z, z1=z1: su2.su2_compose(z1, z)[0], z2,
                                       scale=_pole_distance(z1, z2))
           for z1, z2 in zip(_random_points(rng, pairs, radius), _random_points(rng, pairs, radius))]
    return max(out), out


def su11_measure_invariance(pairs=100, seed=0, radius=0.9):
    """The step is also kept inside the unit disc."""
    rng = np.random.default_rng(seed)
    out = [measure_invariance_residual(su11_density, lambda z, z1=z1: su11.su11_compose(z1, z)[0], z2,
                                       scale=min(_pole_distance(z1, z2), 1 - abs(z2)))
           for z1, z2 in zip(_random_points(rng, pairs, radius), _random_points(rng, pairs, radius))]
    return max(out), out

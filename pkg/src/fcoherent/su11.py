"""Odd-sector bosonic realization of SU(1,1).

K_+ = a^dag^2 / 2, K_- = a^2 / 2, K_z = (a^dag a + 1/2) / 2 restricted to
|1>, |3>, |5>, ...; basis index n stands for |2n+1> (Bargmann index 3/4).
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import eval_jacobi, gammaln

from .linalg import mat_exp
from .quadrature import GroupPoint, SU11_XI, SU11_ZETA

BARGMANN_INDEX = 0.75


@dataclass(frozen=True, eq=False)
class SU11Rep:
    n_levels: int
    k_plus: np.ndarray
    k_minus: np.ndarray
    k_z: np.ndarray


def su11_ops(n_levels):
    if n_levels < 2:
        raise ValueError("n_levels must be at least 2")
    n = np.arange(n_levels - 1)
    kp = np.diag(0.5 * np.sqrt((2 * n + 2) * (2 * n + 3)), -1).astype(complex)
    kz = np.diag(np.arange(n_levels) + BARGMANN_INDEX).astype(complex)
    return SU11Rep(n_levels, kp, kp.conj().T.copy(), kz)


def xi_to_zeta(xi):
    xi = np.asarray(xi, dtype=complex)
    return np.tanh(np.abs(xi)) * np.exp(1j * np.angle(xi))


def zeta_to_xi(zeta):
    zeta = np.asarray(zeta, dtype=complex)
    if np.any(np.abs(zeta) >= 1):
        raise ValueError("|zeta| must be below 1")
    return np.arctanh(np.abs(zeta)) * np.exp(1j * np.angle(zeta))


def su11_chart(p):
    if p.chart == SU11_XI:
        return GroupPoint(complex(xi_to_zeta(p.value)), SU11_ZETA)
    if p.chart == SU11_ZETA:
        return GroupPoint(complex(zeta_to_xi(p.value)), SU11_XI)
    raise ValueError(f"not an SU(1,1) chart: {p.chart}")


def exp_interior(n_levels, s):
    """Block trusted for the truncated squeeze exponential at ``s = |xi|``.

    Fitted on n_levels in {96, 192}: the 1e-10-accurate block shrinks like
    ``n_levels * exp(-1.4 s)``; 0.9 and exponent 1.5 add margin.
    """
    return int(0.9 * n_levels * math.exp(-1.5 * s)) - 2


def displacement_elements(zeta, rows, cols, one_minus_r2=None):
    """Closed-form <2m+1|D(xi)|2n+1> for m in ``rows``, n in ``cols``.

    For zeta = |zeta| e^{-i phi}, every element carries e^{-i(m-n) phi};
    for m < n the radial factor picks up (-1)^{n-m}.  ``one_minus_r2`` may
    supply ``1 - |zeta|^2`` exactly (e.g. ``sech(s)^2``) where forming it from
    ``zeta`` would cancel.
    """
    zeta = np.asarray(zeta, dtype=complex)
    r = np.abs(zeta)[..., None, None]
    u = zeta[..., None, None] / np.where(r > 0, r, 1)  # e^{-i phi}
    if one_minus_r2 is None:
        om = (1 - r) * (1 + r)
    else:
        om = np.asarray(one_minus_r2, dtype=float)[..., None, None]
    m = np.asarray(rows)[:, None]
    n = np.asarray(cols)[None, :]
    lo, hi = np.minimum(m, n), np.maximum(m, n)
    d = hi - lo
    log_g = 0.5 * (gammaln(lo + 1) + gammaln(hi + 1.5) - gammaln(hi + 1) - gammaln(lo + 1.5))
    sign = np.where(n > m, (-1.0) ** d, 1.0)
    phase = np.where(m >= n, u ** d, u.conj() ** d)
    radial = np.exp(log_g) * r ** d * om ** 0.75 * eval_jacobi(lo, d, 0.5, 1 - 2 * (1 - om))
    return sign * phase * radial


def su11_displacement(zeta, rep, method="closed-form"):
    """Matrix of D(xi) = exp(xi K_+ - xi^* K_-) with xi from the disc chart."""
    zeta = complex(zeta)
    if abs(zeta) >= 1:
        raise ValueError("|zeta| must be below 1")
    if method == "closed-form":
        idx = np.arange(rep.n_levels)
        return displacement_elements(zeta, idx, idx)
    if method == "exp":
        xi = complex(zeta_to_xi(zeta))
        if exp_interior(rep.n_levels, abs(xi)) < 1:
            raise ValueError(f"artanh|zeta| = {abs(xi):.3g} exceeds the truncation "
                             f"budget of {rep.n_levels} levels")
        return mat_exp(xi * rep.k_plus - xi.conjugate() * rep.k_minus)
    raise ValueError(f"unknown method {method!r}")


def su11_compose(zeta1, zeta2):
    """Return (zeta3, Phi) with D(xi1) D(xi2) = D(xi3) exp(i Phi K_z).

    The phase is arg[(1 + zeta1 conj(zeta2)) / (1 + conj(zeta1) zeta2)],
    a unit-modulus ratio; see :func:`unconjugated_phase` for the unconjugated
    numerator, which fails the matrix identity for complex inputs.
    """
    zeta1, zeta2 = complex(zeta1), complex(zeta2)
    if abs(zeta1) >= 1 or abs(zeta2) >= 1:
        raise ValueError("inputs must lie inside the unit disc")
    den = 1 + zeta1.conjugate() * zeta2
    ratio = (1 + zeta1 * zeta2.conjugate()) / den
    return (zeta1 + zeta2) / den, math.atan2(ratio.imag, ratio.real)


def unconjugated_phase(zeta1, zeta2):
    """(1/i) ln[(1 + zeta1 zeta2) / (1 + conj(zeta1) zeta2)], complex in general."""
    zeta1, zeta2 = complex(zeta1), complex(zeta2)
    return complex(np.log((1 + zeta1 * zeta2) / (1 + zeta1.conjugate() * zeta2)) / 1j)

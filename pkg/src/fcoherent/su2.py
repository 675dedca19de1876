"""Spin-S representation of SU(2).

Basis ordering is m = -S, -S+1, ..., +S, so the lowest weight |S,-S> is
index 0 and S_+ is strictly lower triangular.  Matrices printed in the usual
(+S first) ordering are the reverse permutation of these.
"""
import math
from dataclasses import dataclass

import numpy as np

from .linalg import mat_exp
from .quadrature import GroupPoint, SU2_XI, SU2_ZETA


@dataclass(frozen=True, eq=False)
class SpinRep:
    S: float
    s_plus: np.ndarray
    s_minus: np.ndarray
    s_z: np.ndarray

    @property
    def dim(self):
        return self.s_z.shape[0]

    @property
    def m_values(self):
        return np.arange(self.dim) - self.S

    def index(self, m):
        """Basis index of |S,m>; raises for m outside -S..S."""
        k = m + self.S
        if abs(k - round(k)) > 1e-12 or not 0 <= round(k) < self.dim:
            raise ValueError(f"m={m} is not a weight of spin {self.S}")
        return int(round(k))


def spin_ops(S):
    twice = 2 * float(S)
    if twice < 0 or abs(twice - round(twice)) > 1e-12:
        raise ValueError(f"spin must be a nonnegative half-integer, got {S}")
    S = round(twice) / 2
    m = np.arange(round(twice) + 1) - S
    sp = np.diag(np.sqrt(S * (S + 1) - m[:-1] * (m[:-1] + 1)), -1).astype(complex)
    return SpinRep(S, sp, sp.conj().T.copy(), np.diag(m).astype(complex))


def xi_to_zeta(xi):
    xi = np.asarray(xi, dtype=complex)
    if np.any(np.abs(xi) >= np.pi / 2):
        raise ValueError("|xi| must be below pi/2 for the zeta chart")
    return np.tan(np.abs(xi)) * np.exp(1j * np.angle(xi))


def zeta_to_xi(zeta):
    zeta = np.asarray(zeta, dtype=complex)
    return np.arctan(np.abs(zeta)) * np.exp(1j * np.angle(zeta))


def su2_chart(p):
    """Convert a GroupPoint between the su2-xi and su2-zeta charts."""
    if p.chart == SU2_XI:
        return GroupPoint(complex(xi_to_zeta(p.value)), SU2_ZETA)
    if p.chart == SU2_ZETA:
        return GroupPoint(complex(zeta_to_xi(p.value)), SU2_XI)
    raise ValueError(f"not an SU(2) chart: {p.chart}")


def su2_displacement(xi, rep):
    """D(xi) = exp(xi S_+ - xi^* S_-).  ``xi`` may be an array of points."""
    xi = np.asarray(xi, dtype=complex)[..., None, None]
    return mat_exp(xi * rep.s_plus - xi.conj() * rep.s_minus)


def su2_compose(zeta1, zeta2):
    """Return (zeta3, Phi) with D(xi1) D(xi2) = D(xi3) exp(i Phi S_z).

    Phi = (1/i) ln[(1 - zeta1 conj(zeta2)) / (1 - conj(zeta1) zeta2)] on the
    branch 2 arg(1 - zeta1 conj(zeta2)), which lies in (-2 pi, 2 pi].  The
    principal branch differs by 2 pi when Re(1 - zeta1 conj(zeta2)) < 0, and
    exp(2 pi i S_z) = -1 for half-integer S, so the branch matters there.
    """
    zeta1, zeta2 = complex(zeta1), complex(zeta2)
    den = 1 - zeta1.conjugate() * zeta2
    if abs(den) < 1e-14:
        raise ZeroDivisionError("1 - conj(zeta1) zeta2 vanishes")
    num = 1 - zeta1 * zeta2.conjugate()
    return (zeta1 + zeta2) / den, 2 * math.atan2(num.imag, num.real)


def lowest_weight_overlap(zeta, S):
    """|<S,-S|zeta;-S>| = (1 + |zeta|^2)^{-S}."""
    return (1 + np.abs(zeta) ** 2) ** (-S)

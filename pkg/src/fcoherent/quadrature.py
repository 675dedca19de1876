"""Product quadrature grids for the three invariant measures.

Weights carry the raw measure (density times quadrature weight).  Group
prefactors such as ``1/pi`` are applied by the caller.

=========  =========================  ===========================
group      measure                    radial scheme
=========  =========================  ===========================
HW         d^2 alpha                  Gauss-Legendre in r on [0, R]
SU(2)      d^2 zeta / (1+|zeta|^2)^2  Gauss-Legendre in cos(theta)
SU(1,1)    d^2 zeta / (1-|zeta|^2)^2  Gauss-Legendre in s = artanh|zeta|
=========  =========================  ===========================

Angles are always uniform (trapezoid), exact for trigonometric polynomials
of degree below ``n_phi``.
"""
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

PLANE = "plane-alpha"
SU2_ZETA = "su2-zeta"
SU2_XI = "su2-xi"
SU11_ZETA = "su11-zeta"
SU11_XI = "su11-xi"
CHARTS = (PLANE, SU2_ZETA, SU2_XI, SU11_ZETA, SU11_XI)


class TruncationWarning(UserWarning):
    """A domain cutoff is smaller than the tail rule asks for."""


@dataclass(frozen=True)
class GroupPoint:
    value: complex
    chart: str

    def __post_init__(self):
        if self.chart not in CHARTS:
            raise ValueError(f"unknown chart {self.chart!r}")
        if self.chart == SU11_ZETA and abs(self.value) >= 1:
            raise ValueError("su11-zeta points must lie inside the unit disc")


@dataclass(frozen=True, eq=False)
class MeasureGrid:
    """Quadrature nodes on one chart.

    ``points`` holds the complex chart coordinates; ``radial`` holds the
    radial variable the rule was built in (r, theta or s), which callers use
    to evaluate ``1 -/+ |zeta|^2`` without cancellation near the boundary.
    """
    points: np.ndarray
    weights: np.ndarray
    chart: str
    radial: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.points) != len(self.weights):
            raise ValueError("points and weights differ in length")
        if not (np.all(np.isfinite(self.weights)) and np.all(self.weights > 0)):
            raise ValueError("weights must be positive and finite")

    def __len__(self):
        return len(self.points)

    @property
    def nodes(self):
        return [GroupPoint(complex(z), self.chart) for z in self.points]

    @property
    def total_weight(self):
        return math.fsum(self.weights)


def _gauss(n, lo, hi):
    x, w = np.polynomial.legendre.leggauss(n)
    half = 0.5 * (hi - lo)
    return lo + half * (x + 1.0), half * w


def _angles(n_phi):
    return 2.0 * np.pi * np.arange(n_phi) / n_phi


def plane_grid(R, n_r, n_phi, n_occ=None):
    """Polar grid on the disc ``|alpha| <= R`` for the flat measure d^2 alpha.

    If ``n_occ`` (largest occupied Fock level) is given, warn when ``R`` is
    below :func:`plane_radius`.
    """
    if not R > 0:
        raise ValueError("R must be positive")
    if n_r < 2 or n_phi < 4:
        raise ValueError("need n_r >= 2 and n_phi >= 4")
    r, wr = _gauss(n_r, 0.0, R)
    phi = _angles(n_phi)
    points = (r[:, None] * np.exp(1j * phi)[None, :]).ravel()
    weights = np.repeat(wr * r * (2.0 * np.pi / n_phi), n_phi)
    if n_occ is not None and R < plane_radius(n_occ):
        warnings.warn(f"R={R} below tail rule {plane_radius(n_occ):.3f} "
                      f"for level {n_occ}", TruncationWarning, stacklevel=2)
    return MeasureGrid(points, weights, PLANE, np.repeat(r, n_phi),
                       dict(R=R, n_r=n_r, n_phi=n_phi))


def sphere_grid(n_theta, n_phi):
    """Grid on the whole zeta-plane via zeta = tan(theta/2) e^{-i phi}.

    The SU(2) density pulls back to ``sin(theta) dtheta dphi / 4``, so a
    Gauss-Legendre rule in cos(theta) integrates it with no cutoff.
    """
    if n_theta < 2 or n_phi < 4:
        raise ValueError("need n_theta >= 2 and n_phi >= 4")
    c, wc = _gauss(n_theta, -1.0, 1.0)
    theta = np.arccos(c)
    phi = _angles(n_phi)
    points = (np.tan(theta / 2)[:, None] * np.exp(-1j * phi)[None, :]).ravel()
    weights = np.repeat(0.25 * wc * (2.0 * np.pi / n_phi), n_phi)
    return MeasureGrid(points, weights, SU2_ZETA, np.repeat(theta, n_phi),
                       dict(n_theta=n_theta, n_phi=n_phi))


def disc_grid(s_max, n_s, n_phi, max_level=None, fiducial_level=0):
    """Grid on the disc ``|zeta| < tanh(s_max)``.

    With ``|zeta| = tanh(s)`` the density becomes ``sinh(s) cosh(s) ds dphi``,
    which removes the boundary blow-up.  ``radial`` stores ``s``.
    """
    if not s_max > 0:
        raise ValueError("s_max must be positive")
    if n_s < 2 or n_phi < 4:
        raise ValueError("need n_s >= 2 and n_phi >= 4")
    s, ws = _gauss(n_s, 0.0, s_max)
    phi = _angles(n_phi)
    points = (np.tanh(s)[:, None] * np.exp(-1j * phi)[None, :]).ravel()
    weights = np.repeat(ws * np.sinh(s) * np.cosh(s) * (2.0 * np.pi / n_phi), n_phi)
    if max_level is not None:
        need = disc_smax(max_level=max_level, fiducial_level=fiducial_level)
        if s_max < need:
            warnings.warn(f"s_max={s_max} below tail rule {need:.2f}",
                          TruncationWarning, stacklevel=2)
    return MeasureGrid(points, weights, SU11_ZETA, np.repeat(s, n_phi),
                       dict(s_max=s_max, r_max=math.tanh(s_max), n_s=n_s, n_phi=n_phi))


def plane_volume(R):
    return math.pi * R * R


def sphere_volume():
    return math.pi


def disc_volume(s_max):
    return math.pi * math.sinh(s_max) ** 2


def plane_radius(n_occ, tol=1e-12):
    """Smallest R with exp(-R^2/2) R^n / sqrt(n!) < tol, to 1e-3."""
    def bound(R):
        return -0.5 * R * R + n_occ * math.log(R) - 0.5 * math.lgamma(n_occ + 1)

    target = math.log(tol)
    lo, hi = math.sqrt(max(n_occ, 1)), math.sqrt(max(n_occ, 1)) + 1.0
    while bound(hi) >= target:
        hi *= 1.5
    while hi - lo > 1e-3:
        mid = 0.5 * (lo + hi)
        if bound(mid) < target:
            hi = mid
        else:
            lo = mid
    return hi


def disc_smax(tol=1e-10, max_level=0, fiducial_level=0):
    """Cutoff in s leaving an SU(1,1) tail below ``tol``.

    For Bargmann index 3/4 the squared matrix element times the measure
    decays like ``2 G e^{-s}``, with ``G`` the gamma ratio of the closed-form
    element times the squared boundary value of its Jacobi factor.
    """
    m, n = max(max_level, fiducial_level), min(max_level, fiducial_level)
    log_g = (gammaln(n + 1) + gammaln(m + 1.5) - gammaln(m + 1) - gammaln(n + 1.5)
             + 2 * (gammaln(n + 1.5) - gammaln(n + 1) - gammaln(1.5)))
    return math.log(2.0 / tol) + float(log_g)


def su2_density(z):
    return 1.0 / (1.0 + np.abs(z) ** 2) ** 2


def su11_density(z):
    return 1.0 / (1.0 - np.abs(z) ** 2) ** 2


def measure_invariance_residual(density, mapping, z, h=1e-2, scale=1.0):
    """Relative mismatch ``|rho(z) - rho(f(z)) det J_f(z)| / rho(z)``.

    ``J_f`` is the real 2x2 Jacobian of ``mapping`` at ``z`` from sixth
    order central differences with step ``h * scale``.  Pass the distance
    from ``z`` to the nearest singularity of the map as ``scale``; a fixed
    step loses accuracy near the pole of a Mobius map.
    """
    step = h * min(1.0, scale)
    stencil = ((3, 1 / 60), (2, -9 / 60), (1, 45 / 60))

    def d(direction):
        return sum(w * (mapping(z + k * direction) - mapping(z - k * direction))
                   for k, w in stencil) / step

    dx, dy = d(step), d(1j * step)
    det = dx.real * dy.imag - dx.imag * dy.real
    lhs = density(z)
    return float(abs(lhs - density(mapping(z)) * det) / lhs)

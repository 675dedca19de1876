"""Generalized Q-function Q(z) = Tr[rho D(z) rho0 D(z)^dag]."""
import hashlib
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .quadrature import TruncationWarning
from .verifier import (WeightOperator, _check_inputs, _dim, cartan_commutes,
                       cartan_generator, displacement_columns, group_prefactor)


@dataclass(frozen=True, eq=False)
class QGrid:
    points: np.ndarray
    values: np.ndarray
    group: str
    rho_hash: str
    rho0_hash: str
    warnings: list = field(default_factory=list)


def _digest(m):
    return hashlib.sha256(np.ascontiguousarray(m, dtype=complex).tobytes()).hexdigest()[:16]


def _group_name(rep):
    return type(rep).__name__


def _q_values(rep, rho, rho0, points, radial=None):
    L0 = rho0.shape[0]
    L = rho.shape[0]
    if max(L, L0) > _dim(rep):
        raise ValueError("density matrix larger than the representation")
    C = displacement_columns(rep, points, L0, radial)[:, :L, :]
    # Tr[rho C rho0 C^dag] with C restricted to the rows rho lives on
    X = np.einsum("nik,kl,njl->nij", C, rho0, C.conj(), optimize=True)
    q = np.einsum("ji,nij->n", rho, X)
    if np.abs(q.imag).max(initial=0.0) > 1e-12:
        raise ArithmeticError(f"Q has imaginary part {np.abs(q.imag).max():.3e}")
    return q.real


def q_function(rho, rho0, points, rep):
    """Q at each point of ``points`` (chart coordinates of ``rep``'s group).

    Both inputs must be density matrices on the lowest levels of ``rep``.
    """
    rho = WeightOperator.density(rho).matrix
    rho0 = WeightOperator.density(rho0).matrix
    points = np.atleast_1d(np.asarray(points, dtype=complex))
    return QGrid(points, _q_values(rep, rho, rho0, points), _group_name(rep),
                 _digest(rho), _digest(rho0))


def q_normalization(rho, rho0, grid, rep, constant=None):
    """``constant * sum_i weight_i Q(z_i)``; equals 1 when the resolution holds.

    ``constant`` defaults to the group prefactor; pass a measured constant
    for SU(2).  A non-commuting ``rho0`` on SU(2)/SU(1,1) only warns.
    Returns ``(value, warnings)``.
    """
    w0 = WeightOperator.density(rho0)
    rho = WeightOperator.density(rho).matrix
    _check_inputs(rep, w0, grid)
    notes = []
    if cartan_generator(rep) is not None:
        ok, residual = cartan_commutes(w0, rep)
        if not ok:
            notes.append(f"rho0 does not commute with the Cartan generator "
                         f"(residual {residual:.3e})")
            warnings.warn(notes[-1], TruncationWarning, stacklevel=2)
    q = _q_values(rep, rho, w0.matrix, grid.points, grid.radial)
    c = group_prefactor(rep) if constant is None else constant
    return c * math.fsum(grid.weights * q), notes

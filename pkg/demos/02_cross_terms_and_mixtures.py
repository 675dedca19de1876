"""
Off-diagonal weights and density matrices
=========================================

Sandwiching |m><n| between displacements and integrating gives zero unless
m equals n.  By linearity, any density matrix in place of the fiducial
projector also yields the identity.
"""
import numpy as np

from fcoherent import WeightOperator, assemble_resolution, ladder_ops, plane_grid
from fcoherent.quadrature import plane_radius

hw = ladder_ops(64)
grid = plane_grid(plane_radius(14), 80, 128)

for m, n in [(0, 1), (1, 3), (2, 2)]:
    fm, fn = np.eye(4)[m], np.eye(4)[n]
    r = assemble_resolution(hw, WeightOperator.cross(fm, fn), grid)
    largest = np.abs(r.assembled[:10, :10]).max()
    print(f"|{m}><{n}|: largest interior entry {largest:.3f}, deviation {r.max_dev:.1e}")

# For a general pair the integral is the overlap <f2|f1> times the identity.
f1 = np.array([0, 1j])
f2 = np.array([0.6, 0.8])
r = assemble_resolution(hw, WeightOperator.cross(f1, f2), grid)
print("overlap <f2|f1> =", np.vdot(f2, f1), " assembled (0,0) =", np.round(r.assembled[0, 0], 10))

# A random mixed state on six levels.
rng = np.random.default_rng(7)
G = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
rho = G @ G.conj().T
rho /= np.trace(rho)
r = assemble_resolution(hw, WeightOperator.density(rho), grid)
print("mixed weight deviation:", f"{r.max_dev:.1e}")

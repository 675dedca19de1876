"""
A generalized Q-function
========================

Q(z) = Tr[rho D(z) rho0 D(z)^dag] is a nonnegative function on the group
chart.  It integrates to one for every rho0 in the oscillator case.
"""
import numpy as np

from fcoherent import plane_grid
from fcoherent.heisenberg import ladder_ops
from fcoherent.qdist import q_function, q_normalization
from fcoherent.quadrature import plane_radius

hw = ladder_ops(64)
rng = np.random.default_rng(3)


def random_density(size):
    G = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    rho = G @ G.conj().T
    return rho / np.trace(rho)


# The familiar Husimi function of the vacuum: exp(-|z|^2).
zs = np.linspace(0, 2, 5)
q = q_function(np.eye(1), np.eye(1), zs, hw)
for z, v in zip(zs, q.values):
    print(f"Q(|0>, z={z:.1f}) = {v:.6f}   exp(-z^2) = {np.exp(-z * z):.6f}")

# Arbitrary reference states rho0 still give unit normalization.
grid = plane_grid(plane_radius(14), 80, 128)
rho = random_density(4)
for _ in range(3):
    value, _ = q_normalization(rho, random_density(6), grid, hw)
    print(f"normalization with a random rho0: {value:.12f}")

# A coarse map of Q on a square, as one might hand to a plotting library.
x = np.linspace(-3, 3, 7)
X, Y = np.meshgrid(x, x)
vals = q_function(rho, random_density(3), (X + 1j * Y).ravel(), hw).values.reshape(X.shape)
print(np.round(vals, 3))

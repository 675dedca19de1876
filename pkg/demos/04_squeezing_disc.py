"""
SU(1,1) on the odd oscillator levels
====================================

The squeezing group acts on |1>, |3>, |5>, ... with Bargmann index 3/4.
Its invariant measure on the unit disc has infinite volume, and the
integrand decays only like exp(-s) in the hyperbolic radius s.  The cutoff
therefore matters a great deal: compare a short and a long one.
"""
import warnings

import numpy as np

from fcoherent import WeightOperator, assemble_resolution, disc_grid, su11_ops
from fcoherent.quadrature import disc_smax

rep = su11_ops(32)
probes = [0.3, 0.3j]
print("tail rule suggests s_max =", round(disc_smax(1e-10, max_level=7), 2))

for s_max in (5.0, 15.0, 25.0):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        r = assemble_resolution(rep, WeightOperator.pure([1.0]), disc_grid(s_max, 120, 64),
                                d=8, probe_points=probes)
    probe = r.diagonal_probe[0][1].real
    print(f"s_max={s_max:4.1f}: max deviation {r.max_dev:.2e}, probe at 0.3 = {probe:.10f}")

# The matrix elements themselves come from a Jacobi-polynomial closed form;
# the truncated exponential agrees with it on the leading block.
from fcoherent.su11 import exp_interior, su11_displacement
big = su11_ops(96)
z = 0.6 * np.exp(0.4j)
d = exp_interior(96, np.arctanh(abs(z)))
diff = su11_displacement(z, big, "exp") - su11_displacement(z, big)
print(f"closed form vs matrix exponential on a {d}x{d} block: {np.abs(diff[:d, :d]).max():.1e}")

"""
Resolving the identity with displaced Fock states
=================================================

Glauber coherent states integrate to the identity over the plane.  The same
holds when the vacuum is replaced by any normalized fiducial state, which we
check here by quadrature.
"""
import numpy as np

from fcoherent import WeightOperator, assemble_resolution, ladder_ops, plane_grid
from fcoherent.quadrature import plane_radius

# A 64-level oscillator.  Only the first few columns of each displacement are
# ever needed, and they come from the Laguerre closed form, so 64 is just the
# size of the assembled matrix.
hw = ladder_ops(64)

# The radius is chosen so the Gaussian tail of every entry in the compared
# 10x10 block, for fiducials below level 6, is under 1e-12.
R = plane_radius(14)
grid = plane_grid(R, n_r=80, n_phi=128)
print(f"plane radius {R:.2f}, {len(grid)} nodes")

# Start with the vacuum.
report = assemble_resolution(hw, WeightOperator.pure([1.0]), grid)
print("vacuum fiducial      max deviation:", f"{report.max_dev:.2e}")

# Now a few other fiducials: an excited level and a random superposition.
rng = np.random.default_rng(1)
f = rng.normal(size=6) + 1j * rng.normal(size=6)
f /= np.linalg.norm(f)
for name, fid in [("|3>", np.eye(4)[3]), ("random on |0>..|5>", f)]:
    report = assemble_resolution(hw, WeightOperator.pure(fid), grid)
    print(f"{name:20s} max deviation: {report.max_dev:.2e}")

# The top-left block of the assembled operator is the identity.
print(np.round(report.assembled[:4, :4].real, 12))

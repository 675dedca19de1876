"""Finite-dimensional f-coherent states and numerical resolution-of-identity checks
for the Heisenberg-Weyl, SU(2) and SU(1,1) groups."""

__version__ = "0.1.0"

from .heisenberg import HWRep, displacement, hw_compose, ladder_ops
from .linalg import deviation_norm, mat_exp, project
from .qdist import QGrid, q_function, q_normalization
from .quadrature import (GroupPoint, MeasureGrid, disc_grid, plane_grid,
                         sphere_grid)
from .special import JacobiParams, jacobi_eval, jacobi_identity_lhs
from .su11 import SU11Rep, su11_chart, su11_compose, su11_displacement, su11_ops
from .su2 import SpinRep, spin_ops, su2_chart, su2_compose, su2_displacement
from .verifier import (ResolutionReport, WeightOperator, assemble_resolution,
                       cartan_commutes, diagonal_probe)

"""
Group composition and invariant measures
========================================

Products of two displacements are again a displacement times a phase (HW)
or times a rotation generated by the Cartan element (SU(2), SU(1,1)).  The
induced maps on the chart preserve the invariant density.
"""
from fcoherent import checks

hw, _ = checks.hw_composition(pairs=50)
s2, _ = checks.su2_composition(pairs=50)
s11, _ = checks.su11_composition(pairs=50)
print(f"composition residuals: HW {hw:.1e}, SU(2) {s2:.1e}, SU(1,1) {s11:.1e}")

# Writing the SU(1,1) phase with an unconjugated numerator breaks the identity.
bad, _ = checks.su11_unconjugated_phase_residual()
print(f"SU(1,1) with the unconjugated numerator: residual {bad:.1f}")

m2, _ = checks.su2_measure_invariance()
m11, _ = checks.su11_measure_invariance()
print(f"density times Jacobian mismatch: sphere {m2:.1e}, disc {m11:.1e}")

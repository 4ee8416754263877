"""
Building Gaussian states and taking them apart
==============================================

A Gaussian state of n bosonic modes is a complex mean vector plus a real
2n x 2n covariance matrix in (x..., y...) ordering, normalised so the
vacuum covariance is I/2.  The Williamson decomposition C = L^T D L with
symplectic L and D = diag(nu, nu) exposes the thermal content of any
valid covariance.
"""

import numpy as np

from gaussian_entropy import (
    conjugate_symplectic,
    displace,
    is_valid_covariance,
    squeeze_symplectic,
    standard_form,
    symplectic_form,
    thermal_state,
    uncertainty_eigenvalue,
    vacuum_state,
    williamson,
)

np.set_printoptions(precision=6, suppress=True)

# The vacuum sits exactly on the uncertainty boundary: the smallest
# eigenvalue of C + (i/2)J is zero.
vac = vacuum_state(1)
print("vacuum covariance:\n", vac.cov)
print("uncertainty margin:", uncertainty_eigenvalue(vac.cov))

# Shrinking the covariance below I/2 violates the uncertainty relation.
print("is I/4 a state?", is_valid_covariance(np.eye(2) / 4))

# A thermal state with parameter s has covariance nu * I with
# nu = (1/2) coth(s/2); squeezing it deforms the circle into an ellipse
# without changing the symplectic spectrum.
rho = thermal_state(1.0)
squeezer = squeeze_symplectic(1, 0, r=0.4, phi=0.6)
rho_sq = displace(conjugate_symplectic(rho, squeezer), [0.3 - 0.2j])
print("\nsqueezed displaced thermal covariance:\n", rho_sq.cov)

form = williamson(rho_sq.cov)
print("\nsymplectic eigenvalues:", form.nu)
J = symplectic_form(1)
print("residual |L^T J L - J|:", np.abs(form.L.T @ J @ form.L - J).max())
print(
    "residual |L^T D L - C|:",
    np.abs(form.L.T @ form.diagonal() @ form.L - rho_sq.cov).max(),
)

# The standard form re-packages the same data as thermal parameters s
# (ascending, inf marks a pure mode) plus the displacement.
sf = standard_form(rho_sq)
print("\nthermal parameters s:", sf.s)
print("displacement:", sf.displacement)

# For a pure state every thermal parameter is infinite.
print("\nvacuum standard form s:", standard_form(vac).s)

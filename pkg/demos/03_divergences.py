"""
Relative entropy and the Petz-Renyi family
==========================================

Both divergences reduce to closed forms once the second state is rotated
into its product-thermal frame.  The relative entropy splits into a
classical (spectral) part and a quantum (quadratic) part per mode; the
Petz-Renyi divergence of order alpha in (0, 1) is a four-term sum that
approaches the relative entropy as alpha -> 1.
"""

import math

from gaussian_entropy import (
    coherent_state,
    displace,
    petz_renyi,
    relative_entropy,
    thermal_state,
    vacuum_state,
)

# Two thermal states: the divergence is purely classical, a rescaled
# binary relative entropy of the geometric spectra.
rho, sigma = thermal_state(1.0), thermal_state(2.0)
res = relative_entropy(rho, sigma)
print("S(thermal(1) || thermal(2)) =", res.value)
print("  classical part:", res.classical_part)
print("  quantum part:  ", res.quantum_part)

# Displacing the first state adds exactly t |beta|^2 through the
# quadratic term.
beta = 0.4 + 0.3j
shifted = relative_entropy(displace(rho, [beta]), sigma)
print("\nafter displacing rho by", beta)
print("  value:        ", shifted.value)
print("  base + t|b|^2:", res.value + 2.0 * abs(beta) ** 2)

# Support matters: against a pure reference the divergence is infinite
# unless the states agree exactly.
print("\nS(thermal(1) || vacuum)  =", relative_entropy(rho, vacuum_state(1)).value)
print("S(coherent || same)      =",
      relative_entropy(coherent_state(0.5), coherent_state(0.5)).value)

# The Petz-Renyi family: nondecreasing in alpha, tending to the relative
# entropy from below.
rho = displace(thermal_state(1.0), [0.3 + 0.1j])
sigma = thermal_state(1.6)
limit = relative_entropy(rho, sigma).value
print("\nalpha sweep toward S(rho||sigma) =", limit)
print("  alpha      S_alpha         gap")
for alpha in (0.3, 0.5, 0.7, 0.9, 0.99, 0.999):
    val = petz_renyi(rho, sigma, alpha).value
    print(f"  {alpha:5.3f}   {val:.10f}   {limit - val:.3e}")

# For two pure states the overlap gives |beta|^2 / (1 - alpha) exactly.
print("\nS_0.5(coherent 0.7 || vacuum) =",
      petz_renyi(coherent_state(0.7), vacuum_state(1), 0.5).value)
print("|beta|^2 / (1 - alpha)        =", 0.49 / 0.5)

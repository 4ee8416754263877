"""
Von Neumann entropy from the symplectic spectrum
================================================

The entropy of a Gaussian state depends only on its symplectic
eigenvalues: each thermal mode with parameter s contributes
H(e^{-s}) / (1 - e^{-s}) nats, where H is the binary entropy.  Pure
modes (s = inf) contribute nothing, and no Gaussian unitary can change
the total.
"""

import math

import numpy as np

from gaussian_entropy import (
    coherent_state,
    conjugate_symplectic,
    squeeze_symplectic,
    thermal_mode_entropy,
    thermal_product,
    thermal_state,
    vacuum_state,
    von_neumann_entropy,
)

# Pure states first: zero entropy however they are displaced or squeezed.
print("S(vacuum)        =", von_neumann_entropy(vacuum_state(1)))
print("S(coherent 0.7)  =", von_neumann_entropy(coherent_state(0.7)))

# A thermal state at s = ln 2 has the geometric spectrum (1/2)(1/2)^k,
# whose entropy is exactly 2 ln 2.
s = math.log(2)
print("\nS(thermal ln 2)  =", von_neumann_entropy(thermal_state(s)))
print("2 ln 2           =", 2 * math.log(2))

# Entropy falls as the state gets colder (larger s).
print("\n   s    entropy (nats)   entropy (bits)")
for s in (0.5, 1.0, 2.0, 4.0):
    S = thermal_mode_entropy(s)
    print(f"{s:4.1f}    {S:.10f}    {S / math.log(2):.10f}")

# Products add, and squeezing one mode changes nothing.
pair = thermal_product([1.0, 2.0])
squeezed = conjugate_symplectic(pair, squeeze_symplectic(2, 0, r=0.6))
print("\nS(thermal(1) x thermal(2)) =", von_neumann_entropy(pair))
print("sum of mode entropies      =",
      thermal_mode_entropy(1.0) + thermal_mode_entropy(2.0))
print("after squeezing one mode   =", von_neumann_entropy(squeezed))

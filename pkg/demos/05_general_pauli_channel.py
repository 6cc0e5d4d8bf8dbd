"""
Asymmetric Pauli channels
=========================

With px, py, pz all different, each [[5,1,3]] joint eigenvalue still has a
closed form in two polynomials g1 and g2 of (f, px, py, pz).
"""

import numpy as np

from pauli_coherent import BUILTIN_CODES, ChannelParams, cached_table, coherent_info_per_use
from pauli_coherent.spectra import joint_spectrum, table1_reference, table1_spectrum

ch = ChannelParams.pauli(0.02, 0.005, 0.04)
xi, d = table1_reference(ch)
print("closed-form eigenvalues (rows have degeneracy", d, "each):")
print(xi)

enum = joint_spectrum(cached_table(BUILTIN_CODES["513"]), ch).expanded()
print("max deviation from enumeration:", np.abs(enum - table1_spectrum(ch).expanded()).max())

# Dephasing-biased noise: sweep pz with px = py fixed.
for pz in np.linspace(0, 0.1, 6):
    c = ChannelParams.pauli(0.005, 0.005, pz)
    print(f"pz={pz:.2f}  CI per use:", round(coherent_info_per_use(BUILTIN_CODES["513"], c), 6))

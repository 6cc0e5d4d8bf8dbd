"""
Cross-check against dense matrices
==================================

Build the codewords as state vectors, apply every Kraus term of the channel,
and diagonalize with a Jacobi eigensolver. No enumeration is used here.
"""

import numpy as np

from pauli_coherent import BUILTIN_CODES, ChannelParams, cached_table, coherent_info_per_use
from pauli_coherent.oracle import apply_channel_dense, codewords, hermitian_eigenvalues
from pauli_coherent.spectra import output_spectrum

code = BUILTIN_CODES["steane713"]
ch = ChannelParams.pauli(0.01, 0.005, 0.02)

# Codewords are orthonormal.
cw = codewords(code)
print("Gram matrix:\n", np.round(cw @ cw.conj().T, 12).real)

# Dense output state, 128 x 128.
rho = apply_channel_dense(code, ch)
dense = np.sort(hermitian_eigenvalues(rho, "jacobi"))[::-1]
exact = output_spectrum(cached_table(code), ch).expanded()
print("max eigenvalue deviation:", np.abs(dense - exact).max())

# The five-qubit code is small enough to check the joint state and the CI too.
from pauli_coherent.oracle import oracle_coherent_info

five = BUILTIN_CODES["513"]
d = ChannelParams.depolarizing(0.02)
print("CI enumeration:", coherent_info_per_use(five, d))
print("CI dense (LAPACK):", oracle_coherent_info(five, d, "lapack"))

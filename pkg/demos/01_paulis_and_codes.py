"""
Pauli operators and stabilizer codes
====================================

Paulis are stored phase-free as two bitmasks. Codes are checked for
commutation, independence and logical pairing before anything else runs.
"""

from pauli_coherent import BUILTIN_CODES, PauliOperator, symplectic_product, validate_code
from pauli_coherent.pauli import type_counts

# Parse two operators and multiply them; phases are dropped.
a = PauliOperator.from_string("XZZXI")
b = PauliOperator.from_string("IXZZX")
print(a, "*", b, "=", a * b)

# Two Paulis commute when the symplectic product is 0.
print("commute:", symplectic_product(a, b) == 0)

# The (X, Y, Z, weight) counts decide the error probability of an operator.
print("type counts of XYZZI:", type_counts(PauliOperator.from_string("XYZZI")))

# The three built-in codes all pass validation.
for name, code in BUILTIN_CODES.items():
    print(f"[[{code.n},{code.k}]] {name}:", validate_code(code))

# A broken code is reported, not silently accepted.
from pauli_coherent import StabilizerCode

bad = StabilizerCode.from_strings("bad", ["XX", "ZI"], [], [])
print(validate_code(bad))

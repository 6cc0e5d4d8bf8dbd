"""Phaseless n-qubit Pauli operators in the binary symplectic picture.

An operator is a pair of n-bit masks.  Bit ``q - 1`` of ``x_mask`` is set when
qubit ``q`` carries an X or a Y, bit ``q - 1`` of ``z_mask`` when it carries a Z
or a Y.  The text form lists qubit 1 first::

    "XZZXI"  ->  x_mask = 0b01001, z_mask = 0b00110

Global phases (+-1, +-i) are never tracked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

MAX_QUBITS = 32

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}


class PauliParseError(ValueError):
    """Raised for malformed IXYZ strings; ``position`` is 1-based (0 when not positional)."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.position = position


def popcount(value: int) -> int:
    return int(value).bit_count()


def parity(value: int) -> int:
    return int(value).bit_count() & 1


@dataclass(frozen=True, slots=True)
class PauliOperator:
    n: int
    x_mask: int = 0
    z_mask: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must lie in [1, {MAX_QUBITS}], got {self.n}")
        limit = 1 << self.n
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise ValueError(f"masks must fit in {self.n} bits")

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n, 0, 0)

    @classmethod
    def from_string(cls, text: str) -> PauliOperator:
        return parse_pauli(text)

    def __str__(self) -> str:
        return format_pauli(self)

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return multiply(self, other)

    def letter(self, qubit: int) -> str:
        """Single-qubit factor on ``qubit`` (1-based)."""
        bit = 1 << (qubit - 1)
        return _BITS_LETTER[(int(bool(self.x_mask & bit)), int(bool(self.z_mask & bit)))]

    @property
    def weight(self) -> int:
        return popcount(self.x_mask | self.z_mask)

    @property
    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    def symplectic_vector(self) -> int:
        """The operator as one 2n-bit integer, x part in the low half."""
        return self.x_mask | (self.z_mask << self.n)


def parse_pauli(text: str) -> PauliOperator:
    """Parse a string over {I, X, Y, Z}; the leftmost character is qubit 1."""
    if not text:
        raise PauliParseError("empty Pauli string")
    if len(text) > MAX_QUBITS:
        raise PauliParseError(
            f"Pauli string has {len(text)} qubits, at most {MAX_QUBITS} allowed",
            position=MAX_QUBITS + 1,
        )
    x_mask = z_mask = 0
    for pos, char in enumerate(text, start=1):
        try:
            xb, zb = _LETTER_BITS[char]
        except KeyError:
            raise PauliParseError(
                f"invalid character {char!r} at position {pos} of {text!r}", position=pos
            ) from None
        x_mask |= xb << (pos - 1)
        z_mask |= zb << (pos - 1)
    return PauliOperator(len(text), x_mask, z_mask)


def format_pauli(p: PauliOperator) -> str:
    return "".join(p.letter(q) for q in range(1, p.n + 1))


def _check_same_size(a: PauliOperator, b: PauliOperator) -> None:
    if a.n != b.n:
        raise ValueError(f"operators act on different qubit counts ({a.n} vs {b.n})")


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    _check_same_size(a, b)
    return PauliOperator(a.n, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask)


def product(ops: Iterable[PauliOperator], n: int) -> PauliOperator:
    x = z = 0
    for op in ops:
        if op.n != n:
            raise ValueError(f"operators act on different qubit counts ({op.n} vs {n})")
        x ^= op.x_mask
        z ^= op.z_mask
    return PauliOperator(n, x, z)


def symplectic_product(a: PauliOperator, b: PauliOperator) -> int:
    """0 if ``a`` and ``b`` commute, 1 if they anticommute."""
    _check_same_size(a, b)
    return parity(a.x_mask & b.z_mask) ^ parity(a.z_mask & b.x_mask)


def type_counts(a: PauliOperator) -> tuple[int, int, int, int]:
    """Return ``(num_x, num_y, num_z, weight)``."""
    i = popcount(a.x_mask & ~a.z_mask)
    j = popcount(a.x_mask & a.z_mask)
    l = popcount(a.z_mask & ~a.x_mask)
    return i, j, l, i + j + l

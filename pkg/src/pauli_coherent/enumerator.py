"""Type-count enumerators of stabilizer cosets.

For every coset sector ``(s, t, u)`` of a code the table records how many of the
``2**(n-k)`` coset elements contain exactly ``i`` X's, ``j`` Y's and ``l`` Z's.
Two independent builders are provided: a scan over all ``4**n`` Paulis and a
Gray-code walk of the stabilizer group started from one seed per sector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal, Mapping

import numpy as np

from .stabilizer import (
    CosetLabel,
    StabilizerCode,
    destabilizers,
    require_valid,
)

DEFAULT_SCAN_QUBITS = 10

Method = Literal["full-scan", "coset-walk"]


class ScanBudgetError(ValueError):
    pass


@lru_cache(maxsize=None)
def compositions(n: int) -> np.ndarray:
    """All ``(i, j, l)`` with ``i + j + l <= n``, shape ``(m, 3)``, ordered by weight then i, j."""
    rows = [
        (i, j, w - i - j)
        for w in range(n + 1)
        for i in range(w, -1, -1)
        for j in range(w - i, -1, -1)
    ]
    out = np.array(rows, dtype=np.int64).reshape(-1, 3)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _composition_lookup(n: int) -> np.ndarray:
    comps = compositions(n)
    lookup = np.full((n + 1, n + 1, n + 1), -1, dtype=np.int64)
    lookup[comps[:, 0], comps[:, 1], comps[:, 2]] = np.arange(len(comps))
    return lookup


@dataclass(frozen=True)
class TypeCountEnumerator:
    n: int
    counts: Mapping[tuple[int, int, int], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def weight_marginal(e: TypeCountEnumerator) -> np.ndarray:
    """Counts per weight ``w = 0..n`` (ascending)."""
    out = np.zeros(e.n + 1, dtype=np.int64)
    for (i, j, l), c in e.counts.items():
        out[i + j + l] += c
    return out


@dataclass(frozen=True, eq=False)
class EnumeratorTable:
    """Sector-by-composition count matrix for one code.

    ``counts[idx, c]`` is the number of elements of sector ``idx`` (see
    :meth:`CosetLabel.index`) whose type composition is ``compositions[c]``.
    """

    code: StabilizerCode
    method: Method
    counts: np.ndarray

    @property
    def compositions(self) -> np.ndarray:
        return compositions(self.code.n)

    @property
    def num_sectors(self) -> int:
        return self.counts.shape[0]

    def labels(self) -> Iterator[CosetLabel]:
        for idx in range(self.num_sectors):
            yield CosetLabel.from_index(idx, self.code.k)

    def sector(self, label: CosetLabel | tuple[int, int, int]) -> TypeCountEnumerator:
        idx = CosetLabel(*label).index(self.code.k)
        row = self.counts[idx]
        comps = self.compositions
        nz = np.flatnonzero(row)
        return TypeCountEnumerator(
            self.code.n, {tuple(int(v) for v in comps[c]): int(row[c]) for c in nz}
        )

    __getitem__ = sector

    def weight_marginals(self) -> np.ndarray:
        """Shape ``(num_sectors, n + 1)``; row ``idx`` is the ascending weight marginal."""
        w = self.compositions.sum(axis=1)
        out = np.zeros((self.num_sectors, self.code.n + 1), dtype=np.int64)
        for weight in range(self.code.n + 1):
            out[:, weight] = self.counts[:, w == weight].sum(axis=1)
        return out

    def same_counts(self, other: EnumeratorTable) -> bool:
        return self.counts.shape == other.counts.shape and bool(
            np.array_equal(self.counts, other.counts)
        )


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


def _label_indices(code: StabilizerCode, x: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Vectorized sector index of the Paulis ``(x, z)``."""
    k = code.k
    idx = np.zeros(x.shape, dtype=np.int64)

    def sp_bit(op) -> np.ndarray:
        return (_popcount(x & np.uint64(op.z_mask)) + _popcount(z & np.uint64(op.x_mask))) & 1

    for i, g in enumerate(code.generators):
        idx |= sp_bit(g) << (2 * k + i)
    for j in range(k):
        idx |= sp_bit(code.logical_z[j]) << (k + j)
        idx |= sp_bit(code.logical_x[j]) << j
    return idx


def _composition_indices(n: int, x: np.ndarray, z: np.ndarray) -> np.ndarray:
    i = _popcount(x & ~z)
    j = _popcount(x & z)
    l = _popcount(z & ~x)
    return _composition_lookup(n)[i, j, l]


def enumerate_full_scan(
    code: StabilizerCode, max_qubits: int = DEFAULT_SCAN_QUBITS
) -> EnumeratorTable:
    """Label every one of the ``4**n`` Paulis and tally compositions per sector."""
    require_valid(code)
    n = code.n
    if n > max_qubits:
        raise ScanBudgetError(
            f"full scan of 4**{n} Paulis exceeds the budget (n <= {max_qubits}); "
            "use enumerate_by_cosets instead"
        )
    allp = np.arange(1 << (2 * n), dtype=np.uint64)
    mask = np.uint64((1 << n) - 1)
    x = allp & mask
    z = allp >> np.uint64(n)
    m = len(compositions(n))
    flat = _label_indices(code, x, z) * m + _composition_indices(n, x, z)
    counts = np.bincount(flat, minlength=code.num_sectors * m).reshape(code.num_sectors, m)
    return EnumeratorTable(code, "full-scan", counts.astype(np.int64))


def _sector_seeds(code: StabilizerCode) -> tuple[np.ndarray, np.ndarray]:
    """One representative per sector index, built from destabilizers and logical operators."""
    k = code.k
    # bit b of the sector index -> operator that flips exactly that label bit
    basis = list(code.logical_z) + list(code.logical_x) + list(destabilizers(code))
    idx = np.arange(code.num_sectors, dtype=np.uint64)
    x = np.zeros(code.num_sectors, dtype=np.uint64)
    z = np.zeros(code.num_sectors, dtype=np.uint64)
    for b, op in enumerate(basis):
        on = ((idx >> np.uint64(b)) & np.uint64(1)).astype(bool)
        x[on] ^= np.uint64(op.x_mask)
        z[on] ^= np.uint64(op.z_mask)
    assert len(basis) == 2 * k + code.r
    return x, z


def _random_stabilizer_masks(
    code: StabilizerCode, size: int, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    pick = rng.integers(0, 2, size=(size, code.r)).astype(bool)
    x = np.zeros(size, dtype=np.uint64)
    z = np.zeros(size, dtype=np.uint64)
    for i, g in enumerate(code.generators):
        x[pick[:, i]] ^= np.uint64(g.x_mask)
        z[pick[:, i]] ^= np.uint64(g.z_mask)
    return x, z


def enumerate_by_cosets(
    code: StabilizerCode, rng: np.random.Generator | None = None
) -> EnumeratorTable:
    """Walk the stabilizer group in Gray-code order from every sector seed at once.

    Each step multiplies all running operators by a single generator.  Passing
    ``rng`` multiplies every seed by a random stabilizer element first; the
    resulting table must not change.
    """
    require_valid(code)
    n = code.n
    x, z = _sector_seeds(code)
    if rng is not None:
        sx, sz = _random_stabilizer_masks(code, code.num_sectors, rng)
        x ^= sx
        z ^= sz
    lookup = _composition_lookup(n)
    m = len(compositions(n))
    rows = np.arange(code.num_sectors)
    counts = np.zeros((code.num_sectors, m), dtype=np.int64)
    gx = [np.uint64(g.x_mask) for g in code.generators]
    gz = [np.uint64(g.z_mask) for g in code.generators]

    i = _popcount(x & ~z)
    j = _popcount(x & z)
    l = _popcount(z & ~x)
    counts[rows, lookup[i, j, l]] += 1
    for step in range(1, code.coset_size):
        g = (step & -step).bit_length() - 1
        # only qubits touched by the generator change their letter
        touched = gx[g] | gz[g]
        old_x, old_z = x & touched, z & touched
        x ^= gx[g]
        z ^= gz[g]
        new_x, new_z = x & touched, z & touched
        i += _popcount(new_x & ~new_z) - _popcount(old_x & ~old_z)
        j += _popcount(new_x & new_z) - _popcount(old_x & old_z)
        l += _popcount(new_z & ~new_x) - _popcount(old_z & ~old_x)
        counts[rows, lookup[i, j, l]] += 1
    return EnumeratorTable(code, "coset-walk", counts)


def build_table(code: StabilizerCode, method: Method | None = None) -> EnumeratorTable:
    """Full scan up to ``DEFAULT_SCAN_QUBITS`` qubits, coset walk above, unless ``method`` is given."""
    if method is None:
        method = "full-scan" if code.n <= DEFAULT_SCAN_QUBITS else "coset-walk"
    if method == "full-scan":
        return enumerate_full_scan(code)
    if method == "coset-walk":
        return enumerate_by_cosets(code)
    raise ValueError(f"unknown enumeration method {method!r}")


@lru_cache(maxsize=32)
def cached_table(code: StabilizerCode) -> EnumeratorTable:
    return build_table(code)

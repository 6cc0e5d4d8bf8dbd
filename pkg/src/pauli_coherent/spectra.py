"""Exact spectra, entropies and coherent information from enumerator tables.

All logarithms are base 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .enumerator import EnumeratorTable, TypeCountEnumerator, cached_table
from .stabilizer import StabilizerCode

NORMALIZATION_TOL = 1e-10
CLAMP_TOL = 1e-12


class SpectrumError(ValueError):
    pass


@dataclass(frozen=True)
class ChannelParams:
    """Single-qubit Pauli channel ``f rho + px X rho X + py Y rho Y + pz Z rho Z``."""

    f: float
    px: float
    py: float
    pz: float

    def __post_init__(self) -> None:
        probs = (self.f, self.px, self.py, self.pz)
        if any(not math.isfinite(p) or p < 0 or p > 1 for p in probs):
            raise ValueError(f"channel probabilities must lie in [0, 1], got {probs}")
        if abs(math.fsum(probs) - 1.0) > 1e-12:
            raise ValueError(f"channel probabilities must sum to 1, got {math.fsum(probs)!r}")

    @classmethod
    def pauli(cls, px: float, py: float, pz: float) -> ChannelParams:
        f = 1.0 - px - py - pz
        if -1e-15 < f < 0:
            f = 0.0
        return cls(f, px, py, pz)

    @classmethod
    def depolarizing(cls, p: float) -> ChannelParams:
        return cls.pauli(p, p, p)

    @classmethod
    def uniform(cls) -> ChannelParams:
        return cls(0.25, 0.25, 0.25, 0.25)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return self.f, self.px, self.py, self.pz


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with integer multiplicities."""

    values: np.ndarray
    multiplicities: np.ndarray
    entropy: float = field(init=False)

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        mult = np.asarray(self.multiplicities, dtype=np.int64)
        if values.shape != mult.shape:
            raise SpectrumError("values and multiplicities differ in length")
        if np.any(mult <= 0):
            raise SpectrumError("multiplicities must be positive")
        if np.any(values < -CLAMP_TOL):
            raise SpectrumError(f"negative eigenvalue {values.min()!r} below clamp threshold")
        values = np.where(values < 0, 0.0, values)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "multiplicities", mult)
        object.__setattr__(self, "entropy", _entropy_bits(values, mult))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, int]]) -> Spectrum:
        pairs = list(pairs)
        return cls(
            np.array([v for v, _ in pairs], dtype=float),
            np.array([m for _, m in pairs], dtype=np.int64),
        )

    @property
    def dimension(self) -> int:
        return int(self.multiplicities.sum())

    @property
    def total(self) -> float:
        return math.fsum(self.values * self.multiplicities)

    def pairs(self) -> list[tuple[float, int]]:
        return [(float(v), int(m)) for v, m in zip(self.values, self.multiplicities)]

    def expanded(self) -> np.ndarray:
        """Every eigenvalue repeated by its multiplicity, descending."""
        return np.sort(np.repeat(self.values, self.multiplicities))[::-1]


def _entropy_bits(values: np.ndarray, mult: np.ndarray) -> float:
    pos = values > 0
    v = values[pos]
    return float(-np.sum(mult[pos] * v * np.log2(v))) + 0.0


def entropy(sp: Spectrum) -> float:
    return sp.entropy


def _monomials(n: int, comps: np.ndarray, ch: ChannelParams) -> np.ndarray:
    i, j, l = comps[:, 0], comps[:, 1], comps[:, 2]
    return (
        np.power(ch.f, n - i - j - l)
        * np.power(ch.px, i)
        * np.power(ch.py, j)
        * np.power(ch.pz, l)
    )


def eta(e: TypeCountEnumerator, ch: ChannelParams) -> float:
    """Total error probability of the coset described by ``e``."""
    return math.fsum(
        c * ch.f ** (e.n - i - j - l) * ch.px**i * ch.py**j * ch.pz**l
        for (i, j, l), c in e.counts.items()
    )


def sector_etas(table: EnumeratorTable, ch: ChannelParams) -> np.ndarray:
    """Probability mass of every sector, indexed like ``table.counts``."""
    mono = _monomials(table.code.n, table.compositions, ch)
    return table.counts @ mono


def depolarizing_sector_etas(table: EnumeratorTable, p: float) -> np.ndarray:
    """Same as :func:`sector_etas` for ``px = py = pz = p``, through the weight marginals."""
    n = table.code.n
    w = np.arange(n + 1)
    return table.weight_marginals() @ (np.power(1.0 - 3.0 * p, n - w) * np.power(p, w))


def _check_total(total: float, what: str) -> None:
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise SpectrumError(f"{what} eigenvalues sum to {total!r}; table is corrupted")


def joint_spectrum(table: EnumeratorTable, ch: ChannelParams) -> Spectrum:
    """Spectrum of the joint system+reference output: one eigenvalue per sector."""
    vals = sector_etas(table, ch)
    _check_total(math.fsum(vals), "joint-state")
    return Spectrum(vals, np.ones(len(vals), dtype=np.int64))


def syndrome_eigenvalues(table: EnumeratorTable, ch: ChannelParams) -> np.ndarray:
    """``lambda_s = 2**-k * sum_{t,u} eta(s, t, u)`` for every syndrome ``s``."""
    k = table.code.k
    vals = sector_etas(table, ch).reshape(1 << table.code.r, 1 << (2 * k))
    return vals.sum(axis=1) / (1 << k)


def output_spectrum(table: EnumeratorTable, ch: ChannelParams) -> Spectrum:
    """Spectrum of the channel output; each syndrome eigenvalue carries multiplicity ``2**k``."""
    lam = syndrome_eigenvalues(table, ch)
    mult = np.full(len(lam), 1 << table.code.k, dtype=np.int64)
    _check_total(math.fsum(lam * mult), "output-state")
    return Spectrum(lam, mult)


def coherent_info_per_use(
    code: StabilizerCode, ch: ChannelParams, table: EnumeratorTable | None = None
) -> float:
    """``[S(output) - S(joint)] / n`` for the uniform mixture of codewords."""
    if table is None:
        table = cached_table(code)
    return (output_spectrum(table, ch).entropy - joint_spectrum(table, ch).entropy) / code.n


def hashing_bound(ch: ChannelParams) -> float:
    """``1 - H(f, px, py, pz)`` in bits."""
    return 1.0 + math.fsum(p * math.log2(p) for p in ch.as_tuple() if p > 0)


def group_spectrum(sp: Spectrum, tol: float = 0.0) -> Spectrum:
    """Merge eigenvalues closer than ``tol`` (chained from the smallest), summing multiplicities.

    The merged value is the multiplicity-weighted mean of its group.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    order = np.argsort(sp.values, kind="stable")
    vals, mult = sp.values[order], sp.multiplicities[order]
    out_v: list[float] = []
    out_m: list[int] = []
    acc_w = 0.0
    last = None
    for v, m in zip(vals, mult):
        if last is not None and v - last <= tol:
            acc_w += v * m
            out_m[-1] += int(m)
            out_v[-1] = acc_w / out_m[-1]
        else:
            acc_w = v * m
            out_v.append(float(v))
            out_m.append(int(m))
        last = v
    return Spectrum(np.array(out_v), np.array(out_m, dtype=np.int64))


# closed forms printed for the five-qubit code under a general Pauli channel

def g1(t: float, z: float, x: float, y: float) -> float:
    return t**5 + 5 * t * (x * x * y * y + x * x * z * z + z * z * y * y)


def g2(t: float, z: float, x: float, y: float) -> float:
    return (
        t**4 * x
        + 2 * t * t * x * (z * z + y * y)
        + 2 * t * z * y * (2 * x * x + z * z + y * y)
        + x * (x * x * y * y + x * x * z * z + z * z * y * y)
    )


TABLE1_DEGENERACIES = (1, 5, 5, 5)


def table1_reference(ch: ChannelParams) -> tuple[np.ndarray, tuple[int, int, int, int]]:
    """4x4 matrix ``xi[i, j]`` of five-qubit joint eigenvalues; row ``i`` has degeneracy ``d[i]``."""
    f, px, py, pz = ch.as_tuple()
    xi = np.array(
        [
            [g1(f, pz, px, py), g1(py, px, pz, f), g1(pz, f, py, px), g1(px, py, f, pz)],
            [g2(f, pz, px, py), g2(py, px, pz, f), g2(pz, f, py, px), g2(px, py, f, pz)],
            [g2(f, pz, py, px), g2(py, px, f, pz), g2(pz, f, px, py), g2(px, py, pz, f)],
            [g2(f, px, pz, py), g2(py, pz, px, f), g2(pz, py, f, px), g2(px, f, py, pz)],
        ]
    )
    return xi, TABLE1_DEGENERACIES


def table1_spectrum(ch: ChannelParams) -> Spectrum:
    xi, d = table1_reference(ch)
    return Spectrum(xi.ravel(), np.repeat(np.array(d, dtype=np.int64), 4))


# curves

@dataclass(frozen=True)
class CurveRow:
    p: float
    channel: ChannelParams
    ci_per_use: float
    hashing_bound: float


def grid_points(start: float, end: float, count: int) -> np.ndarray:
    """``count`` evenly spaced points with both endpoints included."""
    if count < 1:
        raise ValueError("grid count must be at least 1")
    if start > end:
        raise ValueError(f"grid start {start} exceeds end {end}")
    if count == 1:
        if start != end:
            raise ValueError("a one-point grid needs start == end")
        return np.array([float(start)])
    return np.linspace(start, end, count)


ChannelFamily = Callable[[float], ChannelParams]


def depolarizing_family() -> ChannelFamily:
    return ChannelParams.depolarizing


def pauli_family(
    px: float | None = None, py: float | None = None, pz: float | None = None
) -> ChannelFamily:
    """Family sweeping the one component left as ``None``, the others held fixed."""
    free = [name for name, v in (("px", px), ("py", py), ("pz", pz)) if v is None]
    if len(free) != 1:
        raise ValueError("exactly one of px, py, pz must be left free")

    def family(p: float) -> ChannelParams:
        vals = {"px": px, "py": py, "pz": pz, free[0]: p}
        return ChannelParams.pauli(vals["px"], vals["py"], vals["pz"])

    return family


def ci_curve(
    code: StabilizerCode,
    family: ChannelFamily,
    grid: Sequence[float],
    table: EnumeratorTable | None = None,
) -> list[CurveRow]:
    if table is None:
        table = cached_table(code)
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or len(grid) == 0:
        raise ValueError("grid must be a non-empty 1-d sequence")
    if np.any(np.diff(grid) < 0):
        raise ValueError("grid must be monotone non-decreasing")
    channels = [family(float(p)) for p in grid]
    return [
        CurveRow(float(p), ch, coherent_info_per_use(code, ch, table), hashing_bound(ch))
        for p, ch in zip(grid, channels)
    ]

"""Brute-force dense-matrix reference path.

Nothing here uses coset labels or type counts.  Codewords come from applying
the stabilizer projector to a basis state, the channel is applied as an
explicit sum over all ``4**n`` Kraus operators (complex phases kept, ``Y`` as
the matrix ``[[0, -i], [i, 0]]``), and spectra come from an eigensolver.

Dense index convention: qubit 1 is the most significant bit of a basis index,
i.e. the leftmost Kronecker factor.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce
from typing import Literal, Sequence

import numpy as np

from .spectra import ChannelParams
from .stabilizer import StabilizerCode, require_valid

OUTPUT_DIM_BUDGET = 256
JOINT_DIM_BUDGET = 1024
VECTOR_QUBIT_BUDGET = 12
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 50

PAULI_MATRICES = {
    "I": np.array([[1, 0], [0, 1]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_LETTERS = "IXYZ"


class BudgetExceededError(ValueError):
    pass


class OracleError(RuntimeError):
    pass


@dataclass(frozen=True)
class DenseState:
    """Dense pure state (1-d) or density matrix (2-d) on ``num_qubits`` qubits."""

    data: np.ndarray

    def __post_init__(self) -> None:
        d = self.data.shape[0]
        if d & (d - 1) or d == 0:
            raise ValueError(f"dimension {d} is not a power of two")
        if self.data.ndim == 1:
            if abs(np.linalg.norm(self.data) - 1.0) > 1e-12:
                raise ValueError("state vector is not normalized")
        elif self.data.ndim == 2:
            if self.data.shape != (d, d):
                raise ValueError("density matrix must be square")
            if np.abs(self.data - self.data.conj().T).max() > 1e-10:
                raise ValueError("density matrix is not Hermitian")
            if abs(np.trace(self.data).real - 1.0) > 1e-10:
                raise ValueError("density matrix does not have unit trace")
        else:
            raise ValueError("dense state must be a vector or a square matrix")

    @property
    def dimension(self) -> int:
        return self.data.shape[0]

    @property
    def num_qubits(self) -> int:
        return self.dimension.bit_length() - 1

    @property
    def is_pure_vector(self) -> bool:
        return self.data.ndim == 1


def pauli_matrix(text: str) -> np.ndarray:
    """Kronecker product of the single-qubit matrices; intended for small ``n``."""
    return reduce(np.kron, (PAULI_MATRICES[c] for c in text))


def _monomial_form(letters: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Column action of a batch of Pauli strings.

    ``letters`` has shape ``(m, n)`` with entries indexing ``"IXYZ"``.  Returns
    ``(dest, phase)`` of shape ``(m, 2**n)`` such that operator ``a`` maps basis
    state ``|c>`` to ``phase[a, c] |dest[a, c]>``.  Both are read off the 2x2
    matrices entry by entry.
    """
    m, n = letters.shape
    dim = 1 << n
    cols = np.arange(dim)
    # per letter and input bit: (output bit, amplitude) of the single nonzero entry
    out_bit = np.zeros((4, 2), dtype=np.int64)
    amp = np.zeros((4, 2), dtype=complex)
    for li, letter in enumerate(_LETTERS):
        mat = PAULI_MATRICES[letter]
        for b in range(2):
            r = int(np.flatnonzero(mat[:, b])[0])
            out_bit[li, b] = r
            amp[li, b] = mat[r, b]
    dest = np.zeros((m, dim), dtype=np.int64)
    phase = np.ones((m, dim), dtype=complex)
    for q in range(n):
        shift = n - 1 - q
        bit = (cols >> shift) & 1
        lq = letters[:, q][:, None]
        dest |= out_bit[lq, bit[None, :]] << shift
        phase *= amp[lq, bit[None, :]]
    return dest, phase


def _letters_of(texts: Sequence[str]) -> np.ndarray:
    return np.array([[_LETTERS.index(c) for c in t] for t in texts], dtype=np.int64)


def apply_pauli(text: str, vec: np.ndarray) -> np.ndarray:
    dest, phase = _monomial_form(_letters_of([text]))
    out = np.zeros_like(vec, dtype=complex)
    out[dest[0]] = phase[0] * vec
    return out


def _all_pauli_letters(n: int, start: int, stop: int) -> np.ndarray:
    """Rows ``start:stop`` of all ``4**n`` strings in lexicographic IXYZ order."""
    idx = np.arange(start, stop)
    shifts = 2 * np.arange(n - 1, -1, -1)
    return (idx[:, None] >> shifts[None, :]) & 3


def _kraus_weights(letters: np.ndarray, ch: ChannelParams) -> np.ndarray:
    probs = np.array([ch.f, ch.px, ch.py, ch.pz])
    return np.prod(probs[letters], axis=1)


def build_codeword(
    code: StabilizerCode, bits: Sequence[int], max_qubits: int = VECTOR_QUBIT_BUDGET
) -> DenseState:
    """``X1^b1 ... Xk^bk  prod_i (I + M_i) |seed>`` normalized.

    The seed is the all-zero basis state unless the projector annihilates it,
    in which case the next computational basis states are tried in order.
    """
    require_valid(code)
    n = code.n
    if n > max_qubits:
        raise BudgetExceededError(f"codeword of {n} qubits exceeds the vector budget ({max_qubits})")
    if len(bits) != code.k:
        raise ValueError(f"expected {code.k} logical bits, got {len(bits)}")
    gens = [str(g) for g in code.generators]
    dim = 1 << n
    for seed in range(dim):
        v = np.zeros(dim, dtype=complex)
        v[seed] = 1.0
        for g in gens:
            v = v + apply_pauli(g, v)
        norm = np.linalg.norm(v)
        if norm > 1e-9:
            break
    else:
        raise OracleError(f"stabilizer projector of {code.name} annihilates every basis state")
    v /= norm
    for j, b in enumerate(bits):
        if b:
            v = apply_pauli(str(code.logical_x[j]), v)
    return DenseState(v)


def codewords(code: StabilizerCode) -> np.ndarray:
    """All ``2**k`` codewords as rows, ordered by logical bit string (bit 1 most significant)."""
    rows = [
        build_codeword(code, bits).data
        for bits in itertools.product((0, 1), repeat=code.k)
    ]
    return np.array(rows)


def _accumulate(
    vectors: np.ndarray, n_act: int, dim_rest: int, ch: ChannelParams, chunk: int
) -> np.ndarray:
    """``sum_a sum_v eta_a (E_a (x) I) v v^dag (E_a (x) I)^dag`` for the rows ``v`` of ``vectors``.

    ``E_a`` acts on the first ``n_act`` qubits; ``dim_rest`` is the dimension of the
    untouched remainder.
    """
    num_vecs, full = vectors.shape
    d_act = 1 << n_act
    blocks = vectors.reshape(num_vecs, d_act, dim_rest)
    rho = np.zeros((full, full), dtype=complex)
    total = 1 << (2 * n_act)
    for start in range(0, total, chunk):
        letters = _all_pauli_letters(n_act, start, min(start + chunk, total))
        weights = _kraus_weights(letters, ch)
        keep = weights > 0
        if not keep.any():
            continue
        dest, phase = _monomial_form(letters[keep])
        m = len(dest)
        # (E v)[dest[c]] = phase[c] v[c]  <=>  (E v)[r] = phase[src[r]] v[src[r]]
        src = np.argsort(dest, axis=1)
        ph = np.take_along_axis(phase, src, axis=1)
        moved = blocks[:, src, :] * ph[None, :, :, None]  # (vecs, m, d_act, rest)
        cols = moved.transpose(1, 0, 2, 3).reshape(m * num_vecs, full)
        cols *= np.repeat(np.sqrt(weights[keep]), num_vecs)[:, None]
        rho += cols.T @ cols.conj()
    return rho


def input_state(code: StabilizerCode) -> DenseState:
    """Uniform mixture of the ``2**k`` codewords."""
    cw = codewords(code)
    return DenseState(cw.T @ cw.conj() / len(cw))


def purification(code: StabilizerCode) -> DenseState:
    """``2**(-k/2) sum_b |b> (x) |b>_A`` with the reference a second copy of the code."""
    cw = codewords(code)
    psi = sum(np.kron(c, c) for c in cw) / math.sqrt(len(cw))
    return DenseState(psi)


def apply_channel_dense(
    code: StabilizerCode,
    ch: ChannelParams,
    joint: bool = False,
    output_budget: int = OUTPUT_DIM_BUDGET,
    joint_budget: int = JOINT_DIM_BUDGET,
    chunk: int = 256,
) -> DenseState:
    """Channel output for the codeword mixture, or (``joint``) the system+reference state."""
    require_valid(code)
    n = code.n
    if joint:
        dim = 1 << (2 * n)
        if dim > joint_budget:
            raise BudgetExceededError(
                f"joint state of {code.name} has dimension 2**{2 * n} = {dim}, "
                f"above the joint budget {joint_budget}"
            )
        psi = purification(code).data
        rho = _accumulate(psi[None, :], n, 1 << n, ch, chunk)
    else:
        dim = 1 << n
        if dim > output_budget:
            raise BudgetExceededError(
                f"output state of {code.name} has dimension {dim}, above the budget {output_budget}"
            )
        cw = codewords(code)
        rho = _accumulate(cw, n, 1, ch, chunk) / len(cw)
    return DenseState(rho)


def apply_pauli_channel(rho: np.ndarray, ch: ChannelParams) -> np.ndarray:
    """``sum_a eta_a E_a rho E_a^dag`` for an arbitrary density matrix, Kraus term by term."""
    n = rho.shape[0].bit_length() - 1
    out = np.zeros_like(rho, dtype=complex)
    for letters in itertools.product(_LETTERS, repeat=n):
        text = "".join(letters)
        w = math.prod({"I": ch.f, "X": ch.px, "Y": ch.py, "Z": ch.pz}[c] for c in text)
        if w == 0:
            continue
        e = pauli_matrix(text)
        out += w * (e @ rho @ e.conj().T)
    return out


# eigensolver

def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings covering every (p, q) exactly once per sweep, disjoint within a round."""
    m = n + (n & 1)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(a, b), max(a, b)) for a, b in pairs if a < n and b < n]
        if pairs:
            ps, qs = zip(*pairs)
            rounds.append((np.array(ps), np.array(qs)))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def _off_diagonal_max(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.abs(off).max()) if a.shape[0] > 1 else 0.0


def jacobi_eigenvalues(
    m: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS
) -> np.ndarray:
    """Cyclic Jacobi for a Hermitian matrix, rotations of each round applied together."""
    a = np.array(m, dtype=complex)
    n = a.shape[0]
    rounds = _round_robin(n)
    for _ in range(max_sweeps):
        if _off_diagonal_max(a) < tol:
            return np.sort(np.diag(a).real)[::-1]
        for p, q in rounds:
            b = a[p, q]
            mag = np.abs(b)
            active = mag > 0.25 * tol
            if not active.any():
                continue
            p, q, b, mag = p[active], q[active], b[active], mag[active]
            app, aqq = a[p, p].real, a[q, q].real
            tau = (aqq - app) / (2.0 * mag)
            t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            ph = np.conj(b) / mag  # e^{-i arg b}
            # columns: A <- A U with U = diag(1, e^{-i phi}) [[c, s], [-s, c]]
            ap, aq = a[:, p].copy(), a[:, q]
            a[:, p] = ap * c - aq * (s * ph)
            a[:, q] = ap * s + aq * (c * ph)
            # rows: A <- U^dag A
            rp, rq = a[p, :].copy(), a[q, :]
            a[p, :] = rp * c[:, None] - rq * (s * np.conj(ph))[:, None]
            a[q, :] = rp * s[:, None] + rq * (c * np.conj(ph))[:, None]
            a[p, q] = 0.0
            a[q, p] = 0.0
    if _off_diagonal_max(a) < tol:
        return np.sort(np.diag(a).real)[::-1]
    raise OracleError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def hermitian_eigenvalues(
    m: np.ndarray | DenseState,
    method: Literal["jacobi", "lapack"] = "jacobi",
    max_dim: int = JOINT_DIM_BUDGET,
) -> np.ndarray:
    """Real eigenvalues in descending order."""
    a = m.data if isinstance(m, DenseState) else np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("eigenvalues need a square matrix")
    if a.shape[0] > max_dim:
        raise BudgetExceededError(f"dimension {a.shape[0]} exceeds eigensolver budget {max_dim}")
    if np.abs(a - a.conj().T).max() > 1e-10:
        raise ValueError("matrix is not Hermitian")
    if method == "jacobi":
        vals = jacobi_eigenvalues(a)
    elif method == "lapack":
        vals = np.linalg.eigvalsh(a)[::-1]
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    if abs(vals.sum() - np.trace(a).real) > 1e-9:
        raise OracleError("eigenvalue sum does not reproduce the trace")
    return vals


def dense_entropy(vals: np.ndarray) -> float:
    if np.any(vals < -1e-9):
        raise OracleError(f"eigenvalue {vals.min()!r} is too negative for a density matrix")
    v = vals[vals > 0]
    return float(-np.sum(v * np.log2(v))) + 0.0


@dataclass(frozen=True)
class OracleResult:
    output_eigenvalues: np.ndarray
    joint_eigenvalues: np.ndarray
    output_entropy: float
    joint_entropy: float
    ci_per_use: float


def oracle_spectra(
    code: StabilizerCode, ch: ChannelParams, method: Literal["jacobi", "lapack"] = "jacobi"
) -> OracleResult:
    out = hermitian_eigenvalues(apply_channel_dense(code, ch), method)
    joint = hermitian_eigenvalues(apply_channel_dense(code, ch, joint=True), method)
    s_out, s_joint = dense_entropy(out), dense_entropy(joint)
    return OracleResult(out, joint, s_out, s_joint, (s_out - s_joint) / code.n)


def oracle_output_eigenvalues(
    code: StabilizerCode, ch: ChannelParams, method: Literal["jacobi", "lapack"] = "jacobi"
) -> np.ndarray:
    return hermitian_eigenvalues(apply_channel_dense(code, ch), method)


def oracle_coherent_info(
    code: StabilizerCode, ch: ChannelParams, method: Literal["jacobi", "lapack"] = "jacobi"
) -> float:
    return oracle_spectra(code, ch, method).ci_per_use

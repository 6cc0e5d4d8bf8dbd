"""Stabilizer codes, structural validation and coset labels.

A Pauli ``p`` is labelled by its commutation pattern with the code's operators:

* ``s`` -- bit ``i`` is the symplectic product with generator ``i + 1``
* ``t`` -- bit ``j`` is the symplectic product with logical Z ``j + 1``
* ``u`` -- bit ``j`` is the symplectic product with logical X ``j + 1``

Two Paulis share ``(s, t, u)`` exactly when they differ by an element of the
stabilizer group, and share ``(s, t)`` exactly when they differ by an element of
the group generated by the stabilizer and all logical Z operators.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .pauli import PauliOperator, parse_pauli, symplectic_product


class InvalidCodeError(ValueError):
    """A code definition failed structural validation or could not be parsed."""


class CosetLabel(NamedTuple):
    s: int
    t: int
    u: int

    def index(self, k: int) -> int:
        """Flat sector index; ``u`` occupies the low ``k`` bits, then ``t``, then ``s``."""
        return (self.s << (2 * k)) | (self.t << k) | self.u

    @classmethod
    def from_index(cls, index: int, k: int) -> CosetLabel:
        mask = (1 << k) - 1
        return cls(index >> (2 * k), (index >> k) & mask, index & mask)

    def bitstrings(self, r: int, k: int) -> tuple[str, str, str]:
        """``s``, ``t``, ``u`` as bit strings with bit 1 leftmost (e.g. ``s=0001`` sets s_4)."""

        def bits(v: int, width: int) -> str:
            return "".join(str((v >> i) & 1) for i in range(width))

        return bits(self.s, r), bits(self.t, k), bits(self.u, k)


@dataclass(frozen=True)
class StabilizerCode:
    name: str
    n: int
    k: int
    generators: tuple[PauliOperator, ...]
    logical_x: tuple[PauliOperator, ...] = ()
    logical_z: tuple[PauliOperator, ...] = ()

    @classmethod
    def from_strings(
        cls,
        name: str,
        generators: Sequence[str],
        logical_x: Sequence[str] = (),
        logical_z: Sequence[str] = (),
        k: int | None = None,
    ) -> StabilizerCode:
        gens = tuple(parse_pauli(g) for g in generators)
        if not gens and not logical_x:
            raise InvalidCodeError("cannot infer n from an empty definition")
        n = (gens or tuple(parse_pauli(x) for x in logical_x))[0].n
        if k is None:
            k = len(logical_x)
        return cls(
            name,
            n,
            k,
            gens,
            tuple(parse_pauli(x) for x in logical_x),
            tuple(parse_pauli(z) for z in logical_z),
        )

    @property
    def r(self) -> int:
        """Number of stabilizer generators, ``n - k``."""
        return self.n - self.k

    @property
    def num_sectors(self) -> int:
        return 1 << (self.n + self.k)

    @property
    def coset_size(self) -> int:
        return 1 << (self.n - self.k)

    def all_operators(self) -> tuple[PauliOperator, ...]:
        return self.generators + self.logical_x + self.logical_z

    def to_text(self) -> str:
        return format_code(self)


@dataclass
class ValidationReport:
    code_name: str
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"{self.code_name}: ok"
        return "\n".join(f"{self.code_name}: {v}" for v in self.violations)


# GF(2) linear algebra on 2n-bit integers

def gf2_rank(rows: Sequence[int]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def gf2_solve(rows: Sequence[int], rhs: Sequence[int], width: int) -> int | None:
    """Find ``v`` with ``parity(rows[m] & v) == rhs[m]`` for every ``m``; None if inconsistent."""
    # augmented column sits at bit ``width``
    eqs = [row | ((b & 1) << width) for row, b in zip(rows, rhs)]
    pivot_rows: list[tuple[int, int]] = []
    for col in range(width):
        pick = next((i for i, e in enumerate(eqs) if (e >> col) & 1), None)
        if pick is None:
            continue
        pr = eqs.pop(pick)
        eqs = [e ^ pr if (e >> col) & 1 else e for e in eqs]
        pivot_rows = [(c, e ^ pr if (e >> col) & 1 else e) for c, e in pivot_rows]
        pivot_rows.append((col, pr))
    if any(e >> width & 1 for e in eqs):
        return None
    v = 0
    for col, e in pivot_rows:
        if e >> width & 1:
            v |= 1 << col
    return v


def _swapped(p: PauliOperator) -> int:
    # symplectic_product(a, b) == parity(a.symplectic_vector() & _swapped(b))
    return p.z_mask | (p.x_mask << p.n)


def validate_code(code: StabilizerCode) -> ValidationReport:
    report = ValidationReport(code.name)
    v = report.violations
    if code.n < 1:
        v.append(f"n must be positive, got {code.n}")
        return report
    if code.k < 0 or code.k > code.n:
        v.append(f"k must lie in [0, n], got {code.k}")
    if len(code.generators) != code.n - code.k:
        v.append(f"expected n-k = {code.n - code.k} generators, got {len(code.generators)}")
    if len(code.logical_x) != code.k:
        v.append(f"expected k = {code.k} logical X operators, got {len(code.logical_x)}")
    if len(code.logical_z) != code.k:
        v.append(f"expected k = {code.k} logical Z operators, got {len(code.logical_z)}")
    bad_len = [str(p) for p in code.all_operators() if p.n != code.n]
    if bad_len:
        v.append(f"operators of wrong length (n = {code.n}): {', '.join(bad_len)}")
        return report

    gens, lx, lz = code.generators, code.logical_x, code.logical_z
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            if symplectic_product(gens[a], gens[b]):
                v.append(f"generators M{a + 1}={gens[a]} and M{b + 1}={gens[b]} anticommute")
    rank = gf2_rank([g.symplectic_vector() for g in gens])
    if rank < len(gens):
        v.append(f"generators are dependent: rank {rank} < {len(gens)}")
    for kind, ops in (("X", lx), ("Z", lz)):
        for j, op in enumerate(ops, start=1):
            for i, g in enumerate(gens, start=1):
                if symplectic_product(op, g):
                    v.append(f"logical {kind}{j}={op} anticommutes with generator M{i}={g}")
    for i, a in enumerate(lx, start=1):
        for j, b in enumerate(lz, start=1):
            want = int(i == j)
            if symplectic_product(a, b) != want:
                rel = "anticommute" if want else "commute"
                v.append(f"logical X{i} and logical Z{j} must {rel}")
    for kind, ops in (("X", lx), ("Z", lz)):
        for a in range(len(ops)):
            for b in range(a + 1, len(ops)):
                if symplectic_product(ops[a], ops[b]):
                    v.append(f"logical {kind}{a + 1} and logical {kind}{b + 1} anticommute")
    total = len(gens) + len(lx) + len(lz)
    full_rank = gf2_rank([p.symplectic_vector() for p in code.all_operators()])
    if full_rank < total:
        v.append(
            f"generators and logical operators are dependent: rank {full_rank} < {total}"
        )
    return report


def require_valid(code: StabilizerCode) -> StabilizerCode:
    report = validate_code(code)
    if not report.ok:
        raise InvalidCodeError(str(report))
    return code


def coset_label(code: StabilizerCode, p: PauliOperator) -> CosetLabel:
    if p.n != code.n:
        raise ValueError(f"operator acts on {p.n} qubits, code has n = {code.n}")
    s = sum(symplectic_product(p, g) << i for i, g in enumerate(code.generators))
    t = sum(symplectic_product(p, z) << j for j, z in enumerate(code.logical_z))
    u = sum(symplectic_product(p, x) << j for j, x in enumerate(code.logical_x))
    return CosetLabel(s, t, u)


def destabilizers(code: StabilizerCode) -> tuple[PauliOperator, ...]:
    """Operators ``D_i`` with syndrome ``e_i`` that commute with every logical operator."""
    require_valid(code)
    ops = code.all_operators()
    rows = [_swapped(p) for p in ops]
    out = []
    for i in range(code.r):
        rhs = [int(m == i) for m in range(len(ops))]
        vec = gf2_solve(rows, rhs, 2 * code.n)
        if vec is None:  # pragma: no cover - excluded by full rank
            raise InvalidCodeError(f"no destabilizer for generator M{i + 1}")
        mask = (1 << code.n) - 1
        out.append(PauliOperator(code.n, vec & mask, vec >> code.n))
    return tuple(out)


def sector_representative(
    code: StabilizerCode, label: CosetLabel, destab: Sequence[PauliOperator] | None = None
) -> PauliOperator:
    """Some Pauli carrying ``label``: destabilizers for ``s``, then logical X for ``t``, Z for ``u``."""
    if destab is None:
        destab = destabilizers(code)
    x = z = 0
    for i, d in enumerate(destab):
        if label.s >> i & 1:
            x ^= d.x_mask
            z ^= d.z_mask
    for j in range(code.k):
        if label.t >> j & 1:
            x ^= code.logical_x[j].x_mask
            z ^= code.logical_x[j].z_mask
        if label.u >> j & 1:
            x ^= code.logical_z[j].x_mask
            z ^= code.logical_z[j].z_mask
    return PauliOperator(code.n, x, z)


def stabilizer_elements(code: StabilizerCode) -> Iterator[PauliOperator]:
    """All ``2**(n-k)`` elements of the stabilizer group, in Gray-code order."""
    x = z = 0
    yield PauliOperator(code.n, 0, 0)
    for step in range(1, code.coset_size):
        g = code.generators[(step & -step).bit_length() - 1]
        x ^= g.x_mask
        z ^= g.z_mask
        yield PauliOperator(code.n, x, z)


def coset_head(code: StabilizerCode, label: CosetLabel) -> PauliOperator:
    """Minimum-weight member of the coset, ties broken by ``(x_mask, z_mask)``."""
    rep = sector_representative(code, label)
    return min(
        (rep * m for m in stabilizer_elements(code)),
        key=lambda p: (p.weight, p.x_mask, p.z_mask),
    )


# registry and text format

BUILTIN_CODES: dict[str, StabilizerCode] = {
    "513": StabilizerCode.from_strings(
        "513",
        ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"],
        ["XXXXX"],
        ["ZZZZZ"],
    ),
    "steane713": StabilizerCode.from_strings(
        "steane713",
        ["XXXXIII", "XXIIXXI", "XIXIXIX", "ZZZZIII", "ZZIIZZI", "ZIZIZIZ"],
        ["IIIIXXX"],
        ["IIIIZZZ"],
    ),
    "833": StabilizerCode.from_strings(
        "833",
        ["XXXXXXXX", "ZZZZZZZZ", "IXIXYZYZ", "IXZYIXZY", "IYXZXZIY"],
        ["XXIIIZIZ", "XIXZIIZI", "XIIZXZII"],
        ["IZIZIZIZ", "IIZZIIZZ", "IIIIZZZZ"],
    ),
}


def parse_code(text: str, source: str = "<string>") -> StabilizerCode:
    """Parse the line-oriented definition format (``name``, ``n``, ``k``, ``stabilizer``, ...)."""
    name = None
    n = k = None
    lists: dict[str, list[str]] = {"stabilizer": [], "logical_x": [], "logical_z": []}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidCodeError(f"{source}:{lineno}: expected '<directive> <value>'")
        key, value = parts
        if key == "name":
            name = value
        elif key in ("n", "k"):
            try:
                num = int(value)
            except ValueError:
                raise InvalidCodeError(f"{source}:{lineno}: {key} must be an integer") from None
            if key == "n":
                n = num
            else:
                k = num
        elif key in lists:
            lists[key].append(value)
        else:
            raise InvalidCodeError(f"{source}:{lineno}: unknown directive {key!r}")
    if n is None or k is None:
        raise InvalidCodeError(f"{source}: both 'n' and 'k' directives are required")
    try:
        code = StabilizerCode(
            name or os.path.splitext(os.path.basename(source))[0],
            n,
            k,
            tuple(parse_pauli(s) for s in lists["stabilizer"]),
            tuple(parse_pauli(s) for s in lists["logical_x"]),
            tuple(parse_pauli(s) for s in lists["logical_z"]),
        )
    except ValueError as exc:
        raise InvalidCodeError(f"{source}: {exc}") from exc
    return code


def format_code(code: StabilizerCode) -> str:
    lines = [f"name {code.name}", f"n {code.n}", f"k {code.k}"]
    lines += [f"stabilizer {g}" for g in code.generators]
    lines += [f"logical_x {x}" for x in code.logical_x]
    lines += [f"logical_z {z}" for z in code.logical_z]
    return "\n".join(lines) + "\n"


def load_code(selector: str) -> StabilizerCode:
    """Built-in registry name, or path to a definition file."""
    if selector in BUILTIN_CODES:
        return BUILTIN_CODES[selector]
    if os.path.exists(selector):
        try:
            with open(selector, encoding="utf-8") as fh:
                return parse_code(fh.read(), source=selector)
        except OSError as exc:
            raise InvalidCodeError(f"cannot read {selector}: {exc}") from exc
    raise InvalidCodeError(
        f"unknown code {selector!r}; built-ins are {', '.join(sorted(BUILTIN_CODES))}"
    )

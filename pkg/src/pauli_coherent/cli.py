"""Command-line interface: ``codes``, ``enumerate``, ``ci``, ``verify``, ``hashing``.

Exit codes: 0 success, 1 input or validation error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
import tempfile
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import oracle
from .enumerator import build_table, compositions
from .pauli import PauliParseError
from .spectra import (
    ChannelParams,
    SpectrumError,
    ci_curve,
    coherent_info_per_use,
    depolarizing_family,
    grid_points,
    hashing_bound,
    joint_spectrum,
    output_spectrum,
    pauli_family,
)
from .stabilizer import (
    BUILTIN_CODES,
    InvalidCodeError,
    StabilizerCode,
    load_code,
    validate_code,
)

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2
CSV_HEADER = "p,f,px,py,pz,ci_per_use,hashing_bound"


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class Grid:
    start: float
    end: float
    count: int

    def points(self) -> np.ndarray:
        return grid_points(self.start, self.end, self.count)


def parse_grid(text: str) -> Grid:
    """``start:end:count`` with inclusive endpoints; a bare number is a one-point grid."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            v = float(parts[0])
            return _checked_grid(Grid(v, v, 1))
        if len(parts) == 3:
            return _checked_grid(Grid(float(parts[0]), float(parts[1]), int(parts[2])))
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}: {exc}") from None
    raise UsageError(f"bad grid {text!r}: expected start:end:count")


def _checked_grid(g: Grid) -> Grid:
    try:
        g.points()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return g


def _fmt(v: float) -> str:
    s = f"{v:.12g}"
    return "0" if s == "-0" else s


def _load(selector: str) -> StabilizerCode:
    code = load_code(selector)
    report = validate_code(code)
    if not report.ok:
        raise InvalidCodeError(str(report))
    return code


# subcommands

def cmd_codes(args: argparse.Namespace, out: io.TextIOBase) -> int:
    if args.action == "list":
        for name, code in BUILTIN_CODES.items():
            print(f"{name}\tn={code.n}\tk={code.k}", file=out)
        return EXIT_OK
    if not args.target:
        raise UsageError("codes show needs a code name or file")
    code = load_code(args.target)
    report = validate_code(code)
    print(f"name {code.name}", file=out)
    print(f"n {code.n}", file=out)
    print(f"k {code.k}", file=out)
    for g in code.generators:
        print(f"stabilizer {g}", file=out)
    for x in code.logical_x:
        print(f"logical_x {x}", file=out)
    for z in code.logical_z:
        print(f"logical_z {z}", file=out)
    print(str(report), file=out)
    return EXIT_OK if report.ok else EXIT_INPUT


def cmd_enumerate(args: argparse.Namespace, out: io.TextIOBase) -> int:
    code = _load(args.code)
    table = build_table(code, args.method)
    marg = table.weight_marginals()
    comps = compositions(code.n)
    hex_s = max(1, (code.r + 3) // 4)
    hex_k = max(1, (code.k + 3) // 4)
    for idx, label in enumerate(table.labels()):
        line = (
            f"{label.s:0{hex_s}x} {label.t:0{hex_k}x} {label.u:0{hex_k}x} "
            + " ".join(str(int(c)) for c in marg[idx])
        )
        if args.compositions:
            nz = np.flatnonzero(table.counts[idx])
            line += " | " + " ".join(
                "{},{},{}:{}".format(*comps[c], int(table.counts[idx, c])) for c in nz
            )
        print(line, file=out)
    print(
        f"# sectors {table.num_sectors} total {int(table.counts.sum())} method {table.method}",
        file=out,
    )
    return EXIT_OK


def _parse_pauli_triple(text: str) -> list[str]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"--pauli expects px,py,pz, got {text!r}")
    return parts


def _channel_or_error(build, *a) -> ChannelParams:
    try:
        return build(*a)
    except ValueError as exc:
        raise UsageError(f"invalid channel: {exc}") from None


def _point_channel(args: argparse.Namespace) -> ChannelParams:
    if args.depolarizing is not None:
        return _channel_or_error(ChannelParams.depolarizing, args.depolarizing)
    try:
        px, py, pz = (float(v) for v in _parse_pauli_triple(args.pauli))
    except ValueError:
        raise UsageError(f"--pauli components must be numbers, got {args.pauli!r}") from None
    return _channel_or_error(ChannelParams.pauli, px, py, pz)


def _curve_family(args: argparse.Namespace):
    """Returns (family, grid points)."""
    if args.depolarizing:
        if args.pauli is not None:
            raise UsageError("give exactly one of --depolarizing and --pauli")
        if args.p is None:
            raise UsageError("--depolarizing needs --p start:end:count")
        return depolarizing_family(), parse_grid(args.p).points()
    if args.pauli is None:
        raise UsageError("give exactly one of --depolarizing and --pauli")
    if args.p is not None:
        raise UsageError("--p applies to --depolarizing; put the grid inside --pauli")
    parts = _parse_pauli_triple(args.pauli)
    sweep = [i for i, s in enumerate(parts) if ":" in s]
    if len(sweep) > 1:
        raise UsageError("at most one --pauli component may be a grid")
    try:
        fixed = [None if ":" in s else float(s) for s in parts]
    except ValueError:
        raise UsageError(f"--pauli components must be numbers, got {args.pauli!r}") from None
    if not sweep:
        ch = _channel_or_error(ChannelParams.pauli, *fixed)
        return (lambda _p, ch=ch: ch), np.array([1.0 - ch.f])
    return pauli_family(*fixed), parse_grid(parts[sweep[0]]).points()


def cmd_ci(args: argparse.Namespace, out: io.TextIOBase) -> int:
    code = _load(args.code)
    family, points = _curve_family(args)
    try:
        rows = ci_curve(code, family, points)
    except ValueError as exc:
        raise UsageError(f"invalid channel in grid: {exc}") from None
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for row in rows:
        ch = row.channel
        vals = (row.p, ch.f, ch.px, ch.py, ch.pz, row.ci_per_use, row.hashing_bound)
        buf.write(",".join(_fmt(v) for v in vals) + "\n")
    if args.out:
        _write_atomic(args.out, buf.getvalue())
    else:
        out.write(buf.getvalue())
    return EXIT_OK


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".csv")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_verify(args: argparse.Namespace, out: io.TextIOBase) -> int:
    code = _load(args.code)
    ch = _point_channel(args)
    table = build_table(code)
    mode = args.mode
    checks: list[tuple[str, float, float]] = []
    try:
        if mode in ("output", "both"):
            sp = output_spectrum(table, ch)
            dense = oracle.apply_channel_dense(code, ch, output_budget=args.output_budget)
            ev = oracle.hermitian_eigenvalues(dense, args.eigensolver)
            checks.append(("S(output)", sp.entropy, oracle.dense_entropy(ev)))
            dev = float(np.abs(ev - sp.expanded()).max())
            checks.append(("output spectrum max deviation", 0.0, dev))
        if mode in ("joint", "both"):
            sp = joint_spectrum(table, ch)
            dense = oracle.apply_channel_dense(
                code, ch, joint=True, joint_budget=args.joint_budget
            )
            ev = oracle.hermitian_eigenvalues(dense, args.eigensolver, max_dim=args.joint_budget)
            checks.append(("S(joint)", sp.entropy, oracle.dense_entropy(ev)))
            ref = np.zeros(len(ev))
            ref[: sp.dimension] = sp.expanded()
            checks.append(("joint spectrum max deviation", 0.0, float(np.abs(ev - ref).max())))
        if mode == "both":
            s_out, s_joint = checks[0][2], checks[2][2]
            checks.append(
                ("ci_per_use", coherent_info_per_use(code, ch, table), (s_out - s_joint) / code.n)
            )
    except oracle.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(
            "hint: choose --mode output, a smaller code, or raise --joint-budget/--output-budget",
            file=sys.stderr,
        )
        return EXIT_INPUT
    ok = True
    for name, enum_v, oracle_v in checks:
        diff = abs(enum_v - oracle_v)
        passed = diff <= args.tol
        ok &= passed
        print(
            f"{name}: enumeration={enum_v:.15g} oracle={oracle_v:.15g} "
            f"diff={diff:.3e} {'PASS' if passed else 'FAIL'}",
            file=out,
        )
    print("PASS" if ok else "FAIL", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_hashing(args: argparse.Namespace, out: io.TextIOBase) -> int:
    if args.p is not None:
        if args.pauli is not None:
            raise UsageError("--p sweeps the depolarizing family; it cannot be combined with --pauli")
        print("p,hashing_bound", file=out)
        for p in parse_grid(args.p).points():
            ch = _channel_or_error(ChannelParams.depolarizing, float(p))
            print(f"{_fmt(p)},{_fmt(hashing_bound(ch))}", file=out)
        return EXIT_OK
    if (args.depolarizing is None) == (args.pauli is None):
        raise UsageError("give exactly one of --depolarizing P, --pauli px,py,pz or --p grid")
    print(_fmt(hashing_bound(_point_channel(args))), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pauli-ci",
        description="Exact coherent information of Pauli channels with stabilizer-code inputs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("codes", help="list built-in codes or show/validate one")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("target", nargs="?", help="built-in name or code-definition file")
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("enumerate", help="dump the per-sector type-count table")
    p.add_argument("--code", required=True)
    p.add_argument("--method", choices=["full-scan", "coset-walk"], default=None)
    p.add_argument("--compositions", action="store_true", help="append (i,j,l):count lists")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("ci", help="coherent information per channel use, as CSV")
    p.add_argument("--code", required=True)
    p.add_argument("--depolarizing", action="store_true")
    p.add_argument("--p", help="depolarizing grid start:end:count")
    p.add_argument("--pauli", help="px,py,pz; one component may be a grid start:end:count")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("verify", help="compare enumeration against the dense oracle")
    p.add_argument("--code", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--depolarizing", type=float, metavar="P")
    group.add_argument("--pauli", metavar="PX,PY,PZ")
    p.add_argument("--mode", choices=["output", "joint", "both"], default="both")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--eigensolver", choices=["jacobi", "lapack"], default="jacobi")
    p.add_argument("--output-budget", type=int, default=oracle.OUTPUT_DIM_BUDGET)
    p.add_argument("--joint-budget", type=int, default=oracle.JOINT_DIM_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hashing", help="hashing bound 1 - H(f, px, py, pz)")
    p.add_argument("--depolarizing", type=float, metavar="P")
    p.add_argument("--pauli", metavar="PX,PY,PZ")
    p.add_argument("--p", help="depolarizing grid start:end:count (CSV output)")
    p.set_defaults(func=cmd_hashing)
    return parser


def main(argv: Sequence[str] | None = None, out: io.TextIOBase | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except (UsageError, InvalidCodeError, PauliParseError, SpectrumError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

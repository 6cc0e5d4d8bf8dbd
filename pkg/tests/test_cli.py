import io
import subprocess
import sys

import pytest

from pauli_coherent.cli import CSV_HEADER, main, parse_grid, UsageError
from pauli_coherent.spectra import ChannelParams, coherent_info_per_use, hashing_bound
from pauli_coherent.stabilizer import BUILTIN_CODES


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_codes_list():
    code, text = run("codes", "list")
    assert code == 0
    for name in ("513", "steane713", "833"):
        assert name in text


def test_codes_show_builtin():
    code, text = run("codes", "show", "513")
    stab = [l for l in text.splitlines() if l.startswith("stabilizer")]
    assert code == 0 and len(stab) == 4 and stab[0] == "stabilizer XZZXI"
    assert "513: ok" in text


def test_codes_show_bad_file(tmp_path):
    f = tmp_path / "bad.code"
    f.write_text("name bad\nn 1\nk 0\nstabilizer X\nstabilizer Z\n")
    code, text = run("codes", "show", str(f))
    assert code == 1 and "anticommute" in text


def test_codes_show_unknown(capsys):
    code, _ = run("codes", "show", "nope")
    assert code == 1
    assert "unknown code" in capsys.readouterr().err


@pytest.mark.parametrize(
    "name, sectors, per_sector", [("513", 64, 16), ("steane713", 256, 64), ("833", 2048, 32)]
)
def test_enumerate(name, sectors, per_sector):
    code, text = run("enumerate", "--code", name)
    assert code == 0
    lines = text.splitlines()
    body = [l for l in lines if not l.startswith("#")]
    assert len(body) == sectors
    for line in body:
        fields = line.split()
        assert sum(int(v) for v in fields[3:]) == per_sector
    assert lines[-1].startswith(f"# sectors {sectors} total {4 ** BUILTIN_CODES[name].n}")


def test_enumerate_first_line_and_compositions():
    _, text = run("enumerate", "--code", "513", "--compositions")
    first = text.splitlines()[0]
    assert first.startswith("0 0 0 1 0 0 0 15 0 | 0,0,0:1")


def test_enumerate_methods_identical():
    _, a = run("enumerate", "--code", "833", "--method", "full-scan", "--compositions")
    _, b = run("enumerate", "--code", "833", "--method", "coset-walk", "--compositions")
    assert a.splitlines()[:-1] == b.splitlines()[:-1]


def test_enumerate_invalid_code(tmp_path):
    f = tmp_path / "bad.code"
    f.write_text("name bad\nn 2\nk 0\nstabilizer XX\nstabilizer XX\n")
    assert run("enumerate", "--code", str(f))[0] == 1


def test_ci_depolarizing_grid(tmp_path):
    out = tmp_path / "ci.csv"
    code, _ = run("ci", "--code", "513", "--depolarizing", "--p", "0:0.05:101", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 102
    assert lines[1].split(",")[5] == "0.2"


def test_ci_eight_qubit_first_row():
    code, text = run("ci", "--code", "833", "--depolarizing", "--p", "0:0.05:101")
    assert code == 0
    assert text.splitlines()[1].split(",")[5] == "0.375"


def test_ci_single_pauli_point_matches_library():
    code, text = run("ci", "--code", "513", "--pauli", "0.01,0.02,0.03")
    assert code == 0
    rows = text.splitlines()[1:]
    assert len(rows) == 1
    ch = ChannelParams.pauli(0.01, 0.02, 0.03)
    vals = [float(v) for v in rows[0].split(",")]
    assert vals[1:5] == pytest.approx([ch.f, 0.01, 0.02, 0.03], abs=1e-12)
    assert vals[5] == pytest.approx(coherent_info_per_use(BUILTIN_CODES["513"], ch), rel=1e-11)
    assert vals[6] == pytest.approx(hashing_bound(ch), rel=1e-11)


def test_ci_pauli_sweep():
    code, text = run("ci", "--code", "513", "--pauli", "0:0.02:5,0.001,0.001")
    assert code == 0
    rows = [r.split(",") for r in text.splitlines()[1:]]
    assert [float(r[0]) for r in rows] == pytest.approx([0, 0.005, 0.01, 0.015, 0.02])
    assert all(r[3] == "0.001" for r in rows)


def test_ci_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        run("ci", "--code", "steane713", "--depolarizing", "--p", "0:0.08:17", "--out", str(path))
    assert a.read_bytes() == b.read_bytes()


def test_ci_invalid_grid_leaves_no_file(tmp_path):
    out = tmp_path / "ci.csv"
    code, _ = run("ci", "--code", "513", "--depolarizing", "--p", "0:0.5:11", "--out", str(out))
    assert code == 1
    assert not out.exists()
    assert list(tmp_path.iterdir()) == []


@pytest.mark.parametrize(
    "argv",
    [
        ["ci", "--code", "513"],
        ["ci", "--code", "513", "--depolarizing"],
        ["ci", "--code", "513", "--depolarizing", "--p", "0:1"],
        ["ci", "--code", "513", "--depolarizing", "--pauli", "0.1,0,0", "--p", "0:0:1"],
        ["ci", "--code", "513", "--pauli", "0:1:2,0:1:2,0"],
        ["ci", "--code", "513", "--pauli", "a,b,c"],
        ["ci", "--code", "513", "--depolarizing", "--p", "0:0.1:1"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_1(argv):
    assert run(*argv)[0] == 1


def test_parse_grid():
    g = parse_grid("0:0.05:101")
    assert (g.start, g.end, g.count) == (0.0, 0.05, 101)
    assert parse_grid("0.3").count == 1
    with pytest.raises(UsageError):
        parse_grid("0.2:0.1:3")


def test_verify_joint_passes():
    code, text = run("verify", "--code", "513", "--depolarizing", "0.01", "--mode", "joint",
                     "--eigensolver", "lapack")
    assert code == 0 and text.strip().endswith("PASS")


def test_verify_both_noiseless():
    code, text = run("verify", "--code", "513", "--depolarizing", "0", "--mode", "both",
                     "--eigensolver", "lapack")
    assert code == 0
    ci_line = [l for l in text.splitlines() if l.startswith("ci_per_use")][0]
    assert "enumeration=0.2 " in ci_line


def test_verify_budget_exceeded(capsys):
    code, _ = run("verify", "--code", "833", "--depolarizing", "0.01", "--mode", "joint")
    assert code == 1
    assert "budget" in capsys.readouterr().err


def test_verify_mismatch_exit_2():
    # a negative tolerance can never be met
    code, text = run("verify", "--code", "513", "--depolarizing", "0.01", "--mode", "output",
                     "--tol", "-1")
    assert code == 2 and "FAIL" in text


def test_hashing():
    code, text = run("hashing", "--depolarizing", "0.1")
    assert code == 0 and float(text) == pytest.approx(-0.356779, abs=1e-6)
    code, text = run("hashing", "--pauli", "0,0,0")
    assert text.strip() == "1"
    code, text = run("hashing", "--p", "0:0.1:3")
    assert text.splitlines() == ["p,hashing_bound", "0,1", "0.05,0.152415320175", "0.1,-0.356779649447"]
    assert run("hashing")[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pauli_coherent", "codes", "list"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "steane713" in proc.stdout

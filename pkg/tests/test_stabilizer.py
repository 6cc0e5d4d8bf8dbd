import itertools
from collections import Counter

import pytest

from pauli_coherent.pauli import PauliOperator, parse_pauli
from pauli_coherent.stabilizer import (
    BUILTIN_CODES,
    CosetLabel,
    InvalidCodeError,
    StabilizerCode,
    coset_head,
    coset_label,
    destabilizers,
    format_code,
    gf2_rank,
    gf2_solve,
    load_code,
    parse_code,
    sector_representative,
    stabilizer_elements,
    validate_code,
)

FIVE = BUILTIN_CODES["513"]


def all_paulis(n):
    for x in range(1 << n):
        for z in range(1 << n):
            yield PauliOperator(n, x, z)


def test_builtin_codes_validate(code):
    report = validate_code(code)
    assert report.ok, str(report)


def test_builtin_generators_in_listed_order():
    assert [str(g) for g in FIVE.generators] == ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
    assert str(BUILTIN_CODES["833"].generators[2]) == "IXIXYZYZ"


def test_anticommuting_generators_reported():
    code = StabilizerCode.from_strings("bad", ["X", "Z"], k=0)
    report = validate_code(code)
    assert not report.ok
    assert any("anticommute" in v for v in report.violations)


def test_rank_deficiency_reported():
    code = StabilizerCode.from_strings("dup", ["XX", "XX"], k=0)
    report = validate_code(code)
    assert any("dependent" in v for v in report.violations)
    assert not any("anticommute" in v for v in report.violations)


def test_dimension_checks_come_first():
    code = StabilizerCode("short", 3, 1, (parse_pauli("XX"), parse_pauli("ZZZ")), (), ())
    report = validate_code(code)
    assert "logical X" in report.violations[0] or "generators" in report.violations[0]
    assert any("wrong length" in v for v in report.violations)
    assert not any("anticommute" in v for v in report.violations)


def test_logical_pairing_checked():
    # swap the logicals of the five-qubit code for two commuting ones
    code = StabilizerCode.from_strings(
        "513-broken", [str(g) for g in FIVE.generators], ["XXXXX"], ["XXXXX"]
    )
    report = validate_code(code)
    assert any("logical X1 and logical Z1 must anticommute" in v for v in report.violations)


def test_logical_in_stabilizer_span_rejected():
    g = [str(x) for x in FIVE.generators]
    m1m2 = str(FIVE.generators[0] * FIVE.generators[1])
    code = StabilizerCode.from_strings("513-span", g, [m1m2], ["ZZZZZ"])
    assert not validate_code(code).ok


def test_gf2_helpers():
    assert gf2_rank([0b011, 0b101, 0b110]) == 2
    v = gf2_solve([0b011, 0b110], [1, 0], 3)
    assert bin(v & 0b011).count("1") % 2 == 1
    assert bin(v & 0b110).count("1") % 2 == 0
    assert gf2_solve([0b01, 0b01], [0, 1], 2) is None


def test_label_examples():
    assert coset_label(FIVE, PauliOperator.identity(5)) == CosetLabel(0, 0, 0)
    assert coset_label(FIVE, parse_pauli("ZZZZZ")) == CosetLabel(0, 0, 1)
    lab = coset_label(FIVE, parse_pauli("XIIII"))
    assert lab.bitstrings(4, 1) == ("0001", "1", "0")


def test_label_rejects_wrong_size():
    with pytest.raises(ValueError):
        coset_label(FIVE, parse_pauli("XX"))


def test_label_index_round_trip():
    for idx in range(1 << 8):
        assert CosetLabel.from_index(idx, 3).index(3) == idx


def test_destabilizers_flip_one_syndrome_bit(code):
    for i, d in enumerate(destabilizers(code)):
        assert coset_label(code, d) == CosetLabel(1 << i, 0, 0)


def test_logicals_flip_their_sector_bits(code):
    for j in range(code.k):
        assert coset_label(code, code.logical_x[j]) == CosetLabel(0, 1 << j, 0)
        assert coset_label(code, code.logical_z[j]) == CosetLabel(0, 0, 1 << j)


def test_stabilizer_elements_are_the_group(code):
    elems = list(stabilizer_elements(code))
    assert len(set(elems)) == code.coset_size
    for e in elems:
        assert coset_label(code, e) == CosetLabel(0, 0, 0)


def test_partition_exhaustive(code):
    """Every label is hit by exactly 2**(n-k) of the 4**n Paulis."""
    hits = Counter(coset_label(code, p) for p in all_paulis(code.n))
    assert len(hits) == 1 << (code.n + code.k)
    assert set(hits.values()) == {1 << (code.n - code.k)}


def test_label_constant_on_stabilizer_cosets(rng):
    for name, code in BUILTIN_CODES.items():
        elems = list(stabilizer_elements(code))
        for _ in range(50):
            p = PauliOperator(code.n, int(rng.integers(1 << code.n)), int(rng.integers(1 << code.n)))
            q = elems[int(rng.integers(len(elems)))]
            assert coset_label(code, p * q) == coset_label(code, p)


def test_label_homomorphism(rng):
    code = BUILTIN_CODES["833"]
    for _ in range(200):
        p, q = (
            PauliOperator(8, int(rng.integers(256)), int(rng.integers(256))) for _ in range(2)
        )
        lp, lq, lpq = coset_label(code, p), coset_label(code, q), coset_label(code, p * q)
        assert lpq == CosetLabel(lp.s ^ lq.s, lp.t ^ lq.t, lp.u ^ lq.u)


def test_st_label_constant_on_s_times_logical_z():
    code = BUILTIN_CODES["833"]
    p = parse_pauli("XYIIZIIX")
    base = coset_label(code, p)
    for bits in itertools.product((0, 1), repeat=3):
        q = p
        for j, b in enumerate(bits):
            if b:
                q = q * code.logical_z[j]
        lab = coset_label(code, q)
        assert (lab.s, lab.t) == (base.s, base.t)


def test_sector_representative_has_label(code):
    for idx in range(code.num_sectors):
        lab = CosetLabel.from_index(idx, code.k)
        assert coset_label(code, sector_representative(code, lab)) == lab


def test_coset_head_is_min_weight():
    # single-qubit errors of a distance-3 code head their own cosets
    for q in range(1, 6):
        for letter in "XYZ":
            e = parse_pauli("I" * (q - 1) + letter + "I" * (5 - q))
            assert coset_head(FIVE, coset_label(FIVE, e)) == e
    assert coset_head(FIVE, CosetLabel(0, 0, 0)).is_identity


def test_code_text_round_trip(code):
    parsed = parse_code(format_code(code))
    assert parsed == code


def test_parse_code_errors():
    with pytest.raises(InvalidCodeError):
        parse_code("name x\nn 1\n")
    with pytest.raises(InvalidCodeError):
        parse_code("name x\nn 1\nk 0\nbogus X\n")
    with pytest.raises(InvalidCodeError):
        parse_code("n one\nk 0\n")


def test_load_code(tmp_path):
    assert load_code("513") is FIVE
    f = tmp_path / "rep.code"
    f.write_text("name rep3\nn 3\nk 1\nstabilizer ZZI\nstabilizer IZZ\nlogical_x XXX\nlogical_z ZII\n")
    code = load_code(str(f))
    assert code.name == "rep3" and validate_code(code).ok
    with pytest.raises(InvalidCodeError):
        load_code("no-such-code")


def test_k_zero_code_accepted():
    code = StabilizerCode.from_strings("bell", ["XX", "ZZ"], k=0)
    assert validate_code(code).ok
    assert coset_label(code, parse_pauli("XI")) == CosetLabel(0b10, 0, 0)

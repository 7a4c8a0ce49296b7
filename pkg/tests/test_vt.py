import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import brute_descendants, brute_vt
from vtcodes.errors import CapacityError, DomainError
from vtcodes.vt import (
    BAD_LENGTH,
    NOT_A_DESCENDANT,
    Code,
    VTParams,
    check_length,
    decode_single_deletion,
    is_linear,
    linear_code,
    linear_encode,
    linear_params,
    necklace_sequence,
    read_code_table,
    vt0_size,
    vt1_size,
    vt_checksum,
    vt_code,
    vt_size_formula,
    write_code_table,
)
from vtcodes.words import Word

TABLE1 = {
    1: [1, 1],
    2: [2, 1, 1],
    3: [2, 2, 2, 2],
    4: [4, 3, 3, 3, 3],
    5: [6, 5, 5, 6, 5, 5],
    6: [10, 9, 9, 9, 9, 9, 9],
    7: [16, 16, 16, 16, 16, 16, 16, 16],
    8: [30, 28, 28, 29, 28, 28, 29, 28, 28],
}


def test_params_normalise_residue():
    assert VTParams(5, 7).a == 1
    assert VTParams(5, -1).a == 5
    with pytest.raises(DomainError):
        VTParams(0, 0)


def test_small_codes(w):
    assert [str(x) for x in vt_code((4, 0))] == ["0000", "0110", "1001", "1111"]
    assert w("11011") in vt_code((5, 0))
    assert w("110011") in vt_code((6, 0))
    assert [str(x) for x in vt_code((5, 0))] == [
        "00000", "00111", "01010", "10001", "11011", "11100",
    ]


def test_enumeration_matches_brute_force():
    for n in range(1, 11):
        for a in range(n + 1):
            assert [str(x) for x in vt_code((n, a))] == brute_vt(n, a)


def test_table_one():
    for n, row in TABLE1.items():
        assert [vt_size_formula(n, a) for a in range(n + 1)] == row
        assert [len(brute_vt(n, a)) for a in range(n + 1)] == row


def test_size_formula_against_enumeration():
    for n in range(1, 17):
        for a in range(n + 1):
            assert vt_size_formula(n, a) == len(vt_code((n, a)))


def test_vt0_largest_vt1_smallest():
    for n in range(1, 21):
        sizes = [vt_size_formula(n, a) for a in range(n + 1)]
        assert vt0_size(n) == max(sizes)
        assert vt1_size(n) == min(sizes)
        assert vt0_size(n) * (n + 1) >= 2 ** n


def test_vt0_is_necklace_sequence():
    for n in range(1, 31):
        assert vt0_size(n) == necklace_sequence(n + 1)
    assert [necklace_sequence(m) for m in range(1, 9)] == [1, 1, 2, 2, 4, 6, 10, 16]


def test_code_rejects_wrong_members(w):
    with pytest.raises(DomainError):
        Code(4, frozenset({w("0001")}), "VT", VTParams(4, 0))
    with pytest.raises(DomainError):
        Code.from_words(["01", "011"])
    with pytest.raises(DomainError):
        Code.from_words([])


def test_enumeration_cap():
    with pytest.raises(CapacityError):
        vt_code((25, 0))


def test_decode_example(w):
    out = decode_single_deletion(w("0010"), (5, 0))
    assert out.ok and str(out.recovered) == "01010"


def test_decode_passthrough_and_failures(w):
    assert str(decode_single_deletion(w("01010"), (5, 0)).recovered) == "01010"
    assert decode_single_deletion(w("01011"), (5, 0)).failure == NOT_A_DESCENDANT
    assert decode_single_deletion(w("01"), (5, 0)).failure == BAD_LENGTH
    out = decode_single_deletion(w("0001"), VTParams(5, 0))
    assert out.ok or out.failure == NOT_A_DESCENDANT


def decode_by_search(y: str, n: int, a: int):
    hits = [x for x in brute_vt(n, a) if y in brute_descendants(x, 1)]
    return hits


def test_decoder_matches_search_on_every_received_word():
    for n in range(2, 9):
        for a in range(n + 1):
            for y in itertools.product("01", repeat=n - 1):
                y = "".join(y)
                hits = decode_by_search(y, n, a)
                assert len(hits) <= 1
                out = decode_single_deletion(Word.from_str(y), (n, a))
                if hits:
                    assert str(out.recovered) == hits[0]
                else:
                    assert out.failure == NOT_A_DESCENDANT


@given(st.integers(2, 30).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(0, (1 << n) - 1), st.integers(1, n))))
def test_decoder_recovers_any_single_deletion(case):
    n, x, i = case
    u = Word(n, x)
    text = str(u)
    y = Word.from_str(text[: i - 1] + text[i:])
    assert decode_single_deletion(y, (n, vt_checksum(u))).recovered == u


def test_check_length():
    def brute(k):
        c = 1
        while (c - 0.5) ** 2 < 2 * k + 2.25:
            c += 1
        return c

    for k in range(1, 500):
        assert check_length(k) == brute(k)
    assert linear_params(4).n == 8


def test_linear_encode_examples():
    assert str(linear_encode("1")) == "1001"
    assert str(linear_encode("1111")) == "11110001"
    assert str(linear_encode([0, 0, 0, 0])) == "00000000"
    with pytest.raises(DomainError):
        linear_params(0)


@given(st.text(alphabet="01", min_size=1, max_size=40))
def test_linear_encode_systematic_and_valid(info):
    x = linear_encode(info)
    assert str(x).startswith(info)
    assert vt_checksum(x) == 0


def test_linear_variant_code_is_correcting():
    for k in range(1, 9):
        code = linear_code(k)
        assert len(code) == 2 ** k
        assert code.words <= vt_code((code.n, 0)).words
        balls = [brute_descendants(str(x), 1) for x in code]
        assert sum(map(len, balls)) == len(set().union(*balls))
    with pytest.raises(CapacityError):
        linear_code(17)


def systematic_linear_subcodes(k):
    # count generator matrices [I | P] whose whole span sits inside VT_0(n)
    p = linear_params(k)
    n, c = p.n, p.c
    vt0 = set(vt_code((n, 0)).values())
    rows = [
        [r for r in ((1 << (n - 1 - i)) | q for q in range(1 << c)) if r in vt0]
        for i in range(k)
    ]
    found = 0
    for gen in itertools.product(*rows):
        span = [0]
        for r in gen:
            span += [s ^ r for s in span]
        found += all(s in vt0 for s in span)
    return found


def test_linear_variant_closure_only_for_tiny_k():
    # the lexicographic check-bit rule is closed under sums for k <= 2 only,
    # and at k = 5 no systematic sum-closed choice exists at all
    assert is_linear(linear_code(1)) and is_linear(linear_code(2))
    assert not is_linear(linear_code(3))
    assert systematic_linear_subcodes(3) == 1
    assert systematic_linear_subcodes(5) == 0


def test_linearity_frontier():
    for n in range(1, 15):
        assert is_linear(vt_code((n, 0))) == (n <= 4)
    assert not is_linear(vt_code((4, 1)))  # no zero word


def test_code_table_round_trip(tmp_path):
    code = vt_code((6, 2))
    text = write_code_table(code)
    assert text.splitlines()[0] == f"# VT n=6 a=2 size={len(code)}"
    assert text.splitlines()[1:] == [str(x) for x in code.sorted()]
    path = tmp_path / "vt6.txt"
    write_code_table(code, path)
    back = read_code_table(path)
    assert back.words == code.words
    assert read_code_table(text).words == code.words

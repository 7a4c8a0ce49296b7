import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import brute_descendants
from vtcodes.errors import CapacityError, DomainError
from vtcodes.words import (
    EMPTY,
    Word,
    alternating,
    build_confusability_graph,
    count_words_with_runs,
    d2_size_formula,
    d3_weight_counterexample,
    deficiency,
    deletion_distance,
    derivative,
    descendants,
    is_subsequence,
    lcs_length,
    max_descendants,
    runs,
    weight_profile,
)

bitstrings = st.text(alphabet="01", min_size=1, max_size=14)


def strs(ws):
    return {str(w) for w in ws}


def test_word_basics():
    u = Word.from_str("0010")
    assert (u.n, u.value, str(u)) == (4, 2, "0010")
    assert u[1] == 0 and u[3] == 1
    assert u.bits() == [0, 0, 1, 0]
    assert u.weight == 1
    assert str(u.complement()) == "1101"
    assert str(u.reverse()) == "0100"
    assert Word.from_bits([1, 0, 1]) == Word.from_str("101")
    with pytest.raises(IndexError):
        u[0]


@pytest.mark.parametrize("bad", ["", "012", "ab"])
def test_word_rejects_non_binary(bad):
    with pytest.raises(DomainError):
        Word.from_str(bad)


def test_word_length_cap():
    with pytest.raises(DomainError):
        Word(63, 0)
    with pytest.raises(DomainError):
        Word(3, 8)


def test_integer_order_is_lexicographic():
    ws = [Word(5, x) for x in range(32)]
    assert sorted(ws) == sorted(ws, key=str)


def test_runs_examples():
    assert runs(Word.from_str("0010")) == 3
    assert runs(Word.from_str("0000")) == 1
    assert runs(alternating(7)) == 7


def test_descendant_examples(w):
    assert strs(descendants(w("0010"), 1)) == {"010", "000", "001"}
    assert descendants(w("101"), 3) == {EMPTY}
    assert descendants(w("101"), 0) == {w("101")}
    with pytest.raises(DomainError):
        descendants(w("101"), 4)


def test_derivative_and_deficiency(w):
    assert str(derivative(w("0010"))) == "011"
    assert deficiency(w("001100")) == 0  # no run of length one
    with pytest.raises(DomainError):
        deficiency(w("01"))


@given(bitstrings, st.integers(0, 4))
def test_descendants_match_brute_force(text, e):
    e = min(e, len(text))
    got = descendants(Word.from_str(text), e)
    assert strs(got) == brute_descendants(text, e)


@given(bitstrings)
def test_d1_size_is_run_count(text):
    u = Word.from_str(text)
    assert len(descendants(u, 1)) == runs(u)


@given(st.text(alphabet="01", min_size=3, max_size=14))
def test_d2_closed_form(text):
    assert d2_size_formula(Word.from_str(text)) == len(brute_descendants(text, 2))


@given(st.text(alphabet="01", min_size=3, max_size=14))
def test_deficiency_zero_iff_no_singleton_run(text):
    lengths = [len(list(g)) for _, g in itertools.groupby(text)]
    assert (deficiency(Word.from_str(text)) == 0) == (1 not in lengths)


@given(bitstrings, st.integers(0, 3))
def test_complement_and_reverse_preserve_descendant_count(text, e):
    u = Word.from_str(text)
    e = min(e, u.n)
    size = len(descendants(u, e))
    assert len(descendants(u.complement(), e)) == size
    assert len(descendants(u.reverse(), e)) == size


def test_max_descendants_brute_force():
    for n in range(2, 11):
        for k in range(1, min(3, n - 1) + 1):
            best = max(len(brute_descendants(format(x, f"0{n}b"), k)) for x in range(1 << n))
            assert max_descendants(n, k) == best, (n, k)
    assert max_descendants(5, 2) == 7


def test_alternating_attains_maximum():
    for n in range(3, 13):
        for k in (1, 2, 3):
            if n >= k + 1:
                assert len(descendants(alternating(n), k)) == max_descendants(n, k)


def test_max_descendants_domain():
    with pytest.raises(DomainError):
        max_descendants(3, 3)


def test_count_words_with_runs():
    for n in range(1, 11):
        for r in range(1, n + 1):
            brute = sum(1 for x in range(1 << n) if runs(Word(n, x)) == r)
            assert count_words_with_runs(n, r) == brute == 2 * comb(n - 1, r - 1)


def test_weight_profile_and_d3_counterexample():
    pair = d3_weight_counterexample()
    assert pair is not None
    u, v = pair
    assert u.n == v.n
    assert weight_profile(u) == weight_profile(v)
    assert len(brute_descendants(str(u), 3)) != len(brute_descendants(str(v), 3))


def lcs_brute(a, b):
    # longest common subsequence by trying every subsequence of a
    for size in range(len(a), -1, -1):
        for keep in itertools.combinations(range(len(a)), size):
            sub = [a[i] for i in keep]
            it = iter(b)
            if all(c in it for c in sub):
                return size
    return 0


@given(st.text(alphabet="01", max_size=8), st.text(alphabet="01", max_size=8))
def test_lcs_matches_brute_force(a, b):
    assert lcs_length(a, b) == lcs_brute(a, b)


def dd_by_bfs(u: str, v: str) -> int:
    # alternate single deletions and single insertions, counting pairs
    frontier, seen, steps = {u}, {u}, 0
    n = len(u)
    while v not in frontier:
        shorter = {s[:i] + s[i + 1:] for s in frontier for i in range(n)}
        frontier = {
            t[:i] + b + t[i:] for t in shorter for i in range(n) for b in "01"
        } - seen
        seen |= frontier
        steps += 1
    return steps


def test_deletion_distance_small_exhaustive():
    for n in range(1, 6):
        for x in range(1 << n):
            for y in range(1 << n):
                u, v = Word(n, x), Word(n, y)
                assert deletion_distance(u, v) == dd_by_bfs(str(u), str(v))


def test_deletion_distance_unequal_lengths_rejected(w):
    with pytest.raises(DomainError):
        deletion_distance(w("01"), w("011"))


def test_is_subsequence(w):
    assert is_subsequence(w("011"), w("00101"))
    assert not is_subsequence(w("110"), w("00101"))


def test_graph_edges_match_shared_descendants():
    for n in range(1, 7):
        g = build_confusability_graph(n)
        for x in range(1 << n):
            for y in range(1 << n):
                share = x != y and bool(
                    brute_descendants(format(x, f"0{n}b"), 1)
                    & brute_descendants(format(y, f"0{n}b"), 1)
                )
                assert g.adjacent(Word(n, x), Word(n, y)) == share


def test_graph_helpers(w):
    g = build_confusability_graph(3)
    assert len(g) == 8
    assert build_confusability_graph(3) is g
    assert strs(g.neighbors(w("000"))) == {"001", "100", "010"}
    assert g.degree(0) == 3
    assert g.is_independent([0, 7])
    assert g.distance(w("000"), w("111")) == 3
    with pytest.raises(CapacityError):
        build_confusability_graph(13)

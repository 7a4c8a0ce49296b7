"""Binary words, descendant sets and the confusability graph.

A word of length n is held as an int whose most significant of n bits is
x_1, the first transmitted bit. That makes the integer order coincide with
the lexicographic order of the '0'/'1' text form, which is what the code
tables use. Hot loops elsewhere in the package work on the raw
``(value, n)`` pairs; :class:`Word` is the checked public wrapper.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import CapacityError, DomainError
from .numth import binom

MAX_LENGTH = 62
MAX_GRAPH_LENGTH = 12

__all__ = [
    "Word",
    "EMPTY",
    "all_words",
    "alternating",
    "runs",
    "derivative",
    "deficiency",
    "descendants",
    "d2_size_formula",
    "max_descendants",
    "lcs_length",
    "deletion_distance",
    "ConfusabilityGraph",
    "build_confusability_graph",
    "count_words_with_runs",
    "is_subsequence",
    "weight_profile",
    "d3_weight_counterexample",
]


@dataclass(frozen=True, order=True)
class Word:
    """Fixed-length binary word; ``value`` packs x_1 as the top bit."""

    n: int
    value: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_LENGTH:
            raise DomainError(f"word length must be in 1..{MAX_LENGTH}, got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise DomainError(f"value {self.value} does not fit in {self.n} bits")

    @classmethod
    def from_str(cls, text: str) -> "Word":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise DomainError(f"not a binary word: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Word":
        bits = list(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise DomainError(f"bit must be 0 or 1, got {b!r}")
            value = (value << 1) | b
        return cls(len(bits), value)

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b") if self.n else ""

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        """1-based bit access: ``w[1]`` is x_1."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return (self.value >> (self.n - i)) & 1

    def bits(self) -> list[int]:
        return [(self.value >> (self.n - i)) & 1 for i in range(1, self.n + 1)]

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def complement(self) -> "Word":
        return Word(self.n, self.value ^ ((1 << self.n) - 1))

    def reverse(self) -> "Word":
        return Word(self.n, _reverse(self.value, self.n))


# The empty word only ever appears as the single member of D_n(u).
EMPTY = object.__new__(Word)
object.__setattr__(EMPTY, "n", 0)
object.__setattr__(EMPTY, "value", 0)


def _wrap(n: int, value: int) -> Word:
    return EMPTY if n == 0 else Word(n, value)


def _reverse(x: int, n: int) -> int:
    return int(format(x, f"0{n}b")[::-1], 2) if n else 0


def all_words(n: int) -> Iterator[Word]:
    for x in range(1 << n):
        yield Word(n, x)


def alternating(n: int, first: int = 0) -> Word:
    """010101... (or 1010... with ``first=1``) of length n."""
    return Word.from_bits((first + i) % 2 for i in range(n))


# ---------------------------------------------------------------------------
# integer-level helpers


def runs_int(x: int, n: int) -> int:
    if n == 0:
        return 0
    return ((x ^ (x >> 1)) & ((1 << (n - 1)) - 1)).bit_count() + 1


def derivative_int(x: int, n: int) -> int:
    return (x ^ (x >> 1)) & ((1 << (n - 1)) - 1)


def delete_int(x: int, n: int, i: int) -> int:
    """Delete 1-based position i from the n-bit word x."""
    b = n - i
    return ((x >> (b + 1)) << b) | (x & ((1 << b) - 1))


def insert_int(x: int, m: int, slot: int, bit: int) -> int:
    """Insert ``bit`` into the m-bit word x so that it lands at position slot+1.

    ``slot`` counts the bits of x kept to its left (0..m).
    """
    b = m - slot
    return ((x >> b) << (b + 1)) | (bit << b) | (x & ((1 << b) - 1))


def _run_starts(x: int, n: int) -> list[int]:
    # One deletion position per run suffices: deleting anywhere inside a
    # run gives the same word.
    starts = [1]
    for i in range(2, n + 1):
        if ((x >> (n - i)) ^ (x >> (n - i + 1))) & 1:
            starts.append(i)
    return starts


def d1_int(x: int, n: int) -> set[int]:
    return {delete_int(x, n, i) for i in _run_starts(x, n)}


def descendants_int(x: int, n: int, e: int) -> set[int]:
    level = {x}
    m = n
    for _ in range(e):
        nxt: set[int] = set()
        for y in level:
            for i in _run_starts(y, m):
                nxt.add(delete_int(y, m, i))
        level = nxt
        m -= 1
    return level


# ---------------------------------------------------------------------------
# public operations


def runs(u: Word) -> int:
    """Number of maximal blocks of equal consecutive bits."""
    return runs_int(u.value, u.n)


def derivative(u: Word) -> Word:
    """Adjacent-pair sums (u1+u2, u2+u3, ..., u_{n-1}+u_n)."""
    if u.n < 2:
        raise DomainError("derivative needs a word of length >= 2")
    return Word(u.n - 1, derivative_int(u.value, u.n))


def deficiency(u: Word) -> int:
    """2 wt(u') - wt(u''); zero exactly when no run has length 1."""
    if u.n < 3:
        raise DomainError("deficiency needs a word of length >= 3")
    d1 = derivative(u)
    return 2 * d1.weight - derivative(d1).weight


def descendants(u: Word, e: int) -> frozenset[Word]:
    """D_e(u): the distinct words left after deleting e positions of u."""
    if not 0 <= e <= u.n:
        raise DomainError(f"order e must be in 0..{u.n}, got {e}")
    m = u.n - e
    return frozenset(_wrap(m, y) for y in descendants_int(u.value, u.n, e))


def d2_size_formula(u: Word) -> int:
    if u.n < 3:
        raise DomainError("needs a word of length >= 3")
    return binom(runs(u) + 1, 2) - deficiency(u)


def max_descendants(n: int, k: int) -> int:
    """Largest |D_k(u)| over all u of length n: sum_{i<=k} C(n-k, i)."""
    if k < 0 or n < k + 1:
        raise DomainError(f"need n >= k+1 and k >= 0, got n={n}, k={k}")
    # C(n-k, i) vanishes for i > n-k
    return sum(comb(n - k, i) for i in range(k + 1))


def weight_profile(u: Word, order: int = 3) -> tuple[int, ...]:
    """Weights of u and of its first ``order`` derivatives (as many as exist)."""
    out = [u.weight]
    x, n = u.value, u.n
    for _ in range(min(order, n - 1)):
        x, n = derivative_int(x, n), n - 1
        out.append(x.bit_count())
    return tuple(out)


def d3_weight_counterexample(max_n: int = 12) -> tuple[Word, Word] | None:
    """Smallest pair of equal-length words with the same weight profile
    (u and three derivatives) but different |D_3|; None if none up to max_n.
    """
    for n in range(4, max_n + 1):
        seen: dict[tuple[int, ...], tuple[int, int]] = {}
        for x in range(1 << n):
            key = weight_profile(Word(n, x), 3)
            size = len(descendants_int(x, n, 3))
            if key in seen and seen[key][1] != size:
                return Word(n, seen[key][0]), Word(n, x)
            seen.setdefault(key, (x, size))
    return None


def count_words_with_runs(n: int, r: int) -> int:
    if not 1 <= r <= n:
        raise DomainError(f"runs r must be in 1..{n}, got {r}")
    return 2 * binom(n - 1, r - 1)


def is_subsequence(v: Word, u: Word) -> bool:
    it = iter(u.bits())
    return all(b in it for b in v.bits())


def lcs_length(a: list[int] | str, b: list[int] | str) -> int:
    """Longest common subsequence length, quadratic DP with one rolling row."""
    prev = [0] * (len(b) + 1)
    for ca in a:
        cur = [0]
        for j, cb in enumerate(b):
            cur.append(prev[j] + 1 if ca == cb else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def deletion_distance(u: Word, v: Word) -> int:
    """Half the fewest deletions plus insertions turning u into v.

    For equal lengths this is n - LCS(u, v). Words up to the graph cap are
    also measured by shortest path in the confusability graph and the two
    answers must agree.
    """
    if u.n != v.n:
        raise DomainError("deletion distance is only defined here for equal lengths")
    dd = u.n - lcs_length(str(u), str(v))
    if u.n <= MAX_GRAPH_LENGTH:
        path = build_confusability_graph(u.n).distance(u, v)
        if path != dd:
            raise AssertionError(f"LCS distance {dd} != graph distance {path} for {u}, {v}")
    return dd


class ConfusabilityGraph:
    """Graph on all 2^n words; u ~ v iff they share a single-deletion descendant.

    Adjacency rows are int bitsets indexed by word value.
    """

    def __init__(self, n: int):
        if not 1 <= n <= MAX_GRAPH_LENGTH:
            raise CapacityError(f"graph length must be in 1..{MAX_GRAPH_LENGTH}, got {n}")
        self.n = n
        size = 1 << n
        parents: dict[int, int] = {}
        for x in range(size):
            for y in d1_int(x, n):
                parents[y] = parents.get(y, 0) | (1 << x)
        adj = [0] * size
        for mask in parents.values():
            m = mask
            while m:
                low = m & -m
                x = low.bit_length() - 1
                adj[x] |= mask
                m ^= low
        self.adj = tuple(a & ~(1 << x) for x, a in enumerate(adj))
        # Insertion balls I(y) = {x : y in D1(x)} are cliques of the graph.
        self.balls = tuple(parents[y] for y in sorted(parents))

    def __len__(self) -> int:
        return 1 << self.n

    def neighbors(self, u: Word) -> list[Word]:
        row = self.adj[u.value]
        return [Word(self.n, x) for x in range(1 << self.n) if row >> x & 1]

    def adjacent(self, u: Word, v: Word) -> bool:
        return bool(self.adj[u.value] >> v.value & 1)

    def degree(self, x: int) -> int:
        return self.adj[x].bit_count()

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def is_independent(self, values: Iterable[int]) -> bool:
        mask = 0
        for x in values:
            mask |= 1 << x
        return all(not (self.adj[x] & mask) for x in values)

    def distance(self, u: Word, v: Word) -> int:
        """Breadth-first shortest path length; -1 if unreachable."""
        if u.n != self.n or v.n != self.n:
            raise DomainError("word length does not match the graph")
        seen = 1 << u.value
        frontier = deque([(u.value, 0)])
        while frontier:
            x, d = frontier.popleft()
            if x == v.value:
                return d
            row = self.adj[x] & ~seen
            seen |= row
            while row:
                low = row & -row
                frontier.append((low.bit_length() - 1, d + 1))
                row ^= low
        return -1


_GRAPHS: dict[int, ConfusabilityGraph] = {}


def build_confusability_graph(n: int) -> ConfusabilityGraph:
    """Return the (cached, immutable) confusability graph G_n."""
    g = _GRAPHS.get(n)
    if g is None:
        g = _GRAPHS[n] = ConfusabilityGraph(n)
    return g

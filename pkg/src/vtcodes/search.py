"""Exact and experimental searches for single-deletion-correcting codes.

The optimal code size A(n,1) is the independence number of the
confusability graph G_n. We find it by branch and bound over int bitsets:
candidates are greedily partitioned into cliques of G_n, and since an
independent set meets each clique at most once the number of cliques is an
upper bound. Vertices are visited in ascending-degree order, which keeps
the tree small on these graphs (n=8 closes in about 1.5M nodes).
"""
from __future__ import annotations

import itertools
import sys
import time
from dataclasses import dataclass, field
from typing import Iterable

from .errors import CapacityError, DomainError
from .vt import Code, vt_code_values
from .words import Word, _wrap, build_confusability_graph, d1_int

MAX_SEARCH_LENGTH = 10
MAX_PERFECTNESS_LENGTH = 20

__all__ = [
    "SearchResult",
    "PerfectnessReport",
    "SwapResult",
    "ProbeResult",
    "max_independent_set",
    "max_single_deletion_code",
    "is_single_deletion_correcting",
    "perfectness",
    "swap_experiment",
    "improvement_probe",
    "no_linear_16_code_check",
    "linear_codes",
]


@dataclass
class SearchResult:
    n: int
    best_size: int
    witness: Code
    proven_optimal: bool
    nodes_explored: int
    elapsed: float

    def summary(self) -> str:
        return (
            f"n={self.n} A={self.best_size} optimal={str(self.proven_optimal).lower()} "
            f"nodes={self.nodes_explored}"
        )


@dataclass
class PerfectnessReport:
    code: Code
    covered: int
    overlaps: list[tuple[Word, tuple[Word, ...]]]
    total_ball_size: int
    is_perfect: bool = field(init=False)

    def __post_init__(self):
        self.is_perfect = not self.overlaps and self.covered == 1 << (self.code.n - 1)

    @property
    def uncovered(self) -> int:
        return (1 << (self.code.n - 1)) - self.covered


# ---------------------------------------------------------------------------
# maximum independent set


def max_independent_set(
    adj: list[int],
    incumbent: Iterable[int] = (),
    node_limit: int | None = None,
) -> tuple[list[int], bool, int]:
    """Maximum independent set of the graph given by bitset rows ``adj``.

    Returns ``(vertices, closed, nodes)``; ``closed`` is False when the
    node limit stopped the search before the tree was exhausted, in which
    case the vertices are only the best set seen.
    """
    size = len(adj)
    order = sorted(range(size), key=lambda v: (adj[v].bit_count(), v))
    pos = [0] * size
    for i, v in enumerate(order):
        pos[v] = i
    radj = [0] * size
    for v in range(size):
        row, r = adj[v], 0
        while row:
            low = row & -row
            r |= 1 << pos[low.bit_length() - 1]
            row ^= low
        radj[pos[v]] = r
    full = (1 << size) - 1
    free = [full & ~radj[i] & ~(1 << i) for i in range(size)]

    best = [pos[v] for v in incumbent]
    best_size = len(best)
    nodes = 0
    stopped = False
    cur: list[int] = []

    def expand(P: int) -> None:
        nonlocal best, best_size, nodes, stopped
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            stopped = True
            return
        depth = len(cur)
        kmin = best_size - depth
        # Greedy clique partition; only vertices whose class index could
        # still beat the incumbent are branched on.
        U, k, branch = P, 0, []
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                U ^= low
                Q &= radj[v] & ~low
                if k > kmin:
                    branch.append((v, k))
        for v, k in reversed(branch):
            if depth + k <= best_size or stopped:
                return
            cur.append(v)
            nxt = P & free[v]
            if nxt:
                expand(nxt)
            elif depth + 1 > best_size:
                best, best_size = list(cur), depth + 1
            cur.pop()
            P &= ~(1 << v)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, size + 100))
    try:
        if size:
            expand(full)
    finally:
        sys.setrecursionlimit(limit)
    return sorted(order[i] for i in best), not stopped, nodes


def max_single_deletion_code(n: int, node_limit: int | None = None) -> SearchResult:
    """Largest single-deletion-correcting code of length n, exactly.

    VT_0(n) seeds the incumbent, so the witness stays VT_0(n) unless the
    search finds something strictly larger.
    """
    if not 1 <= n <= MAX_SEARCH_LENGTH:
        raise CapacityError(f"exact search is capped at n={MAX_SEARCH_LENGTH}, got {n}")
    g = build_confusability_graph(n)
    t0 = time.perf_counter()
    best, closed, nodes = max_independent_set(list(g.adj), vt_code_values(n, 0), node_limit)
    elapsed = time.perf_counter() - t0
    witness = Code(n, frozenset(Word(n, x) for x in best))
    assert g.is_independent(best)
    return SearchResult(n, len(best), witness, closed, nodes, elapsed)


# ---------------------------------------------------------------------------
# verification


def _check_code(code: Code | Iterable) -> Code:
    if isinstance(code, Code):
        return code
    return Code.from_words(code)


def is_single_deletion_correcting(code: Code | Iterable) -> bool:
    """True iff the single-deletion balls of distinct codewords are disjoint."""
    code = _check_code(code)
    seen: set[int] = set()
    for x in code.values():
        ball = d1_int(x, code.n)
        if seen & ball:
            return False
        seen |= ball
    return True


def perfectness(code: Code | Iterable) -> PerfectnessReport:
    """Census of how the balls D_1(u), u in the code, cover F_2^(n-1)."""
    code = _check_code(code)
    n = code.n
    if n > MAX_PERFECTNESS_LENGTH:
        raise CapacityError(f"perfectness census is capped at n={MAX_PERFECTNESS_LENGTH}")
    owners: dict[int, list[int]] = {}
    total = 0
    for x in code.values():
        ball = d1_int(x, n)
        total += len(ball)
        for y in ball:
            owners.setdefault(y, []).append(x)
    overlaps = [
        (_wrap(n - 1, y), tuple(Word(n, x) for x in xs))
        for y, xs in sorted(owners.items())
        if len(xs) > 1
    ]
    return PerfectnessReport(code, len(owners), overlaps, total)


# ---------------------------------------------------------------------------
# optimality experiments


@dataclass
class SwapResult:
    correcting: bool
    report: PerfectnessReport
    base_report: PerfectnessReport

    @property
    def coverage_drop(self) -> int:
        return self.base_report.covered - self.report.covered


def swap_experiment(base: Code, remove: Iterable, add: Iterable) -> SwapResult:
    """Replace some codewords and report whether deletion correction survives."""
    def as_words(items):
        return {Word.from_str(w) if isinstance(w, str) else w for w in items}

    remove, add = as_words(remove), as_words(add)
    if not remove <= base.words:
        raise DomainError("words to remove must belong to the base code")
    kept = base.words - remove
    if add & kept:
        raise DomainError("words to add are already in the code")
    if any(w.n != base.n for w in add):
        raise DomainError("added words must have the code's length")
    new = Code(base.n, frozenset(kept | add))
    return SwapResult(is_single_deletion_correcting(new), perfectness(new), perfectness(base))


@dataclass
class ProbeResult:
    status: str  # "improved", "none", or "inconclusive"
    code: Code | None
    evaluations: int
    removed: tuple[Word, ...] = ()
    added: tuple[Word, ...] = ()


def improvement_probe(base: Code, k: int, budget: int = 10**8) -> ProbeResult:
    """Look for k codewords that can be traded for k+1 new ones.

    Every k-subset of the code is tried; the words that become free after
    removing it are searched exactly for an independent (k+1)-set. Each
    candidate word examined costs one unit of ``budget``; running out gives
    status "inconclusive" rather than a negative answer.
    """
    if not 0 <= k <= 3:
        raise DomainError("k must be in 0..3")
    n = base.n
    if n > MAX_SEARCH_LENGTH:
        raise CapacityError(f"probe is capped at n={MAX_SEARCH_LENGTH}")
    if not is_single_deletion_correcting(base):
        raise DomainError("base code must be single-deletion-correcting")
    g = build_confusability_graph(n)
    values = base.values()
    code_mask = sum(1 << x for x in values)
    # blockers[w] = codewords equal or adjacent to w
    blockers = [(g.adj[w] | (1 << w)) & code_mask for w in range(1 << n)]
    spent = 0
    for removed in itertools.combinations(values, k):
        rm = sum(1 << x for x in removed)
        free = [w for w in range(1 << n) if not (blockers[w] & ~rm)]
        spent += len(free)
        if spent > budget:
            return ProbeResult("inconclusive", None, spent)
        if len(free) < k + 1:
            continue
        sub = [0] * len(free)
        for i, w in enumerate(free):
            for j, u in enumerate(free):
                if g.adj[w] >> u & 1:
                    sub[i] |= 1 << j
        found, _, nodes = max_independent_set(sub)
        spent += nodes
        if len(found) >= k + 1:
            chosen = {free[i] for i in found}
            kept = set(values) - set(removed)
            code = Code(n, frozenset(Word(n, x) for x in kept | chosen))
            assert is_single_deletion_correcting(code)
            return ProbeResult(
                "improved",
                code,
                spent,
                tuple(Word(n, x) for x in sorted(set(removed) - chosen)),
                tuple(Word(n, x) for x in sorted(chosen - set(removed))),
            )
    return ProbeResult("none", None, spent)


# ---------------------------------------------------------------------------
# linear codes


def linear_codes(n: int, dim: int):
    """Every dim-dimensional subspace of F_2^n, once, via reduced echelon bases.

    Yields the sorted list of the 2^dim member values.
    """
    for pivots in itertools.combinations(range(n), dim):
        # Row i has a 1 at its pivot column and free entries only in the
        # non-pivot columns to the right of it.
        free_cols = [[c for c in range(p + 1, n) if c not in pivots] for p in pivots]
        total_free = sum(len(f) for f in free_cols)
        for fill in range(1 << total_free):
            rows = []
            shift = 0
            for p, cols in zip(pivots, free_cols):
                r = 1 << (n - 1 - p)
                for c in cols:
                    if fill >> shift & 1:
                        r |= 1 << (n - 1 - c)
                    shift += 1
                rows.append(r)
            span = [0]
            for r in rows:
                span += [s ^ r for s in span]
            yield sorted(span)


def _values_correcting(values: list[int], n: int) -> bool:
    seen: set[int] = set()
    for x in values:
        ball = d1_int(x, n)
        if seen & ball:
            return False
        seen |= ball
    return True


def no_linear_16_code_check(n: int = 7, dim: int = 4) -> bool:
    """True when no linear single-deletion-correcting [n, dim] code exists.

    With the defaults this asks whether some linear length-7 code can match
    the 16 words of VT_0(7).
    """
    return not any(_values_correcting(span, n) for span in linear_codes(n, dim))


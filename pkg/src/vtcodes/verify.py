"""Invariant suites run by ``vtcodes verify``.

Each check returns ``None`` when it holds and a counterexample string
otherwise. Bounds are desk scale: the whole ``all`` suite finishes in
about a minute, most of it spent proving A(8,1) = 30.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import channel, search, shiftreg, vt, words
from .numth import divisors, euler_phi, moebius
from .words import Word

TABLE1 = {
    1: [1, 1],
    2: [2, 1, 1],
    3: [2, 2, 2, 2],
    4: [4, 3, 3, 3, 3],
    5: [6, 5, 5, 6, 5, 5],
    6: [10, 9, 9, 9, 9, 9, 9],
    7: [16] * 8,
    8: [30, 28, 28, 29, 28, 28, 29, 28, 28],
}

# (Z, Z*, S, S*) for n = 1..10
TABLE2 = {
    1: (2, 1, 2, 1),
    2: (3, 1, 2, 2),
    3: (4, 2, 4, 2),
    4: (6, 2, 4, 4),
    5: (8, 4, 8, 6),
    6: (14, 6, 10, 10),
    7: (20, 10, 20, 16),
    8: (36, 16, 30, 30),
    9: (60, 30, 56, 52),
    10: (108, 52, 94, 94),
}

OPTIMAL_SIZES = [1, 2, 2, 4, 6, 10, 16, 30]


@dataclass
class Check:
    name: str
    fn: Callable[[], str | None]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str | None
    elapsed: float

    def line(self) -> str:
        return f"{self.name}: {'PASS' if self.ok else 'FAIL'}"


# ---------------------------------------------------------------------------
# vt


def check_size_formula(max_n: int = 16) -> str | None:
    for n in range(1, max_n + 1):
        s = vt.checksums_array(n) % (n + 1)
        counts = [int((s == a).sum()) for a in range(n + 1)]
        for a in range(n + 1):
            f = vt.vt_size_formula(n, a)
            if f != counts[a]:
                return f"n={n} a={a}: formula {f}, enumeration {counts[a]}"
    return None


def check_table1() -> str | None:
    for n, row in TABLE1.items():
        got = [vt.vt_size_formula(n, a) for a in range(n + 1)]
        if got != row:
            return f"n={n}: {got} != {row}"
    return None


def check_size_ordering(max_n: int = 20) -> str | None:
    for n in range(1, max_n + 1):
        top, bottom = vt.vt0_size(n), vt.vt1_size(n)
        for a in range(n + 1):
            s = vt.vt_size_formula(n, a)
            if not top >= s >= bottom:
                return f"n={n} a={a}: {top} >= {s} >= {bottom} fails"
    return None


def check_lower_bound(max_n: int = 30) -> str | None:
    for n in range(1, max_n + 1):
        if vt.vt0_size(n) * (n + 1) < 1 << n:
            return f"n={n}: |VT_0| = {vt.vt0_size(n)} < 2^n/(n+1)"
    return None


def check_decoder(max_n: int = 12) -> str | None:
    for n in range(2, max_n + 1):
        for a in range(n + 1):
            for x in vt.vt_code_values(n, a):
                for p in range(1, n + 1):
                    y = words.delete_int(x, n, p)
                    got = vt._decode_int(y, n - 1, n, a)
                    if got is None or got[0] != x:
                        return f"n={n} a={a} x={Word(n, x)} deleted at {p}: got {got}"
    return None


def check_disjoint_balls(max_n: int = 12) -> str | None:
    for n in range(2, max_n + 1):
        for a in range(n + 1):
            seen: set[int] = set()
            for x in vt.vt_code_values(n, a):
                ball = words.d1_int(x, n)
                if seen & ball:
                    return f"VT_{a}({n}): ball of {Word(n, x)} overlaps"
                seen |= ball
    return None


def check_linearity(max_n: int = 14) -> str | None:
    for n in range(1, max_n + 1):
        lin = vt.is_linear(vt.vt_code((n, 0)))
        if lin != (n <= 4):
            return f"n={n}: is_linear = {lin}"
    return None


def check_vt0_sequence(max_n: int = 30) -> str | None:
    for n in range(1, max_n + 1):
        if vt.vt0_size(n) != vt.necklace_sequence(n + 1):
            return f"n={n}: {vt.vt0_size(n)} != N_{n + 1} = {vt.necklace_sequence(n + 1)}"
    return None


def check_linear_encoder(max_k: int = 200) -> str | None:
    for k in range(1, max_k + 1):
        p = vt.linear_params(k)
        vt._check_table(k)  # asserts every residue is reachable
        if p.c > math.isqrt(2 * p.n - 1) + 1 + 2:
            return f"k={k}: c={p.c} exceeds ceil(sqrt(2n)) + 2"
    for info in range(1 << 8):
        x = vt.linear_encode_int(info, 8)
        n = vt.linear_params(8).n
        if vt.raw_checksum_int(x, n) % (n + 1):
            return f"k=8 info={info}: checksum nonzero"
    return None


def check_channel(blocks: int = 10_000) -> str | None:
    s = channel.run_simulation(channel.ChannelConfig(k=8, blocks=blocks, seed=42))
    if s.failed or s.recovered != blocks:
        return s.line()
    return None


# ---------------------------------------------------------------------------
# words


def check_d1_runs(max_n: int = 12) -> str | None:
    for n in range(1, max_n + 1):
        for x in range(1 << n):
            if len(words.descendants_int(x, n, 1)) != words.runs_int(x, n):
                return f"{Word(n, x)}: |D1| != runs"
    return None


def check_d2_formula(max_n: int = 12) -> str | None:
    for n in range(3, max_n + 1):
        for x in range(1 << n):
            u = Word(n, x)
            if len(words.descendants_int(x, n, 2)) != words.d2_size_formula(u):
                return f"{u}: |D2| = {len(words.descendants_int(x, n, 2))}, formula {words.d2_size_formula(u)}"
    return None


def _alternating_values(n: int) -> set[int]:
    return {words.alternating(n, 0).value, words.alternating(n, 1).value}


def check_max_descendants(max_n: int = 12, max_k: int = 3) -> str | None:
    for n in range(2, max_n + 1):
        for k in range(1, min(max_k, n - 1) + 1):
            sizes = [len(words.descendants_int(x, n, k)) for x in range(1 << n)]
            top = max(sizes)
            if top != words.max_descendants(n, k):
                return f"n={n} k={k}: max {top} != {words.max_descendants(n, k)}"
            argmax = {x for x, s in enumerate(sizes) if s == top}
            # Below n = 2k+1 other words tie, e.g. 0110 at n=4, k=2.
            if n >= 2 * k + 1 and argmax != _alternating_values(n):
                return f"n={n} k={k}: maximizers {sorted(argmax)}"
    return None


def check_alternating_recurrence(max_n: int = 14) -> str | None:
    def m(n, k):
        return len(words.descendants_int(words.alternating(n).value, n, k))

    for n in range(3, max_n + 1):
        for k in range(2, n):
            if m(n, k) != m(n - 1, k) + m(n - 2, k - 1):
                return f"n={n} k={k}"
    return None


def check_runs_count(max_n: int = 12) -> str | None:
    for n in range(1, max_n + 1):
        counts = [0] * (n + 1)
        for x in range(1 << n):
            counts[words.runs_int(x, n)] += 1
        for r in range(1, n + 1):
            if counts[r] != words.count_words_with_runs(n, r):
                return f"n={n} r={r}"
    return None


def check_distance(max_n: int = 7) -> str | None:
    for n in range(1, max_n + 1):
        g = words.build_confusability_graph(n)
        for x in range(1 << n):
            u = Word(n, x)
            dist = _bfs_all(g, x)
            for y in range(1 << n):
                lcs = n - words.lcs_length(str(u), str(Word(n, y)))
                if lcs != dist[y]:
                    return f"{u} {Word(n, y)}: LCS {lcs}, graph {dist[y]}"
    return None


def _bfs_all(g: words.ConfusabilityGraph, src: int) -> list[int]:
    dist = [-1] * len(g)
    dist[src] = 0
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            row = g.adj[x]
            while row:
                low = row & -row
                y = low.bit_length() - 1
                row ^= low
                if dist[y] < 0:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def check_symmetry(max_n: int = 10, max_k: int = 3) -> str | None:
    for n in range(1, max_n + 1):
        mask = (1 << n) - 1
        for x in range(1 << n):
            for k in range(1, min(max_k, n) + 1):
                s = len(words.descendants_int(x, n, k))
                if s != len(words.descendants_int(x ^ mask, n, k)):
                    return f"{Word(n, x)} k={k}: complement"
                if s != len(words.descendants_int(words._reverse(x, n), n, k)):
                    return f"{Word(n, x)} k={k}: reversal"
    return None


def check_d3_not_weight_function() -> str | None:
    return None if words.d3_weight_counterexample() else "no pair found up to n=12"


# ---------------------------------------------------------------------------
# search


def check_optimal_sizes(max_n: int = 8) -> str | None:
    for n in range(1, max_n + 1):
        res = search.max_single_deletion_code(n)
        if not res.proven_optimal or res.best_size != OPTIMAL_SIZES[n - 1]:
            return res.summary()
    return None


def check_perfect(max_n: int = 14) -> str | None:
    for n in range(2, max_n + 1):
        for a in range(n + 1):
            covered: set[int] = set()
            total = 0
            for x in vt.vt_code_values(n, a):
                ball = words.d1_int(x, n)
                total += len(ball)
                covered |= ball
            if total != len(covered) or len(covered) != 1 << (n - 1):
                return f"VT_{a}({n}): covered {len(covered)} of {1 << (n - 1)}, ball total {total}"
    return None


def check_swap() -> str | None:
    base = vt.vt_code((6, 0))
    res = search.swap_experiment(base, ["110100", "001011"], ["111000", "000111"])
    if not res.correcting or res.coverage_drop != 4 or res.report.uncovered != 4:
        return f"correcting={res.correcting} drop={res.coverage_drop}"
    return None


def check_small_nonperfect() -> str | None:
    for words_, size in ((["000", "111"], 2), (["0000", "0011", "1100", "1111"], 4)):
        code = vt.Code.from_words(words_)
        rep = search.perfectness(code)
        if not search.is_single_deletion_correcting(code) or rep.is_perfect:
            return f"{words_}: perfect={rep.is_perfect}"
        if size != OPTIMAL_SIZES[code.n - 1]:
            return f"{words_}: size {size} is not optimal"
    return None


def check_no_linear_16() -> str | None:
    return None if search.no_linear_16_code_check() else "a linear [7,4] single-deletion code exists"


# ---------------------------------------------------------------------------
# shiftreg


def check_census(max_n: int = 14) -> str | None:
    for n in range(1, max_n + 1):
        for kind in shiftreg.RegisterKind:
            c = shiftreg.cycle_census(n, kind).cycle_count
            if c != shiftreg.formula(n, kind):
                return f"{kind.value}({n}): census {c}, formula {shiftreg.formula(n, kind)}"
    return None


def check_table2() -> str | None:
    for n, row in TABLE2.items():
        got = tuple(shiftreg.cycle_census(n, k).cycle_count for k in shiftreg.RegisterKind)
        if got != row:
            return f"n={n}: {got} != {row}"
    return None


def check_brouwer(max_n: int = 30) -> str | None:
    for n in range(1, max_n + 1):
        if shiftreg.brouwer_formula(n) != shiftreg.zstar_formula(n):
            return f"n={n}"
    return None


def check_ccr_csr(max_n: int = 12) -> str | None:
    for n in range(2, max_n + 1):
        ccr = shiftreg.cycle_census(n, "CCR", keep_cycles=True).cycles
        csr = shiftreg.cycle_census(n - 1, "CSR", keep_cycles=True).cycles
        image = [shiftreg.ccr_to_csr(c, n) for c in ccr]
        if sorted(image) != csr:
            return f"n={n}: image of CCR cycles differs from CSR({n - 1}) cycles"
        if any(shiftreg.csr_to_ccr(c, n) != shiftreg.least_rotation(c0)
               for c, c0 in zip(image, ccr)):
            return f"n={n}: inverse map fails"
    return None


def check_identity_web(max_n: int = 16) -> str | None:
    for n in range(1, max_n + 1):
        vals = {
            vt.vt0_size(n),
            vt.necklace_sequence(n + 1),
            shiftreg.zstar_formula(n + 1),
            shiftreg.cycle_census(n, "CSR").cycle_count,
        }
        if len(vals) != 1:
            return f"n={n}: {sorted(vals)}"
    return None


def check_necklaces(max_n: int = 16) -> str | None:
    for n in range(1, max_n + 1):
        rot, prim = shiftreg.necklace_counts(n + 1)
        if rot != shiftreg.z_formula(n + 1) or prim != vt.vt1_size(n):
            return f"m={n + 1}: ({rot}, {prim})"
    return None


def check_number_theory(limit: int = 1000) -> str | None:
    for n in range(1, limit + 1):
        if sum(euler_phi(d) for d in divisors(n)) != n:
            return f"sum phi(d) != n at {n}"
        if sum(moebius(d) * (n // d) for d in divisors(n)) != euler_phi(n):
            return f"Moebius inversion of phi fails at {n}"
    return None


SUITES: dict[str, list[Check]] = {
    "vt": [
        Check("size formula vs enumeration n<=16", check_size_formula),
        Check("VT size table n<=8", check_table1),
        Check("VT_0 >= VT_a >= VT_1 n<=20", check_size_ordering),
        Check("|VT_0(n)| >= 2^n/(n+1) n<=30", check_lower_bound),
        Check("decoder recovers every single deletion n<=12", check_decoder),
        Check("codeword balls disjoint n<=12", check_disjoint_balls),
        Check("VT_0(n) linear iff n<=4, n<=14", check_linearity),
        Check("|VT_0(n)| = N_(n+1) n<=30", check_vt0_sequence),
        Check("linear encoder covers all residues k<=200", check_linear_encoder),
        Check("channel k=8 10^4 blocks zero failures", check_channel),
    ],
    "words": [
        Check("|D1(u)| = r(u) n<=12", check_d1_runs),
        Check("|D2(u)| = C(r+1,2) - deficiency n<=12", check_d2_formula),
        Check("max |Dk| formula n<=12 k<=3, unique maximizers for n>=2k+1", check_max_descendants),
        Check("alternating descendant recurrence n<=14", check_alternating_recurrence),
        Check("words with r runs = 2 C(n-1,r-1) n<=12", check_runs_count),
        Check("LCS distance = graph distance n<=7", check_distance),
        Check("|Dk| invariant under complement and reversal n<=10", check_symmetry),
        Check("|D3| not determined by derivative weights", check_d3_not_weight_function),
        Check("divisor sums of phi and mu n<=1000", check_number_theory),
    ],
    "search": [
        Check("A(n,1) = 1,2,2,4,6,10,16 n<=7", lambda: check_optimal_sizes(7)),
        Check("A(8,1)=30", lambda: check_optimal_sizes(8)),
        Check("VT_a(n) perfect n<=14", check_perfect),
        Check("length-6 swap keeps correction, loses 4 covered", check_swap),
        Check("{000,111} and {0000,0011,1100,1111} optimal, not perfect", check_small_nonperfect),
        Check("no linear length-7 code with 16 words", check_no_linear_16),
    ],
    "shiftreg": [
        Check("register census = closed forms n<=14", check_census),
        Check("register table n<=10", check_table2),
        Check("Brouwer formula = CCR formula n<=30", check_brouwer),
        Check("CCR(n) -> CSR(n-1) bijection n<=12", check_ccr_csr),
        Check("|VT_0(n)| = N_(n+1) = Z*(n+1) = S*(n) census n<=16", check_identity_web),
        Check("necklace counts match Z and |VT_1| n<=16", check_necklaces),
    ],
}
SUITES["all"] = [c for name in ("vt", "words", "search", "shiftreg") for c in SUITES[name]]


def run_suite(name: str, stop_on_failure: bool = False) -> Iterator[CheckResult]:
    for check in SUITES[name]:
        t0 = time.perf_counter()
        detail = check.fn()
        res = CheckResult(check.name, detail is None, detail, time.perf_counter() - t0)
        yield res
        if stop_on_failure and not res.ok:
            return

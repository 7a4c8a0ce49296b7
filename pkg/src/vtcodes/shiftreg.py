"""Shift-register cycle counts and the necklace identities around them.

An n-stage register shifts its cells left, emits x_1 and feeds one new bit
into x_n. Four feedback rules are covered:

    PCR  x_1                  pure cycling
    CCR  1 + x_1              complemented cycling
    PSR  x_1 + ... + x_n      pure summing
    CSR  1 + x_1 + ... + x_n  complemented summing

Each rule is a permutation of the 2^n states, so the state graph splits
into cycles, and each cycle gives exactly one periodic output sequence.
Counting distinct outputs therefore means counting cycles.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import CapacityError, DomainError
from .numth import divisors, euler_phi, exact_div, moebius, odd_divisors
from .words import Word

MAX_CENSUS_LENGTH = 20
MAX_NECKLACE_LENGTH = 24


class RegisterKind(enum.Enum):
    PCR = "PCR"
    CCR = "CCR"
    PSR = "PSR"
    CSR = "CSR"

    def feedback(self, x: int, n: int) -> int:
        if self is RegisterKind.PCR:
            return x >> (n - 1)
        if self is RegisterKind.CCR:
            return (x >> (n - 1)) ^ 1
        parity = x.bit_count() & 1
        return parity if self is RegisterKind.PSR else parity ^ 1


def _kind(kind: RegisterKind | str) -> RegisterKind:
    return kind if isinstance(kind, RegisterKind) else RegisterKind(str(kind).upper())


def step_int(x: int, n: int, kind: RegisterKind) -> tuple[int, int]:
    out = x >> (n - 1)
    return out, ((x << 1) & ((1 << n) - 1)) | kind.feedback(x, n)


def step(state: Word, kind: RegisterKind | str) -> tuple[int, Word]:
    """Clock the register once: returns (output bit, next state)."""
    out, nxt = step_int(state.value, state.n, _kind(kind))
    return out, Word(state.n, nxt)


def least_rotation(bits: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    """Lexicographically least rotation, used as the canonical cycle key."""
    bits = tuple(bits)
    return min(bits[i:] + bits[:i] for i in range(len(bits))) if bits else ()


def fundamental_period(bits: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    bits = tuple(bits)
    m = len(bits)
    for p in divisors(m) if m else []:
        if all(bits[i] == bits[i % p] for i in range(m)):
            return bits[:p]
    return bits


@dataclass
class CycleCensus:
    kind: RegisterKind
    n: int
    cycle_count: int
    cycle_lengths: Counter
    cycles: list[tuple[int, ...]] | None = field(default=None, repr=False)


def cycle_census(n: int, kind: RegisterKind | str, keep_cycles: bool = False) -> CycleCensus:
    """Walk every state once and count the cycles of the register map.

    With ``keep_cycles`` each cycle's output period is also recorded, in
    least-rotation form, sorted.
    """
    kind = _kind(kind)
    if not 1 <= n <= MAX_CENSUS_LENGTH:
        raise CapacityError(f"census is capped at n={MAX_CENSUS_LENGTH}, got {n}")
    size = 1 << n
    mask = size - 1
    top = n - 1
    visited = bytearray(size)
    lengths: Counter = Counter()
    cycles = [] if keep_cycles else None
    summing = kind in (RegisterKind.PSR, RegisterKind.CSR)
    flip = 1 if kind in (RegisterKind.CCR, RegisterKind.CSR) else 0
    for start in range(size):
        if visited[start]:
            continue
        x = start
        length = 0
        out = []
        while not visited[x]:
            visited[x] = 1
            length += 1
            if keep_cycles:
                out.append(x >> top)
            fb = (x.bit_count() & 1) if summing else (x >> top)
            x = ((x << 1) & mask) | (fb ^ flip)
        # Every state has a unique predecessor, so a fresh walk must close
        # on its own start.
        assert x == start, (kind, n, start)
        lengths[length] += 1
        if keep_cycles:
            cycles.append(least_rotation(out))
    if keep_cycles:
        cycles.sort()
    return CycleCensus(kind, n, sum(lengths.values()), lengths, cycles)


def is_permutation(n: int, kind: RegisterKind | str) -> bool:
    """Every state has exactly one predecessor."""
    kind = _kind(kind)
    hits = bytearray(1 << n)
    for x in range(1 << n):
        _, y = step_int(x, n, kind)
        if hits[y]:
            return False
        hits[y] = 1
    return True


# ---------------------------------------------------------------------------
# closed forms


def z_formula(n: int) -> int:
    """PCR outputs: (1/n) sum_{d|n} phi(d) 2^(n/d)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return exact_div(sum(euler_phi(d) << (n // d) for d in divisors(n)), n)


def zstar_formula(n: int) -> int:
    """CCR outputs: (1/2n) sum over odd d | n of phi(d) 2^(n/d)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return exact_div(sum(euler_phi(d) << (n // d) for d in odd_divisors(n)), 2 * n)


def s_formula(n: int) -> int:
    """PSR outputs: (1/2(n+1)) sum_{d|n+1} phi(2d) 2^((n+1)/d)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    m = n + 1
    return exact_div(sum(euler_phi(2 * d) << (m // d) for d in divisors(m)), 2 * m)


def sstar_formula(n: int) -> int:
    """CSR outputs; an n-stage CSR matches an (n+1)-stage CCR."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return zstar_formula(n + 1)


def brouwer_formula(n: int) -> int:
    """sum_{d|n} odd(n/d) 2^(d-1)/d sum_{e | n/d} mu(e)/e, in exact rationals."""
    if n < 1:
        raise DomainError("n must be >= 1")
    total = Fraction(0)
    for d in divisors(n):
        m = n // d
        if m % 2 == 0:
            continue
        inner = sum(Fraction(moebius(e), e) for e in divisors(m))
        total += Fraction(1 << (d - 1), d) * inner
    if total.denominator != 1:
        raise AssertionError(f"Brouwer sum for n={n} is not an integer: {total}")
    return int(total)


FORMULAS = {
    RegisterKind.PCR: z_formula,
    RegisterKind.CCR: zstar_formula,
    RegisterKind.PSR: s_formula,
    RegisterKind.CSR: sstar_formula,
}


def formula(n: int, kind: RegisterKind | str) -> int:
    return FORMULAS[_kind(kind)](n)


# ---------------------------------------------------------------------------
# CCR(n) <-> CSR(n-1)


def _is_register_cycle(bits: tuple[int, ...], n: int, kind: RegisterKind) -> bool:
    """Does the periodic sequence ``bits`` obey the register's recurrence?"""
    m = len(bits)
    if m == 0:
        return False
    seq = [bits[i % m] for i in range(m + n)]
    for t in range(m):
        window = seq[t:t + n]
        if kind is RegisterKind.CCR:
            nxt = window[0] ^ 1
        elif kind is RegisterKind.CSR:
            nxt = (sum(window) & 1) ^ 1
        elif kind is RegisterKind.PCR:
            nxt = window[0]
        else:
            nxt = sum(window) & 1
        if seq[t + n] != nxt:
            return False
    return True


def ccr_to_csr(cycle, n: int) -> tuple[int, ...]:
    """Map one period of a CCR(n) output to the matching CSR(n-1) output.

    Sums of adjacent outputs of a complemented cycling register obey the
    complemented summing recurrence one stage shorter. The result is the
    fundamental period in least-rotation form.
    """
    bits = tuple(cycle)
    if n < 2:
        raise DomainError("the CCR to CSR map needs n >= 2")
    if not _is_register_cycle(bits, n, RegisterKind.CCR):
        raise DomainError("input is not a CCR output cycle of this length")
    m = len(bits)
    sums = tuple(bits[i] ^ bits[(i + 1) % m] for i in range(m))
    return least_rotation(fundamental_period(sums))


def csr_to_ccr(cycle, n: int, start: int = 0) -> tuple[int, ...]:
    """Inverse of :func:`ccr_to_csr` for an (n-1)-stage CSR period.

    Prefix sums from ``start`` rebuild the CCR(n) sequence; the other start
    bit gives the same cycle shifted by half a period.
    """
    bits = tuple(cycle)
    if n < 2:
        raise DomainError("needs n >= 2")
    if not _is_register_cycle(bits, n - 1, RegisterKind.CSR):
        raise DomainError("input is not a CSR output cycle of this length")
    m = len(bits)
    out = [start]
    for i in range(2 * m - 1):
        out.append(out[-1] ^ bits[i % m])
    result = tuple(out)
    assert _is_register_cycle(result, n, RegisterKind.CCR)
    return least_rotation(fundamental_period(result))


# ---------------------------------------------------------------------------
# necklaces


def necklace_counts(m: int, chunk: int = 1 << 20) -> tuple[int, int]:
    """Brute-force necklace counts over all 2^m binary strings of length m.

    Returns (orbits under rotation, orbits of primitive strings under
    rotation and colour swap). A string is counted when it equals the
    least element of its orbit.
    """
    if not 1 <= m <= MAX_NECKLACE_LENGTH:
        raise CapacityError(f"necklace census is capped at m={MAX_NECKLACE_LENGTH}")
    mask = (1 << m) - 1
    proper = [d for d in divisors(m) if d < m]
    rot_count = 0
    prim_count = 0
    for lo in range(0, 1 << m, chunk):
        x = np.arange(lo, min(lo + chunk, 1 << m), dtype=np.uint64)
        comp = x ^ np.uint64(mask)
        rot_min = x.copy()
        both_min = np.minimum(x, comp)
        for r in range(1, m):
            rx = ((x << np.uint64(r)) | (x >> np.uint64(m - r))) & np.uint64(mask)
            np.minimum(rot_min, rx, out=rot_min)
            np.minimum(both_min, rx, out=both_min)
            np.minimum(both_min, rx ^ np.uint64(mask), out=both_min)
        primitive = np.ones(len(x), dtype=bool)
        for d in proper:
            rx = ((x << np.uint64(d)) | (x >> np.uint64(m - d))) & np.uint64(mask)
            primitive &= rx != x
        rot_count += int(np.count_nonzero(rot_min == x))
        prim_count += int(np.count_nonzero(primitive & (both_min == x)))
    return rot_count, prim_count

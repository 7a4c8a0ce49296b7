"""Varshamov-Tenengolts codes.

VT_a(n) is the set of length-n words with sum_i i*x_i = a (mod n+1). This
module enumerates them, counts them in closed form, decodes a single
deletion, and builds the systematic linear variant with about sqrt(2n)
check bits.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import CapacityError, DomainError
from .numth import binom, euler_phi, exact_div, gcd, moebius, odd_divisors
from .words import MAX_LENGTH, Word, insert_int

MAX_ENUM_LENGTH = 24

FAMILY_VT = "VT"
FAMILY_LINEAR = "VT-linear"
FAMILY_EXPLICIT = "explicit"

NOT_A_DESCENDANT = "not-a-descendant"
BAD_LENGTH = "checksum-invalid-length"


@dataclass(frozen=True)
class VTParams:
    n: int
    a: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_LENGTH:
            raise DomainError(f"n must be in 1..{MAX_LENGTH}, got {self.n}")
        # The checksum is a residue, so a is taken mod n+1.
        object.__setattr__(self, "a", self.a % (self.n + 1))


@dataclass(frozen=True)
class LinearVTParams:
    k: int
    c: int

    @property
    def n(self) -> int:
        return self.k + self.c


@dataclass(frozen=True)
class Code:
    """An explicit set of equal-length words plus where it came from."""

    n: int
    words: frozenset[Word]
    family: str = FAMILY_EXPLICIT
    params: VTParams | LinearVTParams | None = None

    def __post_init__(self):
        if any(w.n != self.n for w in self.words):
            raise DomainError(f"all words must have length {self.n}")
        if self.family == FAMILY_VT and isinstance(self.params, VTParams):
            a = self.params.a
            bad = [w for w in self.words if vt_checksum(w) != a]
            if bad:
                raise DomainError(f"{bad[0]} is not in VT_{a}({self.n})")

    @classmethod
    def from_words(cls, words: Iterable[Word | str], **kw) -> "Code":
        ws = frozenset(Word.from_str(w) if isinstance(w, str) else w for w in words)
        if not ws:
            raise DomainError("a code needs at least one word")
        lengths = {w.n for w in ws}
        if len(lengths) != 1:
            raise DomainError(f"mixed word lengths {sorted(lengths)}")
        return cls(lengths.pop(), ws, **kw)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        return w in self.words

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> list[Word]:
        return sorted(self.words, key=lambda w: w.value)

    def values(self) -> list[int]:
        return sorted(w.value for w in self.words)


@dataclass(frozen=True)
class DecodeOutcome:
    recovered: Word | None = None
    failure: str | None = None
    position: int | None = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.recovered is not None

    def __str__(self) -> str:
        return str(self.recovered) if self.ok else f"FAIL:{self.failure}"


# ---------------------------------------------------------------------------
# checksums and enumeration


def raw_checksum_int(x: int, n: int) -> int:
    s = 0
    i = n
    while x:
        if x & 1:
            s += i
        x >>= 1
        i -= 1
    return s


def raw_checksum(w: Word) -> int:
    """sum_i i*x_i as an ordinary integer."""
    return raw_checksum_int(w.value, w.n)


def vt_checksum(w: Word) -> int:
    return raw_checksum(w) % (w.n + 1)


def checksums_array(n: int) -> np.ndarray:
    """Raw checksums of every n-bit word, indexed by word value."""
    x = np.arange(1 << n, dtype=np.int64)
    s = np.zeros(1 << n, dtype=np.int64)
    for i in range(1, n + 1):
        s += i * ((x >> (n - i)) & 1)
    return s


@lru_cache(maxsize=256)
def _vt_values(n: int, a: int) -> tuple[int, ...]:
    s = checksums_array(n)
    return tuple(int(v) for v in np.flatnonzero(s % (n + 1) == a))


def vt_code(params: VTParams | tuple[int, int]) -> Code:
    if not isinstance(params, VTParams):
        params = VTParams(*params)
    n = params.n
    if n > MAX_ENUM_LENGTH:
        raise CapacityError(
            f"enumerating VT codes is capped at n={MAX_ENUM_LENGTH}; use vt_size_formula for n={n}"
        )
    words = frozenset(Word(n, x) for x in _vt_values(n, params.a))
    return Code(n, words, FAMILY_VT, params)


def vt_code_values(n: int, a: int) -> tuple[int, ...]:
    """Sorted codeword values of VT_a(n) without building Word objects."""
    if n > MAX_ENUM_LENGTH:
        raise CapacityError(f"enumeration capped at n={MAX_ENUM_LENGTH}")
    return _vt_values(n, a % (n + 1))


# ---------------------------------------------------------------------------
# counting


def vt_size_formula(n: int, a: int) -> int:
    """|VT_a(n)| in closed form, a Ramanujan-sum weighted necklace count."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    a %= n + 1
    m = n + 1
    total = 0
    for d in odd_divisors(m):
        q = d // gcd(d, a)
        total += exact_div(euler_phi(d) * moebius(q), euler_phi(q)) << (m // d)
    return exact_div(total, 2 * m)


def vt0_size(n: int) -> int:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    m = n + 1
    return exact_div(sum(euler_phi(d) << (m // d) for d in odd_divisors(m)), 2 * m)


def vt1_size(n: int) -> int:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    m = n + 1
    return exact_div(sum(moebius(d) << (m // d) for d in odd_divisors(m)), 2 * m)


def necklace_sequence(n: int) -> int:
    """N_n = (1/2n) sum over odd d | n of phi(d) 2^(n/d); 1, 1, 2, 2, 4, 6, 10, ..."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return exact_div(sum(euler_phi(d) << (n // d) for d in odd_divisors(n)), 2 * n)


# ---------------------------------------------------------------------------
# decoding


def _decode_int(y: int, m: int, n: int, a: int) -> tuple[int, int] | None:
    """Restore one deleted bit of the m = n-1 bit word y; returns (x, position)."""
    s = raw_checksum_int(y, m)
    w = y.bit_count()
    deficit = (a - s) % (n + 1)
    if deficit <= w:
        # A 0 went missing with `deficit` ones to its right.
        if deficit == 0:
            slot = m
        else:
            seen = 0
            slot = m
            for i in range(m, 0, -1):
                if (y >> (m - i)) & 1:
                    seen += 1
                    if seen == deficit:
                        slot = i - 1
                        break
        bit = 0
    else:
        # A 1 went missing with `zeros_left` zeros before it.
        zeros_left = deficit - 1 - w
        if zeros_left > m - w:
            return None
        slot = 0
        seen = 0
        while seen < zeros_left:
            if not (y >> (m - 1 - slot)) & 1:
                seen += 1
            slot += 1
        bit = 1
    x = insert_int(y, m, slot, bit)
    if raw_checksum_int(x, n) % (n + 1) != a:
        return None
    return x, slot + 1


def decode_single_deletion(received: Word, params: VTParams | tuple[int, int]) -> DecodeOutcome:
    """Recover a VT_a(n) codeword from a copy that lost at most one bit.

    A received word of full length n is passed through if its checksum is
    right. Lengths other than n and n-1 are reported as failures.
    """
    if not isinstance(params, VTParams):
        params = VTParams(*params)
    n, a = params.n, params.a
    if received.n == n:
        if vt_checksum(received) == a:
            return DecodeOutcome(received)
        return DecodeOutcome(failure=NOT_A_DESCENDANT)
    if received.n != n - 1:
        return DecodeOutcome(failure=BAD_LENGTH)
    got = _decode_int(received.value, received.n, n, a)
    if got is None:
        return DecodeOutcome(failure=NOT_A_DESCENDANT)
    return DecodeOutcome(Word(n, got[0]), position=got[1])


# ---------------------------------------------------------------------------
# the linear variant


def check_length(k: int) -> int:
    """ceil(sqrt(2k + 9/4) + 1/2), computed exactly.

    c >= sqrt(2k + 9/4) + 1/2  <=>  (2c - 1)^2 >= 8k + 9  for c >= 1.
    """
    c = 1
    while (2 * c - 1) ** 2 < 8 * k + 9:
        c += 1
    return c


def linear_params(k: int) -> LinearVTParams:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    c = check_length(k)
    p = LinearVTParams(k, c)
    assert binom(c + 1, 2) >= p.n + 1, (k, c)
    return p


@lru_cache(maxsize=256)
def _check_table(k: int) -> tuple[int, ...]:
    """For each residue r mod n+1, the check-bit pattern whose positions sum to r.

    Patterns are read as c-bit ints (position k+1 is the top bit); the
    lexicographically smallest pattern is taken for each residue.
    """
    p = linear_params(k)
    n, c = p.n, p.c
    mod = n + 1
    # reach[j] = residues attainable using check positions k+1+j .. n
    reach = [0] * (c + 1)
    reach[c] = 1
    full = (1 << mod) - 1
    for j in range(c - 1, -1, -1):
        pos = k + 1 + j
        r = reach[j + 1]
        rotated = ((r << pos) | (r >> (mod - pos))) & full
        reach[j] = r | rotated
    table = []
    for target in range(mod):
        if not (reach[0] >> target) & 1:
            raise AssertionError(f"no check pattern reaches residue {target} for k={k}")
        bits = 0
        need = target
        for j in range(c):
            pos = k + 1 + j
            if (reach[j + 1] >> need) & 1:
                bits <<= 1
            else:
                bits = (bits << 1) | 1
                need = (need - pos) % mod
        assert need == 0
        table.append(bits)
    return tuple(table)


def linear_encode_int(info: int, k: int) -> int:
    p = linear_params(k)
    n = p.n
    s = raw_checksum_int(info << p.c, n)
    return (info << p.c) | _check_table(k)[(-s) % (n + 1)]


def linear_encode(info: Word | Iterable[int] | str) -> Word:
    """Systematic encoder: info bits first, then check bits making the checksum 0."""
    if isinstance(info, str):
        info = Word.from_str(info)
    elif not isinstance(info, Word):
        info = Word.from_bits(info)
    k = info.n
    p = linear_params(k)
    return Word(p.n, linear_encode_int(info.value, k))


def linear_code(k: int) -> Code:
    """All 2^k codewords of the linear variant (small k only)."""
    if k > 16:
        raise CapacityError("linear_code enumeration is capped at k=16")
    p = linear_params(k)
    words = frozenset(Word(p.n, linear_encode_int(i, k)) for i in range(1 << k))
    return Code(p.n, words, FAMILY_LINEAR, p)


def is_linear(code: Code) -> bool:
    """True iff the code contains zero and is closed under bitwise sum."""
    vals = set(code.values())
    if 0 not in vals:
        return False
    # Closure is implied by closure over sums with a basis; checking all
    # pairs is fine at the sizes used here.
    ordered = sorted(vals)
    return all((x ^ y) in vals for i, x in enumerate(ordered) for y in ordered[i + 1:])


# ---------------------------------------------------------------------------
# code-table files


def write_code_table(code: Code, path: str | Path | None = None) -> str:
    a = code.params.a if isinstance(code.params, VTParams) else 0
    head = f"# VT n={code.n} a={a} size={len(code)}"
    text = "\n".join([head, *(str(w) for w in code.sorted())]) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def read_code_table(source: str | Path) -> Code:
    """Parse a code table from a path or from the text itself."""
    text = source
    if isinstance(source, Path) or "\n" not in str(source):
        text = Path(source).read_text()
    header = None
    words = []
    for line in str(text).splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = header or line
            continue
        words.append(Word.from_str(line))
    meta = {}
    if header:
        for tok in header[1:].split():
            if "=" in tok:
                key, val = tok.split("=", 1)
                meta[key] = int(val)
    code = Code.from_words(words)
    if "size" in meta and meta["size"] != len(code):
        raise DomainError(f"header says size={meta['size']} but {len(code)} words were read")
    if "n" in meta and meta["n"] != code.n:
        raise DomainError(f"header says n={meta['n']} but words have length {code.n}")
    if "a" in meta:
        params = VTParams(code.n, meta["a"])
        if all(vt_checksum(w) == params.a for w in code.words):
            return Code(code.n, code.words, FAMILY_VT, params)
    return code

"""Deletion-channel simulation over linear VT blocks.

Each block carries k information bits, is encoded with the systematic
linear VT encoder (checksum 0 mod n+1), loses bits in the channel and is
decoded by the single-deletion decoder. Block boundaries are known to the
receiver, which infers a deletion from the received length alone.

Randomness comes from :class:`XorShift64Star`, a fixed generator so that
transcripts are reproducible bit for bit from the seed:

* the seed (any int, taken mod 2**64) is passed once through SplitMix64
  (add 0x9E3779B97F4A7C15; z ^= z >> 30, z *= 0xBF58476D1CE4E5B9;
  z ^= z >> 27, z *= 0x94D049BB133111EB; z ^= z >> 31); a zero result is
  replaced by 0x9E3779B97F4A7C15;
* each draw is xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27;
  output x * 0x2545F4914F6CDD1D mod 2**64;
* ``below(m)`` is (draw * m) >> 64, ``uniform()`` is (draw >> 11) / 2**53,
  and ``bits(k)`` takes the top k bits of successive draws, 64 at a time.

Per block the draws are: the information bits, then either one ``below(n)``
for the deleted position or n ``uniform()`` calls, one per position.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import DomainError
from .vt import DecodeOutcome, VTParams, decode_single_deletion, linear_encode_int, linear_params
from .words import Word, delete_int

MASK64 = (1 << 64) - 1
ALWAYS_ONE = "always-one"
PER_BIT = "per-bit"


def splitmix64(seed: int) -> int:
    z = (seed + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int = 0):
        self.state = splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, m: int) -> int:
        return (self.next() * m) >> 64

    def uniform(self) -> float:
        return (self.next() >> 11) / 9007199254740992.0

    def bits(self, k: int) -> int:
        out, left = 0, k
        while left > 0:
            take = min(64, left)
            out = (out << take) | (self.next() >> (64 - take))
            left -= take
        return out


def deterministic_prng(seed: int) -> XorShift64Star:
    return XorShift64Star(seed)


@dataclass(frozen=True)
class ChannelConfig:
    k: int = 8
    blocks: int = 1
    seed: int = 0
    mode: str = ALWAYS_ONE
    p: float = 0.0

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("k must be >= 1")
        if self.blocks < 1:
            raise DomainError("blocks must be >= 1")
        if self.mode not in (ALWAYS_ONE, PER_BIT):
            raise DomainError(f"unknown deletion mode {self.mode!r}")
        if not 0.0 <= self.p <= 1.0:
            raise DomainError("p must lie in [0, 1]")

    @property
    def n(self) -> int:
        return linear_params(self.k).n


@dataclass(frozen=True)
class TransmissionRecord:
    block: int
    sent: Word
    deleted_positions: tuple[int, ...]
    received: Word | None
    decoded: DecodeOutcome | None
    ok: bool

    @property
    def deleted_position(self) -> int | None:
        return self.deleted_positions[0] if len(self.deleted_positions) == 1 else None

    def line(self) -> str:
        pos = ",".join(map(str, self.deleted_positions)) or "-"
        recv = "-" if self.received is None else str(self.received)
        dec = "-" if self.decoded is None else str(self.decoded)
        return "\t".join([str(self.block), str(self.sent), pos, recv, dec, str(self.ok).lower()])


@dataclass
class SimulationSummary:
    blocks: int = 0
    deleted: int = 0
    recovered: int = 0
    failed: int = 0
    multi: int = 0
    failures: list[TransmissionRecord] = field(default_factory=list)
    records: list[TransmissionRecord] | None = None

    def line(self) -> str:
        return (
            f"blocks={self.blocks} deleted={self.deleted} recovered={self.recovered} "
            f"failed={self.failed} multi={self.multi}"
        )


def transmit(config: ChannelConfig) -> Iterator[TransmissionRecord]:
    """Yield one record per block, in block order."""
    rng = XorShift64Star(config.seed)
    k, n = config.k, config.n
    params = VTParams(n, 0)
    for b in range(config.blocks):
        x = linear_encode_int(rng.bits(k), k)
        if config.mode == ALWAYS_ONE:
            positions = (1 + rng.below(n),)
        else:
            positions = tuple(i for i in range(1, n + 1) if rng.uniform() < config.p)
        y, m = x, n
        for i in reversed(positions):
            y = delete_int(y, m, i)
            m -= 1
        sent = Word(n, x)
        if len(positions) > 1:
            received = Word(m, y) if m else None
            yield TransmissionRecord(b, sent, positions, received, None, False)
            continue
        received = Word(m, y)
        outcome = decode_single_deletion(received, params)
        yield TransmissionRecord(b, sent, positions, received, outcome, outcome.recovered == sent)


def run_simulation(config: ChannelConfig, keep_records: bool = False) -> SimulationSummary:
    """Push ``config.blocks`` blocks through the channel and tally the results.

    Blocks that lost two or more bits are beyond what the code corrects;
    they are counted under ``multi`` and never as failures.
    """
    summary = SimulationSummary(records=[] if keep_records else None)
    for rec in transmit(config):
        summary.blocks += 1
        summary.deleted += len(rec.deleted_positions)
        if len(rec.deleted_positions) > 1:
            summary.multi += 1
        elif rec.ok:
            summary.recovered += 1
        else:
            summary.failed += 1
            summary.failures.append(rec)
        if keep_records:
            summary.records.append(rec)
    return summary

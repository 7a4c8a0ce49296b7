"""Exact integer number theory used by the counting formulas.

Everything here works on plain Python ints; factorization is trial
division, which is plenty for the argument sizes the rest of the package
produces (a few thousand at most).
"""
from __future__ import annotations

from functools import lru_cache
from math import comb, gcd as _gcd

from .errors import DomainError

__all__ = [
    "factorize",
    "euler_phi",
    "moebius",
    "ramanujan_sum",
    "divisors",
    "odd_divisors",
    "gcd",
    "binom",
    "exact_div",
]


def _check_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p, e), ...)`` with p ascending."""
    _check_positive(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    _check_positive(n)
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def moebius(n: int) -> int:
    _check_positive(n)
    fs = factorize(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


def gcd(a: int, b: int) -> int:
    return _gcd(a, b)


def ramanujan_sum(d: int, a: int) -> int:
    """c_d(a) via the closed form phi(d) mu(d/g) / phi(d/g), g = gcd(d, a)."""
    _check_positive(d, "d")
    if a < 0:
        raise DomainError(f"a must be >= 0, got {a}")
    q = d // _gcd(d, a)
    return exact_div(euler_phi(d) * moebius(q), euler_phi(q))


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return tuple(small + large[::-1])


def divisors(n: int) -> list[int]:
    """Ascending list of the positive divisors of ``n``."""
    _check_positive(n)
    return list(_divisors(n))


def odd_divisors(n: int) -> list[int]:
    _check_positive(n)
    return [d for d in _divisors(n) if d % 2]


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"binom({n}, {k}) needs 0 <= k <= n")
    return comb(n, k)


def exact_div(num: int, den: int) -> int:
    """Integer division that must leave no remainder.

    Every closed form in this package is an integer, so a remainder means
    the formula was transcribed wrongly; we fail loudly instead of rounding.
    """
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"non-exact division {num} / {den}")
    return q

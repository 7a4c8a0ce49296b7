import itertools

import pytest

from vtcodes.words import Word


def brute_descendants(text: str, e: int) -> set[str]:
    """Every distinct string left after deleting e positions, by combinations."""
    n = len(text)
    return {
        "".join(text[i] for i in range(n) if i not in drop)
        for drop in map(set, itertools.combinations(range(n), e))
    }


def brute_vt(n: int, a: int) -> list[str]:
    return [
        "".join(bits)
        for bits in itertools.product("01", repeat=n)
        if sum(i * int(b) for i, b in enumerate(bits, 1)) % (n + 1) == a
    ]


@pytest.fixture
def w():
    return Word.from_str


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

"""Shared test helpers: independent oracles, adversarial patterns, fixtures."""

from __future__ import annotations

import random

import pytest

from ohash.backend import available_backends

BACKENDS = available_backends()


@pytest.fixture(params=BACKENDS)
def backend(request):
    """Runs a test once per available kernel backend."""
    return request.param


def find_occurrences(pattern: bytes, text: bytes) -> list[int]:
    """Occurrence oracle built on bytes.find, independent of every engine."""
    out = []
    start = 0
    while True:
        i = text.find(pattern, start)
        if i < 0:
            return out
        out.append(i)
        start = i + 1


def fibonacci_word(length: int, a: int = 97, b: int = 98) -> bytes:
    """Prefix of the Fibonacci word over two symbols."""
    prev, cur = bytes([b]), bytes([a])
    while len(cur) < length:
        prev, cur = cur, cur + prev
    return cur[:length]


def adversarial_patterns(m: int) -> list[bytes]:
    """Hard pattern shapes of length m: all-equal, short periods, Fibonacci."""
    pats = [b"a" * m, (b"ab" * m)[:m], (b"abc" * m)[:m], fibonacci_word(m)]
    # dedupe while keeping order (short m collapses some shapes)
    seen = set()
    out = []
    for p in pats:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def random_octets(rng: random.Random, length: int, sigma: int) -> bytes:
    return bytes(rng.randrange(sigma) for _ in range(length))


class BoundsCheckedBytes:
    """Duck-typed octet sequence that fails fast on any out-of-range access."""

    def __init__(self, data: bytes):
        self._data = data

    def __len__(self) -> int:
        return len(self._data)

    def __getitem__(self, key):
        n = len(self._data)
        if isinstance(key, slice):
            assert key.step is None, "kernels never use extended slices"
            start = 0 if key.start is None else key.start
            stop = n if key.stop is None else key.stop
            assert 0 <= start <= stop <= n, f"slice [{start}:{stop}] outside [0,{n}]"
            return self._data[start:stop]
        assert 0 <= key < n, f"index {key} outside [0,{n})"
        return self._data[key]


# --- acceptance reporting --------------------------------------------------
# test_acceptance.py records one line per criterion; the hook prints them in
# the terminal summary so they are visible even under captured output.

ACCEPTANCE_RESULTS: list[tuple[str, str, str]] = []


def record_acceptance(name: str, status: str, detail: str) -> None:
    ACCEPTANCE_RESULTS.append((name, status, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, status, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{status:<4} {name}: {detail}")

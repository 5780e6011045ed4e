"""Octet-level q-gram hash schemes and the shift table that drives the engines.

Three schemes cover the family: identity hashing for single octets and
16-bit concatenation for octet pairs (both injective, so equal buckets mean
equal q-grams), and a shift-left-one-and-add fold modulo 256 for longer
q-grams, which tolerates collisions.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from enum import IntEnum

FOLD_TABLE_SIZE = 256
PAIR_TABLE_SIZE = 65536

# Shift entries are stored as uint16, which bounds the pattern length.
MAX_PATTERN_LEN = 0xFFFF

FOLD_Q_MIN = 2
FOLD_Q_MAX = 10


class QTooLargeError(ValueError):
    """A q-gram engine was asked to handle a pattern shorter than q."""


class HashKind(IntEnum):
    PERFECT1 = 1  # identity on a single octet
    PERFECT2 = 2  # window[0]*256 + window[1]
    FOLD_MOD = 3  # shift-left-1-add fold, modulo 256


@dataclass(frozen=True)
class HashScheme:
    kind: HashKind
    q: int
    table_size: int

    def __post_init__(self) -> None:
        if self.kind is HashKind.PERFECT1:
            ok = self.q == 1 and self.table_size == FOLD_TABLE_SIZE
        elif self.kind is HashKind.PERFECT2:
            ok = self.q == 2 and self.table_size == PAIR_TABLE_SIZE
        else:
            ok = FOLD_Q_MIN <= self.q <= FOLD_Q_MAX and self.table_size == FOLD_TABLE_SIZE
        if not ok:
            raise ValueError(f"inconsistent hash scheme: {self.kind.name} q={self.q} S={self.table_size}")

    @property
    def injective(self) -> bool:
        """True when equal buckets imply equal q-grams."""
        return self.kind is not HashKind.FOLD_MOD


def perfect1() -> HashScheme:
    return HashScheme(HashKind.PERFECT1, 1, FOLD_TABLE_SIZE)


def perfect2() -> HashScheme:
    return HashScheme(HashKind.PERFECT2, 2, PAIR_TABLE_SIZE)


def fold_mod(q: int) -> HashScheme:
    return HashScheme(HashKind.FOLD_MOD, q, FOLD_TABLE_SIZE)


def hash_qgram(scheme: HashScheme, window: bytes) -> int:
    """Bucket index of one q-gram; ``window`` must hold exactly ``scheme.q`` octets."""
    if len(window) != scheme.q:
        raise ValueError(f"window of {len(window)} octets fed to a q={scheme.q} scheme")
    if scheme.kind is HashKind.PERFECT1:
        return window[0]
    if scheme.kind is HashKind.PERFECT2:
        return (window[0] << 8) | window[1]
    h = 0
    for sym in window:
        h = (h << 1) + sym
    return h & 0xFF


@dataclass(frozen=True)
class ShiftTable:
    """Per-bucket shift amounts for one pattern under one scheme.

    ``entries`` holds one uint16 per bucket and is treated as immutable after
    construction. The bucket of the pattern's final q-gram holds 0; ``sh`` is
    the displacement applied after every shift-0 attempt.
    """

    q: int
    scheme: HashScheme
    entries: array
    sh: int
    default_shift: int
    m: int
    final_hash: int


def build_shift_table(pattern: bytes, scheme: HashScheme) -> ShiftTable:
    """Build the shift table of ``pattern`` under ``scheme``.

    Walking q-gram end positions e = q-1 .. m-1 in order, the bucket of the
    q-gram ending at e is overwritten with m-1-e, so each bucket ends up with
    the distance from the pattern's right end to the rightmost q-gram hashing
    there. Untouched buckets keep the default m-q. ``sh`` is the value the
    final q-gram's bucket held just before its own overwrite to 0 (and 1 when
    the pattern is a single q-gram).
    """
    m = len(pattern)
    q = scheme.q
    if m < 1:
        raise ValueError("pattern must not be empty")
    if m < q:
        raise QTooLargeError(f"pattern of length {m} is shorter than the q-gram length {q}")
    if m > MAX_PATTERN_LEN:
        raise ValueError(f"pattern length {m} exceeds the uint16 shift-entry range ({MAX_PATTERN_LEN})")

    default = m - q
    entries = array("H", [default]) * scheme.table_size
    for e in range(q - 1, m - 1):
        entries[hash_qgram(scheme, pattern[e - q + 1 : e + 1])] = m - 1 - e
    final_hash = hash_qgram(scheme, pattern[m - q :])
    sh = entries[final_hash] if m > q else 1
    entries[final_hash] = 0
    return ShiftTable(
        q=q,
        scheme=scheme,
        entries=entries,
        sh=sh,
        default_shift=default,
        m=m,
        final_hash=final_hash,
    )

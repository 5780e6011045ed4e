"""Smallest collision-free q-gram length for a pattern.

The suffix array and LCP array of the pattern give the smallest q at which
all q-grams are distinct as strings; the hash probe then walks q upward from
that bound until every q-gram lands in its own bucket under the scheme
assigned to that q. Patterns are short, so both structures are built naively.
"""

from __future__ import annotations

from typing import NamedTuple

from .hashing import HashScheme, hash_qgram

# Probes never exceed q = 10; longer q-grams fall back to the fixed q = 8 engine.
PROBE_CEILING = 10

SchemeAssignment = dict[int, HashScheme]


class SuffixArray(NamedTuple):
    sa: list[int]
    lcp: list[int]


def build_suffix_array(pattern: bytes) -> SuffixArray:
    """Comparison-sorted suffix order plus adjacent common-prefix lengths.

    lcp[0] is 0; lcp[r] is the exact common-prefix length of the suffixes at
    sa[r-1] and sa[r]. O(m^2 log m) worst case, fine for short patterns.
    """
    m = len(pattern)
    if m < 1:
        raise ValueError("pattern must not be empty")
    sa = sorted(range(m), key=lambda i: pattern[i:])
    lcp = [0] * m
    for r in range(1, m):
        a = pattern[sa[r - 1] :]
        b = pattern[sa[r] :]
        k = 0
        limit = min(len(a), len(b))
        while k < limit and a[k] == b[k]:
            k += 1
        lcp[r] = k
    return SuffixArray(sa, lcp)


def string_unique_q_lower_bound(suffixes: SuffixArray) -> int:
    """Smallest q at which all q-grams of the pattern are pairwise distinct
    as strings: one more than the largest adjacent LCP, capped at m."""
    m = len(suffixes.sa)
    return min(max(suffixes.lcp) + 1, m)


def minimal_unique_hash_q(
    pattern: bytes, assignment: SchemeAssignment
) -> tuple[int, HashScheme] | None:
    """Smallest q whose pattern q-grams occupy pairwise-distinct buckets.

    Returns (q*, assignment[q*]), or None when every probe up to the ceiling
    collides (the caller then falls back to the fixed q = 8 engine). The probe
    starts at the string lower bound: string-duplicate q-grams collide under
    any scheme, so smaller q cannot succeed.
    """
    m = len(pattern)
    if m < 1:
        raise ValueError("pattern must not be empty")
    q0 = string_unique_q_lower_bound(build_suffix_array(pattern))
    if q0 > PROBE_CEILING:
        return None
    for q in range(q0, min(PROBE_CEILING, m) + 1):
        scheme = assignment[q]
        seen: set[int] = set()
        collided = False
        for e in range(q - 1, m):
            bucket = hash_qgram(scheme, pattern[e - q + 1 : e + 1])
            if bucket in seen:
                collided = True
                break
            seen.add(bucket)
        if not collided:
            return q, scheme
    return None

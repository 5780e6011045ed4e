"""Searching phases: naive oracle, fixed-q engines, optimal-q engines, planner.

A SearchPlan resolves one (variant, pattern) pair to a concrete engine:
the naive scan, the generic q-gram engine (full verification on shift-0),
or the perfect-hash engine (prefix-only verification, valid because its
schemes are injective). All engines report every occurrence, overlaps
included, in increasing start order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import _pykernels
from .backend import get_kernels
from .hashing import (
    HashScheme,
    QTooLargeError,
    ShiftTable,
    build_shift_table,
    fold_mod,
    perfect1,
    perfect2,
)
from .minq import SchemeAssignment, minimal_unique_hash_q


class Variant(Enum):
    HASH3 = "hash3"
    HASH5 = "hash5"
    HASH8 = "hash8"
    OHASH1 = "ohash1"
    OHASH2 = "ohash2"
    OHASH3 = "ohash3"
    NAIVE = "naive"


class EngineKind(Enum):
    NAIVE = "naive"
    QGRAM = "qgram"
    PERFECT_QGRAM = "perfect_qgram"


FIXED_Q = {Variant.HASH3: 3, Variant.HASH5: 5, Variant.HASH8: 8}
FALLBACK_Q = 8  # probe past the ceiling drops to the fixed q=8 engine

OHASH1_ASSIGNMENT: SchemeAssignment = {1: perfect1(), **{q: fold_mod(q) for q in range(2, 11)}}
OHASH2_ASSIGNMENT: SchemeAssignment = {1: perfect1(), 2: perfect2(), **{q: fold_mod(q) for q in range(3, 11)}}
# The third variant probes like the second; its plan then pins q=3 for any
# probe result in 3..10 instead of using the collision-free q.
OHASH3_ASSIGNMENT: SchemeAssignment = dict(OHASH2_ASSIGNMENT)

ASSIGNMENTS = {
    Variant.OHASH1: OHASH1_ASSIGNMENT,
    Variant.OHASH2: OHASH2_ASSIGNMENT,
    Variant.OHASH3: OHASH3_ASSIGNMENT,
}


@dataclass(frozen=True)
class SearchPlan:
    """Resolved decision (engine, q, table) for one pattern under one variant."""

    variant: Variant
    engine: EngineKind
    q: int
    pattern: bytes
    table: ShiftTable | None


def _as_variant(variant: Variant | str) -> Variant:
    return variant if isinstance(variant, Variant) else Variant(variant)


def naive_search(pattern: bytes, text: bytes, backend: str | None = None) -> list[int]:
    """Reference oracle: direct comparison at every alignment."""
    if len(pattern) < 1:
        raise ValueError("pattern must not be empty")
    return get_kernels(backend).naive_positions(pattern, text)


def qgram_search(pattern: bytes, text: bytes, table: ShiftTable, backend: str | None = None) -> list[int]:
    """Generic engine over a prebuilt shift table; full verification on shift-0."""
    if len(pattern) != table.m:
        raise ValueError("shift table was not built from this pattern")
    if len(pattern) < table.q:
        raise QTooLargeError(f"pattern of length {len(pattern)} is shorter than q={table.q}")
    return get_kernels(backend).qgram_positions(
        pattern, text, table.q, table.entries, table.sh, int(table.scheme.kind)
    )


def perfect_qgram_search(pattern: bytes, text: bytes, table: ShiftTable, backend: str | None = None) -> list[int]:
    """Perfect-hash engine; verifies only the m-q leading octets on shift-0."""
    if not table.scheme.injective:
        raise ValueError("perfect engine requires an injective hash scheme")
    if len(pattern) != table.m:
        raise ValueError("shift table was not built from this pattern")
    if len(pattern) < table.q:
        raise QTooLargeError(f"pattern of length {len(pattern)} is shorter than q={table.q}")
    return get_kernels(backend).perfect_positions(
        pattern, text, table.q, table.entries, table.sh, int(table.scheme.kind), table.final_hash
    )


def plan(variant: Variant | str, pattern: bytes) -> SearchPlan:
    """Resolve ``variant`` for ``pattern``: pick engine, q and shift table.

    Fixed-q variants reject patterns shorter than their q. Optimal-q variants
    accept any non-empty pattern: they probe for the minimal collision-free q,
    run the perfect engine when it lands on an injective scheme, and fall back
    to the fixed q=8 tables when the probe passes the ceiling.
    """
    m = len(pattern)
    if m < 1:
        raise ValueError("pattern must not be empty")
    variant = _as_variant(variant)

    if variant is Variant.NAIVE:
        return SearchPlan(variant, EngineKind.NAIVE, 0, pattern, None)

    if variant in FIXED_Q:
        q = FIXED_Q[variant]
        if m < q:
            raise QTooLargeError(
                f"{variant.value} needs a pattern of at least {q} octets (got {m}): "
                "q-gram engines cannot search patterns shorter than q"
            )
        return SearchPlan(variant, EngineKind.QGRAM, q, pattern, build_shift_table(pattern, fold_mod(q)))

    resolved = minimal_unique_hash_q(pattern, ASSIGNMENTS[variant])
    if resolved is None:
        table = build_shift_table(pattern, fold_mod(FALLBACK_Q))
        return SearchPlan(variant, EngineKind.QGRAM, FALLBACK_Q, pattern, table)
    q_star, scheme = resolved
    if scheme.injective:
        return SearchPlan(variant, EngineKind.PERFECT_QGRAM, q_star, pattern, build_shift_table(pattern, scheme))
    if variant is Variant.OHASH3:
        return SearchPlan(variant, EngineKind.QGRAM, 3, pattern, build_shift_table(pattern, fold_mod(3)))
    return SearchPlan(variant, EngineKind.QGRAM, q_star, pattern, build_shift_table(pattern, scheme))


def execute_plan(search_plan: SearchPlan, text: bytes, backend: str | None = None) -> list[int]:
    """Run a resolved plan over ``text``."""
    if search_plan.engine is EngineKind.NAIVE:
        return naive_search(search_plan.pattern, text, backend)
    assert search_plan.table is not None
    if search_plan.engine is EngineKind.QGRAM:
        return qgram_search(search_plan.pattern, text, search_plan.table, backend)
    return perfect_qgram_search(search_plan.pattern, text, search_plan.table, backend)


def search(variant: Variant | str, pattern: bytes, text: bytes, backend: str | None = None) -> list[int]:
    """All occurrence start positions of ``pattern`` in ``text`` under ``variant``."""
    return execute_plan(plan(variant, pattern), text, backend)


def search_with_verification_counts(
    variant: Variant | str, pattern: bytes, text: bytes
) -> tuple[list[int], list[int]]:
    """Positions plus the per-attempt symbol-comparison counts of every
    shift-0 verification (pure-Python instrumented kernels)."""
    search_plan = plan(variant, pattern)
    if search_plan.engine is EngineKind.NAIVE:
        raise ValueError("verification counting applies to q-gram engines only")
    table = search_plan.table
    assert table is not None
    if search_plan.engine is EngineKind.QGRAM:
        return _pykernels.qgram_positions_counted(
            pattern, text, table.q, table.entries, table.sh, int(table.scheme.kind)
        )
    return _pykernels.perfect_positions_counted(
        pattern, text, table.q, table.entries, table.sh, int(table.scheme.kind), table.final_hash
    )

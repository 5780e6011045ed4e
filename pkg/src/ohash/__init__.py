"""Exact single-pattern string matching over q-gram hash shift tables.

Fixed-q engines (hash3/hash5/hash8) pair with optimal-q variants
(ohash1/ohash2/ohash3) that pick, per pattern, the smallest q whose q-grams
hash collision-free, switching to injective hashing and shortened
verification when q is 1 or 2. A benchmark lab and CLI reproduce the
timing-table workflow. Hot kernels are compiled (Cython) with a pure-Python
fallback selected at import; see ``ohash.backend``.
"""

__version__ = "0.1.0"

from .backend import available_backends, backend_name, get_kernels
from .bench import (
    BenchConfig,
    BenchRecord,
    BenchVerificationError,
    TextSource,
    format_csv,
    generate_random_text,
    load_text_file,
    run_cell,
    run_grid,
    sample_patterns,
)
from .engines import (
    EngineKind,
    SearchPlan,
    Variant,
    execute_plan,
    naive_search,
    perfect_qgram_search,
    plan,
    qgram_search,
    search,
    search_with_verification_counts,
)
from .hashing import (
    HashKind,
    HashScheme,
    QTooLargeError,
    ShiftTable,
    build_shift_table,
    fold_mod,
    hash_qgram,
    perfect1,
    perfect2,
)
from .minq import (
    SuffixArray,
    build_suffix_array,
    minimal_unique_hash_q,
    string_unique_q_lower_bound,
)
from .report import CsvFormatError, parse_bench_csv, write_report

__all__ = [
    "BenchConfig",
    "BenchRecord",
    "BenchVerificationError",
    "CsvFormatError",
    "EngineKind",
    "HashKind",
    "HashScheme",
    "QTooLargeError",
    "SearchPlan",
    "ShiftTable",
    "SuffixArray",
    "TextSource",
    "Variant",
    "available_backends",
    "backend_name",
    "build_shift_table",
    "build_suffix_array",
    "execute_plan",
    "fold_mod",
    "format_csv",
    "generate_random_text",
    "get_kernels",
    "hash_qgram",
    "load_text_file",
    "minimal_unique_hash_q",
    "naive_search",
    "parse_bench_csv",
    "perfect1",
    "perfect2",
    "perfect_qgram_search",
    "plan",
    "qgram_search",
    "run_cell",
    "run_grid",
    "sample_patterns",
    "search",
    "search_with_verification_counts",
    "string_unique_q_lower_bound",
    "write_report",
]

"""Benchmark laboratory: text generation, pattern sampling, timed cells, CSV.

Texts come from a seeded PCG64 stream (or from corpus files read as raw
octets); patterns are substrings of the text, so every one occurs at least
once. Each cell times the search phase only (preprocessing is reported in
its own column) and cross-checks its occurrence total against the naive
engine before it is recorded.
"""

from __future__ import annotations

import os
import platform
import time
import zlib
from dataclasses import dataclass

import numpy as np

from . import _pykernels
from .backend import backend_name, get_kernels
from .engines import ASSIGNMENTS, FIXED_Q, Variant, execute_plan, plan
from .hashing import QTooLargeError

DEFAULT_TEXT_LEN = 1 << 20
DEFAULT_LENGTHS = tuple(range(2, 23, 2))
DEFAULT_REPS = 20
DEFAULT_ITERS = 5
DEFAULT_ALGOS = (
    Variant.HASH3,
    Variant.HASH5,
    Variant.HASH8,
    Variant.OHASH1,
    Variant.OHASH2,
    Variant.OHASH3,
)

CSV_HEADER = "algo,text,sigma,m,mean_ms,std_ms,occ_total,q1,q2,q3plus,prep_ms"


class BenchVerificationError(RuntimeError):
    """A timed cell's occurrence total disagreed with the naive oracle."""


@dataclass(frozen=True)
class TextSource:
    label: str
    kind: str  # "random" or "file"
    sigma: int  # alphabet budget (random) or distinct octet count (file)
    octets: bytes
    seed: int | None = None
    path: str | None = None


def generate_random_text(sigma: int, length: int, seed: int) -> TextSource:
    """I.i.d. uniform octets over {0..sigma-1} from a PCG64 stream seeded with
    ``seed``; identical arguments reproduce the text bit-exactly."""
    if not 2 <= sigma <= 256:
        raise ValueError(f"sigma must lie in [2, 256], got {sigma}")
    if length < 1:
        raise ValueError("length must be positive")
    rng = np.random.Generator(np.random.PCG64(seed))
    octets = rng.integers(0, sigma, size=length, dtype=np.uint8).tobytes()
    return TextSource(label=f"rand{sigma}", kind="random", sigma=sigma, octets=octets, seed=seed)


def load_text_file(path: str) -> TextSource:
    """Corpus file ingested as raw octets; sigma is the distinct-octet count."""
    with open(path, "rb") as fh:
        data = fh.read()
    if not data:
        raise ValueError(f"corpus file is empty: {path}")
    return TextSource(
        label=os.path.basename(path),
        kind="file",
        sigma=len(set(data)),
        octets=data,
        path=str(path),
    )


def sample_patterns(text: TextSource, m: int, reps: int, seed: int) -> list[bytes]:
    """``reps`` length-m substrings of the text at uniform start offsets drawn
    from PCG64(seed); every sampled pattern occurs in the text by construction."""
    n = len(text.octets)
    if not 1 <= m <= n:
        raise ValueError(f"pattern length {m} must lie in [1, {n}]")
    if reps < 1:
        raise ValueError("reps must be positive")
    rng = np.random.Generator(np.random.PCG64(seed))
    starts = rng.integers(0, n - m + 1, size=reps)
    return [text.octets[s : s + m] for s in map(int, starts)]


def derive_seed(master: int, label: str, m: int) -> int:
    """Deterministic per-(text, m) child seed for pattern sampling."""
    ss = np.random.SeedSequence([master, zlib.crc32(label.encode("utf-8")), m])
    return int(ss.generate_state(1)[0])


@dataclass(frozen=True)
class BenchRecord:
    """One measured cell; ``mean_ms is None`` marks an inapplicable cell."""

    algo: str
    text_id: str
    sigma: int
    m: int
    mean_ms: float | None
    std_ms: float | None
    occ_total: int | None
    q_hist: tuple[int, int, int]  # patterns resolved at q=1, q=2, q>=3
    prep_ms: float | None

    @property
    def applicable(self) -> bool:
        return self.mean_ms is not None


@dataclass(frozen=True)
class BenchConfig:
    lengths: tuple[int, ...] = DEFAULT_LENGTHS
    reps: int = DEFAULT_REPS
    inner_iters: int = DEFAULT_ITERS
    seed: int = 0
    algos: tuple[Variant, ...] = DEFAULT_ALGOS
    include_prep: bool = False
    reference_verify: bool = False

    def __post_init__(self) -> None:
        if not self.lengths or min(self.lengths) < 1:
            raise ValueError("lengths must be a non-empty set of positive values")
        if self.reps < 1 or self.inner_iters < 1:
            raise ValueError("reps and inner_iters must be positive")


def _inapplicable(variant: Variant, text: TextSource, m: int) -> BenchRecord:
    return BenchRecord(
        algo=variant.value,
        text_id=text.label,
        sigma=text.sigma,
        m=m,
        mean_ms=None,
        std_ms=None,
        occ_total=None,
        q_hist=(0, 0, 0),
        prep_ms=None,
    )


def run_cell(
    variant: Variant | str,
    text: TextSource,
    patterns: list[bytes],
    inner_iters: int,
    *,
    include_prep: bool = False,
    reference_verify: bool = False,
    backend: str | None = None,
) -> BenchRecord:
    """Time one (variant, text, m) cell over the sampled patterns.

    Wall-clock timing covers the search phase only unless ``include_prep``;
    mean/std run over patterns x iterations. The cell's occurrence total is
    checked against the naive engine (``reference_verify`` escalates to the
    pure-Python oracle) and a mismatch raises BenchVerificationError.
    """
    variant = variant if isinstance(variant, Variant) else Variant(variant)
    if not patterns:
        raise ValueError("no patterns to run")
    m = len(patterns[0])
    if any(len(p) != m for p in patterns):
        raise ValueError("patterns in one cell must share a length")
    if inner_iters < 1:
        raise ValueError("inner_iters must be positive")

    fixed_q = FIXED_Q.get(variant)
    if fixed_q is not None and m < fixed_q:
        return _inapplicable(variant, text, m)

    clock = time.perf_counter
    octets = text.octets

    plans = []
    prep_samples = []
    for p in patterns:
        t0 = clock()
        plans.append(plan(variant, p))
        prep_samples.append(clock() - t0)

    samples = []
    occ_total = 0
    for pl in plans:
        positions: list[int] = []
        for _ in range(inner_iters):
            if include_prep:
                t0 = clock()
                positions = execute_plan(plan(variant, pl.pattern), octets, backend)
                samples.append(clock() - t0)
            else:
                t0 = clock()
                positions = execute_plan(pl, octets, backend)
                samples.append(clock() - t0)
        occ_total += len(positions)

    if reference_verify:
        oracle_total = sum(len(_pykernels.naive_positions(p, octets)) for p in patterns)
    else:
        kern = get_kernels(backend)
        oracle_total = sum(len(kern.naive_positions(p, octets)) for p in patterns)
    if oracle_total != occ_total:
        raise BenchVerificationError(
            f"{variant.value} @ {text.label} m={m}: engine total {occ_total} != naive total {oracle_total}"
        )

    if variant in ASSIGNMENTS:
        q_hist = (
            sum(1 for pl in plans if pl.q == 1),
            sum(1 for pl in plans if pl.q == 2),
            sum(1 for pl in plans if pl.q >= 3),
        )
    else:
        q_hist = (0, 0, 0)

    scale = 1000.0
    return BenchRecord(
        algo=variant.value,
        text_id=text.label,
        sigma=text.sigma,
        m=m,
        mean_ms=float(np.mean(samples)) * scale,
        std_ms=float(np.std(samples)) * scale,
        occ_total=occ_total,
        q_hist=q_hist,
        prep_ms=float(np.mean(prep_samples)) * scale,
    )


def run_grid(
    config: BenchConfig, sources: list[TextSource], backend: str | None = None
) -> list[BenchRecord]:
    """All cells of the (text, m, algo) grid, strictly sequential."""
    records = []
    for src in sources:
        for m in config.lengths:
            patterns = sample_patterns(src, m, config.reps, derive_seed(config.seed, src.label, m))
            for variant in config.algos:
                records.append(
                    run_cell(
                        variant,
                        src,
                        patterns,
                        config.inner_iters,
                        include_prep=config.include_prep,
                        reference_verify=config.reference_verify,
                        backend=backend,
                    )
                )
    return records


def _fmt(value: float | int | None, timing: bool = False) -> str:
    if value is None:
        return "NA"
    if timing:
        return f"{value:.3f}"
    return str(value)


def format_record(record: BenchRecord) -> str:
    q1, q2, q3plus = record.q_hist
    return ",".join(
        [
            record.algo,
            record.text_id,
            str(record.sigma),
            str(record.m),
            _fmt(record.mean_ms, timing=True),
            _fmt(record.std_ms, timing=True),
            _fmt(record.occ_total),
            str(q1),
            str(q2),
            str(q3plus),
            _fmt(record.prep_ms, timing=True),
        ]
    )


def format_csv(
    records: list[BenchRecord],
    sources: list[TextSource],
    config: BenchConfig,
    backend: str | None = None,
) -> str:
    """Deterministic CSV: metadata comments, the fixed header, one row per cell.

    Every non-timing byte is a pure function of config + seed, so two runs
    with identical seeds differ only in the timing columns.
    """
    used = backend or backend_name()
    lines = [
        "# generator: ohash-bench",
        f"# machine: {platform.platform()} {platform.python_implementation()}-{platform.python_version()}",
        "# config: seed={} reps={} iters={} include_prep={} backend={}".format(
            config.seed, config.reps, config.inner_iters, int(config.include_prep), used
        ),
    ]
    for src in sources:
        seed = "-" if src.seed is None else str(src.seed)
        lines.append(
            f"# text: label={src.label} kind={src.kind} sigma={src.sigma} n={len(src.octets)} seed={seed}"
        )
    lines.append(CSV_HEADER)
    lines.extend(format_record(r) for r in records)
    return "\n".join(lines) + "\n"

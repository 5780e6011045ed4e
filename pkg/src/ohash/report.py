"""Turn benchmark CSV output into fixed-width tables and plot-data files.

Reports are a pure function of the CSV text: one table and one
whitespace-separated .dat file per text class, with the per-row fastest cell
marked. Regenerating a report never re-times anything.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .bench import CSV_HEADER


class CsvFormatError(ValueError):
    """Malformed benchmark CSV; carries the 1-based offending line number."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class CsvRow:
    algo: str
    text_id: str
    sigma: int
    m: int
    mean_ms: float | None
    lineno: int


@dataclass
class BenchCsv:
    rows: list[CsvRow]
    machine: str | None = None
    config: dict[str, str] = field(default_factory=dict)
    texts: dict[str, dict[str, str]] = field(default_factory=dict)


_EXPECTED_COLUMNS = CSV_HEADER.split(",")


def _parse_meta(line: str, csv: BenchCsv) -> None:
    body = line.lstrip("#").strip()
    if body.startswith("machine:"):
        csv.machine = body[len("machine:") :].strip()
    elif body.startswith("config:"):
        csv.config = dict(
            kv.split("=", 1) for kv in body[len("config:") :].split() if "=" in kv
        )
    elif body.startswith("text:"):
        info = dict(kv.split("=", 1) for kv in body[len("text:") :].split() if "=" in kv)
        if "label" in info:
            csv.texts[info["label"]] = info


def parse_bench_csv(text: str) -> BenchCsv:
    """Parse benchmark CSV text, validating the header and every row."""
    csv = BenchCsv(rows=[])
    header_seen = False
    seen_cells: dict[tuple[str, int, str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            _parse_meta(line, csv)
            continue
        if not header_seen:
            if line != CSV_HEADER:
                raise CsvFormatError(f"expected header {CSV_HEADER!r}", lineno)
            header_seen = True
            continue
        fields = line.split(",")
        if len(fields) != len(_EXPECTED_COLUMNS):
            raise CsvFormatError(
                f"expected {len(_EXPECTED_COLUMNS)} columns, got {len(fields)}", lineno
            )
        algo, text_id, sigma_s, m_s, mean_s = fields[0], fields[1], fields[2], fields[3], fields[4]
        try:
            sigma = int(sigma_s)
            m = int(m_s)
        except ValueError:
            raise CsvFormatError(f"non-integer sigma/m: {sigma_s!r}, {m_s!r}", lineno) from None
        if mean_s == "NA":
            mean = None
        else:
            try:
                mean = float(mean_s)
            except ValueError:
                raise CsvFormatError(f"bad mean_ms value {mean_s!r}", lineno) from None
        key = (text_id, m, algo)
        if key in seen_cells:
            raise CsvFormatError(
                f"duplicate cell {key} (first seen on line {seen_cells[key]})", lineno
            )
        seen_cells[key] = lineno
        csv.rows.append(CsvRow(algo, text_id, sigma, m, mean, lineno))
    if not header_seen:
        raise CsvFormatError("no header found (empty CSV?)", 1)
    if not csv.rows:
        raise CsvFormatError("no data rows", 1)
    return csv


def _class_grid(csv: BenchCsv, label: str) -> tuple[list[int], list[str], dict]:
    rows = [r for r in csv.rows if r.text_id == label]
    lengths = sorted({r.m for r in rows})
    algos: list[str] = []
    for r in rows:
        if r.algo not in algos:
            algos.append(r.algo)
    cells = {(r.m, r.algo): r.mean_ms for r in rows}
    return lengths, algos, cells


def class_labels(csv: BenchCsv) -> list[str]:
    labels: list[str] = []
    for r in csv.rows:
        if r.text_id not in labels:
            labels.append(r.text_id)
    return labels


def render_class_table(csv: BenchCsv, label: str) -> str:
    """Fixed-width table for one text class; per-row fastest cells carry ``*``."""
    lengths, algos, cells = _class_grid(csv, label)
    sigma = next(r.sigma for r in csv.rows if r.text_id == label)

    meta = csv.texts.get(label, {})
    parts = [f"text={label}", f"sigma={sigma}"]
    if "n" in meta:
        parts.append(f"n={meta['n']}")
    if "seed" in meta:
        parts.append(f"seed={meta['seed']}")
    if csv.machine:
        parts.append(f"machine={csv.machine}")
    title = "Results for " + " ".join(parts)

    width = max(10, max(len(a) for a in algos) + 2)
    mcol = 6
    lines = [title, "times in ms; per-row fastest marked *; - marks inapplicable cells", ""]
    lines.append("m".rjust(mcol) + "".join(a.rjust(width) for a in algos))
    for m in lengths:
        values = [cells.get((m, a)) for a in algos]
        present = [v for v in values if v is not None]
        best = min(present) if present else None
        row = str(m).rjust(mcol)
        for v in values:
            if v is None:
                cell = "-"
            else:
                cell = f"{v:.3f}*" if v == best else f"{v:.3f}"
            row += cell.rjust(width)
        lines.append(row)
    return "\n".join(lines) + "\n"


def render_class_dat(csv: BenchCsv, label: str) -> str:
    """Plot data: '#' header, then one line per m with one mean per algorithm."""
    lengths, algos, cells = _class_grid(csv, label)
    lines = ["# m " + " ".join(algos)]
    for m in lengths:
        row = [str(m)]
        for a in algos:
            v = cells.get((m, a))
            row.append("NA" if v is None else f"{v:.3f}")
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def _safe_name(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", label)


def write_report(csv_text: str, out_dir) -> list[str]:
    """Write <class>.txt and <class>.dat per text class; returns written paths."""
    import os

    csv = parse_bench_csv(csv_text)
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for label in class_labels(csv):
        base = _safe_name(label)
        table_path = os.path.join(out_dir, base + ".txt")
        with open(table_path, "w") as fh:
            fh.write(render_class_table(csv, label))
        dat_path = os.path.join(out_dir, base + ".dat")
        with open(dat_path, "w") as fh:
            fh.write(render_class_dat(csv, label))
        written.extend([table_path, dat_path])
    return written

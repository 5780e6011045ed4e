"""CSV parsing and report rendering."""

import os

import pytest

from ohash.bench import CSV_HEADER, BenchConfig, format_csv, generate_random_text, run_grid
from ohash.engines import Variant
from ohash.report import (
    CsvFormatError,
    class_labels,
    parse_bench_csv,
    render_class_dat,
    render_class_table,
    write_report,
)

SAMPLE = """\
# generator: ohash-bench
# machine: TestBox py3
# config: seed=5 reps=2 iters=1 include_prep=0 backend=py
# text: label=rand8 kind=random sigma=8 n=1024 seed=5
# text: label=king.txt kind=file sigma=61 n=500 seed=-
algo,text,sigma,m,mean_ms,std_ms,occ_total,q1,q2,q3plus,prep_ms
hash3,rand8,8,2,NA,NA,NA,0,0,0,NA
ohash1,rand8,8,2,0.500,0.010,9,1,1,0,0.002
ohash2,rand8,8,2,0.400,0.010,9,1,1,0,0.002
hash3,rand8,8,4,0.900,0.020,4,0,0,0,0.001
ohash1,rand8,8,4,0.700,0.020,4,0,1,1,0.002
ohash2,rand8,8,4,0.700,0.010,4,0,2,0,0.002
hash3,king.txt,61,4,0.300,0.005,2,0,0,0,0.001
ohash1,king.txt,61,4,0.200,0.004,2,2,0,0,0.002
ohash2,king.txt,61,4,0.250,0.004,2,2,0,0,0.002
"""


def test_parse_sample_rows_and_meta():
    csv = parse_bench_csv(SAMPLE)
    assert len(csv.rows) == 9
    assert csv.machine == "TestBox py3"
    assert csv.config["seed"] == "5" and csv.config["backend"] == "py"
    assert csv.texts["rand8"]["n"] == "1024"
    assert csv.texts["king.txt"]["sigma"] == "61"
    first = csv.rows[0]
    assert (first.algo, first.text_id, first.sigma, first.m) == ("hash3", "rand8", 8, 2)
    assert first.mean_ms is None
    assert csv.rows[1].mean_ms == pytest.approx(0.5)


def test_class_labels_keep_first_appearance_order():
    assert class_labels(parse_bench_csv(SAMPLE)) == ["rand8", "king.txt"]


def test_parse_rejects_bad_header():
    with pytest.raises(CsvFormatError) as err:
        parse_bench_csv("algo,text\nhash3,rand8\n")
    assert err.value.lineno == 1


def test_parse_rejects_missing_header():
    with pytest.raises(CsvFormatError):
        parse_bench_csv("# only comments\n")


def test_parse_rejects_no_rows():
    with pytest.raises(CsvFormatError):
        parse_bench_csv(CSV_HEADER + "\n")


def test_parse_rejects_short_row():
    bad = CSV_HEADER + "\nhash3,rand8,8,4,0.1\n"
    with pytest.raises(CsvFormatError) as err:
        parse_bench_csv(bad)
    assert err.value.lineno == 2
    assert "columns" in str(err.value)


def test_parse_rejects_bad_numbers():
    bad_sigma = CSV_HEADER + "\nhash3,rand8,eight,4,0.1,0.0,1,0,0,0,0.0\n"
    with pytest.raises(CsvFormatError):
        parse_bench_csv(bad_sigma)
    bad_mean = CSV_HEADER + "\nhash3,rand8,8,4,fast,0.0,1,0,0,0,0.0\n"
    with pytest.raises(CsvFormatError):
        parse_bench_csv(bad_mean)


def test_parse_rejects_duplicate_cell():
    row = "hash3,rand8,8,4,0.1,0.0,1,0,0,0,0.0"
    with pytest.raises(CsvFormatError) as err:
        parse_bench_csv(CSV_HEADER + "\n" + row + "\n" + row + "\n")
    assert "duplicate" in str(err.value)
    assert err.value.lineno == 3


def test_parse_error_message_carries_line_number():
    bad = "# c\n" + CSV_HEADER + "\nhash3,rand8,8,4,0.1,0.0,1,0,0,0,0.0\nbroken\n"
    with pytest.raises(CsvFormatError) as err:
        parse_bench_csv(bad)
    assert err.value.lineno == 4
    assert str(err.value).startswith("line 4:")


# --- rendering ------------------------------------------------------------


def test_render_table_marks_fastest():
    table = render_class_table(parse_bench_csv(SAMPLE), "rand8")
    lines = table.splitlines()
    assert lines[0].startswith("Results for text=rand8 sigma=8 n=1024 seed=5")
    assert "machine=TestBox py3" in lines[0]
    header = lines[3].split()
    assert header == ["m", "hash3", "ohash1", "ohash2"]
    m2 = lines[4].split()
    assert m2 == ["2", "-", "0.500", "0.400*"]
    m4 = lines[5].split()
    # 0.700 ties: both carry the star
    assert m4 == ["4", "0.900", "0.700*", "0.700*"]


def test_render_table_second_class():
    table = render_class_table(parse_bench_csv(SAMPLE), "king.txt")
    assert "text=king.txt sigma=61" in table.splitlines()[0]
    assert table.splitlines()[4].split() == ["4", "0.300", "0.200*", "0.250"]


def test_render_dat_layout():
    dat = render_class_dat(parse_bench_csv(SAMPLE), "rand8")
    lines = dat.splitlines()
    assert lines[0] == "# m hash3 ohash1 ohash2"
    assert lines[1] == "2 NA 0.500 0.400"
    assert lines[2] == "4 0.900 0.700 0.700"


def test_write_report_files(tmp_path):
    out = tmp_path / "report"
    written = write_report(SAMPLE, str(out))
    names = sorted(os.path.basename(p) for p in written)
    assert names == ["king.txt.dat", "king.txt.txt", "rand8.dat", "rand8.txt"]
    for p in written:
        assert os.path.getsize(p) > 0
    table = (out / "rand8.txt").read_text()
    assert "per-row fastest marked *" in table


def test_write_report_sanitizes_labels(tmp_path):
    csv_text = CSV_HEADER + "\nhash3,odd label/x,8,4,0.1,0.0,1,0,0,0,0.0\n"
    written = write_report(csv_text, str(tmp_path))
    assert sorted(os.path.basename(p) for p in written) == ["odd_label_x.dat", "odd_label_x.txt"]


# --- round trip with the benchmark runner ---------------------------------


def test_bench_csv_round_trips_through_parser():
    config = BenchConfig(lengths=(2, 6), reps=2, inner_iters=1, seed=17, algos=(Variant.HASH3, Variant.OHASH1, Variant.OHASH2))
    sources = [generate_random_text(8, 1024, 3), generate_random_text(64, 1024, 4)]
    records = run_grid(config, sources)
    text = format_csv(records, sources, config)

    csv = parse_bench_csv(text)
    assert len(csv.rows) == len(records)
    assert class_labels(csv) == ["rand8", "rand64"]
    assert csv.texts["rand8"]["kind"] == "random"
    # hash3 at m=2 is inapplicable and must come through as NA
    na = [r for r in csv.rows if r.algo == "hash3" and r.m == 2]
    assert all(r.mean_ms is None for r in na) and len(na) == 2
    for label in class_labels(csv):
        assert render_class_table(csv, label)
        assert render_class_dat(csv, label)

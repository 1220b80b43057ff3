"""
CLI tests
=========
Every subcommand through ``gradpix.main.main``: exit codes, outputs and
the trailing key=value line.
"""

import pytest

from gradpix.cli import build_parser
from gradpix.codec import read_container
from gradpix.image import generate_synthetic, load_png, save_png
from gradpix.main import main
from gradpix.schemas.predictor import PredictorId


def last_kv(output: str) -> dict:
    line = output.strip().splitlines()[-1]
    return dict(pair.split("=", 1) for pair in line.split())


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("GRADPIX_WORKERS", "GRADPIX_GED_THRESHOLD", "GRADPIX_DEFAULT_PREDICTORS"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def source_png(tmp_path):
    path = tmp_path / "src.png"
    save_png(generate_synthetic("flat_edges", 20, 14, seed=5, channels=3), path)
    return path


def test_encode_decode_verify(tmp_path, source_png, capsys):
    gpx = tmp_path / "src.gpx"
    assert main(["encode", str(source_png), str(gpx), "--predictor", "gap"]) == 0
    kv = last_kv(capsys.readouterr().out)
    assert kv["status"] == "ok" and kv["predictor"] == "gap"
    assert int(kv["compressed_size_bytes"]) == gpx.stat().st_size
    assert int(kv["original_size_bytes"]) == source_png.stat().st_size
    assert read_container(gpx).header.predictor_id is PredictorId.GAP

    out_png = tmp_path / "out.png"
    assert main(["decode", str(gpx), str(out_png)]) == 0
    assert last_kv(capsys.readouterr().out)["status"] == "ok"
    assert load_png(out_png) == load_png(source_png)

    assert main(["verify", str(gpx), str(source_png)]) == 0
    out = capsys.readouterr().out
    assert "MATCH" in out.splitlines()
    assert last_kv(out)["result"] == "match"

    other = tmp_path / "other.png"
    save_png(generate_synthetic("flat_edges", 20, 14, seed=6, channels=3), other)
    assert main(["verify", str(gpx), str(other)]) == 1
    assert "MISMATCH" in capsys.readouterr().out


def test_encode_ged_threshold(tmp_path, source_png):
    gpx = tmp_path / "ged.gpx"
    assert main(["encode", str(source_png), str(gpx), "--predictor", "ged", "--ged-threshold", "8"]) == 0
    header = read_container(gpx).header
    assert header.predictor_id is PredictorId.GED
    assert header.ged_threshold == 8


def test_usage_errors(tmp_path, source_png):
    assert main(["encode", str(source_png), str(tmp_path / "x.gpx"), "--predictor", "calic"]) == 2
    assert main([]) == 2
    assert main(["encode", str(source_png), str(tmp_path / "x.gpx"), "--ged-threshold", "40000"]) == 2
    assert main(["noise", "--in", str(tmp_path), "--out", str(tmp_path / "n")]) == 2
    assert main(["sweep", "--work", str(tmp_path / "w")]) == 2
    assert not (tmp_path / "x.gpx").exists()


def test_help_documents_defaults(capsys):
    assert main(["bench", "--help"]) == 0
    out = " ".join(capsys.readouterr().out.split())
    assert "--workers" in out and "(default: 10)" in out
    assert "(default: 8)" in out


def test_runtime_errors_exit_1(tmp_path, source_png, capsys):
    gpx = tmp_path / "src.gpx"
    main(["encode", str(source_png), str(gpx)])
    data = gpx.read_bytes()
    capsys.readouterr()

    truncated = tmp_path / "truncated.gpx"
    truncated.write_bytes(data[:-1])
    assert main(["decode", str(truncated), str(tmp_path / "t.png")]) == 1
    captured = capsys.readouterr()
    assert "truncated payload" in captured.err
    assert last_kv(captured.out)["status"] == "error"

    corrupted = tmp_path / "corrupted.gpx"
    corrupted.write_bytes(data[:18] + bytes([data[18] ^ 0xFF]) + data[19:])
    assert main(["decode", str(corrupted), str(tmp_path / "c.png")]) == 1
    assert "checksum" in capsys.readouterr().err

    assert main(["encode", str(tmp_path / "missing.png"), str(tmp_path / "m.gpx")]) == 1


def test_workers_from_environment(monkeypatch):
    monkeypatch.setenv("GRADPIX_WORKERS", "3")
    base = ["bench", "--in", "d", "--out", "o", "--csv", "r.csv"]
    assert build_parser().parse_args(base).workers == 3
    assert build_parser().parse_args(base + ["--workers", "2"]).workers == 2


def test_bench_and_plot(small_corpus, tmp_path, capsys):
    csv_path = tmp_path / "r.csv"
    code = main([
        "bench", "--in", str(small_corpus), "--out", str(tmp_path / "o"), "--csv", str(csv_path),
        "--workers", "1", "--predictor", "med", "gap",
    ])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [last_kv(line)["predictor"] for line in lines[:-1]] == ["gap", "med"]
    kv = last_kv(lines[-1])
    assert kv["status"] == "ok" and kv["rows"] == "8" and kv["failed"] == "0"
    assert len(csv_path.read_text().splitlines()) == 1 + 8

    svg = tmp_path / "ratio.svg"
    assert main(["plot", str(csv_path), str(svg), "--metric", "time_seconds"]) == 0
    assert svg.exists()
    assert last_kv(capsys.readouterr().out)["groups"] == "2"

    assert main(["plot", str(csv_path), str(tmp_path / "x.svg"), "--metric", "speed"]) == 1
    assert "unknown metric" in capsys.readouterr().err


def test_generate_and_noise(tmp_path, capsys):
    images = tmp_path / "gen"
    assert main([
        "generate", "--out", str(images), "--kind", "ramp", "--count", "2",
        "--width", "16", "--height", "4", "--bit-depth", "16",
    ]) == 0
    assert last_kv(capsys.readouterr().out)["images"] == "2"
    assert load_png(images / "ramp_0001.png").bit_depth == 16

    for name in ("n1", "n2"):
        assert main([
            "noise", "--in", str(images), "--out", str(tmp_path / name), "--variance", "0.1", "--seed", "1",
        ]) == 0
    assert load_png(tmp_path / "n1" / "ramp_0000.png") == load_png(tmp_path / "n2" / "ramp_0000.png")
    for bad in ("-0.5", "inf", "abc"):
        assert main(["noise", "--in", str(images), "--out", str(tmp_path / "n3"), "--variance", bad]) == 2
    assert main(["noise", "--in", str(images), "--out", str(tmp_path / "n4"), "--variance", "1.5"]) == 0


def test_sweep_commands(small_corpus, tmp_path, capsys):
    assert main([
        "sweep", "--in", str(small_corpus), "--work", str(tmp_path / "w"),
        "--variance", "0", "0.1", "--workers", "1", "--predictor", "gap",
    ]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [last_kv(line)["variance"] for line in lines[:-1]] == ["0.000000", "0.100000"]
    assert "monotonic" in last_kv(lines[-1])

    assert main([
        "sweep", "--edges", "--work", str(tmp_path / "e"), "--count", "2", "--size", "16",
        "--workers", "1",
    ]) == 0
    kv = last_kv(capsys.readouterr().out)
    assert kv["status"] == "ok" and kv["images"] == "2"


def test_unwritable_outputs_exit_1(small_corpus, tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("a regular file, not a directory")
    bench = ["bench", "--in", str(small_corpus), "--workers", "1", "--predictor", "gap"]

    code = main(bench + ["--out", str(blocker / "o"), "--csv", str(tmp_path / "r.csv")])
    assert code == 1
    captured = capsys.readouterr()
    assert "cannot create output directory" in captured.err
    assert last_kv(captured.out)["status"] == "error"

    code = main(bench + ["--out", str(tmp_path / "o"), "--csv", str(blocker / "r.csv")])
    assert code == 1
    captured = capsys.readouterr()
    assert "cannot write CSV" in captured.err
    assert last_kv(captured.out)["status"] == "error"

    assert main(["generate", "--out", str(blocker / "g"), "--kind", "ramp", "--count", "1"]) == 1
    assert "cannot create output directory" in capsys.readouterr().err
    assert main(["noise", "--in", str(small_corpus), "--out", str(blocker / "n"), "--variance", "0.1"]) == 1
    assert "cannot create output directory" in capsys.readouterr().err


@pytest.mark.parametrize(
    "name,value", [("GRADPIX_WORKERS", "abc"), ("GRADPIX_DEFAULT_PREDICTORS", '["calic"]')]
)
def test_malformed_environment_exits_2(monkeypatch, tmp_path, capsys, name, value):
    monkeypatch.setenv(name, value)
    out = tmp_path / "o"
    code = main(["bench", "--in", str(tmp_path), "--out", str(out), "--csv", str(tmp_path / "r.csv")])
    assert code == 2
    captured = capsys.readouterr()
    assert captured.err.startswith("error: invalid environment setting")
    assert name in captured.err
    assert "Traceback" not in captured.err
    assert last_kv(captured.out)["status"] == "error"
    assert not out.exists()


@pytest.mark.parametrize("extra", [["--in", "somewhere"], ["--variance", "0.1"]])
def test_sweep_edges_rejects_noise_options(tmp_path, capsys, extra):
    work = tmp_path / "e"
    assert main(["sweep", "--edges", "--work", str(work), "--count", "1"] + extra) == 2
    assert "cannot be combined with --edges" in capsys.readouterr().err
    assert not work.exists()

from __future__ import annotations

import os

import numpy as np
import pytest

from rotoblur import netpbm
from rotoblur.blur import ImageBuffer
from rotoblur.traceio import TRACE_HEADER, parse_sigma_series

from conftest import DATA_DIR, run_cli


def write(path, text):
    with open(path, "w", newline="") as fh:
        fh.write(text)
    return str(path)


@pytest.fixture
def activation_trace():
    return os.path.join(DATA_DIR, "trace_activation.csv")


def test_replay_writes_parseable_sigma_csv(tmp_path, activation_trace):
    out = str(tmp_path / "sigma.csv")
    assert run_cli(["replay", "--trace", activation_trace, "--out", out]) == 0
    series = parse_sigma_series(open(out).read())
    assert len(series.outputs) == 269


def test_replay_is_byte_deterministic(tmp_path, activation_trace):
    out1, out2 = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
    assert run_cli(["replay", "--trace", activation_trace, "--out", out1]) == 0
    assert run_cli(["replay", "--trace", activation_trace, "--out", out2]) == 0
    assert open(out1, "rb").read() == open(out2, "rb").read()


def test_replay_non_monotonic_trace_exits_1_and_cites_line(tmp_path, capsys):
    trace = write(tmp_path / "bad.csv", TRACE_HEADER + "\n10000,0,0,0,0,0\n10000,0,0,0,0,0\n")
    out = str(tmp_path / "sigma.csv")
    assert run_cli(["replay", "--trace", trace, "--out", out]) == 1
    assert "line 3" in capsys.readouterr().err


def test_replay_missing_file_exits_2(tmp_path):
    assert run_cli(["replay", "--trace", str(tmp_path / "nope.csv"), "--out", str(tmp_path / "o.csv")]) == 2


def test_replay_config_file_and_env_fallback(tmp_path, activation_trace, monkeypatch):
    config_path = write(tmp_path / "cfg.txt", "a_min_deg_s2 = 99999\n")
    out_flag = str(tmp_path / "flag.csv")
    assert run_cli(["replay", "--trace", activation_trace, "--config", config_path, "--out", out_flag]) == 0
    flag_series = parse_sigma_series(open(out_flag).read())
    assert all(o.sigma_px == 0.0 for o in flag_series.outputs)  # threshold too high to ever blur

    out_env = str(tmp_path / "env.csv")
    monkeypatch.setenv("ROTOBLUR_CONFIG", config_path)
    assert run_cli(["replay", "--trace", activation_trace, "--out", out_env]) == 0
    assert open(out_env).read() == open(out_flag).read()


def test_replay_unknown_config_key_exits_1(tmp_path, activation_trace, capsys):
    config_path = write(tmp_path / "cfg.txt", "sigma_maximum = 4\n")
    assert run_cli(["replay", "--trace", activation_trace, "--config", config_path, "--out", str(tmp_path / "o.csv")]) == 1
    assert "unknown config key" in capsys.readouterr().err


def test_blur_image_sigma_zero_is_byte_identical(tmp_path):
    src = os.path.join(DATA_DIR, "impulse.pgm")
    out = str(tmp_path / "out.pgm")
    assert run_cli(["blur-image", "--in", src, "--sigma", "0", "--out", out]) == 0
    assert open(out, "rb").read() == open(src, "rb").read()


def test_blur_image_matches_2d_reference_golden(tmp_path):
    src = os.path.join(DATA_DIR, "impulse.pgm")
    golden = os.path.join(DATA_DIR, "impulse_sigma2_golden.pgm")
    out = str(tmp_path / "out.pgm")
    assert run_cli(["blur-image", "--in", src, "--sigma", "2", "--out", out]) == 0
    assert open(out, "rb").read() == open(golden, "rb").read()


def test_blur_image_negative_sigma_exits_2(tmp_path):
    src = os.path.join(DATA_DIR, "impulse.pgm")
    assert run_cli(["blur-image", "--in", src, "--sigma", "-1", "--out", str(tmp_path / "o.pgm")]) == 2


def test_kernel_sigma_zero_prints_one(capsys):
    assert run_cli(["kernel", "--sigma", "0"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_kernel_sigma_one_prints_seven_weights(capsys):
    assert run_cli(["kernel", "--sigma", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    weights = [float(v) for v in lines]
    assert abs(sum(weights) - 1.0) <= 1e-12
    assert weights == weights[::-1]


def test_kernel_non_numeric_sigma_exits_2():
    assert run_cli(["kernel", "--sigma", "wide"]) == 2


def test_kernel_verify_reports_ok(capsys):
    assert run_cli(["kernel", "--sigma", "1.5", "--verify"]) == 0
    assert "verify: rms" in capsys.readouterr().out


def test_ssq_score_zero_row(tmp_path, capsys):
    header = "participant_id,session," + ",".join(f"item_{i}" for i in range(1, 17))
    src = write(tmp_path / "ssq.csv", header + "\np1,NRB," + ",".join("0" * 1 for _ in range(16)) + "\n")
    out = str(tmp_path / "scores.csv")
    assert run_cli(["ssq", "score", "--in", src, "--out", out]) == 0
    assert open(out).read().splitlines()[1].endswith(",0.0")


def test_ssq_score_item_out_of_range_exits_1(tmp_path, capsys):
    header = "participant_id,session," + ",".join(f"item_{i}" for i in range(1, 17))
    src = write(tmp_path / "ssq.csv", header + "\np1,NRB,4," + ",".join("0" for _ in range(15)) + "\n")
    assert run_cli(["ssq", "score", "--in", src, "--out", str(tmp_path / "o.csv")]) == 1
    assert "item_1" in capsys.readouterr().err


def test_ssq_prescreen_default_cutoff(tmp_path, capsys):
    header = "participant_id,session," + ",".join(f"item_{i}" for i in range(1, 17))
    rows = [
        "ok,NRB," + ",".join(["0"] * 16),              # ts 0
        "edge,NRB," + ",".join(["1", "1"] + ["0"] * 14),  # general discomfort+fatigue: ts 11.22
    ]
    src = write(tmp_path / "ssq.csv", header + "\n" + "\n".join(rows) + "\n")
    assert run_cli(["ssq", "prescreen", "--in", src]) == 0
    out_lines = capsys.readouterr().out.splitlines()
    assert out_lines[1].endswith("accept")
    assert out_lines[2].endswith("reject")


def test_ssq_prescreen_boundary_accepts_cutoff_value(tmp_path, capsys):
    header = "participant_id,session," + ",".join(f"item_{i}" for i in range(1, 17))
    # one fatigue point: raw sum 1 in O only -> ts = 3.74
    src = write(tmp_path / "ssq.csv", header + "\np1,NRB,0,1," + ",".join("0" for _ in range(14)) + "\n")
    assert run_cli(["ssq", "prescreen", "--in", src, "--cutoff", "3.74"]) == 0
    assert capsys.readouterr().out.splitlines()[1].endswith("accept")


def _write_pairs_834(tmp_path):
    rows = ["participant_id,ts_nrb,ts_rb"]
    rows += [f"d{i},{60 + i},{30 + i}" for i in range(8)]
    rows += [f"u{i},25,25" for i in range(3)]
    rows += [f"i{i},20,{35 + i}" for i in range(4)]
    return write(tmp_path / "pairs.csv", "\n".join(rows) + "\n")


def _write_fms(tmp_path):
    rows = ["participant_id,session,t_min,rating"]
    for session in ("NRB", "RB"):
        for t in (2, 4, 6, 8, 10):
            rows.append(f"p1,{session},{t},{min(6, t // 2)}")
    return write(tmp_path / "fms.csv", "\n".join(rows) + "\n")


def test_analyze_reports_partition_counts(tmp_path):
    out = str(tmp_path / "report.txt")
    assert run_cli(["analyze", "--pairs", _write_pairs_834(tmp_path), "--fms", _write_fms(tmp_path), "--out", out]) == 0
    report = open(out).read()
    assert "declined = 8" in report
    assert "unchanged = 3" in report
    assert "increased = 4" in report
    assert "[wilcoxon]" in report


def test_analyze_all_identical_pairs_notes_undefined_test(tmp_path):
    pairs = write(tmp_path / "pairs.csv", "participant_id,ts_nrb,ts_rb\np1,5,5\np2,6,6\n")
    out = str(tmp_path / "report.txt")
    assert run_cli(["analyze", "--pairs", pairs, "--fms", _write_fms(tmp_path), "--out", out]) == 0
    assert "all paired differences are zero" in open(out).read()


def test_analyze_missing_file_exits_2(tmp_path):
    assert run_cli(["analyze", "--pairs", str(tmp_path / "nope.csv"), "--fms", str(tmp_path / "nope2.csv"), "--out", str(tmp_path / "r.txt")]) == 2


def test_unknown_subcommand_exits_2():
    assert run_cli(["frobnicate"]) == 2

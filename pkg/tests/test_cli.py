"""Command-line front end: formats, exit codes, determinism."""

import io
import json

import pytest

from agpaths.cli import main


def run_cli(*argv, env=None, monkeypatch=None, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_qbinom_text(capsys):
    code, out, err = run_cli(
        "compute", "qbinom", "--top", "4", "--bottom", "2", capsys=capsys
    )
    assert code == 0
    assert out.strip() == "1 + q + 2q^2 + q^3 + q^4"


def test_compute_negative_exponents_render_explicitly(capsys):
    code, out, _ = run_cli(
        "compute", "qsupernom", "--lvec=-1,1", "--two-a", "3",
        "--format", "text", capsys=capsys,
    )
    assert code == 0
    assert out.strip() == "q^-1"


def test_compute_series_formats_agree(capsys):
    code, text_out, _ = run_cli(
        "compute", "product", "--nu", "1", "--s", "2", "--Q", "6", capsys=capsys
    )
    assert code == 0 and text_out.strip().endswith("+ O(q^7)")
    code, json_out, _ = run_cli(
        "compute", "product", "--nu", "1", "--s", "2", "--Q", "6",
        "--format", "json", capsys=capsys,
    )
    assert code == 0
    payload = json.loads(json_out)
    assert payload["coeffs"] == [1, 1, 1, 1, 2, 2, 3]


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run_cli(
        "verify", "FQK-1.23", "--nu", "2", "--s", "1", "--L", "8", capsys=capsys
    )
    assert code == 0
    assert out.startswith("pass")


def test_verify_mismatch_exit_one(capsys):
    # an intentionally undersummed run must be reported as a failure
    code, out, _ = run_cli(
        "verify", "Variant1-1.32", "--nu", "1", "--M", "0", "--Q", "20",
        "--n-max", "1", capsys=capsys,
    )
    assert code == 1
    assert "FAIL" in out and "first mismatch" in out


def test_unknown_identity_lists_valid_names(capsys):
    code, _, err = run_cli("verify", "Nope-0.0", "--nu", "1", capsys=capsys)
    assert code == 2
    assert "Conjecture-5.7" in err and "AG-1.1" in err


def test_missing_required_flag_is_usage_error(capsys):
    code, _, err = run_cli("verify", "AG-1.1", "--nu", "1", capsys=capsys)
    assert code == 2
    assert "--s" in err or "--Q" in err


def test_json_report_round_trips_byte_identically(capsys):
    code, out, _ = run_cli(
        "verify", "Warnaar-2.22", "--nu", "2", "--s", "1", "--b", "0", "--L", "5",
        "--format", "json", capsys=capsys,
    )
    assert code == 0
    reparsed = json.dumps(json.loads(out), sort_keys=True, separators=(",", ":"))
    assert out == reparsed + "\n"


def test_text_and_json_verdicts_agree(capsys):
    args = ["verify", "Variant2-4.9", "--nu", "2", "--s", "0", "--M", "1", "--Q", "15"]
    code_t, out_t, _ = run_cli(*args, capsys=capsys)
    code_j, out_j, _ = run_cli(*args, "--format", "json", capsys=capsys)
    assert code_t == code_j == 0
    assert out_t.startswith("pass") and json.loads(out_j)["status"] == "pass"


def test_sweep_is_deterministic_and_sorted(capsys, monkeypatch):
    args = [
        "sweep", "Variant2-4.9", "--nu", "1", "--s", "0..1", "--M", "0..2",
        "--Q", "12", "--format", "json",
    ]
    monkeypatch.setenv("QAG_THREADS", "1")
    code1, out1, _ = run_cli(*args, capsys=capsys)
    monkeypatch.setenv("QAG_THREADS", "4")
    code2, out2, _ = run_cli(*args, capsys=capsys)
    assert code1 == code2 == 0
    strip = lambda txt: [
        {k: v for k, v in r.items() if k != "runtime_ms"} for r in json.loads(txt)
    ]
    assert strip(out1) == strip(out2)
    params = [json.dumps(r["params"], sort_keys=True) for r in strip(out1)]
    assert params == sorted(params)
    assert len(params) == 6


def test_sweep_mvec_box(capsys):
    code, out, _ = run_cli(
        "sweep", "Conjecture-5.7", "--nu", "2", "--mvec-box", "1", "--Q", "10",
        "--format", "csv", capsys=capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("case,params,status")
    assert len(lines) == 1 + 4  # header + the four tuples in the box


def test_invalid_thread_count_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("QAG_THREADS", "zero")
    code, _, err = run_cli(
        "sweep", "AG-1.1", "--nu", "1", "--s", "0..1", "--Q", "10", capsys=capsys
    )
    assert code == 2
    assert "QAG_THREADS" in err


def test_bad_parameter_is_usage_error(capsys):
    code, _, err = run_cli(
        "verify", "Variant2-4.9", "--nu", "2", "--s", "7", "--M", "1", "--Q", "10",
        capsys=capsys,
    )
    assert code == 2


def test_csv_verify_layout(capsys):
    code, out, _ = run_cli(
        "verify", "B2-4.10", "--nu", "1", "--s", "1", "--Q", "15",
        "--format", "csv", capsys=capsys,
    )
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "case,params,status,first_mismatch_order,lhs_head,rhs_head,runtime_ms"
    assert row.startswith("B2-4.10,")

import json
import subprocess
import sys

import pytest

from bpfigs import FigureSpec, render
from bpfigs.cli import main

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_error_rate_subcommand(fixtures, tmp_path, capsys):
    out = tmp_path / "fig.png"
    code, stdout, _ = run_cli(capsys, "error-rate",
                              str(fixtures / "sweep_two_configs.csv"),
                              "--out", str(out))
    assert code == 0
    assert f"wrote {out}" in stdout
    assert out.read_bytes().startswith(PNG_MAGIC)


def test_cli_matches_library_render(fixtures, tmp_path, capsys):
    cli_out = tmp_path / "cli.png"
    api_out = tmp_path / "api.png"
    code, _, _ = run_cli(capsys, "trace",
                         str(fixtures / "trace_five_qubit.csv"),
                         "--out", str(cli_out))
    assert code == 0
    render(FigureSpec(csvs=(str(fixtures / "trace_five_qubit.csv"),),
                      kind="trace", out=str(api_out)))
    assert cli_out.read_bytes() == api_out.read_bytes()


def test_cli_byte_stable_across_processes(fixtures, tmp_path, capsys):
    """A fresh interpreter produces the same bytes as this one."""
    here = tmp_path / "here.png"
    fresh = tmp_path / "fresh.png"
    code, _, _ = run_cli(capsys, "avg-iter",
                         str(fixtures / "sweep_256_32.csv"),
                         "--out", str(here))
    assert code == 0
    proc = subprocess.run(
        [sys.executable, "-m", "bpfigs.cli", "avg-iter",
         str(fixtures / "sweep_256_32.csv"), "--out", str(fresh)],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert here.read_bytes() == fresh.read_bytes()


def test_render_spec_file(fixtures, tmp_path, capsys):
    out = tmp_path / "spec.png"
    spec_path = tmp_path / "fig.json"
    spec_path.write_text(json.dumps({
        "csvs": [str(fixtures / "sweep_256_32.csv")],
        "kind": "error_rate",
        "out": str(out),
        "title": "bicycle sweep",
    }))
    code, stdout, _ = run_cli(capsys, "render", str(spec_path))
    assert code == 0
    assert out.read_bytes().startswith(PNG_MAGIC)


def test_render_spec_file_missing(tmp_path, capsys):
    code, _, err = run_cli(capsys, "render", str(tmp_path / "no.json"))
    assert code == 2
    assert "not found" in err


def test_render_spec_file_invalid(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"csvs": "a.csv", "kind": "pie", "out": "x.png"}')
    code, _, err = run_cli(capsys, "render", str(p))
    assert code == 1
    assert "kind" in err


def test_missing_out_flag_is_usage_error(fixtures, capsys):
    code, _, err = run_cli(capsys, "error-rate",
                           str(fixtures / "sweep_single_point.csv"))
    assert code == 1
    assert "--out" in err


def test_unknown_command(capsys):
    assert run_cli(capsys, "histogram")[0] == 1


def test_missing_csv_is_data_error(tmp_path, capsys):
    code, _, err = run_cli(capsys, "error-rate", str(tmp_path / "no.csv"),
                           "--out", str(tmp_path / "f.png"))
    assert code == 2
    assert "not found" in err


def test_wrong_schema_is_data_error(fixtures, tmp_path, capsys):
    # feeding a trace CSV to a sweep figure trips the column check
    code, _, err = run_cli(capsys, "avg-iter",
                           str(fixtures / "trace_five_qubit.csv"),
                           "--out", str(tmp_path / "f.png"))
    assert code == 2
    assert "missing columns" in err


def test_group_keys_flag(fixtures, tmp_path, capsys):
    out = tmp_path / "g.png"
    code, _, _ = run_cli(capsys, "error-rate",
                         str(fixtures / "sweep_two_configs.csv"),
                         "--out", str(out), "--group-keys", "schedule",
                         "--yscale", "linear")
    assert code == 0
    assert out.exists()

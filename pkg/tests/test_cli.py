import json
import subprocess
import sys

import pytest

from lattice_lab import parse_basis
from lattice_lab.cli import main

PKG = [sys.executable, "-m", "lattice_lab"]


def run_cli(args, stdin_text=None):
    return subprocess.run(
        PKG + args, input=stdin_text, capture_output=True, text=True, timeout=300
    )


def test_gen_writes_parseable_basis(capsys):
    assert main(["gen", "--family", "uniform", "--n", "4", "--seed", "42"]) == 0
    out = capsys.readouterr().out
    basis = parse_basis(out)
    assert basis.n == 4


def test_gen_deterministic(capsys):
    main(["gen", "--family", "uniform", "--n", "4", "--seed", "42"])
    first = capsys.readouterr().out
    main(["gen", "--family", "uniform", "--n", "4", "--seed", "42"])
    assert capsys.readouterr().out == first


@pytest.mark.parametrize("family", ["uniform", "qary", "circulant"])
def test_pipe_composability(family):
    gen = run_cli(["gen", "--family", family, "--n", "8", "--seed", "1"])
    assert gen.returncode == 0, gen.stderr
    red = run_cli(["reduce", "--algo", "lll"], stdin_text=gen.stdout)
    assert red.returncode == 0, red.stderr
    report = json.loads(red.stderr)
    assert report["status"] == "ok"
    parse_basis(red.stdout)  # reduced basis is valid text
    svp = run_cli(["svp", "--budget", "60"], stdin_text=red.stdout)
    assert svp.returncode == 0, svp.stderr
    result = json.loads(svp.stdout)
    assert result["status"] == "ok" and result["norm_sq"] > 0


def test_svp_timeout_is_exit_zero(tmp_path):
    gen = run_cli(["gen", "--family", "uniform", "--n", "30", "--seed", "1"])
    svp = run_cli(["svp", "--budget", "1"], stdin_text=gen.stdout)
    assert svp.returncode == 0
    assert json.loads(svp.stdout)["status"] == "timeout"


def test_reduce_bkz_flags(capsys, monkeypatch, tmp_path):
    gen = run_cli(["gen", "--family", "uniform", "--n", "5", "--seed", "3", "--bits", "10"])
    red = run_cli(["reduce", "--algo", "bkz", "--beta", "3", "--delta", "3/4"], stdin_text=gen.stdout)
    assert red.returncode == 0
    assert json.loads(red.stderr)["status"] == "ok"


def test_domain_error_exit_1(capsys):
    code = main(["gen", "--family", "qary", "--n", "5", "--seed", "1"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_parse_error_exit_1():
    res = run_cli(["reduce", "--algo", "lll"], stdin_text="2 2\n1 0\n")
    assert res.returncode == 1
    assert "line" in res.stderr


def test_usage_error_exit_2():
    res = run_cli(["reduce", "--algo", "sieve"], stdin_text="")
    assert res.returncode == 2
    res = run_cli(["frobnicate"])
    assert res.returncode == 2


def test_profile_show_and_export(capsys):
    assert main(["profile", "show", "RSA-2048"]) == 0
    shown = json.loads(capsys.readouterr().out)
    assert shown[0]["quantum"] == "no"
    assert main(["profile", "export"]) == 0
    exported = json.loads(capsys.readouterr().out)
    assert [p["scheme"] for p in exported] == ["ML-KEM-768", "RSA-2048"]


def test_profile_unknown_exit_1(capsys):
    assert main(["profile", "show", "FooCipher"]) == 1


def test_lwe_cli_roundtrip(tmp_path):
    key = str(tmp_path / "key.json")
    ct = str(tmp_path / "ct.json")
    assert run_cli(["lwe", "keygen", "--params", "4,97,8,1", "--seed", "0", "--key", key]).returncode == 0
    assert run_cli(["lwe", "encrypt", "--key", key, "--bit", "1", "--seed", "5", "--ct", ct]).returncode == 0
    dec = run_cli(["lwe", "decrypt", "--key", key, "--ct", ct])
    assert dec.returncode == 0
    assert json.loads(dec.stdout) == {"bit": 1}
    atk = run_cli(["lwe", "attack", "--key", key, "--budget", "60"])
    assert atk.returncode == 0
    assert json.loads(atk.stdout)["success"] is True


def test_bench_and_validate_cli(tmp_path):
    out = str(tmp_path / "r.csv")
    res = run_cli(
        ["bench", "--families", "uniform", "--dims", "5,6", "--seeds", "1",
         "--algos", "lll,ekz", "--budget", "60", "--out", out, "--json", "--workers", "1"]
    )
    assert res.returncode == 0, res.stderr
    summary = json.loads(res.stdout)
    assert summary["cases"] == 4 and summary["ok"] == 4
    from lattice_lab import read_csv

    assert len(read_csv(out)) == 4
    val = run_cli(
        ["validate", "--family", "uniform", "--dims", "4,6", "--seeds", "1",
         "--budget", "60", "--workers", "1"]
    )
    assert val.returncode == 0
    assert json.loads(val.stdout)["threshold_n"] == "none within range"

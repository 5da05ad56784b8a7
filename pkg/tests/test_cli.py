import json
import re

import pytest

from latcover.cli import EX_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_unknown_flag_exits_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--bogus"])
    assert exc.value.code == EX_USAGE


def test_unknown_subcommand_exits_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == EX_USAGE


def test_verify_modular_single_modulus(capsys):
    code, out, _ = run(capsys, "verify-modular", "--modulus", "5")
    assert code == 0
    assert "PASS pair-classes mod 5" in out


def test_verify_modular_json_deterministic(capsys):
    code, out1, _ = run(capsys, "--format", "json", "verify-modular", "--modulus", "3")
    assert code == 0
    code, out2, _ = run(capsys, "--format", "json", "verify-modular", "--modulus", "3")
    assert code == 0
    strip = lambda s: re.sub(r'"timestamp": "[^"]*"', '"timestamp": ""', s)
    assert strip(out1) == strip(out2)
    payload = json.loads(out1)
    assert payload["ok"] is True
    assert payload["command"] == "verify-modular"


def test_enumerate_and_verify_catalog(capsys, tmp_path):
    out_file = tmp_path / "catalog.txt"
    code, out, _ = run(
        capsys, "enumerate", "--raw-count", "--out", str(out_file)
    )
    assert code == 0
    assert "6131" in out
    assert "54" in out
    assert out_file.exists()

    code, out, _ = run(capsys, "verify-catalog", "--in", str(out_file))
    assert code == 0
    assert "FAIL" not in out


def test_verify_catalog_rejects_corrupt_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("len=3 | zzz\n")
    code, _, err = run(capsys, "verify-catalog", "--in", str(bad))
    assert code == 2
    assert "line 1" in err


def test_form_check(capsys):
    code, out, _ = run(
        capsys, "form", "check", "--coeffs", "0,1,1,0",
        "--conj", "1,0;0,1", "--variant", "d3",
    )
    assert code == 0
    assert "extraordinary: True" in out


def test_form_check_negative(capsys):
    code, out, _ = run(
        capsys, "form", "check", "--coeffs", "0,1,3,0",
        "--conj", "1/3,0;0,1", "--variant", "d3",
    )
    assert code == 0
    assert "extraordinary: False" in out


def test_form_compare(capsys):
    code, out, _ = run(
        capsys, "form", "compare", "--f", "0,1,1,0", "--g", "0,4,2,0",
        "--n", "6", "--m", "36",
    )
    assert code == 0
    assert "PASS" in out


def test_form_compare_json(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "form", "compare",
        "--f", "0,1,1,0", "--g", "0,4,2,0", "--n", "4", "--m", "24",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["unmatched_f"] == [] and payload["unmatched_g"] == []


def test_threads_env_override(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("LATTICE_COVER_THREADS", "2")
    out_file = tmp_path / "cat2.txt"
    code, out, _ = run(capsys, "enumerate", "--out", str(out_file))
    assert code == 0
    assert "minimal coverings: 54" in out

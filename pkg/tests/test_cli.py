"""End-to-end CLI behavior: subcommands, exit codes, JSON determinism."""

import json
import os
import subprocess
import sys

import pytest

from fsing.cli import main

RING_ARGS = [
    "--p", "7",
    "--vars", "x,y,z",
    "--weights", "15,10,6",
    "--relations", "x^2 + y^3 + z^5",
]


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ainv(capsys):
    code, out, _ = run_cli(["ainv", *RING_ARGS, "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"][0]["verdict"] == -1


def test_member(capsys):
    code, out, _ = run_cli(
        ["member", *RING_ARGS, "--element", "x^2", "--ideal", "y^2", "z^2", "--json"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["checks"][0]["verdict"] is True


def test_fclosure(capsys):
    args = [
        "fclosure",
        "--p", "2",
        "--vars", "x,y,z",
        "--weights", "15,10,6",
        "--relations", "x^2 + y^3 + z^5",
        "--element", "x",
        "--ideal", "y", "z",
        "--bound", "2",
        "--json",
    ]
    code, out, _ = run_cli(args, capsys)
    assert code == 0
    check = json.loads(out)["checks"][0]
    assert check["verdict"] == "member-at-level-1"
    assert check["witness"]["q"] == 2


def test_fedder_with_witness(capsys):
    code, out, _ = run_cli(["fedder", *RING_ARGS, "--json"], capsys)
    assert code == 0
    check = json.loads(out)["checks"][0]
    assert check["verdict"] is True
    assert check["witness"] == "4*x^6*y^6*z^5"
    assert check["detail"]["route"] == "hypersurface"


def test_hilbert(capsys):
    code, out, _ = run_cli(["hilbert", *RING_ARGS, "--bound", "12", "--json"], capsys)
    assert code == 0
    check = json.loads(out)["checks"][0]
    assert check["verdict"]["coefficients"] == [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1]


def test_gb_and_nf(capsys):
    code, out, _ = run_cli(
        [
            "gb",
            "--p", "5",
            "--vars", "x,y",
            "--ideal", "x^2 + y^2", "x*y",
            "--json",
        ],
        capsys,
    )
    assert code == 0
    basis = json.loads(out)["checks"][0]["verdict"]
    assert "x*y" in basis

    code, out, _ = run_cli(
        [
            "nf",
            "--p", "5",
            "--vars", "x,y",
            "--ideal", "x^2 + y^2",
            "--element", "x^3",
            "--json",
        ],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["checks"][0]["verdict"] == "4*x*y^2"


def test_divisor_ops(capsys):
    base = ["divisor", "VS=-1/2,VT=1/3,VW=1/5"]
    code, out, _ = run_cli([*base, "--floor", "30", "--json"], capsys)
    assert code == 0
    v = json.loads(out)["checks"][0]["verdict"]
    assert v["degree"] == 1

    code, out, _ = run_cli([*base, "--profile", "12", "--json"], capsys)
    assert code == 0
    dims = json.loads(out)["checks"][0]["verdict"]
    assert dims == [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1]

    code, out, _ = run_cli(
        [*base, "--same-class", "VS=1/2,VT=1/3,VW=-4/5", "--json"], capsys
    )
    assert code == 0
    assert json.loads(out)["checks"][0]["verdict"] is True


def test_lc_class(capsys):
    args = [
        "lc-class",
        "--p", "2",
        "--vars", "x,y,z",
        "--weights", "15,10,6",
        "--relations", "x^2 + y^3 + z^5",
        "--sop", "y", "z",
        "--numerator", "x",
        "--exponents", "1,2",
        "--degree",
        "--json",
    ]
    code, out, _ = run_cli(args, capsys)
    assert code == 0
    assert json.loads(out)["checks"][0]["verdict"] == -7


def test_divisor_requires_exactly_one_op(capsys):
    code, _, err = run_cli(["divisor", "VS=1/2"], capsys)
    assert code == 2
    code, _, err = run_cli(
        ["divisor", "VS=1/2", "--frac", "--floor", "3"], capsys
    )
    assert code == 2


def test_run_manifest_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.toml"
    good.write_text(
        """
[rings.R]
p = 7
vars = ["x", "y", "z"]
weights = [15, 10, 6]
relations = ["x^2 + y^3 + z^5"]

[[check]]
kind = "ainv"
name = "a"
ring = "R"
expect = -1
"""
    )
    code, out, err = run_cli(["run", str(good)], capsys)
    assert code == 0
    assert json.loads(out)["summary"]["passed"] == 1
    assert "a" in err  # human table goes to stderr

    bad = tmp_path / "bad.toml"
    bad.write_text(good.read_text().replace("expect = -1", "expect = 0"))
    code, _, _ = run_cli(["run", str(bad)], capsys)
    assert code == 1

    broken = tmp_path / "broken.toml"
    broken.write_text("[rings.R\n")
    code, _, err = run_cli(["run", str(broken)], capsys)
    assert code == 2
    assert "error:" in err


def test_run_missing_file(capsys):
    code, _, err = run_cli(["run", "/nonexistent/manifest.toml"], capsys)
    assert code == 2
    assert "error:" in err


def test_undefined_ring_in_manifest(tmp_path, capsys):
    man = tmp_path / "m.toml"
    man.write_text('[[check]]\nkind = "ainv"\nname = "a"\nring = "nope"\n')
    code, _, err = run_cli(["run", str(man)], capsys)
    assert code == 2
    assert "nope" in err


def test_json_output_is_byte_identical(tmp_path):
    man = tmp_path / "m.toml"
    man.write_text(
        """
[rings.R]
p = 5
vars = ["x", "y"]

[[check]]
kind = "member"
name = "basis"
ring = "R"
element = "x^2*y"
ideal = ["x^2 + y^2", "x*y"]
"""
    )
    outs = set()
    for _ in range(2):
        r = subprocess.run(
            [sys.executable, "-m", "fsing.cli", "run", str(man)],
            capture_output=True,
            text=True,
        )
        assert r.returncode == 0
        outs.add(r.stdout)
    assert len(outs) == 1


def test_step_budget_error_maps_to_exit_one(tmp_path, capsys):
    man = tmp_path / "m.toml"
    man.write_text(
        """
[rings.R]
p = 5
vars = ["x", "y", "z"]

[[check]]
kind = "member"
name = "too-big"
ring = "R"
element = "x"
ideal = ["x^4 + y^3*z", "y^4 + x*z^3", "z^4 + x^3*y"]

[[check]]
kind = "ainv"
name = "still-runs"
ring = "R"
expect = -3
"""
    )
    env = dict(os.environ, FSING_STEP_BUDGET="1")
    r = subprocess.run(
        [sys.executable, "-m", "fsing.cli", "run", str(man)],
        capture_output=True,
        text=True,
        env=env,
    )
    assert r.returncode == 1
    payload = json.loads(r.stdout)
    first, second = payload["checks"]
    assert first["error"] and "budget" in first["error"]
    assert second["ok"]


def test_corpus_single_example(capsys):
    code, out, _ = run_cli(["corpus", "ex3.2", "--skip-expensive", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["total"] > 0
    assert all(c["ok"] for c in payload["checks"])


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2

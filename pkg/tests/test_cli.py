from __future__ import annotations

import subprocess
import sys

import numpy as np
import pytest

from groupqft.circuit import to_matrix
from groupqft.circuit_library import qft_circuit
from groupqft.cli import (
    format_circuit,
    format_matrix,
    main,
    parse_circuit,
    parse_matrix,
)
from groupqft.groups import Family, GroupSpec
from groupqft.synthesis import assemble


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "groupqft", *argv],
        capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_synth_structured_round_trips(capsys):
    assert main(["synth", "--family", "dihedral", "--n", "4",
                 "--format", "structured"]) == 0
    out = capsys.readouterr().out
    c = parse_circuit(out)
    assert format_circuit(c) == out.strip()
    want = to_matrix(qft_circuit(GroupSpec(Family.DIHEDRAL, 4)))
    assert np.array_equal(to_matrix(c), want)


def test_synth_text_has_summary(capsys):
    assert main(["synth", "--family", "qp", "--n", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("family=qp n=3 width=4 gates=")
    assert lines[1].startswith("circuit width=4")


def test_emit_round_trips_bit_identical(capsys):
    assert main(["emit", "--family", "quaternion", "--n", "3"]) == 0
    m = parse_matrix(capsys.readouterr().out)
    assert np.array_equal(m, assemble(GroupSpec(Family.QUATERNION, 3)).b)


def test_format_matrix_idempotent():
    rng = np.random.default_rng(7)
    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    text = format_matrix(m)
    assert np.array_equal(parse_matrix(text), m)
    assert format_matrix(parse_matrix(text)) == text


def test_verify_passes(capsys):
    assert main(["verify", "--family", "qd", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out


def test_verify_structured(capsys):
    assert main(["verify", "--family", "dihedral", "--n", "3",
                 "--format", "structured"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("verify family=dihedral n=3 ")
    assert "pass=1" in out


def test_verify_impossible_tolerance(capsys):
    assert main(["verify", "--family", "dihedral", "--n", "3",
                 "--tol", "1e-30"]) == 3
    assert "FAIL" in capsys.readouterr().out


def test_count_qp_reorder_twiddle_equalizer_constant(capsys):
    assert main(["count", "--family", "qp", "--range", "3..8",
                 "--format", "structured"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 6
    pdc = {ln.split("pdc=")[1].split()[0] for ln in lines}
    assert len(pdc) == 1


def test_count_text_table(capsys):
    assert main(["count", "--family", "cyclic", "--range", "1..4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["n", "width", "total"]
    assert len(lines) == 5


def test_usage_errors(capsys):
    assert main(["synth", "--family", "dihedral", "--n", "2"]) == 2
    assert main(["synth", "--family", "cyclic", "--n", "0"]) == 2
    assert main(["count", "--family", "qd", "--range", "8..3"]) == 2
    assert main(["count", "--family", "qd", "--range", "35"]) == 2
    assert main(["emit", "--family", "dihedral", "--n", "9"]) == 2
    capsys.readouterr()


def test_unknown_family_rejected_by_parser():
    with pytest.raises(SystemExit) as exc:
        main(["synth", "--family", "s4", "--n", "3"])
    assert exc.value.code == 2


def test_entry_point_subprocess():
    code, out, err = run_cli("synth", "--family", "dihedral", "--n", "3",
                             "--format", "structured")
    assert code == 0 and err == ""
    assert np.array_equal(
        to_matrix(parse_circuit(out)),
        to_matrix(qft_circuit(GroupSpec(Family.DIHEDRAL, 3))))
    code, _, err = run_cli("verify", "--family", "qp", "--n", "4",
                           "--tol", "1e-300")
    assert code == 3
    code, _, err = run_cli("synth", "--family", "dihedral", "--n", "99")
    assert code == 2 and "error:" in err


def test_parse_rejects_malformed():
    with pytest.raises(ValueError):
        parse_circuit("circuit width=2 gates=1\n")
    with pytest.raises(ValueError):
        parse_circuit("noise width=2 gates=0")
    with pytest.raises(ValueError):
        parse_circuit("circuit width=2 gates=1\nwarp q=0 u=1,0,0,0,0,0,1,0")
    with pytest.raises(ValueError):
        parse_matrix("matrix rows=2 cols=2\n1,0 0,0")
    with pytest.raises(ValueError):
        parse_matrix("matrix rows=1 cols=2\n1,0")

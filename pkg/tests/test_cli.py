import json

import pytest

from torsionlab import complexes
from torsionlab.cli import main
from torsionlab.simplicial import write_complex, write_pair


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def rp2_file(tmp_path):
    path = tmp_path / "rp2.cplx"
    path.write_text(write_complex(complexes.projective_plane_6()))
    return str(path)


def test_homology_rp2_line_format(capsys, rp2_file):
    code, out, _ = run_cli(capsys, "homology", rp2_file, "--degrees", "1")
    assert code == 0
    assert out == '{"degree": 1, "betti": 0, "torsion": [2]}\n'


def test_homology_torus_all_degrees(capsys, tmp_path):
    path = tmp_path / "torus.cplx"
    path.write_text(write_complex(complexes.torus_7()))
    code, out, _ = run_cli(capsys, "homology", str(path))
    assert code == 0
    docs = [json.loads(line) for line in out.splitlines()]
    assert [d["betti"] for d in docs] == [1, 2, 1]


def test_homology_pair_file(capsys, tmp_path):
    path = tmp_path / "pair.cplx"
    path.write_text(write_pair(complexes.disk_boundary_pair()))
    code, out, _ = run_cli(capsys, "homology", str(path), "--degrees", "2")
    assert code == 0
    assert json.loads(out) == {"degree": 2, "betti": 1, "torsion": []}


def test_homology_missing_file_exit_2(capsys):
    code, _, err = run_cli(capsys, "homology", "/nonexistent/file.cplx")
    assert code == 2
    assert "input error" in err


def test_homology_empty_file_exit_2(capsys, tmp_path):
    path = tmp_path / "empty.cplx"
    path.write_text("")
    code, _, err = run_cli(capsys, "homology", str(path))
    assert code == 2


def test_homology_parse_error_carries_line(capsys, tmp_path):
    path = tmp_path / "bad.cplx"
    path.write_text("complex V=3\nwhat 1 2\n")
    code, _, err = run_cli(capsys, "homology", str(path))
    assert code == 2
    assert "line 2" in err


def test_constants_document(capsys):
    code, out, _ = run_cli(capsys, "constants", "--d", "4",
                           "--margulis-eps", "1", "--margulis-m", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["eps"]["fraction"] == "1/668168"
    assert doc["commutator_chain_passes"] is True
    assert "figure_eight_volume" not in doc


def test_constants_m8_flag_gates_volume(capsys):
    code, out, _ = run_cli(capsys, "constants", "--d", "2", "--m8")
    assert code == 0
    doc = json.loads(out)
    assert doc["figure_eight_volume"] == pytest.approx(2.0298832128, abs=1e-8)


def test_constants_usage_error(capsys):
    code, _, err = run_cli(capsys, "constants", "--d", "1")
    assert code == 64


def test_dehn_fill_figure_eight(capsys):
    code, out, _ = run_cli(capsys, "dehn-fill", "--mu", "1", "--lambda", "0",
                           "--relations", "none", "--p", "5", "--q", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["torsion"] == [5]
    assert doc["hyperbolic"] == "yes"


def test_dehn_fill_invalid_slope_exit_2(capsys):
    code, _, err = run_cli(capsys, "dehn-fill", "--p", "4", "--q", "2")
    assert code == 2


def test_dehn_fill_with_relations(capsys):
    code, out, _ = run_cli(capsys, "dehn-fill", "--mu", "1,0", "--lambda", "0,0",
                           "--relations", "0,3", "--p", "5", "--q", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["torsion"] == [15] or doc["torsion"] == [3, 5] or doc["torsion"] == [5, 3]


def test_dehn_table(capsys):
    code, out, _ = run_cli(capsys, "dehn-table", "--p", "1..6", "--q", "1..2")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert all(rows[i]["hyperbolic"] in ("yes", "excluded") for i in range(len(rows)))
    flagged = {(r["p"], r["q"]) for r in rows if r["hyperbolic"] == "excluded"}
    assert flagged == {(1, 1), (2, 1), (3, 1), (4, 1)}


def test_verify_soule_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "soule", "--count", "25", "--seed", "7")
    assert code == 0
    summary = json.loads(out.splitlines()[-1])
    assert summary["failures"] == 0


def test_verify_commutator(capsys):
    code, out, _ = run_cli(capsys, "verify", "commutator", "--d", "10")
    assert code == 0


def test_verify_nerve(capsys):
    code, out, _ = run_cli(capsys, "verify", "nerve")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[-1]["failures"] == 0


def test_verify_unknown_suite_exit_64(capsys):
    code, _, err = run_cli(capsys, "verify", "bogus")
    assert code == 64
    assert "unknown suite" in err


def test_bad_range_usage_error(capsys):
    code, _, _ = run_cli(capsys, "dehn-table", "--p", "x..y", "--q", "1")
    assert code == 64


@pytest.mark.parametrize("argv", [
    ("constants", "--d", "3", "--margulis-eps", "0.1", "--margulis-m", "2"),
    ("dehn-fill", "--p", "7", "--q", "2"),
    ("dehn-table", "--p", "1..10", "--q", "1..3"),
    ("verify", "soule", "--count", "10", "--seed", "3"),
    ("verify", "dv-bound", "--count", "5", "--seed", "3"),
    ("verify", "commutator", "--d", "6"),
    ("verify", "orbit", "--count", "5", "--seed", "1"),
    ("verify", "obtuse", "--samples", "25", "--seed", "2"),
    ("verify", "nerve",),
])
def test_byte_identical_reruns(capsys, argv):
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1  # nonempty

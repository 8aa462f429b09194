import json

import numpy as np
import pytest

from critlab.cli import bundled_spec_path, main
from critlab.io_utils import read_points_csv


def run(argv):
    return main(argv)


def test_sample_haar_u_deterministic(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert run(["sample", "--model", "haar-u", "--n", "6", "--seed", "9", "--out", str(a)]) == 0
    out = capsys.readouterr().out
    assert "membership residual" in out
    assert float(out.split("membership residual:")[1].split()[0]) < 1e-10
    assert run(["sample", "--model", "haar-u", "--n", "6", "--seed", "9", "--out", str(b)]) == 0
    assert a.read_text() == b.read_text()


def test_sample_haar_sp_odd_dimension_usage_error(tmp_path, capsys):
    code = run(["sample", "--model", "haar-sp", "--n", "5", "--seed", "0",
                "--out", str(tmp_path / "x.csv")])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_sample_angles(tmp_path):
    out = tmp_path / "ang.csv"
    assert run(["sample", "--model", "iid-uniform", "--n", "12", "--seed", "1",
                "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "angle"
    assert len(lines) == 13
    vals = np.array([float(s) for s in lines[1:]])
    assert np.all((vals >= 0) & (vals < 2 * np.pi))


def test_critical_two_real_roots(tmp_path, capsys):
    roots = tmp_path / "roots.csv"
    roots.write_text("re,im\n1.0,0.0\n-1.0,0.0\n")
    out = tmp_path / "crit.csv"
    assert run(["critical", "--in", str(roots), "--out", str(out)]) == 0
    crit = read_points_csv(out)
    assert crit.size == 1 and abs(crit[0]) < 1e-12
    text = capsys.readouterr().out
    assert "radial deficit: 1.0" in text
    assert "gauss-lucas check: True" in text


def test_critical_single_root_fails(tmp_path, capsys):
    roots = tmp_path / "roots.csv"
    roots.write_text("re,im\n1.0,0.0\n")
    assert run(["critical", "--in", str(roots), "--out", str(tmp_path / "c.csv")]) == 1
    assert "degree" in capsys.readouterr().err


def test_critical_missing_file(tmp_path, capsys):
    assert run(["critical", "--in", str(tmp_path / "nope.csv"),
                "--out", str(tmp_path / "c.csv")]) == 1


def test_figure_fig1_csv_containment(tmp_path):
    out = tmp_path / "fig1.csv"
    assert run(["figure", "--figure", "fig1", "--n", "40", "--seed", "2",
                "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "re,im,series"
    assert len(lines) == 1 + 40 + 39
    zeros, crit = [], []
    for line in lines[1:]:
        re_s, im_s, tag = line.split(",")
        (zeros if tag == "zeros" else crit).append(float(re_s) + 1j * float(im_s))
    assert np.all(np.abs(np.abs(np.array(zeros)) - 1.0) < 1e-8)
    assert np.all(np.abs(np.array(crit)) <= 1.0 + 1e-8)


def test_figure_fig2_svg(tmp_path):
    out = tmp_path / "fig2.svg"
    assert run(["figure", "--figure", "fig2", "--n", "60", "--seed", "3",
                "--out", str(out), "--format", "svg"]) == 0
    text = out.read_text()
    assert text.startswith("<svg")
    assert text.count("<circle") >= 60 + 59


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_verify_companion_suite(capsys):
    assert run(["verify", "--suite", "companion"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["passed"] is True
    assert summary["suite"] == "companion"


def test_report_tiny_spec(tmp_path, capsys):
    spec = {
        "model": "haar_u",
        "sizes": [8, 16],
        "trials": 4,
        "seed": 55,
        "statistics": ["radial_deficit"],
    }
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps(spec))
    out = tmp_path / "report.json"
    csv_path = tmp_path / "values.csv"
    assert run(["report", "--spec", str(spec_path), "--out", str(out),
                "--values-csv", str(csv_path)]) == 0
    report = json.loads(out.read_text())
    assert set(report["cells"]["radial_deficit"]) == {"8", "16"}
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "stat,size,trial,value"
    assert len(lines) == 1 + 2 * 4
    assert "radial_deficit:" in capsys.readouterr().out


def test_report_malformed_spec(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"model": "haar_u"}')
    assert run(["report", "--spec", str(bad), "--out", str(tmp_path / "r.json")]) == 1


def test_bundled_specs_parse():
    for name in (
        "haar_unitary.json",
        "haar_orthogonal.json",
        "conjugate_pairs.json",
        "iid_uniform.json",
        "wigner_semicircle.json",
        "kac_gaussian.json",
    ):
        payload = json.loads(bundled_spec_path(name).read_text())
        assert payload["trials"] >= 1
        assert payload["sizes"] == sorted(payload["sizes"])

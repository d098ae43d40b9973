import json
import subprocess
import sys

import pytest

from hjps.classify import sklyanin_casimirs
from hjps.cli import dumps, execute, run
from hjps.jps import parse_casimir_file

SKLYANIN_K1 = "n=4\n1/2*x0^2+1/2*x2^2+x1*x3\n1/2*x1^2+1/2*x3^2+x0*x2\n"


@pytest.fixture
def sklyanin_file(tmp_path):
    path = tmp_path / "sklyanin.txt"
    path.write_text(SKLYANIN_K1)
    return str(path)


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fixture_matches_family():
    assert parse_casimir_file(SKLYANIN_K1) == sklyanin_casimirs(1)


class TestBasis:
    def test_json(self, capsys):
        code, out, _ = call(capsys, "basis", "--n", "3", "--r", "2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["dimension"] == 10
        assert data["invariant_dimension"] == 4
        assert data["degree"] == 6

    def test_text(self, capsys):
        code, out, _ = call(capsys, "basis", "--n", "3", "--r", "1", "--orbits")
        assert code == 0
        assert "dimension (admissible monomials): 4" in out
        assert "x0*x1*x2" in out

    def test_bad_n(self, capsys):
        code, out, err = call(capsys, "basis", "--n", "2", "--r", "1")
        assert code == 2 and out == "" and err


class TestCount:
    def test_closed_form_cross_checked(self, capsys):
        code, out, _ = call(capsys, "count", "--n", "3", "--r", "4", "--method", "closed-form")
        data = json.loads(out)
        assert code == 0 and data["count"] == 31 and data["agree"]
        assert set(data["cross_check"]) == {"closed-form", "triangle-brute", "compositions", "monomial-filter"}

    def test_general_n(self, capsys):
        code, out, _ = call(capsys, "count", "--n", "4", "--r", "2", "--method", "compositions")
        assert code == 0 and json.loads(out)["count"] == 42

    def test_closed_form_needs_n3(self, capsys):
        code, out, _ = call(capsys, "count", "--n", "4", "--r", "1", "--method", "closed-form")
        assert code == 2 and out == ""


def test_poincare(capsys):
    code, out, _ = call(capsys, "poincare", "--max-r", "4")
    data = json.loads(out)
    assert code == 0
    assert data["coefficients"] == [1, 4, 10, 19, 31]
    assert data["formula_agrees"]


class TestBracket:
    def test_pair(self, capsys, sklyanin_file):
        code, out, _ = call(capsys, "bracket", "--casimirs", sklyanin_file, "--pair", "0", "1")
        assert code == 0
        assert json.loads(out)["bracket"] == "-x0*x1+x2*x3"

    def test_full_table(self, capsys, sklyanin_file):
        code, out, _ = call(capsys, "bracket", "--casimirs", sklyanin_file)
        assert code == 0 and len(json.loads(out)["brackets"]) == 6

    def test_pair_out_of_range(self, capsys, sklyanin_file):
        code, out, _ = call(capsys, "bracket", "--casimirs", sklyanin_file, "--pair", "0", "4")
        assert code == 2 and out == ""

    def test_missing_file(self, capsys, tmp_path):
        code, out, err = call(capsys, "bracket", "--casimirs", str(tmp_path / "nope.txt"))
        assert code == 2 and out == "" and "cannot read" in err

    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("n=3\nx0^^2\n")
        code, out, _ = call(capsys, "bracket", "--casimirs", str(path))
        assert code == 2 and out == ""


class TestCheck:
    def test_sklyanin_passes(self, capsys, sklyanin_file):
        code, out, _ = call(capsys, "check", "--casimirs", sklyanin_file)
        data = json.loads(out)
        assert code == 0
        assert data["sigma_ok"] and data["tau_ok"] and data["jacobi_ok"] and data["casimir_ok"]
        assert data["failures"] == []

    def test_sign_flip_still_passes(self, capsys, sklyanin_file):
        code, _, _ = call(capsys, "check", "--casimirs", sklyanin_file, "--sign", "-1")
        assert code == 0

    def test_non_invariant_exits_1(self, capsys, tmp_path):
        path = tmp_path / "cube.txt"
        path.write_text("n=3\nx0^3\n")
        code, out, _ = call(capsys, "check", "--casimirs", str(path))
        data = json.loads(out)
        assert code == 1
        assert not data["sigma_ok"]
        assert any(f["reason"] == "sigma" for f in data["failures"])


class TestDual:
    def test_gamma_zero(self, capsys):
        code, out, _ = call(capsys, "dual", "--gamma", "0")
        data = json.loads(out)
        assert code == 0 and data["in_family"]
        assert abs(data["coeffs"]["a"] + data["coeffs"]["b"]) < 1e-6

    def test_rational_gamma(self, capsys):
        code, out, _ = call(capsys, "dual", "--gamma", "1/2", "--samples", "16")
        assert code == 0 and json.loads(out)["gamma"] == "1/2"

    def test_singular(self, capsys):
        code, out, _ = call(capsys, "dual", "--gamma", "-3")
        assert code == 2 and out == ""

    def test_too_few_samples(self, capsys):
        code, out, _ = call(capsys, "dual", "--gamma", "1", "--samples", "3")
        assert code == 2 and out == ""


class TestPolytope:
    def test_triangle_plot(self, capsys, tmp_path):
        svg = tmp_path / "t2.svg"
        code, out, _ = call(capsys, "polytope", "--n", "3", "--r", "2", "--plot", str(svg))
        data = json.loads(out)
        assert code == 0 and data["vertices_ok"] and data["count"] == 10
        text = svg.read_text()
        assert text.count('class="lattice-point"') == 10
        assert "10 lattice points" in text

    def test_n4_projection(self, capsys, tmp_path):
        svg = tmp_path / "t4.svg"
        code, _, _ = call(capsys, "polytope", "--n", "4", "--r", "2", "--plot", str(svg))
        assert code == 0
        assert svg.read_text().count('class="lattice-point"') == 42

    def test_n5_plot_unsupported(self, capsys, tmp_path):
        code, out, _ = call(capsys, "polytope", "--n", "5", "--r", "1", "--plot", str(tmp_path / "x.svg"))
        assert code == 2 and out == ""

    def test_2d_view_needs_n3(self, capsys, tmp_path):
        code, _, _ = call(capsys, "polytope", "--n", "4", "--r", "1", "--plot", str(tmp_path / "x.svg"), "--view", "2d")
        assert code == 2


def test_unknown_subcommand(capsys):
    code, out, _ = call(capsys, "frobnicate")
    assert code == 2 and out == ""


def test_missing_subcommand():
    assert execute([]).exit_code == 2


def test_json_round_trip_is_byte_identical(capsys, sklyanin_file):
    _, out, _ = call(capsys, "check", "--casimirs", sklyanin_file)
    assert dumps(json.loads(out)) == out


@pytest.mark.parametrize("argv", [["poincare", "--max-r", "3"], ["dual", "--gamma", "2", "--samples", "10"]])
def test_subprocess_runs_are_deterministic(argv):
    outs = [
        subprocess.run([sys.executable, "-m", "hjps", *argv], capture_output=True, text=True, check=True).stdout
        for _ in range(2)
    ]
    assert outs[0] == outs[1] and outs[0]

"""End-to-end tests of the command-line interface."""

import json

import numpy as np
import pytest

from aniso_duality.core.config import SuiteCounts
from aniso_duality.run import main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _small_config_file(tmp_path, **extra):
    payload = {"suites": {name: 1 for name in SuiteCounts.model_fields}, "workers": 1}
    payload.update(extra)
    path = tmp_path / "config.json"
    path.write_text(json.dumps(payload))
    return path


class TestQuasinormCommand:
    """aniso_duality quasinorm."""

    def test_euclidean(self, capsys):
        """|(3, 4)|_(1, 1) = 5."""
        code, out, _ = _run(capsys, "quasinorm", "--a", "1,1", "--x", "3,4")
        assert code == 0
        assert float(out) == pytest.approx(5.0, rel=1e-11)

    def test_anisotropic_axis(self, capsys):
        """|(0, 4)|_(1, 2) = 2."""
        code, out, _ = _run(capsys, "quasinorm", "--a", "1,2", "--x", "0,4")
        assert code == 0
        assert float(out) == pytest.approx(2.0, rel=1e-11)

    def test_bad_vector_is_usage_error(self, capsys):
        """Unparseable vectors exit with status 2."""
        with pytest.raises(SystemExit) as exc:
            main(["quasinorm", "--a", "1,x", "--x", "0,4"])
        assert exc.value.code == 2

    def test_invalid_anisotropy(self, capsys):
        """a_i < 1 fails validation with status 2."""
        code, _, err = _run(capsys, "quasinorm", "--a", "0.5,1", "--x", "0,4")
        assert code == 2
        assert err.startswith("Error:")

    def test_dimension_mismatch(self, capsys):
        """x and a must have the same length."""
        code, _, err = _run(capsys, "quasinorm", "--a", "1,2", "--x", "1,2,3")
        assert code == 2
        assert "dimension" in err

    def test_unexpected_exception_is_numerical(self, capsys, monkeypatch):
        """Errors from outside the package exit with status 3 and one line, no traceback."""

        def singular(a, x):
            raise np.linalg.LinAlgError("Singular matrix")

        monkeypatch.setattr("aniso_duality.run.quasi_norm", singular)
        code, out, err = _run(capsys, "quasinorm", "--a", "1,2", "--x", "0,4")
        assert code == 3
        assert out == ""
        assert "Error: numerical failure: LinAlgError: Singular matrix" in err
        assert "Traceback" not in err


class TestMixedNormCommand:
    """aniso_duality mixed-norm."""

    def test_rectangle_indicator(self, capsys):
        """The indicator of [0,1] x [0,2] with p = (1, 2) has norm sqrt(2)."""
        code, out, _ = _run(
            capsys,
            "mixed-norm",
            "--family", "box-indicator",
            "--params", '{"lower": [0, 0], "upper": [1, 2]}',
            "--lower", "0,0",
            "--upper", "1,2",
            "--resolution", "32,32",
            "--p", "1,2",
        )
        assert code == 0
        assert float(out) == pytest.approx(2.0 ** 0.5, rel=1e-10)

    def test_json_output(self, capsys):
        """--json adds the exponent and resolution."""
        code, out, _ = _run(capsys, "mixed-norm", "--p", "2", "--resolution", "64", "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["p"] == [2.0]
        assert payload["resolution"] == [64]
        assert payload["value"] >= 0.0

    def test_csv_input(self, capsys, tmp_path):
        """A CSV grid replaces the family."""
        path = tmp_path / "f.csv"
        path.write_text("1,4,0,1\n1,1,1,1\n")
        code, out, _ = _run(capsys, "mixed-norm", "--csv", str(path), "--p", "1")
        assert code == 0
        assert float(out) == pytest.approx(1.0)

    def test_bad_csv_exit_code(self, capsys, tmp_path):
        """A malformed CSV is a usage error."""
        path = tmp_path / "bad.csv"
        path.write_text("1,4,0,1\n1,1\n")
        code, _, err = _run(capsys, "mixed-norm", "--csv", str(path), "--p", "1")
        assert code == 2
        assert "expected 4 values" in err


class TestAtomCommands:
    """aniso_duality atom and pair."""

    def test_atom_validation(self, capsys):
        """A trig-mixture atom passes its own validation."""
        code, out, _ = _run(
            capsys, "atom", "--resolution", "256", "--a", "1", "--p", "0.9", "--r", "2", "--s", "1", "--seed", "3"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["validation"]["passed"] is True
        assert payload["size_bound"] > 0.0

    def test_constant_input_is_degenerate(self, capsys):
        """A constant has no atom: exit 3 with the degenerate message."""
        code, _, err = _run(
            capsys,
            "atom",
            "--family", "random-polynomial",
            "--params", '{"degree": 0}',
            "--resolution", "128",
            "--a", "1",
            "--p", "1",
            "--s", "0",
        )
        assert code == 3
        assert "degenerate: input is polynomial on ball" in err

    def test_moment_order_below_minimum(self, capsys):
        """s below s_min is a usage error."""
        code, _, _ = _run(capsys, "atom", "--resolution", "128", "--a", "1", "--p", "0.4", "--s", "0")
        assert code == 2

    def test_pair_bound_holds(self, capsys):
        """The single-ball bound passes and exits 0."""
        code, out, _ = _run(
            capsys,
            "pair",
            "--resolution", "256",
            "--seed", "1",
            "--g-family", "gaussian-bump",
            "--g-params", '{"sigma": 0.3, "center": [0.2]}',
            "--a", "1",
            "--p", "1",
            "--r", "2",
            "--s", "0",
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["pass"] is True
        assert payload["lhs"] <= payload["rhs"] * (1.0 + 1e-6)


class TestCampanatoCommand:
    """aniso_duality campanato."""

    def test_abs_benchmark(self, capsys):
        """|x| with p = 1/2, q = inf, s = 1 gives 1/4 at a centered ball."""
        code, out, _ = _run(
            capsys,
            "campanato",
            "--family", "radial-power",
            "--resolution", "1024",
            "--a", "1",
            "--p", "0.5",
            "--q", "inf",
            "--s", "1",
            "--radius-min", "0.05",
            "--radius-max", "0.5",
            "--centers", "11",
            "--radii", "6",
            "--refine", "0",
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["value"] == pytest.approx(0.25, rel=0.02)
        assert abs(payload["witness"]["center"][0]) <= 0.02
        assert payload["balls_evaluated"] == 66

    def test_ball_outside_box(self, capsys):
        """A radius that cannot fit is rejected."""
        code, _, _ = _run(capsys, "campanato", "--resolution", "64", "--a", "1", "--p", "1", "--radius-max", "2")
        assert code == 2


class TestSuiteCommand:
    """aniso_duality suite."""

    def test_suite_passes(self, capsys, tmp_path):
        """A small geometry run writes a passing report and exits 0."""
        config = _small_config_file(tmp_path)
        output = tmp_path / "report.json"
        code, out, _ = _run(
            capsys, "--config", str(config), "suite", "--name", "geometry", "--seed", "0", "--output", str(output)
        )
        report = json.loads(output.read_text())
        assert code == 0
        assert report["passed"] is True
        assert report["summary"]["failed"] == 0
        assert "0 failed" in out

    def test_zero_tolerance_fails(self, capsys, tmp_path):
        """--tolerance-scale 0 turns the volume checks into failures: exit 1."""
        config = _small_config_file(tmp_path)
        output = tmp_path / "report.json"
        code, _, _ = _run(
            capsys,
            "--config", str(config),
            "suite", "--name", "geometry", "--output", str(output), "--tolerance-scale", "0",
        )
        assert code == 1
        assert json.loads(output.read_text())["passed"] is False

    def test_invalid_config(self, capsys, tmp_path):
        """A schema violation in the config file exits 2."""
        config = _small_config_file(tmp_path, workers=0)
        code, _, err = _run(capsys, "--config", str(config), "suite", "--name", "geometry")
        assert code == 2
        assert "invalid input" in err

    def test_unreadable_config(self, capsys, tmp_path):
        """A missing config file exits 2."""
        code, _, _ = _run(capsys, "--config", str(tmp_path / "missing.json"), "suite", "--name", "norms")
        assert code == 2

    def test_unknown_suite(self, capsys):
        """Suite names are restricted to the registered set."""
        with pytest.raises(SystemExit) as exc:
            main(["suite", "--name", "nope"])
        assert exc.value.code == 2

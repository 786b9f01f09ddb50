"""Tests for the command-line interface."""

import json

import pytest

from weighted_blowups.cli import EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, EXIT_VERIFICATION, main

FM3 = {
    "dim": 3,
    "elements": [
        {"name": "12", "equations": [["1", "-1", "0"]]},
        {"name": "13", "equations": [["1", "0", "-1"]]},
        {"name": "23", "equations": [["0", "1", "-1"]]},
        {"name": "123", "equations": [["1", "-1", "0"], ["0", "1", "-1"]]},
    ],
}
TWO_AXES = {"dim": 3, "elements": [{"name": "G4", "zeros": [0, 2]}, {"name": "G5", "zeros": [1, 2]}]}
CUSP = {
    "dim": 2,
    "elements": [
        {"name": "A", "zeros": [0, 1], "weights": {"0": 2}},
        {"name": "B", "zeros": [0], "weights": {"0": 2}},
    ],
}
TABLEAU = {"dim": 4, "elements": [{"name": "A", "zeros": [0, 1]}, {"name": "B", "zeros": [0, 1, 2]}]}
JET_AT_DIAGONAL = {
    "base": {"x": ["0"], "y": "0", "yp": ["0"], "ypp": ["0"]},
    "lam": "0",
    "dx": ["1"],
    "dy": "3",
    "dyp": ["6"],
    "dypp": ["6"],
}


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


class TestBuildingSetCommands:
    """Tests for check, factors and tableau."""

    def test_check_fm(self, capsys, write):
        """Test the diagonals of three points pass."""
        code, out = run(capsys, "check", write("fm3.json", FM3))
        assert code == EXIT_OK
        assert out["command"] == "check"
        assert out["result"]["weighted_valid"] is True

    def test_check_not_separated(self, capsys, write):
        """Test a verification failure exit code."""
        code, out = run(capsys, "check", write("axes.json", TWO_AXES))
        assert code == EXIT_VERIFICATION
        assert out["result"]["separation_witness"] == "G4∩G5"

    def test_input_hashes(self, capsys, write):
        """Test input files are fingerprinted."""
        path = write("fm3.json", FM3)
        _, out = run(capsys, "nests", path)
        assert out["input_hashes"][path].startswith("sha256:")
        assert len(out["result"]) == 8

    def test_invalid_json(self, capsys, write):
        """Test a parse failure."""
        code, out = run(capsys, "check", write("bad.json", "{not json"))
        assert code == EXIT_PARSE
        assert out["error"] == "ValidationError"

    def test_missing_file(self, capsys, tmp_path):
        """Test an unreadable input."""
        code, out = run(capsys, "check", str(tmp_path / "missing.json"))
        assert code == EXIT_PARSE
        assert out["error"] == "FileNotFoundError"

    def test_foreign_major_version(self, capsys, write):
        """Test a document from another major schema version is refused."""
        code, out = run(capsys, "check", write("fm3.json", {**FM3, "schema_version": "2.0"}))
        assert code == EXIT_PARSE
        assert out["error"] == "SchemaVersionError"
        assert "2.0" in out["message"]

    def test_same_major_version(self, capsys, write):
        """Test a newer minor version still loads."""
        code, _ = run(capsys, "check", write("fm3.json", {**FM3, "schema_version": "1.7"}))
        assert code == EXIT_OK

    def test_unknown_element(self, capsys, write):
        """Test a domain error exit code."""
        code, out = run(capsys, "factors", write("axes.json", TWO_AXES), "--element", "X")
        assert code == EXIT_DOMAIN
        assert out["error"] == "NotInArrangementError"

    def test_tableau_text(self, capsys, write):
        """Test the text output format."""
        code = main(["--format", "text", "tableau", write("t.json", TABLEAU), "--nest", "A", "B"])
        assert code == EXIT_OK
        assert "row 0" in capsys.readouterr().out


class TestChartCommands:
    """Tests for chart commands on the cusp pair."""

    def test_blowdown(self, capsys, write):
        """Test the blow-down of a corner point."""
        code, out = run(
            capsys,
            "blowdown",
            write("cusp.json", CUSP),
            write("persp.json", {"nest": ["A", "B"], "h": {"A": 1, "B": 0}}),
            "--point",
            write("y.json", {"coords": ["2", "3"]}),
        )
        assert code == EXIT_OK
        assert out["result"] == ["36", "3"]

    def test_weak_singular(self, capsys, write):
        """Test the deepest stratum of the cusp pair."""
        code, out = run(
            capsys,
            "weak-singular",
            write("cusp.json", CUSP),
            write("persp.json", {"nest": ["A", "B"], "h": {"A": 1, "B": 0}}),
            "--point",
            write("y.json", {"coords": ["0", "0"]}),
        )
        assert code == EXIT_OK
        assert out["result"] is True


class TestFMCommands:
    """Tests for fm subcommands."""

    def test_forest(self, capsys):
        """Test the default covering forest."""
        code, out = run(capsys, "fm", "forest", "--s", "3", "--nest", "12", "123")
        assert code == EXIT_OK
        assert out["result"] == {"parent": {"2": 1, "3": 1}, "roots": [1], "controls": {"12": [2], "123": [3]}}

    def test_preferred_root(self, capsys):
        """Test a preferred root for a member."""
        _, out = run(capsys, "fm", "forest", "--s", "3", "--nest", "12", "123", "--prefer", "12=2")
        assert out["result"]["parent"] == {"1": 2, "3": 2}


class TestProjectiveAndJetCommands:
    """Tests for proj and jet subcommands."""

    def test_singular(self, capsys):
        """Test an orbifold point of weights (2, 2)."""
        code, out = run(capsys, "proj", "singular", "--weights", "2", "2", "--normal", "3", "4")
        assert code == EXIT_OK
        assert out["result"] is True

    def test_holonomic_modes(self, capsys, write):
        """Test the derived and literal relations on a diagonal point."""
        path = write("jet.json", JET_AT_DIAGONAL)
        _, derived = run(capsys, "jet", "holonomic", path, "--mode", "derived")
        _, literal = run(capsys, "jet", "holonomic", path)
        assert derived["result"] is True
        assert literal["result"] is False


class TestVerifyCommand:
    """Tests for the verify command."""

    def test_nests_suite(self, capsys):
        """Test the seed is echoed."""
        code, out = run(capsys, "--seed", "4", "verify", "nests")
        assert code == EXIT_OK
        assert out["seed"] == 4
        assert out["command"] == "verify nests"

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from sympow.system import app
from tests.conftest import FIXTURES_DIR

runner = CliRunner()

EXPECTED_DIR = FIXTURES_DIR / "expected"
SLOW_GOLDEN = {
    "fano_resurgence",
    "sixteen_quadrics_noetherian",
    "ten_quadruples_resurgence",
    "ten_triples_resurgence",
    "three_triangles_resurgence",
}


def _golden_cases():
    for path in sorted(EXPECTED_DIR.glob("*.json")):
        marks = [pytest.mark.slow] if path.stem in SLOW_GOLDEN else []
        yield pytest.param(path, id=path.stem, marks=marks)


def _is_subset(expected, actual) -> bool:
    if isinstance(expected, dict):
        return isinstance(actual, dict) and all(
            key in actual and _is_subset(value, actual[key]) for key, value in expected.items()
        )
    if isinstance(expected, list):
        return (
            isinstance(actual, list)
            and len(expected) == len(actual)
            and all(_is_subset(e, a) for e, a in zip(expected, actual))
        )
    return expected == actual


def run(args: list[str], tmp_path: Path, name: str = "report.json"):
    out = tmp_path / name
    result = runner.invoke(app, [*args, "--out", str(out)])
    report = json.loads(out.read_text(encoding="utf-8")) if out.is_file() else None
    return result, report


@pytest.mark.parametrize("path", _golden_cases())
def test_golden_reports(path, tmp_path):
    case = json.loads(path.read_text(encoding="utf-8"))
    result, report = run(
        [*case["options"], *case["command"], "--ideal", case["ideal"]], tmp_path
    )
    assert result.exit_code == 0, result.output
    assert report["command"] == case["command"][0]
    assert report["status"] == case["status"]
    assert _is_subset(case["results"], report["results"]), report["results"]


class TestExitCodes:
    def test_missing_ideal_file(self, tmp_path):
        result, report = run(["decompose", "--ideal", str(tmp_path / "nope.txt")], tmp_path)
        assert result.exit_code == 1
        assert report is None

    def test_parse_error(self, tmp_path):
        source = tmp_path / "bad.txt"
        source.write_text("vars: x y\ngens: x*q\n", encoding="utf-8")
        result, _ = run(["decompose", "--ideal", str(source)], tmp_path)
        assert result.exit_code == 1

    def test_failed_hypothesis_reports_witness(self, tmp_path):
        result, report = run(["closure-bound", "1", "2", "--ideal", "triangle3"], tmp_path)
        assert result.exit_code == 2
        assert report["status"] == "hypothesis-failed"
        assert report["results"]["witness"] == "x*y*z"

    def test_squarefree_mode_rejects_other_ideals(self, tmp_path):
        result, _ = run(
            ["--mode", "sqfree", "symbolic", "2", "--ideal", "non_squarefree"], tmp_path
        )
        assert result.exit_code == 1

    def test_generator_cap(self, tmp_path):
        result, report = run(
            ["--generator-cap", "2", "closure", "3", "--ideal", "triangle3"], tmp_path
        )
        assert result.exit_code == 0
        assert report["status"] == "capped"
        assert report["results"]["cap"] == 2


class TestCommands:
    def test_report_input_block(self, tmp_path):
        _, report = run(["decompose", "--ideal", "triangle3"], tmp_path)
        assert report["input"] == {"vars": ["x", "y", "z"], "gens": ["x*y", "x*z", "y*z"]}
        assert report["results"]["minimal_primes"] == ["x*y", "x*z", "y*z"]

    def test_timing_is_opt_in(self, tmp_path):
        _, plain = run(["waldschmidt", "--ideal", "triangle3"], tmp_path, "plain.json")
        _, timed = run(["waldschmidt", "--ideal", "triangle3", "--timing"], tmp_path, "timed.json")
        assert "timing_ms" not in plain
        assert timed["timing_ms"] >= 0
        assert plain["results"] == timed["results"]

    def test_components_mode(self, tmp_path):
        result, report = run(
            ["--mode", "components", "symbolic", "2", "--ideal", "non_squarefree"], tmp_path
        )
        assert result.exit_code == 0, result.output
        assert report["parameters"]["mode"] == "components"

    def test_threads_do_not_change_the_report(self, tmp_path):
        args = ["lambda", "1", "2", "3", "--ideal", "triangle3"]
        _, single = run(["--threads", "1", "--rees-window", "1", *args], tmp_path, "one.json")
        _, pooled = run(["--threads", "2", "--rees-window", "1", *args], tmp_path, "two.json")
        assert single == pooled

    def test_human_form_input(self, tmp_path):
        source = tmp_path / "triangle.txt"
        source.write_text("vars: x y z\ngens: x*y, x*z, y*z\n", encoding="utf-8")
        _, report = run(["containment", "3", "2", "--ideal", str(source)], tmp_path)
        assert report["results"]["contained"] is True

    def test_noncontainment_witness(self, tmp_path):
        _, report = run(["containment", "2", "2", "--ideal", "triangle3"], tmp_path)
        assert report["results"]["contained"] is False
        assert report["results"]["witness"] == "x*y*z"


class TestSettings:
    def test_debug_dump(self):
        result = runner.invoke(app, ["--search-cap", "9", "debug"])
        assert result.exit_code == 0
        settings = json.loads(result.stdout)
        assert settings["search_cap"] == 9
        assert settings["fixtures_dir"].endswith("fixtures")

    def test_environment_fills_unset_options(self, monkeypatch):
        monkeypatch.setenv("SYMPOW_SEARCH_CAP", "7")
        monkeypatch.setenv("SYMPOW_THREADS", "3")
        result = runner.invoke(app, ["debug"])
        settings = json.loads(result.stdout)
        assert settings["search_cap"] == 7
        assert settings["threads"] == 3

    def test_flags_override_environment(self, monkeypatch):
        monkeypatch.setenv("SYMPOW_SEARCH_CAP", "7")
        result = runner.invoke(app, ["--search-cap", "5", "debug"])
        assert json.loads(result.stdout)["search_cap"] == 5

    def test_env_file(self, tmp_path, monkeypatch):
        monkeypatch.delenv("SYMPOW_REES_CAP", raising=False)
        env_file = tmp_path / "local.env"
        env_file.write_text("SYMPOW_REES_CAP=4\n", encoding="utf-8")
        result = runner.invoke(app, ["--env-file", str(env_file), "debug"])
        assert json.loads(result.stdout)["rees_cap"] == 4
        monkeypatch.delenv("SYMPOW_REES_CAP", raising=False)


class TestFixtureCorpus:
    def test_list(self):
        result = runner.invoke(app, ["fixtures", "list"])
        assert result.exit_code == 0
        names = [line.split("\t")[0] for line in result.stdout.splitlines()]
        assert "fano" in names
        assert "triangle3" in names

    def test_graph_writes_a_parsable_document(self, tmp_path):
        out = tmp_path / "c3.json"
        result = runner.invoke(
            app, ["fixtures", "graph", "cycle", "3", "--kind", "edge", "-o", str(out)]
        )
        assert result.exit_code == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["vars"] == ["x1", "x2", "x3"]
        assert len(data["gens"]) == 3

        _, report = run(["containment", "3", "2", "--ideal", str(out)], tmp_path)
        assert report["results"]["contained"] is True

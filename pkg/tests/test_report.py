import json
from fractions import Fraction

from sympow.report import Report, rational
from tests.conftest import xyz


def test_rationals_keep_their_denominator():
    assert rational(Fraction(3, 2)) == "3/2"
    assert rational(1) == "1/1"
    assert rational(Fraction(6, 4)) == "3/2"


class TestReport:
    def test_layout(self, triangle):
        report = Report(command="asymptotic", ideal=triangle, results={"rho_hat": "4/3"})
        text = report.to_json()
        assert text.endswith("\n")
        data = json.loads(text)
        assert data == {
            "command": "asymptotic",
            "input": {"vars": ["x", "y", "z"], "gens": ["x*y", "x*z", "y*z"]},
            "parameters": {},
            "results": {"rho_hat": "4/3"},
            "status": "ok",
        }

    def test_keys_are_sorted(self):
        report = Report(command="b", ideal=xyz((1, 0, 0)), results={"zeta": 1, "alpha": 2})
        text = report.to_json()
        assert text.index('"alpha"') < text.index('"zeta"')
        assert text.index('"command"') < text.index('"input"') < text.index('"status"')

    def test_timing_only_when_measured(self, triangle):
        assert "timing_ms" not in Report(command="b", ideal=triangle).as_dict()
        timed = Report(command="b", ideal=triangle, timing_ms=12)
        assert timed.as_dict()["timing_ms"] == 12

    def test_write_creates_parents(self, tmp_path, triangle):
        out = tmp_path / "nested" / "report.json"
        text = Report(command="b", ideal=triangle).write(out)
        assert out.read_text(encoding="utf-8") == text

    def test_identical_runs_serialize_identically(self, triangle):
        first = Report(command="x", ideal=triangle, results={"a": [1, 2], "b": {"c": "1/1"}})
        second = Report(command="x", ideal=triangle, results={"b": {"c": "1/1"}, "a": [1, 2]})
        assert first.to_json() == second.to_json()

"""Tests for sampling, the verification suites and the report."""

import json

import pytest

from assoform.algebra.resultant import resultant_nonvanishing
from assoform.config import Config
from assoform.core.exactla import ExactMatrix, det
from assoform.core.textio import render_form
from assoform.verification import suites
from assoform.verification.report import SCHEMA, SuiteResult, VerifyReport
from assoform.verification.sampler import (
    degenerate_tuple, inverse_transpose, make_rng, random_invertible_matrix, sample_good_tuple,
)
from assoform.verification.suites import SUITES, run_suite, run_verification


def _config(**run) -> Config:
    return Config().with_overrides(**run)


class TestSampler:
    def test_same_seed_same_tuple(self):
        a = sample_good_tuple(make_rng(7), 3, 2)
        b = sample_good_tuple(make_rng(7), 3, 2)
        assert [render_form(f) for f in a] == [render_form(f) for f in b]

    def test_good_tuples(self, rng):
        for _ in range(5):
            assert resultant_nonvanishing(sample_good_tuple(rng, 2, 3))

    def test_degenerate_tuples(self, rng):
        for n, d in ((2, 2), (2, 4), (3, 2)):
            assert not resultant_nonvanishing(degenerate_tuple(rng, n, d))

    def test_invertible_matrices(self, rng):
        C = random_invertible_matrix(rng, 3)
        assert det(ExactMatrix.from_rows(C)) != 0
        product = ExactMatrix.from_rows(C).transpose() @ ExactMatrix.from_rows(inverse_transpose(C))
        assert product == ExactMatrix.identity(3)


class TestSuites:
    def test_ternary(self):
        result = run_suite("ternary", _config(cases=5))
        assert result.passed, result.message
        assert result.details["S"]["c6"] == "-1/1296"
        assert result.details["S"]["c3"] == "-1/81"
        assert result.details["hesse_scalars"]["A(c1[t=0]) ~ c6"] == "1/36"

    def test_ternary_report_keeps_every_case(self):
        report = run_verification("ternary", _config(cases=5))
        suite = json.loads(report.to_json(timings=False))["suites"][0]
        cases = suite["details"]["cases"]
        assert set(cases) == {"partition", "annihilator_table", "hesse_pencil", "aronhold_vs_U_Res", "sl3_invariance"}
        assert sum(len(group) for group in cases.values()) == suite["cases"]
        assert len(cases["annihilator_table"]) == 8
        assert all({"S", "U_Res", "form", "passed"} <= set(c) for c in cases["aronhold_vs_U_Res"])
        assert {c["subject"]: c["S"] for c in cases["partition"]}["c5"] == "-1/1296"

    def test_roundtrip_pinned(self):
        result = run_suite("roundtrip", _config(n=2, d=3, cases=3), pinned=True)
        assert result.passed, result.message
        assert result.cases == 3

    def test_dimension_pinned(self):
        result = run_suite("dimension", _config(n=2, d=2), pinned=True)
        assert result.passed
        assert result.details["differential_rank"] == {"2,2": {"rank": 3, "expected": 3}}

    def test_charts(self):
        result = run_suite("charts", _config(cases=5))
        assert result.passed, result.message

    @pytest.mark.parametrize("cases", [1, 5])
    def test_charts_checks_members_of_Z(self, cases):
        result = run_suite("charts", _config(cases=cases))
        assert result.passed, result.message
        assert result.details["gl_invariance"]["in_Z"] >= 1
        assert result.details["annihilator_transform"]["in_Z"] >= 1

    def test_resultants(self):
        result = run_suite("resultants", _config(cases=10))
        assert result.passed, result.message
        assert result.cases == 20

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("nope", Config())

    def test_failure_is_reported(self, monkeypatch):
        monkeypatch.setattr(suites, "differential_rank", lambda ftuple: 0)
        result = run_suite("dimension", _config(n=2, d=2), pinned=True)
        assert not result.passed
        assert result.counterexample["rank"] == 0
        assert result.counterexample["expected"] == 3

    @pytest.mark.slow
    def test_default_dimension_grid(self):
        result = run_suite("dimension", Config())
        assert result.passed
        assert {k: v["rank"] for k, v in result.details["differential_rank"].items()} == {
            "2,2": 3, "2,3": 5, "3,2": 10, "3,3": 22,
        }


class TestReport:
    def test_progress_lines(self):
        lines = []
        report = run_verification("dimension", _config(n=2, d=2), pinned=True, progress=lines.append)
        assert report.passed
        assert lines[0].startswith("dimension: pass (1 cases")

    def test_json_is_deterministic_without_timings(self):
        config = _config(n=2, d=2, cases=2)
        first = run_verification("roundtrip", config, pinned=True).to_json(timings=False)
        second = run_verification("roundtrip", config, pinned=True).to_json(timings=False)
        assert first == second
        data = json.loads(first)
        assert data["schema"] == SCHEMA
        assert data["n"] == 2 and data["d"] == 2
        assert "seconds" not in data["suites"][0]

    def test_first_failure(self):
        report = VerifyReport(suite="all", seed=0, suites=[
            SuiteResult(name="ternary"), SuiteResult(name="charts", passed=False, message="boom"),
        ])
        assert not report.passed
        assert report.first_failure().name == "charts"

    def test_suite_names(self):
        assert SUITES == ("ternary", "roundtrip", "dimension", "charts", "resultants")


class TestConfig:
    def test_missing_file_gives_defaults(self, tmp_path):
        config = Config.load(tmp_path / "absent.yaml")
        assert config.run.n == 3 and config.run.d == 2 and config.run.seed == 0
        assert config.verify.roundtrip_cases == 100

    def test_yaml(self, tmp_path):
        path = tmp_path / "assoform.yaml"
        path.write_text("run:\n  seed: 11\n  height: 4\nverify:\n  binary_pairs: 10\n", encoding="utf-8")
        config = Config.load(path)
        assert config.run.seed == 11
        assert config.run.height == 4
        assert config.verify.binary_pairs == 10

    def test_empty_yaml(self, tmp_path):
        path = tmp_path / "assoform.yaml"
        path.write_text("", encoding="utf-8")
        assert Config.load(path) == Config()

    def test_overrides_skip_none(self):
        config = Config().with_overrides(n=2, d=None)
        assert (config.run.n, config.run.d) == (2, 2)

    @pytest.mark.parametrize("override", [{"n": 1}, {"d": 1}, {"seed": -1}, {"format": "xml"}])
    def test_invalid_overrides(self, override):
        with pytest.raises(ValueError):
            Config().with_overrides(**override)

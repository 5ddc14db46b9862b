"""Tests for the suite registry, the runner and JSON reports."""

import json
from typing import List

import pytest

from aniso_duality.core import HarnessConfig, InvalidInputError, PropertyName, SuiteName
from aniso_duality.harness import (
    BaseSuite,
    PlannedCase,
    PropertyBlock,
    SuiteRunner,
    build_report,
    clear_registry_for_tests,
    get_suite,
    get_suites,
    load_report,
    outcome,
    register_default_suites,
    write_report,
)
from tests.conftest import make_small_config


def _passing_case(rng, config):
    return outcome(float(rng.uniform()), 1.0)


def _failing_case(rng, config):
    return outcome(2.0, 1.0, detail="lhs above rhs")


def _raising_case(rng, config):
    raise RuntimeError("boom")


class _ToySuite(BaseSuite):
    """Three blocks with a fixed verdict each."""

    @property
    def name(self) -> SuiteName:
        return SuiteName.GEOMETRY

    def blocks(self, config: HarnessConfig) -> List[PropertyBlock]:
        return [
            PropertyBlock(PropertyName("ok"), "toy", 3, _passing_case),
            PropertyBlock(PropertyName("bad"), "toy", 1, _failing_case),
            PropertyBlock(PropertyName("crash"), "toy", 1, _raising_case),
        ]


class TestSuiteRegistry:
    """Registration and lookup of the built-in suites."""

    def test_defaults_in_order(self):
        """Six suites, registered in module order."""
        register_default_suites()
        names = [suite.name for suite in get_suites()]
        assert names == [
            SuiteName.GEOMETRY,
            SuiteName.NORMS,
            SuiteName.PROJECTION,
            SuiteName.ATOMS,
            SuiteName.CAMPANATO,
            SuiteName.DUALITY,
        ]

    def test_register_defaults_is_idempotent(self):
        """Calling the registration twice keeps one suite per name."""
        register_default_suites()
        register_default_suites()
        assert len(get_suites()) == 6

    def test_unknown_suite_after_clear(self):
        """Lookup of an unregistered suite raises InvalidInputError."""
        clear_registry_for_tests()
        try:
            with pytest.raises(InvalidInputError):
                get_suite(SuiteName.NORMS)
        finally:
            register_default_suites()

    def test_every_suite_has_blocks(self, small_config):
        """Each suite yields at least one block with a positive count."""
        register_default_suites()
        for suite in get_suites():
            blocks = suite.blocks(small_config)
            assert blocks
            assert all(block.count >= 1 for block in blocks)


class TestPlanning:
    """Case ids and seeds."""

    def test_ids_and_seeds(self, small_config):
        """Ids read suite:block:k; seeds count up from the master seed across blocks."""
        runner = SuiteRunner(small_config)
        cases = runner.plan(_ToySuite(), seed=100)
        assert [case.case_id for case in cases] == [
            "geometry:ok:0",
            "geometry:ok:1",
            "geometry:ok:2",
            "geometry:bad:0",
            "geometry:crash:0",
        ]
        assert [case.seed for case in cases] == [100, 101, 102, 103, 104]

    def test_negative_seed_rejected(self, small_config):
        """The master seed must be non-negative."""
        with pytest.raises(InvalidInputError):
            SuiteRunner(small_config).plan(_ToySuite(), seed=-1)

    def test_case_counts_follow_config(self):
        """The geometry suite plans one case per law and count cases elsewhere."""
        runner = SuiteRunner(make_small_config(count=2))
        cases = runner.plan(get_suite(SuiteName.GEOMETRY), seed=0)
        assert len(cases) == 3 + 2 + 2 + 2


class TestRunCase:
    """Single-case execution."""

    def test_exception_marks_case_failed(self, small_config):
        """A raising case is recorded as failed with the error text."""
        runner = SuiteRunner(small_config)
        block = PropertyBlock(PropertyName("crash"), "toy", 1, _raising_case)
        result = runner.run_case(PlannedCase(case_id="toy:crash:0", block=block, seed=7))
        assert not result.passed
        assert result.error == "RuntimeError: boom"
        assert result.lhs is None and result.rhs is None
        assert result.seed == 7

    def test_failing_case_reports_margin(self, small_config):
        """margin = rhs - lhs; violation is its negative part."""
        runner = SuiteRunner(small_config)
        block = PropertyBlock(PropertyName("bad"), "toy", 1, _failing_case)
        result = runner.run_case(PlannedCase(case_id="toy:bad:0", block=block, seed=0))
        assert not result.passed
        assert result.margin == pytest.approx(-1.0)
        assert result.violation == pytest.approx(1.0)
        assert result.detail == "lhs above rhs"

    def test_non_finite_values_become_none(self, small_config):
        """inf in lhs or rhs is stored as None."""
        runner = SuiteRunner(small_config)
        block = PropertyBlock(PropertyName("inf"), "toy", 1, lambda rng, config: outcome(1.0, float("inf")))
        result = runner.run_case(PlannedCase(case_id="toy:inf:0", block=block, seed=0))
        assert result.passed
        assert result.rhs is None and result.margin is None


class TestReports:
    """Report assembly, determinism and JSON layout."""

    def test_summary_counts(self, small_config):
        """Failures and errors both count as failed; the worst violation is kept."""
        runner = SuiteRunner(small_config)
        results = runner.run_cases(runner.plan(_ToySuite(), seed=0))
        report = build_report("geometry", 0, small_config, results)
        assert report.summary.total == 5
        assert report.summary.failed == 2
        assert report.summary.max_violation == pytest.approx(1.0)
        assert not report.passed

    def test_geometry_suite_passes(self, small_config):
        """A small geometry run passes at the default tolerances."""
        report = SuiteRunner(small_config).run(SuiteName.GEOMETRY, seed=0)
        assert report.passed, [case.id for case in report.cases if not case.passed]
        assert report.suite == "geometry"

    def test_deterministic_across_worker_counts(self):
        """Same seed and config give identical reports, serial or pooled."""
        config = make_small_config(count=3)
        serial = SuiteRunner(config, workers=1).run(SuiteName.GEOMETRY, seed=42)
        pooled = SuiteRunner(config, workers=3).run(SuiteName.GEOMETRY, seed=42)
        assert serial.deterministic_dump() == pooled.deterministic_dump()

    def test_zero_tolerance_scale_fails(self):
        """Scaling every tolerance to zero makes the volume checks fail."""
        config = make_small_config(tolerance_scale=0.0)
        report = SuiteRunner(config).run(SuiteName.GEOMETRY, seed=0)
        assert not report.passed
        assert any(case.id.startswith("geometry:ball_volume:") and not case.passed for case in report.cases)

    def test_config_digest_tracks_config(self):
        """Different tolerance scales give different digests."""
        first = SuiteRunner(make_small_config()).run(SuiteName.GEOMETRY, seed=0)
        second = SuiteRunner(make_small_config(tolerance_scale=2.0)).run(SuiteName.GEOMETRY, seed=0)
        assert first.config_digest != second.config_digest

    def test_json_layout(self, tmp_path, small_config):
        """Cases are written with the key 'pass' and load back unchanged."""
        report = SuiteRunner(small_config).run(SuiteName.GEOMETRY, seed=3)
        path = write_report(report, tmp_path / "out" / "report.json")
        payload = json.loads(path.read_text())
        assert payload["suite"] == "geometry"
        assert payload["passed"] is True
        assert set(payload["summary"]) == {"total", "failed", "max_violation"}
        first = payload["cases"][0]
        assert "pass" in first and "passed" not in first
        assert first["id"] == "geometry:homogeneity:0"
        assert load_report(path).deterministic_dump() == report.deterministic_dump()

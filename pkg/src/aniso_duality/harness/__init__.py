"""Verification harness: property suites, their registry, the runner and reports."""

from .base import BaseSuite, CaseOutcome, PropertyBlock, outcome
from .registry import (
    clear_registry_for_tests,
    get_suite,
    get_suites,
    register_default_suites,
    register_suite,
)
from .report import CaseResult, ReportSummary, SuiteReport, build_report, load_report, write_report
from .runner import PlannedCase, SuiteRunner

__all__ = [
    # Suites
    "BaseSuite",
    "PropertyBlock",
    "CaseOutcome",
    "outcome",
    # Registry
    "register_suite",
    "get_suite",
    "get_suites",
    "register_default_suites",
    "clear_registry_for_tests",
    # Runner
    "SuiteRunner",
    "PlannedCase",
    # Reports
    "CaseResult",
    "ReportSummary",
    "SuiteReport",
    "build_report",
    "write_report",
    "load_report",
]

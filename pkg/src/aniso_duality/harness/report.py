"""JSON verification reports: one record per case plus a summary."""

import math
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field

from ..core import CaseID, HarnessConfig, config_digest, utc_stamp


class CaseResult(BaseModel):
    """Outcome of one verification case; serialized with the key 'pass'."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    id: CaseID
    op: str
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    margin: Optional[float] = None
    passed: bool = Field(alias="pass")
    seed: int
    resolution: Optional[Tuple[int, ...]] = None
    detail: Optional[str] = None
    error: Optional[str] = None

    @property
    def violation(self) -> float:
        """How far lhs exceeded rhs (0 for passing or errored cases)."""
        if self.passed or self.margin is None or not math.isfinite(self.margin):
            return 0.0
        return max(0.0, -self.margin)


class ReportSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    total: int = Field(ge=0)
    failed: int = Field(ge=0)
    max_violation: float = Field(ge=0.0)


class SuiteReport(BaseModel):
    """Report for one suite run (or every suite, for 'all')."""

    model_config = ConfigDict(frozen=True)

    suite: str
    seed: int
    config_digest: str
    generated_at: str
    cases: List[CaseResult]
    summary: ReportSummary

    @computed_field
    @property
    def passed(self) -> bool:
        return self.summary.failed == 0

    def deterministic_dump(self) -> dict:
        """The report without its timestamp, for run-to-run comparison."""
        return self.model_dump(mode="json", by_alias=True, exclude={"generated_at"})


def build_report(suite: str, seed: int, config: HarnessConfig, cases: Sequence[CaseResult]) -> SuiteReport:
    failed = [case for case in cases if not case.passed]
    summary = ReportSummary(
        total=len(cases),
        failed=len(failed),
        max_violation=max((case.violation for case in failed), default=0.0),
    )
    return SuiteReport(
        suite=suite,
        seed=seed,
        config_digest=config_digest(config),
        generated_at=utc_stamp(),
        cases=list(cases),
        summary=summary,
    )


def write_report(report: SuiteReport, path: Union[str, Path]) -> Path:
    """
    Write report as indented JSON.

    Non-finite floats are written as null.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(by_alias=True, indent=2) + "\n")
    return path


def load_report(path: Union[str, Path]) -> SuiteReport:
    return SuiteReport.model_validate_json(Path(path).read_text())

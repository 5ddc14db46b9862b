"""Suite runner: plans seeded cases, runs them in a worker pool, assembles the report."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..core import DEFAULT_CONFIG, CaseID, HarnessConfig, InvalidInputError, SuiteName
from .base import BaseSuite, PropertyBlock
from .registry import get_suite, get_suites, register_default_suites
from .report import CaseResult, SuiteReport, build_report


_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlannedCase:
    """A case id, its property block and the seed of its generator."""

    case_id: CaseID
    block: PropertyBlock
    seed: int


def _finite_or_none(x: float) -> Optional[float]:
    return x if math.isfinite(x) else None


class SuiteRunner:
    """Runs registered suites case by case and collects the results."""

    def __init__(self, config: Optional[HarnessConfig] = None, workers: Optional[int] = None):
        """
        Initialize the suite runner.

        Args:
            config: Harness configuration (defaults if None)
            workers: Thread-pool size (config.workers if None)
        """
        self.config = config or DEFAULT_CONFIG
        self.workers = max(1, workers or self.config.workers)
        # Cases already run in parallel; ball searches inside a case stay serial
        self.case_config = self.config.with_overrides(workers=1)

        # Ensure default suites are registered
        register_default_suites()

    def plan(self, suite: BaseSuite, seed: int) -> List[PlannedCase]:
        """
        Every case of suite in block order; case k of the suite gets seed + k.

        Raises:
            InvalidInputError: If seed is negative
        """
        if seed < 0:
            raise InvalidInputError(f"seed must be non-negative, got {seed}")
        cases = []
        for block in suite.blocks(self.config):
            for k in range(block.count):
                case_id = CaseID(f"{suite.name.value}:{block.name}:{k}")
                cases.append(PlannedCase(case_id=case_id, block=block, seed=seed + len(cases)))
        return cases

    def run_case(self, case: PlannedCase) -> CaseResult:
        """Run one case; an exception marks it failed and is kept in the record."""
        rng = np.random.default_rng(case.seed)
        try:
            result = case.block.case(rng, self.case_config)
        except Exception as e:
            # Log error but continue with other cases
            _logger.warning("case %s raised %s: %s", case.case_id, type(e).__name__, e)
            return CaseResult(
                id=case.case_id,
                op=case.block.op,
                passed=False,
                seed=case.seed,
                error=f"{type(e).__name__}: {e}",
            )

        check = result.check
        if not check.passed:
            _logger.warning("case %s failed: lhs=%.6g rhs=%.6g", case.case_id, check.lhs, check.rhs)
        return CaseResult(
            id=case.case_id,
            op=case.block.op,
            lhs=_finite_or_none(check.lhs),
            rhs=_finite_or_none(check.rhs),
            margin=_finite_or_none(check.margin),
            passed=check.passed,
            seed=case.seed,
            resolution=result.resolution,
            detail=check.detail,
        )

    def run_cases(self, cases: List[PlannedCase]) -> List[CaseResult]:
        """Results in plan order, independent of scheduling."""
        if self.workers == 1:
            return [self.run_case(case) for case in cases]
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(self.run_case, cases))

    def run(self, name: SuiteName, seed: int) -> SuiteReport:
        """
        Run one suite, or every registered suite for SuiteName.ALL.

        Args:
            name: Suite to run
            seed: Master seed; each suite numbers its cases from it

        Returns:
            SuiteReport with one CaseResult per case
        """
        name = SuiteName(name)
        suites = get_suites() if name == SuiteName.ALL else [get_suite(name)]
        results: List[CaseResult] = []
        for suite in suites:
            _logger.info("running suite %s (seed %d)", suite.name.value, seed)
            suite_results = self.run_cases(self.plan(suite, seed))
            failed = sum(1 for r in suite_results if not r.passed)
            _logger.info("suite %s: %d cases, %d failed", suite.name.value, len(suite_results), failed)
            results.extend(suite_results)
        return build_report(name.value, seed, self.config, results)

"""Supremum search over balls: parallel lattice scan, then local refinement."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ..core import (
    AnisoDualityError,
    AnisotropicBall,
    BallScore,
    BallSearchDomain,
    SearchError,
)
from ..core.config import SearchConfig
from ..geometry import radius_fitting
from ..grid import Box


_logger = logging.getLogger(__name__)

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_FIT_TOL = 1e-12

BallEvaluator = Callable[[AnisotropicBall], BallScore]


def ball_fits(ball: AnisotropicBall, box: Box) -> bool:
    """True when the ball's bounding box lies in box (up to round-off)."""
    lower, upper = box
    b_lo, b_hi = ball.bounding_box
    for lo, hi, bl, bh in zip(lower, upper, b_lo, b_hi):
        slack = _FIT_TOL * (hi - lo)
        if bl < lo - slack or bh > hi + slack:
            return False
    return True


@dataclass
class SearchOutcome:
    """Every score evaluated, in evaluation order, plus the failure count."""

    scores: List[BallScore] = field(default_factory=list)
    failures: int = 0
    attempts: int = 0

    @property
    def best(self) -> BallScore:
        """First maximal score (ties resolved by evaluation order)."""
        best = self.scores[0]
        for score in self.scores[1:]:
            if score.score > best.score:
                best = score
        return best


class BallSearch:
    """
    Maximize an evaluator over a BallSearchDomain.

    The lattice scan is a parallel map re-assembled in domain order; the
    refinement rounds alternate golden-section on log radius with coordinate
    descent on the center, accepting strict improvements only.
    """

    def __init__(
        self,
        evaluate: BallEvaluator,
        box: Box,
        config: SearchConfig,
        workers: int = 1,
    ):
        """
        Initialize search.

        Args:
            evaluate: Scores one ball; AnisoDualityError marks a failed ball
            box: Data domain every searched ball must stay inside
            config: Search defaults (golden iterations, failure fraction)
            workers: Thread-pool size for the lattice scan
        """
        self.evaluate = evaluate
        self.box = box
        self.config = config
        self.workers = max(1, workers)

    def _try(self, ball: AnisotropicBall, outcome: SearchOutcome) -> Optional[BallScore]:
        outcome.attempts += 1
        try:
            score = self.evaluate(ball)
        except AnisoDualityError as exc:
            outcome.failures += 1
            _logger.warning("skipping ball center=%s radius=%.4g: %s", ball.center, ball.radius, exc)
            return None
        outcome.scores.append(score)
        return score

    def _safe_evaluate(self, ball: AnisotropicBall):
        try:
            return self.evaluate(ball)
        except AnisoDualityError as exc:
            return exc

    def scan(self, balls: Sequence[AnisotropicBall]) -> SearchOutcome:
        """Evaluate every ball; results keep the input order."""
        outcome = SearchOutcome()
        if self.workers == 1 or len(balls) == 1:
            results = [self._safe_evaluate(ball) for ball in balls]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(self._safe_evaluate, balls))
        for ball, result in zip(balls, results):
            outcome.attempts += 1
            if isinstance(result, AnisoDualityError):
                outcome.failures += 1
                _logger.warning("skipping ball center=%s radius=%.4g: %s", ball.center, ball.radius, result)
            else:
                outcome.scores.append(result)
        return outcome

    def _radius_bounds(self, center: Tuple[float, ...], ball: AnisotropicBall, domain: BallSearchDomain):
        lower, upper = self.box
        room = [min(c - lo, hi - c) for c, lo, hi in zip(center, lower, upper)]
        r_hi = min(max(domain.radii), radius_fitting(ball.anisotropy, room))
        r_lo = min(domain.radii)
        return r_lo, r_hi

    def _golden_radius(self, best: BallScore, domain: BallSearchDomain, outcome: SearchOutcome) -> BallScore:
        center = best.ball.center
        r_lo, r_hi = self._radius_bounds(center, best.ball, domain)
        if r_hi <= r_lo:
            return best

        def score_at(log_r: float) -> float:
            ball = AnisotropicBall(center=center, radius=math.exp(log_r), anisotropy=best.ball.anisotropy)
            result = self._try(ball, outcome)
            return result.score if result is not None else -math.inf

        a, b = math.log(r_lo), math.log(r_hi)
        x1 = b - _GOLDEN * (b - a)
        x2 = a + _GOLDEN * (b - a)
        f1, f2 = score_at(x1), score_at(x2)
        for _ in range(self.config.golden_iterations):
            if f1 >= f2:
                b, x2, f2 = x2, x1, f1
                x1 = b - _GOLDEN * (b - a)
                f1 = score_at(x1)
            else:
                a, x1, f1 = x1, x2, f2
                x2 = a + _GOLDEN * (b - a)
                f2 = score_at(x2)
        return _better(best, outcome.best)

    def _center_descent(self, best: BallScore, steps: Sequence[float], outcome: SearchOutcome) -> BallScore:
        steps = list(steps)
        for _ in range(self.config.golden_iterations):
            improved = False
            for axis in range(len(steps)):
                for sign in (1.0, -1.0):
                    center = list(best.ball.center)
                    center[axis] += sign * steps[axis]
                    ball = best.ball.model_copy(update={"center": tuple(center)})
                    if not ball_fits(ball, self.box):
                        continue
                    result = self._try(ball, outcome)
                    if result is not None and result.score > best.score:
                        best, improved = result, True
            if not improved:
                steps = [0.5 * h for h in steps]
        return best

    def run(self, domain: BallSearchDomain, balls: Sequence[AnisotropicBall]) -> SearchOutcome:
        """
        Lattice scan of balls, then domain.refinement_rounds refinement rounds.

        Raises:
            SearchError: If more than the configured fraction of balls failed
        """
        outcome = self.scan(balls)
        if not outcome.scores:
            raise SearchError(f"all {outcome.attempts} balls failed")
        _check_failures(outcome, self.config.max_failure_fraction)

        best = outcome.best
        steps = _lattice_steps(domain, best.ball)
        for round_index in range(domain.refinement_rounds):
            best = self._golden_radius(best, domain, outcome)
            best = self._center_descent(best, steps, outcome)
            steps = [0.5 * h for h in steps]
            _logger.debug("refinement round %d: score %.6g", round_index + 1, best.score)
        _check_failures(outcome, self.config.max_failure_fraction)
        return outcome


def _better(current: BallScore, candidate: BallScore) -> BallScore:
    return candidate if candidate.score > current.score else current


def _lattice_steps(domain: BallSearchDomain, ball: AnisotropicBall) -> List[float]:
    steps = []
    for axis, half in enumerate(ball.half_widths):
        values = np.unique([c[axis] for c in domain.centers])
        gaps = np.diff(values)
        steps.append(float(gaps.min()) if gaps.size else 0.5 * half)
    return steps


def _check_failures(outcome: SearchOutcome, max_fraction: float) -> None:
    if outcome.failures > max_fraction * outcome.attempts:
        raise SearchError(
            f"{outcome.failures} of {outcome.attempts} balls failed (limit {max_fraction:.0%})"
        )

"""The anisotropic mixed-norm Campanato seminorm and its q-monotonicity check."""

import logging
from typing import Optional

from ..core import (
    DEFAULT_CONFIG,
    AnisotropicBall,
    BallScore,
    BallSearchDomain,
    CampanatoParams,
    CampanatoResult,
    DomainError,
    HarnessConfig,
    IncompatibleParametersError,
    InequalityCheck,
    InvalidInputError,
)
from ..grid import GridFunction
from ..norms import ball_measures
from ..polyproj import build_basis
from .search import BallSearch, ball_fits
from .solvers import best_poly_error


_logger = logging.getLogger(__name__)


def ball_weight(g: GridFunction, ball: AnisotropicBall, params: CampanatoParams) -> float:
    """|B| / ||chi_B||_{L^p} measured on g's lattice."""
    return ball_measures(ball, params.p, g.grid).weight


def score_ball(
    g: GridFunction,
    ball: AnisotropicBall,
    params: CampanatoParams,
    config: Optional[HarnessConfig] = None,
) -> BallScore:
    """weight(B) times the normalized best-approximation error on B."""
    config = config or DEFAULT_CONFIG
    basis = build_basis(ball, params.s, grid=g.grid)
    approximation = best_poly_error(g, ball, params.q, params.s, basis=basis, config=config.solver)
    return BallScore(ball=ball, weight=ball_weight(g, ball, params), error=approximation.error)


def _check_inputs(g: GridFunction, params: CampanatoParams, domain: BallSearchDomain) -> list:
    if params.a.n != g.n:
        raise IncompatibleParametersError(f"parameters live in R^{params.a.n}, g in R^{g.n}")
    balls = domain.candidate_balls(params.a)
    for ball in balls:
        if not ball_fits(ball, g.box):
            raise DomainError(f"ball center={ball.center} radius={ball.radius} leaves g's box {g.box}")
    return balls


def campanato_seminorm(
    g: GridFunction,
    params: CampanatoParams,
    domain: BallSearchDomain,
    config: Optional[HarnessConfig] = None,
) -> CampanatoResult:
    """
    Searched value of sup_B weight(B) * inf_P [mean_B |g - P|^q]^{1/q}.

    The value is a lower bound for the continuum seminorm; the witness is the
    maximizing ball and every evaluated ball is kept in the result's scores.

    Raises:
        DomainError: If a domain ball leaves g's box
        SearchError: If more than the configured fraction of balls failed
    """
    config = config or DEFAULT_CONFIG
    balls = _check_inputs(g, params, domain)
    search = BallSearch(
        evaluate=lambda ball: score_ball(g, ball, params, config),
        box=g.box,
        config=config.search,
        workers=config.workers,
    )
    outcome = search.run(domain, balls)
    best = outcome.best
    _logger.info(
        "campanato q=%s s=%d: %.6g over %d balls (%d failed)",
        params.q, params.s, best.score, outcome.attempts, outcome.failures,
    )
    return CampanatoResult(
        value=max(best.score, 0.0),
        witness=best.ball,
        q=params.q,
        s=params.s,
        balls_evaluated=outcome.attempts,
        failures=outcome.failures,
        scores=tuple(outcome.scores),
    )


def q_monotonicity_check(
    g: GridFunction,
    params: CampanatoParams,
    domain: BallSearchDomain,
    q1: float,
    q2: float,
    config: Optional[HarnessConfig] = None,
) -> InequalityCheck:
    """
    v1 <= v2 (1 + tol) for independently searched seminorms at q1 < q2.

    Both searches run over the same domain. The q2 side also scores the q1
    witness ball, so the comparison always includes a ball both searches saw.
    """
    if not 1.0 <= q1 < q2:
        raise InvalidInputError(f"need 1 <= q1 < q2, got q1={q1}, q2={q2}")
    config = config or DEFAULT_CONFIG
    tolerance = config.effective_tolerances().q_monotonicity
    q2_params = params.model_copy(update={"q": q2})
    lower = campanato_seminorm(g, params.model_copy(update={"q": q1}), domain, config)
    upper = campanato_seminorm(g, q2_params, domain, config)

    v1 = lower.value
    v2 = max(upper.value, score_ball(g, lower.witness, q2_params, config).score)
    return InequalityCheck(
        lhs=v1,
        rhs=v2,
        passed=v1 <= v2 * (1.0 + tolerance),
        detail=f"q1={q1}, q2={q2}, {lower.balls_evaluated} and {upper.balls_evaluated} balls",
    )

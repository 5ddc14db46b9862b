"""CLI entrypoint for aniso_duality."""

import argparse
import json
import logging
import math
import sys
from typing import Optional, Sequence, Tuple

from pydantic import ValidationError

from .atoms import make_atom
from .campanato import campanato_seminorm
from .core import (
    AnisoDualityError,
    AnisotropicBall,
    AnisotropyVector,
    AtomParams,
    BallSearchDomain,
    CampanatoParams,
    ExponentVector,
    FamilyKind,
    FunctionFamily,
    HarnessConfig,
    InvalidInputError,
    SuiteName,
    load_config,
)
from .core.errors import EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED
from .duality import single_ball_bound
from .geometry import quasi_norm, radius_fitting
from .grid import GridFunction, sample
from .harness import SuiteRunner, write_report
from .norms import mixed_lebesgue_norm


_logger = logging.getLogger(__name__)


def _vector(text: str) -> Tuple[float, ...]:
    """Parse '1,2.5,inf' into a tuple of floats."""
    try:
        values = tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if any(math.isnan(v) for v in values):
        raise argparse.ArgumentTypeError(f"NaN is not allowed in {text!r}")
    return values


def _int_vector(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _exponent(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number or 'inf', got {text!r}")


def _json_object(text: str) -> dict:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as e:
        raise argparse.ArgumentTypeError(f"invalid JSON: {e}")
    if not isinstance(value, dict):
        raise argparse.ArgumentTypeError("family parameters must be a JSON object")
    return value


def _add_function_args(parser: argparse.ArgumentParser, prefix: str = "", label: str = "f") -> None:
    parser.add_argument(
        f"--{prefix}family",
        type=FamilyKind,
        choices=list(FamilyKind),
        default=FamilyKind.TRIG_MIXTURE,
        metavar="KIND",
        help=f"Function family for {label} (default: trig-mixture)",
    )
    parser.add_argument(f"--{prefix}params", type=_json_object, default={}, help=f"Family parameters for {label} as JSON")
    parser.add_argument(f"--{prefix}seed", type=int, default=0, help=f"Family seed for {label} (default: 0)")
    if not prefix:
        parser.add_argument("--csv", type=str, help="Load f from a CSV grid file instead of a family")


def _add_grid_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lower", type=_vector, help="Lower box corner (default: -1 in every axis)")
    parser.add_argument("--upper", type=_vector, help="Upper box corner (default: 1 in every axis)")
    parser.add_argument("--resolution", type=_int_vector, help="Nodes per axis (default: from config)")
    parser.add_argument("--dim", type=int, help="Dimension when no vector fixes it")


def _add_ball_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a", type=_vector, required=True, help="Anisotropy vector, e.g. 1,2")
    parser.add_argument("--center", type=_vector, help="Ball center (default: box center)")
    parser.add_argument("--radius", type=float, help="Ball radius (default: largest fitting radius)")
    parser.add_argument("--p", type=_vector, required=True, help="Exponent vector, e.g. 0.8,0.9")
    parser.add_argument("--r", type=_exponent, default=2.0, help="Size exponent r in (1, inf] (default: 2)")
    parser.add_argument("--s", type=int, required=True, help="Vanishing-moment degree")


def _dimension(args: argparse.Namespace) -> int:
    for name in ("a", "p", "lower", "upper", "resolution", "center"):
        value = getattr(args, name, None)
        if value is not None:
            return len(value)
    return args.dim or 1


def _box(args: argparse.Namespace, n: int):
    lower = args.lower if args.lower is not None else (-1.0,) * n
    upper = args.upper if args.upper is not None else (1.0,) * n
    if len(lower) != n or len(upper) != n:
        raise InvalidInputError(f"box corners must have {n} components")
    return tuple(lower), tuple(upper)


def _family(args: argparse.Namespace, prefix: str = "") -> FunctionFamily:
    dest = prefix.replace("-", "_")
    return FunctionFamily(
        kind=getattr(args, f"{dest}family"),
        params=getattr(args, f"{dest}params"),
        seed=getattr(args, f"{dest}seed"),
    )


def _function(args: argparse.Namespace, config: HarnessConfig) -> GridFunction:
    if args.csv:
        return sample(FunctionFamily(kind=FamilyKind.CSV_IMPORT, params={"path": args.csv}))
    n = _dimension(args)
    resolution = args.resolution or config.grid.resolution(n)
    return sample(_family(args), _box(args, n), resolution)


def _ball(args: argparse.Namespace, f: GridFunction) -> AnisotropicBall:
    a = AnisotropyVector(a=args.a)
    lower, upper = f.box
    center = args.center or tuple(0.5 * (lo + hi) for lo, hi in zip(lower, upper))
    if args.radius is not None:
        radius = args.radius
    else:
        limits = [min(c - lo, hi - c) for c, lo, hi in zip(center, lower, upper)]
        radius = radius_fitting(a, limits)
    return AnisotropicBall(center=tuple(center), radius=radius, anisotropy=a)


def _atom(args: argparse.Namespace, f: GridFunction, config: HarnessConfig):
    params = AtomParams(p=ExponentVector(p=args.p), r=args.r, s=args.s)
    return make_atom(f, _ball(args, f), params, tolerances=config.effective_tolerances())


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, default=str))


def cmd_quasinorm(args: argparse.Namespace, config: HarnessConfig) -> int:
    value = quasi_norm(AnisotropyVector(a=args.a), args.x)
    print(f"{value:.12g}")
    return EXIT_OK


def cmd_mixed_norm(args: argparse.Namespace, config: HarnessConfig) -> int:
    f = _function(args, config)
    value = mixed_lebesgue_norm(f, ExponentVector(p=args.p))
    if args.json:
        _print_json({"value": value, "p": list(args.p), "resolution": list(f.resolution)})
    else:
        print(f"{value:.12g}")
    return EXIT_OK


def cmd_campanato(args: argparse.Namespace, config: HarnessConfig) -> int:
    g = _function(args, config)
    a = AnisotropyVector(a=args.a)
    params = CampanatoParams(a=a, p=ExponentVector(p=args.p), q=args.q, s=args.s)
    lower, upper = g.box
    search = config.search
    if args.radius_max is not None:
        radius_max = args.radius_max
    else:
        radius_max = radius_fitting(a, [0.5 * (hi - lo) for lo, hi in zip(lower, upper)])
    radius_min = args.radius_min if args.radius_min is not None else search.radius_min_fraction * radius_max
    domain = BallSearchDomain.lattice(
        lower,
        upper,
        a,
        radius_min,
        radius_max,
        centers_per_axis=args.centers or search.centers_per_axis,
        n_radii=args.radii or search.n_radii,
        refinement_rounds=search.refinement_rounds if args.refine is None else args.refine,
    )
    result = campanato_seminorm(g, params, domain, config)
    _print_json({
        "value": result.value,
        "witness": result.witness.model_dump(mode="json"),
        "q": args.q,
        "s": result.s,
        "balls_evaluated": result.balls_evaluated,
        "failures": result.failures,
        "resolution": list(g.resolution),
    })
    return EXIT_OK


def cmd_atom(args: argparse.Namespace, config: HarnessConfig) -> int:
    f = _function(args, config)
    atom = _atom(args, f, config)
    _print_json({
        "ball": atom.ball.model_dump(mode="json"),
        "params": atom.params.model_dump(mode="json"),
        "size_bound": atom.size_bound,
        "validation": atom.evidence.model_dump(mode="json"),
        "resolution": list(atom.function.resolution),
    })
    return EXIT_OK


def cmd_pair(args: argparse.Namespace, config: HarnessConfig) -> int:
    f = _function(args, config)
    g = sample(_family(args, prefix="g-"), f.box, f.resolution)
    atom = _atom(args, f, config)
    check = single_ball_bound(atom, g, config)
    _print_json({
        "lhs": check.lhs,
        "rhs": check.rhs,
        "margin": check.margin,
        "pass": check.passed,
        "detail": check.detail,
        "resolution": list(atom.function.resolution),
    })
    return EXIT_OK if check.passed else EXIT_VERIFICATION_FAILED


def cmd_suite(args: argparse.Namespace, config: HarnessConfig) -> int:
    runner = SuiteRunner(config=config, workers=args.workers)
    report = runner.run(args.name, args.seed)
    path = write_report(report, args.output)
    summary = report.summary
    print(f"{report.suite}: {summary.total} cases, {summary.failed} failed -> {path}")
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="aniso_duality",
        description="Anisotropic mixed-norm Hardy/Campanato duality toolkit",
    )
    parser.add_argument("--config", type=str, help="JSON config file (flags override it)")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quasinorm", help="Anisotropic quasi-norm |x|_a")
    p.add_argument("--a", type=_vector, required=True, help="Anisotropy vector, e.g. 1,2")
    p.add_argument("--x", type=_vector, required=True, help="Point, e.g. 0,4")
    p.set_defaults(handler=cmd_quasinorm)

    p = sub.add_parser("mixed-norm", help="Mixed Lebesgue quasi-norm of a sampled function")
    _add_function_args(p)
    _add_grid_args(p)
    p.add_argument("--p", type=_vector, required=True, help="Exponent vector, e.g. 1,2")
    p.add_argument("--json", action="store_true", help="Print JSON with metadata")
    p.set_defaults(handler=cmd_mixed_norm)

    p = sub.add_parser("campanato", help="Searched anisotropic Campanato seminorm")
    _add_function_args(p, label="g")
    _add_grid_args(p)
    p.add_argument("--a", type=_vector, required=True, help="Anisotropy vector")
    p.add_argument("--p", type=_vector, required=True, help="Exponent vector")
    p.add_argument("--q", type=_exponent, default=2.0, help="Inner exponent in [1, inf] (default: 2)")
    p.add_argument("--s", type=int, default=0, help="Polynomial degree (default: 0)")
    p.add_argument("--radius-min", type=float, help="Smallest lattice radius")
    p.add_argument("--radius-max", type=float, help="Largest lattice radius (default: largest fitting)")
    p.add_argument("--centers", type=int, help="Lattice centers per axis")
    p.add_argument("--radii", type=int, help="Number of lattice radii")
    p.add_argument("--refine", type=int, help="Refinement rounds around the best ball")
    p.set_defaults(handler=cmd_campanato)

    p = sub.add_parser("atom", help="Build and validate an atom from a sampled function")
    _add_function_args(p)
    _add_grid_args(p)
    _add_ball_args(p)
    p.set_defaults(handler=cmd_atom)

    p = sub.add_parser("pair", help="Single-ball pairing bound of an atom against g")
    _add_function_args(p)
    _add_function_args(p, prefix="g-", label="g")
    _add_grid_args(p)
    _add_ball_args(p)
    p.set_defaults(handler=cmd_pair)

    p = sub.add_parser("suite", help="Run a verification suite and write its JSON report")
    p.add_argument("--name", type=SuiteName, choices=list(SuiteName), required=True, metavar="NAME",
                   help="Suite: " + ", ".join(s.value for s in SuiteName))
    p.add_argument("--seed", type=int, default=0, help="Master seed (default: 0)")
    p.add_argument("--output", type=str, default="report.json", help="Report path (default: report.json)")
    p.add_argument("--workers", type=int, help="Worker threads (default: from config)")
    p.add_argument("--tolerance-scale", type=float, help="Multiply every suite tolerance")
    p.set_defaults(handler=cmd_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entrypoint; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        config = load_config(args.config)
        config = config.with_overrides(
            workers=getattr(args, "workers", None),
            tolerance_scale=getattr(args, "tolerance_scale", None),
        )
        return args.handler(args, config)
    except ValidationError as e:
        print(f"Error: invalid input: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AnisoDualityError as e:
        _logger.debug("command %s failed", args.command, exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        _logger.debug("command %s crashed", args.command, exc_info=True)
        print(f"Error: numerical failure: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())

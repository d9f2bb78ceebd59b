import argparse
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError
from pydantic_settings import BaseSettings

from chatelet_decider.algebra.strategies import FactorizationStrategy
from chatelet_decider.errors import InputError


class AppSettings(BaseSettings):
    kronecker_max_degree: int = 8
    kronecker_max_coeff: int = 10**6
    factor_backend: FactorizationStrategy = FactorizationStrategy.KRONECKER
    norm_bound: int = 40
    group_cap: int = 4096
    # bounded search attached to the fiber-infeasibility verdict
    fiber_m_max: int = 3
    fiber_nu_bound: int = 20
    fiber_len_max: int = 8
    descent_m0: int = 12
    descent_depth_cap: int = 64
    debug: bool = False
    progress: bool = False

    class Config:
        env_file = ".env"
        env_prefix = "CHATELET_"
        extra = "ignore"

    def create_backend(self):
        return self.factor_backend.create_backend(
            max_degree=self.kronecker_max_degree, max_coeff=self.kronecker_max_coeff
        )


class CliArgumentParser(argparse.ArgumentParser):
    """Raises InputError instead of exiting so callers control the exit code."""

    def error(self, message: str):
        raise InputError(message)


def _common_flags() -> argparse.ArgumentParser:
    parser = CliArgumentParser(add_help=False)
    parser.add_argument(
        "--debug",
        action="store_true",
        default=None,
        help="Enable debug mode with verbose logging",
    )
    parser.add_argument(
        "--progress",
        action="store_true",
        default=None,
        help="Show progress bars for exhaustive searches",
    )
    parser.add_argument(
        "-o",
        "--output",
        type=Path,
        default=None,
        help="Also write the JSON report to this file",
    )
    parser.add_argument(
        "--backend",
        type=str,
        default=None,
        choices=[s.value for s in FactorizationStrategy],
        help="Factorization backend",
    )
    parser.add_argument(
        "--kronecker-bound",
        type=int,
        default=None,
        help="Largest degree the Kronecker backend accepts",
    )
    parser.add_argument(
        "--group-cap",
        type=int,
        default=None,
        help="Largest group order the closure will build",
    )
    return parser


def _build_parser() -> CliArgumentParser:
    common = _common_flags()
    parser = CliArgumentParser(
        prog="chatelet-decider",
        description="Rationality decider for surfaces z^2 = a*y^2 + P(x) over Q",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    decide = sub.add_parser("decide", parents=[common], help="Decide rationality")
    decide.add_argument("--a", type=str, default=None, help="Rational coefficient a")
    decide.add_argument(
        "--poly",
        type=str,
        default=None,
        help='Coefficients of P, lowest degree first, e.g. "2,0,1"',
    )
    decide.add_argument(
        "--cert", type=Path, default=None, help="JSON file with certificates"
    )
    decide.add_argument(
        "--json-in", type=Path, default=None, help="JSON file with the whole problem"
    )
    decide.add_argument(
        "--norm-bound",
        type=int,
        default=None,
        help="Numerator/denominator bound of norm-equation searches",
    )

    cohomology = sub.add_parser(
        "cohomology", parents=[common], help="Cohomology of a lattice or block structure"
    )
    source = cohomology.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--blocks", type=str, default=None, help='Block degrees, e.g. "2,2"'
    )
    source.add_argument(
        "--json-in", type=Path, default=None, help="JSON lattice scenario"
    )

    surface = sub.add_parser("surface", parents=[common], help="Replay surface operations")
    replay = surface.add_mutually_exclusive_group(required=True)
    replay.add_argument("--json-in", type=Path, default=None, help="JSON surface scenario")
    replay.add_argument(
        "--resolve", type=int, default=None, help="Resolve the involution for r roots"
    )
    replay.add_argument(
        "--contract", type=int, default=None, help="Contract to the del Pezzo model for r roots"
    )

    delpezzo = sub.add_parser("delpezzo", parents=[common], help="Conic classes and partners")
    delpezzo.add_argument("--points", type=int, required=True, choices=[5, 7])

    descent = sub.add_parser("descent", parents=[common], help="Exhaust the descent tree")
    descent.add_argument("--r", type=int, required=True, choices=[4, 6])
    descent.add_argument("--m0", type=int, default=None, help="Starting value of m")
    descent.add_argument("--depth-cap", type=int, default=None)

    fiber = sub.add_parser("fiber", parents=[common], help="Bounded fiber-class search")
    fiber.add_argument("--r", type=int, required=True)
    fiber.add_argument("--m-max", type=int, default=None)
    fiber.add_argument("--nu-bound", type=int, default=None)
    fiber.add_argument("--len-max", type=int, default=None)

    sweep = sub.add_parser(
        "sweep", parents=[common], help="Closed form against lattice cohomology"
    )
    sweep.add_argument("--max-r", type=int, default=8)
    sweep.add_argument("--max-blocks", type=int, default=3)
    sweep.add_argument("--max-block-degree", type=int, default=6)
    return parser


def parse_args(argv: Sequence[str] | None = None) -> tuple[AppSettings, argparse.Namespace]:
    """Parse command line arguments and return config plus the raw namespace."""
    args = _build_parser().parse_args(argv)
    settings_kwargs: dict[str, object] = {}

    if args.debug is not None:
        settings_kwargs["debug"] = args.debug
    if args.progress is not None:
        settings_kwargs["progress"] = args.progress
    if args.backend is not None:
        settings_kwargs["factor_backend"] = FactorizationStrategy(args.backend)
    if args.kronecker_bound is not None:
        settings_kwargs["kronecker_max_degree"] = args.kronecker_bound
    if args.group_cap is not None:
        settings_kwargs["group_cap"] = args.group_cap
    if getattr(args, "norm_bound", None) is not None:
        settings_kwargs["norm_bound"] = args.norm_bound
    if getattr(args, "m0", None) is not None:
        settings_kwargs["descent_m0"] = args.m0
    if getattr(args, "depth_cap", None) is not None:
        settings_kwargs["descent_depth_cap"] = args.depth_cap
    if getattr(args, "m_max", None) is not None:
        settings_kwargs["fiber_m_max"] = args.m_max
    if getattr(args, "nu_bound", None) is not None:
        settings_kwargs["fiber_nu_bound"] = args.nu_bound
    if getattr(args, "len_max", None) is not None:
        settings_kwargs["fiber_len_max"] = args.len_max

    try:
        return AppSettings(**settings_kwargs), args  # type: ignore
    except ValidationError as e:
        raise InputError(f"Invalid configuration: {e}") from e

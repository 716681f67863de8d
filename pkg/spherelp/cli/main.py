"""Entry point of the ``spherelp`` command line."""

import argparse
import logging
import os
import sys
from collections.abc import Callable, Sequence

from spherelp import __version__
from spherelp.cli.commands import (
    EXIT_USAGE,
    RunConfig,
    cmd_bound,
    cmd_construct,
    cmd_periodize,
    cmd_report,
    cmd_search,
    cmd_verify,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "bound": cmd_bound,
    "periodize": cmd_periodize,
    "search": cmd_search,
    "report": cmd_report,
}


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--log-level",
        type=str,
        default="warning",
        choices=["debug", "info", "warning", "error"],
        help="Logging level (default: warning).",
    )
    common.add_argument(
        "--seed", type=int, default=0, help="Seed of randomised checks (default: 0)."
    )
    common.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="Worker threads for certification sweeps (default: all cores).",
    )
    common.add_argument("--out", type=str, default=None, help="Output file.")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="spherelp",
        description="Periodic auxiliary functions and sphere-packing density bounds.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser(
        "construct", parents=[common], help="Build onedim, hex2 or cubic3."
    )
    construct.add_argument("name", help="onedim, onedim:<m>, hex2 or cubic3.")
    construct.add_argument("--m", type=int, default=None, help="Scale of onedim.")
    construct.add_argument(
        "--grid", type=float, default=None, help="Also dump samples at this spacing."
    )

    for name, text in (
        ("verify", "Certify a series JSON document."),
        ("bound", "Certify a series and print its density bound."),
    ):
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument("series", help="Series JSON document.")
        cmd.add_argument(
            "--tol", type=float, default=None, help="Tolerance (default: 1e-3)."
        )
        cmd.add_argument(
            "--grid", type=float, default=None, help="Grid spacing h (default: 1e-3)."
        )

    periodize = sub.add_parser(
        "periodize", parents=[common], help="Periodize triangle or ce_h."
    )
    periodize.add_argument("profile", help="Profile name.")
    periodize.add_argument("--m", type=int, default=None, help="Period (default: 1).")
    periodize.add_argument(
        "--max-index",
        type=int,
        default=None,
        help="Spectrum truncation (default: 10000).",
    )

    search = sub.add_parser(
        "search", parents=[common], help="LP search with cutting planes."
    )
    search.add_argument(
        "--lattice", type=str, default=None, help="z<n>, hex, cubic or a JSON file."
    )
    search.add_argument("--m", type=int, default=None, help="Lattice scale.")
    search.add_argument(
        "--max-freq", type=str, default="auto", help="Frequency radius or auto."
    )
    search.add_argument(
        "--grid", type=float, default=None, help="Constraint spacing (default: 0.01)."
    )
    search.add_argument(
        "--rounds", type=int, default=None, help="Cutting-plane rounds (default: 10)."
    )
    search.add_argument(
        "--tol", type=float, default=None, help="Certification tol (default: 1e-3)."
    )
    search.add_argument(
        "--cert-grid",
        type=float,
        default=None,
        help="Certification spacing (default: 1e-3).",
    )
    search.add_argument(
        "--formulation", choices=["dual", "primal"], default="dual", help="LP form."
    )

    report = sub.add_parser(
        "report", parents=[common], help="Summarise (n, m, sharp) tables."
    )
    report.add_argument("tables", nargs="+", help="CSV tables.")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """RunConfig from parsed arguments."""
    inputs: list[str] = []
    for key in ("name", "series", "profile"):
        if getattr(args, key, None) is not None:
            inputs.append(getattr(args, key))
    inputs.extend(getattr(args, "tables", None) or [])
    return RunConfig(
        command=args.command,
        inputs=tuple(inputs),
        m=getattr(args, "m", None),
        grid=getattr(args, "grid", None),
        tol=getattr(args, "tol", None),
        max_freq=getattr(args, "max_freq", None),
        rounds=getattr(args, "rounds", None),
        max_index=getattr(args, "max_index", None),
        cert_grid=getattr(args, "cert_grid", None),
        formulation=getattr(args, "formulation", "dual"),
        lattice=getattr(args, "lattice", None),
        seed=args.seed,
        jobs=args.jobs,
        out=args.out,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code.

    Args:
    ----
        argv (Sequence[str] | None): Arguments without the program name;
            ``sys.argv[1:]`` when None.

    Returns:
    -------
        int: 0 on success, 1 on a failed check, 2 on usage or input errors.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code) if isinstance(err.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=getattr(logging, args.log_level.upper()), format=LOG_FORMAT
    )
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except (ValueError, OSError) as err:
        logger.error("%s", err)
        print(f"spherelp {args.command}: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

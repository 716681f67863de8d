"""Subcommand implementations of the ``spherelp`` command line.

Every command returns an exit code: 0 when all checks pass, 1 when an analytic
check fails and 2 for usage errors or malformed input (the latter are raised
as exceptions and mapped in :mod:`spherelp.cli.main`).
"""

import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from spherelp import __version__
from spherelp._types import FloatArray
from spherelp.auxfn import (
    CosineSeries,
    certify_nonpositive,
    periodicity_residual,
    sample_dump,
    series_from_dict,
    series_to_dict,
    sharp,
    verify_dual_membership,
)
from spherelp.bounds import (
    bound_from_series,
    bounds_to_frame,
    format_report,
    sequence_bound,
    summarize_tables,
)
from spherelp.config import DEFAULTS
from spherelp.constructions import construct, parse_name
from spherelp.lattice import Lattice, lattice_from_dict, lattice_from_name
from spherelp.lpsearch import (
    Formulation,
    auto_radius,
    bound_from_solution,
    build_problem,
    problem_to_dict,
    refine,
    solution_series,
    solution_to_dict,
    solve,
)
from spherelp.periodization import (
    get_profile,
    periodize_direct,
    poisson_residual,
    profile_hat_zero,
)
from spherelp.utils import read_csv_tables, read_json, write_csv, write_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# number of random base points in the periodicity spot check
PERIODICITY_SAMPLES = 8
POISSON_SAMPLES = 100


@dataclass(frozen=True)
class RunConfig:
    """Flags of one command-line run.

    Attributes
    ----------
        command (str): Subcommand name.
        inputs (tuple[str, ...]): Input paths, construction or profile names.
        m (int | None): Lattice scale.
        grid (float | None): Grid spacing h.
        tol (float | None): Certification tolerance.
        max_freq (str | None): Frequency radius R, or ``auto``.
        rounds (int | None): Cutting-plane rounds.
        max_index (int | None): Spectrum truncation of ``periodize``.
        cert_grid (float | None): Certification spacing used by ``search``.
        formulation (str): LP formulation of ``search``.
        lattice (str | None): Lattice name or JSON path of ``search``.
        seed (int): Seed of every randomised check.
        jobs (int): Worker threads for certification sweeps.
        out (str | None): Output path.

    Raises
    ------
        ValueError: If a numeric flag is out of range.

    """

    command: str
    inputs: tuple[str, ...] = ()
    m: int | None = None
    grid: float | None = None
    tol: float | None = None
    max_freq: str | None = None
    rounds: int | None = None
    max_index: int | None = None
    cert_grid: float | None = None
    formulation: str = "dual"
    lattice: str | None = None
    seed: int = 0
    jobs: int = 1
    out: str | None = None

    def __post_init__(self) -> None:
        """Check ranges of the numeric flags."""
        if self.m is not None and self.m < 1:
            raise ValueError(f"--m must be at least 1, got {self.m}.")
        for name in ("grid", "tol", "cert_grid"):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise ValueError(f"--{name.replace('_', '-')} must be positive.")
        if self.rounds is not None and self.rounds < 0:
            raise ValueError(f"--rounds must be nonnegative, got {self.rounds}.")
        if self.max_index is not None and self.max_index < 0:
            raise ValueError(f"--max-index must be nonnegative, got {self.max_index}.")
        if self.jobs < 1:
            raise ValueError(f"--jobs must be at least 1, got {self.jobs}.")

    def to_dict(self) -> dict[str, Any]:
        """Flags, seed and package version, as embedded in every output."""
        doc = asdict(self)
        doc["inputs"] = list(self.inputs)
        doc["version"] = __version__
        return doc


def _input(cfg: RunConfig) -> str:
    if len(cfg.inputs) != 1:
        raise ValueError(
            f"{cfg.command} expects exactly one input, got {len(cfg.inputs)}."
        )
    return cfg.inputs[0]


def _load_series(path: str) -> CosineSeries:
    doc = read_json(path)
    # search outputs nest the series
    return series_from_dict(doc.get("series", doc))


def _emit_bound_table(cfg: RunConfig, frame: pd.DataFrame) -> None:
    if cfg.out is not None:
        write_csv(cfg.out, frame, cfg.to_dict())
        logger.info("wrote %s", cfg.out)


def cmd_construct(cfg: RunConfig) -> int:
    """Build a named construction, print its sharp ratio and per-m bound."""
    name = _input(cfg)
    base, m = parse_name(name, cfg.m)
    series = construct(base, m)
    source = base if m is None else f"{base}:{m}"
    bound = bound_from_series(series, source=source)
    print(f"construction {base} (m = {series.lattice.m})")
    print(f"sharp {sharp(series):.6f}")
    print(f"delta {bound.delta:.6f}  Delta {bound.Delta:.6f}  [{bound.flag}]")
    if cfg.out is not None:
        write_json(cfg.out, series_to_dict(series), cfg.to_dict())
        if cfg.grid is not None:
            # plot data on the fundamental cell, one sample per grid step
            samples = Path(cfg.out).with_suffix(".samples.csv")
            frame = sample_dump(series, _cell_samples(series, cfg.grid))
            write_csv(samples, frame, cfg.to_dict())
    return EXIT_OK


def _cell_samples(series: CosineSeries, h: float) -> FloatArray:
    edges = np.asarray(series.lattice.scaled_basis)
    counts = np.ceil(np.linalg.norm(edges, axis=0) / h).astype(int)
    axes = [np.arange(c) / c for c in counts]
    mesh = np.meshgrid(*axes, indexing="ij")
    coeffs = np.stack(mesh, axis=-1).reshape(-1, series.n)
    return coeffs @ edges.T


def _verify_series(
    series: CosineSeries, cfg: RunConfig
) -> tuple[bool, dict[str, Any]]:
    tol = cfg.tol if cfg.tol is not None else 1e-3
    h = cfg.grid if cfg.grid is not None else 1e-3
    membership = verify_dual_membership(series)
    rng = np.random.default_rng(cfg.seed)
    edges = np.asarray(series.lattice.scaled_basis)
    coeffs = rng.uniform(0.0, 1.0, size=(PERIODICITY_SAMPLES, series.n))
    base_points = coeffs @ edges.T
    periodicity = max(
        periodicity_residual(series, x, v) for x in base_points for v in edges.T
    )
    periodic_ok = periodicity <= DEFAULTS.derived_tol * max(1.0, series.value_at_zero)
    report = certify_nonpositive(series, tol, h, jobs=cfg.jobs)
    passed = bool(membership) and periodic_ok and report.passed
    doc = {
        "dual_membership": bool(membership),
        "max_dual_residual": float(np.max(membership.residuals)),
        "periodicity_residual": periodicity,
        "certification": report.to_dict(),
        "passed": passed,
    }
    print(f"dual membership      {'ok' if membership else 'FAILED'}")
    print(f"periodicity residual {periodicity:.3e}")
    print(
        f"certified bound      {report.certified_bound:.3e} (tol {tol:g}, "
        f"r = {report.covering_radius:.2e}, {report.samples_evaluated} cells)"
    )
    print("verification " + ("passed" if passed else "FAILED"))
    return passed, doc


def cmd_verify(cfg: RunConfig) -> int:
    """Check dual membership, periodicity and certified nonpositivity."""
    series = _load_series(_input(cfg))
    passed, doc = _verify_series(series, cfg)
    if cfg.out is not None:
        write_json(cfg.out, doc, cfg.to_dict())
    return EXIT_OK if passed else EXIT_FAILED


def cmd_bound(cfg: RunConfig) -> int:
    """Verify a series, then report its per-m density bound."""
    path = _input(cfg)
    series = _load_series(path)
    passed, _ = _verify_series(series, cfg)
    if not passed:
        return EXIT_FAILED
    tol = cfg.tol if cfg.tol is not None else 1e-3
    bound = bound_from_series(series, source=Path(path).stem, tolerance=tol)
    print(format_report([bound]), end="")
    _emit_bound_table(cfg, bounds_to_frame([bound]))
    return EXIT_OK


def cmd_periodize(cfg: RunConfig) -> int:
    """Periodize a profile and compare direct and spectral sums."""
    profile = get_profile(_input(cfg))
    m = cfg.m if cfg.m is not None else 1
    ok = True
    if profile.fourier is not None:
        max_index = cfg.max_index if cfg.max_index is not None else 10_000
        residual = poisson_residual(profile, m, max_index, POISSON_SAMPLES, cfg.seed)
        ok = residual.within_bounds
        print(f"poisson residual {residual.max_residual:.3e}")
        print(
            f"tail bounds      direct {residual.direct_tail:.3e}, "
            f"spectral {residual.spectral_tail:.3e}"
        )
    else:
        print(f"profile {profile.name} has no Fourier evaluator; Poisson check skipped")
    ratio = periodize_direct(profile, m, 0.0).value / profile_hat_zero(profile)
    print(f"sharp f_m(0)/f^(0) {ratio:.12f}")
    bound = sequence_bound([(m, ratio)], n=1, source=profile.name)
    _emit_bound_table(cfg, bounds_to_frame([bound]))
    return EXIT_OK if ok else EXIT_FAILED


def _search_lattice(cfg: RunConfig) -> Lattice:
    spec = cfg.lattice if cfg.lattice is not None else "z1"
    if Path(spec).is_file():
        lattice = lattice_from_dict(read_json(spec))
        return lattice if cfg.m is None else lattice.with_scale(cfg.m)
    return lattice_from_name(spec, cfg.m if cfg.m is not None else 1)


def _search_radius(cfg: RunConfig, lattice: Lattice) -> float:
    if cfg.max_freq is None or cfg.max_freq == "auto":
        return auto_radius(lattice)
    try:
        return float(cfg.max_freq)
    except ValueError:
        raise ValueError(
            f"--max-freq must be a number or 'auto', got {cfg.max_freq!r}."
        ) from None


def cmd_search(cfg: RunConfig) -> int:
    """Solve the discretised search and refine it with cutting planes."""
    if cfg.formulation not in ("dual", "primal"):
        raise ValueError(f"Unknown formulation {cfg.formulation!r}.")
    formulation: Formulation = "primal" if cfg.formulation == "primal" else "dual"
    lattice = _search_lattice(cfg)
    radius = _search_radius(cfg, lattice)
    h = cfg.grid if cfg.grid is not None else 0.01
    tol = cfg.tol if cfg.tol is not None else 1e-3
    cert_h = cfg.cert_grid if cfg.cert_grid is not None else 1e-3
    rounds = cfg.rounds if cfg.rounds is not None else 10

    problem = build_problem(lattice, radius, h)
    solution = solve(problem, formulation)
    result = refine(
        problem, solution, rounds, tol, cert_h, formulation=formulation, jobs=cfg.jobs
    )
    sol = result.solution
    print(
        f"frequencies {len(result.problem.frequencies)}, "
        f"constraint points {len(result.problem.points)}"
    )
    print(f"status {sol.status}")
    if sol.status != "optimal":
        return EXIT_FAILED
    print(f"objective {sol.objective:.6f}")
    bound = bound_from_solution(sol, lattice, source="search")
    print(f"delta {bound.delta:.6f}  Delta {bound.Delta:.6f}  [{bound.flag}]")
    if result.report is not None:
        print(f"certified bound {result.report.certified_bound:.3e} (tol {tol:g})")
    if cfg.out is not None:
        doc = {
            "problem": problem_to_dict(result.problem),
            "solution": solution_to_dict(sol),
            "series": series_to_dict(solution_series(result.problem, sol)),
            "objective_history": result.objective_history,
            "certification": (
                None if result.report is None else result.report.to_dict()
            ),
        }
        write_json(cfg.out, doc, cfg.to_dict())
    return EXIT_OK if rounds == 0 or result.certified else EXIT_FAILED


def cmd_report(cfg: RunConfig) -> int:
    """Merge (n, m, sharp) tables into a summary ending with the liminf rows."""
    if not cfg.inputs:
        raise ValueError("report expects at least one CSV table.")
    frame = read_csv_tables(cfg.inputs, required=("n", "m", "sharp"))
    bounds = summarize_tables(frame)
    print(format_report(bounds), end="")
    _emit_bound_table(cfg, bounds_to_frame(bounds))
    return EXIT_OK

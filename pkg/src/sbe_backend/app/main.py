"""
main.py - Entry point for the supercritical biharmonic toolkit

Subcommands: pc, spectrum, shoot, branch, oscillate, verdict, plot.
The JSON summary of each run goes to stdout, artifacts to --output-dir.
Exit codes: 0 success, 1 usage, 2 domain error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ValidationError

from ..analysis import extremal_regularity_verdict, monotone_below_check, oscillation_report
from ..output import emit_svg, read_csv, write_branch, write_json, write_orbit, write_profile, write_trajectory
from ..schemas.branches import DerivativeVanishes
from ..schemas.params import ProblemParams, RegimeTag
from ..schemas.summaries import (
    BranchSummary,
    OscillateSummary,
    PcSummary,
    PlotSummary,
    RunConfig,
    ShotSummary,
    SpectrumSummary,
)
from ..shooting import (
    branch_limit_lambda,
    build_branch,
    dirichlet_profile,
    estimate_lambda_sigma,
    find_gamma_bar,
    near_critical_shot,
    parse_offsets,
    shoot,
)
from ..theory import (
    classify_regime,
    critical_exponent_pc,
    critical_sobolev_exponent,
    eigenvalues,
    fixed_point_w0,
    nu2_eigenvector,
)
from ..utils.config_loader import load_defaults
from ..utils.errors import DomainError, NumericalError
from ..utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_NUMERICAL = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; usage errors are exit code 1 here."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _defaults_epilog() -> str:
    d = load_defaults()
    rows = [f"  {key} = {value}" for key, value in d.model_dump().items()]
    return "defaults (configs/defaults.yaml):\n" + "\n".join(rows)


def _offsets_arg(text: str) -> List[float]:
    try:
        return parse_offsets(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid offsets {text!r}: {exc}") from exc


def _epsilons_arg(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid epsilons {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    d = load_defaults()
    parser = _Parser(
        prog="sbe",
        description="Supercritical biharmonic equation: exponents, spectrum, shooting and branch diagnostics",
        epilog=_defaults_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--log-level", type=str, default=d.log_level, help="DEBUG, INFO, WARNING or ERROR")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(cmd: argparse.ArgumentParser, need_p: bool = True) -> None:
        cmd.add_argument("--n", type=int, required=True, help="Dimension (n >= 5)")
        if need_p:
            cmd.add_argument("--p", type=float, required=True, help="Supercritical exponent")
        cmd.add_argument("--tol", type=float, default=d.tol, help=f"Local error tolerance (default {d.tol})")
        cmd.add_argument("--output-dir", type=str, default=d.output_dir, help="Artifact directory")

    common(sub.add_parser("pc", help="Sobolev exponent and p_c(n)"), need_p=False)
    common(sub.add_parser("spectrum", help="N-coefficients, eigenvalues, w0 and the nu2 eigenvector"))
    cmd = sub.add_parser("shoot", help="Classify one shot and write its trajectory")
    common(cmd)
    cmd.add_argument("--gamma", type=float, required=True, help="U''(0) < 0")
    cmd.add_argument("--r-max", type=float, default=d.r_max, help=f"Radius horizon (default {d.r_max:g})")
    cmd = sub.add_parser("branch", help="Find gamma-bar and build the Dirichlet branch")
    common(cmd)
    cmd.add_argument("--offsets", type=_offsets_arg, default=d.offsets, help=f"Relative offsets from gamma-bar (default {d.offsets})")
    cmd.add_argument("--epsilons", type=_epsilons_arg, default=",".join(f"{e:g}" for e in d.epsilons))
    cmd.add_argument("--workers", type=int, default=d.workers)
    common(sub.add_parser("oscillate", help="Oscillation report of the near-critical orbit"))
    common(sub.add_parser("verdict", help="Regularity verdict for the extremal solution"))
    cmd = sub.add_parser("plot", help="SVG plot of an artifact CSV")
    cmd.add_argument("--input", type=str, required=True, help="CSV written by shoot/branch/oscillate")
    cmd.add_argument("--kind", choices=["trajectory", "bifurcation", "phase"], required=True)
    cmd.add_argument("--output-dir", type=str, default=d.output_dir)
    cmd.add_argument("--reference", type=float, default=None, help="Horizontal reference line")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        n=getattr(args, "n", None),
        p=getattr(args, "p", None),
        gamma=getattr(args, "gamma", None),
        tol=getattr(args, "tol", load_defaults().tol),
        r_max=getattr(args, "r_max", load_defaults().r_max),
        offsets=getattr(args, "offsets", None) or [],
        epsilons=getattr(args, "epsilons", None) or [],
        workers=getattr(args, "workers", 1),
        kind=getattr(args, "kind", None),
        input=getattr(args, "input", None),
        reference=getattr(args, "reference", None),
        output_dir=args.output_dir,
    )


def _params(config: RunConfig) -> ProblemParams:
    return ProblemParams(n=config.n, p=config.p)


# ─────────────────────────────────────────────────────────────
# Subcommands
# ─────────────────────────────────────────────────────────────

def _run_pc(config: RunConfig) -> BaseModel:
    return PcSummary(
        n=config.n,
        p_sobolev=critical_sobolev_exponent(config.n),
        p_c=critical_exponent_pc(config.n, tol=config.tol),
    )


def _run_spectrum(config: RunConfig) -> BaseModel:
    params = _params(config)
    spec = eigenvalues(params)
    return SpectrumSummary(
        n=params.n,
        p=params.p,
        N1=spec.N1,
        N2=spec.N2,
        N3=spec.N3,
        nu=[[z.real, z.imag] for z in spec.nu],
        complex_pair=spec.complex_pair,
        w0=fixed_point_w0(params).as_array().tolist(),
        nu2_eigenvector=nu2_eigenvector(params).as_array().tolist(),
        regime=classify_regime(params).tag.value,
    )


def _run_shoot(config: RunConfig) -> BaseModel:
    params = _params(config)
    shot = shoot(params, config.gamma, tol=config.tol, r_max=config.r_max)
    out = Path(config.output_dir)
    traj_path = write_trajectory(out / "trajectory.csv", shot.radial)
    orbit_path = None
    if shot.continuation is not None:
        orbit_path = str(write_orbit(out / "orbit.csv", shot.orbit()))
    cls = shot.shot_class
    radius = getattr(cls, "R1", None) or getattr(cls, "R_gamma", None) or getattr(cls, "r_max")
    summary = ShotSummary(
        n=params.n,
        p=params.p,
        gamma=config.gamma,
        classification=cls.tag,
        radius=radius,
        trajectory_csv=str(traj_path),
        orbit_csv=orbit_path,
    )
    if isinstance(cls, DerivativeVanishes):
        summary.U_at_R = cls.U_at_R
        summary.lambda_gamma = shot.lam
        summary.u0 = 1.0 / cls.U_at_R - 1.0
    return summary


def _run_branch(config: RunConfig) -> BaseModel:
    params = _params(config)
    gamma_bar = find_gamma_bar(params, tol=config.tol)
    branch = build_branch(params, config.offsets, gamma_bar=gamma_bar, tol=config.tol, workers=config.workers)
    out = Path(config.output_dir)
    write_branch(out / "branch.csv", branch)
    closest = branch.points[0]
    shot = shoot(params, closest.gamma, tol=config.tol, r_max=math.exp(load_defaults().s_horizon))
    write_profile(out / "profile.csv", dirichlet_profile(shot))

    lambda_sigma = estimate_lambda_sigma(params, config.epsilons or None, tol=config.tol)
    try:
        lambda_branch: Optional[float] = branch_limit_lambda(params, branch)
    except NumericalError as exc:
        logger.warning(f"branch-limit estimate unavailable: {exc}")
        lambda_branch = None
    summary = BranchSummary(
        gamma_bar=gamma_bar.value,
        bracket=[gamma_bar.lo, gamma_bar.hi],
        lambda_sigma=lambda_sigma,
        lambda_sigma_branch=lambda_branch,
        lambda_star_est=branch.lambda_star_est,
        points=len(branch.points),
        violations=branch.violations,
    )
    write_json(out / "summary.json", summary.model_dump())
    return summary


def _run_oscillate(config: RunConfig) -> BaseModel:
    params = _params(config)
    regime = classify_regime(params)
    gamma_bar = find_gamma_bar(params, tol=config.tol)
    shot = near_critical_shot(params, gamma_bar, tol=config.tol)
    orbit = shot.orbit()
    out = Path(config.output_dir)
    write_trajectory(out / "trajectory.csv", shot.radial)
    write_orbit(out / "orbit.csv", orbit)
    report = oscillation_report(params, orbit)
    monotone = monotone_below_check(params, orbit) if regime.tag == RegimeTag.MONOTONE else None
    return OscillateSummary(**report.model_dump(), regime=regime.tag.value, monotone_below=monotone)


def _run_verdict(config: RunConfig) -> BaseModel:
    return extremal_regularity_verdict(_params(config))


def _run_plot(config: RunConfig) -> BaseModel:
    table = read_csv(Path(config.input))
    path = Path(config.output_dir) / f"{Path(config.input).stem}_{config.kind}.svg"
    emit_svg(table, config.kind, path, title=f"{config.kind}: {Path(config.input).name}", reference=config.reference)
    return PlotSummary(kind=config.kind, path=str(path), points=len(table.rows))


_DISPATCH = {
    "pc": _run_pc,
    "spectrum": _run_spectrum,
    "shoot": _run_shoot,
    "branch": _run_branch,
    "oscillate": _run_oscillate,
    "verdict": _run_verdict,
    "plot": _run_plot,
}


def run(config: RunConfig) -> int:
    """Dispatch one validated run; prints the JSON summary and returns the exit code."""
    try:
        summary = _DISPATCH[config.command](config)
    except (DomainError, ValidationError) as exc:
        logger.error(f"{config.command}: {exc}")
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True))
        return EXIT_DOMAIN
    except NumericalError as exc:
        logger.error(f"{config.command}: {exc}")
        print(json.dumps(exc.to_dict(), sort_keys=True, default=str))
        return EXIT_NUMERICAL
    print(json.dumps(summary.model_dump(mode="json"), indent=2, sort_keys=True))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    get_logger(__name__, level=args.log_level)
    try:
        config = config_from_args(args)
    except (DomainError, ValidationError) as exc:
        logger.error(f"invalid configuration: {exc}")
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True))
        return EXIT_DOMAIN
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())

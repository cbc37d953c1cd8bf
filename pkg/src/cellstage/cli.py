"""Command-line surface.

    cellstage simulate --config F --out F
    cellstage transform --config F --x R --y R
    cellstage verify [--samples N] [--seed N]

Exit codes: 0 ok, 1 property failure, 2 usage/config error, 3 numerical
failure. All numbers are printed with 17 significant digits and a '.'
decimal separator regardless of locale; identical inputs give byte-identical
output. There is no environment-variable configuration.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import propcheck
from .dynamics import Trajectory, simulate
from .errors import DomainError, ParseError
from .frames import StagePoint, stage_to_camera, stage_to_image
from .scenario import ScenarioConfig, parse_config

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_ERROR = 3

CSV_HEADER = "t,x,y,xdot,ydot,xc,yc,u,v"


def _load_config(path: str) -> ScenarioConfig:
    return parse_config(Path(path).read_bytes())


def render_trajectory_csv(traj: Trajectory, config: ScenarioConfig) -> str:
    """CSV text with stage, camera, and image coordinates per sample."""
    rows = [CSV_HEADER]
    for state in traj:
        p = StagePoint(state.x, state.y)
        cam = stage_to_camera(p, config.calibration)
        img = stage_to_image(p, config.calibration)
        rows.append(
            ",".join(
                f"{value:.17g}"
                for value in (
                    state.t,
                    state.x,
                    state.y,
                    state.xdot,
                    state.ydot,
                    cam.xc,
                    cam.yc,
                    img.u,
                    img.v,
                )
            )
        )
    return "\n".join(rows) + "\n"


def cmd_simulate(config: ScenarioConfig, out_path: str) -> int:
    traj = simulate(
        config.masses, config.initial, config.wrench, config.dt, config.t_end
    )
    text = render_trajectory_csv(traj, config)
    with open(out_path, "w", newline="\n") as handle:
        handle.write(text)
    return EXIT_OK


def cmd_transform(config: ScenarioConfig, x: float, y: float) -> int:
    point = StagePoint(x, y)
    cam = stage_to_camera(point, config.calibration)
    img = stage_to_image(point, config.calibration)
    print(f"camera {cam.xc:.17g} {cam.yc:.17g}")
    print(f"image {img.u:.17g} {img.v:.17g}")
    return EXIT_OK


def cmd_verify(samples: int, seed: int) -> int:
    """Stream one report line (plus counterexample on failure) per property."""
    all_passed = True
    for property_id in propcheck.PROPERTIES:
        report = propcheck.check_theorem(property_id, samples=samples, seed=seed)
        print(propcheck.format_report(report))
        all_passed = all_passed and report.passed
    return EXIT_OK if all_passed else EXIT_PROPERTY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cellstage",
        description="Motion-stage transforms, dynamics, and property checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="integrate a scenario to CSV")
    p_sim.add_argument("--config", required=True, help="scenario config file")
    p_sim.add_argument("--out", required=True, help="output CSV path")

    p_tr = sub.add_parser("transform", help="map one stage point to camera/image")
    p_tr.add_argument("--config", required=True, help="scenario config file")
    p_tr.add_argument("--x", required=True, type=float, help="stage x coordinate")
    p_tr.add_argument("--y", required=True, type=float, help="stage y coordinate")

    p_ver = sub.add_parser("verify", help="run every registered property check")
    p_ver.add_argument("--samples", type=int, default=propcheck.DEFAULT_SAMPLES)
    p_ver.add_argument("--seed", type=int, default=propcheck.DEFAULT_SEED)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            return cmd_simulate(_load_config(args.config), args.out)
        if args.command == "transform":
            return cmd_transform(_load_config(args.config), args.x, args.y)
        if args.command == "verify":
            if args.samples < 1:
                print("error: --samples must be >= 1", file=sys.stderr)
                return EXIT_CONFIG_ERROR
            return cmd_verify(args.samples, args.seed)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except OverflowError as exc:
        print(f"error: simulation diverged: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL_ERROR
    raise AssertionError(f"unhandled command {args.command!r}")

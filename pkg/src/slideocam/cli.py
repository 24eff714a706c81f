"""Command-line entry point: ``slideocam <command> --config design.toml``.

Exit codes: 0 ok, 2 configuration error, 3 infeasible design, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import __version__
from .cam import sample_profile
from .config import DEFAULT_SAMPLES, ConfigError, ConfigIOError, DesignConfig, load_config
from .exporters import export_profile_csv, plot_svg, profile_csv, report_json
from .feasibility import check_constraints, require_feasible
from .kinetostatics import analyze, pressure_angle_branches
from .optimizer import TWO_CAM_ETAS, THREE_CAM_ETAS, minimize_z, select_compromise, sweep
from .params import ETA_CONVEX, DesignParams, InfeasibleDesignError, InvalidParamsError, SlideOCamError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INFEASIBLE = 3
EXIT_IO = 4


def _eta_list(text: str) -> List[float]:
    out = []
    for item in text.split(","):
        item = item.strip()
        if item in ("1/pi", "1/π"):
            out.append(ETA_CONVEX)
        elif item:
            try:
                out.append(float(item))
            except ValueError:
                raise argparse.ArgumentTypeError(f"not a number: {item!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty eta list")
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slideocam", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML design file (defaults: p=50, b=9.5, L=10, tau=1.2 N m)")
    common.add_argument("--cams", type=int, choices=(2, 3), help="override the cam count")
    common.add_argument("--out", help="output path (stdout when omitted, where possible)")

    p = sub.add_parser("profile", parents=[common], help="sample the cam or pitch curve to CSV")
    p.add_argument("--samples", type=int, help=f"number of samples (default {DEFAULT_SAMPLES})")
    p.add_argument("--curve", choices=("cam", "pitch"))

    sub.add_parser("check", parents=[common], help="evaluate the design constraints g1..g5")
    sub.add_parser("analyze", parents=[common], help="pressure angle, service factor, pin deflection")

    p = sub.add_parser("sweep", parents=[common], help="tabulate designs over a list of eta")
    p.add_argument("--eta-list", type=_eta_list, help="comma-separated eta values; '1/pi' allowed")

    p = sub.add_parser("optimize", parents=[common], help="minimize the pin objective over eta")
    p.add_argument("--eta-min", type=float, default=ETA_CONVEX)
    p.add_argument("--eta-max", type=float, default=0.8)
    p.add_argument("--max-deflection", type=float, help="also pick a compromise row (um)")
    p.add_argument("--min-service-factor", type=float, default=0.0, help="percent")

    p = sub.add_parser("plot", parents=[common], help="SVG of the profile or pressure angle")
    p.add_argument("--kind", choices=("profile", "pressure"), default="profile")
    p.add_argument("--samples", type=int)
    p.add_argument("--curve", choices=("cam", "pitch"))
    return parser


def _config(args) -> Optional[DesignConfig]:
    # feasibility is checked per command so that it maps to its own exit code
    return load_config(args.config, validate=False) if args.config else None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_config(args) -> None:
    if not args.config:
        raise ConfigError(f"'{args.command}' needs --config")


def run(args) -> int:
    cmd = args.command
    if cmd in ("profile", "check", "analyze", "plot"):
        _require_config(args)
        cfg = _config(args)
        params = cfg.design(args.cams)
        if cmd == "check":
            report = check_constraints(params)
            _emit(report_json(report, params), args.out)
            return EXIT_OK if report.feasible else EXIT_INFEASIBLE
        require_feasible(params)
        out = args.out or cfg.out
        if cmd == "profile":
            n = args.samples or cfg.samples
            profile = sample_profile(params, n, args.curve or cfg.curve)
            if out:
                export_profile_csv(profile, out)
            else:
                sys.stdout.write(profile_csv(profile))
            return EXIT_OK
        if cmd == "analyze":
            _emit(report_json(analyze(params), params), out)
            return EXIT_OK
        if not out:
            raise ConfigError("'plot' needs --out")
        if args.kind == "profile":
            data = sample_profile(params, args.samples or cfg.samples, args.curve or cfg.curve)
        else:
            data = pressure_angle_branches(params, args.samples or 256)
        plot_svg(data, out)
        return EXIT_OK

    cfg = _config(args)
    if cfg is None:
        base = DesignParams(eta=ETA_CONVEX, a4=1.0, cams=args.cams or 2)
        default_out = None
    else:
        base = cfg.base(args.cams)
        default_out = cfg.out
    if cmd == "sweep":
        etas = args.eta_list or (TWO_CAM_ETAS if base.cams == 2 else THREE_CAM_ETAS)
        table = sweep(etas, base)
        _emit(report_json(table, None), args.out or default_out)
        return EXIT_OK if all(r.feasible for r in table.rows) else EXIT_INFEASIBLE

    if cmd == "optimize":
        result = minimize_z(base, (args.eta_min, args.eta_max))
        lines = [
            f"eta     = {result.eta:.6f}",
            f"a4 (mm) = {result.a4:.4f}",
            f"a5 (mm) = {result.a5:.4f}",
            f"z       = {result.z:.2f}",
            f"active  = {', '.join(result.active_constraints) or '-'}",
        ]
        if args.max_deflection is not None:
            etas = TWO_CAM_ETAS if base.cams == 2 else THREE_CAM_ETAS
            row = select_compromise(sweep(etas, base), args.max_deflection, args.min_service_factor)
            lines.append(
                "compromise: none" if row is None else
                f"compromise: eta={row.eta:.4f} v_L_max={row.v_L_max:.2f} um SF={row.service_factor:.2f} %"
            )
        _emit("\n".join(lines) + "\n", args.out or default_out)
        return EXIT_OK
    raise AssertionError(cmd)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except ConfigIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, InvalidParamsError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InfeasibleDesignError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (SlideOCamError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front door.

Usage:
    moufanglab verify --loop octonion                      Run every check
    moufanglab verify --loop quaternion --checks corollary
    moufanglab verify --config run.json --format json
    moufanglab export mul-table --loop octonion
    moufanglab export structure-functions --loop quaternion --at 0.1,0,0
    moufanglab table --level 3

Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage or data
error.  Reports are deterministic for a fixed configuration (wall time aside).
"""

from __future__ import annotations

import argparse
import json
import sys

from .cayley import basis_table
from .loops import ChartDomainError, LoopChart, NotUnitError
from .malcev import structure_constants, structure_functions, tensor_to_json_dict
from .report import report_to_json, report_to_table
from .suite import CHECK_NAMES, LOOP_LEVEL, RunConfig, run_suite

_EXPORT_KINDS = ("mul-table", "structure-constants", "structure-functions")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moufanglab",
        description="Residual verification suite for analytic Moufang loops and their birepresentations.",
    )
    sub = parser.add_subparsers(dest="command")

    ver = sub.add_parser("verify", help="run the verification suite")
    ver.add_argument("--loop", choices=sorted(LOOP_LEVEL), default=None,
                     help="loop under test (default: octonion)")
    ver.add_argument("--checks", default=None,
                     help="comma-separated subset of: " + ",".join(CHECK_NAMES)
                     + " (default: all; empty string runs none)")
    ver.add_argument("--samples", type=int, default=None, help="sample count per check (default: 50)")
    ver.add_argument("--seed", type=int, default=None, help="master RNG seed (default: 42)")
    ver.add_argument("--radius", type=float, default=None,
                     help="sampling radius in (0, 0.7]; gle and lie-cartan auto-tighten to 0.35")
    ver.add_argument("--tol", type=float, default=None,
                     help="threshold for the lie-cartan/yamaguti/closure/rank checks (default: 1e-8)")
    ver.add_argument("--diff", choices=("jet", "fd", "both"), default=None,
                     help="derivative backend; 'both' adds a jet/fd discrepancy check (default)")
    ver.add_argument("--format", choices=("json", "table"), default=None,
                     help="report format (default: table)")
    ver.add_argument("--exhaustive-basis", action="store_true", default=None,
                     help="run yamaguti checks on all basis tuples instead of random arguments")
    ver.add_argument("--birep-samples", default=None,
                     help="JSON sample-table birepresentation to axiom-check alongside 'birep'")
    ver.add_argument("--config", default=None, help="JSON file mirroring the run configuration; flags override")
    ver.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")

    exp = sub.add_parser("export", help="export tables and tensors as JSON")
    exp.add_argument("what", choices=_EXPORT_KINDS)
    exp.add_argument("--loop", choices=sorted(LOOP_LEVEL), default="octonion")
    exp.add_argument("--at", default=None,
                     help="comma-separated chart coordinates of the base point (structure-functions)")
    exp.add_argument("--output", "-o", default=None, help="write here instead of stdout")

    tab = sub.add_parser("table", help="print a basis multiplication table")
    tab.add_argument("--level", type=int, default=3, choices=(1, 2, 3, 4))
    tab.add_argument("--output", "-o", default=None)

    return parser


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _write(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config_from_args(args) -> RunConfig:
    merged = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            file_cfg = json.load(fh)
        if not isinstance(file_cfg, dict):
            raise ValueError("config file must hold a JSON object")
        merged.update(file_cfg)
    overrides = {
        "loop": args.loop,
        "checks": None if args.checks is None else [c for c in args.checks.split(",") if c],
        "samples": args.samples,
        "seed": args.seed,
        "radius": args.radius,
        "tol": args.tol,
        "diff": args.diff,
        "format": args.format,
        "exhaustive_basis": args.exhaustive_basis,
        "birep_samples": args.birep_samples,
    }
    merged.update({k: v for k, v in overrides.items() if v is not None})
    try:
        cfg = RunConfig(**merged)
    except TypeError as exc:
        raise ValueError(f"bad configuration key: {exc}") from exc
    cfg.validate()
    return cfg


def cmd_verify(args) -> int:
    try:
        cfg = _config_from_args(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        return _usage_error(str(exc))
    try:
        report = run_suite(cfg)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        return _usage_error(str(exc))
    text = report_to_json(report) if cfg.format == "json" else report_to_table(report)
    _write(text, args.output)
    return 0 if report.all_passed else 1


def cmd_export(args) -> int:
    level = LOOP_LEVEL[args.loop]
    try:
        if args.what == "mul-table":
            doc = basis_table(level).to_json_dict()
        elif args.what == "structure-constants":
            doc = tensor_to_json_dict(structure_constants(LoopChart(level)).tensor)
        else:
            chart = LoopChart(level)
            if args.at is None:
                return _usage_error("structure-functions needs --at g1,g2,...")
            try:
                point = [float(tok) for tok in args.at.split(",")]
            except ValueError:
                return _usage_error(f"--at {args.at!r} is not a comma-separated coordinate list")
            if len(point) != chart.r:
                return _usage_error(f"--at needs {chart.r} coordinates for the {args.loop} loop")
            doc = tensor_to_json_dict(structure_functions(chart, point).tensor)
    except (ChartDomainError, NotUnitError) as exc:
        return _usage_error(str(exc))
    _write(json.dumps(doc, indent=2) + "\n", args.output)
    return 0


def cmd_table(args) -> int:
    doc = basis_table(args.level).to_json_dict()
    _write(json.dumps(doc, indent=2) + "\n", args.output)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 0
    if args.command == "verify":
        code = cmd_verify(args)
    elif args.command == "export":
        code = cmd_export(args)
    else:
        code = cmd_table(args)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Frequencies are given as f = omega/2pi (MHz for couplings and detunings, GHz
for the common qubit energy) and converted to rad/ns once, here.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fullspace, grover, resources, schedule
from .units import ghz_to_rad_ns, mhz_to_rad_ns


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _ratios(text: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad ratio list {text!r}") from exc
    if not values or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("ratios must be a non-empty comma-separated list of values >= 0")
    return values


def _add_plan_args(p, g_default=None, deps_default=None):
    p.add_argument("--n", type=_positive_int, required=True, help="search size = qubit count")
    p.add_argument("--marked", type=_positive_int, default=1, help="1-based marked item (default 1)")
    p.add_argument("--g-mhz", type=_positive_float, default=g_default, required=g_default is None,
                   help="coupling scale g/2pi in MHz")
    p.add_argument("--deps-mhz", type=_positive_float, default=deps_default, required=deps_default is None,
                   help="oracle detuning delta_eps/2pi in MHz")
    p.add_argument("--iterations", type=int, default=None, help="override the Grover iteration count")


def _add_output_args(p, formats, default):
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", default=None, help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sesqc", description="Single-excitation-subspace Grover toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grover-run", help="run the SES Grover search")
    _add_plan_args(p)
    p.add_argument("--include-state", action="store_true", help="include final amplitudes in the output")
    _add_output_args(p, ["json"], "json")

    p = sub.add_parser("grover-schedule", help="emit the compiled control schedule document")
    _add_plan_args(p)
    p.add_argument("--epsilon-base-ghz", type=_positive_float, default=5.0)
    _add_output_args(p, ["json"], "json")

    p = sub.add_parser("leakage-sweep", help="full-space leakage versus g/epsilon")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--marked", type=_positive_int, default=1)
    p.add_argument("--ratios", type=_ratios, required=True, help="comma-separated g/epsilon values")
    p.add_argument("--deps-mhz", type=_positive_float, default=100.0)
    p.add_argument("--epsilon-base-ghz", type=_positive_float, default=5.0)
    p.add_argument("--samples", type=_positive_int, default=16, help="leakage samples per segment")
    p.add_argument("--workers", type=_positive_int, default=1)
    _add_output_args(p, ["csv", "json"], "csv")

    p = sub.add_parser("spectrum-check", help="verify the closed-form spectrum of the preparation Hamiltonian")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--g-mhz", type=_positive_float, required=True)
    _add_output_args(p, ["json", "table"], "json")

    p = sub.add_parser("compare-resources", help="SES versus gate-based resources")
    _add_plan_args(p, g_default=1.25, deps_default=100.0)
    _add_output_args(p, ["table", "json"], "table")
    return parser


def _plan(args) -> grover.GroverPlan:
    return grover.GroverPlan(args.n, args.marked, mhz_to_rad_ns(args.g_mhz), mhz_to_rad_ns(args.deps_mhz),
                             args.iterations)


def _render(args) -> tuple[str, int]:
    if args.command == "grover-run":
        return json.dumps(grover.run_grover(_plan(args)).to_dict(args.include_state), indent=2), 0
    if args.command == "grover-schedule":
        sched = schedule.compile_grover_schedule(_plan(args), ghz_to_rad_ns(args.epsilon_base_ghz))
        return json.dumps(schedule.export_schedule(sched), indent=2), 0
    if args.command == "leakage-sweep":
        # g is set per ratio point; the placeholder only has to be valid
        plan = grover.GroverPlan(args.n, args.marked, 1.0, mhz_to_rad_ns(args.deps_mhz))
        points = fullspace.leakage_sweep(plan, ghz_to_rad_ns(args.epsilon_base_ghz), args.ratios,
                                         args.samples, args.workers)
        if args.format == "json":
            return fullspace.sweep_to_json(points, indent=2), 0
        return fullspace.sweep_to_csv(points).rstrip("\n"), 0
    if args.command == "spectrum-check":
        report = grover.verify_spectrum(args.n, mhz_to_rad_ns(args.g_mhz))
        status = 0 if report.ok else 1
        if args.format == "table":
            lines = [
                f"n                       {report.n}",
                f"g (rad/ns)              {report.g!r}",
                f"max eigenvalue error    {report.eigenvalue_error:.3e}",
                f"S off-diagonal residual {report.s_offdiag_residual:.3e}",
                f"ok                      {report.ok}",
            ]
            return "\n".join(lines), status
        return json.dumps(report.to_dict(), indent=2), status
    if args.command == "compare-resources":
        report = resources.compare_resources(_plan(args))
        return (report.to_json(indent=2) if args.format == "json" else report.to_table()), 0
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        text, status = _render(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return status

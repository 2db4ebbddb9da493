"""Command-line front end: tables, CSV, JSON, and rendered figures.

Subcommands: kernel, proportion, xi0, embedding, extremizer.  Exit codes:
0 success, 2 argument error (argparse), 3 domain error (unsupported
group/delta combination), 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .debranges import xi0 as compute_xi0
from .densities import KernelSpace, SymmetryGroup, sharp_group
from .embeddings import oracle_eta_extremes, sharp_constants
from .errors import DomainError, NumericalError
from .extremal import (
    curve_max,
    nonvanishing_proportion,
    one_delta_extremizer,
    one_delta_value,
    proportion_curve,
    two_delta_extremizer,
    two_delta_value,
)
from .fredholm import kernel_via_oracle
from .kernels import kernel

XI0_TABLE_DELTAS = (1.0, 4.0 / 3.0, 1.5, 2.0)

GROUP_NAMES = [g.value for g in SymmetryGroup]


def _parse_group(text: str) -> SymmetryGroup:
    try:
        return SymmetryGroup.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parse_complex(text: str) -> complex:
    """Accept 'a+bi' literals with decimal a, b (also plain reals)."""
    cleaned = text.strip().replace(" ", "").replace("I", "i").replace("j", "i")
    try:
        return complex(cleaned.replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse complex literal {text!r}")


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive value, got {text}")
    return value


def format_value(value, digits: int) -> str:
    """Fixed-point float formatting; exact zero prints as '0'."""
    if isinstance(value, str):
        return value
    v = float(value)
    if v == 0.0:
        return "0"
    return f"{v:.{digits}f}"


@dataclass
class Report:
    command: str
    params: dict
    columns: list[str]
    rows: list[tuple]
    summary: Optional[dict] = None
    plot: Optional[dict] = None  # x, series, xlabel, ylabel, marker


def _render_csv(report: Report, digits: int) -> str:
    lines = [",".join(report.columns)]
    for row in report.rows:
        lines.append(",".join(format_value(v, digits) for v in row))
    return "\n".join(lines) + "\n"


def _render_table(report: Report, digits: int) -> str:
    cells = [list(report.columns)] + [
        [format_value(v, digits) for v in row] for row in report.rows
    ]
    widths = [max(len(r[j]) for r in cells) for j in range(len(report.columns))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    if report.summary:
        lines.append("")
        for key, val in report.summary.items():
            lines.append(f"{key} = {format_value(val, digits)}")
    return "\n".join(lines) + "\n"


def _render_json(report: Report) -> str:
    payload = {
        "command": report.command,
        "params": report.params,
        "columns": report.columns,
        "rows": [list(row) for row in report.rows],
    }
    if report.summary:
        payload["summary"] = report.summary
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit(report: Report, args) -> None:
    if args.format == "json":
        text = _render_json(report)
    elif args.format == "table":
        text = _render_table(report, args.digits)
    else:
        text = _render_csv(report, args.digits)
    if args.output:
        with open(args.output, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    if getattr(args, "plot", None) and report.plot:
        from .plots import render_line_plot

        render_line_plot(args.plot, **report.plot)


def _cmd_kernel(args) -> Report:
    space = KernelSpace(args.group, args.delta)
    value = kernel(space, args.w, args.z)
    columns = ["re", "im"]
    row = [float(np.real(value)), float(np.imag(value))]
    params = {
        "group": args.group.value,
        "delta": args.delta,
        "w": str(args.w),
        "z": str(args.z),
    }
    if args.oracle:
        oracle = kernel_via_oracle(args.group, args.delta, args.w, args.z, n=args.n)
        columns += ["oracle_re", "oracle_im", "abs_diff"]
        row += [
            float(np.real(oracle)),
            float(np.imag(oracle)),
            float(abs(oracle - value)),
        ]
        params["n"] = args.n
    return Report("kernel", params, columns, [tuple(row)])


def _cmd_proportion(args) -> Report:
    space = KernelSpace(args.group, args.delta)
    params = {"group": args.group.value, "delta": args.delta}
    summary = None
    plot = None
    if args.t is not None:
        rows = [(args.t, nonvanishing_proportion(space, args.t))]
        params["t"] = args.t
    else:
        if args.step <= 0:
            raise argparse.ArgumentTypeError("--step must be positive without --t")
        curve = proportion_curve(space, args.t_min, args.t_max, args.step)
        rows = list(zip(curve.ts.tolist(), curve.ps.tolist()))
        params.update({"t_min": args.t_min, "t_max": args.t_max, "step": args.step})
        marker = None
        if args.find_max:
            t_star, p_star = curve_max(curve)
            rows.append((t_star, p_star))
            summary = {"t_max": t_star, "p_max": p_star}
            marker = (t_star, p_star)
        plot = {
            "x": curve.ts.tolist(),
            "series": {f"{args.group.value}, delta={args.delta:g}": curve.ps.tolist()},
            "xlabel": "t",
            "ylabel": "non-vanishing proportion",
            "marker": marker,
        }
    return Report("proportion", params, ["t", "p"], rows, summary, plot)


def _cmd_xi0(args) -> Report:
    if args.group is not None:
        if args.delta is None:
            raise argparse.ArgumentTypeError("--group requires --delta")
        result = compute_xi0(args.group, args.delta)
        rows = [(args.group.value, args.delta, result.xi0)]
        params = {"group": args.group.value, "delta": args.delta}
        return Report("xi0", params, ["group", "delta", "xi0"], rows)
    # full table: one xi0 solve per sharp class, reported for all five groups
    deltas = XI0_TABLE_DELTAS if args.delta is None else (args.delta,)
    cache: dict[tuple[SymmetryGroup, float], float] = {}
    rows = []
    for group in SymmetryGroup:
        for delta in deltas:
            key = (sharp_group(group), delta)
            if key not in cache:
                cache[key] = compute_xi0(key[0], delta).xi0
            rows.append((group.value, delta, cache[key]))
    plot = None
    if args.plot:
        sweep = np.linspace(1.0, 2.0, 26)
        series = {}
        for cls in (SymmetryGroup.SO_EVEN, SymmetryGroup.U, SymmetryGroup.SP):
            series[f"sharp class {cls.value}"] = [
                compute_xi0(cls, float(d)).xi0 for d in sweep
            ]
        plot = {
            "x": sweep.tolist(),
            "series": series,
            "xlabel": "delta",
            "ylabel": "xi0",
        }
    return Report("xi0", {"deltas": ",".join(f"{d:g}" for d in deltas)},
                  ["group", "delta", "xi0"], rows, None, plot)


def _cmd_embedding(args) -> Report:
    groups = list(SymmetryGroup) if args.group is None else [args.group]
    columns = ["group", "delta", "eta_minus", "eta_plus", "c_minus", "c_plus"]
    if args.oracle:
        columns += ["lambda_min", "lambda_max"]
    rows = []
    for group in groups:
        consts = sharp_constants(group, args.delta)
        row = [
            group.value,
            args.delta,
            consts.eta_minus,
            consts.eta_plus,
            consts.c_minus,
            consts.c_plus,
        ]
        if args.oracle:
            if group in (SymmetryGroup.U, SymmetryGroup.O):
                raise DomainError(
                    "the eigenvalue oracle covers Sp, SO(even), SO(odd) only"
                )
            lam_min, lam_max = oracle_eta_extremes(group, args.delta, n=args.n)
            row += [lam_min, lam_max]
        rows.append(tuple(row))
    params = {
        "group": "all" if args.group is None else args.group.value,
        "delta": args.delta,
    }
    if args.oracle:
        params["n"] = args.n
    return Report("embedding", params, columns, rows)


def _cmd_extremizer(args) -> Report:
    space = KernelSpace(args.group, args.delta)
    xs = np.arange(-args.x_max, args.x_max + args.step / 2.0, args.step)
    if args.one_delta:
        values = one_delta_extremizer(space, args.t, xs)
        optimum = one_delta_value(space, args.t)
    else:
        values = two_delta_extremizer(space, args.t, xs)
        optimum = two_delta_value(space, args.t)
    columns = ["x", "M"]
    rows = [(float(x), float(m)) for x, m in zip(xs, values)]
    summary = None
    if args.with_integral:
        columns.append("integral")
        rows = [row + (optimum,) for row in rows]
        summary = {"integral": optimum}
    plot = {
        "x": xs.tolist(),
        "series": {f"{args.group.value}, delta={args.delta:g}, t={args.t:g}":
                   np.asarray(values).tolist()},
        "xlabel": "x",
        "ylabel": "M(x)",
    }
    params = {
        "group": args.group.value,
        "delta": args.delta,
        "t": args.t,
        "x_max": args.x_max,
        "step": args.step,
        "kind": "one-delta" if args.one_delta else "two-delta",
    }
    return Report("extremizer", params, columns, rows, summary, plot)


def _add_common(parser: argparse.ArgumentParser, plot: bool = False) -> None:
    parser.add_argument(
        "--format", choices=("csv", "table", "json"), default="csv",
        help="output format (default csv)",
    )
    parser.add_argument("--output", help="write the report to this file")
    parser.add_argument(
        "--digits", type=int, default=15,
        help="decimal places in csv/table output (default 15)",
    )
    if plot:
        parser.add_argument("--plot", help="render the report as a PNG figure")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symkern",
        description="Reproducing kernels of the five symmetry-type Hilbert "
        "spaces and the extremal quantities attached to them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel", help="evaluate K(w, z)")
    p.add_argument("--group", type=_parse_group, required=True, metavar="GROUP",
                   help="one of: " + ", ".join(GROUP_NAMES))
    p.add_argument("--delta", type=_positive_float, required=True)
    p.add_argument("--w", type=_parse_complex, required=True)
    p.add_argument("--z", type=_parse_complex, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="also evaluate the integral-equation oracle")
    p.add_argument("--n", type=int, default=512, help="oracle grid size")
    _add_common(p)
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("proportion", help="non-vanishing proportion curve P(t)")
    p.add_argument("--group", type=_parse_group, required=True, metavar="GROUP",
                   help="one of: " + ", ".join(GROUP_NAMES))
    p.add_argument("--delta", type=_positive_float, required=True)
    p.add_argument("--t", type=float, default=None, help="single height t")
    p.add_argument("--t-min", type=_positive_float, default=1e-3)
    p.add_argument("--t-max", type=_positive_float, default=2.0)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--find-max", action="store_true",
                   help="append the refined curve maximum as a final row")
    _add_common(p, plot=True)
    p.set_defaults(func=_cmd_proportion)

    p = sub.add_parser("xi0", help="first low-lying zero bound xi0")
    p.add_argument("--group", type=_parse_group, default=None, metavar="GROUP",
                   help="one of: " + ", ".join(GROUP_NAMES))
    p.add_argument("--delta", type=_positive_float, default=None)
    _add_common(p, plot=True)
    p.set_defaults(func=_cmd_xi0)

    p = sub.add_parser("embedding", help="sharp embedding constants")
    p.add_argument("--group", type=_parse_group, default=None, metavar="GROUP",
                   help="one of: " + ", ".join(GROUP_NAMES))
    p.add_argument("--delta", type=_positive_float, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="append the eigenvalue-oracle extremes")
    p.add_argument("--n", type=int, default=1000, help="oracle grid size")
    _add_common(p)
    p.set_defaults(func=_cmd_embedding)

    p = sub.add_parser("extremizer", help="one- or two-delta extremal function")
    p.add_argument("--group", type=_parse_group, required=True, metavar="GROUP",
                   help="one of: " + ", ".join(GROUP_NAMES))
    p.add_argument("--delta", type=_positive_float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--x-max", type=_positive_float, default=5.0)
    p.add_argument("--step", type=_positive_float, default=0.01)
    p.add_argument("--one-delta", action="store_true",
                   help="emit the one-point extremizer instead of the two-point one")
    p.add_argument("--with-integral", action="store_true",
                   help="append the optimal-value column")
    _add_common(p, plot=True)
    p.set_defaults(func=_cmd_extremizer)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))  # exits 2
    except DomainError as exc:
        print(f"symkern: domain error: {exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"symkern: numerical failure: {exc}", file=sys.stderr)
        return 4
    _emit(report, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())

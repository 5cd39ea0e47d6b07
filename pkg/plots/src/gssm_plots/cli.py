"""Command line entry: gssm-plots plot --in <dir> --out <dir> --kind <k>."""

from __future__ import annotations

import argparse
import sys

from . import aggregate, frames, render

# default grouping key per figure kind; --group-by overrides
KIND_KEYS = {"curves": "encoder", "ablation": "policy_mode", "sweep": "dim_lat"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gssm-plots")
    sub = parser.add_subparsers(dest="command", required=True)
    plot = sub.add_parser("plot", help="render figures from run logs")
    plot.add_argument("--in", dest="in_dir", required=True,
                      help="directory of run directories (or a single run)")
    plot.add_argument("--out", required=True, help="where to write figures")
    plot.add_argument("--kind", required=True,
                      choices=["curves", "ablation", "sweep", "bounds"])
    plot.add_argument("--group-by", help="config key to group runs by")
    plot.add_argument("--metric", default="avg_return_normalized",
                      help="train-log column to aggregate")
    return parser


def _report_skipped(missing) -> None:
    for run_id, reason in missing:
        print(f"skipped {run_id}: {reason}", file=sys.stderr)


def _plot_curves(args) -> int:
    loaded, missing = frames.load_runs(args.in_dir, "train_log.csv")
    _report_skipped(missing)
    if not loaded:
        print(f"no runs with train_log.csv under {args.in_dir}", file=sys.stderr)
        return 2
    key = args.group_by or KIND_KEYS[args.kind]
    groups, unlabeled = aggregate.group_frames(loaded, key)
    _report_skipped(unlabeled)
    if not groups:
        print(f"empty selection: no run has config key {key!r}", file=sys.stderr)
        return 2
    if args.kind == "ablation" and len(groups) < 2:
        print(f"missing group: need at least two {key!r} values, "
              f"found {sorted(groups)}", file=sys.stderr)
        return 2
    stats = aggregate.curve_stats(groups, args.metric)
    aggregate.write_stats(f"{args.out}/{args.kind}_stats.csv",
                          aggregate.STATS_HEADER, stats)
    fig = render.curve_figure(stats, args.metric, f"{args.kind} by {key}")
    written = render.save(fig, args.out, args.kind)
    for path in written + [f"{args.out}/{args.kind}_stats.csv"]:
        print(f"wrote {path}")
    return 0


def _plot_bounds(args) -> int:
    loaded, missing = frames.load_runs(args.in_dir, "bound_report.csv")
    _report_skipped(missing)
    if not loaded:
        print(f"no runs with bound_report.csv under {args.in_dir}",
              file=sys.stderr)
        return 2
    stats = aggregate.bound_stats(loaded)
    aggregate.write_stats(f"{args.out}/bounds_stats.csv",
                          aggregate.BOUND_STATS_HEADER, stats)
    fig = render.bound_figure(stats, loaded)
    written = render.save(fig, args.out, "bounds")
    for path in written + [f"{args.out}/bounds_stats.csv"]:
        print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.kind == "bounds":
        return _plot_bounds(args)
    return _plot_curves(args)


if __name__ == "__main__":
    raise SystemExit(main())

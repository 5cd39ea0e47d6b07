"""Aggregate statistics recomputed from raw per-iteration rows.

Nothing here trusts pre-aggregated columns; means and deviations are
rebuilt from the individual CSV rows every time, and the output row
order is fully determined by (group, iteration) so identical inputs
give byte-identical sidecar files.
"""

from __future__ import annotations

import csv
from pathlib import Path
from statistics import fmean, pstdev

from .frames import RunFrame

STATS_HEADER = ["group", "iteration", "mean", "std", "n"]
BOUND_STATS_HEADER = ["run_id", "pairs", "violations",
                      "worst_gap_ratio", "worst_regret_ratio"]


def run_curve(frame: RunFrame, metric: str) -> dict[int, float]:
    """Per-iteration mean of a train-log metric over the run's task rows."""
    per: dict[int, list[float]] = {}
    for row in frame.rows:
        per.setdefault(int(row["iteration"]), []).append(float(row[metric]))
    return {it: fmean(vals) for it, vals in sorted(per.items())}


def group_frames(frames: list[RunFrame], key: str):
    """Frames bucketed by a config value; unlabeled ones reported, not dropped."""
    groups: dict[str, list[RunFrame]] = {}
    unlabeled: list[tuple[str, str]] = []
    for frame in frames:
        if key in frame.config:
            groups.setdefault(f"{key}={frame.config[key]}", []).append(frame)
        else:
            unlabeled.append((frame.run_id, f"{CONFIG_HINT} lacks {key!r}"))
    return {label: groups[label] for label in sorted(groups)}, unlabeled


CONFIG_HINT = "effective_config.toml"


def curve_stats(groups: dict[str, list[RunFrame]], metric: str) -> list[dict]:
    """Mean/std across runs at each iteration, one row per (group, iteration)."""
    out = []
    for label, frames in groups.items():
        curves = [run_curve(f, metric) for f in frames]
        for it in sorted(set().union(*curves)):
            vals = [c[it] for c in curves if it in c]
            out.append({
                "group": label,
                "iteration": it,
                "mean": fmean(vals),
                "std": pstdev(vals) if len(vals) > 1 else 0.0,
                "n": len(vals),
            })
    return out


def _ratio(measured: float, bound: float) -> float:
    return measured / bound if bound > 0 else 0.0


def bound_stats(frames: list[RunFrame]) -> list[dict]:
    """Per run: pair count, violation total, worst measured/bound ratios."""
    out = []
    for frame in sorted(frames, key=lambda f: f.run_id):
        rows = frame.rows
        out.append({
            "run_id": frame.run_id,
            "pairs": len(rows),
            "violations": sum(int(r["violations"]) for r in rows),
            "worst_gap_ratio": max(
                (_ratio(r["max_gap"], r["lemma_bound"]) for r in rows),
                default=0.0),
            "worst_regret_ratio": max(
                (_ratio(r["regret"], r["theorem_bound"]) for r in rows),
                default=0.0),
        })
    return out


def write_stats(path: str | Path, header: list[str], rows: list[dict]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(row[c]) for c in header])


def _fmt(value) -> str:
    # repr keeps the shortest round-trip form, so reruns diff clean
    if isinstance(value, float):
        return repr(value)
    return str(value)

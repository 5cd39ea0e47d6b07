"""Loading and schema-checking of run artifacts.

A "run" is a directory holding the CSV logs written by the trainer plus
effective_config.toml. Runs that cannot be loaded are returned as
(run_id, reason) pairs so callers can report them; they are never
silently dropped.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # 3.10
    import tomli as tomllib

# Versioned schemas. A header mismatch means the producing code and this
# reader disagree about the format, which must fail loudly.
TRAIN_LOG_HEADER = ["iteration", "task_id", "elbo", "nll", "kl",
                    "one_step_mse", "avg_return_normalized", "policy_loss",
                    "value_loss", "entropy", "grad_norm"]
TEST_RESULTS_HEADER = ["task_id", "m0", "m1", "mean_return", "std_return",
                       "one_step_mse", "adaptation_steps", "diverged",
                       "wall_clock_s"]
BOUND_REPORT_HEADER = ["pair_id", "eps", "max_gap", "lemma_bound", "regret",
                       "theorem_bound", "violations"]

TABLES = {
    "train_log.csv": TRAIN_LOG_HEADER,
    "test_results.csv": TEST_RESULTS_HEADER,
    "bound_report.csv": BOUND_REPORT_HEADER,
}

CONFIG_NAME = "effective_config.toml"


class SchemaError(ValueError):
    """CSV header does not match the pinned schema."""


@dataclass
class RunFrame:
    run_id: str
    config: dict
    rows: list[dict]


def _parse(text: str):
    # ints stay ints so iteration keys sort and group exactly
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def load_table(path: str | Path, expected: list[str]) -> list[dict]:
    with Path(path).open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != expected:
            raise SchemaError(f"{path}: header {header} != expected {expected}")
        return [dict(zip(expected, (_parse(v) for v in row))) for row in reader]


def load_config(run_dir: Path) -> dict:
    path = run_dir / CONFIG_NAME
    if not path.exists():
        return {}
    return tomllib.loads(path.read_text())


def discover(root: str | Path, table: str) -> list[Path]:
    """Run directories under root; root itself counts if it holds the table."""
    root = Path(root)
    if (root / table).exists():
        return [root]
    return sorted(p for p in root.iterdir() if p.is_dir())


def load_runs(root: str | Path, table: str):
    """All loadable runs plus (run_id, reason) for every one that is not."""
    expected = TABLES[table]
    frames: list[RunFrame] = []
    missing: list[tuple[str, str]] = []
    for run_dir in discover(root, table):
        path = run_dir / table
        if not path.exists():
            missing.append((run_dir.name, f"no {table}"))
            continue
        try:
            rows = load_table(path, expected)
        except SchemaError as err:
            missing.append((run_dir.name, str(err)))
            continue
        frames.append(RunFrame(run_dir.name, load_config(run_dir), rows))
    return frames, missing

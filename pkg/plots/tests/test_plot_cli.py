import csv

from gssm_plots import cli

from plot_fixtures import make_bound_run, make_run


def _curves_fixture(root):
    for s, enc in [(0, "gssm"), (1, "gssm"), (0, "mean-pool"), (1, "mean-pool")]:
        make_run(root, f"{enc}-s{s}", [f"encoder = \"{enc}\""],
                 [[-1.0 + 0.01 * s], [-0.5 + 0.01 * s]])


def test_curves_end_to_end(tmp_path, capsys):
    runs, out = tmp_path / "runs", tmp_path / "fig"
    _curves_fixture(runs)
    rc = cli.main(["plot", "--in", str(runs), "--out", str(out),
                   "--kind", "curves"])
    assert rc == 0
    assert (out / "curves.png").exists() and (out / "curves.svg").exists()
    rows = list(csv.DictReader((out / "curves_stats.csv").open()))
    assert {r["group"] for r in rows} == {"encoder=gssm", "encoder=mean-pool"}
    assert all(r["n"] == "2" for r in rows)
    assert "wrote" in capsys.readouterr().out


def test_rerun_gives_identical_stats(tmp_path):
    runs, out = tmp_path / "runs", tmp_path / "fig"
    _curves_fixture(runs)
    args = ["plot", "--in", str(runs), "--out", str(out), "--kind", "curves"]
    assert cli.main(args) == 0
    first = (out / "curves_stats.csv").read_bytes()
    assert cli.main(args) == 0
    assert (out / "curves_stats.csv").read_bytes() == first


def test_missing_runs_get_reported(tmp_path, capsys):
    runs = tmp_path / "runs"
    _curves_fixture(runs)
    (runs / "stale").mkdir()
    rc = cli.main(["plot", "--in", str(runs), "--out", str(tmp_path / "f"),
                   "--kind", "curves"])
    assert rc == 0
    assert "skipped stale: no train_log.csv" in capsys.readouterr().err


def test_empty_selection_fails(tmp_path, capsys):
    (tmp_path / "runs").mkdir()
    rc = cli.main(["plot", "--in", str(tmp_path / "runs"),
                   "--out", str(tmp_path / "f"), "--kind", "curves"])
    assert rc == 2
    assert "no runs" in capsys.readouterr().err


def test_ablation_requires_both_groups(tmp_path, capsys):
    runs = tmp_path / "runs"
    make_run(runs, "amort-s0", ["policy_mode = \"amortized\""], [[-0.9]])
    rc = cli.main(["plot", "--in", str(runs), "--out", str(tmp_path / "f"),
                   "--kind", "ablation"])
    assert rc == 2
    assert "missing group" in capsys.readouterr().err


def test_ablation_two_modes(tmp_path):
    runs, out = tmp_path / "runs", tmp_path / "fig"
    make_run(runs, "am-s0", ["policy_mode = \"amortized\""], [[-0.9], [-0.5]])
    make_run(runs, "ab-s0", ["policy_mode = \"ablation\""], [[-0.9], [-0.7]])
    rc = cli.main(["plot", "--in", str(runs), "--out", str(out),
                   "--kind", "ablation"])
    assert rc == 0
    rows = list(csv.DictReader((out / "ablation_stats.csv").open()))
    assert {r["group"] for r in rows} == {"policy_mode=amortized",
                                          "policy_mode=ablation"}


def test_sweep_groups_by_latent_width(tmp_path):
    runs, out = tmp_path / "runs", tmp_path / "fig"
    for dim in (16, 32, 64):
        make_run(runs, f"lat{dim}", [f"dim_lat = {dim}"], [[-0.9], [-0.6]])
    rc = cli.main(["plot", "--in", str(runs), "--out", str(out),
                   "--kind", "sweep"])
    assert rc == 0
    rows = list(csv.DictReader((out / "sweep_stats.csv").open()))
    assert {r["group"] for r in rows} == {"dim_lat=16", "dim_lat=32",
                                          "dim_lat=64"}


def test_metric_override(tmp_path):
    runs, out = tmp_path / "runs", tmp_path / "fig"
    _curves_fixture(runs)
    rc = cli.main(["plot", "--in", str(runs), "--out", str(out),
                   "--kind", "curves", "--metric", "one_step_mse"])
    assert rc == 0
    rows = list(csv.DictReader((out / "curves_stats.csv").open()))
    # helper writes mse 0.01*(task+1); two tasks -> per-iteration mean 0.01
    assert abs(float(rows[0]["mean"]) - 0.01) <= 1e-9


def test_bounds_report(tmp_path, capsys):
    runs, out = tmp_path / "runs", tmp_path / "fig"
    make_bound_run(runs, "b0", [
        (0.1, 0.05, 0.2, 0.3, 0.8, 0),
        (0.2, 0.10, 0.2, 0.4, 0.8, 0),
    ])
    rc = cli.main(["plot", "--in", str(runs), "--out", str(out),
                   "--kind", "bounds"])
    assert rc == 0
    assert (out / "bounds.png").exists()
    rows = list(csv.DictReader((out / "bounds_stats.csv").open()))
    assert rows[0]["violations"] == "0"
    assert abs(float(rows[0]["worst_gap_ratio"]) - 0.5) <= 1e-9
    assert abs(float(rows[0]["worst_regret_ratio"]) - 0.5) <= 1e-9

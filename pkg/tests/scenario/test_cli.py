# mypy: disable-error-code=no-untyped-def

import pytest
from click.testing import CliRunner

from iondirac import __version__
from iondirac.__main__ import cli


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_eigen_reference(runner):
    result = runner.invoke(cli, ["eigen", "--m-over-p", "0", "--e-over-p", "1"])
    assert result.exit_code == 0, result.output
    assert "2.2360679775" in result.output
    assert "lambda" in result.output
    assert "c1" in result.output


def test_eigen_from_ion_params(runner, tmp_path):
    path = tmp_path / "ion.cfg"
    path.write_text("eta = 0.5\nomega_tilde = 0.5\ndelta = 0\nDelta = 0.5\nomega1 = 0, 1, 0\n")
    result = runner.invoke(cli, ["eigen", "--ion-params", str(path)])
    assert result.exit_code == 0, result.output
    assert "c = 0.25" in result.output


def test_invalid_input_exits_with_2(runner):
    result = runner.invoke(cli, ["eigen", "--m-over-p", "-1"])
    assert result.exit_code == 2
    assert "Error:" in result.output


def test_degenerate_spectrum_exits_with_3(runner):
    result = runner.invoke(cli, ["eigen", "--m-over-p", "1", "--e-over-p", "0"])
    assert result.exit_code == 3
    assert "Degenerate spectrum" in result.output


def test_unwritable_output_exits_with_4(runner, tmp_path):
    blocker = tmp_path / "taken"
    blocker.write_text("")
    result = runner.invoke(cli, ["evolve", "--t-max", "1", "--steps", "3", "--out-dir", str(blocker)])
    assert result.exit_code == 4


def test_invalid_figure_exits_with_2(runner, tmp_path):
    result = runner.invoke(cli, ["fig", "4", "--out-dir", str(tmp_path)])
    assert result.exit_code == 2


def test_evolve_writes_files(runner, tmp_path):
    args = ["--state", "werner", "--observables", "survival,negativity", "--t-max", "2", "--steps", "11"]
    result = runner.invoke(cli, ["evolve", *args, "--out-dir", str(tmp_path)])
    assert result.exit_code == 0, result.output
    names = sorted(path.name for path in tmp_path.iterdir())
    assert names == ["werner_m0.meta", "werner_negativity_m0.csv", "werner_survival_m0.csv"]


def test_evolve_uses_config_file(runner, tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text("state = basis:d\nm_over_p = 1\nt_max = 2\nsteps = 5\nobservables = purity\n")
    result = runner.invoke(cli, ["evolve", "--config", str(config), "--m-over-p", "2", "--out-dir", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert (tmp_path / "basis-d_purity_m2.csv").exists()


def test_fig_writes_all_masses(runner, tmp_path):
    result = runner.invoke(cli, ["fig", "3", "--t-max", "4", "--steps", "64", "--out-dir", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert len(list(tmp_path.glob("fig3_cat_discord_derivative_m*.csv"))) == 4
    assert len(list(tmp_path.glob("fig3_*.meta"))) == 4
    assert "Cusps" in result.output


def test_sweep_writes_every_combination(runner, tmp_path):
    args = ["--m-over-p", "0,1", "--gamma-over-p", "0,0.5", "--t-max", "1", "--steps", "5", "--jobs", "2"]
    result = runner.invoke(cli, ["sweep", *args, "--out-dir", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert len(list(tmp_path.glob("sweep*_cat_survival_*.csv"))) == 4
    assert (tmp_path / "sweep003_cat_survival_m1.csv").exists()
    assert "survival(end)" in result.output


def test_sweep_rejects_bad_values(runner, tmp_path):
    result = runner.invoke(cli, ["sweep", "--m-over-p", "0,heavy", "--out-dir", str(tmp_path)])
    assert result.exit_code == 2


def test_evolve_accepts_picture_sign_alias(runner, tmp_path):
    args = ["--picture-sign", "paper_literal", "--t-max", "1", "--steps", "5"]
    result = runner.invoke(cli, ["evolve", *args, "--out-dir", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert "picture_sign = inverse" in (tmp_path / "cat_m0.meta").read_text()

# mypy: disable-error-code=no-untyped-def

import math

import attrs
import numpy
import pytest

from iondirac.correlations import detect_cusps
from iondirac.errors import DegenerateSpectrum, InputError
from iondirac.scenario import ScenarioConfig, figure_configs, run_many, run_scenario, sweep_configs

SHORT = dict(t_max=5.0, steps=51)


def test_run_scenario_survival():
    result = run_scenario(ScenarioConfig(observables="survival,purity", **SHORT))
    numpy.testing.assert_allclose(result.times, numpy.linspace(0, 5, 51))
    survival = result.series["survival"].values
    assert survival[0] == pytest.approx(1.0)
    assert numpy.all((survival >= 0) & (survival <= 1))
    assert numpy.all(result.series["purity"].values <= 1 + 1e-12)
    assert result.cusps is None


def test_run_scenario_metadata():
    result = run_scenario(ScenarioConfig(**SHORT))
    assert result.metadata["c1"] == pytest.approx(3.0)
    assert result.metadata["c2"] == pytest.approx(1.0)
    assert result.metadata["lambda_00"] == pytest.approx(math.sqrt(5))
    assert result.metadata["lambda_11"] == pytest.approx(-1.0)
    assert result.metadata["wall_time"] >= 0


def test_populations_expand_to_four_series():
    result = run_scenario(ScenarioConfig(state="basis:a", m_over_p=1.0, observables="populations", **SHORT))
    labels = [f"population_{label}" for label in "abcd"]
    assert list(result.series) == labels
    total = sum(result.series[label].values for label in labels)
    numpy.testing.assert_allclose(total, numpy.ones(51), atol=1e-10)
    assert result.series["population_a"].values[0] == pytest.approx(1.0)


def test_werner_negativity_ignores_noise():
    werner = dict(state="werner", m_over_p=1.0, observables="negativity", **SHORT)
    noisy = run_scenario(ScenarioConfig(gamma_over_p=0.5, **werner))
    clean = run_scenario(ScenarioConfig(gamma_over_p=0.0, **werner))
    numpy.testing.assert_allclose(noisy.series["negativity"].values, clean.series["negativity"].values, atol=1e-10)


def test_channel_only_cat_negativity_decays_exponentially():
    result = run_scenario(ScenarioConfig(gamma_over_p=0.5, observables="negativity", unitary=False, **SHORT))
    numpy.testing.assert_allclose(result.series["negativity"].values, numpy.exp(-result.times), atol=1e-10)


def test_discord_derivative_reports_cusps():
    result = run_scenario(ScenarioConfig(observables="discord,discord_derivative", t_max=10.0, steps=201))
    assert set(result.series) == {"discord", "discord_derivative"}
    assert numpy.all(result.series["discord"].values <= 0.5 + 1e-12)
    candidates = detect_cusps(result.series["discord_derivative"])
    assert result.cusps is not None
    assert set(result.cusps.times) <= set(candidates.times)
    assert result.cusps.threshold == candidates.threshold
    assert all(jump > result.cusps.threshold for jump in result.cusps.jump_sizes)


def test_short_grid_skips_cusp_detection():
    result = run_scenario(ScenarioConfig(observables="discord_derivative", t_max=1.0, steps=10))
    assert len(result.series["discord_derivative"]) == 10
    assert result.cusps is None


def test_discord_derivative_needs_three_steps():
    with pytest.raises(InputError, match="discord_derivative needs steps >= 3"):
        ScenarioConfig(observables="discord_derivative", t_max=1.0, steps=2)


def test_run_scenario_degenerate():
    with pytest.raises(DegenerateSpectrum):
        run_scenario(ScenarioConfig(e_over_p=0.0, **SHORT))


def test_run_many_keeps_order():
    configs = [ScenarioConfig(m_over_p=m, steps=5, t_max=1.0) for m in (0.0, 1.0, 10.0)]
    results = run_many(configs, jobs=2)
    assert [r.config.m_over_p for r in results] == [0.0, 1.0, 10.0]
    sequential = run_many(configs)
    for a, b in zip(results, sequential):
        numpy.testing.assert_array_equal(a.series["survival"].values, b.series["survival"].values)
    with pytest.raises(InputError):
        run_many(configs, jobs=0)


@pytest.mark.parametrize("fig, count", [(1, 6), (2, 6), (3, 4)])
def test_figure_configs(fig, count):
    configs = figure_configs(fig, ScenarioConfig(**SHORT))
    assert len(configs) == count
    assert all(cfg.t_max == 5.0 for cfg in configs)


def test_figure_3_masses():
    configs = figure_configs(3)
    assert [cfg.m_over_p for cfg in configs] == [0.0, 1.0, 10.0, 20.0]
    assert all(cfg.observables == ("discord", "discord_derivative") for cfg in configs)


def test_figure_configs_drop_custom_amplitudes():
    base = ScenarioConfig(state="custom", amplitudes=(1, 0, 0, 0))
    assert all(cfg.amplitudes == () for cfg in figure_configs(1, base))


def test_invalid_figure():
    with pytest.raises(InputError, match="Invalid figure id"):
        figure_configs(4)


def test_sweep_configs():
    configs = sweep_configs(ScenarioConfig(), {"m_over_p": [0.0, 1.0], "gamma_over_p": [0.0, 0.25, 0.5]})
    assert len(configs) == 6
    assert (configs[-1].m_over_p, configs[-1].gamma_over_p) == (1.0, 0.5)
    with pytest.raises(InputError, match="Cannot sweep"):
        sweep_configs(ScenarioConfig(), {"steps": [10]})


@pytest.mark.figure
def test_figure_2_werner_curves_are_noise_free():
    for cfg in figure_configs(2):
        if cfg.state == "werner":
            clean = attrs.evolve(cfg, gamma_over_p=0.0)
            numpy.testing.assert_allclose(
                run_scenario(cfg).series["negativity"].values,
                run_scenario(clean).series["negativity"].values,
                atol=1e-10,
            )


@pytest.mark.figure
def test_figure_2_cat_disentangles_asymptotically():
    for cfg in figure_configs(2):
        if cfg.state != "cat":
            continue
        result = run_scenario(cfg)
        times, values = result.times, result.series["negativity"].values
        assert values[times >= 40].max() < 0.05
        # e^{-2Γt} is still far above roundoff
        early = times <= 18
        assert numpy.all(values[early] > 0)
        rising = numpy.diff(values) > 0
        resolved = (values[:-1] > 1e-6) & (values[1:] > 1e-6)
        assert numpy.any(rising & resolved), f"negativity decays monotonically for m/p={cfg.m_over_p}"


@pytest.mark.figure
def test_discord_bounds_negativity_along_figure_trajectories():
    for cfg in figure_configs(1) + figure_configs(3):
        result = run_scenario(attrs.evolve(cfg, observables=("negativity", "discord")))
        gap = 2 * result.series["discord"].values - result.series["negativity"].values ** 2
        assert gap.min() >= -1e-10, f"{cfg.state} m/p={cfg.m_over_p}"


@pytest.mark.figure
def test_figure_3_cusps_appear_only_for_heavy_ion():
    results = {result.config.m_over_p: result for result in run_many(figure_configs(3))}
    for result in results.values():
        assert len(result.series["discord_derivative"]) == 2000
        assert numpy.all(result.series["discord"].values <= 0.5 + 1e-12)
    heavy, massless = results[20.0].cusps, results[0.0].cusps
    assert heavy is not None and massless is not None
    assert len(heavy) >= 1
    assert len(massless) == 0

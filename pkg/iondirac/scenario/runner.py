import concurrent.futures
import dataclasses
import itertools
import logging
import time
import typing

import attrs
import numpy
import numpy.typing as npt

from iondirac import __version__
from iondirac.channel import (
    BASIS_LABELS,
    CollectiveDephasing,
    TimeSeries,
    evolve_trajectory,
    populations,
    survival_probability,
    time_grid,
)
from iondirac.correlations import (
    MIN_CUSP_POINTS,
    CuspReport,
    detect_cusps,
    discord_derivative,
    geometric_discord,
    negativity,
    purity,
)
from iondirac.dirac import LABELS, SpectralData, eigenprojectors
from iondirac.errors import InputError
from iondirac.qmat import DensityMatrix
from iondirac.scenario.models import RunResult, ScenarioConfig
from iondirac.scenario.presets import preset_state

logger = logging.getLogger(__name__)

SIDE_SYMMETRY_TOL = 1e-8

CUSP_REFINEMENT = 2
"""Cusp candidates are re-detected on a grid with this many times the points."""

SWEEP_FIELDS = ("m_over_p", "e_over_p", "gamma_over_p", "kappa", "mu", "theta")


@dataclasses.dataclass(frozen=True)
class FigureSpec:
    """Which states, masses and observables make up one figure."""

    states: tuple[str, ...]
    masses: tuple[float, ...]
    observables: tuple[str, ...]


FIGURES: dict[int, FigureSpec] = {
    1: FigureSpec(states=("cat", "werner"), masses=(0.0, 1.0, 10.0), observables=("survival",)),
    2: FigureSpec(states=("cat", "werner"), masses=(0.0, 1.0, 10.0), observables=("negativity",)),
    3: FigureSpec(states=("cat",), masses=(0.0, 1.0, 10.0, 20.0), observables=("discord", "discord_derivative")),
}


def _discord_series(states: list[DensityMatrix], cfg: ScenarioConfig) -> npt.NDArray[numpy.float64]:
    values = numpy.array([geometric_discord(rho, cfg.discord_side) for rho in states])
    if cfg.state in ("cat", "werner"):
        other_side = 2 if cfg.discord_side == 1 else 1
        other = numpy.array([geometric_discord(rho, other_side) for rho in states])
        gap = float(numpy.max(numpy.abs(values - other)))
        if gap > SIDE_SYMMETRY_TOL:
            logger.warning(f"Discord of the {cfg.state} trajectory depends on the measured side (max gap {gap:.3g})")
    return values


def _evolve(
    cfg: ScenarioConfig, spec: SpectralData, rho0: DensityMatrix, times: npt.NDArray[numpy.float64]
) -> list[DensityMatrix]:
    return evolve_trajectory(
        rho0,
        spec,
        CollectiveDephasing(cfg.gamma_over_p),
        times,
        picture_sign=cfg.picture_sign,
        unitary=cfg.unitary,
    )


def _cusp_report(
    cfg: ScenarioConfig, spec: SpectralData, rho0: DensityMatrix, derivative: TimeSeries
) -> CuspReport | None:
    """Cusps of the discord derivative that survive a refinement of the time grid."""
    if len(derivative) < MIN_CUSP_POINTS:
        logger.warning(f"Skipping cusp detection: {len(derivative)} grid points, need at least {MIN_CUSP_POINTS}")
        return None
    report = detect_cusps(derivative)
    if not report:
        return report

    times = time_grid(cfg.t_max, CUSP_REFINEMENT * cfg.steps)
    logger.info(f"Checking {len(report)} cusp candidate(s) on {times.size} points")
    discord = numpy.array([geometric_discord(rho, cfg.discord_side) for rho in _evolve(cfg, spec, rho0, times)])
    refined = discord_derivative(TimeSeries(times, discord, "discord"))
    return detect_cusps(derivative, abs_floor=report.threshold, refined=refined)


def run_scenario(cfg: ScenarioConfig) -> RunResult:
    """Evolve the configured initial state and evaluate every requested observable on the grid."""
    start = time.perf_counter()
    params = cfg.dirac_params()
    spec = eigenprojectors(params)
    rho0 = preset_state(cfg.state, cfg.amplitudes)
    times = time_grid(cfg.t_max, cfg.steps)
    logger.info(f"Running {cfg.state} with m/p={cfg.m_over_p:g}, Γ/p={cfg.gamma_over_p:g} over {times.size} points")

    states = _evolve(cfg, spec, rho0, times)

    result = RunResult(config=cfg, times=times)
    discord: npt.NDArray[numpy.float64] | None = None
    for name in cfg.observables:
        if name == "survival":
            result.series[name] = TimeSeries(times, numpy.array([survival_probability(rho0, r) for r in states]), name)
        elif name == "negativity":
            result.series[name] = TimeSeries(times, numpy.array([negativity(r) for r in states]), name)
        elif name == "purity":
            result.series[name] = TimeSeries(times, numpy.array([purity(r) for r in states]), name)
        elif name == "populations":
            table = numpy.array([populations(r) for r in states])
            for k, label in enumerate(BASIS_LABELS):
                result.series[f"population_{label}"] = TimeSeries(times, table[:, k], f"population_{label}")
        elif name in ("discord", "discord_derivative"):
            if discord is None:
                discord = _discord_series(states, cfg)
            if name == "discord":
                result.series[name] = TimeSeries(times, discord, name)
            else:
                derivative = discord_derivative(TimeSeries(times, discord, "discord"))
                result.series[name] = derivative
                result.cusps = _cusp_report(cfg, spec, rho0, derivative)
        else:
            raise InputError(f"Unknown observable: {name!r}")

    result.metadata = {
        "c1": spec.c1,
        "c2": spec.c2,
        **{f"lambda_{n}{s}": spec.lambdas[(n, s)] for n, s in LABELS},
        "version": __version__,
        "wall_time": time.perf_counter() - start,
    }
    logger.info(f"Finished {cfg.state} m/p={cfg.m_over_p:g} in {result.metadata['wall_time']:.2f}s")
    return result


def run_many(configs: typing.Sequence[ScenarioConfig], jobs: int = 1) -> list[RunResult]:
    """Run independent scenarios, ``jobs`` at a time; results keep the input order."""
    if jobs < 1:
        raise InputError(f"jobs must be >= 1, got {jobs}")
    if jobs == 1 or len(configs) <= 1:
        return [run_scenario(cfg) for cfg in configs]
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(run_scenario, configs))


def figure_configs(fig: int, base: ScenarioConfig | None = None) -> list[ScenarioConfig]:
    """Scenario list of figure ``fig``; grid and field settings come from ``base``."""
    if fig not in FIGURES:
        raise InputError(f"Invalid figure id: {fig} (expected one of {', '.join(map(str, FIGURES))})")
    figure = FIGURES[fig]
    base = base if base is not None else ScenarioConfig()
    return [
        attrs.evolve(base, state=state, m_over_p=mass, observables=figure.observables, amplitudes=())
        for state in figure.states
        for mass in figure.masses
    ]


def figure_command(fig: int, base: ScenarioConfig | None = None, jobs: int = 1) -> list[RunResult]:
    """Regenerate the data of one figure."""
    return run_many(figure_configs(fig, base), jobs)


def sweep_configs(base: ScenarioConfig, grid: typing.Mapping[str, typing.Sequence[float]]) -> list[ScenarioConfig]:
    """Cartesian product of ``grid`` values applied on top of ``base``."""
    unknown = [name for name in grid if name not in SWEEP_FIELDS]
    if unknown:
        raise InputError(f"Cannot sweep over {', '.join(unknown)} (allowed: {', '.join(SWEEP_FIELDS)})")
    names = list(grid)
    return [attrs.evolve(base, **dict(zip(names, values, strict=True))) for values in itertools.product(*grid.values())]


def sweep(base: ScenarioConfig, grid: typing.Mapping[str, typing.Sequence[float]], jobs: int = 1) -> list[RunResult]:
    configs = sweep_configs(base, grid)
    logger.info(f"Sweeping {len(configs)} configuration(s)")
    return run_many(configs, jobs)

import pathlib
import typing

import attrs
import click
from tabulate import tabulate

from iondirac.channel import PICTURE_SIGN_ALIASES, PictureSign
from iondirac.dirac import eigenvalues, from_ion_params, invariants
from iondirac.errors import InputError
from iondirac.scenario.config import read_ion_params, read_scenario
from iondirac.scenario.models import ScenarioConfig
from iondirac.scenario.output import emit_csv
from iondirac.scenario.runner import SWEEP_FIELDS, figure_command, run_scenario, sweep

Decorator = typing.Callable[[typing.Callable[..., typing.Any]], typing.Callable[..., typing.Any]]

config_option = click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=pathlib.Path),
    help="Flat key = value configuration file; flags override its values",
)
out_dir_option = click.option(
    "--out-dir",
    type=click.Path(file_okay=False, path_type=pathlib.Path),
    default=pathlib.Path("."),
    show_default=True,
    help="Directory receiving the CSV and .meta files",
)
jobs_option = click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Parallel runs")

FIELD_OPTIONS: list[Decorator] = [
    click.option("--e-over-p", type=float, help="Field strength 𝓔/p"),
    click.option("--gamma-over-p", type=float, help="Dephasing rate Γ/p"),
    click.option("--kappa", type=float, help="Tensor coupling κ"),
    click.option("--mu", type=float, help="Pseudotensor coupling μ"),
    click.option("--theta", type=float, help="Field angle θ in radians"),
]

GRID_OPTIONS: list[Decorator] = [
    click.option("--t-max", type=float, help="End of the time grid (p·t)"),
    click.option("--steps", type=int, help="Number of grid points"),
    click.option("--discord-side", type=click.IntRange(1, 2), help="Qubit measured by the discord"),
    click.option(
        "--picture-sign",
        type=click.Choice([sign.value for sign in PictureSign] + list(PICTURE_SIGN_ALIASES)),
        help="Phase convention of the Schrödinger-picture transport",
    ),
]

STATE_OPTIONS: list[Decorator] = [
    click.option("--state", help="cat, werner, basis:<a|b|c|d> or custom"),
    click.option("--observables", help="Comma-separated observables"),
    click.option("--amplitudes", help="Four comma-separated amplitudes for --state custom"),
    click.option("--unitary/--no-unitary", default=None, help="Disable to freeze the spectral phases"),
]


def _apply(options: list[Decorator]) -> Decorator:
    def decorate(f: typing.Callable[..., typing.Any]) -> typing.Callable[..., typing.Any]:
        for option in reversed(options):
            f = option(f)
        return f

    return decorate


def build_config(config_path: pathlib.Path | None, **overrides: typing.Any) -> ScenarioConfig:
    """Defaults, then the configuration file, then every flag that was given."""
    cfg = read_scenario(config_path) if config_path is not None else ScenarioConfig()
    changes = {key: value for key, value in overrides.items() if value is not None}
    if changes.get("state", "custom") != "custom" and "amplitudes" not in changes:
        changes["amplitudes"] = ()
    return attrs.evolve(cfg, **changes)


def parse_float_list(text: str, name: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise InputError(f"Invalid value list for --{name.replace('_', '-')}: {text!r}") from None


def _report_written(paths: list[pathlib.Path]) -> None:
    for path in paths:
        click.echo(f"Wrote '{path}'", err=True)


@click.command()
@click.option("--m-over-p", type=float, help="Mass m/p")
@_apply(FIELD_OPTIONS)
@config_option
@click.option(
    "--ion-params",
    type=click.Path(exists=True, dir_okay=False, path_type=pathlib.Path),
    help="Derive the Dirac parameters from a trapped-ion parameter file",
)
def eigen(config_path: pathlib.Path | None, ion_params: pathlib.Path | None, **overrides: typing.Any) -> None:
    """Print the eigenvalues λ_{n,s} and the invariants c1, c2."""
    if ion_params is not None:
        params = from_ion_params(read_ion_params(ion_params))
        click.echo(f"Ion mapping: c = {params.metadata['c']:.12g}", err=True)
    else:
        params = build_config(config_path, **overrides).dirac_params()
    c1, c2 = invariants(params)
    lambdas = eigenvalues(params)
    rows = [[n, s, lam] for (n, s), lam in lambdas.items()]
    click.echo(tabulate(rows, headers=["n", "s", "lambda"], tablefmt="plain", floatfmt=".12g"))
    click.echo(tabulate([["c1", c1], ["c2", c2]], tablefmt="plain", floatfmt=".12g"))


@click.command()
@_apply(STATE_OPTIONS)
@click.option("--m-over-p", type=float, help="Mass m/p")
@_apply(FIELD_OPTIONS)
@_apply(GRID_OPTIONS)
@config_option
@out_dir_option
def evolve(config_path: pathlib.Path | None, out_dir: pathlib.Path, **overrides: typing.Any) -> None:
    """Run a single scenario and write its CSV files."""
    result = run_scenario(build_config(config_path, **overrides))
    _report_written(emit_csv(result, out_dir))
    if result.cusps is not None:
        click.echo(f"Cusps in the discord derivative at p·t = {list(result.cusps.times)}", err=True)


@click.command()
@click.argument("fig", type=int)
@_apply(FIELD_OPTIONS)
@_apply(GRID_OPTIONS)
@config_option
@out_dir_option
@jobs_option
def fig(fig: int, config_path: pathlib.Path | None, out_dir: pathlib.Path, jobs: int, **overrides: typing.Any) -> None:
    """Regenerate the data behind figure FIG (1, 2 or 3)."""
    results = figure_command(fig, build_config(config_path, **overrides), jobs=jobs)
    for result in results:
        _report_written(emit_csv(result, out_dir, prefix=f"fig{fig}"))
    cusp_rows = [
        [result.config.m_over_p, len(result.cusps), ", ".join(f"{t:.4g}" for t in result.cusps.times)]
        for result in results
        if result.cusps is not None
    ]
    if cusp_rows:
        click.echo(tabulate(cusp_rows, headers=["m/p", "Cusps", "At p·t"], tablefmt="plain"))


@click.command("sweep")
@_apply(STATE_OPTIONS)
@click.option("--m-over-p", help="Comma-separated m/p values")
@click.option("--e-over-p", help="Comma-separated 𝓔/p values")
@click.option("--gamma-over-p", help="Comma-separated Γ/p values")
@click.option("--kappa", help="Comma-separated κ values")
@click.option("--mu", help="Comma-separated μ values")
@click.option("--theta", help="Comma-separated θ values")
@_apply(GRID_OPTIONS)
@config_option
@out_dir_option
@jobs_option
def sweep_command(
    config_path: pathlib.Path | None, out_dir: pathlib.Path, jobs: int, **options: typing.Any
) -> None:
    """Run every combination of the listed parameter values."""
    grid = {name: parse_float_list(options.pop(name), name) for name in SWEEP_FIELDS if options.get(name)}
    for name in SWEEP_FIELDS:
        options.pop(name, None)
    base = build_config(config_path, **options)
    results = sweep(base, grid, jobs=jobs)

    headers = ["#", *grid]
    labels: list[str] = []
    rows = []
    for index, result in enumerate(results):
        _report_written(emit_csv(result, out_dir, prefix=f"sweep{index:03d}"))
        labels = labels or list(result.series)
        row: list[typing.Any] = [index, *(getattr(result.config, name) for name in grid)]
        row.extend(float(result.series[label].values[-1]) for label in labels)
        rows.append(row)
    click.echo(tabulate(rows, headers=[*headers, *(f"{label}(end)" for label in labels)], tablefmt="plain"))

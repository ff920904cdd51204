from iondirac.scenario.config import dump_scenario, load_scenario, parse_flat, read_ion_params, read_scenario
from iondirac.scenario.models import OBSERVABLES, STATES, RunResult, ScenarioConfig
from iondirac.scenario.output import emit_csv, series_filename, sidecar_filename, sidecar_text
from iondirac.scenario.presets import cat_state, preset_state, werner_state
from iondirac.scenario.runner import (
    FIGURES,
    figure_command,
    figure_configs,
    run_many,
    run_scenario,
    sweep,
    sweep_configs,
)

__all__ = [
    "FIGURES",
    "OBSERVABLES",
    "STATES",
    "RunResult",
    "ScenarioConfig",
    "cat_state",
    "dump_scenario",
    "emit_csv",
    "figure_command",
    "figure_configs",
    "load_scenario",
    "parse_flat",
    "preset_state",
    "read_ion_params",
    "read_scenario",
    "run_many",
    "run_scenario",
    "series_filename",
    "sidecar_filename",
    "sidecar_text",
    "sweep",
    "sweep_configs",
    "werner_state",
]

import logging
import pathlib

import numpy

from iondirac.channel import TimeSeries
from iondirac.errors import OutputError
from iondirac.scenario.config import META_PREFIX, dump_scenario
from iondirac.scenario.models import RunResult

logger = logging.getLogger(__name__)

CSV_FORMAT = "%.16e"


def _stem(result: RunResult, prefix: str | None, *parts: str) -> str:
    cfg = result.config
    state = cfg.state.replace(":", "-")
    pieces = [prefix, state, *parts, f"m{cfg.m_over_p:g}"]
    return "_".join(piece for piece in pieces if piece)


def series_filename(result: RunResult, label: str, prefix: str | None = None) -> str:
    """``<prefix>_<state>_<observable>_m<m/p>.csv``, e.g. ``fig1_cat_survival_m10.csv``."""
    return f"{_stem(result, prefix, label)}.csv"


def sidecar_filename(result: RunResult, prefix: str | None = None) -> str:
    return f"{_stem(result, prefix)}.meta"


def write_series(series: TimeSeries, path: pathlib.Path) -> None:
    """Header ``pt,<label>`` then one row per grid point with 17 significant digits."""
    table = numpy.column_stack([series.times, series.values])
    try:
        numpy.savetxt(path, table, fmt=CSV_FORMAT, delimiter=",", header=f"pt,{series.label}", comments="")
    except OSError as e:
        logger.error(f"Failed to write {path}: {e}")
        raise OutputError(path, e.strerror or str(e)) from e


def sidecar_text(result: RunResult) -> str:
    """Config echo plus ``meta.*`` lines; wall time is left out so reruns are byte-identical."""
    lines = [dump_scenario(result.config)]
    for key, value in result.metadata.items():
        if key == "wall_time":
            continue
        text = repr(float(value)) if isinstance(value, float) else str(value)
        lines.append(f"{META_PREFIX}{key} = {text}\n")
    if result.cusps is not None:
        lines.append(f"{META_PREFIX}cusp_times = {','.join(repr(t) for t in result.cusps.times)}\n")
        lines.append(f"{META_PREFIX}cusp_jumps = {','.join(repr(j) for j in result.cusps.jump_sizes)}\n")
    return "".join(lines)


def emit_csv(result: RunResult, out_dir: pathlib.Path | str, prefix: str | None = None) -> list[pathlib.Path]:
    """Write one CSV per series and the metadata sidecar; returns the written paths."""
    out_dir = pathlib.Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        logger.error(f"Cannot create output directory {out_dir}: {e}")
        raise OutputError(out_dir, e.strerror or str(e)) from e

    written = []
    for label, series in result.series.items():
        path = out_dir / series_filename(result, label, prefix)
        write_series(series, path)
        written.append(path)

    sidecar = out_dir / sidecar_filename(result, prefix)
    try:
        sidecar.write_text(sidecar_text(result), encoding="utf-8")
    except OSError as e:
        logger.error(f"Failed to write {sidecar}: {e}")
        raise OutputError(sidecar, e.strerror or str(e)) from e
    written.append(sidecar)

    logger.info(f"Wrote {len(written)} file(s) to {out_dir}")
    return written

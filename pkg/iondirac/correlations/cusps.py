"""Numerical derivative of a sampled observable and detection of its non-smooth points."""

import logging

import numpy
import numpy.typing as npt

from iondirac.channel import TimeSeries
from iondirac.correlations.models import CuspReport
from iondirac.errors import InputError

logger = logging.getLogger(__name__)

MIN_CUSP_POINTS = 16
MERGE_GAP = 3
CURVATURE_RATIO = 3.5
MATCH_GAP = 3


def discord_derivative(series: TimeSeries) -> TimeSeries:
    """Central differences in the interior, second-order one-sided differences at both ends.

    >>> import numpy
    >>> t = numpy.linspace(0.0, 1.0, 5)
    >>> discord_derivative(TimeSeries(t, t**2, "discord")).values.round(12).tolist()
    [0.0, 0.5, 1.0, 1.5, 2.0]
    """
    if len(series) < 3:
        raise InputError(f"Derivative of '{series.label}' needs at least 3 points, got {len(series)}")
    h = series.spacing()
    values = numpy.gradient(series.values, h, edge_order=2)
    return TimeSeries(series.times.copy(), values, f"{series.label}_derivative")


def _second_differences(values: npt.NDArray[numpy.float64]) -> npt.NDArray[numpy.float64]:
    return numpy.abs(values[2:] - 2 * values[1:-1] + values[:-2])


def _reference_levels(sd: npt.NDArray[numpy.float64], window: int) -> npt.NDArray[numpy.float64]:
    """Median second difference over the ``window`` points before each entry.

    Entries with less history use the ``window`` points that follow them instead.
    """
    levels = numpy.empty_like(sd)
    for k in range(sd.size):
        if k >= window:
            ref = sd[k - window : k]
        else:
            ref = numpy.concatenate([sd[:k], sd[k + 1 : window + 1]])
        levels[k] = numpy.median(ref)
    return levels


def _wide_second_difference(values: npt.NDArray[numpy.float64], lo: int, hi: int) -> float:
    """Largest ``|v[j+2] - 2 v[j] + v[j-2]|`` for ``lo - 1 <= j <= hi + 1``."""
    js = numpy.arange(max(lo - 1, 2), min(hi + 1, values.size - 3) + 1)
    if js.size == 0:
        return 0.0
    return float(numpy.abs(values[js + 2] - 2 * values[js] + values[js - 2]).max())


def _candidates(
    times: npt.NDArray[numpy.float64],
    values: npt.NDArray[numpy.float64],
    rel_threshold: float,
    window: int,
    floor: float,
) -> list[tuple[float, float]]:
    sd = _second_differences(values)
    w = min(window, sd.size - 1)
    thresholds = numpy.maximum(rel_threshold * _reference_levels(sd, w), floor)
    flagged = numpy.flatnonzero(sd > thresholds)

    clusters: list[list[int]] = []
    for k in flagged.tolist():
        if clusters and k - clusters[-1][-1] <= MERGE_GAP:
            clusters[-1].append(k)
        else:
            clusters.append([k])

    found = []
    for cluster in clusters:
        # sd[k] is centred on values[k + 1]
        lo, hi = cluster[0] + 1, cluster[-1] + 1
        location = float((times[lo] + times[hi]) / 2)
        jump = float(sd[cluster].max())
        # a jump keeps its second difference when the spacing doubles, smooth curvature grows 4x
        wide = _wide_second_difference(values, lo, hi)
        if wide > CURVATURE_RATIO * jump:
            logger.debug(f"Ignoring smooth feature at t={location:.6g}: {jump:.3g} at h, {wide:.3g} at 2h")
            continue
        found.append((location, jump))
    return found


def _stable_candidates(
    times: npt.NDArray[numpy.float64],
    values: npt.NDArray[numpy.float64],
    rel_threshold: float,
    window: int,
    floor: float,
    confirm: bool,
) -> list[tuple[float, float]]:
    """Candidates of ``values``, optionally kept only if the series sampled at every other point shows them too."""
    found = _candidates(times, values, rel_threshold, window, floor)
    coarse_times = times[::2]
    if not confirm or not found or coarse_times.size < MIN_CUSP_POINTS:
        return found

    coarse = _candidates(coarse_times, values[::2], rel_threshold, window, floor)
    tolerance = 2 * (coarse_times[1] - coarse_times[0])
    confirmed = []
    for location, jump in found:
        if any(abs(location - other) <= tolerance for other, _ in coarse):
            confirmed.append((location, jump))
        else:
            logger.debug(f"Rejecting cusp candidate at t={location:.6g}: not found on the coarser grid")
    return confirmed


def detect_cusps(
    deriv: TimeSeries,
    rel_threshold: float = 5.0,
    window: int = 32,
    abs_floor: float | None = None,
    confirm: bool = True,
    refined: TimeSeries | None = None,
) -> CuspReport:
    """Find points where ``deriv`` is not smooth.

    An interior point is a candidate when its second-difference magnitude exceeds ``rel_threshold``
    times the median over the preceding ``window`` points and ``abs_floor`` (by default 1e-9 of the
    largest magnitude in the series). Adjacent candidates merge into one cusp; its jump estimate is
    the largest second difference of the cluster, which equals the step height for a jump between
    two samples. A candidate whose second difference grows like smooth curvature when the spacing
    doubles is dropped.

    With ``confirm`` set, a cusp is kept only if it is found again on the series sampled at every
    other point. ``refined`` is the same derivative sampled on a finer grid over the same span;
    when given, a cusp is kept only if the same thresholds find it there as well, within
    ``MATCH_GAP`` coarse grid steps.
    """
    if len(deriv) < MIN_CUSP_POINTS:
        raise InputError(f"Cusp detection needs at least {MIN_CUSP_POINTS} points, got {len(deriv)}")
    if rel_threshold <= 0:
        raise InputError(f"rel_threshold must be > 0, got {rel_threshold}")
    if window < 2:
        raise InputError(f"window must be >= 2, got {window}")
    h = deriv.spacing()
    floor = 1e-9 * float(numpy.max(numpy.abs(deriv.values))) if abs_floor is None else abs_floor

    found = _stable_candidates(deriv.times, deriv.values, rel_threshold, window, floor, confirm)

    if refined is not None and found:
        if len(refined) < MIN_CUSP_POINTS:
            raise InputError(f"Cusp detection needs at least {MIN_CUSP_POINTS} points, got {len(refined)}")
        if refined.spacing() >= h:
            raise InputError(f"Refined series spacing {refined.spacing():.3g} is not finer than {h:.3g}")
        matches = _stable_candidates(refined.times, refined.values, rel_threshold, window, floor, confirm)
        kept = []
        for location, jump in found:
            if any(abs(location - other) <= MATCH_GAP * h for other, _ in matches):
                kept.append((location, jump))
            else:
                logger.warning(f"Rejecting cusp candidate at t={location:.6g}: not found on the refined grid")
        found = kept

    logger.debug(f"Detected {len(found)} cusp(s) in '{deriv.label}' (floor {floor:.3g})")
    return CuspReport(
        times=tuple(location for location, _ in found),
        jump_sizes=tuple(jump for _, jump in found),
        threshold=floor,
    )

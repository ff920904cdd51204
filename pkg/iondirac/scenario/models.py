import dataclasses
import math
import typing

import attrs
import numpy
import numpy.typing as npt

from iondirac.channel import BASIS_LABELS, DEFAULT_STEPS, DEFAULT_T_MAX, PictureSign, TimeSeries
from iondirac.correlations import CuspReport
from iondirac.dirac import DiracParams
from iondirac.errors import InputError

OBSERVABLES = ("survival", "negativity", "discord", "discord_derivative", "purity", "populations")

STATES = ("cat", "werner", "custom") + tuple(f"basis:{label}" for label in BASIS_LABELS)


def _to_tuple(value: typing.Any) -> tuple[typing.Any, ...]:
    if isinstance(value, str):
        return tuple(item.strip() for item in value.split(",") if item.strip())
    return tuple(value)


def _to_amplitudes(value: typing.Any) -> tuple[complex, ...]:
    try:
        return tuple(complex(item) for item in _to_tuple(value))
    except (TypeError, ValueError):
        raise InputError(f"Invalid amplitudes: {value!r}") from None


def _to_picture_sign(value: typing.Any) -> PictureSign:
    try:
        return PictureSign(value)
    except ValueError:
        choices = ", ".join(sign.value for sign in PictureSign)
        raise InputError(f"Invalid picture sign: {value!r} (expected one of {choices})") from None


def _non_negative(instance: typing.Any, attribute: "attrs.Attribute[float]", value: float) -> None:
    if value < 0:
        raise InputError(f"{attribute.name} must be >= 0, got {value}")


def _check_state(instance: typing.Any, attribute: "attrs.Attribute[str]", value: str) -> None:
    if value not in STATES:
        raise InputError(f"Unknown state: {value!r} (expected one of {', '.join(STATES)})")


def _check_observables(
    instance: typing.Any, attribute: "attrs.Attribute[tuple[str, ...]]", value: tuple[str, ...]
) -> None:
    if not value:
        raise InputError("At least one observable must be requested")
    unknown = [name for name in value if name not in OBSERVABLES]
    if unknown:
        raise InputError(f"Unknown observable(s): {', '.join(unknown)} (expected any of {', '.join(OBSERVABLES)})")


@attrs.frozen
class ScenarioConfig:
    """One simulated trajectory, in units where p = 1 (masses, fields and rates are ratios to p)."""

    state: str = attrs.field(default="cat", validator=_check_state)
    """``cat``, ``werner``, ``basis:<a|b|c|d>`` or ``custom``."""

    m_over_p: float = attrs.field(default=0.0, converter=float, validator=_non_negative)
    e_over_p: float = attrs.field(default=1.0, converter=float, validator=_non_negative)
    gamma_over_p: float = attrs.field(default=0.5, converter=float, validator=_non_negative)
    kappa: float = attrs.field(default=1.0, converter=float)
    mu: float = attrs.field(default=1.0, converter=float)
    theta: float = attrs.field(default=math.pi / 4, converter=float)

    t_max: float = attrs.field(default=DEFAULT_T_MAX, converter=float)
    """End of the time grid, in units of p·t."""

    steps: int = attrs.field(default=DEFAULT_STEPS, converter=int)
    """Number of grid points, both ends included."""

    observables: tuple[str, ...] = attrs.field(default=("survival",), converter=_to_tuple, validator=_check_observables)

    discord_side: int = attrs.field(default=1, converter=int)
    """Qubit on which the discord measurement acts."""

    picture_sign: PictureSign = attrs.field(default=PictureSign.STANDARD, converter=_to_picture_sign)

    amplitudes: tuple[complex, ...] = attrs.field(default=(), converter=_to_amplitudes)
    """Ket amplitudes for ``state = custom``; normalized on use."""

    unitary: bool = True
    """When false the spectral phases are frozen and only the channel acts."""

    def __attrs_post_init__(self) -> None:
        if self.t_max <= 0:
            raise InputError(f"t_max must be > 0, got {self.t_max}")
        if self.steps < 2:
            raise InputError(f"steps must be >= 2, got {self.steps}")
        if "discord_derivative" in self.observables and self.steps < 3:
            raise InputError(f"discord_derivative needs steps >= 3, got {self.steps}")
        if self.discord_side not in (1, 2):
            raise InputError(f"discord_side must be 1 or 2, got {self.discord_side}")
        if self.state == "custom" and len(self.amplitudes) != 4:
            raise InputError(f"state 'custom' needs exactly 4 amplitudes, got {len(self.amplitudes)}")
        if self.state != "custom" and self.amplitudes:
            raise InputError(f"amplitudes are only used with state 'custom', not {self.state!r}")

    def dirac_params(self) -> DiracParams:
        return DiracParams(
            m=self.m_over_p,
            p=1.0,
            E=self.e_over_p,
            kappa=self.kappa,
            mu=self.mu,
            theta=self.theta,
            gamma_rate=self.gamma_over_p,
        )


@dataclasses.dataclass
class RunResult:
    """Observables of one scenario on its time grid."""

    config: ScenarioConfig
    """The configuration that produced the result."""

    times: npt.NDArray[numpy.float64]
    """Shared time grid (p·t)."""

    series: dict[str, TimeSeries] = dataclasses.field(default_factory=dict)
    """One series per observable, keyed by label (``populations`` expands to ``population_a`` .. ``population_d``)."""

    metadata: dict[str, typing.Any] = dataclasses.field(default_factory=dict)
    """Spectral data, tool version and wall time."""

    cusps: CuspReport | None = None
    """Cusps of the discord derivative, when it was requested."""

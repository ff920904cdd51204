import dataclasses
import enum

import numpy
import numpy.typing as npt

from iondirac.errors import ContractViolation, InputError
from iondirac.qmat import QMatrix, identity4

TOL_KRAUS = 1e-12


class PictureSign(str, enum.Enum):
    """Sign convention for transporting the interaction-picture state back to the Schrödinger picture."""

    STANDARD = "standard"
    """ρ(t) = e^{-iHt} ρ̃ e^{iHt}, i.e. spectral phases e^{-i(λ_ns - λ_ml)t}."""

    INVERSE = "inverse"
    """ρ(t) = e^{+iHt} ρ̃ e^{-iHt}, i.e. spectral phases e^{+i(λ_ns - λ_ml)t}."""

    @classmethod
    def _missing_(cls, value: object) -> "PictureSign | None":
        if isinstance(value, str) and value.lower() in PICTURE_SIGN_ALIASES:
            return cls(PICTURE_SIGN_ALIASES[value.lower()])
        return None


PICTURE_SIGN_ALIASES: dict[str, str] = {"paper_literal": "inverse"}
"""Alternative spellings accepted wherever a picture sign is parsed."""


@dataclasses.dataclass(frozen=True, eq=False)
class KrausSet:
    """Kraus operators of the collective dephasing channel at one time."""

    d1: QMatrix
    """diag(γ, 1, 1, γ)."""

    d2: QMatrix
    """diag(ω1, 0, 0, ω2)."""

    d3: QMatrix
    """diag(0, 0, 0, ω3)."""

    t: float
    """Elapsed time."""

    gamma_rate: float
    """Phase relaxation rate Γ."""

    def __post_init__(self) -> None:
        residual = self.completeness_residual()
        if residual > TOL_KRAUS:
            raise ContractViolation(f"Kraus operators at t={self.t:g} are not complete (residual {residual:.3g})")

    @property
    def operators(self) -> tuple[QMatrix, QMatrix, QMatrix]:
        return self.d1, self.d2, self.d3

    def completeness(self) -> QMatrix:
        """Σ_μ D_μ D_μ†, which equals the identity for a trace-preserving set."""
        total = numpy.zeros((4, 4), dtype=numpy.complex128)
        for d in self.operators:
            total += d @ d.conj().T
        return total

    def completeness_residual(self) -> float:
        return float(numpy.max(numpy.abs(self.completeness() - identity4())))


@dataclasses.dataclass(frozen=True, eq=False)
class TimeSeries:
    """Scalar observable sampled on a time grid (times in units of p·t)."""

    times: npt.NDArray[numpy.float64]
    """Strictly increasing sample times."""

    values: npt.NDArray[numpy.float64]
    """One value per time."""

    label: str
    """Observable name, used as the CSV column header."""

    def __post_init__(self) -> None:
        times = numpy.asarray(self.times, dtype=float)
        values = numpy.asarray(self.values, dtype=float)
        if times.ndim != 1 or values.ndim != 1:
            raise InputError(f"Time series '{self.label}' must be one-dimensional")
        if times.shape != values.shape:
            raise InputError(
                f"Time series '{self.label}' has {times.size} times but {values.size} values"
            )
        if times.size > 1 and not numpy.all(numpy.diff(times) > 0):
            raise InputError(f"Time series '{self.label}' times must be strictly increasing")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.times.size)

    def spacing(self, rtol: float = 1e-9) -> float:
        """Grid spacing of a uniform series; raises ``InputError`` for non-uniform grids."""
        if self.times.size < 2:
            raise InputError(f"Time series '{self.label}' has fewer than two points")
        steps = numpy.diff(self.times)
        h = float(steps.mean())
        if not numpy.allclose(steps, h, rtol=rtol, atol=0.0):
            raise InputError(f"Time series '{self.label}' is not on a uniform grid")
        return h

import logging
import typing

import numpy
import numpy.typing as npt

from iondirac.channel.base import NoiseChannel
from iondirac.channel.dephasing import CollectiveDephasing, IdentityChannel
from iondirac.channel.models import PictureSign
from iondirac.dirac import LABELS, SpectralData
from iondirac.errors import InputError
from iondirac.qmat import DensityMatrix, QMatrix

logger = logging.getLogger(__name__)

DEFAULT_T_MAX = 50.0
DEFAULT_STEPS = 2000

BASIS_LABELS = "abcd"

BasisState = typing.Union[str, int]


def time_grid(t_max: float = DEFAULT_T_MAX, steps: int = DEFAULT_STEPS) -> npt.NDArray[numpy.float64]:
    """Uniform grid of ``steps`` points over [0, t_max]."""
    if t_max <= 0:
        raise InputError(f"t_max must be > 0, got {t_max}")
    if steps < 2:
        raise InputError(f"steps must be >= 2, got {steps}")
    return numpy.linspace(0.0, t_max, steps)


def basis_index(state: BasisState) -> int:
    """Index of an ionic basis state given as ``a``-``d`` or ``0``-``3``."""
    if isinstance(state, int) and 0 <= state < 4:
        return state
    if isinstance(state, str) and len(state) == 1 and state in BASIS_LABELS:
        return BASIS_LABELS.index(state)
    raise InputError(f"Invalid basis state: {state!r} (expected one of a, b, c, d)")


def spectral_unitary(spec: SpectralData, t: float, picture_sign: PictureSign = PictureSign.STANDARD) -> QMatrix:
    """Σ_{n,s} e^{∓iλ_{n,s}t} ϱ_{n,s}; the upper sign is the standard convention."""
    sign = -1.0 if picture_sign == PictureSign.STANDARD else 1.0
    u = numpy.zeros((4, 4), dtype=numpy.complex128)
    for label in LABELS:
        u += numpy.exp(sign * 1j * spec.lambdas[label] * t) * spec.projectors[label].mat
    return u


def _rotate(rho: DensityMatrix, spec: SpectralData, t: float, picture_sign: PictureSign) -> DensityMatrix:
    # U ρ U† with U = Σ e^{-iλt} ϱ equals the double spectral sum Σ e^{-i(λ_ns - λ_ml)t} ϱ_ns ρ ϱ_ml
    u = spectral_unitary(spec, t, picture_sign)
    return DensityMatrix(u @ rho.mat @ u.conj().T)


def evolve_noiseless(rho0: DensityMatrix, spec: SpectralData, t: float) -> DensityMatrix:
    """Unitary evolution under the Dirac Hamiltonian through its spectral decomposition."""
    return _rotate(rho0, spec, t, PictureSign.STANDARD)


def evolve_noisy(
    rho0: DensityMatrix,
    spec: SpectralData,
    gamma_rate: float | NoiseChannel,
    t: float,
    picture_sign: PictureSign = PictureSign.STANDARD,
) -> DensityMatrix:
    """Collective dephasing channel followed by the Dirac rotation back to the Schrödinger picture."""
    channel = gamma_rate if isinstance(gamma_rate, NoiseChannel) else CollectiveDephasing(gamma_rate)
    return _rotate(channel.apply(rho0, t), spec, t, picture_sign)


def evolve_trajectory(
    rho0: DensityMatrix,
    spec: SpectralData,
    channel: NoiseChannel | None,
    times: npt.ArrayLike,
    picture_sign: PictureSign = PictureSign.STANDARD,
    unitary: bool = True,
) -> list[DensityMatrix]:
    """Evolve ``rho0`` on every point of ``times``.

    With ``unitary=False`` the spectral phases are frozen and only the channel acts.
    """
    channel = channel if channel is not None else IdentityChannel()
    grid = numpy.asarray(times, dtype=float)
    if unitary:
        states = [evolve_noisy(rho0, spec, channel, float(t), picture_sign) for t in grid]
    else:
        states = [channel.apply(rho0, float(t)) for t in grid]
    logger.debug(f"Evolved trajectory over {grid.size} points with {channel!r} (unitary={unitary})")
    return states


def survival_probability(rho0: DensityMatrix, rho_t: DensityMatrix) -> float:
    """Tr[ρ(0) ρ(t)]."""
    value = float(numpy.trace(rho0.mat @ rho_t.mat).real)
    return min(max(value, 0.0), 1.0)


def transition_probability(j: BasisState, k: BasisState, spec: SpectralData, t: float) -> float:
    """Probability of finding the ion in level ``k`` at time ``t`` after preparing level ``j``."""
    jj = basis_index(j)
    kk = basis_index(k)
    u = spectral_unitary(spec, t)
    value = float(abs(u[kk, jj]) ** 2)
    return min(max(value, 0.0), 1.0)


def transition_matrix(spec: SpectralData, t: float) -> npt.NDArray[numpy.float64]:
    """Matrix of transition probabilities, rows indexed by the initial level ``j``."""
    u = spectral_unitary(spec, t)
    return numpy.abs(u.T) ** 2


def populations(rho: DensityMatrix) -> npt.NDArray[numpy.float64]:
    """Tr[P_k ρ] for k = a, b, c, d."""
    return numpy.clip(numpy.diag(rho.mat).real, 0.0, 1.0)


import numpy

from iondirac.correlations.models import FanoComponents
from iondirac.errors import InputError
from iondirac.qmat import DensityMatrix, identity2, kron, partial_transpose, pauli_vector, trace_norm


def _check_side(side: int) -> None:
    if side not in (1, 2):
        raise InputError(f"Invalid subsystem: {side} (expected 1 or 2)")


def fano(rho: DensityMatrix) -> FanoComponents:
    """Local Bloch vectors and correlation matrix of ``rho``.

    >>> components = fano(DensityMatrix.maximally_mixed())
    >>> float(abs(components.T).max())
    0.0
    """
    sigmas = pauli_vector()
    eye = identity2()
    mat = rho.mat
    a1 = numpy.array([numpy.trace(mat @ kron(sigma, eye)).real for sigma in sigmas])
    a2 = numpy.array([numpy.trace(mat @ kron(eye, sigma)).real for sigma in sigmas])
    t = numpy.array([[numpy.trace(mat @ kron(si, sj)).real for sj in sigmas] for si in sigmas])
    return FanoComponents(a1=a1, a2=a2, T=t)


def negativity(rho: DensityMatrix, subsystem: int = 1) -> float:
    """‖ρ^{T_A}‖₁ - 1, clamped at zero."""
    _check_side(subsystem)
    return max(trace_norm(partial_transpose(rho, subsystem)) - 1.0, 0.0)


def geometric_discord(rho: DensityMatrix, side: int = 1) -> float:
    """Geometric discord with the measurement on qubit ``side``, in [0, 1/2].

    ¼(‖a‖² + ‖T‖² - k_max) with k_max the largest eigenvalue of a·aᵀ + T·Tᵀ.
    """
    _check_side(side)
    components = fano(rho)
    a = components.bloch(side)
    t = components.T if side == 1 else components.T.T
    k = numpy.outer(a, a) + t @ t.T
    k_max = float(numpy.linalg.eigvalsh(k)[-1])
    value = (float(a @ a) + float(numpy.sum(t**2)) - k_max) / 4
    return max(value, 0.0)


def purity(rho: DensityMatrix) -> float:
    """Tr[ρ²]."""
    return float(numpy.trace(rho.mat @ rho.mat).real)


def discord_negativity_gap(rho: DensityMatrix, side: int = 1) -> float:
    """2𝓓 - 𝓝², nonnegative up to roundoff for every two-qubit state."""
    return 2 * geometric_discord(rho, side) - negativity(rho) ** 2

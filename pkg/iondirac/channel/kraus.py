import math

import numpy

from iondirac.channel.models import KrausSet
from iondirac.errors import InputError
from iondirac.qmat import DensityMatrix, QMatrix


def kraus_set(gamma_rate: float, t: float) -> KrausSet:
    """Kraus operators of the collective dephasing channel after time ``t``.

    With x = e^{-Γt}: γ = √x, ω1 = √(1-x), ω2 = -ω1 x, ω3 = ω1² √(1+x).
    """
    if gamma_rate < 0:
        raise InputError(f"Noise rate must be >= 0, got {gamma_rate}")
    if t < 0:
        raise InputError(f"Time must be >= 0, got {t}")
    x = math.exp(-gamma_rate * t)
    gamma = math.exp(-gamma_rate * t / 2)
    omega1 = math.sqrt(1 - x)
    omega2 = -omega1 * x
    omega3 = omega1**2 * math.sqrt(1 + x)
    return KrausSet(
        d1=numpy.diag([gamma, 1.0, 1.0, gamma]).astype(numpy.complex128),
        d2=numpy.diag([omega1, 0.0, 0.0, omega2]).astype(numpy.complex128),
        d3=numpy.diag([0.0, 0.0, 0.0, omega3]).astype(numpy.complex128),
        t=t,
        gamma_rate=gamma_rate,
    )


def apply_channel(rho0: DensityMatrix, ks: KrausSet) -> DensityMatrix:
    """Operator-sum map ρ ↦ Σ_μ D_μ† ρ D_μ."""
    out = numpy.zeros((4, 4), dtype=numpy.complex128)
    for d in ks.operators:
        out += d.conj().T @ rho0.mat @ d
    return DensityMatrix(out)


def damping_factors(ks: KrausSet) -> QMatrix:
    """Entrywise factors F with (Σ_μ D_μ† ρ D_μ)_ij = F_ij ρ_ij, valid because every D_μ is diagonal."""
    diagonals = numpy.stack([numpy.diag(d) for d in ks.operators])
    return numpy.einsum("ki,kj->ij", diagonals.conj(), diagonals)

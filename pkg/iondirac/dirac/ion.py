import logging
import math

import numpy

from iondirac.dirac.models import DiracParams, IonParams
from iondirac.errors import InputError

logger = logging.getLogger(__name__)

PARALLEL_TOL = 1e-12


def light_speed(ion: IonParams) -> float:
    """Speed-of-light analogue c = 2 η Δ Ω̃."""
    return 2 * ion.eta * ion.Delta * ion.omega_tilde


def from_ion_params(ion: IonParams, p: float = 1.0, gamma_rate: float = 0.0) -> DiracParams:
    """Map trapped-ion controls onto natural-unit Dirac parameters.

    Uses c = 2ηΔΩ̃, mc² = 2δ, κ𝓔_j = 2Ω_j^(1) and μ𝓔_j/c = 2Ω_j^(2). The field magnitude is
    normalized to |κ𝓔| (or |μ𝓔| when the tensor carriers are off), so ``kappa`` is 1 or 0.
    The raw value of c is kept in ``metadata["c"]``.

    >>> from_ion_params(IonParams(eta=0.5, omega_tilde=0.5, delta=1.0, Delta=0.5)).m
    32.0
    """
    c = light_speed(ion)
    if c <= 0:
        raise InputError(f"Ion parameters give no speed-of-light analogue (c = {c})")
    mass = 2 * ion.delta / c**2
    tensor = 2 * numpy.asarray(ion.omega1, dtype=float)
    pseudotensor = 2 * c * numpy.asarray(ion.omega2, dtype=float)
    if abs(tensor[2]) > PARALLEL_TOL or abs(pseudotensor[2]) > PARALLEL_TOL:
        raise InputError("Carrier fields along z are not representable: the field must lie in the xy-plane")

    tensor_norm = float(numpy.linalg.norm(tensor))
    pseudo_norm = float(numpy.linalg.norm(pseudotensor))
    if tensor_norm > 0:
        E, kappa, direction = tensor_norm, 1.0, tensor / tensor_norm
    elif pseudo_norm > 0:
        E, kappa, direction = pseudo_norm, 0.0, pseudotensor / pseudo_norm
    else:
        E, kappa, direction = 0.0, 0.0, numpy.array([1.0, 0.0, 0.0])
    mu = float(pseudotensor @ direction) / E if E > 0 else 0.0
    if numpy.linalg.norm(pseudotensor - mu * E * direction) > PARALLEL_TOL * max(pseudo_norm, 1.0):
        raise InputError("Tensor and pseudotensor carriers must be parallel to share one field direction")
    theta = math.atan2(direction[1], direction[0])

    params = DiracParams(
        m=mass,
        p=p,
        E=E,
        kappa=kappa,
        mu=mu,
        theta=theta,
        gamma_rate=gamma_rate,
        metadata={"c": c},
    )
    logger.info(f"Mapped ion parameters to Dirac parameters: c={c:.6g}, m={mass:.6g}, E={E:.6g}, theta={theta:.6g}")
    return params

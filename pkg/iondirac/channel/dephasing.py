from iondirac.channel.base import NoiseChannel
from iondirac.channel.kraus import kraus_set
from iondirac.channel.models import KrausSet
from iondirac.errors import InputError
from iondirac.qmat import DensityMatrix


class CollectiveDephasing(NoiseChannel):
    """Both qubits coupled to one classical Markovian field; only its rate Γ enters."""

    def __init__(self, gamma_rate: float) -> None:
        if gamma_rate < 0:
            raise InputError(f"Noise rate must be >= 0, got {gamma_rate}")
        self._gamma_rate = gamma_rate

    @property
    def gamma_rate(self) -> float:
        return self._gamma_rate

    def kraus(self, t: float) -> KrausSet:
        return kraus_set(self._gamma_rate, t)

    def __repr__(self) -> str:
        return f"CollectiveDephasing(gamma_rate={self._gamma_rate!r})"


class IdentityChannel(CollectiveDephasing):
    """The noiseless channel (Γ = 0)."""

    def __init__(self) -> None:
        super().__init__(0.0)

    def apply(self, rho: DensityMatrix, t: float) -> DensityMatrix:
        if t < 0:
            raise InputError(f"Time must be >= 0, got {t}")
        return rho

    def __repr__(self) -> str:
        return "IdentityChannel()"

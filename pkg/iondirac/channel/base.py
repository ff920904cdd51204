import abc

from iondirac.channel.kraus import apply_channel
from iondirac.channel.models import KrausSet
from iondirac.qmat import DensityMatrix


class NoiseChannel(abc.ABC):
    """Abstract base class for time-parameterized Kraus channels."""

    @abc.abstractmethod
    def kraus(self, t: float) -> KrausSet:
        """Kraus operators after time ``t``."""
        ...

    @property
    @abc.abstractmethod
    def gamma_rate(self) -> float:
        """Noise rate driving the channel."""
        ...

    def apply(self, rho: DensityMatrix, t: float) -> DensityMatrix:
        """Interaction-picture state after time ``t``."""
        return apply_channel(rho, self.kraus(t))

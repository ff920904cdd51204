import dataclasses

import numpy
import numpy.typing as npt

from iondirac.qmat import QMatrix, identity2, kron, pauli_vector


@dataclasses.dataclass(frozen=True, eq=False)
class FanoComponents:
    """Fano (Pauli) decomposition of a two-qubit state.

    ρ = ¼[I + σ⁽¹⁾·a1 + σ⁽²⁾·a2 + Σ_ij t_ij σ_i⊗σ_j]
    """

    a1: npt.NDArray[numpy.float64]
    """Bloch vector of qubit 1."""

    a2: npt.NDArray[numpy.float64]
    """Bloch vector of qubit 2."""

    T: npt.NDArray[numpy.float64]
    """3x3 correlation matrix t_ij = Tr[ρ σ_i⊗σ_j]."""

    def bloch(self, side: int) -> npt.NDArray[numpy.float64]:
        return self.a1 if side == 1 else self.a2

    def reconstruct(self) -> QMatrix:
        """Density matrix rebuilt from the components."""
        sigmas = pauli_vector()
        eye = identity2()
        mat = kron(eye, eye)
        for i, sigma in enumerate(sigmas):
            mat += self.a1[i] * kron(sigma, eye)
            mat += self.a2[i] * kron(eye, sigma)
            for j, other in enumerate(sigmas):
                mat += self.T[i, j] * kron(sigma, other)
        return mat / 4


@dataclasses.dataclass(frozen=True)
class CuspReport:
    """Discontinuities found in a derivative series."""

    times: tuple[float, ...] = ()
    """Locations of the detected cusps (p·t)."""

    jump_sizes: tuple[float, ...] = ()
    """Estimated jump of the derivative across each cusp."""

    threshold: float = 0.0
    """Smallest second-difference magnitude that counted as a candidate."""

    def __len__(self) -> int:
        return len(self.times)

    def __bool__(self) -> bool:
        return bool(self.times)

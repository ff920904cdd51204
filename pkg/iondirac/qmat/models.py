import dataclasses
import logging
import typing

import numpy
import numpy.typing as npt

from iondirac.errors import ContractViolation

logger = logging.getLogger(__name__)

QMatrix: typing.TypeAlias = npt.NDArray[numpy.complex128]
"""Dense 4x4 complex matrix in the ionic basis |a>=|00>, |b>=|01>, |c>=|10>, |d>=|11>."""

QMatrix2: typing.TypeAlias = npt.NDArray[numpy.complex128]
"""Dense 2x2 complex matrix acting on a single qubit."""

DIM = 4

TOL_HERM = 1e-10
TOL_TRACE = 1e-10
TOL_PSD = -1e-10


def as_qmatrix(entries: typing.Any) -> QMatrix:
    """Coerce ``entries`` into a 4x4 complex matrix.

    >>> as_qmatrix(numpy.eye(4)).dtype
    dtype('complex128')
    """
    mat = numpy.asarray(entries, dtype=numpy.complex128)
    if mat.shape != (DIM, DIM):
        raise ContractViolation(f"Expected a {DIM}x{DIM} matrix, got shape {mat.shape}")
    return mat


def is_hermitian(m: QMatrix, tol: float = TOL_HERM) -> bool:
    return bool(numpy.max(numpy.abs(m - m.conj().T)) <= tol)


def is_unit_trace(m: QMatrix, tol: float = TOL_TRACE) -> bool:
    return bool(abs(numpy.trace(m) - 1.0) <= tol)


def is_psd(m: QMatrix, tol: float = TOL_PSD) -> bool:
    """Whether the smallest eigenvalue of the Hermitian part of ``m`` is at least ``tol``."""
    hermitian_part = (m + m.conj().T) / 2
    return bool(numpy.linalg.eigvalsh(hermitian_part)[0] >= tol)


@dataclasses.dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated two-qubit density matrix.

    Roundoff-level negative eigenvalues (down to ``TOL_PSD``) are clamped to zero on construction.
    """

    mat: QMatrix
    """The 4x4 matrix; Hermitian, unit trace and positive semidefinite."""

    def __post_init__(self) -> None:
        mat = as_qmatrix(self.mat)
        if not is_hermitian(mat):
            raise ContractViolation(
                f"Density matrix is not Hermitian (max deviation {numpy.max(numpy.abs(mat - mat.conj().T)):.3g})"
            )
        if not is_unit_trace(mat):
            raise ContractViolation(f"Density matrix trace is {numpy.trace(mat).real:.12g}, expected 1")
        mat = (mat + mat.conj().T) / 2
        if not is_psd(mat):
            raise ContractViolation(f"Density matrix has negative eigenvalue {numpy.linalg.eigvalsh(mat)[0]:.3g}")
        if not is_psd(mat, 0.0):
            eigvals, eigvecs = numpy.linalg.eigh(mat)
            if eigvals[0] < -1e-13:
                logger.warning(f"Clamping negative eigenvalue {eigvals[0]:.3g} of density matrix")
            clamped = numpy.clip(eigvals, 0.0, None)
            mat = (eigvecs * clamped) @ eigvecs.conj().T
            mat = mat / numpy.trace(mat).real
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)

    @classmethod
    def from_ket(cls, amplitudes: typing.Sequence[complex] | npt.ArrayLike) -> "DensityMatrix":
        """Build the projector onto the normalized ket with the given four amplitudes.

        >>> DensityMatrix.from_ket([1, 0, 0, 0]).mat.real.diagonal().tolist()
        [1.0, 0.0, 0.0, 0.0]
        """
        ket = numpy.asarray(amplitudes, dtype=numpy.complex128).reshape(DIM)
        norm = numpy.linalg.norm(ket)
        if norm == 0:
            raise ContractViolation("Cannot build a density matrix from the zero vector")
        ket = ket / norm
        return cls(numpy.outer(ket, ket.conj()))

    @classmethod
    def maximally_mixed(cls) -> "DensityMatrix":
        return cls(numpy.eye(DIM, dtype=numpy.complex128) / DIM)

import numpy
import numpy.typing as npt

from iondirac.errors import ContractViolation, InputError
from iondirac.qmat.models import TOL_HERM, DensityMatrix, QMatrix, QMatrix2, as_qmatrix, is_hermitian

_PAULI: dict[str, QMatrix2] = {
    "x": numpy.array([[0, 1], [1, 0]], dtype=numpy.complex128),
    "y": numpy.array([[0, -1j], [1j, 0]], dtype=numpy.complex128),
    "z": numpy.array([[1, 0], [0, -1]], dtype=numpy.complex128),
}


def identity2() -> QMatrix2:
    return numpy.eye(2, dtype=numpy.complex128)


def identity4() -> QMatrix:
    return numpy.eye(4, dtype=numpy.complex128)


def pauli(i: str) -> QMatrix2:
    """Standard Pauli matrix for axis ``x``, ``y`` or ``z``.

    >>> pauli("x").real.astype(int).tolist()
    [[0, 1], [1, 0]]
    """
    try:
        return _PAULI[i].copy()
    except KeyError:
        raise InputError(f"Invalid Pauli axis: {i!r} (expected one of x, y, z)") from None


def pauli_vector() -> tuple[QMatrix2, QMatrix2, QMatrix2]:
    """The triple (sigma_x, sigma_y, sigma_z)."""
    return pauli("x"), pauli("y"), pauli("z")


def kron(a: QMatrix2, b: QMatrix2) -> QMatrix:
    """Kronecker product with qubit 1 (total angular momentum) as the left factor."""
    return numpy.kron(numpy.asarray(a, dtype=numpy.complex128), numpy.asarray(b, dtype=numpy.complex128))


def kron_dot(a: QMatrix2, vector: npt.ArrayLike) -> QMatrix:
    """``a ⊗ (sigma · vector)`` for a real 3-vector."""
    vx, vy, vz = numpy.asarray(vector, dtype=float)
    sx, sy, sz = pauli_vector()
    return kron(a, vx * sx + vy * sy + vz * sz)


def hermitian_eigen(m: QMatrix) -> tuple[npt.NDArray[numpy.float64], QMatrix]:
    """Eigenvalues (ascending) and orthonormal eigenvectors (as columns) of a Hermitian matrix."""
    m = as_qmatrix(m)
    if not is_hermitian(m, TOL_HERM):
        raise ContractViolation("hermitian_eigen requires a Hermitian matrix")
    eigvals, eigvecs = numpy.linalg.eigh((m + m.conj().T) / 2)
    return eigvals, eigvecs


def partial_transpose(rho: DensityMatrix | QMatrix, subsystem: int = 1) -> QMatrix:
    """Transpose the indices of one qubit only.

    The matrix is viewed as ``rho[i1, i2, j1, j2]``; subsystem 1 swaps ``i1`` and ``j1``.
    """
    mat = rho.mat if isinstance(rho, DensityMatrix) else as_qmatrix(rho)
    tensor = mat.reshape(2, 2, 2, 2)
    if subsystem == 1:
        swapped = tensor.transpose(2, 1, 0, 3)
    elif subsystem == 2:
        swapped = tensor.transpose(0, 3, 2, 1)
    else:
        raise InputError(f"Invalid subsystem: {subsystem} (expected 1 or 2)")
    return swapped.reshape(4, 4).copy()


def trace_norm(m: QMatrix) -> float:
    """Sum of the absolute eigenvalues of a Hermitian matrix."""
    m = as_qmatrix(m)
    if not is_hermitian(m, TOL_HERM):
        raise ContractViolation("trace_norm requires a Hermitian matrix")
    return float(numpy.sum(numpy.abs(numpy.linalg.eigvalsh((m + m.conj().T) / 2))))


def commutator(a: QMatrix, b: QMatrix) -> QMatrix:
    return a @ b - b @ a

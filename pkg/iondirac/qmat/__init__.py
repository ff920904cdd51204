from iondirac.qmat.models import (
    TOL_HERM,
    TOL_PSD,
    TOL_TRACE,
    DensityMatrix,
    QMatrix,
    QMatrix2,
    as_qmatrix,
    is_hermitian,
    is_psd,
    is_unit_trace,
)
from iondirac.qmat.ops import (
    commutator,
    hermitian_eigen,
    identity2,
    identity4,
    kron,
    kron_dot,
    partial_transpose,
    pauli,
    pauli_vector,
    trace_norm,
)

__all__ = [
    "TOL_HERM",
    "TOL_PSD",
    "TOL_TRACE",
    "DensityMatrix",
    "QMatrix",
    "QMatrix2",
    "as_qmatrix",
    "commutator",
    "hermitian_eigen",
    "identity2",
    "identity4",
    "is_hermitian",
    "is_psd",
    "is_unit_trace",
    "kron",
    "kron_dot",
    "partial_transpose",
    "pauli",
    "pauli_vector",
    "trace_norm",
]

import typing

import numpy

from iondirac.channel import basis_index
from iondirac.errors import InputError
from iondirac.qmat import DensityMatrix

SQRT_HALF = 1 / numpy.sqrt(2)


def cat_state() -> DensityMatrix:
    """(|a⟩ + |d⟩)/√2, the two-qubit cat state."""
    return DensityMatrix.from_ket([SQRT_HALF, 0, 0, SQRT_HALF])


def werner_state() -> DensityMatrix:
    """(|b⟩ + |c⟩)/√2, which lives in the decoherence-free subspace."""
    return DensityMatrix.from_ket([0, SQRT_HALF, SQRT_HALF, 0])


def preset_state(name: str, amplitudes: typing.Sequence[complex] = ()) -> DensityMatrix:
    """Initial state by name: ``cat``, ``werner``, ``basis:<j>`` or ``custom`` (from ``amplitudes``).

    >>> preset_state("basis:b").mat.real.diagonal().tolist()
    [0.0, 1.0, 0.0, 0.0]
    """
    if name == "cat":
        return cat_state()
    if name == "werner":
        return werner_state()
    if name.startswith("basis:"):
        ket = numpy.zeros(4, dtype=numpy.complex128)
        ket[basis_index(name.removeprefix("basis:"))] = 1.0
        return DensityMatrix.from_ket(ket)
    if name == "custom":
        if len(amplitudes) != 4:
            raise InputError(f"Custom state needs exactly 4 amplitudes, got {len(amplitudes)}")
        return DensityMatrix.from_ket(list(amplitudes))
    raise InputError(f"Unknown state: {name!r}")

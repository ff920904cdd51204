import typing


class IonDiracError(Exception):
    """Base class for all errors raised by iondirac."""

    exit_code: typing.ClassVar[int] = 1


class InputError(IonDiracError, ValueError):
    """Invalid user-facing input (names, ranges, grids, configuration)."""

    exit_code = 2


class ContractViolation(IonDiracError, ValueError):
    """A precondition of an internal operation was not met (e.g. non-Hermitian input)."""

    exit_code = 2


class DegenerateSpectrum(IonDiracError, ArithmeticError):
    """The Hamiltonian spectrum is degenerate, so the eigenprojector ansatz does not apply."""

    exit_code = 3

    def __init__(self, c1: float, c2: float, params: object | None = None) -> None:
        self.c1 = c1
        self.c2 = c2
        self.params = params
        message = f"Degenerate spectrum: c2={c2:.6g} is below the threshold for c1={c1:.6g}"
        if params is not None:
            message = f"{message} (parameters: {params})"
        super().__init__(message)


class SpectralConsistencyError(IonDiracError, RuntimeError):
    """The eigenprojector ansatz failed an internal consistency check."""


class OutputError(IonDiracError, OSError):
    """Writing a result file failed."""

    exit_code = 4

    def __init__(self, path: object, reason: str) -> None:
        self.path = path
        super().__init__(f"Failed to write '{path}': {reason}")

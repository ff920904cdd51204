import dataclasses
import math

import numpy
import numpy.typing as npt

from iondirac.errors import InputError
from iondirac.qmat import DensityMatrix

Vector3 = tuple[float, float, float]
Label = tuple[int, int]
"""Spectral label (n, s) with n, s in {0, 1}."""

LABELS: tuple[Label, ...] = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclasses.dataclass(frozen=True)
class DiracParams:
    """Parameters of the Dirac Hamiltonian with tensor and pseudotensor fields (natural units).

    The momentum points along x and the field lies in the xy-plane at angle ``theta``.
    """

    m: float
    """Mass."""

    p: float
    """Momentum magnitude along x."""

    E: float
    """Electric-field magnitude."""

    kappa: float = 1.0
    """Tensor coupling."""

    mu: float = 1.0
    """Pseudotensor coupling."""

    theta: float = math.pi / 4
    """Field angle in the xy-plane (radians)."""

    gamma_rate: float = 0.0
    """Collective dephasing rate Γ."""

    metadata: dict[str, float] = dataclasses.field(default_factory=dict, compare=False, hash=False)
    """Free-form numeric annotations (e.g. the raw speed-of-light analogue of an ion mapping)."""

    def __post_init__(self) -> None:
        if self.m < 0:
            raise InputError(f"Mass must be >= 0, got {self.m}")
        if self.E < 0:
            raise InputError(f"Field magnitude must be >= 0, got {self.E}")
        if self.p < 0:
            raise InputError(f"Momentum magnitude must be >= 0, got {self.p}")
        if not (self.p > 0 or self.E > 0):
            raise InputError("At least one of p or E must be positive")
        if self.gamma_rate < 0:
            raise InputError(f"Noise rate must be >= 0, got {self.gamma_rate}")

    @property
    def momentum(self) -> npt.NDArray[numpy.float64]:
        return numpy.array([self.p, 0.0, 0.0])

    @property
    def field(self) -> npt.NDArray[numpy.float64]:
        return self.E * numpy.array([math.cos(self.theta), math.sin(self.theta), 0.0])

    def to_generalized(self) -> "GeneralizedParams":
        """The equivalent generalized parameter set (ν = q = 0, 𝓦 = 0, 𝓑 = 𝓔)."""
        return GeneralizedParams(
            m=self.m,
            P=(self.p, 0.0, 0.0),
            B=(self.E * math.cos(self.theta), self.E * math.sin(self.theta), 0.0),
            kappa_a=self.kappa,
            mu_a=self.mu,
        )


@dataclasses.dataclass(frozen=True)
class GeneralizedParams:
    """Parameters of the generalized Dirac-like Hamiltonian with all global couplings.

    ``kappa_a`` multiplies the tensor term βΣ·𝓑 and ``mu_a`` the pseudotensor term iβα·𝓑, so that
    ``nu = q = 0``, ``W = 0``, ``kappa_a * B = kappa * E`` and ``mu_a * B = mu * E`` reproduce the
    Dirac Hamiltonian exactly.
    """

    m: float = 0.0
    """Mass."""

    P: Vector3 = (0.0, 0.0, 0.0)
    """Momentum vector."""

    nu: float = 0.0
    """Pseudoscalar coupling."""

    q: float = 0.0
    """Scalar part of the pseudovector coupling."""

    W: Vector3 = (0.0, 0.0, 0.0)
    """Vector part of the pseudovector coupling."""

    kappa_a: float = 0.0
    """Tensor coupling."""

    mu_a: float = 0.0
    """Pseudotensor coupling."""

    B: Vector3 = (0.0, 0.0, 0.0)
    """External field vector shared by the tensor and pseudotensor terms."""


@dataclasses.dataclass(frozen=True, eq=False)
class SpectralData:
    """Closed-form eigenvalues and eigenprojectors of a Hamiltonian with 𝓞² = c₂I."""

    lambdas: dict[Label, float]
    """Eigenvalue for each label (n, s)."""

    projectors: dict[Label, DensityMatrix]
    """Rank-1 eigenprojector for each label (n, s)."""

    c1: float
    """Tr[H²]/4."""

    c2: float
    """Tr[(H² - c₁I)²]/16."""

    def eigenvalue_list(self) -> list[float]:
        return [self.lambdas[label] for label in LABELS]


@dataclasses.dataclass(frozen=True)
class IonParams:
    """Trapped-ion control parameters entering the Dirac correspondence."""

    eta: float
    """Lamb-Dicke parameter."""

    omega_tilde: float
    """Rabi frequency of the (anti-)Jaynes-Cummings drives."""

    delta: float
    """Detuning."""

    Delta: float
    """Ground-state delocalization width."""

    omega1: Vector3 = (0.0, 0.0, 0.0)
    """Carrier frequencies mapped to the tensor field."""

    omega2: Vector3 = (0.0, 0.0, 0.0)
    """Carrier frequencies mapped to the pseudotensor field."""

    def __post_init__(self) -> None:
        if self.Delta <= 0:
            raise InputError(f"Ground-state width Delta must be > 0, got {self.Delta}")
        if self.omega_tilde <= 0:
            raise InputError(f"Rabi frequency omega_tilde must be > 0, got {self.omega_tilde}")
        if self.eta <= 0:
            raise InputError(f"Lamb-Dicke parameter eta must be > 0, got {self.eta}")
        if self.delta < 0:
            raise InputError(f"Detuning delta must be >= 0, got {self.delta}")
        for name in ("omega1", "omega2"):
            if any(component < 0 for component in getattr(self, name)):
                raise InputError(f"Carrier frequencies {name} must be nonnegative, got {getattr(self, name)}")

"""Dirac-like Hamiltonians in the two-qubit (ionic) basis.

The Dirac-Pauli representation is fixed by the two-qubit assignment of the ionic levels:

    β = σz ⊗ I,   α_j = σx ⊗ σ_j,   Σ_j = I ⊗ σ_j,   γ5 = σx ⊗ I.
"""

import logging
import typing

import numpy
import numpy.typing as npt

from iondirac.dirac.models import DiracParams, GeneralizedParams
from iondirac.qmat import QMatrix, identity2, identity4, kron, kron_dot, pauli, pauli_vector

logger = logging.getLogger(__name__)


def beta() -> QMatrix:
    return kron(pauli("z"), identity2())


def alpha() -> list[QMatrix]:
    return [kron(pauli("x"), s) for s in pauli_vector()]


def spin() -> list[QMatrix]:
    return [kron(identity2(), s) for s in pauli_vector()]


def gamma5() -> QMatrix:
    return kron(pauli("x"), identity2())


def _dot(matrices: typing.Sequence[QMatrix], vector: npt.ArrayLike) -> QMatrix:
    vx, vy, vz = numpy.asarray(vector, dtype=float)
    return vx * matrices[0] + vy * matrices[1] + vz * matrices[2]


def _as_generalized(params: DiracParams | GeneralizedParams) -> GeneralizedParams:
    return params.to_generalized() if isinstance(params, DiracParams) else params


def build_hd(params: DiracParams) -> QMatrix:
    """Dirac Hamiltonian with tensor and pseudotensor fields, assembled from two-qubit operators."""
    sx, sy, sz = pauli_vector()
    h = (
        params.m * kron(sz, identity2())
        + params.p * kron(sx, sx)
        + kron_dot(sz, params.kappa * params.field)
        - kron_dot(sy, params.mu * params.field)
    )
    logger.debug(f"Built H_D for {params}")
    return h


def build_hg(params: GeneralizedParams) -> QMatrix:
    """Generalized Hamiltonian with pseudoscalar, pseudovector, tensor and pseudotensor couplings,
    assembled from the Dirac matrices."""
    b = beta()
    g5 = gamma5()
    a = alpha()
    beta_spin = [b @ sj for sj in spin()]
    beta_alpha = [b @ aj for aj in a]
    gamma5_alpha = [g5 @ aj for aj in a]
    return (
        params.m * b
        + _dot(a, params.P)
        + 1j * params.nu * (b @ g5)
        - params.q * g5
        + _dot(gamma5_alpha, params.W)
        + params.kappa_a * _dot(beta_spin, params.B)
        + 1j * params.mu_a * _dot(beta_alpha, params.B)
    )


def invariants_from_trace(h: QMatrix) -> tuple[float, float]:
    """c1 = Tr[H²]/4 and c2 = Tr[(H² - c1 I)²]/16 computed from the matrix itself."""
    h2 = h @ h
    c1 = float(numpy.trace(h2).real / 4)
    shifted = h2 - c1 * identity4()
    c2 = float(numpy.trace(shifted @ shifted).real / 16)
    return c1, c2


def invariants(params: DiracParams | GeneralizedParams) -> tuple[float, float]:
    """Closed-form invariants (c1, c2) of the generalized Hamiltonian.

    >>> tuple(round(c, 12) for c in invariants(DiracParams(m=0.0, p=1.0, E=1.0)))
    (3.0, 1.0)
    """
    g = _as_generalized(params)
    P = numpy.asarray(g.P, dtype=float)
    W = numpy.asarray(g.W, dtype=float)
    B = numpy.asarray(g.B, dtype=float)
    omega = numpy.cross(P, B)
    c1 = P @ P + g.m**2 + g.nu**2 + g.q**2 + W @ W + (g.kappa_a**2 + g.mu_a**2) * (B @ B)
    spin_part = (g.m * g.kappa_a + g.nu * g.mu_a) * B - g.q * P
    beta_spin_part = g.m * W + g.mu_a * omega
    beta_alpha_part = g.kappa_a * omega - g.nu * W
    w_dot_b = W @ B
    c2 = (
        spin_part @ spin_part
        + beta_spin_part @ beta_spin_part
        + beta_alpha_part @ beta_alpha_part
        + g.q**2 * (W @ W)
        + (P @ W) ** 2
        + (g.kappa_a**2 + g.mu_a**2) * w_dot_b**2
    )
    return float(c1), float(c2)


def operator_o(params: DiracParams | GeneralizedParams) -> QMatrix:
    """𝓞 = (H² - c1 I)/2 for the generalized Hamiltonian."""
    g = _as_generalized(params)
    h = build_hg(g)
    c1, _ = invariants(g)
    return (h @ h - c1 * identity4()) / 2


def operator_o_closed_form(params: DiracParams | GeneralizedParams) -> QMatrix:
    """𝓞 assembled term by term from its Pauli-string coefficients."""
    g = _as_generalized(params)
    P = numpy.asarray(g.P, dtype=float)
    W = numpy.asarray(g.W, dtype=float)
    B = numpy.asarray(g.B, dtype=float)
    omega = numpy.cross(P, B)
    sx, sy, sz = pauli_vector()
    i2 = identity2()
    return (
        kron_dot(i2, (g.m * g.kappa_a + g.nu * g.mu_a) * B - g.q * P)
        + kron_dot(sz, g.m * W + g.mu_a * omega)
        + kron_dot(sy, g.kappa_a * omega - g.nu * W)
        - kron_dot(sx, g.q * W)
        + (P @ W) * kron(sx, i2)
        + g.kappa_a * (W @ B) * kron(sz, i2)
        - g.mu_a * (W @ B) * kron(sy, i2)
    )

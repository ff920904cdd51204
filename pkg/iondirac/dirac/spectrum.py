import logging
import math

import numpy

from iondirac.dirac.hamiltonian import build_hd, invariants
from iondirac.dirac.models import LABELS, DiracParams, Label, SpectralData
from iondirac.errors import DegenerateSpectrum, SpectralConsistencyError
from iondirac.qmat import DensityMatrix, QMatrix, commutator, identity4

logger = logging.getLogger(__name__)

DEGENERACY_RTOL = 1e-14
CONSISTENCY_TOL = 1e-10


def _check_c2(c1: float, c2: float, params: object | None) -> None:
    if c2 < DEGENERACY_RTOL * max(c1**2, 1.0):
        raise DegenerateSpectrum(c1, c2, params)


def _check_gap(c1: float, c2: float, params: object | None) -> None:
    gap = c1 - 2 * math.sqrt(c2)
    # c1 >= 2 sqrt(c2) holds for every Hermitian H; equality means a doubly degenerate zero eigenvalue
    assert gap > -1e-9 * max(c1, 1.0), f"c1 - 2 sqrt(c2) = {gap} is negative"
    if gap <= 1e-12 * max(c1, 1.0):
        raise DegenerateSpectrum(c1, c2, params)


def _check_non_degenerate(c1: float, c2: float, params: object | None = None) -> None:
    _check_c2(c1, c2, params)
    _check_gap(c1, c2, params)


def closed_form_eigenvalues(c1: float, c2: float) -> dict[Label, float]:
    """λ_{n,s} = (-1)^n sqrt(c1 + 2 (-1)^s sqrt(c2))."""
    root = math.sqrt(c2)
    return {(n, s): (-1) ** n * math.sqrt(max(c1 + 2 * (-1) ** s * root, 0.0)) for n, s in LABELS}


def eigenvalues(params: DiracParams) -> dict[Label, float]:
    """Closed-form eigenvalues of the Dirac Hamiltonian keyed by (n, s)."""
    c1, c2 = invariants(params)
    _check_non_degenerate(c1, c2, params)
    return closed_form_eigenvalues(c1, c2)


def ansatz_projector(h: QMatrix, o: QMatrix, c2: float, lam: float, n: int, s: int) -> QMatrix:
    """¼ (I + (-1)^s 𝓞/√c2)(I + (-1)^n H/|λ|), the operator-first factor order."""
    eye = identity4()
    return (eye + (-1) ** s * o / math.sqrt(c2)) @ (eye + (-1) ** n * h / abs(lam)) / 4


def _energy_first_projector(h: QMatrix, o: QMatrix, c2: float, lam: float, n: int, s: int) -> QMatrix:
    eye = identity4()
    return (eye + (-1) ** n * h / abs(lam)) @ (eye + (-1) ** s * o / math.sqrt(c2)) / 4


def validated_projector(h: QMatrix, o: QMatrix, c2: float, lam: float, n: int, s: int) -> DensityMatrix:
    """Build the ansatz projector for (n, s) and check it is a pure state independent of factor order."""
    rho = ansatz_projector(h, o, c2, lam, n, s)
    other_order = _energy_first_projector(h, o, c2, lam, n, s)
    order_gap = float(numpy.max(numpy.abs(rho - other_order)))
    if order_gap > CONSISTENCY_TOL:
        raise SpectralConsistencyError(f"Ansatz factor orders disagree by {order_gap:.3g} for (n, s) = ({n}, {s})")
    purity = float(numpy.trace(rho @ rho).real)
    if abs(purity - 1.0) > CONSISTENCY_TOL:
        raise SpectralConsistencyError(
            f"Ansatz for (n, s) = ({n}, {s}) is not a pure state (purity {purity:.12g}); 𝓞² differs from c2 I"
        )
    return DensityMatrix(rho)


def spectral_data(h: QMatrix, c1: float, c2: float, params: object | None = None) -> SpectralData:
    """Eigenvalues and eigenprojectors of any Hamiltonian whose operator 𝓞 squares to c2 I."""
    _check_c2(c1, c2, params)
    o = (h @ h - c1 * identity4()) / 2
    comm = float(numpy.max(numpy.abs(commutator(h, o))))
    if comm > CONSISTENCY_TOL * max(c1, 1.0) ** 1.5:
        raise SpectralConsistencyError(f"[H, 𝓞] does not vanish (max entry {comm:.3g})")
    residual = float(numpy.max(numpy.abs(o @ o - c2 * identity4())))
    if residual > CONSISTENCY_TOL * max(c1, 1.0) ** 2:
        raise SpectralConsistencyError(f"𝓞² differs from c2 I (max deviation {residual:.3g})")
    _check_gap(c1, c2, params)
    lambdas = closed_form_eigenvalues(c1, c2)
    projectors = {(n, s): validated_projector(h, o, c2, lambdas[(n, s)], n, s) for n, s in LABELS}
    logger.debug(f"Spectral data: c1={c1:.12g}, c2={c2:.12g}, lambdas={lambdas}")
    return SpectralData(lambdas=lambdas, projectors=projectors, c1=c1, c2=c2)


def eigenprojectors(params: DiracParams) -> SpectralData:
    """Eigenprojectors ϱ_{n,s} of the Dirac Hamiltonian from the polynomial ansatz."""
    c1, c2 = invariants(params)
    return spectral_data(build_hd(params), c1, c2, params)


def xi_coefficients(params: DiracParams, n: int, s: int) -> tuple[float, float, float, float]:
    """Coefficients of ϱ_{n,s} = ξ0 I + ξ1 H + ξ2 H² + ξ3 H³."""
    c1, c2 = invariants(params)
    _check_non_degenerate(c1, c2, params)
    root = math.sqrt(c2)
    abs_lam = abs(closed_form_eigenvalues(c1, c2)[(n, s)])
    sign_n = (-1) ** n
    sign_s = (-1) ** s
    xi0 = (1 - c1 * sign_s / (2 * root)) / 4
    xi1 = sign_n * (1 - c1 * sign_s / (2 * root)) / (4 * abs_lam)
    xi2 = sign_s / (8 * root)
    xi3 = sign_s * sign_n / (8 * root * abs_lam)
    return xi0, xi1, xi2, xi3


def projector_from_polynomial(h: QMatrix, xi: tuple[float, float, float, float]) -> QMatrix:
    h2 = h @ h
    return xi[0] * identity4() + xi[1] * h + xi[2] * h2 + xi[3] * (h2 @ h)

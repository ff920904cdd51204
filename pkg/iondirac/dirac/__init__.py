from iondirac.dirac.hamiltonian import (
    alpha,
    beta,
    build_hd,
    build_hg,
    gamma5,
    invariants,
    invariants_from_trace,
    operator_o,
    operator_o_closed_form,
    spin,
)
from iondirac.dirac.ion import from_ion_params, light_speed
from iondirac.dirac.models import LABELS, DiracParams, GeneralizedParams, IonParams, Label, SpectralData
from iondirac.dirac.spectrum import (
    ansatz_projector,
    closed_form_eigenvalues,
    eigenprojectors,
    eigenvalues,
    projector_from_polynomial,
    spectral_data,
    validated_projector,
    xi_coefficients,
)

__all__ = [
    "LABELS",
    "DiracParams",
    "GeneralizedParams",
    "IonParams",
    "Label",
    "SpectralData",
    "alpha",
    "ansatz_projector",
    "beta",
    "build_hd",
    "build_hg",
    "closed_form_eigenvalues",
    "eigenprojectors",
    "eigenvalues",
    "from_ion_params",
    "gamma5",
    "invariants",
    "invariants_from_trace",
    "light_speed",
    "operator_o",
    "operator_o_closed_form",
    "projector_from_polynomial",
    "spectral_data",
    "spin",
    "validated_projector",
    "xi_coefficients",
]

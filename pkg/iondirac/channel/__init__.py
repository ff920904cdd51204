from iondirac.channel.base import NoiseChannel
from iondirac.channel.dephasing import CollectiveDephasing, IdentityChannel
from iondirac.channel.evolution import (
    BASIS_LABELS,
    DEFAULT_STEPS,
    DEFAULT_T_MAX,
    basis_index,
    evolve_noiseless,
    evolve_noisy,
    evolve_trajectory,
    populations,
    spectral_unitary,
    survival_probability,
    time_grid,
    transition_matrix,
    transition_probability,
)
from iondirac.channel.kraus import apply_channel, damping_factors, kraus_set
from iondirac.channel.models import PICTURE_SIGN_ALIASES, KrausSet, PictureSign, TimeSeries

__all__ = [
    "BASIS_LABELS",
    "DEFAULT_STEPS",
    "DEFAULT_T_MAX",
    "CollectiveDephasing",
    "IdentityChannel",
    "KrausSet",
    "NoiseChannel",
    "PICTURE_SIGN_ALIASES",
    "PictureSign",
    "TimeSeries",
    "apply_channel",
    "basis_index",
    "damping_factors",
    "evolve_noiseless",
    "evolve_noisy",
    "evolve_trajectory",
    "kraus_set",
    "populations",
    "spectral_unitary",
    "survival_probability",
    "time_grid",
    "transition_matrix",
    "transition_probability",
]

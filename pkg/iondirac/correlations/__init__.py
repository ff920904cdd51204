from iondirac.correlations.cusps import MIN_CUSP_POINTS, detect_cusps, discord_derivative
from iondirac.correlations.measures import discord_negativity_gap, fano, geometric_discord, negativity, purity
from iondirac.correlations.models import CuspReport, FanoComponents

__all__ = [
    "MIN_CUSP_POINTS",
    "CuspReport",
    "FanoComponents",
    "detect_cusps",
    "discord_derivative",
    "discord_negativity_gap",
    "fano",
    "geometric_discord",
    "negativity",
    "purity",
]

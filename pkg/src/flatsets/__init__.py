"""Flat {0, alpha}-sets of unit vectors from bipartite distance-regular graphs."""

from flatsets.bounds import dgs_bounds, evaluate_bounds, flat_bounds, tensor_rank_check
from flatsets.codes import KasamiParams, LinearCode, golay_code, kasami_code, vls_code
from flatsets.construction import FlatVectorSet, angle_set, godsil_roy
from flatsets.families import FAMILIES, get_setup
from flatsets.graphs import BipartiteGraph, IntersectionArray, verify_distance_regular
from flatsets.groups import FiniteAbelianGroup, characters, is_elementary_2, make_group
from flatsets.optimality import TightnessReport, feasible, search_tight
from flatsets.spectra import Spectrum, spectrum_from_array

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph", "FAMILIES", "FiniteAbelianGroup", "FlatVectorSet", "IntersectionArray",
    "KasamiParams", "LinearCode", "Spectrum", "TightnessReport", "angle_set", "characters",
    "dgs_bounds", "evaluate_bounds", "feasible", "flat_bounds", "get_setup", "godsil_roy",
    "golay_code", "is_elementary_2", "kasami_code", "make_group", "search_tight",
    "spectrum_from_array", "tensor_rank_check", "verify_distance_regular", "vls_code",
]

"""matchperm: permanents and perfect-matching generating functions via
brace decompositions, Pfaffian orientations and width-bounded DP."""

__version__ = "0.1.0"

from ._kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .errors import InputError, MatchpermError, ResourceError, RoutingError
from .graph import BipartiteGraph, elementary_components, is_isomorphic
from .poly import ONE, ZERO, Poly
from .matching import (is_brace, is_k_extendable, is_matching_covered,
                       matching_porosity, max_weight_perfect_matching)
from .oracle import (count_perfect_matchings_oracle,
                     enumerate_generating_function,
                     enumerate_perfect_matchings, ryser_permanent)
from .tightcut import (TightCutTree, contract_shore, find_nontrivial_tight_cut,
                       four_cycle_sum, is_tight_cut, splice,
                       tight_cut_decomposition)
from .minors import (MatchingMinorModel, bicontract, collapse_model,
                     contains_matching_minor, find_conformal_bisubdivision,
                     find_conformal_cross, verify_matching_minor_model)
from .pfaffian import (RotationSystem, count_by_determinant, is_pfaffian,
                       kasteleyn_orientation, pfaffian_generating_function,
                       planar_embed)
from .pmw import (PerfectMatchingDecomposition, decomposition_width,
                  exact_pmw, generating_function_dp, heuristic_decomposition,
                  vertex_gen_dp)
from .generators import GeneratedGraph, make
from .reduction import (CrossingSpec, chi_weight_sum, sign_crossing_replace,
                        signed_matching_count)
from .permanent import (BiadjacencyMatrix, RoutingReport,
                        count_perfect_matchings, generating_function,
                        permanent, weighted_generating_function)

__all__ = [
    "__version__", "KERNEL_IMPLEMENTATION",
    "MatchpermError", "InputError", "RoutingError", "ResourceError",
    "BipartiteGraph", "elementary_components", "is_isomorphic",
    "Poly", "ZERO", "ONE",
    "matching_porosity", "is_k_extendable", "is_matching_covered",
    "is_brace", "max_weight_perfect_matching",
    "ryser_permanent", "enumerate_perfect_matchings",
    "count_perfect_matchings_oracle", "enumerate_generating_function",
    "is_tight_cut", "find_nontrivial_tight_cut", "contract_shore",
    "TightCutTree", "tight_cut_decomposition", "splice", "four_cycle_sum",
    "MatchingMinorModel", "verify_matching_minor_model", "collapse_model",
    "bicontract", "find_conformal_bisubdivision", "contains_matching_minor",
    "find_conformal_cross",
    "RotationSystem", "planar_embed", "kasteleyn_orientation",
    "count_by_determinant", "pfaffian_generating_function", "is_pfaffian",
    "PerfectMatchingDecomposition", "exact_pmw", "heuristic_decomposition",
    "decomposition_width", "generating_function_dp", "vertex_gen_dp",
    "GeneratedGraph", "make",
    "CrossingSpec", "sign_crossing_replace", "chi_weight_sum",
    "signed_matching_count",
    "BiadjacencyMatrix", "permanent", "count_perfect_matchings",
    "generating_function", "weighted_generating_function", "RoutingReport",
]

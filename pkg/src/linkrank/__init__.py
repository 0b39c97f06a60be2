"""Exact ranks of groups of links of spheres in codimension greater than
two, with a brute-force free Lie superalgebra oracle backing every closed
formula.
"""

from .errors import (InternalConsistencyError, InvalidInputError,
                     LinkRankError, ResourceLimitError)
from .arith import divisors, gcd_multi, moebius, multinomial
from .liedim import (GeneratorSystem, multiplicity_lower_bound,
                     enumerate_diophantine, lie_component_dim, multiplicity,
                     weighted_degree, witt, witt_super)
from .fcs import fcs_contains, fcs_enumerate
from .ranks import (BrunnianRank, LinkProblem, RankReport, brunnian_is_infinite,
                    brunnian_rank, equal_dim_rank, knot_rank, link_is_infinite,
                    link_rank)
from .stiefel import so_rank, stiefel_rank
from .framed import (FramedLinkProblem, FramedRankReport, HandlebodyReport,
                     framed_knot_is_infinite, framed_rank,
                     fully_framed_is_infinite, handlebody_report,
                     mcg_finite_index)
from .oracle import (VerificationRecord, VerificationReport, WhiteheadAnalysis,
                     component_dim_bruteforce, left_normed_bracket,
                     super_bracket, verify_range, whitehead_map_analysis)

__version__ = "0.1.0"

__all__ = [
    "LinkRankError", "InvalidInputError", "InternalConsistencyError",
    "ResourceLimitError",
    "moebius", "divisors", "gcd_multi", "multinomial",
    "GeneratorSystem", "weighted_degree", "lie_component_dim", "multiplicity",
    "witt", "witt_super", "enumerate_diophantine", "multiplicity_lower_bound",
    "fcs_contains", "fcs_enumerate",
    "LinkProblem", "RankReport", "BrunnianRank", "knot_rank", "brunnian_rank",
    "link_rank", "equal_dim_rank", "brunnian_is_infinite", "link_is_infinite",
    "so_rank", "stiefel_rank",
    "FramedLinkProblem", "FramedRankReport", "HandlebodyReport",
    "framed_rank", "framed_knot_is_infinite", "fully_framed_is_infinite",
    "handlebody_report", "mcg_finite_index",
    "super_bracket", "left_normed_bracket", "component_dim_bruteforce",
    "WhiteheadAnalysis", "whitehead_map_analysis",
    "VerificationRecord", "VerificationReport", "verify_range",
    "__version__",
]

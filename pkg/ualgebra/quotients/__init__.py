from .correspondence import CorrespondenceCheck
from .correspondence import correspondence_check
from .correspondence import quotient_obp_via_subset_search
from .correspondence import quotient_obp_via_theorem
from .correspondence import quotient_quasi_rees_via_corollary
from .quotient import QuotientAlgebra
from .quotient import lift_congruence
from .quotient import lift_subset
from .quotient import project_congruence
from .quotient import quotient_algebra
from .quotient import theta_with_block


__all__ = [
    "CorrespondenceCheck",
    "QuotientAlgebra",
    "correspondence_check",
    "lift_congruence",
    "lift_subset",
    "project_congruence",
    "quotient_algebra",
    "quotient_obp_via_subset_search",
    "quotient_obp_via_theorem",
    "quotient_quasi_rees_via_corollary",
    "theta_with_block",
]

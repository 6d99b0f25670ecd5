from .blocks import has_one_block_property
from .blocks import is_quasi_rees
from .blocks import is_weakly_regular_at
from .blocks import obp_characterization_holds
from .classes import absorbing_class_verdict
from .classes import absorbing_classes_nontrivial
from .classes import has_nontrivial_closed_class_property
from .classes import nontrivial_subuniverse_class_report
from .classes import p_term_class_witness
from .classes import principal_term_class
from .rees import is_rees_algebra
from .rees import is_rees_algebra_via_polynomials
from .rees import is_rees_algebra_via_two_generated
from .rees import is_rees_block
from .rees import is_rees_block_via_polynomials
from .rees import rees_extension
from .registry import PREDICATES
from .registry import get_predicate
from .registry import predicate_names
from .terms import TermConditionCheck
from .terms import check_csakany_term
from .terms import check_p_terms_condition
from .terms import check_weak_regularity_terms
from .verdict import PropertyVerdict


__all__ = [
    "PREDICATES",
    "PropertyVerdict",
    "TermConditionCheck",
    "absorbing_class_verdict",
    "absorbing_classes_nontrivial",
    "check_csakany_term",
    "check_p_terms_condition",
    "check_weak_regularity_terms",
    "get_predicate",
    "has_nontrivial_closed_class_property",
    "has_one_block_property",
    "is_quasi_rees",
    "is_rees_algebra",
    "is_rees_algebra_via_polynomials",
    "is_rees_algebra_via_two_generated",
    "is_rees_block",
    "is_rees_block_via_polynomials",
    "is_weakly_regular_at",
    "nontrivial_subuniverse_class_report",
    "obp_characterization_holds",
    "p_term_class_witness",
    "predicate_names",
    "principal_term_class",
    "rees_extension",
]

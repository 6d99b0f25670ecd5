from .directoids import binary_symbol
from .directoids import directoid_order
from .directoids import enumerate_directoids
from .directoids import is_directoid
from .fixtures import chain_semilattice
from .fixtures import cyclic_groupoid
from .fixtures import diamond_semilattice
from .fixtures import diamond_with_top
from .fixtures import directoid_fixture
from .fixtures import left_zero_semigroup
from .fixtures import swap_algebra
from .fixtures import trivial_algebra
from .generators import GeneratorSpec
from .generators import canonical_form
from .generators import canonical_tables
from .generators import enumerate_groupoids
from .generators import exhaustive_algebras
from .generators import generate
from .generators import random_algebras
from .implication import boolean_implication_algebra
from .implication import implication_constant
from .implication import implication_fixture
from .implication import implication_order
from .implication import is_implication_algebra
from .loops import LOOP_SIGNATURE
from .loops import cyclic_loop
from .loops import is_loop
from .loops import loop_from_cayley
from .loops import nonassociative_loop
from .search import SearchResult
from .search import search_algebras


__all__ = [
    "GeneratorSpec",
    "LOOP_SIGNATURE",
    "SearchResult",
    "binary_symbol",
    "boolean_implication_algebra",
    "canonical_form",
    "canonical_tables",
    "chain_semilattice",
    "cyclic_groupoid",
    "cyclic_loop",
    "diamond_semilattice",
    "diamond_with_top",
    "directoid_fixture",
    "directoid_order",
    "enumerate_directoids",
    "enumerate_groupoids",
    "exhaustive_algebras",
    "generate",
    "implication_constant",
    "implication_fixture",
    "implication_order",
    "is_directoid",
    "is_implication_algebra",
    "is_loop",
    "left_zero_semigroup",
    "loop_from_cayley",
    "nonassociative_loop",
    "random_algebras",
    "search_algebras",
    "swap_algebra",
    "trivial_algebra",
]

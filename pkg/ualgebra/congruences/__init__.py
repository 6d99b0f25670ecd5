from .congruence import CongruenceCheck
from .congruence import congruence_generated_by
from .congruence import congruence_violation
from .congruence import ensure_congruence
from .congruence import is_congruence
from .congruence import principal_congruence
from .lattice import CongruenceLattice
from .lattice import all_congruences
from .lattice import atoms
from .lattice import covers_of
from .lattice import is_congruence_uniform
from .lattice import is_modular
from .lattice import is_semimodular
from .lattice import is_uniform
from .lattice import principal_congruences
from .partition import Partition
from .partition import format_partition
from .partition import full
from .partition import join
from .partition import meet
from .partition import omega
from .permutability import compose
from .permutability import is_n_permutable


__all__ = [
    "CongruenceCheck",
    "CongruenceLattice",
    "Partition",
    "all_congruences",
    "atoms",
    "compose",
    "congruence_generated_by",
    "congruence_violation",
    "covers_of",
    "ensure_congruence",
    "format_partition",
    "full",
    "is_congruence",
    "is_congruence_uniform",
    "is_modular",
    "is_n_permutable",
    "is_semimodular",
    "is_uniform",
    "join",
    "meet",
    "omega",
    "principal_congruence",
    "principal_congruences",
]

import logging

from typing import FrozenSet
from typing import Optional
from typing import Tuple
from typing import Union

from ualgebra.algebra import FiniteAlgebra
from ualgebra.exceptions import AlgebraError

from .lattice import CongruenceLattice
from .lattice import all_congruences
from .partition import Partition


logger = logging.getLogger(__name__)

Relation = FrozenSet[Tuple[int, int]]


def as_relation(r: Union[Partition, Relation]) -> Relation:
    if isinstance(r, Partition):
        return frozenset(r.pairs())

    return frozenset(r)


def compose(r: Union[Partition, Relation], s: Union[Partition, Relation]) -> Relation:
    """
    The relational product r ∘ s = {(a, c) : (a, b) ∈ r and (b, c) ∈ s for some b}.
    """
    successors = {}
    for b, c in as_relation(s):
        successors.setdefault(b, set()).add(c)

    return frozenset(
        (a, c) for a, b in as_relation(r) for c in successors.get(b, ())
    )


def alternating_product(theta: Partition, phi: Partition, n: int) -> Relation:
    """
    θ ∘ φ ∘ θ ∘ ... with n factors.
    """
    result = as_relation(theta)
    factors = (phi, theta)
    for i in range(n - 1):
        result = compose(result, factors[i % 2])

    return result


def is_n_permutable(
    alg: FiniteAlgebra, n: int, lattice: Optional[CongruenceLattice] = None
) -> bool:
    if n < 2:
        raise AlgebraError(f"n-permutability needs n >= 2, got {n}")

    lattice = lattice or all_congruences(alg)
    congruences = lattice.congruences
    for i, theta in enumerate(congruences):
        for phi in congruences[i + 1 :]:
            if alternating_product(theta, phi, n) != alternating_product(phi, theta, n):
                logger.debug(f"{alg.name} is not {n}-permutable: {theta} and {phi}")

                return False

    return True

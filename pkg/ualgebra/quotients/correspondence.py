import dataclasses
import itertools
import logging

from typing import Iterable
from typing import Optional

from ualgebra.algebra import FiniteAlgebra
from ualgebra.config import Config
from ualgebra.config import get_config
from ualgebra.congruences import CongruenceLattice
from ualgebra.congruences import Partition
from ualgebra.congruences import all_congruences
from ualgebra.congruences import ensure_congruence
from ualgebra.congruences import is_congruence
from ualgebra.properties import is_rees_block
from ualgebra.properties import rees_extension
from ualgebra.subuniverses import is_subuniverse

from .quotient import QuotientAlgebra
from .quotient import lift_subset
from .quotient import project_congruence
from .quotient import quotient_algebra
from .quotient import theta_with_block


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CorrespondenceCheck:
    """
    Compares B² ∪ ω on A/θ with C² ∪ θ on A for C the union of the blocks in B.
    """

    quotient_rees: bool
    base_rees: bool
    equality_holds: bool
    subuniverse_match: bool

    @property
    def consistent(self) -> bool:
        return (
            self.quotient_rees == self.base_rees
            and self.equality_holds
            and self.subuniverse_match
        )


def correspondence_check(
    alg: FiniteAlgebra,
    theta: Partition,
    indices: Iterable[int],
    quotient: Optional[QuotientAlgebra] = None,
) -> CorrespondenceCheck:
    quotient = quotient or quotient_algebra(alg, theta)
    indices = frozenset(indices)
    block = lift_subset(theta, indices)

    quotient_rees = is_rees_block(quotient.algebra, indices)
    extended = theta_with_block(theta, block)
    base_rees = is_congruence(alg, extended).holds

    equality_holds = True
    if quotient_rees and base_rees:
        equality_holds = project_congruence(alg, theta, extended) == rees_extension(
            quotient.algebra, indices
        )

    subuniverse_match = is_subuniverse(quotient.algebra, indices) == is_subuniverse(
        alg, block
    )

    return CorrespondenceCheck(
        quotient_rees, base_rees, equality_holds, subuniverse_match
    )


def quotient_quasi_rees_via_corollary(
    alg: FiniteAlgebra,
    theta: Partition,
    lattice: Optional[CongruenceLattice] = None,
    config: Optional[Config] = None,
) -> bool:
    """
    Whether every congruence φ ⊋ θ has a class C which is a subuniverse but
    not a class of θ, such that C² ∪ θ is a congruence.
    """
    ensure_congruence(alg, theta)
    lattice = lattice or all_congruences(alg, config=config)

    for phi in lattice:
        if phi == theta or not theta.refines(phi):
            continue

        for block in phi.blocks:
            if theta.block(block[0]) == block:
                continue

            if is_subuniverse(alg, block) and is_congruence(
                alg, theta_with_block(theta, block)
            ):
                break
        else:
            logger.debug(f"No suitable class of {phi} above {theta} in {alg.name}")

            return False

    return True


def quotient_obp_via_theorem(
    alg: FiniteAlgebra,
    theta: Partition,
    lattice: Optional[CongruenceLattice] = None,
    config: Optional[Config] = None,
) -> bool:
    """
    Whether every cover Φ of θ equals (⋃B)² ∪ θ for some set B of θ-blocks.

    Such a B exists iff exactly one block of Φ is made of more than one θ-block.
    """
    ensure_congruence(alg, theta)
    lattice = lattice or all_congruences(alg, config=config)

    for phi in lattice.upper_covers(theta):
        merged = [block for block in phi.blocks if theta.block(block[0]) != block]
        if len(merged) != 1:
            return False

    return True


def quotient_obp_via_subset_search(
    alg: FiniteAlgebra,
    theta: Partition,
    lattice: Optional[CongruenceLattice] = None,
    config: Optional[Config] = None,
) -> bool:
    """
    Searches every set B of at least two θ-blocks for (⋃B)² ∪ θ = Φ.
    """
    ensure_congruence(alg, theta)
    config = config or get_config()
    config.check_limit("subset-search-blocks", theta.num_blocks, "Block subset search")

    lattice = lattice or all_congruences(alg, config=config)
    candidates = {
        theta_with_block(theta, lift_subset(theta, indices))
        for k in range(2, theta.num_blocks + 1)
        for indices in itertools.combinations(range(theta.num_blocks), k)
    }

    return all(phi in candidates for phi in lattice.upper_covers(theta))

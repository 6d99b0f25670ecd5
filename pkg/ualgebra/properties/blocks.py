import logging

from typing import Optional

from ualgebra.algebra import FiniteAlgebra
from ualgebra.config import Config
from ualgebra.congruences import CongruenceLattice
from ualgebra.congruences import Partition
from ualgebra.congruences import all_congruences
from ualgebra.congruences import principal_congruences
from ualgebra.exceptions import AlgebraError
from ualgebra.subuniverses import is_subuniverse

from .rees import is_rees_block
from .verdict import PropertyVerdict


logger = logging.getLogger(__name__)


def is_quasi_rees(
    alg: FiniteAlgebra,
    lattice: Optional[CongruenceLattice] = None,
    config: Optional[Config] = None,
) -> PropertyVerdict:
    """
    Whether every non-trivial congruence has a class C with |C| ≥ 2 which is a
    subuniverse and for which C² ∪ ω is a congruence.

    The chosen class is the qualifying block with the least minimum element.
    """
    lattice = lattice or all_congruences(alg, config=config)

    chosen = {}
    for theta in lattice:
        if theta.is_omega():
            continue

        for block in theta.non_singleton_blocks():
            if is_subuniverse(alg, block) and is_rees_block(alg, block):
                chosen[theta] = frozenset(block)
                break
        else:
            logger.debug(f"{alg.name} is not quasi-Rees: {theta} has no Rees class")

            return PropertyVerdict(False, counterexample={"congruence": theta})

    return PropertyVerdict(True, chosen=chosen)


def has_one_block_property(
    alg: FiniteAlgebra,
    lattice: Optional[CongruenceLattice] = None,
    config: Optional[Config] = None,
) -> PropertyVerdict:
    """
    Whether every atom of the congruence lattice has exactly one non-singleton class.
    """
    lattice = lattice or all_congruences(alg, config=config)

    chosen = {}
    for atom in lattice.atoms():
        blocks = atom.non_singleton_blocks()
        if len(blocks) != 1:
            return PropertyVerdict(
                False,
                counterexample={
                    "atom": atom,
                    "blocks": [frozenset(block) for block in blocks],
                },
            )

        chosen[atom] = frozenset(blocks[0])

    return PropertyVerdict(True, chosen=chosen)


def obp_characterization_holds(
    alg: FiniteAlgebra, config: Optional[Config] = None
) -> bool:
    """
    For all a ≠ b: if (a, b) ∈ Θ(x, y) for every (x, y) ∈ Θ(a, b) with x ≠ y,
    then every such x, y lies in [a]Θ(a, b).
    """
    principals = principal_congruences(alg, config=config)

    def principal(x: int, y: int) -> Partition:
        return principals[(x, y) if x < y else (y, x)]

    for (a, b), theta in principals.items():
        related = [
            (x, y)
            for block in theta.non_singleton_blocks()
            for i, x in enumerate(block)
            for y in block[i + 1 :]
        ]
        if not all(principal(x, y).related(a, b) for x, y in related):
            continue

        if any(not (theta.related(a, x) and theta.related(a, y)) for x, y in related):
            logger.debug(f"One-block characterization fails at ({a}, {b}): {theta}")

            return False

    return True


def is_weakly_regular_at(
    alg: FiniteAlgebra,
    e: int,
    lattice: Optional[CongruenceLattice] = None,
    config: Optional[Config] = None,
) -> bool:
    """
    Whether θ ↦ [e]θ is injective on the congruences of alg.
    """
    if not 0 <= e < alg.size:
        raise AlgebraError(
            f"Element {e} is out of range for an algebra of size {alg.size}"
        )

    lattice = lattice or all_congruences(alg, config=config)
    classes = {theta.block(e) for theta in lattice}

    return len(classes) == len(lattice)

import dataclasses
import logging

from typing import Iterable
from typing import Optional
from typing import Tuple

from ualgebra.algebra import FiniteAlgebra
from ualgebra.congruences import Partition
from ualgebra.congruences import ensure_congruence
from ualgebra.exceptions import AlgebraError
from ualgebra.subuniverses import ElementSet
from ualgebra.utils.helpers import tuples


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class QuotientAlgebra:
    """
    A/θ on the block indices of θ. Blocks keep the canonical partition
    numbering, so block i is represented by its least element.
    """

    algebra: FiniteAlgebra
    theta: Partition

    @property
    def class_of(self) -> Tuple[int, ...]:
        return self.theta.block_of

    @property
    def representative_of(self) -> Tuple[int, ...]:
        return tuple(block[0] for block in self.theta.blocks)

    def block(self, index: int) -> Tuple[int, ...]:
        return self.theta.blocks[index]


def quotient_algebra(alg: FiniteAlgebra, theta: Partition) -> QuotientAlgebra:
    ensure_congruence(alg, theta)

    block_of = theta.block_of
    representatives = [block[0] for block in theta.blocks]
    k = len(representatives)

    tables = {
        operation.name: [
            block_of[operation(*(representatives[i] for i in args))]
            for args in tuples(range(k), operation.arity)
        ]
        for operation in alg.operations
    }
    quotient = FiniteAlgebra(f"{alg.name}_quo", k, alg.signature, tables)

    if logger.isEnabledFor(logging.DEBUG):
        _check_well_defined(alg, theta, quotient)

    return QuotientAlgebra(quotient, theta)


def _check_well_defined(
    alg: FiniteAlgebra, theta: Partition, quotient: FiniteAlgebra
) -> None:
    block_of = theta.block_of
    for operation in alg.operations:
        table = quotient.table(operation.name)
        factor = quotient.operation(operation.name)
        for args in tuples(alg.universe, operation.arity):
            expected = table[factor.index([block_of[a] for a in args])]
            if block_of[operation(*args)] != expected:
                raise AlgebraError(
                    f"{operation.name} is not well defined"
                    f" on {alg.name}/{theta} at {args}"
                )

    logger.debug(f"Quotient {alg.name}/{theta} is well defined")


def _check_block_indices(theta: Partition, indices: Iterable[int]) -> Tuple[int, ...]:
    result = tuple(sorted(set(indices)))
    for index in result:
        if not 0 <= index < theta.num_blocks:
            raise AlgebraError(
                f"Block index {index} is out of range 0..{theta.num_blocks - 1}"
            )

    return result


def lift_subset(theta: Partition, indices: Iterable[int]) -> ElementSet:
    """
    The union of the θ-blocks with the given indices.
    """
    return frozenset(
        element
        for index in _check_block_indices(theta, indices)
        for element in theta.blocks[index]
    )


def theta_with_block(theta: Partition, block: Iterable[int]) -> Partition:
    """
    The equivalence C² ∪ θ for a set C which is a union of θ-blocks.
    """
    elements = frozenset(block)
    for element in elements:
        if not 0 <= element < theta.size:
            raise AlgebraError(f"Element {element} is out of range 0..{theta.size - 1}")

        if not elements.issuperset(theta.block(element)):
            raise AlgebraError(
                f"{sorted(elements)} is not a union of blocks of {theta}"
            )

    return Partition([-1 if e in elements else b for e, b in enumerate(theta.block_of)])


def project_congruence(
    alg: FiniteAlgebra, theta: Partition, phi: Partition
) -> Partition:
    """
    φ/θ on the block indices of θ, for congruences θ ⊆ φ.
    """
    ensure_congruence(alg, theta)
    ensure_congruence(alg, phi)
    if not theta.refines(phi):
        raise AlgebraError(f"{theta} is not contained in {phi}")

    return Partition([phi.block_of[block[0]] for block in theta.blocks])


def lift_congruence(alg: FiniteAlgebra, theta: Partition, psi: Partition) -> Partition:
    """
    The congruence of alg above θ corresponding to the congruence ψ of A/θ.
    """
    quotient = quotient_algebra(alg, theta)
    if psi.size != theta.num_blocks:
        raise AlgebraError(
            f"{psi} is not a partition of the {theta.num_blocks} blocks of {theta}"
        )

    ensure_congruence(quotient.algebra, psi)

    return Partition([psi.block_of[b] for b in theta.block_of])

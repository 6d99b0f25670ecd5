import dataclasses
import itertools
import logging

from typing import TYPE_CHECKING
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import Optional

from ualgebra.algebra import FiniteAlgebra
from ualgebra.config import Config
from ualgebra.config import get_config
from ualgebra.congruences import CongruenceLattice
from ualgebra.congruences import Partition
from ualgebra.congruences import all_congruences
from ualgebra.congruences import ensure_congruence
from ualgebra.exceptions import AlgebraError
from ualgebra.utils.helpers import format_elements
from ualgebra.utils.helpers import tuples


if TYPE_CHECKING:
    from ualgebra.properties.verdict import PropertyVerdict


logger = logging.getLogger(__name__)

ElementSet = FrozenSet[int]


@dataclasses.dataclass(frozen=True)
class SubuniverseClass:
    elements: ElementSet

    @property
    def trivial(self) -> bool:
        return len(self.elements) < 2

    def __str__(self) -> str:
        return format_elements(self.elements)


def _check_range(alg: FiniteAlgebra, s: Iterable[int]) -> ElementSet:
    elements = frozenset(s)
    for element in elements:
        if not 0 <= element < alg.size:
            raise AlgebraError(
                f"Element {element} is out of range for an algebra of size {alg.size}"
            )

    return elements


def is_subuniverse(alg: FiniteAlgebra, s: Iterable[int]) -> bool:
    """
    Whether s is closed under every operation. Constants must lie in s, so the
    empty set qualifies only for signatures without nullary symbols.
    """
    elements = _check_range(alg, s)
    ordered = sorted(elements)
    for operation in alg.operations:
        for args in tuples(ordered, operation.arity):
            if operation(*args) not in elements:
                return False

    return True


def generated_subuniverse(alg: FiniteAlgebra, s: Iterable[int]) -> ElementSet:
    """
    The least subuniverse containing s.

    Only argument tuples touching an element added in the previous round are
    evaluated, so every tuple is visited once.
    """
    closed = set(_check_range(alg, s))
    fresh = set(closed)
    for operation in alg.operations:
        if operation.arity == 0:
            value = operation()
            if value not in closed:
                closed.add(value)
                fresh.add(value)

    operations = [operation for operation in alg.operations if operation.arity > 0]
    while fresh:
        members = sorted(closed)
        discovered = set()
        for operation in operations:
            for args in tuples(members, operation.arity):
                if fresh.isdisjoint(args):
                    continue

                value = operation(*args)
                if value not in closed:
                    discovered.add(value)

        closed |= discovered
        fresh = discovered

    return frozenset(closed)


def all_subuniverses(
    alg: FiniteAlgebra, config: Optional[Config] = None
) -> List[ElementSet]:
    """
    All subuniverses ordered by size, then lexicographically.
    """
    (config or get_config()).check_limit(
        "subuniverse-size", alg.size, "Subuniverse enumeration"
    )

    result = [
        frozenset(subset)
        for k in range(alg.size + 1)
        for subset in itertools.combinations(alg.universe, k)
        if is_subuniverse(alg, subset)
    ]
    logger.debug(f"{alg.name} has {len(result)} subuniverses")

    return result


def sort_element_sets(sets: Iterable[ElementSet]) -> List[ElementSet]:
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def classes_that_are_subuniverses(
    alg: FiniteAlgebra, theta: Partition
) -> List[SubuniverseClass]:
    ensure_congruence(alg, theta)

    return [
        SubuniverseClass(frozenset(block))
        for block in theta.blocks
        if is_subuniverse(alg, block)
    ]


def nontrivial_closed_classes(alg: FiniteAlgebra, theta: Partition) -> List[ElementSet]:
    return [
        cls.elements
        for cls in classes_that_are_subuniverses(alg, theta)
        if not cls.trivial
    ]


def subalgebra(alg: FiniteAlgebra, s: Iterable[int]) -> FiniteAlgebra:
    """
    The subalgebra on a non-empty subuniverse, relabelled to 0..k-1 in
    ascending order of the original elements.
    """
    elements = sorted(_check_range(alg, s))
    if not elements:
        raise AlgebraError("A subalgebra needs a non-empty subuniverse")

    if not is_subuniverse(alg, elements):
        raise AlgebraError(
            f"{format_elements(elements)} is not a subuniverse of {alg.name}"
        )

    position = {element: i for i, element in enumerate(elements)}
    tables = {
        operation.name: [
            position[operation(*args)] for args in tuples(elements, operation.arity)
        ]
        for operation in alg.operations
    }

    return FiniteAlgebra(f"{alg.name}_sub", len(elements), alg.signature, tables)


def has_closed_class_property(
    alg: FiniteAlgebra, lattice: Optional[CongruenceLattice] = None
) -> "PropertyVerdict":
    """
    Whether every congruence has some class which is a subuniverse.
    """
    from ualgebra.properties.verdict import PropertyVerdict

    lattice = lattice or all_congruences(alg)
    chosen = {}
    for theta in lattice:
        classes = classes_that_are_subuniverses(alg, theta)
        if not classes:
            return PropertyVerdict(False, counterexample={"congruence": theta})

        chosen[theta] = classes[0].elements

    return PropertyVerdict(True, chosen=chosen)

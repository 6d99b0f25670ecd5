import dataclasses
import logging

from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple

from ualgebra.algebra import FiniteAlgebra
from ualgebra.config import Config
from ualgebra.config import get_config
from ualgebra.exceptions import AlgebraError
from ualgebra.exceptions import NotACongruence
from ualgebra.utils.helpers import tuples

from .partition import Partition
from .union_find import UnionFind


logger = logging.getLogger(__name__)

Violation = Tuple[str, Tuple[int, ...], Tuple[int, ...]]


@dataclasses.dataclass(frozen=True)
class CongruenceCheck:
    holds: bool
    violation: Optional[Violation] = None

    def __bool__(self) -> bool:
        return self.holds


def congruence_violation(alg: FiniteAlgebra, p: Partition) -> Optional[Violation]:
    """
    Returns (symbol, args, other_args) where the argument tuples differ in one
    coordinate by p-related elements but the values are not p-related.

    Changing one coordinate at a time suffices: compatibility in every
    coordinate composes to compatibility of whole tuples by transitivity.
    """
    if p.size != alg.size:
        raise AlgebraError(
            f"Partition over {p.size} elements for an algebra of size {alg.size}"
        )

    blocks = p.non_singleton_blocks()
    if not blocks:
        return None

    block_of = p.block_of
    for operation in alg.operations:
        arity = operation.arity
        for i in range(arity):
            for context in tuples(alg.universe, arity - 1):
                before = context[:i]
                after = context[i:]
                for block in blocks:
                    first = block[0]
                    value = operation(*before, first, *after)
                    for element in block[1:]:
                        other = operation(*before, element, *after)
                        if block_of[value] != block_of[other]:
                            return (
                                operation.name,
                                (*before, first, *after),
                                (*before, element, *after),
                            )

    return None


def is_congruence(alg: FiniteAlgebra, p: Partition) -> CongruenceCheck:
    violation = congruence_violation(alg, p)

    return CongruenceCheck(violation is None, violation)


def ensure_congruence(alg: FiniteAlgebra, p: Partition) -> None:
    violation = congruence_violation(alg, p)
    if violation is not None:
        raise NotACongruence(p, violation)


def congruence_generated_by(
    alg: FiniteAlgebra,
    pairs: Iterable[Tuple[int, int]],
    config: Optional[Config] = None,
) -> Partition:
    """
    The least congruence containing every given pair.

    Whenever two classes merge through (u, v), every unary translation
    f(c1, ..., u, ..., cm) / f(c1, ..., v, ..., cm) is queued until nothing
    new is identified.
    """
    (config or get_config()).check_limit(
        "congruence-size", alg.size, "Congruence closure"
    )

    n = alg.size
    worklist: List[Tuple[int, int]] = []
    for a, b in pairs:
        for element in (a, b):
            if not 0 <= element < n:
                raise AlgebraError(
                    f"Element {element} is out of range for an algebra of size {n}"
                )

        worklist.append((a, b))

    union_find = UnionFind(n)
    operations = [operation for operation in alg.operations if operation.arity > 0]
    contexts = {
        operation.arity: list(tuples(alg.universe, operation.arity - 1))
        for operation in operations
    }

    while worklist:
        u, v = worklist.pop()
        if not union_find.union(u, v):
            continue

        for operation in operations:
            arity = operation.arity
            for i in range(arity):
                for context in contexts[arity]:
                    left = operation(*context[:i], u, *context[i:])
                    right = operation(*context[:i], v, *context[i:])
                    if left == right:
                        continue

                    if union_find.find(left) != union_find.find(right):
                        worklist.append((left, right))

    return Partition(union_find.labels())


def principal_congruence(
    alg: FiniteAlgebra, a: int, b: int, config: Optional[Config] = None
) -> Partition:
    return congruence_generated_by(alg, [(a, b)], config=config)

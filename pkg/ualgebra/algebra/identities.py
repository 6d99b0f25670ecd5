import dataclasses
import itertools
import logging

from typing import Dict
from typing import FrozenSet
from typing import Optional

from ualgebra.config import Config
from ualgebra.config import get_config
from ualgebra.utils.helpers import tuples

from .finite_algebra import FiniteAlgebra
from .finite_algebra import Operation
from .term import App
from .term import Term
from .term import check_term
from .term import compile_term
from .term import variables
from .term import x


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    counterexample: Optional[Dict[int, int]] = None

    def __bool__(self) -> bool:
        return self.holds


def satisfies_identity(
    alg: FiniteAlgebra, lhs: Term, rhs: Term, config: Optional[Config] = None
) -> IdentityCheck:
    """
    Checks lhs ≈ rhs exhaustively over all assignments to their variables.

    On failure the first counterexample in lexicographic order of the sorted
    variables is returned.
    """
    check_term(alg.signature, lhs)
    check_term(alg.signature, rhs)

    names = sorted(variables(lhs) | variables(rhs))
    (config or get_config()).check_limit(
        "identity-assignments", alg.size ** len(names), "Identity check"
    )

    positions = {index: position for position, index in enumerate(names)}
    left = compile_term(alg, lhs, positions)
    right = compile_term(alg, rhs, positions)

    for values in itertools.product(alg.universe, repeat=len(names)):
        if left(values) != right(values):
            counterexample = dict(zip(names, values))
            logger.debug(f"{lhs} ≈ {rhs} fails in {alg.name} at {counterexample}")

            return IdentityCheck(False, counterexample)

    return IdentityCheck(True)


def is_idempotent_algebra(alg: FiniteAlgebra) -> bool:
    if alg.is_trivial:
        return True

    for operation in alg.operations:
        if operation.arity == 0:
            return False

        if not satisfies_identity(alg, App(operation.name, (x,) * operation.arity), x):
            return False

    return True


def absorbing_elements(alg: FiniteAlgebra) -> FrozenSet[int]:
    """
    Elements e with f(..., e, ...) = e for every operation and argument position,
    equal to every constant of the algebra.
    """
    constants = set(alg.constants().values())

    result = set()
    for e in alg.universe:
        if constants and constants != {e}:
            continue

        if all(_absorbs(alg, operation, e) for operation in alg.operations):
            result.add(e)

    return frozenset(result)


def _absorbs(alg: FiniteAlgebra, operation: Operation, e: int) -> bool:
    arity = operation.arity
    for i in range(arity):
        for context in tuples(alg.universe, arity - 1):
            if operation(*context[:i], e, *context[i:]) != e:
                return False

    return True

from typing import FrozenSet
from typing import List
from typing import Tuple

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Signature
from ualgebra.algebra import Term
from ualgebra.algebra import Var
from ualgebra.algebra import app
from ualgebra.algebra import satisfies_identity
from ualgebra.exceptions import AlgebraError
from ualgebra.utils.helpers import tuples

from .directoids import binary_symbol


def implication_identities(symbol: str) -> List[Tuple[Term, Term]]:
    x, y, z = Var(0), Var(1), Var(2)

    def m(a: Term, b: Term) -> Term:
        return app(symbol, a, b)

    return [
        (m(m(x, y), x), x),
        (m(m(x, y), y), m(m(y, x), x)),
        (m(x, m(y, z)), m(y, m(x, z))),
    ]


def is_implication_algebra(alg: FiniteAlgebra) -> bool:
    symbol = binary_symbol(alg)

    return all(
        satisfies_identity(alg, lhs, rhs)
        for lhs, rhs in implication_identities(symbol)
    )


def boolean_implication_algebra(k: int) -> FiniteAlgebra:
    """
    The implication reduct of the Boolean algebra of subsets of a k-set, with
    elements as bitmasks and x → y = ¬x ∨ y.
    """
    if k < 0:
        raise AlgebraError(f"Expected a non-negative number of atoms, got {k}")

    n = 2 ** k
    mask = n - 1
    table = [(~a & mask) | b for a, b in tuples(range(n), 2)]

    return FiniteAlgebra(
        f"implication{n}", n, Signature.from_pairs([("imp", 2)]), {"imp": table}
    )


def implication_fixture() -> FiniteAlgebra:
    return boolean_implication_algebra(1)


def implication_constant(alg: FiniteAlgebra) -> int:
    """
    The common value 1 of xx.
    """
    operation = alg.operation(binary_symbol(alg))
    values = {operation(a, a) for a in alg.universe}
    if len(values) != 1:
        raise AlgebraError(f"xx is not constant in {alg.name}")

    return values.pop()


def implication_order(alg: FiniteAlgebra) -> FrozenSet[Tuple[int, int]]:
    """
    The induced order x ≤ y iff xy = 1.
    """
    operation = alg.operation(binary_symbol(alg))
    one = implication_constant(alg)

    return frozenset(
        (a, b) for a in alg.universe for b in alg.universe if operation(a, b) == one
    )

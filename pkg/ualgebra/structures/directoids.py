import logging

from typing import FrozenSet
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Signature
from ualgebra.algebra import Term
from ualgebra.algebra import Var
from ualgebra.algebra import app
from ualgebra.algebra import satisfies_identity
from ualgebra.config import Config
from ualgebra.config import get_config
from ualgebra.exceptions import AlgebraError
from ualgebra.exceptions import ResourceLimitExceeded


logger = logging.getLogger(__name__)

Order = FrozenSet[Tuple[int, int]]

LARGE_DIRECTOID_SIZE = 5


def binary_symbol(alg: FiniteAlgebra) -> str:
    """
    The name of the only operation of a groupoid.
    """
    symbols = alg.signature.symbols
    if len(symbols) != 1 or symbols[0].arity != 2:
        raise AlgebraError(
            f"Expected a single binary operation, got signature {alg.signature}"
        )

    return symbols[0].name


def directoid_identities(symbol: str) -> List[Tuple[Term, Term]]:
    x, y, z = Var(0), Var(1), Var(2)

    def j(a: Term, b: Term) -> Term:
        return app(symbol, a, b)

    return [
        (j(x, x), x),
        (j(j(x, y), x), j(x, y)),
        (j(y, j(x, y)), j(x, y)),
        (j(x, j(j(x, y), z)), j(j(x, y), z)),
    ]


def is_directoid(alg: FiniteAlgebra) -> bool:
    symbol = binary_symbol(alg)

    return all(
        satisfies_identity(alg, lhs, rhs) for lhs, rhs in directoid_identities(symbol)
    )


def directoid_order(alg: FiniteAlgebra) -> Order:
    """
    The order x ≤ y iff x ⊔ y = y of a directoid.
    """
    if not is_directoid(alg):
        raise AlgebraError(f"{alg.name} is not a directoid")

    operation = alg.operation(binary_symbol(alg))
    order = frozenset(
        (a, b) for a in alg.universe for b in alg.universe if operation(a, b) == b
    )

    for a, b in order:
        if a != b and (b, a) in order:
            raise AlgebraError(f"Order of {alg.name} is not antisymmetric at {a}, {b}")

        for c in alg.universe:
            if (b, c) in order and (a, c) not in order:
                raise AlgebraError(
                    f"Order of {alg.name} is not transitive at {a}, {b}, {c}"
                )

    return order


def _consistent(table: Sequence[Optional[int]], n: int) -> bool:
    """
    Checks the directoid identities on every instance whose subterms are
    already defined in the partial table.
    """

    def j(a: Optional[int], b: Optional[int]) -> Optional[int]:
        if a is None or b is None:
            return None

        return table[a * n + b]

    for x in range(n):
        for y in range(n):
            xy = table[x * n + y]
            if xy is None:
                continue

            left = j(xy, x)
            if left is not None and left != xy:
                return False

            left = j(y, xy)
            if left is not None and left != xy:
                return False

            for z in range(n):
                right = j(xy, z)
                left = j(x, right)
                if left is not None and left != right:
                    return False

    return True


def enumerate_directoids(
    n: int, allow_large: bool = False, config: Optional[Config] = None
) -> List[FiniteAlgebra]:
    """
    All join-directoids on 0..n-1 in lexicographic order of their tables.

    Cells are filled in row-major order with the diagonal fixed by x ⊔ x = x;
    a branch is cut as soon as a fully defined instance of an identity fails.
    """
    if n < 1:
        raise AlgebraError("The universe must have at least one element")

    allowed = (config or get_config()).limit("directoid-size")
    if allow_large:
        allowed = max(allowed, LARGE_DIRECTOID_SIZE)

    if n > allowed:
        raise ResourceLimitExceeded(
            "limits.directoid-size", n, allowed, "Directoid enumeration"
        )

    table: List[Optional[int]] = [None] * (n * n)
    for x in range(n):
        table[x * n + x] = x

    cells = [i for i in range(n * n) if table[i] is None]
    tables: List[Tuple[int, ...]] = []

    def extend(position: int) -> None:
        if position == len(cells):
            tables.append(tuple(v for v in table if v is not None))
            return

        cell = cells[position]
        for value in range(n):
            table[cell] = value
            if _consistent(table, n):
                extend(position + 1)

        table[cell] = None

    extend(0)
    logger.debug(f"{len(tables)} directoids of size {n}")

    signature = Signature.from_pairs([("join", 2)])

    return [
        FiniteAlgebra(f"directoid{n}_{index}", n, signature, {"join": t})
        for index, t in enumerate(tables)
    ]

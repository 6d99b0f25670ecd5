from typing import Dict
from typing import List
from typing import Sequence
from typing import Tuple

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Signature
from ualgebra.algebra import Term
from ualgebra.algebra import Var
from ualgebra.algebra import app
from ualgebra.algebra import satisfies_identity
from ualgebra.exceptions import LoopConstructionError


LOOP_SIGNATURE = Signature.from_pairs(
    [("mul", 2), ("rdiv", 2), ("ldiv", 2), ("one", 0)]
)


def loop_identities() -> List[Tuple[Term, Term]]:
    x, y = Var(0), Var(1)
    one = app("one")

    return [
        (app("mul", app("rdiv", x, y), y), x),
        (app("rdiv", app("mul", x, y), y), x),
        (app("mul", x, app("ldiv", x, y)), y),
        (app("ldiv", x, app("mul", x, y)), y),
        (app("mul", x, one), x),
        (app("mul", one, x), x),
    ]


def is_loop(alg: FiniteAlgebra) -> bool:
    if alg.signature != LOOP_SIGNATURE:
        return False

    return all(satisfies_identity(alg, lhs, rhs) for lhs, rhs in loop_identities())


def loop_from_cayley(
    table: Sequence[Sequence[int]], name: str = "loop"
) -> FiniteAlgebra:
    """
    Builds the loop (A, ·, /, \\, 1) from the Cayley table of ·, solving
    z·y = x for x/y and x·z = y for x\\y.
    """
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise LoopConstructionError("The Cayley table must be a non-empty square")

    universe = set(range(n))
    for x, row in enumerate(table):
        if set(row) != universe:
            raise LoopConstructionError(f"Row {x} is not a permutation of 0..{n - 1}")

    for y in range(n):
        if {table[x][y] for x in range(n)} != universe:
            raise LoopConstructionError(
                f"Column {y} is not a permutation of 0..{n - 1}"
            )

    units = [
        e
        for e in range(n)
        if all(table[e][x] == x and table[x][e] == x for x in range(n))
    ]
    if not units:
        raise LoopConstructionError("The Cayley table has no identity element")

    right: Dict[Tuple[int, int], int] = {}
    left: Dict[Tuple[int, int], int] = {}
    for z in range(n):
        for y in range(n):
            right[(table[z][y], y)] = z
            left[(z, table[z][y])] = y

    return FiniteAlgebra(
        name,
        n,
        LOOP_SIGNATURE,
        {
            "mul": [table[x][y] for x in range(n) for y in range(n)],
            "rdiv": [right[(x, y)] for x in range(n) for y in range(n)],
            "ldiv": [left[(x, y)] for x in range(n) for y in range(n)],
            "one": [units[0]],
        },
    )


def cyclic_loop(n: int) -> FiniteAlgebra:
    """
    The group Z_n as a loop: x/y = x - y, x\\y = y - x and 1 = 0.
    """
    return loop_from_cayley(
        [[(x + y) % n for y in range(n)] for x in range(n)], name=f"loop{n}"
    )


# The smallest loop which is not a group.
LOOP5_TABLE = (
    (0, 1, 2, 3, 4),
    (1, 0, 3, 4, 2),
    (2, 4, 0, 1, 3),
    (3, 2, 4, 0, 1),
    (4, 3, 1, 2, 0),
)


def nonassociative_loop() -> FiniteAlgebra:
    return loop_from_cayley(LOOP5_TABLE, name="loop5")

import itertools
import logging
import time

from typing import List
from typing import Optional
from typing import Set
from typing import Tuple

from ualgebra.algebra import FiniteAlgebra
from ualgebra.config import Config
from ualgebra.config import get_config
from ualgebra.congruences import Partition
from ualgebra.congruences import ensure_congruence


logger = logging.getLogger(__name__)

UnaryFunction = Tuple[int, ...]


def identity_function(n: int) -> UnaryFunction:
    return tuple(range(n))


def constant_function(n: int, c: int) -> UnaryFunction:
    return (c,) * n


def unary_polynomials(
    alg: FiniteAlgebra, config: Optional[Config] = None
) -> List[UnaryFunction]:
    """
    The unary polynomial functions of alg as tables, in lexicographic order.

    Starting from the identity and the constants, the set is closed under
    x ↦ f(g1(x), ..., gm(x)). Each round only composes argument vectors that
    contain at least one function found in the previous round.
    """
    (config or get_config()).check_limit(
        "polynomial-size", alg.size, "Unary polynomial closure"
    )

    start = time.time()
    n = alg.size
    universe = range(n)
    found: Set[UnaryFunction] = {identity_function(n)}
    found.update(constant_function(n, c) for c in universe)

    operations = [operation for operation in alg.operations if operation.arity > 0]
    delta = set(found)
    rounds = 0
    while delta:
        rounds += 1
        old = list(found - delta)
        everything = list(found)
        fresh = list(delta)
        discovered: Set[UnaryFunction] = set()
        for operation in operations:
            m = operation.arity
            for k in range(m):
                pools = [old] * k + [fresh] + [everything] * (m - k - 1)
                for args in itertools.product(*pools):
                    composite = tuple(
                        operation(*(g[x] for g in args)) for x in universe
                    )
                    if composite not in found:
                        discovered.add(composite)

        found |= discovered
        delta = discovered

    logger.debug(
        f"{alg.name}: {len(found)} unary polynomials after {rounds} rounds"
        f" in {time.time() - start:.3f}s"
    )

    return sorted(found)


def quotient_unary_polynomials(
    alg: FiniteAlgebra, theta: Partition, config: Optional[Config] = None
) -> List[UnaryFunction]:
    """
    The functions [x]θ ↦ [p(x)]θ on block indices for p ∈ P₁(alg).
    """
    ensure_congruence(alg, theta)

    block_of = theta.block_of
    representatives = [block[0] for block in theta.blocks]

    return sorted(
        {
            tuple(block_of[p[r]] for r in representatives)
            for p in unary_polynomials(alg, config=config)
        }
    )

"""
Brute-force oracles and the shared corpus of small algebras.
"""
import itertools
import random

from typing import FrozenSet
from typing import Iterator
from typing import List
from typing import Optional
from typing import Set

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Signature
from ualgebra.congruences import Partition
from ualgebra.structures import boolean_implication_algebra
from ualgebra.structures import chain_semilattice
from ualgebra.structures import cyclic_groupoid
from ualgebra.structures import cyclic_loop
from ualgebra.structures import diamond_semilattice
from ualgebra.structures import diamond_with_top
from ualgebra.structures import directoid_fixture
from ualgebra.structures import enumerate_directoids
from ualgebra.structures import implication_fixture
from ualgebra.structures import left_zero_semigroup
from ualgebra.structures import swap_algebra
from ualgebra.structures import trivial_algebra
from ualgebra.utils.helpers import tuples


BINARY = Signature.from_pairs([("f", 2)])
MIXED = Signature.from_pairs([("g", 1), ("f", 2), ("c", 0)])


def set_partitions(n: int) -> Iterator[Partition]:
    """
    Every partition of 0..n-1, via restricted growth strings.
    """

    def extend(prefix: List[int], blocks: int) -> Iterator[Partition]:
        if len(prefix) == n:
            yield Partition(prefix)
            return

        for block in range(blocks + 1):
            yield from extend(prefix + [block], max(blocks, block + 1))

    yield from extend([0], 1)


def is_congruence_by_tuples(alg: FiniteAlgebra, p: Partition) -> bool:
    """
    Compatibility checked on whole argument tuples, not one coordinate at a time.
    """
    for operation in alg.operations:
        arity = operation.arity
        for u in tuples(alg.universe, arity):
            for v in tuples(alg.universe, arity):
                if all(p.related(a, b) for a, b in zip(u, v)) and not p.related(
                    operation(*u), operation(*v)
                ):
                    return False

    return True


def brute_force_congruences(alg: FiniteAlgebra) -> Set[Partition]:
    return {p for p in set_partitions(alg.size) if is_congruence_by_tuples(alg, p)}


def brute_force_principal(alg: FiniteAlgebra, a: int, b: int) -> Partition:
    candidates = [p for p in brute_force_congruences(alg) if p.related(a, b)]
    least = [p for p in candidates if all(p.refines(q) for q in candidates)]
    assert len(least) == 1

    return least[0]


def is_closed(alg: FiniteAlgebra, s: FrozenSet[int]) -> bool:
    return all(
        operation(*args) in s
        for operation in alg.operations
        for args in itertools.product(sorted(s), repeat=operation.arity)
    )


def brute_force_subuniverses(alg: FiniteAlgebra) -> Set[FrozenSet[int]]:
    return {
        frozenset(subset)
        for k in range(alg.size + 1)
        for subset in itertools.combinations(alg.universe, k)
        if is_closed(alg, frozenset(subset))
    }


def random_algebra(
    rng: random.Random,
    size: int,
    signature: Signature = BINARY,
    name: Optional[str] = None,
) -> FiniteAlgebra:
    tables = {
        symbol.name: [rng.randrange(size) for _ in range(size ** symbol.arity)]
        for symbol in signature
    }

    return FiniteAlgebra(name or "random", size, signature, tables)


def random_algebras(seed: int, count: int, sizes: List[int]) -> List[FiniteAlgebra]:
    rng = random.Random(seed)

    return [
        random_algebra(rng, rng.choice(sizes), name=f"random{seed}_{i}")
        for i in range(count)
    ]


def fixtures() -> List[FiniteAlgebra]:
    return [
        diamond_semilattice(),
        diamond_with_top(),
        directoid_fixture(),
        chain_semilattice(3),
        chain_semilattice(4),
        cyclic_groupoid(3),
        cyclic_groupoid(4, with_zero=True),
        left_zero_semigroup(3),
        swap_algebra(),
        trivial_algebra(),
        implication_fixture(),
        boolean_implication_algebra(2),
        cyclic_loop(3),
    ]


def corpus() -> List[FiniteAlgebra]:
    """
    The named fixtures plus seeded random algebras of sizes 2 to 4, some of
    them with a unary operation and a constant.
    """
    rng = random.Random(20240611)
    mixed = [
        random_algebra(rng, rng.choice([2, 3]), MIXED, name=f"mixed{i}")
        for i in range(10)
    ]

    return fixtures() + random_algebras(7, 40, [2, 3, 4]) + mixed


def directoids() -> List[FiniteAlgebra]:
    """
    Every directoid with 2 to 4 elements.
    """
    return [alg for n in [2, 3, 4] for alg in enumerate_directoids(n)]


def partition(text: str) -> Partition:
    """
    Builds a partition from its "0|1 2 3" notation.
    """
    blocks = [[int(e) for e in block.split()] for block in text.split("|")]

    return Partition.from_blocks(sum(len(block) for block in blocks), blocks)

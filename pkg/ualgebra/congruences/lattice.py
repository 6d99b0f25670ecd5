import logging
import time

from typing import Dict
from typing import FrozenSet
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

import networkx as nx

from ualgebra.algebra import FiniteAlgebra
from ualgebra.config import Config
from ualgebra.config import get_config
from ualgebra.exceptions import AlgebraError

from .congruence import principal_congruence
from .partition import Partition
from .partition import omega


logger = logging.getLogger(__name__)


class CongruenceLattice:
    """
    The congruences of a finite algebra in canonical order (more blocks first,
    then lexicographic block_of), with the cover relation of its Hasse diagram.
    """

    def __init__(self, size: int, congruences: Sequence[Partition]) -> None:
        self._size = size
        self._congruences = tuple(sorted(set(congruences), key=lambda p: p.sort_key))
        self._index: Dict[Partition, int] = {
            p: i for i, p in enumerate(self._congruences)
        }

        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self._congruences)))
        graph.add_edges_from(
            (i, j)
            for i, p in enumerate(self._congruences)
            for j, q in enumerate(self._congruences)
            if i != j and p.refines(q)
        )
        reduced = nx.transitive_reduction(graph)

        self._covers: FrozenSet[Tuple[int, int]] = frozenset(reduced.edges())
        self._upper: Dict[int, Tuple[int, ...]] = {
            i: tuple(sorted(reduced.successors(i))) for i in reduced.nodes
        }
        self._lower: Dict[int, Tuple[int, ...]] = {
            i: tuple(sorted(reduced.predecessors(i))) for i in reduced.nodes
        }

    @property
    def size(self) -> int:
        """
        The size of the underlying universe.
        """
        return self._size

    @property
    def congruences(self) -> Tuple[Partition, ...]:
        return self._congruences

    @property
    def covers(self) -> FrozenSet[Tuple[int, int]]:
        return self._covers

    @property
    def bottom(self) -> Partition:
        return self._congruences[0]

    @property
    def top(self) -> Partition:
        return self._congruences[-1]

    def sorted_covers(self) -> List[Tuple[int, int]]:
        return sorted(self._covers)

    def index(self, theta: Partition) -> int:
        try:
            return self._index[theta]
        except KeyError:
            raise AlgebraError(f"{theta} is not in the congruence lattice")

    def leq(self, theta: Partition, phi: Partition) -> bool:
        return theta.refines(phi)

    def join(self, theta: Partition, phi: Partition) -> Partition:
        return theta.join(phi)

    def meet(self, theta: Partition, phi: Partition) -> Partition:
        return theta.meet(phi)

    def upper_covers(self, theta: Partition) -> Tuple[Partition, ...]:
        return tuple(self._congruences[j] for j in self._upper[self.index(theta)])

    def lower_covers(self, theta: Partition) -> Tuple[Partition, ...]:
        return tuple(self._congruences[i] for i in self._lower[self.index(theta)])

    def is_cover(self, theta: Partition, phi: Partition) -> bool:
        return (self.index(theta), self.index(phi)) in self._covers

    def atoms(self) -> Tuple[Partition, ...]:
        return self.upper_covers(self.bottom)

    def __contains__(self, theta: object) -> bool:
        return theta in self._index

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._congruences)

    def __len__(self) -> int:
        return len(self._congruences)

    def __repr__(self) -> str:
        return f"<CongruenceLattice {len(self)} congruences on {self._size} elements>"


def principal_congruences(
    alg: FiniteAlgebra, config: Optional[Config] = None
) -> Dict[Tuple[int, int], Partition]:
    return {
        (a, b): principal_congruence(alg, a, b, config=config)
        for a in alg.universe
        for b in alg.universe
        if a < b
    }


def all_congruences(
    alg: FiniteAlgebra, config: Optional[Config] = None
) -> CongruenceLattice:
    """
    Every congruence is a join of principal congruences, so ω together with
    the join-closure of the principals is all of Con(alg).
    """
    config = config or get_config()
    config.check_limit("congruence-size", alg.size, "Congruence lattice")

    start = time.time()
    principals = list(dict.fromkeys(principal_congruences(alg, config).values()))

    found: Set[Partition] = {omega(alg.size)}
    found.update(principals)
    frontier = list(principals)
    while frontier:
        discovered = []
        for theta in frontier:
            for principal in principals:
                joined = theta.join(principal)
                if joined not in found:
                    found.add(joined)
                    discovered.append(joined)

        frontier = discovered

    lattice = CongruenceLattice(alg.size, list(found))
    logger.debug(
        f"Congruence lattice of {alg.name}: {len(lattice)} congruences,"
        f" {len(principals)} distinct principals"
        f" in {time.time() - start:.3f}s"
    )

    return lattice


def atoms(lattice: CongruenceLattice) -> Tuple[Partition, ...]:
    return lattice.atoms()


def covers_of(lattice: CongruenceLattice, theta: Partition) -> Tuple[Partition, ...]:
    return lattice.upper_covers(theta)


def is_modular(lattice: CongruenceLattice) -> bool:
    """
    Checks the modular law x ≤ z ⇒ x ∨ (y ∧ z) = (x ∨ y) ∧ z over all triples.
    """
    congruences = lattice.congruences
    for x in congruences:
        for z in congruences:
            if x == z or not x.refines(z):
                continue

            for y in congruences:
                if x.join(y.meet(z)) != x.join(y).meet(z):
                    logger.debug(f"Modular law fails at x={x}, y={y}, z={z}")

                    return False

    return True


def is_semimodular(lattice: CongruenceLattice) -> bool:
    """
    Upper semimodularity: x ∧ y ≺ x implies y ≺ x ∨ y.
    """
    congruences = lattice.congruences
    for x in congruences:
        for y in congruences:
            if not lattice.is_cover(x.meet(y), x):
                continue

            if not lattice.is_cover(y, x.join(y)):
                logger.debug(f"Semimodularity fails at x={x}, y={y}")

                return False

    return True


def is_uniform(theta: Partition) -> bool:
    return len({len(block) for block in theta.blocks}) == 1


def is_congruence_uniform(
    alg: FiniteAlgebra, lattice: Optional[CongruenceLattice] = None
) -> bool:
    lattice = lattice or all_congruences(alg)

    return all(is_uniform(theta) for theta in lattice)

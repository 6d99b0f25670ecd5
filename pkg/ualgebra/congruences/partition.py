from typing import Dict
from typing import Hashable
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Sequence
from typing import Tuple

from ualgebra.exceptions import AlgebraError

from .union_find import UnionFind


def normalize(labels: Sequence[Hashable]) -> Tuple[int, ...]:
    """
    Renumbers block labels by first occurrence.
    """
    seen: Dict[Hashable, int] = {}
    block_of = []
    for label in labels:
        if label not in seen:
            seen[label] = len(seen)

        block_of.append(seen[label])

    return tuple(block_of)


class Partition:
    """
    An equivalence relation on {0..n-1} in canonical block form: block_of[0] = 0
    and blocks are numbered by their least element.
    """

    __slots__ = ("_block_of", "_blocks", "_hash")

    def __init__(self, labels: Sequence[Hashable]) -> None:
        if not labels:
            raise AlgebraError("A partition needs a non-empty universe")

        self._block_of = normalize(labels)
        self._hash = hash(self._block_of)

        blocks: List[List[int]] = [[] for _ in range(max(self._block_of) + 1)]
        for element, block in enumerate(self._block_of):
            blocks[block].append(element)

        self._blocks = tuple(tuple(block) for block in blocks)

    @classmethod
    def from_blocks(cls, size: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        labels = [-1] * size
        for index, block in enumerate(blocks):
            for element in block:
                if not 0 <= element < size:
                    raise AlgebraError(
                        f"Element {element} is out of range 0..{size - 1}"
                    )

                if labels[element] != -1:
                    raise AlgebraError(
                        f"Element {element} occurs in more than one block"
                    )

                labels[element] = index

        missing = [element for element, label in enumerate(labels) if label == -1]
        if missing:
            raise AlgebraError(
                "Elements {} are missing from the partition".format(
                    " ".join(str(e) for e in missing)
                )
            )

        return cls(labels)

    @property
    def size(self) -> int:
        return len(self._block_of)

    @property
    def block_of(self) -> Tuple[int, ...]:
        return self._block_of

    @property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        return self._blocks

    @property
    def num_blocks(self) -> int:
        return len(self._blocks)

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return -len(self._blocks), self._block_of

    def block(self, element: int) -> Tuple[int, ...]:
        return self._blocks[self._block_of[element]]

    def related(self, a: int, b: int) -> bool:
        return self._block_of[a] == self._block_of[b]

    def is_omega(self) -> bool:
        return len(self._blocks) == len(self._block_of)

    def is_full(self) -> bool:
        return len(self._blocks) == 1

    def non_singleton_blocks(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(block for block in self._blocks if len(block) > 1)

    def refines(self, other: "Partition") -> bool:
        """
        Whether self ⊆ other as relations.
        """
        _check_sizes(self, other)

        return all(
            other._block_of[block[0]] == other._block_of[element]
            for block in self._blocks
            for element in block
        )

    def pairs(self) -> Iterator[Tuple[int, int]]:
        for block in self._blocks:
            for a in block:
                for b in block:
                    yield a, b

    def meet(self, other: "Partition") -> "Partition":
        _check_sizes(self, other)

        return Partition(list(zip(self._block_of, other._block_of)))

    def join(self, other: "Partition") -> "Partition":
        _check_sizes(self, other)

        union_find = UnionFind(self.size)
        for partition in (self, other):
            for block in partition._blocks:
                for element in block[1:]:
                    union_find.union(block[0], element)

        return Partition(union_find.labels())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented

        return self._block_of == other._block_of

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"<Partition {self}>"


def _check_sizes(p: Partition, q: Partition) -> None:
    if p.size != q.size:
        raise AlgebraError(f"Partitions over different universes: {p.size} != {q.size}")


def format_partition(partition: Partition) -> str:
    return "|".join(" ".join(str(e) for e in block) for block in partition.blocks)


def omega(n: int) -> Partition:
    if n < 1:
        raise AlgebraError("The universe must have at least one element")

    return Partition(range(n))


def full(n: int) -> Partition:
    if n < 1:
        raise AlgebraError("The universe must have at least one element")

    return Partition([0] * n)


def meet(p: Partition, q: Partition) -> Partition:
    return p.meet(q)


def join(p: Partition, q: Partition) -> Partition:
    return p.join(q)

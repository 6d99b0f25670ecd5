from typing import List


class UnionFind:
    """
    Disjoint sets over 0..n-1 with path halving and union by size.
    """

    def __init__(self, size: int) -> None:
        self._parents = list(range(size))
        self._sizes = [1] * size

    def find(self, element: int) -> int:
        parents = self._parents
        while parents[element] != element:
            parents[element] = parents[parents[element]]
            element = parents[element]

        return element

    def union(self, a: int, b: int) -> bool:
        """
        Merges the sets of a and b; returns False if they already coincided.
        """
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False

        if self._sizes[ra] < self._sizes[rb]:
            ra, rb = rb, ra

        self._parents[rb] = ra
        self._sizes[ra] += self._sizes[rb]

        return True

    def labels(self) -> List[int]:
        return [self.find(element) for element in range(len(self._parents))]

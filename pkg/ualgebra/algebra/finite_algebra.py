from types import MappingProxyType
from typing import Dict
from typing import Mapping
from typing import Sequence
from typing import Tuple

from ualgebra.exceptions import AlgebraError
from ualgebra.utils.helpers import tuples

from .signature import Signature


class Operation:
    """
    A fundamental operation given by its flat row-major table.

    Calling an operation does no validation; use FiniteAlgebra.eval_op for
    checked evaluation.
    """

    __slots__ = ("_name", "_arity", "_size", "_table")

    def __init__(
        self, name: str, arity: int, size: int, table: Tuple[int, ...]
    ) -> None:
        self._name = name
        self._arity = arity
        self._size = size
        self._table = table

    @property
    def name(self) -> str:
        return self._name

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def table(self) -> Tuple[int, ...]:
        return self._table

    def index(self, args: Sequence[int]) -> int:
        index = 0
        for arg in args:
            index = index * self._size + arg

        return index

    def __call__(self, *args: int) -> int:
        index = 0
        for arg in args:
            index = index * self._size + arg

        return self._table[index]

    def __repr__(self) -> str:
        return f"<Operation {self._name}/{self._arity}>"


class FiniteAlgebra:
    def __init__(
        self,
        name: str,
        size: int,
        signature: Signature,
        tables: Mapping[str, Sequence[int]],
    ) -> None:
        self._name = name
        self._size = size
        self._signature = signature
        self._tables: Dict[str, Tuple[int, ...]] = {
            symbol: tuple(table) for symbol, table in tables.items()
        }
        self._operations = tuple(
            Operation(s.name, s.arity, size, self._tables[s.name])
            for s in signature
            if s.name in self._tables
        )
        self._by_name = {}
        for operation in self._operations:
            self._by_name.setdefault(operation.name, operation)

    @property
    def name(self) -> str:
        return self._name

    @property
    def size(self) -> int:
        return self._size

    @property
    def universe(self) -> range:
        return range(self._size)

    @property
    def signature(self) -> Signature:
        return self._signature

    @property
    def tables(self) -> Mapping[str, Tuple[int, ...]]:
        return MappingProxyType(self._tables)

    @property
    def operations(self) -> Tuple[Operation, ...]:
        return self._operations

    @property
    def is_trivial(self) -> bool:
        return self._size == 1

    def table(self, symbol: str) -> Tuple[int, ...]:
        return self.operation(symbol).table

    def operation(self, symbol: str) -> Operation:
        try:
            return self._by_name[symbol]
        except KeyError:
            raise AlgebraError(
                f'Unknown operation symbol "{symbol}" in algebra {self._name}'
            )

    def constants(self) -> Dict[str, int]:
        return {op.name: op.table[0] for op in self._operations if op.arity == 0}

    def eval_op(self, symbol: str, args: Sequence[int]) -> int:
        operation = self.operation(symbol)
        if len(args) != operation.arity:
            raise AlgebraError(
                f"{symbol} expects {operation.arity} arguments, got {len(args)}"
            )

        for arg in args:
            if not 0 <= arg < self._size:
                raise AlgebraError(
                    f"Element {arg} is out of range for an algebra of size {self._size}"
                )

        return operation(*args)

    def with_name(self, name: str) -> "FiniteAlgebra":
        return FiniteAlgebra(name, self._size, self._signature, self._tables)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented

        return (
            self._name == other._name
            and self._size == other._size
            and self._signature == other._signature
            and self._tables == other._tables
        )

    def __hash__(self) -> int:
        return hash((self._name, self._size, self._signature))

    def __repr__(self) -> str:
        return f"<FiniteAlgebra {self._name} size={self._size} {self._signature!r}>"


def relabel(alg: FiniteAlgebra, permutation: Sequence[int]) -> FiniteAlgebra:
    """
    The isomorphic copy of alg obtained by renaming element x to permutation[x].
    """
    n = alg.size
    if sorted(permutation) != list(range(n)):
        raise AlgebraError(f"{list(permutation)} is not a permutation of 0..{n - 1}")

    inverse = [0] * n
    for old, new in enumerate(permutation):
        inverse[new] = old

    tables = {}
    for operation in alg.operations:
        tables[operation.name] = [
            permutation[operation(*(inverse[b] for b in args))]
            for args in tuples(range(n), operation.arity)
        ]

    return FiniteAlgebra(alg.name, n, alg.signature, tables)

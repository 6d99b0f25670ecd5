import dataclasses
import re

from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import Tuple

from ualgebra.exceptions import AlgebraError


SYMBOL_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclasses.dataclass(frozen=True)
class OperationSymbol:
    name: str
    arity: int

    def __str__(self) -> str:
        return f"op {self.name} {self.arity}"


class Signature:
    """
    An ordered sequence of operation symbols with their arities.

    Duplicated names are accepted at construction so that validation can report
    them; lookups resolve to the first occurrence.
    """

    def __init__(self, symbols: Iterable[OperationSymbol] = ()) -> None:
        self._symbols = tuple(symbols)
        self._arities: Dict[str, int] = {}

        for symbol in self._symbols:
            self._arities.setdefault(symbol.name, symbol.arity)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[str, int]]) -> "Signature":
        return cls(OperationSymbol(name, arity) for name, arity in pairs)

    @property
    def symbols(self) -> Tuple[OperationSymbol, ...]:
        return self._symbols

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(symbol.name for symbol in self._symbols)

    @property
    def max_arity(self) -> int:
        return max((symbol.arity for symbol in self._symbols), default=0)

    def arity(self, name: str) -> int:
        try:
            return self._arities[name]
        except KeyError:
            raise AlgebraError(f'Unknown operation symbol "{name}"')

    def nullary(self) -> Tuple[str, ...]:
        return tuple(symbol.name for symbol in self._symbols if symbol.arity == 0)

    def __contains__(self, name: object) -> bool:
        return name in self._arities

    def __iter__(self) -> Iterator[OperationSymbol]:
        return iter(self._symbols)

    def __len__(self) -> int:
        return len(self._symbols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented

        return self._symbols == other._symbols

    def __hash__(self) -> int:
        return hash(self._symbols)

    def __str__(self) -> str:
        return ";".join(str(symbol) for symbol in self._symbols)

    def __repr__(self) -> str:
        return "<Signature {}>".format(
            ", ".join(f"{s.name}/{s.arity}" for s in self._symbols)
        )

"""
The line-oriented algebra file format:

    # comment
    algebra diamond
    size 4
    op join 2
    0 1 2 3
    1 1 3 3
    2 3 2 3
    3 3 3 3

Each `op NAME ARITY` header is followed by size^arity integers in row-major
order, leftmost argument slowest. Line breaks inside a table are free.
"""
import dataclasses
import logging
import re

from pathlib import Path
from typing import Dict
from typing import Iterator
from typing import List
from typing import Optional
from typing import Tuple
from typing import Union

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import OperationSymbol
from ualgebra.algebra import Signature
from ualgebra.algebra import validate
from ualgebra.exceptions import InvalidAlgebraFile
from ualgebra.exceptions import ParseError


logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")
_INTEGER = re.compile(r"^-?[0-9]+$")
_SIGNATURE_ITEM = re.compile(r"^\s*op\s+(\S+)\s+(\S+)\s*$")


@dataclasses.dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        for match in _TOKEN.finditer(line):
            tokens.append(Token(match.group(0), number, match.start() + 1))

    return tokens


class _Reader:
    def __init__(self, tokens: List[Token]) -> None:
        self._tokens = tokens
        self._position = 0

    def at_end(self) -> bool:
        return self._position >= len(self._tokens)

    def peek(self) -> Optional[Token]:
        if self.at_end():
            return None

        return self._tokens[self._position]

    def next(self, expected: str) -> Token:
        token = self.peek()
        if token is None:
            last = self._tokens[-1] if self._tokens else Token("", 1, 1)
            raise ParseError(
                f"unexpected end of file, expected {expected}",
                last.line,
                last.column + len(last.text),
            )

        self._position += 1

        return token

    def keyword(self, word: str) -> Token:
        token = self.next(f'"{word}"')
        if token.text != word:
            raise ParseError(
                f'expected "{word}", got "{token.text}"', token.line, token.column
            )

        return token

    def integer(self, what: str) -> int:
        token = self.next(what)
        if not _INTEGER.match(token.text):
            raise ParseError(
                f'expected {what}, got "{token.text}"', token.line, token.column
            )

        return int(token.text)


def parse_algebra(text: str, validate_result: bool = True) -> FiniteAlgebra:
    reader = _Reader(tokenize(text))

    reader.keyword("algebra")
    name = reader.next("an algebra name").text

    reader.keyword("size")
    size_token = reader.peek()
    size = reader.integer("a size")
    if size < 1:
        assert size_token is not None
        raise ParseError(
            f"size must be positive, got {size}", size_token.line, size_token.column
        )

    symbols = []
    tables: Dict[str, List[int]] = {}
    while not reader.at_end():
        header = reader.keyword("op")
        symbol = reader.next("an operation name").text
        arity_token = reader.peek()
        arity = reader.integer("an arity")
        if arity < 0:
            assert arity_token is not None
            raise ParseError(
                f"negative arity {arity} for op {symbol}",
                arity_token.line,
                arity_token.column,
            )

        expected = size ** arity
        table = []
        while len(table) < expected:
            token = reader.peek()
            if token is None or token.text == "op":
                anchor = token or header
                raise ParseError(
                    f"op {symbol}: table length {len(table)} != {expected}",
                    anchor.line,
                    anchor.column,
                )

            table.append(reader.integer(f"a table entry of op {symbol}"))

        symbols.append(OperationSymbol(symbol, arity))
        if symbol not in tables:
            tables[symbol] = table

    alg = FiniteAlgebra(name, size, Signature(symbols), tables)
    if validate_result:
        violations = validate(alg)
        if violations:
            raise InvalidAlgebraFile(violations)

    logger.debug(f"Parsed algebra {name} of size {size} with signature {alg.signature}")

    return alg


def load_algebra(path: Union[str, Path]) -> FiniteAlgebra:
    return parse_algebra(Path(path).read_text(encoding="utf-8"))


def _rows(table: Tuple[int, ...], size: int) -> Iterator[str]:
    if len(table) <= 1:
        yield " ".join(str(v) for v in table)
        return

    for start in range(0, len(table), size):
        yield " ".join(str(v) for v in table[start : start + size])


def dump_algebra(alg: FiniteAlgebra) -> str:
    lines = [f"algebra {alg.name}", f"size {alg.size}"]
    for operation in alg.operations:
        lines.append(f"op {operation.name} {operation.arity}")
        lines.extend(_rows(operation.table, alg.size))

    return "\n".join(lines) + "\n"


def parse_signature(text: str) -> Signature:
    """
    Parses `op NAME ARITY[;op NAME ARITY...]`.
    """
    from ualgebra.algebra.signature import SYMBOL_NAME

    symbols = []
    column = 1
    for item in text.split(";"):
        match = _SIGNATURE_ITEM.match(item)
        if not match or not _INTEGER.match(match.group(2)):
            raise ParseError(
                f'expected "op NAME ARITY", got "{item.strip()}"', 1, column
            )

        name, arity = match.group(1), int(match.group(2))
        if not SYMBOL_NAME.match(name):
            raise ParseError(f'invalid operation name "{name}"', 1, column)

        if arity < 0:
            raise ParseError(f"negative arity {arity} for op {name}", 1, column)

        if name in {symbol.name for symbol in symbols}:
            raise ParseError(f"duplicate operation {name}", 1, column)

        symbols.append(OperationSymbol(name, arity))
        column += len(item) + 1

    return Signature(symbols)

import re

from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple

from ualgebra.algebra import App
from ualgebra.algebra import Signature
from ualgebra.algebra import Term
from ualgebra.algebra import Var
from ualgebra.algebra import check_term
from ualgebra.congruences import Partition
from ualgebra.congruences import format_partition
from ualgebra.exceptions import ParseError
from ualgebra.utils.helpers import format_elements


_ELEMENT_SEPARATOR = re.compile(r"[\s,]+")
_TERM_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_]*)|(\()|(\))|(,))")
_VARIABLE = re.compile(r"^(?:x|y|z|x[0-9])$")
_ELEMENT = re.compile(r"^[0-9]+$")

_NAMED_VARIABLES = {"x": 0, "y": 1, "z": 2}


def parse_partition(text: str, n: int) -> Partition:
    """
    Parses blocks separated by `|` with elements separated by spaces or
    commas; every element of 0..n-1 must occur exactly once.
    """
    blocks: List[List[int]] = []
    seen = set()
    column = 1
    for raw in text.split("|"):
        elements = [item for item in _ELEMENT_SEPARATOR.split(raw.strip()) if item]
        if not elements:
            raise ParseError("empty block", 1, column)

        block = []
        for item in elements:
            if not _ELEMENT.match(item):
                raise ParseError(f'expected an element, got "{item}"', 1, column)

            element = int(item)
            if element >= n:
                raise ParseError(
                    f"element {element} is out of range 0..{n - 1}", 1, column
                )

            if element in seen:
                raise ParseError(f"duplicate element {element}", 1, column)

            seen.add(element)
            block.append(element)

        blocks.append(block)
        column += len(raw) + 1

    missing = sorted(set(range(n)) - seen)
    if missing:
        raise ParseError(
            "missing elements {}".format(" ".join(str(e) for e in missing)), 1, 1
        )

    return Partition.from_blocks(n, blocks)


def format_element_set(elements: Iterable[int]) -> str:
    return format_elements(elements)


def variable_index(name: str) -> Optional[int]:
    if not _VARIABLE.match(name):
        return None

    if name in _NAMED_VARIABLES:
        return _NAMED_VARIABLES[name]

    return int(name[1:])


class _TermParser:
    def __init__(self, text: str) -> None:
        self._text = text
        self._tokens = self._tokenize(text)
        self._position = 0

    def _tokenize(self, text: str) -> List[Tuple[str, int]]:
        tokens = []
        position = 0
        while position < len(text):
            if text[position:].strip() == "":
                break

            match = _TERM_TOKEN.match(text, position)
            if not match:
                offset = len(text[position:]) - len(text[position:].lstrip())
                raise ParseError(
                    f'unexpected character "{text[position + offset]}"',
                    1,
                    position + offset + 1,
                )

            start = match.start(match.lastindex or 0)
            tokens.append((match.group(match.lastindex or 0), start + 1))
            position = match.end()

        return tokens

    def _peek(self) -> Optional[Tuple[str, int]]:
        if self._position < len(self._tokens):
            return self._tokens[self._position]

        return None

    def _expect(self, text: str) -> None:
        token = self._peek()
        if token is None:
            raise ParseError(
                f'expected "{text}" at end of term', 1, len(self._text) + 1
            )

        if token[0] != text:
            raise ParseError(f'expected "{text}", got "{token[0]}"', 1, token[1])

        self._position += 1

    def parse(self) -> Term:
        term = self._term()
        token = self._peek()
        if token is not None:
            raise ParseError(f'unexpected "{token[0]}" after term', 1, token[1])

        return term

    def _term(self) -> Term:
        token = self._peek()
        if token is None:
            raise ParseError("expected a term", 1, len(self._text) + 1)

        name, column = token
        if not name[0].isalpha():
            raise ParseError(f'expected a term, got "{name}"', 1, column)

        self._position += 1
        following = self._peek()
        if following is not None and following[0] == "(":
            self._position += 1
            args = [self._term()]
            while True:
                separator = self._peek()
                if separator is None or separator[0] != ",":
                    break

                self._position += 1
                args.append(self._term())

            self._expect(")")

            return App(name, tuple(args))

        index = variable_index(name)
        if index is not None:
            return Var(index)

        return App(name)


def parse_term(text: str, signature: Optional[Signature] = None) -> Term:
    """
    Parses `name(arg,...)` terms; bare x, y, z and x0..x9 are variables,
    any other bare name is a nullary symbol.
    """
    term = _TermParser(text).parse()
    if signature is not None:
        check_term(signature, term)

    return term


def format_term(term: Term) -> str:
    return str(term)


__all__ = [
    "format_element_set",
    "format_partition",
    "format_term",
    "parse_partition",
    "parse_term",
]

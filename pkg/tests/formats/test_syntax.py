import pytest

from ualgebra.algebra import App
from ualgebra.algebra import Var
from ualgebra.algebra import app
from ualgebra.algebra import x
from ualgebra.algebra import y
from ualgebra.exceptions import ParseError
from ualgebra.exceptions import TermError
from ualgebra.formats import format_element_set
from ualgebra.formats import format_partition
from ualgebra.formats import format_term
from ualgebra.formats import parse_partition
from ualgebra.formats import parse_term

from tests.helpers import partition


def test_parse_partition():
    assert parse_partition("0|1 2 3", 4) == partition("0|1 2 3")
    assert parse_partition("3, 1 | 2,0", 4) == partition("0 2|1 3")
    assert format_partition(parse_partition("2 3|1|0", 4)) == "0|1|2 3"


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("0|1 2", "line 1, column 1: missing elements 3"),
        ("0||1 2 3", "line 1, column 3: empty block"),
        ("0 0|1 2 3", "line 1, column 1: duplicate element 0"),
        ("0 5|1 2 3", "line 1, column 1: element 5 is out of range 0..3"),
        ("0|a 1 2 3", 'line 1, column 3: expected an element, got "a"'),
        ("0|1 ² 2 3", 'line 1, column 3: expected an element, got "²"'),
    ],
)
def test_invalid_partitions(text, message):
    with pytest.raises(ParseError) as e:
        parse_partition(text, 4)

    assert str(e.value) == message


def test_parse_term(diamond):
    assert parse_term("join(x, y)") == app("join", x, y)
    assert parse_term("join(x,join(y,z))", diamond.signature) == app(
        "join", x, app("join", y, Var(2))
    )
    assert parse_term("x") == x
    assert parse_term("x7") == Var(7)
    assert parse_term("one") == App("one")
    assert parse_term("rdiv(x,y)") == App("rdiv", (x, y))


def test_format_term():
    term = parse_term("imp( imp(x,y) , x4 )")

    assert format_term(term) == "imp(imp(x,y),x4)"
    assert parse_term(format_term(term)) == term


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("", "line 1, column 1: expected a term"),
        ("join(x", 'line 1, column 7: expected ")" at end of term'),
        ("join(x,y))", 'line 1, column 10: unexpected ")" after term'),
        ("join(x y)", 'line 1, column 8: expected ")", got "y"'),
        ("join(x)$", 'line 1, column 8: unexpected character "$"'),
        ("(x)", 'line 1, column 1: expected a term, got "("'),
    ],
)
def test_invalid_terms(text, message):
    with pytest.raises(ParseError) as e:
        parse_term(text)

    assert str(e.value) == message


def test_terms_are_checked_against_the_signature(diamond):
    with pytest.raises(TermError, match='Unknown operation symbol "meet"'):
        parse_term("meet(x,y)", diamond.signature)

    with pytest.raises(TermError, match="join expects 2 arguments, got 1"):
        parse_term("join(x)", diamond.signature)


def test_format_element_set():
    assert format_element_set({3, 1, 2}) == "{1 2 3}"
    assert format_element_set([]) == "{}"

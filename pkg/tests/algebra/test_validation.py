from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Signature
from ualgebra.algebra import Violation
from ualgebra.algebra import validate


BINARY = Signature.from_pairs([("f", 2)])


def test_well_formed_algebras_have_no_violations(diamond):
    assert validate(diamond) == []


def test_short_table():
    alg = FiniteAlgebra("a", 2, BINARY, {"f": [0, 1, 1]})

    assert validate(alg) == [Violation("op f", "table length 3 != 4")]


def test_entries_out_of_range():
    alg = FiniteAlgebra("a", 2, BINARY, {"f": [0, 1, 2, 0]})

    assert validate(alg) == [Violation("op f", "entry out of range: 2 at index 2")]


def test_missing_and_undeclared_tables():
    alg = FiniteAlgebra("a", 2, BINARY, {"g": [0, 1]})

    assert validate(alg) == [
        Violation("op f", "missing table"),
        Violation("op g", "table for an undeclared symbol"),
    ]


def test_duplicate_symbols():
    signature = Signature.from_pairs([("f", 1), ("f", 1)])
    alg = FiniteAlgebra("a", 2, signature, {"f": [1, 0]})

    assert validate(alg) == [Violation("op f", "duplicate symbol")]


def test_invalid_names():
    signature = Signature.from_pairs([("2f", 1)])
    alg = FiniteAlgebra("my algebra", 2, signature, {"2f": [1, 0]})

    assert validate(alg) == [
        Violation("algebra", 'invalid name "my algebra"'),
        Violation("op 2f", "invalid symbol name"),
    ]


def test_empty_universe():
    alg = FiniteAlgebra("a", 0, BINARY, {"f": []})

    assert validate(alg) == [Violation("size", "size must be positive, got 0")]


def test_violation_string():
    assert str(Violation("op f", "missing table")) == "op f: missing table"

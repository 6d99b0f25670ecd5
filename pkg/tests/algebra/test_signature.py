import pytest

from ualgebra.algebra import OperationSymbol
from ualgebra.algebra import Signature
from ualgebra.exceptions import AlgebraError


def test_signature_keeps_symbols_in_order():
    signature = Signature.from_pairs([("join", 2), ("neg", 1), ("top", 0)])

    assert signature.names == ("join", "neg", "top")
    assert signature.symbols[0] == OperationSymbol("join", 2)
    assert signature.max_arity == 2
    assert signature.nullary() == ("top",)
    assert len(signature) == 3
    assert "neg" in signature
    assert "meet" not in signature


def test_signature_arity_lookup():
    signature = Signature.from_pairs([("join", 2), ("top", 0)])

    assert signature.arity("join") == 2
    assert signature.arity("top") == 0

    with pytest.raises(AlgebraError, match='Unknown operation symbol "meet"'):
        signature.arity("meet")


def test_signature_string_forms():
    signature = Signature.from_pairs([("join", 2), ("top", 0)])

    assert str(signature) == "op join 2;op top 0"
    assert repr(signature) == "<Signature join/2, top/0>"
    assert str(OperationSymbol("neg", 1)) == "op neg 1"


def test_signatures_compare_by_symbols():
    first = Signature.from_pairs([("f", 2)])
    second = Signature.from_pairs([("f", 2)])

    assert first == second
    assert first != Signature.from_pairs([("f", 1)])
    assert hash(first) == hash(second)


def test_duplicate_symbols_resolve_to_the_first():
    signature = Signature.from_pairs([("f", 2), ("f", 1)])

    assert len(signature) == 2
    assert signature.arity("f") == 2


def test_empty_signature():
    signature = Signature()

    assert signature.max_arity == 0
    assert signature.names == ()

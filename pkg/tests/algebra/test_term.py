import pytest

from ualgebra.algebra import App
from ualgebra.algebra import Var
from ualgebra.algebra import app
from ualgebra.algebra import check_term
from ualgebra.algebra import eval_term
from ualgebra.algebra import substitute
from ualgebra.algebra import variables
from ualgebra.algebra import x
from ualgebra.algebra import y
from ualgebra.algebra import z
from ualgebra.algebra.term import variable_name
from ualgebra.exceptions import TermError
from ualgebra.structures import diamond_with_top


def test_terms_print_without_spaces():
    assert str(app("join", x, app("join", y, z))) == "join(x,join(y,z))"
    assert str(app("top")) == "top"
    assert str(Var(4)) == "x4"


def test_variable_names():
    assert [variable_name(i) for i in range(5)] == ["x", "y", "z", "x3", "x4"]


def test_variables_and_substitution():
    term = app("join", x, app("join", y, x))
    top = App("top")

    assert variables(term) == {0, 1}
    assert variables(app("top")) == frozenset()
    assert substitute(term, {1: x}) == app("join", x, app("join", x, x))
    assert substitute(term, {0: top}) == app("join", top, app("join", y, top))


def test_check_term_rejects_unknown_symbols(diamond):
    with pytest.raises(TermError, match='Unknown operation symbol "meet"'):
        check_term(diamond.signature, app("meet", x, y))


def test_check_term_rejects_wrong_arities(diamond):
    with pytest.raises(TermError, match="join expects 2 arguments, got 1"):
        check_term(diamond.signature, app("join", x))


def test_eval_term(diamond):
    assert eval_term(diamond, app("join", x, y), {0: 1, 1: 2}) == 3
    assert eval_term(diamond, x, {0: 2}) == 2
    assert eval_term(diamond_with_top(), app("join", x, app("top")), {0: 0}) == 3


def test_eval_term_needs_every_variable(diamond):
    with pytest.raises(TermError, match="Unbound variable y"):
        eval_term(diamond, app("join", x, y), {0: 1})


def test_eval_term_checks_values(diamond):
    with pytest.raises(TermError, match="Value 4 of x is out of range"):
        eval_term(diamond, x, {0: 4})

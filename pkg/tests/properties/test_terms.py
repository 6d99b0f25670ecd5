import pytest

from ualgebra.algebra import app
from ualgebra.algebra import x
from ualgebra.algebra import y
from ualgebra.algebra import z
from ualgebra.exceptions import AlgebraError
from ualgebra.exceptions import TermError
from ualgebra.properties import check_csakany_term
from ualgebra.properties import check_p_terms_condition
from ualgebra.properties import check_weak_regularity_terms
from ualgebra.properties import is_weakly_regular_at
from ualgebra.structures import boolean_implication_algebra
from ualgebra.structures import chain_semilattice
from ualgebra.structures import cyclic_groupoid
from ualgebra.structures import implication_fixture
from ualgebra.structures import nonassociative_loop


def imp(a, b):
    return app("imp", a, b)


def test_loop_terms():
    loop = nonassociative_loop()

    assert check_weak_regularity_terms(loop, 0, [app("rdiv", x, y)])
    assert check_csakany_term(loop, app("one"))
    assert check_p_terms_condition(loop, [app("rdiv", x, y), app("one")])


def test_implication_terms():
    alg = implication_fixture()

    assert check_weak_regularity_terms(alg, 1, [imp(x, y), imp(y, x)])
    assert check_csakany_term(alg, imp(x, x))


def test_boolean_implication_terms():
    alg = boolean_implication_algebra(2)

    assert check_weak_regularity_terms(alg, 3, [imp(x, y), imp(y, x)])
    assert check_csakany_term(alg, imp(x, x))


def test_implication_p_terms():
    for alg in [implication_fixture(), boolean_implication_algebra(2)]:
        assert check_p_terms_condition(alg, [imp(x, x), imp(x, y), imp(y, x)])
        assert not check_p_terms_condition(alg, [imp(x, x), imp(x, y)])


def test_projections_are_p_terms(diamond):
    assert check_p_terms_condition(diamond, [x, y])
    assert check_p_terms_condition(chain_semilattice(3), [x, y])


def test_p_terms_failure(diamond):
    check = check_p_terms_condition(diamond, [app("join", x, y), x])

    assert not check
    assert check.pair == (1, 0)


def test_csakany_failure():
    check = check_csakany_term(cyclic_groupoid(3), x)

    assert not check
    assert check.symbol == "add"


def test_weak_regularity_failure(diamond):
    check = check_weak_regularity_terms(diamond, 3, [app("join", x, y)])

    assert not check
    assert check.pair == (0, 0)


def test_term_conditions_validate_their_input(diamond):
    with pytest.raises(TermError, match="At least two"):
        check_p_terms_condition(diamond, [x])

    with pytest.raises(TermError, match="is not a binary term"):
        check_p_terms_condition(diamond, [x, app("join", x, z)])

    with pytest.raises(TermError, match="more than one variable"):
        check_csakany_term(diamond, app("join", x, y))

    with pytest.raises(TermError, match="At least one"):
        check_weak_regularity_terms(diamond, 0, [])

    with pytest.raises(AlgebraError, match="out of range"):
        check_weak_regularity_terms(diamond, 9, [x])


def test_addition_mod_3_is_weakly_regular_at_zero():
    alg = cyclic_groupoid(3, with_zero=True)
    difference = app("add", x, app("add", y, y))

    assert check_weak_regularity_terms(alg, 0, [difference])
    assert is_weakly_regular_at(alg, 0)

    check = check_weak_regularity_terms(alg, 0, [app("add", x, y)])

    assert not check
    assert check.pair == (1, 1)

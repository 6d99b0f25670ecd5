import pytest

from ualgebra.algebra import app
from ualgebra.algebra import satisfies_identity
from ualgebra.algebra import x
from ualgebra.algebra import y
from ualgebra.algebra import z
from ualgebra.exceptions import AlgebraError
from ualgebra.structures import chain_semilattice
from ualgebra.structures import cyclic_groupoid
from ualgebra.structures import diamond_with_top
from ualgebra.structures import directoid_fixture
from ualgebra.structures import left_zero_semigroup
from ualgebra.structures import swap_algebra
from ualgebra.structures import trivial_algebra


def j(a, b):
    return app("join", a, b)


def test_semilattice_fixture(diamond):
    assert diamond.name == "diamond"
    assert diamond.table("join") == (0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3)
    assert satisfies_identity(diamond, j(j(x, y), z), j(x, j(y, z)))
    assert satisfies_identity(diamond, j(x, y), j(y, x))


def test_semilattice_with_top(diamond):
    alg = diamond_with_top()

    assert alg.constants() == {"top": 3}
    assert alg.table("join") == diamond.table("join")


def test_directoid_fixture_is_not_associative():
    alg = directoid_fixture()

    check = satisfies_identity(alg, j(j(x, y), z), j(x, j(y, z)))

    assert not check
    assert check.counterexample == {0: 0, 1: 1, 2: 2}
    assert satisfies_identity(alg, j(x, y), j(y, x))


def test_chain_semilattice():
    assert chain_semilattice(3).table("join") == (0, 1, 2, 1, 1, 2, 2, 2, 2)

    with pytest.raises(AlgebraError, match="at least one element"):
        chain_semilattice(0)


def test_cyclic_groupoid():
    alg = cyclic_groupoid(3, with_zero=True)

    assert alg.name == "z3"
    assert alg.table("add") == (0, 1, 2, 1, 2, 0, 2, 0, 1)
    assert alg.constants() == {"zero": 0}
    assert cyclic_groupoid(3).constants() == {}


def test_small_fixtures():
    assert left_zero_semigroup(2).table("mul") == (0, 0, 1, 1)
    assert swap_algebra().table("neg") == (1, 0)
    assert trivial_algebra().is_trivial

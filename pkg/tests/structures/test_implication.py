import pytest

from ualgebra.exceptions import AlgebraError
from ualgebra.properties import has_nontrivial_closed_class_property
from ualgebra.properties import is_weakly_regular_at
from ualgebra.structures import boolean_implication_algebra
from ualgebra.structures import implication_constant
from ualgebra.structures import implication_fixture
from ualgebra.structures import implication_order
from ualgebra.structures import is_implication_algebra


def test_implication_fixture():
    alg = implication_fixture()

    assert alg.name == "implication2"
    assert alg.table("imp") == (1, 1, 0, 1)
    assert implication_constant(alg) == 1
    assert implication_order(alg) == {(0, 0), (0, 1), (1, 1)}
    assert is_implication_algebra(alg)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_boolean_implication_algebras(k):
    alg = boolean_implication_algebra(k)

    assert alg.size == 2 ** k
    assert is_implication_algebra(alg)
    assert implication_constant(alg) == 2 ** k - 1


def test_implication_order_is_inclusion():
    alg = boolean_implication_algebra(2)

    assert implication_order(alg) == {
        (a, b) for a in range(4) for b in range(4) if a & b == a
    }


def test_implication_algebras_are_weakly_regular_at_one():
    for k in [1, 2]:
        alg = boolean_implication_algebra(k)

        assert is_weakly_regular_at(alg, implication_constant(alg))
        assert has_nontrivial_closed_class_property(alg)


def test_semilattice_is_not_an_implication_algebra(diamond):
    assert not is_implication_algebra(diamond)

    with pytest.raises(AlgebraError, match="xx is not constant in diamond"):
        implication_constant(diamond)


def test_negative_atoms():
    with pytest.raises(AlgebraError, match="non-negative number of atoms"):
        boolean_implication_algebra(-1)

import itertools

import pytest

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Signature
from ualgebra.algebra import relabel
from ualgebra.exceptions import AlgebraError
from ualgebra.structures import cyclic_groupoid
from ualgebra.structures import diamond_with_top
from ualgebra.structures import trivial_algebra


def test_operations_read_tables_row_major(diamond):
    join = diamond.operation("join")

    assert join.arity == 2
    assert join(1, 2) == 3
    assert join(0, 2) == 2
    assert join.index([2, 1]) == 9
    assert diamond.table("join")[9] == 3
    assert repr(join) == "<Operation join/2>"


def test_eval_op_checks_its_arguments(diamond):
    assert diamond.eval_op("join", [1, 0]) == 1

    with pytest.raises(AlgebraError, match="join expects 2 arguments, got 1"):
        diamond.eval_op("join", [1])

    with pytest.raises(AlgebraError, match="Element 4 is out of range"):
        diamond.eval_op("join", [4, 0])

    with pytest.raises(AlgebraError, match='Unknown operation symbol "meet"'):
        diamond.eval_op("meet", [0, 0])


def test_constants():
    assert diamond_with_top().constants() == {"top": 3}
    assert cyclic_groupoid(4, with_zero=True).constants() == {"zero": 0}
    assert cyclic_groupoid(4).constants() == {}


def test_basic_properties(diamond):
    assert diamond.name == "diamond"
    assert diamond.size == 4
    assert list(diamond.universe) == [0, 1, 2, 3]
    assert not diamond.is_trivial
    assert trivial_algebra().is_trivial
    assert diamond.with_name("renamed").name == "renamed"
    assert diamond.with_name("renamed").tables == diamond.tables


def test_tables_are_read_only(diamond):
    with pytest.raises(TypeError):
        diamond.tables["join"] = (0,) * 16


def test_equality_includes_name_and_tables(diamond):
    same = FiniteAlgebra(
        "diamond", 4, diamond.signature, {"join": list(diamond.table("join"))}
    )

    assert same == diamond
    assert hash(same) == hash(diamond)
    assert diamond.with_name("other") != diamond


def test_relabel_by_an_automorphism_is_the_identity(diamond):
    assert relabel(diamond, [0, 2, 1, 3]) == diamond


def test_relabel_yields_an_isomorphic_copy():
    alg = FiniteAlgebra(
        "g", 3, Signature.from_pairs([("f", 2)]), {"f": [0, 2, 1, 2, 2, 0, 1, 0, 1]}
    )
    permutation = [2, 0, 1]
    copy = relabel(alg, permutation)

    f, g = alg.operation("f"), copy.operation("f")
    for a, b in itertools.product(range(3), repeat=2):
        assert g(permutation[a], permutation[b]) == permutation[f(a, b)]


def test_relabel_rejects_non_permutations(diamond):
    with pytest.raises(AlgebraError, match="is not a permutation"):
        relabel(diamond, [0, 0, 1, 2])

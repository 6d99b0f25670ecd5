import random

import pytest

from ualgebra.algebra import Signature
from ualgebra.algebra import is_idempotent_algebra
from ualgebra.algebra import relabel
from ualgebra.congruences import all_congruences
from ualgebra.congruences import omega
from ualgebra.exceptions import AlgebraError
from ualgebra.polynomials import unary_polynomials
from ualgebra.properties import is_quasi_rees
from ualgebra.properties import is_rees_algebra
from ualgebra.properties import is_rees_algebra_via_polynomials
from ualgebra.properties import is_rees_algebra_via_two_generated
from ualgebra.properties import is_rees_block
from ualgebra.properties import is_rees_block_via_polynomials
from ualgebra.properties import rees_extension
from ualgebra.quotients import quotient_algebra
from ualgebra.structures import GeneratorSpec
from ualgebra.structures import chain_semilattice
from ualgebra.structures import cyclic_groupoid
from ualgebra.structures import exhaustive_algebras
from ualgebra.structures import left_zero_semigroup
from ualgebra.subuniverses import all_subuniverses
from ualgebra.subuniverses import subalgebra

from tests.helpers import corpus
from tests.helpers import directoids
from tests.helpers import partition
from tests.helpers import random_algebra


def test_rees_extension(diamond):
    assert rees_extension(diamond, {1, 2, 3}) == partition("0|1 2 3")
    assert rees_extension(diamond, {2}) == omega(4)
    assert rees_extension(diamond, set()) == omega(4)

    with pytest.raises(AlgebraError, match="Element 4 is out of range"):
        rees_extension(diamond, {0, 4})


def test_rees_blocks(diamond):
    assert is_rees_block(diamond, {1, 2, 3})
    assert is_rees_block(diamond, {2, 3})
    assert not is_rees_block(diamond, {0, 3})
    assert not is_rees_block(diamond, {0, 1})


def test_semilattice_is_not_a_rees_algebra(diamond):
    verdict = is_rees_algebra(diamond)

    assert not verdict
    assert verdict.counterexample == {"subuniverse": frozenset({0, 1})}
    assert not is_rees_algebra_via_two_generated(diamond)
    assert not is_rees_algebra_via_polynomials(diamond)


def test_chain_is_not_a_rees_algebra():
    verdict = is_rees_algebra(chain_semilattice(3))

    assert verdict.counterexample == {"subuniverse": frozenset({0, 2})}


def test_rees_algebras():
    for alg in [left_zero_semigroup(3), cyclic_groupoid(3)]:
        assert is_rees_algebra(alg)
        assert is_rees_algebra_via_two_generated(alg)
        assert is_rees_algebra_via_polynomials(alg)


def test_rees_routes_agree_on_the_corpus():
    for alg in corpus() + directoids():
        expected = is_rees_algebra(alg).holds

        assert is_rees_algebra_via_two_generated(alg) == expected, alg.name
        assert is_rees_algebra_via_polynomials(alg) == expected, alg.name


@pytest.mark.parametrize("n", [1, 2, 3])
def test_unary_algebras_are_rees(n):
    signature = Signature.from_pairs([("f", 1), ("g", 1)])
    for alg in exhaustive_algebras(GeneratorSpec(signature, n)):
        assert is_rees_algebra(alg), (alg.table("f"), alg.table("g"))
        assert is_rees_algebra_via_two_generated(alg)


def test_rees_block_routes_agree_on_random_subsets():
    rng = random.Random(1000)
    pairs = 0
    while pairs < 1000:
        alg = random_algebra(rng, rng.choice([3, 3, 4]))
        polynomials = unary_polynomials(alg)
        for _ in range(25):
            block = {e for e in alg.universe if rng.random() < 0.5}

            assert is_rees_block(alg, block) == is_rees_block_via_polynomials(
                alg, block, polynomials=polynomials
            )
            pairs += 1


def test_rees_algebras_are_closed_under_subalgebras_and_quotients():
    for alg in corpus():
        if not is_rees_algebra(alg):
            continue

        for s in all_subuniverses(alg):
            if s:
                assert is_rees_algebra(subalgebra(alg, s)), (alg.name, sorted(s))

        for theta in all_congruences(alg):
            quotient = quotient_algebra(alg, theta).algebra
            assert is_rees_algebra(quotient), (alg.name, str(theta))


def test_idempotent_rees_algebras_are_quasi_rees():
    for alg in corpus():
        if is_idempotent_algebra(alg) and is_rees_algebra(alg):
            assert is_quasi_rees(alg), alg.name


def test_verdicts_do_not_depend_on_the_labelling():
    rng = random.Random(33)
    for alg in corpus()[:30]:
        permutation = list(alg.universe)
        rng.shuffle(permutation)
        copy = relabel(alg, permutation)

        assert bool(is_rees_algebra(copy)) == bool(is_rees_algebra(alg)), alg.name
        assert bool(is_quasi_rees(copy)) == bool(is_quasi_rees(alg)), alg.name

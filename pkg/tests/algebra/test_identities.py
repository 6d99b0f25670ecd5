import pytest

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Signature
from ualgebra.algebra import absorbing_elements
from ualgebra.algebra import app
from ualgebra.algebra import is_idempotent_algebra
from ualgebra.algebra import satisfies_identity
from ualgebra.algebra import x
from ualgebra.algebra import y
from ualgebra.algebra import z
from ualgebra.config import Config
from ualgebra.exceptions import ResourceLimitExceeded
from ualgebra.exceptions import TermError
from ualgebra.structures import chain_semilattice
from ualgebra.structures import cyclic_groupoid
from ualgebra.structures import diamond_with_top
from ualgebra.structures import directoid_fixture
from ualgebra.structures import left_zero_semigroup
from ualgebra.structures import trivial_algebra
from ualgebra.structures.fixtures import DIAMOND_JOIN


def j(a, b):
    return app("join", a, b)


def test_semilattice_identities_hold(diamond):
    assert satisfies_identity(diamond, j(x, y), j(y, x))
    assert satisfies_identity(diamond, j(j(x, y), z), j(x, j(y, z)))
    assert satisfies_identity(diamond, j(x, x), x)


def test_failing_identity_reports_the_first_assignment():
    check = satisfies_identity(directoid_fixture(), j(j(x, y), z), j(x, j(y, z)))

    assert not check
    assert check.counterexample == {0: 0, 1: 1, 2: 2}


def test_identity_without_variables():
    alg = diamond_with_top()

    assert satisfies_identity(alg, app("top"), j(app("top"), app("top")))


def test_identity_terms_are_checked(diamond):
    with pytest.raises(TermError):
        satisfies_identity(diamond, app("meet", x, y), x)


def test_identity_assignment_limit(diamond):
    config = Config(use_environment=False)
    config.merge({"limits": {"identity-assignments": 10}})

    with pytest.raises(ResourceLimitExceeded) as e:
        satisfies_identity(diamond, j(j(x, y), z), j(x, j(y, z)), config=config)

    assert e.value.requested == 64
    assert e.value.allowed == 10


def test_idempotence(diamond):
    assert is_idempotent_algebra(diamond)
    assert is_idempotent_algebra(trivial_algebra())
    assert is_idempotent_algebra(left_zero_semigroup(3))
    assert not is_idempotent_algebra(diamond_with_top())
    assert not is_idempotent_algebra(cyclic_groupoid(3))


def test_absorbing_elements(diamond):
    assert absorbing_elements(diamond) == {3}
    assert absorbing_elements(diamond_with_top()) == {3}
    assert absorbing_elements(chain_semilattice(3)) == {2}
    assert absorbing_elements(cyclic_groupoid(3)) == frozenset()
    assert absorbing_elements(left_zero_semigroup(3)) == frozenset()


def test_absorbing_elements_must_equal_every_constant():
    alg = FiniteAlgebra(
        "diamond_bottom",
        4,
        Signature.from_pairs([("join", 2), ("bottom", 0)]),
        {"join": DIAMOND_JOIN, "bottom": (0,)},
    )

    assert absorbing_elements(alg) == frozenset()

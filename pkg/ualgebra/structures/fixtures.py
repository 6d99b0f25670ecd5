"""
Named example algebras.
"""
from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Signature
from ualgebra.exceptions import AlgebraError
from ualgebra.utils.helpers import tuples


# The four-element semilattice 0 < a, b < 1 coded as 0, a, b, 1 -> 0, 1, 2, 3.
DIAMOND_JOIN = (0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3)

# a, b < c < d with a ⊔ b = d: commutative but not associative.
DIRECTOID4_JOIN = (0, 3, 2, 3, 3, 1, 2, 3, 2, 2, 2, 3, 3, 3, 3, 3)


def _binary(name: str, symbol: str, size: int, table) -> FiniteAlgebra:
    return FiniteAlgebra(
        name, size, Signature.from_pairs([(symbol, 2)]), {symbol: table}
    )


def diamond_semilattice() -> FiniteAlgebra:
    return _binary("diamond", "join", 4, DIAMOND_JOIN)


def diamond_with_top() -> FiniteAlgebra:
    """
    The same semilattice with its top element named by the constant top.
    """
    return FiniteAlgebra(
        "diamond_top",
        4,
        Signature.from_pairs([("join", 2), ("top", 0)]),
        {"join": DIAMOND_JOIN, "top": (3,)},
    )


def directoid_fixture() -> FiniteAlgebra:
    return _binary("directoid4", "join", 4, DIRECTOID4_JOIN)


def chain_semilattice(n: int) -> FiniteAlgebra:
    """
    The join-semilattice of the chain 0 < 1 < ... < n-1.
    """
    if n < 1:
        raise AlgebraError("The universe must have at least one element")

    return _binary(f"chain{n}", "join", n, [max(a, b) for a, b in tuples(range(n), 2)])


def cyclic_groupoid(n: int, with_zero: bool = False) -> FiniteAlgebra:
    """
    Addition modulo n, optionally with the constant zero.
    """
    if n < 1:
        raise AlgebraError("The universe must have at least one element")

    pairs = [("add", 2)]
    tables = {"add": [(a + b) % n for a, b in tuples(range(n), 2)]}
    if with_zero:
        pairs.append(("zero", 0))
        tables["zero"] = [0]

    return FiniteAlgebra(f"z{n}", n, Signature.from_pairs(pairs), tables)


def left_zero_semigroup(n: int) -> FiniteAlgebra:
    if n < 1:
        raise AlgebraError("The universe must have at least one element")

    return _binary(f"leftzero{n}", "mul", n, [a for a, _ in tuples(range(n), 2)])


def swap_algebra() -> FiniteAlgebra:
    """
    Two elements with a single unary operation exchanging them.
    """
    return FiniteAlgebra(
        "swap", 2, Signature.from_pairs([("neg", 1)]), {"neg": (1, 0)}
    )


def trivial_algebra() -> FiniteAlgebra:
    return _binary("trivial", "join", 1, (0,))

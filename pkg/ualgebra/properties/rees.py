import logging

from typing import Dict
from typing import Iterable
from typing import Optional
from typing import Sequence

from ualgebra.algebra import FiniteAlgebra
from ualgebra.config import Config
from ualgebra.congruences import Partition
from ualgebra.congruences import is_congruence
from ualgebra.exceptions import AlgebraError
from ualgebra.polynomials import UnaryFunction
from ualgebra.polynomials import unary_polynomials
from ualgebra.subuniverses import ElementSet
from ualgebra.subuniverses import all_subuniverses
from ualgebra.subuniverses import generated_subuniverse

from .verdict import PropertyVerdict


logger = logging.getLogger(__name__)


def rees_extension(alg: FiniteAlgebra, block: Iterable[int]) -> Partition:
    """
    The equivalence B² ∪ ω, which need not be a congruence.
    """
    elements = frozenset(block)
    for element in elements:
        if not 0 <= element < alg.size:
            raise AlgebraError(
                f"Element {element} is out of range for an algebra of size {alg.size}"
            )

    if len(elements) < 2:
        return Partition(alg.universe)

    return Partition([-1 if e in elements else e for e in alg.universe])


def is_rees_block(alg: FiniteAlgebra, block: Iterable[int]) -> bool:
    return is_congruence(alg, rees_extension(alg, block)).holds


def is_rees_block_via_polynomials(
    alg: FiniteAlgebra,
    block: Iterable[int],
    polynomials: Optional[Sequence[UnaryFunction]] = None,
    config: Optional[Config] = None,
) -> bool:
    """
    B² ∪ ω is a congruence iff (p(a), p(b)) ∈ B² ∪ ω for all a, b ∈ B and
    every unary polynomial p.
    """
    elements = sorted(set(block))
    rees_extension(alg, elements)
    if polynomials is None:
        polynomials = unary_polynomials(alg, config=config)

    members = set(elements)
    for p in polynomials:
        for i, a in enumerate(elements):
            pa = p[a]
            for b in elements[i + 1 :]:
                pb = p[b]
                if pa != pb and not (pa in members and pb in members):
                    return False

    return True


def is_rees_algebra(
    alg: FiniteAlgebra, config: Optional[Config] = None
) -> PropertyVerdict:
    """
    Whether B² ∪ ω is a congruence for every subuniverse B. A failure names
    the first offending subuniverse in canonical order.
    """
    for subuniverse in all_subuniverses(alg, config=config):
        if not is_rees_block(alg, subuniverse):
            logger.debug(f"{alg.name} is not a Rees algebra: {sorted(subuniverse)}")

            return PropertyVerdict(False, counterexample={"subuniverse": subuniverse})

    return PropertyVerdict(True)


def is_rees_algebra_via_two_generated(
    alg: FiniteAlgebra, config: Optional[Config] = None
) -> bool:
    """
    Whether ⟨{a, b}⟩² ∪ ω is a congruence of alg for all a, b.

    Every B² ∪ ω for a subuniverse B is the union of the relations
    ⟨{a, b}⟩² ∪ ω over a, b ∈ B, so the two-generated subuniverses decide the
    whole question. Restricting to the subalgebra ⟨{a, b}⟩ alone would not:
    each two-generated subalgebra of the four-element diamond semilattice is
    a Rees algebra while the semilattice is not.
    """
    checked: Dict[ElementSet, bool] = {}
    for a in alg.universe:
        for b in range(a + 1, alg.size):
            generated = generated_subuniverse(alg, {a, b})
            if generated not in checked:
                checked[generated] = is_rees_block(alg, generated)

            if not checked[generated]:
                return False

    return True


def is_rees_algebra_via_polynomials(
    alg: FiniteAlgebra, config: Optional[Config] = None
) -> bool:
    """
    Whether (p(a), p(b)) ∈ ⟨{a, b}⟩² ∪ ω for all a, b and every unary polynomial p.
    """
    polynomials = unary_polynomials(alg, config=config)
    for a in alg.universe:
        for b in range(a + 1, alg.size):
            generated = generated_subuniverse(alg, {a, b})
            for p in polynomials:
                pa, pb = p[a], p[b]
                if pa != pb and not (pa in generated and pb in generated):
                    return False

    return True

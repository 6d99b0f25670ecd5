import logging

from typing import Dict
from typing import Optional
from typing import Tuple

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Term
from ualgebra.algebra import absorbing_elements
from ualgebra.algebra import eval_term
from ualgebra.config import Config
from ualgebra.congruences import CongruenceLattice
from ualgebra.congruences import Partition
from ualgebra.congruences import all_congruences
from ualgebra.congruences import ensure_congruence
from ualgebra.congruences import principal_congruence
from ualgebra.exceptions import AlgebraError
from ualgebra.subuniverses import ElementSet
from ualgebra.subuniverses import classes_that_are_subuniverses
from ualgebra.subuniverses import is_subuniverse
from ualgebra.subuniverses import nontrivial_closed_classes

from .rees import is_rees_block
from .verdict import PropertyVerdict


logger = logging.getLogger(__name__)


def nontrivial_subuniverse_class_report(
    alg: FiniteAlgebra,
    lattice: Optional[CongruenceLattice] = None,
    config: Optional[Config] = None,
) -> Dict[Partition, Optional[ElementSet]]:
    """
    For each non-trivial congruence, its non-trivial class of least minimum
    element which is a subuniverse, or None.
    """
    lattice = lattice or all_congruences(alg, config=config)

    report: Dict[Partition, Optional[ElementSet]] = {}
    for theta in lattice:
        if theta.is_omega():
            continue

        classes = nontrivial_closed_classes(alg, theta)
        report[theta] = classes[0] if classes else None

    return report


def has_nontrivial_closed_class_property(
    alg: FiniteAlgebra,
    lattice: Optional[CongruenceLattice] = None,
    config: Optional[Config] = None,
) -> PropertyVerdict:
    report = nontrivial_subuniverse_class_report(alg, lattice=lattice, config=config)

    chosen = {}
    for theta, block in report.items():
        if block is None:
            return PropertyVerdict(False, counterexample={"congruence": theta})

        chosen[theta] = block

    return PropertyVerdict(True, chosen=chosen)


def principal_term_class(alg: FiniteAlgebra, p: Term, a: int, b: int) -> ElementSet:
    """
    The class [p(a, b)]Θ(a, b).
    """
    value = eval_term(alg, p, {0: a, 1: b})

    return frozenset(principal_congruence(alg, a, b).block(value))


def p_term_class_witness(
    alg: FiniteAlgebra, p0: Term, theta: Partition
) -> Optional[Tuple[int, ElementSet]]:
    """
    The least a for which [p0(a, a)]θ is a non-trivial subuniverse.
    """
    ensure_congruence(alg, theta)

    for a in alg.universe:
        block = frozenset(theta.block(eval_term(alg, p0, {0: a, 1: a})))
        if len(block) > 1 and is_subuniverse(alg, block):
            return a, block

    return None


def absorbing_class_verdict(
    alg: FiniteAlgebra,
    e: int,
    lattice: Optional[CongruenceLattice] = None,
    config: Optional[Config] = None,
) -> PropertyVerdict:
    """
    For an absorbing element e, checks that every class [e]θ is a subuniverse
    with ([e]θ)² ∪ ω a congruence. When e is the value of a nullary symbol,
    [e]θ must also be the only class of θ which is a subuniverse.
    """
    if e not in absorbing_elements(alg):
        raise AlgebraError(f"{e} is not an absorbing element of {alg.name}")

    lattice = lattice or all_congruences(alg, config=config)
    named = e in alg.constants().values()

    chosen = {}
    for theta in lattice:
        block = frozenset(theta.block(e))
        if not (is_subuniverse(alg, block) and is_rees_block(alg, block)):
            return PropertyVerdict(
                False, counterexample={"congruence": theta, "class": block}
            )

        if named:
            closed = [cls.elements for cls in classes_that_are_subuniverses(alg, theta)]
            if closed != [block]:
                return PropertyVerdict(
                    False,
                    counterexample={"congruence": theta, "closed_classes": closed},
                )

        chosen[theta] = block

    return PropertyVerdict(True, chosen=chosen)


def absorbing_classes_nontrivial(
    alg: FiniteAlgebra,
    e: int,
    lattice: Optional[CongruenceLattice] = None,
    config: Optional[Config] = None,
) -> bool:
    """
    Whether |[e]θ| > 1 for every non-trivial congruence θ; together with e
    absorbing this makes alg quasi-Rees.
    """
    if not 0 <= e < alg.size:
        raise AlgebraError(
            f"Element {e} is out of range for an algebra of size {alg.size}"
        )

    lattice = lattice or all_congruences(alg, config=config)

    return all(len(theta.block(e)) > 1 for theta in lattice if not theta.is_omega())

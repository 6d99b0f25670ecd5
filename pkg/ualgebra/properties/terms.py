import dataclasses
import logging

from typing import Callable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from ualgebra.algebra import App
from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Term
from ualgebra.algebra import check_term
from ualgebra.algebra import satisfies_identity
from ualgebra.algebra import variables
from ualgebra.algebra.term import compile_term
from ualgebra.config import Config
from ualgebra.exceptions import AlgebraError
from ualgebra.exceptions import TermError


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class TermConditionCheck:
    """
    Result of a term condition; on failure carries the offending pair (x, y)
    or, for identities, the failing symbol.
    """

    holds: bool
    pair: Optional[Tuple[int, int]] = None
    symbol: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds


def _compile_binary(
    alg: FiniteAlgebra, terms: Sequence[Term]
) -> List[Callable[[Sequence[int]], int]]:
    compiled = []
    for term in terms:
        check_term(alg.signature, term)
        if not variables(term) <= {0, 1}:
            raise TermError(f"{term} is not a binary term in x and y")

        compiled.append(compile_term(alg, term, {0: 0, 1: 1}))

    return compiled


def check_csakany_term(
    alg: FiniteAlgebra, v: Term, config: Optional[Config] = None
) -> TermConditionCheck:
    """
    Checks f(v(x), ..., v(x)) ≈ v(x) for every fundamental operation f.

    A nullary f yields the identity f ≈ v(x).
    """
    check_term(alg.signature, v)
    if len(variables(v)) > 1:
        raise TermError(f"{v} has more than one variable")

    for operation in alg.operations:
        lhs = App(operation.name, (v,) * operation.arity)
        if not satisfies_identity(alg, lhs, v, config=config):
            logger.debug(f"{lhs} ≈ {v} fails in {alg.name}")

            return TermConditionCheck(False, symbol=operation.name)

    return TermConditionCheck(True)


def check_p_terms_condition(
    alg: FiniteAlgebra, terms: Sequence[Term]
) -> TermConditionCheck:
    """
    Checks that p0(x, y) = ... = pn(x, y) holds exactly when x = y.
    """
    if len(terms) < 2:
        raise TermError("At least two binary terms p0, p1 are required")

    compiled = _compile_binary(alg, terms)
    for pair in ((x, y) for x in alg.universe for y in alg.universe):
        values = {p(pair) for p in compiled}
        if (len(values) == 1) != (pair[0] == pair[1]):
            return TermConditionCheck(False, pair=pair)

    return TermConditionCheck(True)


def check_weak_regularity_terms(
    alg: FiniteAlgebra, e: int, terms: Sequence[Term]
) -> TermConditionCheck:
    """
    Checks that t1(x, y) = ... = tn(x, y) = e holds exactly when x = y.
    """
    if not 0 <= e < alg.size:
        raise AlgebraError(
            f"Element {e} is out of range for an algebra of size {alg.size}"
        )

    if not terms:
        raise TermError("At least one binary term is required")

    compiled = _compile_binary(alg, terms)
    for pair in ((x, y) for x in alg.universe for y in alg.universe):
        all_e = all(t(pair) == e for t in compiled)
        if all_e != (pair[0] == pair[1]):
            return TermConditionCheck(False, pair=pair)

    return TermConditionCheck(True)

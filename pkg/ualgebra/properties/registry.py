from typing import Callable
from typing import Dict
from typing import List

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import is_idempotent_algebra
from ualgebra.congruences import is_congruence_uniform
from ualgebra.exceptions import AlgebraError

from .blocks import has_one_block_property
from .blocks import is_quasi_rees
from .rees import is_rees_algebra


Predicate = Callable[[FiniteAlgebra], bool]


def _is_directoid(alg: FiniteAlgebra) -> bool:
    from ualgebra.structures.directoids import is_directoid

    symbols = alg.signature.symbols
    if len(symbols) != 1 or symbols[0].arity != 2:
        return False

    return is_directoid(alg)


PREDICATES: Dict[str, Predicate] = {
    "rees": lambda alg: is_rees_algebra(alg).holds,
    "quasi-rees": lambda alg: is_quasi_rees(alg).holds,
    "obp": lambda alg: has_one_block_property(alg).holds,
    "uniform": is_congruence_uniform,
    "directoid": _is_directoid,
    "idempotent": is_idempotent_algebra,
}


def get_predicate(name: str) -> Predicate:
    try:
        return PREDICATES[name]
    except KeyError:
        raise AlgebraError(
            'Unknown predicate "{}", expected one of: {}'.format(
                name, ", ".join(PREDICATES)
            )
        )


def predicate_names() -> List[str]:
    return list(PREDICATES)

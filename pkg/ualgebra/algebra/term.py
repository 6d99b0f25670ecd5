import dataclasses

from typing import TYPE_CHECKING
from typing import Callable
from typing import FrozenSet
from typing import Mapping
from typing import Sequence
from typing import Tuple
from typing import Union

from ualgebra.exceptions import TermError


if TYPE_CHECKING:
    from .finite_algebra import FiniteAlgebra
    from .signature import Signature


_NAMED_VARIABLES = ("x", "y", "z")


def variable_name(index: int) -> str:
    if index < len(_NAMED_VARIABLES):
        return _NAMED_VARIABLES[index]

    return f"x{index}"


@dataclasses.dataclass(frozen=True)
class Var:
    index: int

    def __str__(self) -> str:
        return variable_name(self.index)


@dataclasses.dataclass(frozen=True)
class App:
    symbol: str
    args: Tuple["Term", ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.symbol

        return "{}({})".format(self.symbol, ",".join(str(arg) for arg in self.args))


Term = Union[Var, App]

x = Var(0)
y = Var(1)
z = Var(2)


def app(symbol: str, *args: Term) -> App:
    return App(symbol, tuple(args))


def variables(term: Term) -> FrozenSet[int]:
    if isinstance(term, Var):
        return frozenset({term.index})

    result: FrozenSet[int] = frozenset()
    for arg in term.args:
        result |= variables(arg)

    return result


def substitute(term: Term, mapping: Mapping[int, Term]) -> Term:
    if isinstance(term, Var):
        return mapping.get(term.index, term)

    return App(term.symbol, tuple(substitute(arg, mapping) for arg in term.args))


def check_term(signature: "Signature", term: Term) -> None:
    """
    Raises TermError unless the term is well-formed over the signature.
    """
    if isinstance(term, Var):
        if term.index < 0:
            raise TermError(f"Negative variable index {term.index}")

        return

    if term.symbol not in signature:
        raise TermError(f'Unknown operation symbol "{term.symbol}" in {term}')

    arity = signature.arity(term.symbol)
    if len(term.args) != arity:
        raise TermError(
            f"{term.symbol} expects {arity} arguments, got {len(term.args)} in {term}"
        )

    for arg in term.args:
        check_term(signature, arg)


def compile_term(
    alg: "FiniteAlgebra", term: Term, positions: Mapping[int, int]
) -> Callable[[Sequence[int]], int]:
    """
    Compiles a checked term into a function of a value vector; variable i reads
    values[positions[i]].
    """
    if isinstance(term, Var):
        position = positions[term.index]

        return lambda values: values[position]

    operation = alg.operation(term.symbol)
    if not term.args:
        constant = operation.table[0]

        return lambda values: constant

    compiled = tuple(compile_term(alg, arg, positions) for arg in term.args)
    if len(compiled) == 1:
        (only,) = compiled

        return lambda values: operation(only(values))

    if len(compiled) == 2:
        left, right = compiled

        return lambda values: operation(left(values), right(values))

    return lambda values: operation(*(arg(values) for arg in compiled))


def eval_term(alg: "FiniteAlgebra", term: Term, assignment: Mapping[int, int]) -> int:
    check_term(alg.signature, term)

    for index in variables(term):
        if index not in assignment:
            raise TermError(f"Unbound variable {variable_name(index)} in {term}")

        if not 0 <= assignment[index] < alg.size:
            raise TermError(
                f"Value {assignment[index]} of {variable_name(index)} is out of range"
            )

    return _evaluate(alg, term, assignment)


def _evaluate(alg: "FiniteAlgebra", term: Term, assignment: Mapping[int, int]) -> int:
    if isinstance(term, Var):
        return assignment[term.index]

    operation = alg.operation(term.symbol)

    return operation(*(_evaluate(alg, arg, assignment) for arg in term.args))

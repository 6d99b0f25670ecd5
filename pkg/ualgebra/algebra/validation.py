import dataclasses

from typing import List
from typing import Set

from .finite_algebra import FiniteAlgebra
from .signature import SYMBOL_NAME


@dataclasses.dataclass(frozen=True)
class Violation:
    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


def validate(alg: FiniteAlgebra) -> List[Violation]:
    """
    Returns every invariant violation of the algebra; an empty list means the
    algebra is well-formed.
    """
    violations = []

    if not SYMBOL_NAME.match(alg.name):
        violations.append(Violation("algebra", f'invalid name "{alg.name}"'))

    if alg.size < 1:
        violations.append(Violation("size", f"size must be positive, got {alg.size}"))

        return violations

    seen: Set[str] = set()
    for symbol in alg.signature:
        location = f"op {symbol.name}"

        if not SYMBOL_NAME.match(symbol.name):
            violations.append(Violation(location, "invalid symbol name"))

        if symbol.name in seen:
            violations.append(Violation(location, "duplicate symbol"))
            continue

        seen.add(symbol.name)

        if symbol.arity < 0:
            violations.append(Violation(location, f"negative arity {symbol.arity}"))
            continue

        table = alg.tables.get(symbol.name)
        if table is None:
            violations.append(Violation(location, "missing table"))
            continue

        expected = alg.size ** symbol.arity
        if len(table) != expected:
            violations.append(
                Violation(location, f"table length {len(table)} != {expected}")
            )

        for index, value in enumerate(table):
            if not 0 <= value < alg.size:
                violations.append(
                    Violation(location, f"entry out of range: {value} at index {index}")
                )

    for name in alg.tables:
        if name not in alg.signature:
            violations.append(Violation(f"op {name}", "table for an undeclared symbol"))

    return violations

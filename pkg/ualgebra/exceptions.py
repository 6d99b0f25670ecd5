from typing import TYPE_CHECKING
from typing import Any
from typing import List
from typing import Optional
from typing import Tuple


if TYPE_CHECKING:
    from ualgebra.congruences.partition import Partition


class UAlgebraException(Exception):

    pass


class AlgebraError(UAlgebraException, ValueError):

    pass


class TermError(AlgebraError):

    pass


class LoopConstructionError(AlgebraError):

    pass


class NotACongruence(AlgebraError):
    def __init__(
        self,
        partition: "Partition",
        violation: Optional[Tuple[str, Tuple[int, ...], Tuple[int, ...]]] = None,
    ) -> None:
        self.partition = partition
        self.violation = violation

        message = f"{partition} is not a congruence"
        if violation is not None:
            symbol, left, right = violation
            message += (
                f": {symbol}{left} and {symbol}{right} have related arguments"
                " but unrelated values"
            )

        super().__init__(message)


class ParseError(AlgebraError):
    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.line = line
        self.column = column

        if line:
            message = f"line {line}, column {column}: {message}"

        super().__init__(message)


class InvalidAlgebraFile(ParseError):
    def __init__(self, violations: List[Any]) -> None:
        self.violations = violations

        super().__init__(
            "invalid algebra:\n"
            + "\n".join("  - {}".format(violation) for violation in violations)
        )


class ResourceLimitExceeded(UAlgebraException):
    def __init__(
        self, limit: str, requested: int, allowed: int, what: str = ""
    ) -> None:
        self.limit = limit
        self.requested = requested
        self.allowed = allowed

        super().__init__(
            "{} of size {} exceeds the configured limit {} = {}".format(
                what or "Request", requested, limit, allowed
            )
        )


class InconsistentVerdicts(UAlgebraException):

    pass

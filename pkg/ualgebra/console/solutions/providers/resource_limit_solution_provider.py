from typing import List

from crashtest.contracts.has_solutions_for_exception import HasSolutionsForException
from crashtest.contracts.solution import Solution


class ResourceLimitSolutionProvider(HasSolutionsForException):
    def can_solve(self, exception: Exception) -> bool:
        from ualgebra.exceptions import ResourceLimitExceeded

        return isinstance(exception, ResourceLimitExceeded)

    def get_solutions(self, exception: Exception) -> List[Solution]:
        from ..solutions.resource_limit_solution import ResourceLimitSolution

        return [ResourceLimitSolution(exception)]

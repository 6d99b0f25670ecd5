from typing import TYPE_CHECKING
from typing import List

from crashtest.contracts.solution import Solution


if TYPE_CHECKING:
    from ualgebra.exceptions import ResourceLimitExceeded


def environment_variable(limit: str) -> str:
    return "UA_{}".format(limit.upper().replace(".", "_").replace("-", "_"))


class ResourceLimitSolution(Solution):
    def __init__(self, exception: "ResourceLimitExceeded") -> None:
        self._title = "Raise the limit or try a smaller input."

        variables = [environment_variable(exception.limit)]
        if exception.limit.endswith("-size"):
            variables.append("UA_MAX_SIZE")

        description = (
            "The computation needs <fg=default;options=bold>{}</> but "
            "<fg=default;options=bold>{}</> allows <fg=yellow>{}</>.\n"
            "Set {} to at least {} to run it anyway; "
            "<fg=default;options=bold>ua config --list</> shows every limit.\n".format(
                exception.requested,
                exception.limit,
                exception.allowed,
                " or ".join(f"<fg=default;options=bold>{v}</>" for v in variables),
                exception.requested,
            )
        )

        self._description = description

    @property
    def solution_title(self) -> str:
        return self._title

    @property
    def solution_description(self) -> str:
        return self._description

    @property
    def documentation_links(self) -> List[str]:
        return []

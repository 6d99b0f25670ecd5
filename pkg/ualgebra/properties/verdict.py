import dataclasses

from typing import Any
from typing import Dict
from typing import FrozenSet
from typing import Mapping
from typing import Optional

from ualgebra.congruences import Partition


@dataclasses.dataclass(frozen=True)
class PropertyVerdict:
    """
    The outcome of a property decider.

    When the property holds, chosen maps each congruence the definition
    quantifies over to the class selected for it. Otherwise counterexample
    names the offending congruence, subuniverse or pair.
    """

    holds: bool
    chosen: Mapping[Partition, FrozenSet[int]] = dataclasses.field(default_factory=dict)
    counterexample: Optional[Mapping[str, Any]] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"holds": self.holds}
        if self.holds:
            result["classes"] = [
                {"congruence": str(theta), "class": sorted(block)}
                for theta, block in sorted(
                    self.chosen.items(), key=lambda item: item[0].sort_key
                )
            ]
        else:
            result["counterexample"] = {
                key: _plain(value) for key, value in (self.counterexample or {}).items()
            }

        return result


def _plain(value: Any) -> Any:
    if isinstance(value, Partition):
        return str(value)

    if isinstance(value, (set, frozenset)):
        return sorted(value)

    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]

    return value

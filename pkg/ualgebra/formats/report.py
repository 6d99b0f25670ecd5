import dataclasses
import logging

from typing import Any
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import TypeVar

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import absorbing_elements
from ualgebra.algebra import is_idempotent_algebra
from ualgebra.config import Config
from ualgebra.config import get_config
from ualgebra.congruences import Partition
from ualgebra.congruences import all_congruences
from ualgebra.congruences import is_congruence_uniform
from ualgebra.congruences import is_modular
from ualgebra.congruences import is_n_permutable
from ualgebra.congruences import is_semimodular
from ualgebra.exceptions import InconsistentVerdicts
from ualgebra.exceptions import ResourceLimitExceeded
from ualgebra.properties import PropertyVerdict
from ualgebra.properties import has_one_block_property
from ualgebra.properties import is_quasi_rees
from ualgebra.properties import is_rees_algebra
from ualgebra.properties import is_rees_algebra_via_polynomials
from ualgebra.properties import is_rees_algebra_via_two_generated
from ualgebra.properties import is_weakly_regular_at
from ualgebra.properties import obp_characterization_holds
from ualgebra.subuniverses import ElementSet

from .emitters import SCHEMA_VERSION
from .emitters import emit_json


logger = logging.getLogger(__name__)

T = TypeVar("T")

PERMUTABILITY_DEGREES = (2, 3)


@dataclasses.dataclass
class AnalysisReport:
    algebra: str
    size: int
    congruences: List[Partition]
    atoms: List[Partition]
    absorbing: List[int]
    idempotent: bool
    rees: Optional[bool]
    rees_two_generated: Optional[bool]
    rees_polynomials: Optional[bool]
    rees_counterexample: Optional[ElementSet]
    quasi_rees: PropertyVerdict
    obp: PropertyVerdict
    obp_characterization: bool
    uniform: bool
    permutable: Dict[int, bool]
    modular: bool
    semimodular: bool
    weakly_regular: Dict[int, bool]

    def check_consistency(self) -> None:
        """
        Raises InconsistentVerdicts when routes that must agree do not.
        """
        routes = {
            "definition": self.rees,
            "two_generated": self.rees_two_generated,
            "polynomials": self.rees_polynomials,
        }
        computed = {name: value for name, value in routes.items() if value is not None}
        if len(set(computed.values())) > 1:
            raise InconsistentVerdicts(
                f"Rees routes disagree on {self.algebra}: {computed}"
            )

        if self.obp.holds != self.obp_characterization:
            raise InconsistentVerdicts(
                f"One-block-property routes disagree on {self.algebra}:"
                f" definition={self.obp.holds},"
                f" characterization={self.obp_characterization}"
            )

        if self.quasi_rees.holds and not self.obp.holds:
            raise InconsistentVerdicts(
                f"{self.algebra} is quasi-Rees without the one-block-property"
            )

    def to_dict(self) -> Dict[str, Any]:
        quasi_rees = self.quasi_rees.to_dict()
        obp = self.obp.to_dict()
        obp_section: Dict[str, Any] = {
            "holds": obp["holds"],
            "characterization": self.obp_characterization,
        }
        if self.obp.holds:
            obp_section["blocks"] = [entry["class"] for entry in obp["classes"]]
        else:
            obp_section["counterexample"] = obp["counterexample"]

        return {
            "v": SCHEMA_VERSION,
            "algebra": self.algebra,
            "size": self.size,
            "congruence_count": len(self.congruences),
            "congruences": [str(theta) for theta in self.congruences],
            "atoms": [str(atom) for atom in self.atoms],
            "absorbing": self.absorbing,
            "idempotent": self.idempotent,
            "rees": {
                "definition": self.rees,
                "two_generated": self.rees_two_generated,
                "polynomials": self.rees_polynomials,
                "counterexample": sorted(self.rees_counterexample)
                if self.rees_counterexample is not None
                else None,
            },
            "quasi_rees": quasi_rees,
            "obp": obp_section,
            "uniform": self.uniform,
            "permutable": {str(n): value for n, value in self.permutable.items()},
            "modular": self.modular,
            "semimodular": self.semimodular,
            "weakly_regular": {
                str(e): value for e, value in self.weakly_regular.items()
            },
        }

    def to_json(self) -> str:
        return emit_json(self.to_dict())


def _optional(route: str, compute: Callable[[], T]) -> Optional[T]:
    try:
        return compute()
    except ResourceLimitExceeded as e:
        logger.warning(f"Skipping {route}: {e}")

        return None


def build_report(alg: FiniteAlgebra, config: Optional[Config] = None) -> AnalysisReport:
    config = config or get_config()
    lattice = all_congruences(alg, config=config)

    rees_verdict = _optional(
        "the Rees definition route", lambda: is_rees_algebra(alg, config=config)
    )
    rees_counterexample = None
    if rees_verdict is not None and not rees_verdict.holds:
        rees_counterexample = (rees_verdict.counterexample or {}).get("subuniverse")

    absorbing = sorted(absorbing_elements(alg))

    report = AnalysisReport(
        algebra=alg.name,
        size=alg.size,
        congruences=list(lattice.congruences),
        atoms=list(lattice.atoms()),
        absorbing=absorbing,
        idempotent=is_idempotent_algebra(alg),
        rees=rees_verdict.holds if rees_verdict is not None else None,
        rees_two_generated=_optional(
            "the two-generated Rees route",
            lambda: is_rees_algebra_via_two_generated(alg, config=config),
        ),
        rees_polynomials=_optional(
            "the polynomial Rees route",
            lambda: is_rees_algebra_via_polynomials(alg, config=config),
        ),
        rees_counterexample=rees_counterexample,
        quasi_rees=is_quasi_rees(alg, lattice=lattice),
        obp=has_one_block_property(alg, lattice=lattice),
        obp_characterization=obp_characterization_holds(alg, config=config),
        uniform=is_congruence_uniform(alg, lattice=lattice),
        permutable={
            n: is_n_permutable(alg, n, lattice=lattice) for n in PERMUTABILITY_DEGREES
        },
        modular=is_modular(lattice),
        semimodular=is_semimodular(lattice),
        weakly_regular={
            e: is_weakly_regular_at(alg, e, lattice=lattice) for e in absorbing
        },
    )
    report.check_consistency()

    return report

import dataclasses
import itertools
import logging
import os

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence

from ualgebra.algebra import FiniteAlgebra
from ualgebra.config import Config
from ualgebra.config import get_config

from .generators import GeneratorSpec
from .generators import generate


logger = logging.getLogger(__name__)

BATCH_SIZE = 256


@dataclasses.dataclass
class SearchResult:
    spec: GeneratorSpec
    require: List[str]
    forbid: List[str]
    searched: int = 0
    witnesses: List[FiniteAlgebra] = dataclasses.field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.witnesses)


def _batches(
    algebras: Iterable[FiniteAlgebra], size: int
) -> Iterator[List[FiniteAlgebra]]:
    iterator = iter(algebras)
    while True:
        batch = list(itertools.islice(iterator, size))
        if not batch:
            return

        yield batch


def _max_workers(config: Config) -> int:
    if not config.get("search.parallel", True):
        return 1

    try:
        cpus = os.cpu_count() or 1
    except NotImplementedError:
        cpus = 1

    return max(1, min(int(config.get("search.max-workers", 4)), cpus + 4))


def search_algebras(
    spec: GeneratorSpec,
    require: Sequence[str] = (),
    forbid: Sequence[str] = (),
    limit: Optional[int] = None,
    config: Optional[Config] = None,
) -> SearchResult:
    """
    Streams the algebras described by spec and keeps those satisfying every
    required predicate and none of the forbidden ones.

    Predicates run on a thread pool; results are consumed in stream order so
    the witnesses come out in generation order whatever the schedule.

    The predicates are pure Python and hold the GIL, so the pool does not
    make a search faster on several cores. It only guarantees that the
    ordering above does not depend on search.parallel.
    """
    from ualgebra.properties.registry import get_predicate

    config = config or get_config()
    required = [get_predicate(name) for name in require]
    forbidden = [get_predicate(name) for name in forbid]

    def matches(alg: FiniteAlgebra) -> bool:
        return all(p(alg) for p in required) and not any(p(alg) for p in forbidden)

    result = SearchResult(spec, list(require), list(forbid))
    workers = _max_workers(config)
    logger.debug(f"Searching with {workers} worker(s)")

    with ThreadPoolExecutor(max_workers=workers) as executor:
        for batch in _batches(generate(spec, config=config), BATCH_SIZE):
            for alg, matched in zip(batch, executor.map(matches, batch)):
                result.searched += 1
                if not matched:
                    continue

                result.witnesses.append(alg)
                logger.info(f"Witness {alg.name} after {result.searched} candidates")

                if limit is not None and result.count >= limit:
                    logger.info(f"Stopped after {result.count} witness(es)")

                    return result

            logger.debug(
                f"Searched {result.searched} candidates, {result.count} witness(es)"
            )

    logger.info(f"Searched {result.searched} candidates, {result.count} witness(es)")

    return result

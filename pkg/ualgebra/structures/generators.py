import dataclasses
import itertools
import logging
import random

from typing import Callable
from typing import Iterator
from typing import Optional
from typing import Sequence
from typing import Tuple

from ualgebra.algebra import FiniteAlgebra
from ualgebra.algebra import Signature
from ualgebra.config import Config
from ualgebra.config import get_config
from ualgebra.exceptions import AlgebraError
from ualgebra.utils.helpers import tuples


logger = logging.getLogger(__name__)

Tables = Tuple[Tuple[int, ...], ...]

EXHAUSTIVE = "exhaustive"
RANDOM = "random"


@dataclasses.dataclass(frozen=True)
class GeneratorSpec:
    """
    Describes a stream of algebras: either every table assignment of the
    signature on 0..size-1, or count random ones drawn from seed.
    """

    signature: Signature
    size: int
    mode: str = EXHAUSTIVE
    seed: Optional[int] = None
    count: int = 0
    up_to_isomorphism: bool = False

    def __post_init__(self) -> None:
        if self.size < 1:
            raise AlgebraError("The universe must have at least one element")

        if self.mode not in {EXHAUSTIVE, RANDOM}:
            raise AlgebraError(f'Unknown generation mode "{self.mode}"')

        if self.mode == RANDOM and self.seed is None:
            raise AlgebraError("Random generation needs a seed")

        if self.count < 0:
            raise AlgebraError(f"Expected a non-negative count, got {self.count}")

    @property
    def cells(self) -> int:
        return sum(self.size ** symbol.arity for symbol in self.signature)

    @property
    def search_space(self) -> int:
        return self.size ** self.cells


def _relabel_tables(
    tables: Tables, arities: Sequence[int], n: int, permutation: Sequence[int]
) -> Tables:
    inverse = [0] * n
    for old, new in enumerate(permutation):
        inverse[new] = old

    result = []
    for table, arity in zip(tables, arities):
        relabelled = []
        for args in tuples(range(n), arity):
            index = 0
            for arg in args:
                index = index * n + inverse[arg]

            relabelled.append(permutation[table[index]])

        result.append(tuple(relabelled))

    return tuple(result)


def canonical_tables(tables: Tables, arities: Sequence[int], n: int) -> Tables:
    """
    The lexicographically least relabelling of the tables under all
    permutations of the universe.
    """
    return min(
        _relabel_tables(tables, arities, n, permutation)
        for permutation in itertools.permutations(range(n))
    )


def canonical_form(table: Sequence[int], n: int) -> Tuple[int, ...]:
    """
    The least binary table isomorphic to the given one.
    """
    (result,) = canonical_tables((tuple(table),), (2,), n)

    return result


def _build(spec: GeneratorSpec, name: str, tables: Tables) -> FiniteAlgebra:
    return FiniteAlgebra(
        name,
        spec.size,
        spec.signature,
        {symbol.name: table for symbol, table in zip(spec.signature, tables)},
    )


def exhaustive_algebras(
    spec: GeneratorSpec, config: Optional[Config] = None
) -> Iterator[FiniteAlgebra]:
    """
    Every algebra of the signature on 0..size-1, in lexicographic order of
    the concatenated tables.
    """
    (config or get_config()).check_limit(
        "enumeration", spec.search_space, "Exhaustive enumeration"
    )

    n = spec.size
    arities = [symbol.arity for symbol in spec.signature]
    lengths = [n ** arity for arity in arities]

    index = 0
    for flat in itertools.product(range(n), repeat=spec.cells):
        split = []
        offset = 0
        for length in lengths:
            split.append(tuple(flat[offset : offset + length]))
            offset += length

        tables = tuple(split)
        if spec.up_to_isomorphism and canonical_tables(tables, arities, n) != tables:
            continue

        yield _build(spec, f"alg{n}_{index}", tables)
        index += 1


def random_algebras(spec: GeneratorSpec) -> Iterator[FiniteAlgebra]:
    """
    count algebras with uniformly random tables; the stream depends only on
    the seed.
    """
    rng = random.Random(spec.seed)
    n = spec.size
    arities = [symbol.arity for symbol in spec.signature]
    for index in range(spec.count):
        tables = tuple(
            tuple(rng.randrange(n) for _ in range(n ** arity)) for arity in arities
        )
        if spec.up_to_isomorphism:
            tables = canonical_tables(tables, arities, n)

        yield _build(spec, f"random{spec.seed}_{index}", tables)


def generate(
    spec: GeneratorSpec, config: Optional[Config] = None
) -> Iterator[FiniteAlgebra]:
    if spec.mode == RANDOM:
        return random_algebras(spec)

    return exhaustive_algebras(spec, config=config)


def enumerate_groupoids(
    n: int,
    filter: Optional[Callable[[FiniteAlgebra], bool]] = None,
    up_to_isomorphism: bool = False,
    symbol: str = "f",
    config: Optional[Config] = None,
) -> Iterator[FiniteAlgebra]:
    config = config or get_config()
    config.check_limit("groupoid-size", n, "Groupoid enumeration")

    spec = GeneratorSpec(
        Signature.from_pairs([(symbol, 2)]), n, up_to_isomorphism=up_to_isomorphism
    )
    for alg in exhaustive_algebras(spec, config=config):
        if filter is None or filter(alg):
            yield alg

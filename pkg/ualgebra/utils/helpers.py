import itertools

from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import Tuple


try:
    from collections.abc import Mapping
except ImportError:
    from collections import Mapping


def merge_dicts(d1: Dict, d2: Dict) -> None:
    for k in d2.keys():
        if k in d1 and isinstance(d1[k], dict) and isinstance(d2[k], Mapping):
            merge_dicts(d1[k], d2[k])
        else:
            d1[k] = d2[k]


def tuples(elements: Iterable[int], arity: int) -> Iterator[Tuple[int, ...]]:
    """
    All argument tuples over the given elements, leftmost coordinate slowest.
    """
    return itertools.product(tuple(elements), repeat=arity)


def format_elements(elements: Iterable[int]) -> str:
    return "{" + " ".join(str(e) for e in sorted(elements)) + "}"

import json

from typing import Any
from typing import Dict
from typing import Mapping
from typing import Optional

from ualgebra.congruences import CongruenceLattice


SCHEMA_VERSION = 1


def emit_dot(lattice: CongruenceLattice, name: Optional[str] = None) -> str:
    """
    The Hasse diagram as a DOT digraph: node ni is the i-th congruence in
    canonical order and every edge points from a congruence to an upper cover.
    """
    lines = [
        'digraph "{}" {{'.format(name or "conlat"),
        "  rankdir=BT;",
        "  node [shape=box];",
    ]
    for i, theta in enumerate(lattice.congruences):
        lines.append(f'  n{i} [label="{theta}"];')

    for i, j in lattice.sorted_covers():
        lines.append(f"  n{i} -> n{j};")

    lines.append("}")

    return "\n".join(lines) + "\n"


def emit_json(data: Mapping[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def lattice_to_dict(lattice: CongruenceLattice, name: str) -> Dict[str, Any]:
    return {
        "v": SCHEMA_VERSION,
        "algebra": name,
        "congruences": [str(theta) for theta in lattice.congruences],
        "covers": [[i, j] for i, j in lattice.sorted_covers()],
    }


def emit_lattice_json(lattice: CongruenceLattice, name: str) -> str:
    return emit_json(lattice_to_dict(lattice, name))

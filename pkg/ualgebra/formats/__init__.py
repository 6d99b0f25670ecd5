from .algebra_file import dump_algebra
from .algebra_file import load_algebra
from .algebra_file import parse_algebra
from .algebra_file import parse_signature
from .emitters import emit_dot
from .emitters import emit_json
from .emitters import emit_lattice_json
from .report import AnalysisReport
from .report import build_report
from .syntax import format_element_set
from .syntax import format_partition
from .syntax import format_term
from .syntax import parse_partition
from .syntax import parse_term


__all__ = [
    "AnalysisReport",
    "build_report",
    "dump_algebra",
    "emit_dot",
    "emit_json",
    "emit_lattice_json",
    "format_element_set",
    "format_partition",
    "format_term",
    "load_algebra",
    "parse_algebra",
    "parse_partition",
    "parse_signature",
    "parse_term",
]

from .finite_algebra import FiniteAlgebra
from .finite_algebra import Operation
from .finite_algebra import relabel
from .identities import IdentityCheck
from .identities import absorbing_elements
from .identities import is_idempotent_algebra
from .identities import satisfies_identity
from .signature import OperationSymbol
from .signature import Signature
from .term import App
from .term import Term
from .term import Var
from .term import app
from .term import check_term
from .term import eval_term
from .term import substitute
from .term import variables
from .term import x
from .term import y
from .term import z
from .validation import Violation
from .validation import validate


__all__ = [
    "App",
    "FiniteAlgebra",
    "IdentityCheck",
    "Operation",
    "OperationSymbol",
    "Signature",
    "Term",
    "Var",
    "Violation",
    "absorbing_elements",
    "app",
    "check_term",
    "eval_term",
    "is_idempotent_algebra",
    "relabel",
    "satisfies_identity",
    "substitute",
    "validate",
    "variables",
    "x",
    "y",
    "z",
]

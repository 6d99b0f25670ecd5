from .unary import UnaryFunction
from .unary import constant_function
from .unary import identity_function
from .unary import quotient_unary_polynomials
from .unary import unary_polynomials


__all__ = [
    "UnaryFunction",
    "constant_function",
    "identity_function",
    "quotient_unary_polynomials",
    "unary_polynomials",
]

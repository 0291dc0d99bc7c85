"""Exact computations in A(SL_q(2)) and the Chern-Connes pairing of quantum Hopf line bundles."""

__version__ = "0.1.0"

from .exactq import ONE, Q, ZERO, RatQ, parse_ratq, render_ratq  # noqa: E402
from .ncalg import Mono, NCPoly, counit, graded_component, is_coinvariant, nc_mul, normalize, zdegree  # noqa: E402
from .parsing import ParseError, parse_expr  # noqa: E402

__all__ = [
    "ONE",
    "Q",
    "ZERO",
    "RatQ",
    "parse_ratq",
    "render_ratq",
    "Mono",
    "NCPoly",
    "counit",
    "graded_component",
    "is_coinvariant",
    "nc_mul",
    "normalize",
    "zdegree",
    "ParseError",
    "parse_expr",
]

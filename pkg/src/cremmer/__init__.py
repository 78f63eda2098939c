"""Exact verification of Yang-Baxter identities for Cremmer-Gervais operators."""

from .errors import (
    CremmerError,
    DivisionByZero,
    ContextMismatch,
    UnsupportedSubstitution,
    UnknownGenerator,
    ParseError,
    DimensionMismatch,
    IndexOutOfRange,
    NotPolynomial,
    ExponentOutOfRange,
    FormatError,
)
from .kernels import BACKEND
from .parse import format_coeff, parse_coeff
from .ring import (
    LaurentPoly,
    RatFn,
    RingCtx,
    mono_subst,
    ring_add,
    ring_div,
    ring_eq,
    ring_mul,
    ring_neg,
    ring_sub,
)

__all__ = [
    "CremmerError",
    "DivisionByZero",
    "ContextMismatch",
    "UnsupportedSubstitution",
    "UnknownGenerator",
    "ParseError",
    "DimensionMismatch",
    "IndexOutOfRange",
    "NotPolynomial",
    "ExponentOutOfRange",
    "FormatError",
    "BACKEND",
    "LaurentPoly",
    "RatFn",
    "RingCtx",
    "format_coeff",
    "mono_subst",
    "parse_coeff",
    "ring_add",
    "ring_div",
    "ring_eq",
    "ring_mul",
    "ring_neg",
    "ring_sub",
]

__version__ = "0.1.0"

"""Hilbert series of ideals generated by generic forms.

Series are returned as ``{"coeffs": [...], "terminated": bool}``; verification
records are the same dictionaries the CLI writes with ``--json``.
"""

from ._frob import (
    DEFAULT_PRIME,
    DEFAULT_SEED,
    FrobError,
    __version__,
    conjectured_series,
    expand_rational,
    froberg_ideal,
    hilbert_function,
    quotient_series,
    random_forms,
    search,
    verify,
    verify_interval,
)

__all__ = [
    "DEFAULT_PRIME",
    "DEFAULT_SEED",
    "FrobError",
    "__version__",
    "conjectured_series",
    "expand_rational",
    "froberg_ideal",
    "hilbert_function",
    "quotient_series",
    "random_forms",
    "search",
    "verify",
    "verify_interval",
]

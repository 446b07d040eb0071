"""Exact Gosper summation of hypergeometric terms and Bell-number correction constants.

Rationals come back as fractions.Fraction. Rational arguments accept int,
Fraction or "p/q" strings.
"""

from ._gosum import (
    NotSummable,
    TermError,
    antidifference,
    brute_sum,
    corrections,
    definite_sum,
    parse_term,
    table,
    term_value,
    verify,
)

__all__ = [
    "NotSummable",
    "TermError",
    "antidifference",
    "brute_sum",
    "corrections",
    "definite_sum",
    "parse_term",
    "table",
    "term_value",
    "verify",
]

"""Moments of block operators x + x^-1 attached to group generators.

Orders are plain ints (None means infinite/free), words are lists of
(name, sign) pairs and formal sums are dicts mapping exponents to integer
coefficients.
"""

from ._core import (
    ENUMERATION_CAP,
    EnumerationCapExceeded,
    Presentation,
    PresentationParseError,
    __version__,
    adjoint,
    audit,
    binomial,
    canonical_trace,
    central_bracket,
    classify_sequences,
    closed_moment,
    compare_distributions,
    cyclic_reduce,
    detect_order,
    exact_moment_binomial,
    exact_moment_dp,
    exact_moment_enum,
    expand_block_power,
    free_reduce,
    invert,
    moment_series,
    parse_presentation,
    reduce_mod_order,
    run_cli,
    serialize,
    word_text,
)

__all__ = [
    "ENUMERATION_CAP",
    "EnumerationCapExceeded",
    "Presentation",
    "PresentationParseError",
    "__version__",
    "adjoint",
    "audit",
    "binomial",
    "canonical_trace",
    "central_bracket",
    "classify_sequences",
    "closed_moment",
    "compare_distributions",
    "cyclic_reduce",
    "detect_order",
    "exact_moment_binomial",
    "exact_moment_dp",
    "exact_moment_enum",
    "expand_block_power",
    "free_reduce",
    "invert",
    "moment_series",
    "parse_presentation",
    "reduce_mod_order",
    "run_cli",
    "serialize",
    "word_text",
]

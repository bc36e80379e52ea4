"""Transfinite words, the Hawaiian earring group and kernel certificates for
the harmonic archipelago."""

from .archipelago import kernel_check_at, kernel_search, merge_top, qN_projection, substitute_collapse
from .errors import DSLSyntaxError, HarmonicError, PreconditionError
from .families import (
    cor1_element,
    counterexample_element,
    distinctness_harness,
    intro_essential_element,
    intro_trivial_element,
    permutation_element,
    tau_of,
)
from .free_word import EMPTY, Letter, RawWord, ReducedWord, invert, multiply, occurrence_count, reduce, word
from .inverse_limit import TruncatedSequence, bonding, check_compatibility, delete_above
from .transfinite import classify_HE, projection_at, to_truncated
from .word_dsl import evaluate, format_word, parse, parse_word

__version__ = "0.1.0"

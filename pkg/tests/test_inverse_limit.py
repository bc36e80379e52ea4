import pytest
from hypothesis import given, strategies as st

from harmonic.errors import PreconditionError
from harmonic.free_word import EMPTY, max_index, multiply, reduce, word
from harmonic.inverse_limit import (
    TruncatedSequence,
    bonding,
    check_compatibility,
    delete_above,
    dumps,
    loads,
    pointwise_invert,
    pointwise_multiply,
    truncations,
)
from harmonic.word_dsl import parse_word

from oracles import naive_reduce

symbols = st.integers(min_value=1, max_value=8).flatmap(lambda i: st.sampled_from([i, -i]))
reduced_words = st.lists(symbols, max_size=25).map(reduce)


def test_delete_above_examples():
    assert delete_above(word(1, 5, 2), 3) == word(1, 2)
    assert delete_above(word(3, 4, -3), 3) == EMPTY
    w = word(1, -2, 3)
    assert delete_above(w, 3) is w


@given(reduced_words, st.integers(1, 9))
def test_delete_above_matches_literal_filter(w, n):
    assert delete_above(w, n).syms == naive_reduce([s for s in w.syms if abs(s) <= n])
    assert max_index(delete_above(w, n)) <= n
    assert delete_above(delete_above(w, n), n) == delete_above(w, n)


@given(reduced_words, st.integers(1, 9), st.integers(1, 9))
def test_delete_above_composes(w, m, n):
    assert delete_above(delete_above(w, m), n) == delete_above(w, min(m, n))


def test_bonding():
    assert bonding(word(2, 3), 2) == word(2)
    assert bonding(word(1, 2), 2) == word(1, 2)
    with pytest.raises(PreconditionError):
        bonding(word(1, 4), 2)


@given(reduced_words, reduced_words)
def test_bonding_is_homomorphism(a, b):
    n = max(max_index(a), max_index(b), 2) - 1
    assert bonding(multiply(a, b), n) == multiply(bonding(a, n), bonding(b, n))


@given(reduced_words)
def test_bonding_cofinal(w):
    top = max(max_index(w), 3)
    assert bonding(bonding(w, top - 1), top - 2) == delete_above(w, top - 2)


def test_check_compatibility_examples():
    assert check_compatibility(TruncatedSequence.constant_empty(1, 6)) is None
    assert check_compatibility(TruncatedSequence(1, 2, (word(1), word(1, 2)))) is None
    seq = TruncatedSequence(1, 3, (EMPTY, parse_word("[x1,x2]"), parse_word("[x1,x2][x1,x3]")))
    assert check_compatibility(seq) is None


def test_violation_reports_first_bad_level():
    seq = TruncatedSequence(1, 3, (word(1), word(1, 2), word(2, 3)))
    v = check_compatibility(seq)
    assert v is not None and v.level == 2
    assert v.expected == word(2) and v.found == word(1, 2)


def test_sequence_shape_validation():
    with pytest.raises(PreconditionError):
        TruncatedSequence(1, 2, (EMPTY,))
    with pytest.raises(PreconditionError):
        TruncatedSequence(2, 3, (word(1), word(2)))
    with pytest.raises(PreconditionError):
        TruncatedSequence(1, 2, (word(2), word(2)))
    with pytest.raises(PreconditionError):
        TruncatedSequence(3, 2, ())


@given(reduced_words, reduced_words)
def test_pointwise_operations(a, b):
    sa, sb = truncations(a, 1, 9), truncations(b, 1, 9)
    assert check_compatibility(sa) is None
    prod = pointwise_multiply(sa, sb)
    assert check_compatibility(prod) is None
    assert pointwise_multiply(sa, pointwise_invert(sa)) == TruncatedSequence.constant_empty(1, 9)
    assert pointwise_multiply(TruncatedSequence.constant_empty(1, 9), sb) == sb


def test_pointwise_shape_mismatch():
    with pytest.raises(PreconditionError):
        pointwise_multiply(TruncatedSequence.constant_empty(1, 3), TruncatedSequence.constant_empty(1, 4))


def test_serialization_round_trip():
    seq = TruncatedSequence(2, 4, (EMPTY, word(2, -3), word(4, 2, -3)))
    text = dumps(seq)
    assert text == "base=2 depth=4\n1\nx2 x3^-1\nx4 x2 x3^-1\n"
    assert loads(text) == seq
    assert loads("# comment\nbase=2 depth=4\n1\n x2 x3^-1 # c\n\nx4 x2 x3^-1\n") == seq
    with pytest.raises(PreconditionError):
        loads("depth=4\n1\n")

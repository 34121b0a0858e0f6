"""Three-valued truth algebra: orders, negation, conjunction."""

from hypothesis import given
from hypothesis import strategies as st

from aggsem.truth import TruthValue, conjunction, negate

T, U, F = TruthValue.TRUE, TruthValue.UNDEFINED, TruthValue.FALSE

values = st.sampled_from([T, U, F])


def test_negation_table():
    assert negate(T) is F
    assert negate(F) is T
    assert negate(U) is U


def test_conjunction_table():
    assert conjunction([T, T]) is T
    assert conjunction([T, U]) is U
    assert conjunction([U, F]) is F
    assert conjunction([]) is T


@given(values, values)
def test_conjunction_is_truth_order_min(a, b):
    assert conjunction([a, b]) is (a if a.leq_truth(b) else b)


@given(values, values)
def test_conjunction_commutes(a, b):
    assert conjunction([a, b]) is conjunction([b, a])


@given(values)
def test_negation_is_involutive_and_precision_preserving(a):
    assert negate(negate(a)) is a
    assert a.leq_precision(a)
    assert U.leq_precision(a)


@given(values, values, values)
def test_conjunction_monotone_in_precision(a, b, c):
    if a.leq_precision(b):
        assert conjunction([a, c]).leq_precision(conjunction([b, c]))

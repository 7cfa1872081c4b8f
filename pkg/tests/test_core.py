from fractions import Fraction

import pytest

from freepoisson.core import (
    ONE,
    ZERO,
    graded_lex_key,
    mi_add,
    mi_factorial,
    mi_norm,
    mi_swap,
)


def test_scalar_constants():
    assert ZERO == 0
    assert ONE == 1
    assert isinstance(ONE, Fraction)


def test_graded_lex_key_orders_by_length_first():
    # shorter words always come first, regardless of letters
    assert graded_lex_key((3,)) < graded_lex_key((1, 1))
    assert graded_lex_key((2, 2)) < graded_lex_key((1, 1, 1))


def test_graded_lex_key_ties_broken_lexicographically():
    assert graded_lex_key((1, 2)) < graded_lex_key((2, 1))
    assert graded_lex_key((1, 1, 2)) < graded_lex_key((1, 2, 1))
    assert graded_lex_key(()) < graded_lex_key((1,))


def test_graded_lex_sorting_round_trip():
    words = [(2, 1), (1,), (1, 2), (2,), (), (1, 1)]
    ordered = sorted(words, key=graded_lex_key)
    assert ordered == [(), (1,), (2,), (1, 1), (1, 2), (2, 1)]


def test_mi_norm():
    assert mi_norm(()) == 0
    assert mi_norm((0, 0, 0)) == 0
    assert mi_norm((2, 3)) == 5
    assert mi_norm((1, 0, 4)) == 5


def test_mi_factorial():
    assert mi_factorial(()) == 1
    assert mi_factorial((0,)) == 1
    assert mi_factorial((2, 3)) == 12
    assert mi_factorial((1, 1, 1)) == 1
    assert mi_factorial((4,)) == 24
    assert isinstance(mi_factorial((2, 3)), Fraction)


def test_mi_factorial_rejects_negative_entries():
    with pytest.raises(ValueError):
        mi_factorial((1, -1))


def test_mi_add():
    assert mi_add((1, 2), (3, 0)) == (4, 2)
    assert mi_add((), ()) == ()
    with pytest.raises(ValueError):
        mi_add((1, 2), (1,))


def test_mi_swap_exchanges_halves():
    assert mi_swap((1, 2, 3, 4)) == (3, 4, 1, 2)
    assert mi_swap((5, 7)) == (7, 5)
    assert mi_swap(()) == ()


def test_mi_swap_is_an_involution():
    for mi in [(1, 0, 0, 2), (3, 1, 4, 1), (0, 0), (2, 2, 2, 2, 2, 2)]:
        assert mi_swap(mi_swap(mi)) == mi


def test_mi_swap_rejects_odd_length():
    with pytest.raises(ValueError):
        mi_swap((1, 2, 3))

"""Exact scalars, multi-indices, and the word order shared by the algebra modules."""

import math
from fractions import Fraction

# All coefficients in this package are exact rationals.  Fraction keeps
# values normalized (lowest terms, positive denominator), so equal values
# always compare equal.
Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def graded_lex_key(word):
    """Sort key ordering words by length, then left-to-right on letters."""
    w = tuple(word)
    return (len(w), w)


def mi_norm(a):
    """Sum of the entries of a multi-index."""
    return sum(a)


def mi_factorial(a):
    """Product of entrywise factorials, as an exact scalar."""
    out = 1
    for k in a:
        if k < 0:
            raise ValueError("negative entry in multi-index")
        out *= math.factorial(k)
    return Fraction(out)


def mi_add(a, b):
    """Entrywise sum of two multi-indices of equal length."""
    if len(a) != len(b):
        raise ValueError("multi-index lengths differ")
    return tuple(x + y for x, y in zip(a, b))


def mi_swap(a):
    """Swap the two halves of an even-length multi-index."""
    if len(a) % 2:
        raise ValueError("multi-index length must be even")
    n = len(a) // 2
    return tuple(a[n:]) + tuple(a[:n])

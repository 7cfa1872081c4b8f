"""Exact sparse Gaussian elimination over the rationals.

Columns arrive one at a time as dicts row-key -> Fraction; row keys can
be any mutually comparable values.  Each registered column is reduced
against the current pivots at its largest row key.  A column that
reduces to zero yields the combination of previously added columns that
produced it, which is exactly the kernel/solution certificate the
callers need.
"""

from fractions import Fraction


def _axpy(vec, f, other):
    """vec -= f * other, in place."""
    for k, c in other.items():
        s = vec.get(k, 0) - f * c
        if s:
            vec[k] = s
        else:
            vec.pop(k, None)


class SparseSolver:
    def __init__(self):
        self.pivots = {}  # row key -> (unit column, combo over column ids)

    def _reduce(self, vec, combo):
        while vec:
            k = max(vec)
            piv = self.pivots.get(k)
            if piv is None:
                return k
            pvec, pcombo = piv
            f = vec[k]
            _axpy(vec, f, pvec)
            _axpy(combo, f, pcombo)
        return None

    def add(self, col_id, vec):
        """Register a column.

        Returns None if the column is independent of those already seen;
        otherwise returns {column id: coefficient} with
        sum(coeff * column) = 0, including this column with coefficient 1.
        """
        vec = {k: Fraction(c) for k, c in vec.items() if c}
        combo = {col_id: Fraction(1)}
        k = self._reduce(vec, combo)
        if k is None:
            return combo
        lead = vec[k]
        vec = {r: c / lead for r, c in vec.items()}
        combo = {c: v / lead for c, v in combo.items()}
        self.pivots[k] = (vec, combo)
        return None

    def solve(self, rhs):
        """Express rhs as a combination of the registered columns.

        Returns {column id: coefficient} with sum(coeff * column) = rhs,
        or None if rhs is outside the registered column span.
        """
        vec = {k: Fraction(c) for k, c in rhs.items() if c}
        combo = {}
        if self._reduce(vec, combo) is not None:
            return None
        return {c: -v for c, v in combo.items() if v}

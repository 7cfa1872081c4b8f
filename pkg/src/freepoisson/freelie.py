"""Free Lie algebra on generators x1..xn over the rationals.

Elements are stored in the Lyndon basis: each basis element is identified
with a Lyndon word (a tuple of letter indices, 1-based) whose attached
bracketing is the standard one derived from the standard factorization.
Generators are ordered x1 < x2 < ..., and words compare lexicographically
with that letter order (a proper prefix is smaller than the full word).
"""

from fractions import Fraction

from .core import graded_lex_key


def is_lyndon(word):
    """True iff the word is strictly smaller than every proper suffix."""
    w = tuple(word)
    if not w:
        raise ValueError("empty word")
    return all(w < w[k:] for k in range(1, len(w)))


def lyndon_words(n, max_len):
    """All Lyndon words over the alphabet 1..n of length <= max_len.

    Duval's algorithm; yields each word exactly once.
    """
    if n < 1 or max_len < 0:
        raise ValueError("need n >= 1 and max_len >= 0")
    out = []
    w = [0]
    while w:
        w[-1] += 1
        m = len(w)
        if m <= max_len:
            out.append(tuple(w))
        while len(w) < max_len:
            w.append(w[-m])
        while w and w[-1] == n:
            w.pop()
    return out


def lyndon_basis(n, max_degree):
    """Basis words of degree <= max_degree, ordered by degree then lex."""
    return sorted(lyndon_words(n, max_degree), key=graded_lex_key)


def standard_factorization(word):
    """Split a Lyndon word of length >= 2 as u*v with v the least proper suffix.

    Both halves are again Lyndon words and u < v.
    """
    w = tuple(word)
    if len(w) < 2:
        raise ValueError("word is a single letter")
    v = min(w[k:] for k in range(1, len(w)))
    return w[: len(w) - len(v)], v


def standard_bracketing(word):
    """Nested-pair form of the basis element attached to a Lyndon word."""
    w = tuple(word)
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (standard_bracketing(u), standard_bracketing(v))


class Lie:
    """A free-Lie-algebra element: finite map from Lyndon words to scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c:
                    data[tuple(w)] = c
        self.terms = data

    @staticmethod
    def zero():
        return Lie()

    @staticmethod
    def generator(i):
        if i < 1:
            raise ValueError("generator index must be >= 1")
        return Lie({(i,): 1})

    @staticmethod
    def basis_element(word):
        if not is_lyndon(word):
            raise ValueError(f"{word!r} is not a Lyndon word")
        return Lie({tuple(word): 1})

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Maximal word length, or -inf for the zero element."""
        if not self.terms:
            return float("-inf")
        return max(len(w) for w in self.terms)

    def is_homogeneous(self):
        return len({len(w) for w in self.terms}) <= 1

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return Lie(out)

    def __neg__(self):
        return Lie({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = Fraction(c)
        return Lie({w: c * v for w, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Lie):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "Lie(0)"
        bits = [f"{c}*{w}" for w, c in sorted(self.terms.items(), key=lambda t: graded_lex_key(t[0]))]
        return "Lie(" + " + ".join(bits) + ")"


_BRACKET_CACHE = {}


def _accumulate(out, terms, sign=1):
    for w, c in terms.items():
        s = out.get(w, 0) + sign * c
        if s:
            out[w] = s
        else:
            out.pop(w, None)


_IN_PROGRESS = object()


def _basis_bracket(u, v):
    """Bracket of two basis words, expanded over the Lyndon basis.

    Recursive rewriting on ordered pairs u < v (the concatenation uv is
    then itself Lyndon): if (u, v) is the standard factorization of uv
    the bracket is a basis element; otherwise u has length >= 2 and its
    standard factorization (u1, u2) satisfies u2 < v, so the Jacobi
    identity [u1u2, v] = [u1, [u2, v]] - [u2, [u1, v]] applies, with
    both inner brackets of strictly smaller degree.
    """
    if u == v:
        return {}
    if u > v:
        return {w: -c for w, c in _basis_bracket(v, u).items()}
    key = (u, v)
    hit = _BRACKET_CACHE.get(key)
    if hit is _IN_PROGRESS:
        raise AssertionError(f"bracket rewriting cycled on {key}")
    if hit is not None:
        return hit
    _BRACKET_CACHE[key] = _IN_PROGRESS
    w = u + v
    if standard_factorization(w) == (u, v):
        out = {w: Fraction(1)}
    else:
        u1, u2 = standard_factorization(u)
        out = {}
        for z, c in _basis_bracket(u2, v).items():
            _accumulate(out, {z2: c * c2 for z2, c2 in _basis_bracket(u1, z).items()})
        for z, c in _basis_bracket(u1, v).items():
            _accumulate(out, {z2: c * c2 for z2, c2 in _basis_bracket(u2, z).items()}, sign=-1)
    _BRACKET_CACHE[key] = out
    return out


def lie_bracket(a, b):
    """Bracket of two Lie elements, bilinear over the basis rewriting."""
    out = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            c = cu * cv
            for w, cw in _basis_bracket(u, v).items():
                s = out.get(w, 0) + c * cw
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
    return Lie(out)


# ---------------------------------------------------------------------------
# Cross-check oracle: expand bracketings in the free associative algebra and
# convert back by greedy peeling of minimal Lyndon words.  Exponential in the
# degree, so only used at test scale.

def associative_expansion(word):
    """Expansion of a basis word's bracketing as an associative polynomial."""
    w = tuple(word)
    if len(w) == 1:
        return {w: Fraction(1)}
    u, v = standard_factorization(w)
    a = associative_expansion(u)
    b = associative_expansion(v)
    out = {}
    for wu, cu in a.items():
        for wv, cv in b.items():
            _accumulate(out, {wu + wv: cu * cv})
            _accumulate(out, {wv + wu: cu * cv}, sign=-1)
    return out


def lie_to_associative(a):
    """Image of a Lie element in the free associative algebra."""
    out = {}
    for w, c in a.terms.items():
        for wa, ca in associative_expansion(w).items():
            _accumulate(out, {wa: c * ca})
    return out


def lie_from_associative(terms):
    """Rewrite an associative polynomial that lies in the free Lie algebra.

    Greedy: the lexicographically least word of a Lie element is a Lyndon
    word carrying the coefficient of its basis element.  Raises ValueError
    if the input is not a Lie element.
    """
    rest = {w: Fraction(c) for w, c in terms.items() if c}
    out = {}
    while rest:
        w = min(rest)
        if not is_lyndon(w):
            raise ValueError(f"not a Lie element: stray word {w!r}")
        c = rest[w]
        out[w] = out.get(w, 0) + c
        for wa, ca in associative_expansion(w).items():
            _accumulate(rest, {wa: c * ca}, sign=-1)
    return Lie(out)


def lie_bracket_oracle(a, b):
    """Bracket computed through the associative expansion (test oracle)."""
    ea = lie_to_associative(a)
    eb = lie_to_associative(b)
    out = {}
    for wa, ca in ea.items():
        for wb, cb in eb.items():
            _accumulate(out, {wa + wb: ca * cb})
            _accumulate(out, {wb + wa: ca * cb}, sign=-1)
    return lie_from_associative(out)

"""Free Poisson algebra: polynomials in the Lyndon basis elements.

The underlying commutative algebra is the polynomial algebra whose
variables are the Lyndon-basis elements of the free Lie algebra; the
bracket of two basis elements is rewritten in the free Lie algebra and
extended to products by the Leibniz rule.  A monomial is stored as a
tuple of (word, exponent) pairs sorted by the basis order (degree, then
lex on the word).
"""

from fractions import Fraction

from . import freelie
from .core import graded_lex_key


def _basis_key(word):
    return graded_lex_key(word)


def mono_mul(m1, m2):
    """Merge two monomials, adding exponents."""
    out = dict(m1)
    for w, e in m2:
        out[w] = out.get(w, 0) + e
    return tuple(sorted(out.items(), key=lambda t: _basis_key(t[0])))


def mono_deg(m):
    """Total degree, counting each basis factor with its word length."""
    return sum(len(w) * e for w, e in m)


def mono_deg_var(m, i):
    """Degree in the generator x_i: letter count weighted by exponents."""
    return sum(w.count(i) * e for w, e in m)


def mono_multideg(m, n):
    return tuple(mono_deg_var(m, i) for i in range(1, n + 1))


def mono_div(m, word):
    """Divide a monomial by one basis factor; the factor must occur."""
    out = dict(m)
    e = out.get(word, 0)
    if e <= 0:
        raise ValueError("factor does not divide monomial")
    if e == 1:
        del out[word]
    else:
        out[word] = e - 1
    return tuple(sorted(out.items(), key=lambda t: _basis_key(t[0])))


def mono_divides(m1, m2):
    """True iff m1 divides m2 factor-wise."""
    d2 = dict(m2)
    return all(d2.get(w, 0) >= e for w, e in m1)


def mono_quotient(m2, m1):
    """The monomial m2 / m1; requires divisibility."""
    d2 = dict(m2)
    for w, e in m1:
        r = d2.get(w, 0) - e
        if r < 0:
            raise ValueError("monomials do not divide")
        if r == 0:
            d2.pop(w, None)
        else:
            d2[w] = r
    return tuple(sorted(d2.items(), key=lambda t: _basis_key(t[0])))


def mono_cmp(a, b):
    """Canonical monomial order: degree first, then lex on exponent vectors."""
    da, db = mono_deg(a), mono_deg(b)
    if da != db:
        return -1 if da < db else 1
    ia = ib = 0
    while ia < len(a) or ib < len(b):
        ka = _basis_key(a[ia][0]) if ia < len(a) else None
        kb = _basis_key(b[ib][0]) if ib < len(b) else None
        if ka == kb:
            ea, eb = a[ia][1], b[ib][1]
            if ea != eb:
                return -1 if ea < eb else 1
            ia += 1
            ib += 1
        elif kb is None or (ka is not None and ka < kb):
            # a has a positive exponent at an earlier basis position
            return 1
        else:
            return -1
    return 0


class Poly:
    """A Poisson-algebra element: finite map from monomials to scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    data[tuple(m)] = c
        self.terms = data

    @staticmethod
    def zero():
        return Poly()

    @staticmethod
    def one():
        return Poly({(): 1})

    @staticmethod
    def constant(c):
        return Poly({(): c})

    @staticmethod
    def generator(i):
        if i < 1:
            raise ValueError("generator index must be >= 1")
        return Poly({(((i,), 1),): 1})

    @staticmethod
    def from_basis(word):
        if not freelie.is_lyndon(word):
            raise ValueError(f"{word!r} is not a Lyndon word")
        return Poly({((tuple(word), 1),): 1})

    @staticmethod
    def from_lie(a):
        return Poly({((w, 1),): c for w, c in a.terms.items()})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(m == () for m in self.terms)

    def constant_value(self):
        return self.terms.get((), Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly({m: c * v for m, v in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def deg(self):
        """Total degree, or -inf for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return max(mono_deg(m) for m in self.terms)

    def deg_var(self, i):
        if not self.terms:
            return float("-inf")
        return max(mono_deg_var(m, i) for m in self.terms)

    def leading(self):
        """(monomial, coefficient) maximal in the canonical order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        best = None
        for m in self.terms:
            if best is None or mono_cmp(m, best) > 0:
                best = m
        return best, self.terms[best]

    def monic(self):
        if not self.terms:
            raise ValueError("cannot normalize zero")
        _, c = self.leading()
        return self * (1 / c)

    def variables(self):
        """The set of basis words occurring in the support."""
        out = set()
        for m in self.terms:
            for w, _ in m:
                out.add(w)
        return out

    def multideg_components(self, n):
        """Split into multihomogeneous components keyed by multidegree."""
        out = {}
        for m, c in self.terms.items():
            d = mono_multideg(m, n)
            out.setdefault(d, {})[m] = c
        return {d: Poly(t) for d, t in out.items()}

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m, c in sorted(self.terms.items()):
            factors = "*".join(f"{w}^{e}" if e > 1 else f"{w}" for w, e in m) or "1"
            bits.append(f"{c}*{factors}")
        return "Poly(" + " + ".join(bits) + ")"


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.constant(Fraction(x))
    return NotImplemented


def p_add(a, b):
    return _coerce(a) + _coerce(b)


def p_mul(a, b):
    return _coerce(a) * _coerce(b)


def p_bracket(a, b):
    """Poisson bracket, extended from the Lie bracket by the Leibniz rule."""
    out = Poly.zero()
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            c = c1 * c2
            for w1, e1 in m1:
                cof1 = mono_div(m1, w1)
                for w2, e2 in m2:
                    cof2 = mono_div(m2, w2)
                    base = freelie.lie_bracket(Lie1(w1), Lie1(w2))
                    if base.is_zero():
                        continue
                    scale = c * e1 * e2
                    cof = Poly({mono_mul(cof1, cof2): scale})
                    out = out + cof * Poly.from_lie(base)
    return out


def Lie1(word):
    return freelie.Lie({word: 1})


def p_deg(a):
    """Total degree; -inf for the zero polynomial."""
    return a.deg()


def p_deg_var(a, i):
    return a.deg_var(i)


def evaluate(p, images):
    """Substitute images[i-1] for the generator x_i, as a Poisson map.

    Basis elements evaluate through their bracketing, monomials through
    commutative products.
    """
    cache = {}

    def eval_word(w):
        got = cache.get(w)
        if got is None:
            if len(w) == 1:
                got = images[w[0] - 1]
            else:
                u, v = freelie.standard_factorization(w)
                got = p_bracket(eval_word(u), eval_word(v))
            cache[w] = got
        return got

    out = Poly.zero()
    for m, c in p.terms.items():
        acc = Poly.constant(c)
        for w, e in m:
            acc = acc * eval_word(w) ** e
        out = out + acc
    return out


def divexact(a, b):
    """Exact polynomial division a / b; raises ValueError if not divisible."""
    if b.is_zero():
        raise ValueError("division by zero polynomial")
    if a.is_zero():
        return Poly.zero()
    mb, cb = b.leading()
    quo = {}
    rest = a
    while not rest.is_zero():
        ma, ca = rest.leading()
        if not mono_divides(mb, ma):
            raise ValueError("polynomials do not divide exactly")
        m = mono_quotient(ma, mb)
        c = ca / cb
        quo[m] = quo.get(m, 0) + c
        rest = rest - Poly({m: c}) * b
    return Poly(quo)


def p_gcd(a, b):
    """Greatest common divisor, normalized monic in the canonical order."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return Poly.one()
    import sympy

    words = sorted(a.variables() | b.variables(), key=_basis_key)
    index = {w: k for k, w in enumerate(words)}
    syms = sympy.symbols(f"v0:{len(words)}")
    if len(words) == 1:
        syms = (syms[0],) if isinstance(syms, tuple) else (syms,)

    def to_sympy(p):
        data = {}
        for m, c in p.terms.items():
            exps = [0] * len(words)
            for w, e in m:
                exps[index[w]] = e
            data[tuple(exps)] = sympy.Rational(c.numerator, c.denominator)
        return sympy.Poly.from_dict(data, *syms, domain="QQ")

    g = to_sympy(a).gcd(to_sympy(b))
    terms = {}
    for exps, c in g.terms():
        m = tuple((words[k], e) for k, e in enumerate(exps) if e)
        m = tuple(sorted(m, key=lambda t: _basis_key(t[0])))
        c = Fraction(int(c.p), int(c.q))
        terms[m] = c
    out = Poly(terms)
    return out.monic()

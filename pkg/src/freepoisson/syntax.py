"""Surface syntax: tokenizer, parser, evaluation, and rendering.

Grammar (whitespace insignificant, "^" binds tighter than "*",
juxtaposition is not multiplication):

    expr     := term (("+"|"-") term)*
    term     := factor ("*" factor)*
    factor   := base ("^" nat)?
    base     := rational | var | "(" expr ")" | "{" expr "," expr "}"
              | "[" expr "," expr "]" | "h" "(" expr ")"
    var      := ("x"|"y") nat
    rational := "-"? nat ("/" nat)?

"[a,b]" is accepted as a synonym for the bracket "{a,b}" so that
rendered basis elements such as "[x1,[x1,x2]]" parse back to themselves.
h(...) is legal only in env mode; y-variables only in symplectic and
weyl modes.  Rendering is deterministic and parseable: every value
satisfies parse(render(v)) = v in its own mode.
"""

import functools
from fractions import Fraction

from . import freelie, poisson
from .core import graded_lex_key, mi_norm
from .env import Env, env_mul, ham
from .poisson import Poly
from .symplectic import PnEnv, SPoly, Weyl, sp_bracket, weyl_mul


class ParseError(Exception):
    def __init__(self, message, line=1, col=1):
        super().__init__(f"{message} (line {line}, col {col})")
        self.line = line
        self.col = col


class DomainError(Exception):
    pass


def _linecol(src, pos):
    line = src.count("\n", 0, pos) + 1
    last = src.rfind("\n", 0, pos)
    return line, pos - last


def tokenize(src):
    tokens = []
    i = 0
    while i < len(src):
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(("num", int(src[i:j]), i))
            i = j
            continue
        if c in "xy":
            j = i + 1
            while j < len(src) and src[j].isdigit():
                j += 1
            if j == i + 1:
                line, col = _linecol(src, i)
                raise ParseError(f"variable index expected after {c!r}", line, col)
            tokens.append(("var", (c, int(src[i + 1 : j])), i))
            i = j
            continue
        if c == "h":
            tokens.append(("h", None, i))
            i += 1
            continue
        if c in "+-*/^(){}[],":
            tokens.append((c, None, i))
            i += 1
            continue
        line, col = _linecol(src, i)
        raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(("eof", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src, n, mode):
        if mode not in ("poisson", "env", "symplectic", "weyl"):
            raise ValueError(f"unknown mode {mode!r}")
        self.src = src
        self.n = n
        self.mode = mode
        self.tokens = tokenize(src)
        self.pos = 0

    def _error(self, message, tok=None):
        tok = tok or self.tokens[self.pos]
        line, col = _linecol(self.src, tok[2])
        raise ParseError(message, line, col)

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        if self.peek() != kind:
            self._error(f"expected {what}")
        return self.next()

    def parse(self):
        node = self.expr()
        if self.peek() != "eof":
            self._error("unexpected trailing input")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek() == "*":
            self.next()
            node = ("*", node, self.factor())
        return node

    def factor(self):
        node = self.base()
        if self.peek() == "^":
            self.next()
            tok = self.expect("num", "an exponent")
            node = ("^", node, tok[1])
        return node

    def _rational(self, sign):
        tok = self.expect("num", "a number")
        num = sign * tok[1]
        if self.peek() == "/":
            self.next()
            tok = self.expect("num", "a denominator")
            if tok[1] == 0:
                self._error("zero denominator", tok)
            return Fraction(num, tok[1])
        return Fraction(num)

    def base(self):
        kind = self.peek()
        if kind == "num":
            return ("num", self._rational(1))
        if kind == "-":
            self.next()
            return ("*", ("num", Fraction(-1)), self.factor())
        if kind == "var":
            tok = self.next()
            letter, idx = tok[1]
            if letter == "y" and self.mode in ("poisson", "env"):
                self._error(f"y-variables are not allowed in {self.mode} mode", tok)
            if not 1 <= idx <= self.n:
                raise DomainError(f"variable index {letter}{idx} exceeds n={self.n}")
            return ("var", letter, idx)
        if kind == "h":
            tok = self.next()
            if self.mode != "env":
                self._error("h(...) is only allowed in env mode", tok)
            self.expect("(", "'('")
            inner = self.expr()
            self.expect(")", "')'")
            return ("h", inner)
        if kind == "(":
            self.next()
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        if kind in ("{", "["):
            if self.mode == "weyl":
                self._error("brackets are not available in weyl mode")
            close = "}" if kind == "{" else "]"
            self.next()
            a = self.expr()
            self.expect(",", "','")
            b = self.expr()
            self.expect(close, f"'{close}'")
            return ("bracket", a, b)
        self._error("expected a value")

    def evaluate(self, node):
        mode = self.mode
        op = node[0]
        if op == "num":
            return self._const(node[1])
        if op == "var":
            return self._var(node[1], node[2])
        if op == "+":
            return self.evaluate(node[1]) + self.evaluate(node[2])
        if op == "-":
            return self.evaluate(node[1]) - self.evaluate(node[2])
        if op == "*":
            a, b = self.evaluate(node[1]), self.evaluate(node[2])
            if mode == "env":
                return env_mul(a, b)
            if mode == "weyl":
                return weyl_mul(a, b)
            return a * b
        if op == "^":
            base, k = self.evaluate(node[1]), node[2]
            out = self._const(Fraction(1))
            for _ in range(k):
                if mode == "env":
                    out = env_mul(out, base)
                elif mode == "weyl":
                    out = weyl_mul(out, base)
                else:
                    out = out * base
            return out
        if op == "bracket":
            a, b = self.evaluate(node[1]), self.evaluate(node[2])
            if mode == "poisson":
                return poisson.p_bracket(a, b)
            if mode == "symplectic":
                return sp_bracket(a, b)
            if mode == "env":
                pa, ra = a.split()
                pb, rb = b.split()
                if not ra.is_zero() or not rb.is_zero():
                    raise DomainError("bracket arguments must be polynomial")
                return Env.from_poly(poisson.p_bracket(pa, pb))
            raise AssertionError(f"bracket in {mode} mode")
        if op == "h":
            inner = self.evaluate(node[1])
            p, rest = inner.split()
            if not rest.is_zero():
                raise DomainError("h argument must be polynomial")
            return ham(p)

    def _const(self, c):
        if self.mode == "poisson":
            return Poly.constant(c)
        if self.mode == "env":
            return Env.from_poly(Poly.constant(c))
        if self.mode == "symplectic":
            return SPoly.constant(self.n, c)
        return Weyl(self.n, {((0,) * self.n, (0,) * self.n): c})

    def _var(self, letter, idx):
        if self.mode == "poisson":
            return Poly.generator(idx)
        if self.mode == "env":
            return Env.from_poly(Poly.generator(idx))
        if self.mode == "symplectic":
            return SPoly.x(self.n, idx) if letter == "x" else SPoly.y(self.n, idx)
        return Weyl.X(self.n, idx) if letter == "x" else Weyl.Y(self.n, idx)


def parse(src, n, mode):
    """Source to AST; raises ParseError / DomainError per the contract."""
    return _Parser(src, n, mode).parse()


def parse_element(src, n, mode):
    """Source to value in the algebra selected by the mode."""
    p = _Parser(src, n, mode)
    return p.evaluate(p.parse())


# --- rendering ---------------------------------------------------------


def format_scalar(c):
    return str(Fraction(c))


def render_word(w):
    if len(w) == 1:
        return f"x{w[0]}"
    u, v = freelie.standard_factorization(w)
    return f"[{render_word(u)},{render_word(v)}]"


def _mono_factors(m):
    facs = []
    for w, e in sorted(m, key=lambda t: tuple(reversed(t[0]))):
        base = render_word(w)
        facs.append(f"{base}^{e}" if e > 1 else base)
    return facs


def _display_cmp(a, b):
    da, db = poisson.mono_deg(a), poisson.mono_deg(b)
    if da != db:
        return -1 if da > db else 1
    return poisson.mono_cmp(a, b)


def _poly_display(p):
    monos = sorted(p.terms, key=functools.cmp_to_key(_display_cmp))
    return [(m, p.terms[m]) for m in monos]


def _join_terms(items):
    """items: list of (coefficient, factor list) in display order."""
    if not items:
        return "0"
    parts = []
    for idx, (c, facs) in enumerate(items):
        mag = abs(c)
        body = "*".join(facs)
        if not facs:
            piece = format_scalar(mag)
        elif mag == 1:
            piece = body
        else:
            piece = f"{format_scalar(mag)}*{body}"
        if idx == 0:
            if c < 0:
                piece = f"-{format_scalar(mag)}*{body}" if facs else f"-{format_scalar(mag)}"
            parts.append(piece)
        else:
            parts.append(f"{' - ' if c < 0 else ' + '}{piece}")
    return "".join(parts)


def render_poisson(p):
    items = [(c, _mono_factors(m)) for m, c in _poly_display(p)]
    return _join_terms(items)


def _env_display(u):
    items = []
    for w in sorted(u.terms, key=graded_lex_key, reverse=True):
        hfacs = [f"h(x{j})" for j in w]
        for m, c in _poly_display(u.terms[w]):
            items.append((c, _mono_factors(m) + hfacs))
    return items


def render_env(u):
    return _join_terms(_env_display(u))


def _sp_factors(n, e):
    facs = []
    for k, exp in enumerate(e):
        if not exp:
            continue
        name = f"x{k + 1}" if k < n else f"y{k - n + 1}"
        facs.append(f"{name}^{exp}" if exp > 1 else name)
    return facs


def _sp_display(f):
    keys = sorted(f.terms, key=lambda e: (-sum(e), e))
    return [(e, f.terms[e]) for e in keys]


def render_spoly(f):
    items = [(c, _sp_factors(f.n, e)) for e, c in _sp_display(f)]
    return _join_terms(items)


def render_weyl(a):
    keys = sorted(a.terms, key=lambda k: (-(sum(k[0]) + sum(k[1])), k))
    items = [(a.terms[k], _sp_factors(a.n, k[0] + k[1])) for k in keys]
    return _join_terms(items)


def _h_factors(n, g):
    facs = []
    for k, exp in enumerate(g):
        if not exp:
            continue
        name = f"h(x{k + 1})" if k < n else f"h(y{k - n + 1})"
        facs.append(f"{name}^{exp}" if exp > 1 else name)
    return facs


def render_pnenv(u):
    n = u.n
    items = []
    for g in sorted(u.terms, key=lambda g: (mi_norm(g), tuple(-v for v in g))):
        hfacs = _h_factors(n, g)
        for e, c in _sp_display(u.terms[g]):
            items.append((c, _sp_factors(n, e) + hfacs))
    return _join_terms(items)


def render(value):
    if isinstance(value, Poly):
        return render_poisson(value)
    if isinstance(value, Env):
        return render_env(value)
    if isinstance(value, SPoly):
        return render_spoly(value)
    if isinstance(value, Weyl):
        return render_weyl(value)
    if isinstance(value, PnEnv):
        return render_pnenv(value)
    raise TypeError(f"cannot render {value!r}")


# --- structured (JSON) forms -------------------------------------------


def json_poisson(p):
    return {
        "terms": [
            {
                "coeff": format_scalar(c),
                "pmono": [{"basis": render_word(w), "exp": e} for w, e in m],
            }
            for m, c in _poly_display(p)
        ]
    }


def json_env(u):
    terms = []
    for w in sorted(u.terms, key=graded_lex_key, reverse=True):
        for m, c in _poly_display(u.terms[w]):
            terms.append(
                {
                    "coeff": format_scalar(c),
                    "pmono": [{"basis": render_word(bw), "exp": e} for bw, e in m],
                    "hword": list(w),
                }
            )
    return {"terms": terms}


def json_spoly(f):
    return {
        "terms": [
            {"coeff": format_scalar(c), "exponents": list(e)}
            for e, c in _sp_display(f)
        ]
    }


def json_weyl(a):
    keys = sorted(a.terms, key=lambda k: (-(sum(k[0]) + sum(k[1])), k))
    return {
        "terms": [
            {
                "coeff": format_scalar(a.terms[k]),
                "xexp": list(k[0]),
                "yexp": list(k[1]),
            }
            for k in keys
        ]
    }


def json_pnenv(u):
    terms = []
    for g in sorted(u.terms, key=lambda g: (mi_norm(g), tuple(-v for v in g))):
        for e, c in _sp_display(u.terms[g]):
            terms.append(
                {
                    "coeff": format_scalar(c),
                    "exponents": list(e),
                    "hindex": list(g),
                }
            )
    return {"terms": terms}


def to_json(value):
    if isinstance(value, Poly):
        return json_poisson(value)
    if isinstance(value, Env):
        return json_env(value)
    if isinstance(value, SPoly):
        return json_spoly(value)
    if isinstance(value, Weyl):
        return json_weyl(value)
    if isinstance(value, PnEnv):
        return json_pnenv(value)
    raise TypeError(f"cannot encode {value!r}")

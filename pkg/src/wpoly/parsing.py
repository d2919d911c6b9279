"""Text forms of ring elements and skew polynomial literals.

One expression grammar covers every ring; which identifiers resolve
depends on the context (`w` in the finite fields, the variable in the
rational function fields, `i j k` for quaternions).  A slash directly
between two integer literals lexes as a single rational number, so
`-1/2k` reads as (-1/2)*k, exactly what the printers emit; elsewhere
`/` is ordinary division.  Polynomial literals keep coefficients inside
square brackets (`t^2 + [1+2i]*t + [j]`), which avoids any ambiguity
between `it` and `[i]*t`; terms may appear in any order and repeated
powers accumulate.
"""

from fractions import Fraction

from .errors import ParseError, WrongRingError
from .skew import SkewPolynomial

_SYMBOLS = set("+-*/^()[]")
_KNOWN_ATOMS = frozenset("wxuijk")


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            if j + 1 < n and text[j] == "/" and text[j + 1].isdigit():
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                den = int(text[j + 1:k])
                if den == 0:
                    raise ParseError("zero denominator in rational literal", j + 1)
                toks.append(_Token("num", Fraction(num, den), i))
                i = k
            else:
                toks.append(_Token("num", Fraction(num), i))
                i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            toks.append(_Token("ident", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            toks.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return toks


def _atoms_for(ctx):
    kind = ctx.kind
    if kind == "GF":
        return {"w": ctx.w}
    if kind == "QV":
        return {ctx.variable: ctx.x}
    if kind == "HQ":
        return {"i": ctx.i, "j": ctx.j, "k": ctx.k}
    return {}


def _embed(ctx, q, pos):
    num = ctx.from_int(q.numerator)
    if q.denominator == 1:
        return num
    den = ctx.from_int(q.denominator)
    if ctx.is_zero(den):
        raise ParseError(f"denominator {q.denominator} vanishes in {ctx.name}", pos)
    return num * ctx.inv(den)


class _ElementReader:
    """Recursive-descent reader over a token slice."""

    def __init__(self, ctx, toks, lo, hi, text_len):
        self.ctx = ctx
        self.toks = toks
        self.i = lo
        self.hi = hi
        self.text_len = text_len
        self.atoms = _atoms_for(ctx)

    def peek(self):
        return self.toks[self.i] if self.i < self.hi else None

    def advance(self):
        tok = self.peek()
        if tok is not None:
            self.i += 1
        return tok

    def here(self):
        tok = self.peek()
        return tok.pos if tok is not None else self.text_len

    def expr(self):
        tok = self.peek()
        negate = False
        if tok is not None and tok.kind in "+-":
            negate = tok.kind == "-"
            self.advance()
        value = self.term()
        if negate:
            value = -value
        while True:
            tok = self.peek()
            if tok is None or tok.kind not in "+-":
                return value
            self.advance()
            rhs = self.term()
            value = value - rhs if tok.kind == "-" else value + rhs

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok is None:
                return value
            if tok.kind == "*":
                self.advance()
                value = value * self.factor()
            elif tok.kind == "/":
                self.advance()
                pos = self.here()
                rhs = self.factor()
                if self.ctx.is_zero(rhs):
                    raise ParseError("division by zero", pos)
                value = value * self.ctx.inv(rhs)
            elif tok.kind in ("num", "ident", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        value = self.atom()
        tok = self.peek()
        if tok is not None and tok.kind == "^":
            self.advance()
            value = self._power(value)
        return value

    def _power(self, base):
        tok = self.advance()
        if tok is None or tok.kind != "num" or tok.value.denominator != 1:
            raise ParseError("exponent must be a nonnegative integer",
                             tok.pos if tok else self.text_len)
        e = tok.value.numerator
        out = self.ctx.one
        for _ in range(e):
            out = out * base
        return out

    def atom(self):
        tok = self.advance()
        if tok is None:
            raise ParseError("unexpected end of input", self.text_len)
        if tok.kind == "num":
            return _embed(self.ctx, tok.value, tok.pos)
        if tok.kind == "ident":
            if tok.value in self.atoms:
                return self.atoms[tok.value]
            if tok.value in _KNOWN_ATOMS:
                raise WrongRingError(
                    f"symbol {tok.value!r} is not defined in {self.ctx.name}",
                    tok.pos)
            raise ParseError(f"unknown symbol {tok.value!r}", tok.pos)
        if tok.kind == "(":
            value = self.expr()
            close = self.advance()
            if close is None or close.kind != ")":
                raise ParseError("missing closing parenthesis",
                                 close.pos if close else self.text_len)
            return value
        raise ParseError(f"unexpected {tok.kind!r}", tok.pos)


def parse_element(text, ctx):
    """Read one ring element; raises ParseError on malformed input and
    WrongRingError when a single-letter symbol belongs to another ring."""
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty element literal", 0)
    reader = _ElementReader(ctx, toks, 0, len(toks), len(text))
    try:
        value = reader.expr()
    except ZeroDivisionError:
        raise ParseError("division by zero", reader.here()) from None
    if reader.peek() is not None:
        raise ParseError("trailing input after element", reader.here())
    return value


def parse_elements(text, ctx):
    """Comma-separated list of elements; an empty string is the empty list."""
    if not text.strip():
        return []
    return [parse_element(piece, ctx) for piece in text.split(",")]


def _coeff_slice(ctx, toks, lo, text_len):
    """Element between toks[lo] == '[' and its closing bracket."""
    hi = lo + 1
    while hi < len(toks) and toks[hi].kind != "]":
        hi += 1
    if hi == len(toks):
        raise ParseError("missing closing bracket", text_len)
    if hi == lo + 1:
        raise ParseError("empty coefficient brackets", toks[lo].pos)
    reader = _ElementReader(ctx, toks, lo + 1, hi, text_len)
    try:
        value = reader.expr()
    except ZeroDivisionError:
        raise ParseError("division by zero", reader.here()) from None
    if reader.i != hi:
        raise ParseError("trailing input inside coefficient", reader.here())
    return value, hi + 1


def _power_suffix(toks, i, text_len):
    """Optionally consume '^' INT after a 't'; returns (power, next_index)."""
    if i < len(toks) and toks[i].kind == "^":
        if i + 1 >= len(toks) or toks[i + 1].kind != "num":
            raise ParseError("expected integer power of t",
                             toks[i].pos if i < len(toks) else text_len)
        val = toks[i + 1].value
        if val.denominator != 1 or val < 0:
            raise ParseError("power of t must be a nonnegative integer",
                             toks[i + 1].pos)
        return int(val), i + 2
    return 1, i


def parse_polynomial(text, ctx):
    """Read a skew polynomial literal.

    Terms are `[coeff]`, `[coeff]*t^k`, bare `t^k` (unit coefficient), or
    the single literal `0`; separators are `+` and `-`, the latter negating
    the following term.  Coefficient brackets are mandatory.
    """
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty polynomial literal", 0)
    if len(toks) == 1 and toks[0].kind == "num" and toks[0].value == 0:
        return SkewPolynomial.zero(ctx)
    acc = {}
    i = 0
    sign = 1
    expect_term = True
    n = len(toks)
    while i < n:
        tok = toks[i]
        if expect_term:
            if tok.kind in "+-":
                if tok.kind == "-":
                    sign = -sign
                i += 1
                continue
            if tok.kind == "[":
                coeff, i = _coeff_slice(ctx, toks, i, len(text))
                power = 0
                if i < n and toks[i].kind == "*":
                    i += 1
                    if i >= n or toks[i].kind != "ident" or toks[i].value != "t":
                        raise ParseError("expected t after '*'",
                                         toks[i].pos if i < n else len(text))
                if i < n and toks[i].kind == "ident" and toks[i].value == "t":
                    i += 1
                    power, i = _power_suffix(toks, i, len(text))
            elif tok.kind == "ident" and tok.value == "t":
                coeff = ctx.one
                i += 1
                power, i = _power_suffix(toks, i, len(text))
            else:
                raise ParseError("expected a bracketed coefficient or t", tok.pos)
            if sign < 0:
                coeff = -coeff
            acc[power] = acc[power] + coeff if power in acc else coeff
            expect_term = False
            sign = 1
        else:
            if tok.kind == "+":
                expect_term = True
            elif tok.kind == "-":
                expect_term = True
                sign = -1
            else:
                raise ParseError("expected '+' or '-' between terms", tok.pos)
            i += 1
    if expect_term:
        raise ParseError("dangling sign at end of polynomial", len(text))
    top = max(acc)
    coeffs = tuple(acc.get(p, ctx.zero) for p in range(top + 1))
    return SkewPolynomial(ctx, coeffs)

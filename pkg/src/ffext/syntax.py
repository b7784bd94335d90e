"""Text syntax for field elements, polynomials, and rational functions.

Grammar (whitespace ignored):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | power
    power  := atom ['^' integer]
    atom   := integer | 't' | 'u' | '(' expr ')'

't' is the polynomial variable; 'u' is the extension generator and is
only legal when e > 1.  Multiplication is always explicit.  Everything
a report prints re-parses to an equal value.
"""

from .errors import ParseError
from .polyring import Poly, RatFunc

_ATOM_RE = None  # the tokenizer is hand-rolled; positions matter more than speed


class _Parser:
    def __init__(self, ctx, text):
        self.ctx = ctx
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError(message, self.pos if pos is None else pos, self.text)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        c = self.peek()
        self.pos += 1
        return c

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def expr(self):
        value = self.term()
        while True:
            c = self.peek()
            if c == "+":
                self.take()
                value = value + self.term()
            elif c == "-":
                self.take()
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            c = self.peek()
            if c == "*":
                self.take()
                value = value * self.factor()
            elif c == "/":
                self.take()
                pos = self.pos
                rhs = self.factor()
                if rhs.is_zero:
                    self.error("division by zero", pos)
                value = value / rhs
            else:
                return value

    def factor(self):
        if self.peek() == "-":
            self.take()
            return -self.factor()
        return self.power()

    def power(self):
        value = self.atom()
        if self.peek() == "^":
            self.take()
            pos = self.pos
            n = self.integer()
            if n > 10**6:
                self.error("exponent too large", pos)
            value = value**n
        return value

    def atom(self):
        c = self.peek()
        if c == "(":
            self.take()
            value = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return value
        if c.isdigit():
            n = self.integer()
            return RatFunc(Poly.constant(self.ctx, n % self.ctx.p))
        if c == "t":
            self.take()
            return RatFunc(Poly.t(self.ctx))
        if c == "u":
            if self.ctx.e == 1:
                self.error(f"'u' is not defined over the prime field F_{self.ctx.p}")
            self.take()
            return RatFunc(Poly.constant(self.ctx, self.ctx.p))
        if c == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {c!r}")

    def parse(self):
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"unexpected character {self.text[self.pos]!r}")
        return value


def parse_ratfunc(ctx, text):
    if not text.strip():
        raise ParseError("empty input", 0, text)
    return _Parser(ctx, text).parse()


def parse_poly(ctx, text):
    value = parse_ratfunc(ctx, text)
    if not value.is_poly:
        raise ParseError("expected a polynomial, got a rational function", 0, text)
    return value.as_poly()


def parse_elem(ctx, text):
    value = parse_ratfunc(ctx, text)
    if not value.is_poly or value.num.degree > 0:
        raise ParseError("expected a field element", 0, text)
    return value.num.coeff(0)


def parse_elem_list(ctx, text):
    return [parse_elem(ctx, part) for part in text.split(",")]


# ------------------------------------------------------------------ formatting

def _coeff_prefix(ctx, code):
    # rendering of `code * <monomial>`; parenthesize multi-term elements
    s = ctx.format_elem(code)
    if "+" in s or "-" in s:
        return f"({s})*"
    if s == "1":
        return ""
    return f"{s}*"


def format_poly(poly):
    ctx = poly.ctx
    if poly.is_zero:
        return "0"
    terms = []
    for i in reversed(range(len(poly.coeffs))):
        c = poly.coeffs[i]
        if not c:
            continue
        if i == 0:
            s = ctx.format_elem(c)
            terms.append(f"({s})" if "+" in s else s)
        else:
            var = "t" if i == 1 else f"t^{i}"
            terms.append(_coeff_prefix(ctx, c) + var)
    return "+".join(terms)


def _is_atomic(text):
    # single token or single power: safe as a denominator without parens
    if text.isdigit():
        return True
    if text in ("t", "u"):
        return True
    for sep in ("+", "-", "*", "/"):
        if sep in text:
            return False
    return True  # e.g. "t^3", "u^2"


def format_ratfunc(rf):
    num = format_poly(rf.num)
    if rf.is_poly:
        return num
    den = format_poly(rf.den)
    if "+" in num or "-" in num:
        num = f"({num})"
    if not _is_atomic(den):
        den = f"({den})"
    return f"{num}/{den}"


def format_elem(ctx, code):
    return ctx.format_elem(code)

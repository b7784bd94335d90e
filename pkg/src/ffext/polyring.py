"""Univariate polynomials and rational functions over F_q.

Poly stores a tuple of field-element codes, lowest degree first, no
trailing zeros; the degree of the zero polynomial is the NEG_INF marker,
never -1.  RatFunc keeps a reduced fraction with monic denominator.
Monic degree-n polynomials are indexed by sum(coeffs[j]*q^j, j < n),
which enumerates them in the order that compares high-degree
coefficients first; PrimePoly wraps a certified irreducible.
"""

import random

from ._kernels import kern
from .errors import BudgetExceeded, ReduciblePolynomial
from .field import FieldElem, prime_divisors

NEG_INF = float("-inf")

DEFAULT_ENUM_BUDGET = 10**8

SCAN_CHUNK = 1 << 16


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        codes = []
        for c in coeffs:
            if isinstance(c, FieldElem):
                if c.ctx != ctx:
                    raise ValueError("coefficient from a different field")
                codes.append(c.code)
            else:
                c = int(c)
                if not 0 <= c < ctx.q:
                    raise ValueError(f"coefficient code {c} out of range [0, {ctx.q})")
                codes.append(c)
        while codes and codes[-1] == 0:
            codes.pop()
        self.ctx = ctx
        self.coeffs = tuple(codes)

    # ------------------------------------------------------------- factories

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls(ctx, (1,))

    @classmethod
    def t(cls, ctx):
        return cls(ctx, (0, 1))

    @classmethod
    def constant(cls, ctx, c):
        return cls(ctx, (c,))

    @classmethod
    def monomial(cls, ctx, deg, c=1):
        return cls(ctx, (0,) * deg + (c,))

    # ------------------------------------------------------------ properties

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # ------------------------------------------------------------ arithmetic

    def _match(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ValueError("polynomials over different fields")

    def _wrap(self, codes):
        out = Poly.__new__(Poly)
        out.ctx = self.ctx
        out.coeffs = tuple(codes)
        return out

    def __add__(self, other):
        self._match(other)
        return self._wrap(kern.poly_add(self.ctx.kf, list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        self._match(other)
        return self._wrap(kern.poly_sub(self.ctx.kf, list(self.coeffs), list(other.coeffs)))

    def __neg__(self):
        return self._wrap(kern.poly_neg(self.ctx.kf, list(self.coeffs)))

    def __mul__(self, other):
        self._match(other)
        return self._wrap(kern.poly_mul(self.ctx.kf, list(self.coeffs), list(other.coeffs)))

    def scale(self, c):
        if isinstance(c, FieldElem):
            c = c.code
        if c == 0:
            return Poly.zero(self.ctx)
        if c == 1:
            return self
        ctx = self.ctx
        return self._wrap([ctx.mul(x, c) for x in self.coeffs])

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a nonnegative int")
        result = Poly.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        self._match(other)
        q, r = kern.poly_divmod(self.ctx.kf, list(self.coeffs), list(other.coeffs))
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        self._match(other)
        return self._wrap(kern.poly_mod(self.ctx.kf, list(self.coeffs), list(other.coeffs)))

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return RatFunc(self, other)
        return NotImplemented

    def gcd(self, other):
        self._match(other)
        return self._wrap(kern.poly_gcd(self.ctx.kf, list(self.coeffs), list(other.coeffs)))

    def powmod(self, n, mod):
        self._match(mod)
        if mod.degree < 1:
            raise ValueError("powmod modulus must be nonconstant")
        if not isinstance(n, int) or n < 0:
            raise ValueError("powmod exponent must be a nonnegative int")
        return self._wrap(kern.poly_powmod(self.ctx.kf, list(self.coeffs), n, list(mod.coeffs)))

    def monic(self):
        if self.is_zero:
            raise ValueError("the zero polynomial cannot be made monic")
        if self.coeffs[-1] == 1:
            return self
        return self.scale(self.ctx.inv(self.coeffs[-1]))

    def derivative(self):
        ctx = self.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(ctx.mul(self.coeffs[i], i % ctx.p))
        while out and out[-1] == 0:
            out.pop()
        return self._wrap(out)

    def evaluate(self, x):
        ctx = self.ctx
        wrap = isinstance(x, FieldElem)
        c = x.code if wrap else x
        acc = 0
        for coeff in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, c), coeff)
        return FieldElem(ctx, acc) if wrap else acc

    # ---------------------------------------------------------------- dunder

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        from .syntax import format_poly

        return f"Poly({format_poly(self)} over {self.ctx!r})"


class RatFunc:
    """Reduced fraction num/den of Polys with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Poly.one(num.ctx)
        num._match(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = Poly.zero(num.ctx), Poly.one(num.ctx)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            if den.coeffs[-1] != 1:
                inv = num.ctx.inv(den.coeffs[-1])
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, poly):
        return cls(poly)

    @classmethod
    def zero(cls, ctx):
        return cls(Poly.zero(ctx))

    @property
    def ctx(self):
        return self.num.ctx

    @property
    def is_poly(self):
        return self.den.degree == 0

    @property
    def is_zero(self):
        return self.num.is_zero

    def as_poly(self):
        if not self.is_poly:
            raise ValueError(f"{self!r} is not a polynomial")
        return self.num

    def _match(self, other):
        if isinstance(other, Poly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            raise TypeError(f"expected RatFunc or Poly, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ValueError("rational functions over different fields")
        return other

    def __add__(self, other):
        other = self._match(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        other = self._match(other)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        other = self._match(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = self._match(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("exponent must be an int")
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den**-n, self.num**-n)
        return RatFunc(self.num**n, self.den**n)

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        from .syntax import format_ratfunc

        return f"RatFunc({format_ratfunc(self)} over {self.ctx!r})"


class PrimePoly:
    """A certified monic irreducible, with degree and residue-field size."""

    __slots__ = ("poly", "deg", "np")

    def __init__(self, poly, _trusted=False):
        if not poly.is_monic:
            raise ValueError("a prime polynomial must be monic")
        if poly.degree < 1:
            raise ValueError("a prime polynomial must be nonconstant")
        if not _trusted and not is_irreducible(poly):
            fac = factor(poly)
            raise ReduciblePolynomial(poly, fac.factors[0][0].poly)
        self.poly = poly
        self.deg = poly.degree
        self.np = poly.ctx.q**poly.degree

    @property
    def ctx(self):
        return self.poly.ctx

    @property
    def index(self):
        q = self.ctx.q
        idx = 0
        for c in reversed(self.poly.coeffs[: self.deg]):
            idx = idx * q + c
        return idx

    def sort_key(self):
        return (self.deg, self.index)

    def divides(self, poly):
        return (poly % self.poly).is_zero

    def __eq__(self, other):
        if not isinstance(other, PrimePoly):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __lt__(self, other):
        if self.ctx != other.ctx:
            raise ValueError("primes over different fields are not ordered")
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        from .syntax import format_poly

        return f"PrimePoly({format_poly(self.poly)} over {self.ctx!r})"


class Factorization:
    """unit * prod(P^e): unit is a nonzero field code, factors are sorted
    pairwise-distinct (PrimePoly, multiplicity) pairs."""

    __slots__ = ("ctx", "unit", "factors")

    def __init__(self, ctx, unit, factors):
        self.ctx = ctx
        self.unit = unit
        self.factors = tuple(factors)

    def value(self):
        out = Poly.constant(self.ctx, self.unit)
        for prime, mult in self.factors:
            out = out * prime.poly**mult
        return out

    def __eq__(self, other):
        if not isinstance(other, Factorization):
            return NotImplemented
        return (self.ctx, self.unit, self.factors) == (other.ctx, other.unit, other.factors)

    def __repr__(self):
        parts = [self.ctx.format_elem(self.unit)]
        parts += [f"({p.poly!r})^{m}" for p, m in self.factors]
        return "Factorization(" + " * ".join(parts) + ")"


# ------------------------------------------------------------- irreducibility

def is_irreducible(f):
    """Rabin test: t^(q^d) = t mod f and trivial gcd at each maximal proper
    power; constants and zero are rejected."""
    if f.degree < 1:
        raise ValueError("irreducibility is asked of nonconstant polynomials")
    fm = f.monic()
    return kern.poly_is_irreducible(f.ctx.kf, list(fm.coeffs))


def _pth_root_poly(f):
    # f = g(t^p) with p-th-power coefficients; returns g
    ctx = f.ctx
    p = ctx.p
    out = []
    for i, c in enumerate(f.coeffs):
        if i % p == 0:
            out.append(ctx.pth_root(c))
        elif c:
            raise AssertionError("not a polynomial in t^p")
    return Poly(ctx, out)


def _squarefree_parts(fm):
    """Multiplicity decomposition of a monic polynomial in characteristic p:
    list of (squarefree monic part, multiplicity)."""
    out = []

    def rec(f, scale):
        if f.degree < 1:
            return
        d = f.derivative()
        if d.is_zero:
            rec(_pth_root_poly(f), scale * f.ctx.p)
            return
        c = f.gcd(d)
        w = f // c
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            z = w // y
            if z.degree > 0:
                out.append((z, i * scale))
            i += 1
            w = y
            c = c // y
        if c.degree > 0:
            rec(_pth_root_poly(c), scale * f.ctx.p)

    rec(fm, 1)
    return out


def _distinct_degree(v):
    # v monic squarefree; returns [(product of degree-d primes, d)]
    ctx = v.ctx
    t = Poly.t(ctx)
    out = []
    h = t % v
    d = 1
    while 2 * d <= v.degree:
        h = h.powmod(ctx.q, v)
        g = (h - t).gcd(v)
        if g.degree > 0:
            out.append((g, d))
            v = v // g
            if v.degree == 0:
                return out
            h = h % v
        d += 1
    if v.degree > 0:
        out.append((v, v.degree))
    return out


def _random_poly(ctx, deg_bound, rng):
    return Poly(ctx, [rng.randrange(ctx.q) for _ in range(deg_bound)])


def _equal_degree(g, d, rng):
    # g monic, product of distinct degree-d primes
    if g.degree == d:
        return [g]
    ctx = g.ctx
    k = g.degree
    while True:
        a = _random_poly(ctx, k, rng)
        if a.degree < 1:
            continue
        h = a.gcd(g)
        if 0 < h.degree < k:
            break
        if ctx.p != 2:
            b = a.powmod((ctx.q**d - 1) // 2, g) - Poly.one(ctx)
        else:
            acc = a % g
            u = acc
            for _ in range(ctx.e * d - 1):
                u = u.powmod(2, g)
                acc = acc + u
            b = acc
        h = b.gcd(g)
        if 0 < h.degree < k:
            break
    return _equal_degree(h, d, rng) + _equal_degree(g // h.monic(), d, rng)


def factor(f, seed=0):
    """Full factorization unit * prod(P_i^(e_i)); deterministic output
    ordering by (degree, index) regardless of the splitting seed."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no factorization")
    ctx = f.ctx
    unit = f.coeffs[-1]
    if f.degree == 0:
        return Factorization(ctx, unit, ())
    fm = f.monic()
    rng = random.Random(seed)
    found = {}
    for part, mult in _squarefree_parts(fm):
        for batch, d in _distinct_degree(part):
            for prime in _equal_degree(batch.monic(), d, rng):
                found[prime.monic()] = mult
    factors = [(PrimePoly(g, _trusted=True), m) for g, m in found.items()]
    factors.sort(key=lambda pm: pm[0].sort_key())
    result = Factorization(ctx, unit, factors)
    if result.value() != f:
        raise AssertionError("factorization failed to re-multiply")
    return result


# ---------------------------------------------------------------- enumeration

def _mobius(n):
    primes = prime_divisors(n)
    m = 1
    for r in primes:
        m *= r
    if m != n:
        return 0
    return -1 if len(primes) % 2 else 1


def count_irreducibles(ctx, n):
    """Number of monic irreducibles of degree n: (1/n) sum mu(d) q^(n/d)."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    q = ctx.q
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += _mobius(d) * q ** (n // d)
            if d != n // d:
                total += _mobius(n // d) * q**d
        d += 1
    if total % n:
        raise AssertionError("irreducible count is not integral")
    return total // n


def monic_by_index(ctx, n, idx):
    """The monic degree-n polynomial with enumeration index idx."""
    if not 0 <= idx < ctx.q**n:
        raise ValueError("index out of range")
    digits = []
    for _ in range(n):
        digits.append(idx % ctx.q)
        idx //= ctx.q
    return Poly(ctx, digits + [1])


def enumerate_irreducibles(ctx, n, budget=None):
    """Monic irreducibles of degree n in index order; exhaustive scan of
    all q^n monic candidates, guarded by the enumeration budget."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if budget is None:
        budget = DEFAULT_ENUM_BUDGET
    total = ctx.q**n
    if total > budget:
        raise BudgetExceeded(total, budget)
    return _irreducible_gen(ctx, n, total)


def _irreducible_gen(ctx, n, total):
    for lo in range(0, total, SCAN_CHUNK):
        hits = kern.scan_irreducibles(ctx.kf, n, lo, min(lo + SCAN_CHUNK, total))
        for idx in hits:
            yield PrimePoly(monic_by_index(ctx, n, idx), _trusted=True)


# ----------------------------------------------------------- partial fractions

def ext_gcd(a, b):
    """(g, u, v) with u*a + v*b = g, g the monic gcd."""
    ctx = a.ctx
    r0, r1 = a, b
    u0, u1 = Poly.one(ctx), Poly.zero(ctx)
    v0, v1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero:
        return r0, u0, v0
    lc = r0.coeffs[-1]
    if lc != 1:
        inv = ctx.inv(lc)
        r0, u0, v0 = r0.scale(inv), u0.scale(inv), v0.scale(inv)
    return r0, u0, v0


def partial_fractions(d, seed=0):
    """Split d = f + sum Q_i / P_i^(e_i) with deg Q_i < deg P_i^(e_i) and
    gcd(Q_i, P_i) = 1; returns (parts, f) with parts sorted by prime."""
    if isinstance(d, Poly):
        d = RatFunc(d)
    f, rem = divmod(d.num, d.den)
    parts = []
    if d.den.degree > 0:
        fac = factor(d.den, seed=seed)
        for prime, mult in fac.factors:
            pe = prime.poly**mult
            other = d.den // pe
            g, u, _ = ext_gcd(other % pe, pe)
            if g.degree != 0:
                raise AssertionError("denominator cofactor not invertible")
            inv = u.scale(d.num.ctx.inv(g.coeffs[0])) % pe
            numer = (rem * inv) % pe
            parts.append((prime, mult, numer))
        recheck = Poly.zero(d.num.ctx)
        for prime, mult, numer in parts:
            recheck = recheck + numer * (d.den // prime.poly**mult)
        if recheck != rem:
            raise AssertionError("partial fractions failed to re-sum")
    return parts, f

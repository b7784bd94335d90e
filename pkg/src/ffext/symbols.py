"""Residue symbols at finite primes of F_q(t).

The m-th power residue symbol of a at P (P irreducible, m a prime
divisor of q-1) is the unique m-th root of unity congruent to
a^((NP-1)/m) mod P, where NP = q^deg(P); it is reported as the exponent
k with value = root_of_unity(m)^k, or Zero when P | a.

The additive analogue for D in F_q(t) with ord_P(D) >= 0 is the absolute
trace to F_p of D mod P.  Two routes are implemented: the composed trace
(residue field to F_q, then F_q to F_p) and the full Frobenius power sum
sum_{i < e*deg(P)} D^(p^i) mod P; they agree everywhere.
"""

from dataclasses import dataclass

from .errors import PoleAtPrime, RamifiedPrime
from .polyring import Poly, RatFunc


@dataclass(frozen=True)
class SymbolValue:
    """Power residue symbol: Zero (exponent None) or root_of_unity(m)^exponent."""

    exponent: int | None
    modulus: int

    @classmethod
    def zero(cls, m):
        return cls(None, m)

    @classmethod
    def unit(cls, k, m):
        return cls(k % m, m)

    @property
    def is_zero(self):
        return self.exponent is None

    def __str__(self):
        return "Zero" if self.is_zero else f"Unit({self.exponent})"


@dataclass(frozen=True)
class HasseValue:
    """Additive symbol: an element of F_p."""

    value: int
    p: int

    @property
    def is_split(self):
        return self.value == 0

    def __str__(self):
        return str(self.value)


def power_residue_symbol(a, prime, m):
    """SymbolValue of a at prime; Zero iff prime divides a."""
    ctx = a.ctx
    ctx._check_subgroup_order(m)
    if a.is_zero:
        return SymbolValue.zero(m)
    r = a % prime.poly
    if r.is_zero:
        return SymbolValue.zero(m)
    c = r.powmod((prime.np - 1) // m, prime.poly)
    if c.degree > 0:
        raise AssertionError("power residue value not constant")
    code = c.coeff(0)
    eta = ctx.root_of_unity(m)
    val = 1
    for k in range(m):
        if code == val:
            return SymbolValue.unit(k, m)
        val = ctx.mul(val, eta)
    raise AssertionError("power residue value outside the order-m subgroup")


def symbol_is_split(a, prime, m):
    """True iff the symbol of a at prime is the trivial root of unity.

    Asking this at a prime dividing a is refused: the place is ramified
    (or the data invalid), not split or inert.
    """
    s = power_residue_symbol(a, prime, m)
    if s.is_zero:
        raise RamifiedPrime(f"{prime!r} divides the element; split/inert is undefined")
    return s.exponent == 0


def _residue(d, prime):
    if isinstance(d, Poly):
        d = RatFunc(d)
    if (d.den % prime.poly).is_zero:
        raise PoleAtPrime(f"{d!r} has a pole at {prime!r}")
    rn = d.num % prime.poly
    if rn.is_zero:
        return Poly.zero(d.ctx), d
    rd = d.den % prime.poly
    inv = rd.powmod(prime.np - 2, prime.poly) if prime.np > 2 else rd
    return (rn * inv) % prime.poly, d


def hasse_symbol(d, prime):
    """HasseValue of d at prime, via the composed trace."""
    r, d = _residue(d, prime)
    ctx = d.ctx
    acc = r
    u = r
    for _ in range(prime.deg - 1):
        u = u.powmod(ctx.q, prime.poly)
        acc = acc + u
    if acc.degree > 0:
        raise AssertionError("residue-field trace not constant")
    return HasseValue(ctx.trace_to_prime(acc.coeff(0)), ctx.p)


def hasse_symbol_power_sum(d, prime):
    """Same value as hasse_symbol, via sum_{i < e*deg} D^(p^i) mod P."""
    r, d = _residue(d, prime)
    ctx = d.ctx
    acc = r
    u = r
    for _ in range(ctx.e * prime.deg - 1):
        u = u.powmod(ctx.p, prime.poly)
        acc = acc + u
    if acc.degree > 0:
        raise AssertionError("Frobenius power sum not constant")
    code = acc.coeff(0)
    if code >= ctx.p:
        raise AssertionError("Frobenius power sum outside F_p")
    return HasseValue(code, ctx.p)


def hasse_is_split(d, prime):
    """True iff the additive symbol of d at prime vanishes."""
    return hasse_symbol(d, prime).value == 0

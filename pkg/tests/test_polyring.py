import random

import pytest

from ffext.errors import BudgetExceeded, ReduciblePolynomial
from ffext.field import FieldCtx
from ffext.polyring import (
    DEFAULT_ENUM_BUDGET,
    Poly,
    PrimePoly,
    RatFunc,
    count_irreducibles,
    enumerate_irreducibles,
    ext_gcd,
    factor,
    is_irreducible,
    monic_by_index,
    partial_fractions,
)
import reference
from reference import NaiveField

CTXS = [FieldCtx(2), FieldCtx(3), FieldCtx(5), FieldCtx(2, 2), FieldCtx(3, 2)]


def naive(ctx):
    gen = ctx.exp_table[1] if ctx.q > 2 else 1
    return NaiveField(ctx.p, ctx.e, ctx.modulus, gen)


def rand_poly(rng, ctx, maxdeg, nonzero=False):
    d = rng.randrange(-1, maxdeg + 1)
    if d < 0:
        if nonzero:
            d = 0
        else:
            return Poly.zero(ctx)
    codes = [rng.randrange(ctx.q) for _ in range(d)] + [rng.randrange(1, ctx.q)]
    return Poly(ctx, codes)


def test_construction_normalizes():
    ctx = FieldCtx(5)
    f = Poly(ctx, [1, 2, 0, 0])
    assert f.coeffs == (1, 2)
    assert f.degree == 1 and f.lc == 2
    assert Poly.zero(ctx).is_zero
    assert Poly.one(ctx).coeffs == (1,)
    assert Poly.t(ctx).coeffs == (0, 1)
    assert Poly.monomial(ctx, 3, 2).coeffs == (0, 0, 0, 2)
    with pytest.raises(ValueError):
        Poly(ctx, [7])


@pytest.mark.parametrize("ctx", CTXS, ids=lambda c: f"F{c.q}")
def test_ring_ops_match_naive(ctx):
    rng = random.Random(5)
    F = naive(ctx)
    for _ in range(120):
        a = rand_poly(rng, ctx, 6)
        b = rand_poly(rng, ctx, 4)
        assert list((a + b).coeffs) == reference.padd(F, list(a.coeffs), list(b.coeffs))
        assert list((a - b).coeffs) == reference.psub(F, list(a.coeffs), list(b.coeffs))
        assert list((a * b).coeffs) == reference.pmul(F, list(a.coeffs), list(b.coeffs))
        if not b.is_zero:
            q, r = divmod(a, b)
            qq, rr = reference.pdivmod(F, list(a.coeffs), list(b.coeffs))
            assert list(q.coeffs) == qq and list(r.coeffs) == rr
            assert q * b + r == a
            assert r.is_zero or r.degree < b.degree


@pytest.mark.parametrize("ctx", CTXS, ids=lambda c: f"F{c.q}")
def test_pow_gcd_powmod(ctx):
    rng = random.Random(6)
    F = naive(ctx)
    for _ in range(60):
        a = rand_poly(rng, ctx, 5)
        b = rand_poly(rng, ctx, 4)
        n = rng.randrange(0, 7)
        assert list((a**n).coeffs) == reference.ppow(F, list(a.coeffs), n)
        g = a.gcd(b)
        if not (a.is_zero and b.is_zero):
            assert g.is_zero == (a.is_zero and b.is_zero)
        if not g.is_zero:
            assert g.is_monic
            assert (a % g).is_zero and (b % g).is_zero
        mod = rand_poly(rng, ctx, 4, nonzero=True)
        if mod.degree >= 1:
            k = rng.randrange(0, 60)
            assert list(a.powmod(k, mod).coeffs) == reference.ppowmod(
                F, list(a.coeffs), k, list(mod.coeffs)
            )


def test_derivative_and_evaluate():
    ctx = FieldCtx(3)
    f = Poly(ctx, [1, 2, 0, 1])  # 1 + 2t + t^3
    assert f.derivative().coeffs == (2,)  # 3t^2 vanishes in char 3
    for x in range(3):
        want = (1 + 2 * x + x**3) % 3
        assert f.evaluate(x) == want
    g = Poly(ctx, [0, 1]) ** 3
    assert g.derivative().is_zero


def test_monic_and_scale():
    ctx = FieldCtx(5)
    f = Poly(ctx, [2, 4])
    mf = f.monic()
    assert mf.is_monic and mf == f.scale(ctx.inv(4))
    with pytest.raises(ValueError):
        Poly.zero(ctx).monic()


@pytest.mark.parametrize("ctx", CTXS, ids=lambda c: f"F{c.q}")
def test_is_irreducible_matches_naive(ctx):
    F = naive(ctx)
    for n in (1, 2, 3):
        if ctx.q**n > 200:
            continue
        for codes in reference.monics(F, n):
            f = Poly(ctx, codes)
            assert is_irreducible(f) == reference.is_irreducible(F, codes), codes


@pytest.mark.parametrize("ctx", CTXS, ids=lambda c: f"F{c.q}")
def test_count_matches_enumeration(ctx):
    F = naive(ctx)
    for n in (1, 2, 3):
        if ctx.q**n > 200:
            continue
        assert count_irreducibles(ctx, n) == reference.pi_count(F, n)


@pytest.mark.parametrize("ctx", CTXS, ids=lambda c: f"F{c.q}")
def test_count_satisfies_weighted_identity(ctx):
    # sum over d | N of d * pi(d) counts roots of t^(q^N) - t
    for n in range(1, 9):
        total = sum(
            d * count_irreducibles(ctx, d) for d in range(1, n + 1) if n % d == 0
        )
        assert total == ctx.q**n


def test_monic_by_index_roundtrip():
    ctx = FieldCtx(3)
    seen = set()
    for idx in range(27):
        f = monic_by_index(ctx, 3, idx)
        assert f.is_monic and f.degree == 3
        seen.add(f.coeffs)
    assert len(seen) == 27
    assert monic_by_index(ctx, 2, 5).coeffs == (2, 1, 1)


def test_enumerate_irreducibles():
    ctx = FieldCtx(2)
    got = {p.poly.coeffs for p in enumerate_irreducibles(ctx, 3)}
    assert got == {(1, 1, 0, 1), (1, 0, 1, 1)}
    for p in enumerate_irreducibles(ctx, 4):
        assert p.deg == 4 and p.np == 16
    with pytest.raises(BudgetExceeded) as ei:
        list(enumerate_irreducibles(ctx, 40, budget=1000))
    assert ei.value.required == 2**40
    assert ei.value.budget == 1000


def test_default_budget_is_large():
    assert DEFAULT_ENUM_BUDGET >= 10**7


@pytest.mark.parametrize("ctx", CTXS, ids=lambda c: f"F{c.q}")
def test_factor_reconstructs_and_certifies(ctx):
    rng = random.Random(13)
    F = naive(ctx)
    for _ in range(25):
        f = rand_poly(rng, ctx, 6, nonzero=True)
        fac = factor(f, seed=1)
        assert fac.value() == f
        for prime, mult in fac.factors:
            assert mult >= 1
            assert reference.is_irreducible(F, list(prime.poly.coeffs))
        keys = [p.sort_key() for p, _ in fac.factors]
        assert keys == sorted(keys)
        assert len({p.poly.coeffs for p, _ in fac.factors}) == len(fac.factors)


def test_factor_handles_pure_powers():
    ctx = FieldCtx(2)
    t = Poly.t(ctx)
    f = (t * (t + Poly.one(ctx))) ** 4
    fac = factor(f)
    assert sorted(m for _, m in fac.factors) == [4, 4]
    assert fac.value() == f


def test_prime_poly_validation():
    ctx = FieldCtx(3)
    t = Poly.t(ctx)
    with pytest.raises(ReduciblePolynomial) as ei:
        PrimePoly(t * t)
    assert ei.value.factor == t
    with pytest.raises(ValueError):
        PrimePoly(t.scale(2))  # not monic
    with pytest.raises(ValueError):
        PrimePoly(Poly.one(ctx))
    p = PrimePoly(Poly(ctx, [1, 0, 1]))
    assert p.deg == 2 and p.np == 9
    assert p.divides(Poly(ctx, [1, 0, 1]) * t)
    assert not p.divides(t)


def test_prime_poly_ordering():
    ctx = FieldCtx(3)
    primes = list(enumerate_irreducibles(ctx, 1)) + list(enumerate_irreducibles(ctx, 2))
    assert sorted(primes) == primes
    assert primes[0].poly.coeffs == (0, 1)


def test_ratfunc_normalization():
    ctx = FieldCtx(5)
    t = Poly.t(ctx)
    one = Poly.one(ctx)
    r = RatFunc(t * t - one, (t - one).scale(2))
    # reduced and monic denominator
    assert r.den.is_monic
    assert r.num.gcd(r.den).degree == 0
    assert r == RatFunc((t + one).scale(ctx.inv(2)), one)
    with pytest.raises(ZeroDivisionError):
        RatFunc(one, Poly.zero(ctx))
    assert (RatFunc(t) + RatFunc(one, t)).num == t * t + one


def test_ratfunc_arithmetic_closes():
    ctx = FieldCtx(3)
    rng = random.Random(15)
    for _ in range(40):
        a = RatFunc(rand_poly(rng, ctx, 3), rand_poly(rng, ctx, 2, nonzero=True))
        b = RatFunc(rand_poly(rng, ctx, 3), rand_poly(rng, ctx, 2, nonzero=True))
        s = a + b
        assert s - b == a
        p = a * b
        if not b.num.is_zero:
            assert p / b == a
        assert -(-a) == a
        assert a**2 == a * a
        if not a.num.is_zero:
            assert a**-1 == RatFunc(a.den, a.num)


def test_ext_gcd_identity():
    ctx = FieldCtx(5)
    rng = random.Random(21)
    for _ in range(40):
        a = rand_poly(rng, ctx, 5)
        b = rand_poly(rng, ctx, 4)
        if a.is_zero and b.is_zero:
            continue
        g, u, v = ext_gcd(a, b)
        assert u * a + v * b == g
        assert g == a.gcd(b) or (g.is_zero and a.is_zero and b.is_zero)


@pytest.mark.parametrize("ctx", CTXS, ids=lambda c: f"F{c.q}")
def test_partial_fractions_reconstruct(ctx):
    rng = random.Random(33)
    for _ in range(25):
        num = rand_poly(rng, ctx, 4)
        den = rand_poly(rng, ctx, 4, nonzero=True)
        d = RatFunc(num, den)
        parts, tail = partial_fractions(d)
        acc = RatFunc(tail)
        for prime, mult, numer in parts:
            assert 1 <= mult
            assert numer.degree < prime.poly.degree * mult
            assert not prime.divides(numer) or numer.is_zero is False
            assert numer.gcd(prime.poly).degree == 0
            acc = acc + RatFunc(numer, prime.poly**mult)
        assert acc == d
        # one entry per prime
        names = [p.poly.coeffs for p, _, _ in parts]
        assert len(set(names)) == len(names)

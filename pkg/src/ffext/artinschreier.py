"""Canonical reduction modulo the additive map x -> x^p - x, and degrees of
the extensions it generates.

Every D in k = F_q(t) is congruent, modulo subtracting images x^p - x, to a
unique canonical form: partial-fraction components A_j / P^j with p not
dividing any order j, a sparse polynomial tail with p dividing no degree,
and a constant collapsed to its absolute trace.  Uniqueness makes the form
a linear coordinate system for k modulo the image, which is exactly what
the degree count p^(l-r) for k(roots of x^p - x = D_i) needs: r is the
dimension of the tuple space {a : sum a_i D_i is an image}, read off as a
matrix kernel over F_p.

The canonical form here is deliberately stronger than the minimal "no
p-divisible leading pole order, p not dividing deg f" shape: interior
p-divisible components are removed too, and the constant keeps only its
trace.  The minimal shape is not unique per congruence class; this one is
(two such forms in the same class differ by a constant of zero trace),
and uniqueness is what makes the coordinate map well-defined.
"""

import enum
from dataclasses import dataclass, field as dc_field

from . import linalg
from .polyring import Poly, RatFunc, partial_fractions


class InfinitePlace(enum.Enum):
    REAL = "Real"
    INERT_IMAGINARY = "InertImaginary"
    RAMIFIED_IMAGINARY = "RamifiedImaginary"

    def __str__(self):
        return self.value


@dataclass(frozen=True, eq=True)
class NormalForm:
    """Canonical representative of D modulo {x^p - x}.

    local_parts: ((prime, ((j, A_j), ...)), ...) sorted by prime then j,
    every j >= 1 with p not dividing j, every A_j nonzero of degree below
    deg(prime).  poly_part: ((degree, coefficient code), ...) ascending,
    every degree >= 1 and prime to p.  const_trace: element of F_p.  The
    witness x satisfies D = value() + (x^p - x) exactly, where value()
    embeds const_trace as the smallest-code constant with that trace; two
    NormalForms compare equal on canonical content alone, witness ignored.
    """

    ctx: object
    local_parts: tuple
    poly_part: tuple
    const_trace: int
    witness: object = dc_field(compare=False)

    @property
    def const_code(self):
        return self.ctx.trace_preimage(self.const_trace)

    @property
    def is_trivial(self):
        return not self.local_parts and not self.poly_part and self.const_trace == 0

    def value(self):
        out = RatFunc.from_poly(self._tail())
        for prime, levels in self.local_parts:
            for j, a in levels:
                out = out + RatFunc(a, prime.poly**j)
        return out

    def _tail(self):
        coeffs = [0] * (1 + max((n for n, _ in self.poly_part), default=0))
        coeffs[0] = self.const_code
        for n, c in self.poly_part:
            coeffs[n] = c
        return Poly(self.ctx, coeffs)

    def check_reconstruction(self, d):
        if isinstance(d, Poly):
            d = RatFunc(d)
        return self.value() + (self.witness**self.ctx.p - self.witness) == d

    def merged(self, other):
        """NormalForm of d1 + d2 computed componentwise, witness included."""
        if self.ctx != other.ctx:
            raise ValueError("normal forms over different fields")
        ctx = self.ctx
        local = {}
        for nf in (self, other):
            for prime, levels in nf.local_parts:
                acc = local.setdefault(prime, {})
                for j, a in levels:
                    s = acc.get(j, Poly.zero(ctx)) + a
                    if s.is_zero:
                        acc.pop(j, None)
                    else:
                        acc[j] = s
        poly = {}
        for nf in (self, other):
            for n, c in nf.poly_part:
                s = ctx.add(poly.get(n, 0), c)
                if s:
                    poly[n] = s
                else:
                    poly.pop(n, None)
        trace = (self.const_trace + other.const_trace) % ctx.p
        witness = self.witness + other.witness
        drift = ctx.sub(ctx.add(self.const_code, other.const_code),
                        ctx.trace_preimage(trace))
        return _assemble(ctx, local, poly, trace, witness, drift)

    def scaled(self, a):
        """NormalForm of a*d for a in the prime subfield."""
        ctx = self.ctx
        a %= ctx.p
        if a == 0:
            return NormalForm(ctx, (), (), 0, RatFunc.zero(ctx))
        local = {
            prime: {j: comp.scale(a) for j, comp in levels}
            for prime, levels in self.local_parts
        }
        poly = {n: ctx.mul(c, a) for n, c in self.poly_part}
        trace = (self.const_trace * a) % ctx.p
        witness = self.witness * RatFunc.from_poly(Poly.constant(ctx, a))
        drift = ctx.sub(ctx.mul(self.const_code, a), ctx.trace_preimage(trace))
        return _assemble(ctx, local, poly, trace, witness, drift)


def _assemble(ctx, local, poly, trace, witness, drift_code=0):
    # drift_code: trace-zero constant to fold into the witness
    if drift_code:
        extra = ctx.solve_artin_schreier_const(drift_code)
        if extra is None:
            raise AssertionError("constant drift must have zero trace")
        witness = witness + RatFunc.from_poly(Poly.constant(ctx, extra.code))
    local_t = tuple(
        (prime, tuple(sorted(local[prime].items())))
        for prime in sorted(local)
        if local[prime]
    )
    poly_t = tuple(sorted(poly.items()))
    return NormalForm(ctx, local_t, poly_t, trace % ctx.p, witness)


def _padic_digits(numer, prime):
    # numer = sum digits[i] * prime^i with deg(digit) < deg(prime)
    digits = []
    while not numer.is_zero:
        numer, rem = divmod(numer, prime.poly)
        digits.append(rem)
    return digits


def _deposit(local_levels, spill, prime, level, amount):
    # add amount / prime^level; digits below level 1 land in the spill poly
    for i, digit in enumerate(_padic_digits(amount, prime)):
        if digit.is_zero:
            continue
        j = level - i
        if j >= 1:
            s = local_levels.get(j, Poly.zero(digit.ctx)) + digit
            if s.is_zero:
                local_levels.pop(j, None)
            else:
                local_levels[j] = s
        else:
            spill[0] = spill[0] + digit * prime.poly ** (-j)
    return spill


def as_normalize(d, seed=0):
    """Canonical form of D modulo {x^p - x}, with an exact witness.

    Local reduction at a prime P of degree n: while the largest active
    order j has p | j, replace A_j/P^j by its congruent tail.  B is the
    p-th root of A_j in the residue field (the q^n/p power), so that
    (B/P^(j/p))^p - B/P^(j/p) agrees with A_j/P^j up to terms of lower
    order; the difference redistributes P-adically.  The largest
    p-divisible active order strictly decreases, so this terminates.
    The polynomial tail reduces the same way with p-th roots in F_q, and
    the remaining constant keeps only its trace.
    """
    if isinstance(d, Poly):
        d = RatFunc(d)
    ctx = d.ctx
    p = ctx.p
    witness = RatFunc.zero(ctx)
    parts, f = partial_fractions(d, seed=seed)
    spill = [f]

    local = {}
    for prime, mult, numer in parts:
        levels = local.setdefault(prime, {})
        _deposit(levels, spill, prime, mult, numer)

    for prime in sorted(local):
        levels = local[prime]
        n = prime.deg
        root_pow = ctx.q**n // p
        previous = None
        while True:
            divisible = [j for j in levels if j % p == 0]
            if not divisible:
                break
            j = max(divisible)
            if previous is not None and j >= previous:
                raise AssertionError("local reduction is not making progress")
            previous = j
            a = levels.pop(j)
            b = a.powmod(root_pow, prime.poly)
            carry, rem = divmod(a - b**p, prime.poly)
            if not rem.is_zero:
                raise AssertionError("p-th root defect not divisible by the prime")
            _deposit(levels, spill, prime, j - 1, carry)
            _deposit(levels, spill, prime, j // p, b)
            witness = witness + RatFunc(b, prime.poly ** (j // p))

    tail = {}
    for n, c in enumerate(spill[0].coeffs):
        if c:
            tail[n] = c
    while True:
        divisible = [n for n in tail if n >= 1 and n % p == 0]
        if not divisible:
            break
        n = max(divisible)
        a = tail.pop(n)
        b = ctx.pth_root(a)
        s = ctx.add(tail.get(n // p, 0), b)
        if s:
            tail[n // p] = s
        else:
            tail.pop(n // p, None)
        witness = witness + RatFunc.from_poly(Poly.monomial(ctx, n // p, b))

    c = tail.pop(0, 0)
    trace = ctx.trace_to_prime(c)
    drift = ctx.sub(c, ctx.trace_preimage(trace))
    nf = _assemble(ctx, local, tail, trace, witness, drift)
    if not nf.check_reconstruction(d):
        raise AssertionError("normal form failed exact reconstruction")
    return nf


def artin_schreier_preimage(d, seed=0):
    """The x with x^p - x = D, if one exists in F_q(t); None otherwise."""
    nf = as_normalize(d, seed=seed)
    if not nf.is_trivial:
        return None
    return nf.witness


def classify_infinite_place(d, seed=0):
    """Behavior of the place at infinity of the cover y^p - y = D.

    Real when the canonical polynomial tail vanishes entirely, inert
    imaginary when only a no-solution constant remains, ramified
    imaginary when a nonconstant tail survives.
    """
    nf = d if isinstance(d, NormalForm) else as_normalize(d, seed=seed)
    if nf.poly_part:
        return InfinitePlace.RAMIFIED_IMAGINARY
    if nf.const_trace:
        return InfinitePlace.INERT_IMAGINARY
    return InfinitePlace.REAL


def ramified_finite_primes(d, seed=0):
    """Primes whose local part survives canonical reduction."""
    nf = d if isinstance(d, NormalForm) else as_normalize(d, seed=seed)
    return {prime for prime, _ in nf.local_parts}


# ---------------------------------------------------------------- instances

@dataclass(frozen=True)
class ASInstance:
    """S = {D_1, ..., D_l} in F_q(t), all nonzero."""

    ctx: object
    elements: tuple

    def __init__(self, ctx, elements):
        elems = []
        for d in elements:
            if isinstance(d, Poly):
                d = RatFunc(d)
            if not isinstance(d, RatFunc):
                raise ValueError("elements must be rational functions")
            if d.ctx != ctx:
                raise ValueError("element over a different field")
            if d.is_zero:
                raise ValueError("zero elements are not allowed")
            elems.append(d)
        if not elems:
            raise ValueError("at least one element is required")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "elements", tuple(elems))

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class RootComboWitness:
    """sum vector[i]*D_i = preimage^p - preimage + constant, re-verifiable."""

    vector: tuple
    preimage: object
    constant: int

    def combo(self, instance):
        ctx = instance.ctx
        out = RatFunc.zero(ctx)
        for d, a in zip(instance.elements, self.vector):
            if a:
                out = out + d * RatFunc.from_poly(Poly.constant(ctx, a % ctx.p))
        return out

    def verify(self, instance):
        ctx = instance.ctx
        x = self.preimage
        rhs = x**ctx.p - x + RatFunc.from_poly(Poly.constant(ctx, self.constant))
        return self.combo(instance) == rhs


@dataclass(frozen=True)
class ASReport:
    instance: ASInstance
    normal_forms: tuple
    column_labels: tuple
    matrix: tuple
    kernel_basis: tuple
    kernel_dim: int
    trivial_combo_count: int
    degree: int
    geometric: bool
    witnesses: tuple
    non_geometric_witnesses: tuple
    seed: int


def _coordinate_columns(ctx, nfs):
    prime_levels = sorted(
        {(prime, j) for nf in nfs for prime, levels in nf.local_parts for j, _ in levels},
        key=lambda pj: (pj[0].sort_key(), pj[1]),
    )
    inf_degrees = sorted({n for nf in nfs for n, _ in nf.poly_part})
    labels = []
    for prime, j in prime_levels:
        for i in range(prime.deg * ctx.e):
            labels.append(("prime", prime, j, i))
    for n in inf_degrees:
        for i in range(ctx.e):
            labels.append(("infinity", n, i))
    labels.append(("const",))
    return prime_levels, inf_degrees, labels


def _coordinates(ctx, nf, prime_levels, inf_degrees):
    row = []
    local = {prime: dict(levels) for prime, levels in nf.local_parts}
    for prime, j in prime_levels:
        comp = local.get(prime, {}).get(j)
        codes = list(comp.coeffs) if comp is not None else []
        codes += [0] * (prime.deg - len(codes))
        for code in codes:
            row.extend(ctx.digits(code))
    poly = dict(nf.poly_part)
    for n in inf_degrees:
        row.extend(ctx.digits(poly.get(n, 0)))
    row.append(nf.const_trace)
    return row


def artin_schreier_degree_report(instance, seed=0):
    """Exact degree data for x^p - x = D_i covers, with verified witnesses."""
    ctx = instance.ctx
    p = ctx.p
    l = len(instance.elements)
    nfs = [as_normalize(d, seed=seed) for d in instance.elements]
    prime_levels, inf_degrees, labels = _coordinate_columns(ctx, nfs)
    rows = [_coordinates(ctx, nf, prime_levels, inf_degrees) for nf in nfs]

    kernel = [tuple(v) for v in linalg.left_nullspace(rows, p)]
    kernel0 = [tuple(v) for v in linalg.left_nullspace([r[:-1] for r in rows], p)]

    witnesses = [_combo_witness(instance, nfs, v, split_only=True) for v in kernel]
    non_geo = []
    for v in kernel0:
        if sum(a * nf.const_trace for a, nf in zip(v, nfs)) % p:
            non_geo.append(_combo_witness(instance, nfs, v, split_only=False))
    geometric = not non_geo

    r = len(kernel)
    return ASReport(
        instance=instance,
        normal_forms=tuple(nfs),
        column_labels=tuple(labels),
        matrix=tuple(tuple(row) for row in rows),
        kernel_basis=tuple(kernel),
        kernel_dim=r,
        trivial_combo_count=p**r,
        degree=p ** (l - r),
        geometric=geometric,
        witnesses=tuple(witnesses),
        non_geometric_witnesses=tuple(non_geo),
        seed=seed,
    )


def _combo_witness(instance, nfs, v, split_only):
    ctx = instance.ctx
    x = RatFunc.zero(ctx)
    c = 0
    for a, nf in zip(v, nfs):
        if not a:
            continue
        scalar = RatFunc.from_poly(Poly.constant(ctx, a % ctx.p))
        x = x + nf.witness * scalar
        c = ctx.add(c, ctx.mul(nf.const_code, a % ctx.p))
    if split_only:
        extra = ctx.solve_artin_schreier_const(c)
        if extra is None:
            raise AssertionError("kernel combo left a nonzero-trace constant")
        x = x + RatFunc.from_poly(Poly.constant(ctx, extra.code))
        c = 0
    w = RootComboWitness(tuple(v), x, c)
    if not w.verify(instance):
        raise AssertionError("witness failed verification")
    return w


def artin_schreier_degree(instance, seed=0):
    """[k(y_1, ..., y_l) : k] = p^(l - kernel_dim) for y_i^p - y_i = D_i."""
    return artin_schreier_degree_report(instance, seed=seed).degree


def brute_force_trivial_combos(instance, seed=0):
    """Independent count of tuples a with sum a_i D_i an image x^p - x,
    by direct enumeration of all p^l tuples."""
    ctx = instance.ctx
    p = ctx.p
    l = len(instance.elements)
    count = 0
    for idx in range(p**l):
        combo = RatFunc.zero(ctx)
        rest = idx
        for i in range(l):
            a = rest % p
            rest //= p
            if a:
                combo = combo + instance.elements[i] * RatFunc.from_poly(
                    Poly.constant(ctx, a)
                )
        if artin_schreier_preimage(combo, seed=seed) is not None:
            count += 1
    return count

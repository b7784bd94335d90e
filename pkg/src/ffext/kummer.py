"""Degrees of multi-radical extensions k(D_1^(1/m), ..., D_l^(1/m)) of k = F_q(t).

The degree is m^(l-r), where m^r counts the exponent tuples
(a_1, ..., a_l) in (Z/m)^l whose product D_1^a_1 * ... * D_l^a_l is a
perfect m-th power in F_q[t].  Those tuples form the left kernel of the
l x (s+1) matrix whose columns are prime multiplicities mod m over the
support plus the power class of the leading coefficient; the extension
is geometric (adds no constants) iff dropping the leading-coefficient
column does not enlarge that kernel.
"""

from dataclasses import dataclass

from . import linalg
from ._kernels import kern
from .polyring import Poly, factor


# ------------------------------------------------- truncated power series

def _strip(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _smul(kf, a, b, prec):
    return _strip(kern.poly_mul(kf, a, b)[:prec])


def _ssub(kf, a, b):
    return kern.poly_sub(kf, a, b)


def _series_inv(kf, a, prec):
    # Newton inversion; a[0] != 0
    b = [_inv_code(kf, a[0])]
    done = 1
    two = _add_code(kf, 1, 1)
    while done < prec:
        done = min(2 * done, prec)
        ab = _smul(kf, a[:done], b, done)
        corr = _ssub(kf, [two], ab)
        b = _smul(kf, b, corr, done)
    return b


def _inv_code(kf, c):
    if c == 0:
        raise ZeroDivisionError("inversion of zero field element")
    return kf.exp[(kf.q1 - kf.log[c]) % kf.q1]


def _add_code(kf, a, b):
    p = kf.p
    out, mult = 0, 1
    while a or b:
        s = a % p + b % p
        if s >= p:
            s -= p
        out += s * mult
        mult *= p
        a //= p
        b //= p
    return out


def _series_pow(kf, a, n, prec):
    result = [1]
    base = a
    while n:
        if n & 1:
            result = _smul(kf, result, base, prec)
        base = _smul(kf, base, base, prec)
        n >>= 1
    return result


def _series_root(kf, a, m, prec):
    # R with R^m = a mod s^prec, R[0] = 1; requires a[0] = 1 and p not | m
    minv = _inv_code(kf, m % kf.p)
    r = [1]
    done = 1
    while done < prec:
        done = min(2 * done, prec)
        rm1 = _series_pow(kf, r, m - 1, done)
        rm = _smul(kf, rm1, r, done)
        err = _ssub(kf, rm, a[:done])
        if err:
            denom_inv = _series_inv(kf, _scale(kf, rm1, m % kf.p), done)
            r = _ssub(kf, r, _smul(kf, err, denom_inv, done))
    return r


def _scale(kf, a, c):
    if c == 1:
        return a
    lg = kf.log[c]
    return [kf.exp[(kf.log[x] + lg) % kf.q1] if x else 0 for x in a]


def mth_power_test(f, m):
    """The polynomial G with G^m = f, or None.

    Existence needs every prime multiplicity of f divisible by m and an
    m-th root of the leading coefficient; the root is found by a
    truncated-series extraction on the monic part (no factorization) and
    always verified by re-multiplication.  Among the m scalar multiples
    of a root, the one whose leading coefficient has the smallest
    discrete log base primitive_g is returned.
    """
    if f.is_zero:
        raise ValueError("the zero polynomial is not tested for powers")
    ctx = f.ctx
    ctx._check_subgroup_order(m)
    uroot = ctx.mth_root_unit(f.lc, m)
    if uroot is None:
        return None
    if f.degree == 0:
        return Poly.constant(ctx, uroot)
    if f.degree % m:
        return None
    k = f.degree // m
    rev = list(reversed(f.monic().coeffs))
    root_rev = _series_root(ctx.kf, rev[: k + 1], m, k + 1)
    root_rev += [0] * (k + 1 - len(root_rev))
    g = Poly(ctx, list(reversed(root_rev))).scale(uroot)
    if g**m != f:
        return None
    return g


# ---------------------------------------------------------------- instances

@dataclass(frozen=True)
class KummerInstance:
    """S = {D_1, ..., D_l} in F_q[t], all nonzero, and a prime m | q-1."""

    ctx: object
    m: int
    elements: tuple

    def __init__(self, ctx, m, elements):
        ctx._check_subgroup_order(m)
        elems = tuple(elements)
        if not elems:
            raise ValueError("at least one element is required")
        for d in elems:
            if not isinstance(d, Poly):
                raise ValueError("elements must be Polys over the context field")
            if d.ctx != ctx:
                raise ValueError("element over a different field")
            if d.is_zero:
                raise ValueError("zero elements are not allowed")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "elements", elems)

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class PowerComboWitness:
    """prod D_i^vector[i] = constant * root^m, re-verifiable exactly."""

    vector: tuple
    root: object
    constant: int

    def product(self, instance):
        out = Poly.one(instance.ctx)
        for d, a in zip(instance.elements, self.vector):
            if a:
                out = out * d**a
        return out

    def verify(self, instance):
        lhs = self.product(instance)
        rhs = Poly.constant(instance.ctx, self.constant) * self.root ** instance.m
        return lhs == rhs


@dataclass(frozen=True)
class KummerReport:
    instance: KummerInstance
    support: tuple
    matrix: tuple
    kernel_basis: tuple
    kernel_dim: int
    trivial_combo_count: int
    degree: int
    geometric: bool
    witnesses: tuple
    non_geometric_witnesses: tuple
    seed: int


def kummer_degree_report(instance, seed=0):
    """Exact degree data for a Kummer instance, with verified witnesses."""
    ctx, m = instance.ctx, instance.m
    l = len(instance.elements)
    facs = [factor(d, seed=seed) for d in instance.elements]
    support = sorted({p for fac in facs for p, _ in fac.factors})
    sidx = {p: j for j, p in enumerate(support)}
    rows = []
    for fac in facs:
        row = [0] * (len(support) + 1)
        for p, mult in fac.factors:
            row[sidx[p]] = mult % m
        row[-1] = ctx.mth_power_class(fac.unit, m)
        rows.append(row)

    kernel = [tuple(v) for v in linalg.left_nullspace(rows, m)]
    kernel0 = [tuple(v) for v in linalg.left_nullspace([row[:-1] for row in rows], m)]

    witnesses = []
    for v in kernel:
        w = _combo_witness(instance, v, require_power=True)
        witnesses.append(w)

    non_geo = []
    for v in kernel0:
        lc_sum = sum(v[i] * rows[i][-1] for i in range(l)) % m
        if lc_sum:
            non_geo.append(_combo_witness(instance, v, require_power=False))
    geometric = not non_geo

    r = len(kernel)
    return KummerReport(
        instance=instance,
        support=tuple(support),
        matrix=tuple(tuple(row) for row in rows),
        kernel_basis=tuple(kernel),
        kernel_dim=r,
        trivial_combo_count=m**r,
        degree=m ** (l - r),
        geometric=geometric,
        witnesses=tuple(witnesses),
        non_geometric_witnesses=tuple(non_geo),
        seed=seed,
    )


def _combo_witness(instance, v, require_power):
    prod = Poly.one(instance.ctx)
    for d, a in zip(instance.elements, v):
        if a:
            prod = prod * d**a
    if require_power:
        root = mth_power_test(prod, instance.m)
        if root is None:
            raise AssertionError("kernel vector product is not a perfect power")
        w = PowerComboWitness(tuple(v), root, 1)
    else:
        root = mth_power_test(prod.monic(), instance.m)
        if root is None:
            raise AssertionError("support-kernel product has non-divisible multiplicities")
        w = PowerComboWitness(tuple(v), root, prod.lc)
    if not w.verify(instance):
        raise AssertionError("witness failed verification")
    return w


def kummer_degree(instance, seed=0):
    """[k(D_1^(1/m), ..., D_l^(1/m)) : k] = m^(l - kernel_dim)."""
    return kummer_degree_report(instance, seed=seed).degree


def brute_force_trivial_combos(instance):
    """Independent count of tuples with prod D_i^(a_i) a perfect m-th power,
    by direct enumeration of all m^l tuples."""
    m = instance.m
    l = len(instance.elements)
    powers = [[d**a for a in range(m)] for d in instance.elements]
    count = 0
    for idx in range(m**l):
        prod = Poly.one(instance.ctx)
        rest = idx
        for i in range(l):
            prod = prod * powers[i][rest % m]
            rest //= m
        if mth_power_test(prod, m) is not None:
            count += 1
    return count

"""Exhaustive split-density measurements against the 1/[K:k] prediction.

For every monic irreducible P of degree N (ramified/pole primes excluded),
the joint class tuple of the instance elements at P is tallied; the split
fraction (all classes trivial) is compared as an exact Fraction against
gamma/m^l = 1/[K:k] from the degree engines.  Character sums are carried
as integer vectors in cyclotomic coordinates, never floats; floats appear
only in derived display quantities (deviation in units of q^(N/2)/N,
absolute values of sums).
"""

import cmath
import math
import random
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from ._kernels import kern
from .artinschreier import ASInstance, artin_schreier_degree_report
from .errors import BudgetExceeded, NonGeometricExtension, PoleAtPrime
from .kummer import KummerInstance, kummer_degree_report
from .polyring import (
    DEFAULT_ENUM_BUDGET,
    SCAN_CHUNK,
    Poly,
    PrimePoly,
    RatFunc,
    count_irreducibles,
    is_irreducible,
    monic_by_index,
)
from .symbols import hasse_symbol, power_residue_symbol


@dataclass(frozen=True)
class CyclotomicInt:
    """Integer element of Z[zeta_m] on the basis 1, zeta, ..., zeta^(m-2)."""

    m: int
    coords: tuple

    @classmethod
    def zero(cls, m):
        return cls(m, (0,) * (m - 1))

    @classmethod
    def from_class_counts(cls, m, counts):
        # sum counts[k] zeta^k, with zeta^(m-1) = -(1 + zeta + ... + zeta^(m-2))
        if len(counts) != m:
            raise ValueError("need one count per class")
        return cls(m, tuple(counts[k] - counts[m - 1] for k in range(m - 1)))

    @property
    def is_zero(self):
        return not any(self.coords)

    def __add__(self, other):
        if self.m != other.m:
            raise ValueError("mixed cyclotomic orders")
        return CyclotomicInt(self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if self.m != other.m:
            raise ValueError("mixed cyclotomic orders")
        return CyclotomicInt(self.m, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CyclotomicInt(self.m, tuple(-a for a in self.coords))

    def scale(self, n):
        return CyclotomicInt(self.m, tuple(n * a for a in self.coords))

    def __abs__(self):
        z = cmath.exp(2j * cmath.pi / self.m)
        return abs(sum(a * z**k for k, a in enumerate(self.coords)))

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for k, a in enumerate(self.coords):
            if not a:
                continue
            unit = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
            terms.append(f"{a}*{unit}" if k else str(a))
        return " + ".join(terms)


@dataclass(frozen=True)
class DensityRow:
    n: int
    pi: int
    excluded: int
    split_count: int
    fraction: Fraction
    predicted: Fraction
    deviation: Fraction
    deviation_units: float
    class_counts: tuple
    combo_character_sums: tuple


@dataclass(frozen=True)
class DensityReport:
    kind: str
    instance: object
    degree_report: object
    n_values: tuple
    rows: tuple
    degree: int
    trivial_combo_count: int
    geometric: bool
    warning: object
    seed: int
    elapsed_seconds: float = dc_field(compare=False)


NON_GEOMETRIC_WARNING = (
    "extension is not geometric: the density comparison is heuristic; "
    "only the Dirichlet density is predicted to be 1/[K:k]"
)


def _mode(instance):
    if isinstance(instance, KummerInstance):
        return "kummer"
    if isinstance(instance, ASInstance):
        return "artin-schreier"
    raise ValueError("expected a KummerInstance or an ASInstance")


def _scan_histogram(instance, n):
    """Chunked full-degree scan; merged counts are chunk-order independent."""
    ctx = instance.ctx
    kf = ctx.kf
    total = ctx.q**n
    if _mode(instance) == "kummer":
        m = instance.m
        elems = [list(d.coeffs) for d in instance.elements]
        hist = [0] * m ** len(elems)
        excluded = 0
        for start in range(0, total, SCAN_CHUNK):
            part, skipped = kern.kummer_class_scan(
                kf, n, start, min(start + SCAN_CHUNK, total), elems, m
            )
            hist = [a + b for a, b in zip(hist, part)]
            excluded += skipped
    else:
        nums = [list(d.num.coeffs) for d in instance.elements]
        dens = [list(d.den.coeffs) for d in instance.elements]
        hist = [0] * ctx.p ** len(nums)
        excluded = 0
        for start in range(0, total, SCAN_CHUNK):
            part, skipped = kern.hasse_class_scan(
                kf, n, start, min(start + SCAN_CHUNK, total), nums, dens
            )
            hist = [a + b for a, b in zip(hist, part)]
            excluded += skipped
    return hist, excluded


def _class_tuple(idx, m, l):
    out = []
    for _ in range(l):
        out.append(idx % m)
        idx //= m
    return out


def _in_kernel(vec, matrix, m):
    return all(
        sum(a * row[c] for a, row in zip(vec, matrix)) % m == 0
        for c in range(len(matrix[0]))
    ) if matrix and matrix[0] else True


def _check_budget(ctx, ns, budget):
    budget = DEFAULT_ENUM_BUDGET if budget is None else budget
    for n in ns:
        if ctx.q**n > budget:
            raise BudgetExceeded(ctx.q**n, budget)
    return budget


def split_density(instance, n_range, seed=0, budget=None):
    """Measured split fraction per degree against the exact 1/[K:k].

    Budget covers every requested degree up front, so either the whole
    range runs or nothing does.  Non-geometric instances are measured
    anyway and flagged: for them only the Dirichlet density is backed by
    the degree count, so the comparison column is heuristic.
    """
    kind = _mode(instance)
    ctx = instance.ctx
    ns = sorted(set(int(n) for n in n_range))
    if not ns or ns[0] < 1:
        raise ValueError("degree range must contain integers >= 1")
    _check_budget(ctx, ns, budget)
    t0 = time.perf_counter()

    if kind == "kummer":
        exact = kummer_degree_report(instance, seed=seed)
        m = instance.m
    else:
        exact = artin_schreier_degree_report(instance, seed=seed)
        m = ctx.p
    l = len(instance.elements)
    predicted = Fraction(1, exact.degree)

    rows = []
    for n in ns:
        hist, excluded = _scan_histogram(instance, n)
        pi = count_irreducibles(ctx, n)
        if sum(hist) + excluded != pi:
            raise AssertionError("class tallies do not add up to pi(N)")
        split = hist[0]
        eligible = pi - excluded
        fraction = Fraction(split, eligible) if eligible else Fraction(0)
        deviation = abs(fraction - predicted)
        unit = ctx.q ** (n / 2) / n
        class_counts = []
        for i in range(l):
            counts = [0] * m
            for cidx, cnt in enumerate(hist):
                counts[(cidx // m**i) % m] += cnt
            class_counts.append(tuple(counts))
        combos = []
        for aidx in range(1, m**l):
            vec = _class_tuple(aidx, m, l)
            if _in_kernel(vec, exact.matrix, m):
                continue
            counts = [0] * m
            for cidx, cnt in enumerate(hist):
                cls = _class_tuple(cidx, m, l)
                counts[sum(a * c for a, c in zip(vec, cls)) % m] += cnt
            combos.append((tuple(vec), CyclotomicInt.from_class_counts(m, counts)))
        rows.append(
            DensityRow(
                n=n,
                pi=pi,
                excluded=excluded,
                split_count=split,
                fraction=fraction,
                predicted=predicted,
                deviation=deviation,
                deviation_units=float(deviation) / unit,
                class_counts=tuple(class_counts),
                combo_character_sums=tuple(combos),
            )
        )

    return DensityReport(
        kind=kind,
        instance=instance,
        degree_report=exact,
        n_values=tuple(ns),
        rows=tuple(rows),
        degree=exact.degree,
        trivial_combo_count=exact.trivial_combo_count,
        geometric=exact.geometric,
        warning=None if exact.geometric else NON_GEOMETRIC_WARNING,
        seed=seed,
        elapsed_seconds=time.perf_counter() - t0,
    )


# ----------------------------------------------------------- character sums

@dataclass(frozen=True)
class CharacterSumReport:
    n: int
    modulus: int
    degree_scanned: int
    pi: int
    excluded: int
    class_counts: tuple
    value: CyclotomicInt
    bound: int
    ratio: float


def character_sum(element, n, m=None, budget=None):
    """Exact sum of the first m-1 character powers over degree-n primes.

    With m given, the multiplicative character of that order is summed
    for a polynomial element; with m omitted, the additive (trace) class
    of a rational element is summed and the order is p.  The value is the
    cyclotomic embedding of the class-count table: each prime of class k
    contributes zeta^k + zeta^(2k) + ... + zeta^((m-1)k), so split primes
    contribute m-1 and the rest contribute -1.
    """
    if m is not None:
        if isinstance(element, RatFunc):
            element = element.as_poly()
        ctx = element.ctx
        inst = KummerInstance(ctx, m, [element])
    else:
        if isinstance(element, Poly):
            element = RatFunc(element)
        ctx = element.ctx
        m = ctx.p
        inst = ASInstance(ctx, [element])
    _check_budget(ctx, [n], budget)
    hist, excluded = _scan_histogram(inst, n)
    pi = count_irreducibles(ctx, n)
    acc = [0] * m
    for k, cnt in enumerate(hist):
        for j in range(1, m):
            acc[(j * k) % m] += cnt
    value = CyclotomicInt.from_class_counts(m, acc)
    return CharacterSumReport(
        n=n,
        modulus=m,
        degree_scanned=n,
        pi=pi,
        excluded=excluded,
        class_counts=tuple(hist),
        value=value,
        bound=(m - 1) * (pi - excluded),
        ratio=abs(value) / pi if pi else 0.0,
    )


@dataclass(frozen=True)
class ChebotarevCounts:
    n: int
    modulus: int
    pi: int
    excluded: int
    split_count: int
    nonsplit_count: int
    prediction_split: Fraction
    prediction_nonsplit: Fraction
    deviation_units: float


def chebotarev_class_counts(element, n, m=None, seed=0, budget=None):
    """Split/nonsplit counts for a single element against pi(N)/m.

    Refuses non-geometric inputs: the equidistribution statement assumes
    the extension adds no constants, and the witness explains why this
    one does.
    """
    if m is not None:
        if isinstance(element, RatFunc):
            element = element.as_poly()
        ctx = element.ctx
        inst = KummerInstance(ctx, m, [element])
        exact = kummer_degree_report(inst, seed=seed)
    else:
        if isinstance(element, Poly):
            element = RatFunc(element)
        ctx = element.ctx
        m = ctx.p
        inst = ASInstance(ctx, [element])
        exact = artin_schreier_degree_report(inst, seed=seed)
    if not exact.geometric:
        raise NonGeometricExtension(
            "the extension adds constants; class counts are not predicted",
            witness=exact.non_geometric_witnesses[0],
        )
    _check_budget(ctx, [n], budget)
    hist, excluded = _scan_histogram(inst, n)
    pi = count_irreducibles(ctx, n)
    t1 = hist[0]
    t2 = sum(hist[1:])
    if t1 + t2 + excluded != pi:
        raise AssertionError("class tallies do not add up to pi(N)")
    deviation = abs(Fraction(t1) - Fraction(pi, m))
    unit = ctx.q ** (n / 2) / n
    return ChebotarevCounts(
        n=n,
        modulus=m,
        pi=pi,
        excluded=excluded,
        split_count=t1,
        nonsplit_count=t2,
        prediction_split=Fraction(pi, m),
        prediction_nonsplit=Fraction(pi * (m - 1), m),
        deviation_units=float(deviation) / unit,
    )


# ----------------------------------------------------------- sampling mode

@dataclass(frozen=True)
class SampledDensityEstimate:
    """Monte-Carlo estimate, clearly not an exact tally."""

    n: int
    samples: int
    irreducible_draws: int
    excluded_draws: int
    split_hits: int
    estimate: float
    stderr: float
    seed: int


def sampled_split_density(instance, n, samples, seed=0):
    """Estimate of the split fraction at degree n from uniform monic draws.

    For degrees past the exhaustive budget: draws monic polynomials of
    degree n uniformly, keeps the irreducibles, and evaluates the exact
    symbols on those.  The estimate carries a binomial standard error;
    use split_density for anything meant to be exact.
    """
    kind = _mode(instance)
    ctx = instance.ctx
    rng = random.Random(seed)
    total = ctx.q**n
    irr = excluded = hits = 0
    for _ in range(samples):
        f = monic_by_index(ctx, n, rng.randrange(total))
        if not is_irreducible(f):
            continue
        irr += 1
        prime = PrimePoly(f, _trusted=True)
        try:
            if kind == "kummer":
                values = [
                    power_residue_symbol(d, prime, instance.m)
                    for d in instance.elements
                ]
                if any(v.is_zero for v in values):
                    excluded += 1
                    continue
                ok = all(v.exponent == 0 for v in values)
            else:
                ok = all(hasse_symbol(d, prime).value == 0 for d in instance.elements)
        except PoleAtPrime:
            excluded += 1
            continue
        if ok:
            hits += 1
    eligible = irr - excluded
    estimate = hits / eligible if eligible else 0.0
    stderr = (
        math.sqrt(estimate * (1.0 - estimate) / eligible) if eligible else float("inf")
    )
    return SampledDensityEstimate(
        n=n,
        samples=samples,
        irreducible_draws=irr,
        excluded_draws=excluded,
        split_hits=hits,
        estimate=estimate,
        stderr=stderr,
        seed=seed,
    )

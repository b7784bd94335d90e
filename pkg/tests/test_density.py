import cmath
from fractions import Fraction

import pytest

from ffext import (
    ASInstance,
    BudgetExceeded,
    CyclotomicInt,
    FieldCtx,
    KummerInstance,
    NonGeometricExtension,
    character_sum,
    chebotarev_class_counts,
    count_irreducibles,
    sampled_split_density,
    split_density,
)
from ffext.density import NON_GEOMETRIC_WARNING
from ffext.syntax import parse_poly, parse_ratfunc
import reference
from reference import NaiveField


def naive(ctx):
    gen = ctx.exp_table[1] if ctx.q > 2 else 1
    return NaiveField(ctx.p, ctx.e, ctx.modulus, gen)


def kummer(qtexts, m, q=5):
    ctx = FieldCtx(q)
    return ctx, KummerInstance(ctx, m, [parse_poly(ctx, s) for s in qtexts])


def artin(texts, p=3):
    ctx = FieldCtx(p)
    return ctx, ASInstance(ctx, [parse_ratfunc(ctx, s) for s in texts])


# ---------------------------------------------------------- cyclotomic ints

def test_cyclotomic_basics():
    a = CyclotomicInt(3, (2, -1))
    b = CyclotomicInt(3, (1, 4))
    assert (a + b).coords == (3, 3)
    assert (a - b).coords == (1, -5)
    assert (-a).coords == (-2, 1)
    assert a.scale(3).coords == (6, -3)
    assert CyclotomicInt.zero(3).is_zero
    assert not a.is_zero
    with pytest.raises(ValueError):
        a + CyclotomicInt(5, (0, 0, 0, 0))


def test_cyclotomic_from_class_counts_reduces_top_power():
    # counts (c0, c1, c2) embed as c0 + c1 z + c2 z^2 with z^2 = -1 - z
    v = CyclotomicInt.from_class_counts(3, [5, 2, 2])
    assert v.coords == (3, 0)
    # equal counts in every class sum to a rational integer times zero
    assert CyclotomicInt.from_class_counts(3, [4, 4, 4]).coords == (0, 0)
    with pytest.raises(ValueError):
        CyclotomicInt.from_class_counts(3, [1, 2])


def test_cyclotomic_abs_matches_complex_embedding():
    m = 5
    coords = (3, -2, 0, 7)
    v = CyclotomicInt(m, coords)
    z = cmath.exp(2j * cmath.pi / m)
    direct = abs(sum(a * z**k for k, a in enumerate(coords)))
    assert abs(abs(v) - direct) < 1e-12
    # m = 2 embeds as plain integers
    assert abs(CyclotomicInt(2, (-4,))) == 4.0


def test_cyclotomic_str():
    assert str(CyclotomicInt.zero(3)) == "0"
    assert str(CyclotomicInt(3, (2, -1))) == "2 + -1*z"
    assert str(CyclotomicInt(5, (0, 0, 3, 0))) == "3*z^2"


# --------------------------------------------------------- exact densities

def check_kummer_row(ctx, inst, row):
    F = naive(ctx)
    elems = [list(d.coeffs) for d in inst.elements]
    hist, excluded = reference.kummer_split_histogram(F, elems, inst.m, row.n)
    assert row.excluded == excluded
    assert row.pi == reference.pi_count(F, row.n)
    assert row.split_count == hist.get((0,) * len(elems), 0)
    assert sum(hist.values()) + excluded == row.pi
    return hist


def test_kummer_density_counts_match_naive_scan():
    ctx, inst = kummer(["t", "t + 1"], 2)
    rep = split_density(inst, range(1, 4))
    assert rep.kind == "kummer"
    assert rep.degree == 4 and rep.geometric and rep.warning is None
    assert rep.n_values == (1, 2, 3)
    for row in rep.rows:
        hist = check_kummer_row(ctx, inst, row)
        eligible = row.pi - row.excluded
        assert row.fraction == Fraction(row.split_count, eligible)
        assert row.predicted == Fraction(1, 4)
        assert row.deviation == abs(row.fraction - row.predicted)
        unit = ctx.q ** (row.n / 2) / row.n
        assert row.deviation_units == pytest.approx(float(row.deviation) / unit)
        # marginals: forget all but one coordinate of the joint histogram
        for i, counts in enumerate(row.class_counts):
            for k in range(inst.m):
                want = sum(c for cls, c in hist.items() if cls[i] == k)
                assert counts[k] == want
        # trivial kernel: every nonzero combo carries a character sum
        assert {v for v, _ in row.combo_character_sums} == {(1, 0), (0, 1), (1, 1)}


def test_as_density_counts_match_naive_scan():
    ctx, inst = artin(["1/t", "1/(t + 1)"])
    rep = split_density(inst, [1, 2, 3])
    assert rep.kind == "artin-schreier"
    F = naive(ctx)
    nums = [list(d.num.coeffs) for d in inst.elements]
    dens = [list(d.den.coeffs) for d in inst.elements]
    for row in rep.rows:
        hist, excluded = reference.hasse_split_histogram(F, nums, dens, row.n)
        assert row.excluded == excluded
        assert row.split_count == hist.get((0, 0), 0)
        assert sum(hist.values()) + excluded == row.pi
        assert row.pi == reference.pi_count(F, row.n)


def test_density_extension_field():
    ctx = FieldCtx(3, 2)
    inst = KummerInstance(ctx, 2, [parse_poly(ctx, "t"), parse_poly(ctx, "t + u")])
    rep = split_density(inst, [1, 2])
    F = naive(ctx)
    for row in rep.rows:
        check_kummer_row(ctx, inst, row)


def test_combo_character_sums_skip_kernel_and_match_direct_sums():
    # t*(t+1)^2 differs from t by a square, so the product combo (1,1)
    # sits in the kernel and must not be summed; the two singles remain
    ctx, inst = kummer(["t", "t * (t + 1)^2"], 2)
    rep = split_density(inst, [2, 3])
    assert rep.degree == 2
    F = naive(ctx)
    elems = [list(d.coeffs) for d in inst.elements]
    for row in rep.rows:
        hist, _ = reference.kummer_split_histogram(F, elems, 2, row.n)
        combos = dict(row.combo_character_sums)
        assert set(combos) == {(1, 0), (0, 1)}
        for vec, value in combos.items():
            counts = [0, 0]
            for cls, cnt in hist.items():
                counts[sum(a * c for a, c in zip(vec, cls)) % 2] += cnt
            assert value.coords == (counts[0] - counts[1],)


def test_combo_character_sums_empty_when_kernel_is_everything():
    # a perfect square alone: every combo is trivial, nothing to sum
    ctx, inst = kummer(["t^2"], 2)
    rep = split_density(inst, [2])
    assert rep.degree == 1
    assert rep.rows[0].combo_character_sums == ()


def test_density_report_is_deterministic():
    _, inst = kummer(["t", "t + 1"], 2)
    a = split_density(inst, [1, 2, 3])
    b = split_density(inst, [3, 2, 1, 2])
    # timing differs run to run; everything compared must not
    assert a == b


def test_density_rejects_bad_ranges():
    _, inst = kummer(["t"], 2)
    with pytest.raises(ValueError):
        split_density(inst, [])
    with pytest.raises(ValueError):
        split_density(inst, [0, 1])


def test_density_budget_covers_whole_range_up_front():
    _, inst = kummer(["t"], 2)
    with pytest.raises(BudgetExceeded) as exc:
        split_density(inst, [1, 2, 9], budget=10**5)
    assert exc.value.required == 5**9
    assert exc.value.budget == 10**5


def test_non_geometric_density_is_flagged_not_refused():
    # the constant 2 generates F_25 over F_5, nothing geometric about it
    _, inst = kummer(["2"], 2)
    rep = split_density(inst, [1, 2])
    assert not rep.geometric
    assert rep.warning == NON_GEOMETRIC_WARNING
    # every prime has even norm minus one... the symbol never lands on 0
    for row in rep.rows:
        assert row.split_count in (0, row.pi - row.excluded)


# ----------------------------------------------------------- character sums

def test_character_sum_matches_naive_histogram():
    ctx = FieldCtx(5)
    t = parse_poly(ctx, "t")
    F = naive(ctx)
    for n in (1, 2, 3):
        rep = character_sum(t, n, m=2)
        hist, excluded = reference.kummer_split_histogram(F, [[0, 1]], 2, n)
        assert rep.excluded == excluded
        assert rep.class_counts == (hist.get((0,), 0), hist.get((1,), 0))
        assert rep.pi == reference.pi_count(F, n)
        assert rep.bound == (rep.pi - rep.excluded)
        # m = 2: value is split minus nonsplit as an integer
        assert rep.value.coords == (rep.class_counts[0] - rep.class_counts[1],)
        assert rep.ratio == pytest.approx(abs(rep.value) / rep.pi)


def test_character_sum_cubic_embedding():
    ctx = FieldCtx(7)
    rep = character_sum(parse_poly(ctx, "t"), 2, m=3)
    c0, c1, c2 = rep.class_counts
    # each prime of class k contributes z^k + z^2k
    acc = [0, 0, 0]
    for k, cnt in enumerate(rep.class_counts):
        acc[k % 3] += cnt
        acc[(2 * k) % 3] += cnt
    assert rep.value.coords == (acc[0] - acc[2], acc[1] - acc[2])
    assert rep.bound == 2 * (rep.pi - rep.excluded)


def test_character_sum_additive_mode():
    ctx = FieldCtx(3)
    rep = character_sum(parse_ratfunc(ctx, "1/t"), 2)
    assert rep.modulus == 3
    F = naive(ctx)
    hist, excluded = reference.hasse_split_histogram(F, [[1]], [[0, 1]], 2)
    counts = tuple(hist.get((k,), 0) for k in range(3))
    assert rep.class_counts == counts
    assert rep.excluded == excluded


def test_character_sum_ratio_decays():
    ctx = FieldCtx(5)
    t = parse_poly(ctx, "t")
    r4 = character_sum(t, 4, m=2)
    r8 = character_sum(t, 8, m=2)
    assert r8.ratio < 0.05
    assert r8.ratio < r4.ratio


def test_character_sum_respects_budget():
    ctx = FieldCtx(5)
    with pytest.raises(BudgetExceeded):
        character_sum(parse_poly(ctx, "t"), 10, m=2, budget=10**4)


# -------------------------------------------------------------- chebotarev

def test_chebotarev_counts_single_element():
    ctx = FieldCtx(5)
    rep = chebotarev_class_counts(parse_poly(ctx, "t"), 3, m=2)
    F = naive(ctx)
    hist, excluded = reference.kummer_split_histogram(F, [[0, 1]], 2, 3)
    assert rep.split_count == hist.get((0,), 0)
    assert rep.nonsplit_count == hist.get((1,), 0)
    assert rep.excluded == excluded
    assert rep.split_count + rep.nonsplit_count + rep.excluded == rep.pi
    assert rep.prediction_split == Fraction(rep.pi, 2)
    assert rep.prediction_nonsplit == Fraction(rep.pi, 2)
    dev = abs(Fraction(rep.split_count) - Fraction(rep.pi, 2))
    unit = 5 ** (3 / 2) / 3
    assert rep.deviation_units == pytest.approx(float(dev) / unit)


def test_chebotarev_additive_mode():
    ctx = FieldCtx(3)
    rep = chebotarev_class_counts(parse_ratfunc(ctx, "1/t"), 2)
    assert rep.modulus == 3
    assert rep.prediction_split == Fraction(rep.pi, 3)
    assert rep.prediction_nonsplit == Fraction(2 * rep.pi, 3)


def test_chebotarev_refuses_constant_field_growth():
    ctx = FieldCtx(5)
    with pytest.raises(NonGeometricExtension) as exc:
        chebotarev_class_counts(parse_poly(ctx, "2"), 3, m=2)
    assert exc.value.witness is not None


# ----------------------------------------------------------------- sampling

def test_sampled_density_is_seeded():
    _, inst = kummer(["t", "t + 1"], 2)
    a = sampled_split_density(inst, 5, 400, seed=7)
    b = sampled_split_density(inst, 5, 400, seed=7)
    c = sampled_split_density(inst, 5, 400, seed=8)
    assert a == b
    assert a.seed == 7 and c.seed == 8
    assert a.samples == 400
    assert a.split_hits <= a.irreducible_draws - a.excluded_draws


def test_sampled_density_tracks_exact_fraction():
    _, inst = kummer(["t", "t + 1"], 2)
    exact = split_density(inst, [5]).rows[0]
    est = sampled_split_density(inst, 5, 3000, seed=1)
    # a 4-sigma band around the exact value; deterministic given the seed
    band = 4 * est.stderr if est.stderr else 0.05
    assert abs(est.estimate - float(exact.fraction)) <= band


def test_sampled_density_excludes_ramified_draws():
    # 1/t has a pole at t, and samples at degree 1 will hit it
    _, inst = artin(["1/t"])
    est = sampled_split_density(inst, 1, 500, seed=3)
    assert est.excluded_draws > 0
    assert est.irreducible_draws > 0

"""Parity sweep: the compiled kernels must agree with the pure-Python ones.

Every routine here is exercised on both backends with the same inputs,
including the exact text of hypothesis errors.  Skipped wholesale when
the extension is not built.
"""

import random

import pytest

from ffext.field import FieldCtx
from ffext._kernels import _fallback

try:
    from ffext._kernels import _corekern
except ImportError:
    _corekern = None

needs_ext = pytest.mark.skipif(_corekern is None, reason="extension not built")

FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (3, 2), (2, 3)]


def pair(p, e):
    ctx = FieldCtx(p, e)
    args = (p, e, ctx.exp_table, ctx.log_table, ctx.trace_table)
    return ctx, _fallback.make_field(*args), _corekern.make_field(*args)


def rand_codes(rng, q, maxd):
    d = rng.randrange(0, maxd + 1)
    return [rng.randrange(q) for _ in range(d)] + [rng.randrange(1, q)]


@needs_ext
def test_backend_names_differ():
    assert _fallback.BACKEND == "python"
    assert _corekern.BACKEND == "compiled"


@needs_ext
@pytest.mark.parametrize("p,e", FIELDS)
def test_scalar_ops_agree(p, e):
    ctx, kp, kc = pair(p, e)
    q = ctx.q
    for a in range(q):
        assert kp.exp == kc.exp and kp.log == kc.log and kp.trace == kc.trace
        for b in range(q):
            assert _fallback.fadd(kp, a, b) == _corekern.fadd(kc, a, b)
            assert _fallback.fsub(kp, a, b) == _corekern.fsub(kc, a, b)
            assert _fallback.fmul(kp, a, b) == _corekern.fmul(kc, a, b)
        assert _fallback.fneg(kp, a) == _corekern.fneg(kc, a)
        if a:
            assert _fallback.finv(kp, a) == _corekern.finv(kc, a)


@needs_ext
@pytest.mark.parametrize("p,e", FIELDS)
def test_poly_ops_agree(p, e):
    ctx, kp, kc = pair(p, e)
    rng = random.Random(1000 * p + e)
    for _ in range(60):
        a = rand_codes(rng, ctx.q, 7)
        b = rand_codes(rng, ctx.q, 5)
        assert _fallback.poly_add(kp, a, b) == _corekern.poly_add(kc, a, b)
        assert _fallback.poly_sub(kp, a, b) == _corekern.poly_sub(kc, a, b)
        assert _fallback.poly_neg(kp, a) == _corekern.poly_neg(kc, a)
        assert _fallback.poly_mul(kp, a, b) == _corekern.poly_mul(kc, a, b)
        assert _fallback.poly_divmod(kp, a, b) == _corekern.poly_divmod(kc, a, b)
        assert _fallback.poly_mod(kp, a, b) == _corekern.poly_mod(kc, a, b)
        assert _fallback.poly_gcd(kp, a, b) == _corekern.poly_gcd(kc, a, b)
        n = rng.randrange(0, 50)
        if len(b) >= 2:
            assert _fallback.poly_powmod(kp, a, n, b) == _corekern.poly_powmod(kc, a, n, b)


@needs_ext
def test_division_errors_agree():
    ctx, kp, kc = pair(5, 1)
    with pytest.raises(ZeroDivisionError):
        _fallback.poly_divmod(kp, [1, 2], [])
    with pytest.raises(ZeroDivisionError):
        _corekern.poly_divmod(kc, [1, 2], [])
    for mod in ([], [3]):
        with pytest.raises(ValueError) as pi:
            _fallback.poly_powmod(kp, [0, 1], 4, mod)
        with pytest.raises(ValueError) as ci:
            _corekern.poly_powmod(kc, [0, 1], 4, mod)
        assert str(pi.value) == str(ci.value)


@needs_ext
@pytest.mark.parametrize("p,e", FIELDS)
def test_irreducibility_agrees(p, e):
    ctx, kp, kc = pair(p, e)
    rng = random.Random(77 + p * e)
    for _ in range(80):
        f = rand_codes(rng, ctx.q, 6)
        if len(f) < 2:
            continue
        assert _fallback.poly_is_irreducible(kp, f) == _corekern.poly_is_irreducible(kc, f)


@needs_ext
@pytest.mark.parametrize("p,e", FIELDS[:4])
def test_scan_ranges_agree_and_chunk_independent(p, e):
    ctx, kp, kc = pair(p, e)
    for n in (1, 2, 3):
        total = ctx.q**n
        whole_p = _fallback.scan_irreducibles(kp, n, 0, total)
        whole_c = _corekern.scan_irreducibles(kc, n, 0, total)
        assert whole_p == whole_c
        # stitched chunks cover the same range
        cut = total // 3
        parts = (
            _corekern.scan_irreducibles(kc, n, 0, cut)
            + _corekern.scan_irreducibles(kc, n, cut, 2 * cut)
            + _corekern.scan_irreducibles(kc, n, 2 * cut, total)
        )
        assert parts == whole_c


@needs_ext
def test_kummer_scan_agrees():
    ctx, kp, kc = pair(5, 1)
    jobs = [
        ([[0, 1]], 2),                       # t
        ([[0, 1], [1, 1]], 2),               # t, t+1
        ([[0, 1], [1, 1], [2]], 2),          # with a constant
        ([[0, 1], [1, 1]], 4),
    ]
    for elems, m in jobs:
        for n in (1, 2, 3, 4):
            total = ctx.q**n
            got_p = _fallback.kummer_class_scan(kp, n, 0, total, elems, m)
            got_c = _corekern.kummer_class_scan(kc, n, 0, total, elems, m)
            assert got_p == got_c


@needs_ext
def test_kummer_scan_cubic_extension_field():
    ctx, kp, kc = pair(3, 2)
    elems = [[0, 1], [3, 1]]
    for n in (1, 2, 3):
        total = ctx.q**n
        assert _fallback.kummer_class_scan(
            kp, n, 0, total, elems, 4
        ) == _corekern.kummer_class_scan(kc, n, 0, total, elems, 4)


@needs_ext
def test_hasse_scan_agrees():
    for p, e in [(2, 1), (3, 1), (2, 2)]:
        ctx, kp, kc = pair(p, e)
        jobs = [
            ([[1]], [[0, 1]]),                       # 1/t
            ([[1], [0, 0, 1]], [[0, 1], [1, 1]]),    # 1/t, t^2/(t+1)
        ]
        for nums, dens in jobs:
            for n in (1, 2, 3, 4):
                total = ctx.q**n
                got_p = _fallback.hasse_class_scan(kp, n, 0, total, nums, dens)
                got_c = _corekern.hasse_class_scan(kc, n, 0, total, nums, dens)
                assert got_p == got_c


@needs_ext
def test_kummer_scan_element_cap():
    ctx, kp, kc = pair(3, 1)
    elems = [[1, 1]] * 17
    with pytest.raises(ValueError):
        _corekern.kummer_class_scan(kc, 1, 0, 3, elems, 2)


def test_selected_backend_exposes_name():
    from ffext._kernels import backend_name, kern

    assert backend_name in ("python", "compiled")
    assert kern.BACKEND == backend_name

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Same functions and same results as `_fallback`, with typed loops.  The
shared conventions (integer element codes, low-first coefficient lists
with no trailing zeros, monic indexing) are documented there.
"""

import array

from cpython cimport array

BACKEND = "compiled"

cdef array.array _INT = array.array("i")
cdef array.array _LL = array.array("q")


cdef array.array _ibuf(Py_ssize_t n):
    return array.clone(_INT, n if n > 0 else 1, zero=True)


cdef class KernelField:
    """Field tables shared by the kernel routines."""

    cdef public int p, e, q, q1
    cdef array.array _exp, _log, _trace
    cdef int* exp_t
    cdef int* log_t
    cdef int* trace_t

    def __cinit__(self, int p, int e, exp, log, trace):
        self.p = p
        self.e = e
        self.q = int(pow(<object> p, <object> e))
        self.q1 = self.q - 1
        self._exp = array.array("i", exp)
        self._log = array.array("i", log)
        self._trace = array.array("i", trace)
        self.exp_t = self._exp.data.as_ints
        self.log_t = self._log.data.as_ints
        self.trace_t = self._trace.data.as_ints

    @property
    def exp(self):
        return list(self._exp)

    @property
    def log(self):
        return list(self._log)

    @property
    def trace(self):
        return list(self._trace)


def make_field(p, e, exp, log, trace):
    return KernelField(p, e, exp, log, trace)


# ---------------------------------------------------------------- scalars

cdef inline int cfadd(KernelField kf, int a, int b):
    cdef int p = kf.p
    cdef int out, mult, s
    if kf.e == 1:
        s = a + b
        return s - p if s >= p else s
    out = 0
    mult = 1
    while a or b:
        s = a % p + b % p
        if s >= p:
            s -= p
        out += s * mult
        mult *= p
        a //= p
        b //= p
    return out


cdef inline int cfneg(KernelField kf, int a):
    cdef int p = kf.p
    cdef int out, mult, d
    if kf.e == 1:
        return p - a if a else 0
    out = 0
    mult = 1
    while a:
        d = a % p
        if d:
            out += (p - d) * mult
        mult *= p
        a //= p
    return out


cdef inline int cfsub(KernelField kf, int a, int b):
    cdef int s
    if kf.e == 1:
        s = a - b
        return s + kf.p if s < 0 else s
    return cfadd(kf, a, cfneg(kf, b))


cdef inline int cfmul(KernelField kf, int a, int b):
    if a == 0 or b == 0:
        return 0
    return kf.exp_t[(kf.log_t[a] + kf.log_t[b]) % kf.q1]


cdef inline int cfinv(KernelField kf, int a) except -1:
    if a == 0:
        raise ZeroDivisionError("inversion of zero field element")
    return kf.exp_t[(kf.q1 - kf.log_t[a]) % kf.q1]


def fadd(KernelField kf, int a, int b):
    return cfadd(kf, a, b)


def fneg(KernelField kf, int a):
    return cfneg(kf, a)


def fsub(KernelField kf, int a, int b):
    return cfsub(kf, a, b)


def fmul(KernelField kf, int a, int b):
    return cfmul(kf, a, b)


def finv(KernelField kf, int a):
    return cfinv(kf, a)


# ------------------------------------------------------------ polynomials

cdef inline int cnorm(int* a, int n):
    while n and a[n - 1] == 0:
        n -= 1
    return n


cdef int cpmul(KernelField kf, int* a, int la, int* b, int lb, int* out):
    # out must not alias a or b; returns the written length
    cdef int i, j, ai, bj, lga, n
    cdef int p = kf.p
    cdef int q1 = kf.q1
    cdef int* expt = kf.exp_t
    cdef int* logt = kf.log_t
    if la == 0 or lb == 0:
        return 0
    n = la + lb - 1
    for i in range(n):
        out[i] = 0
    if kf.e == 1:
        for i in range(la):
            ai = a[i]
            if ai:
                for j in range(lb):
                    out[i + j] += ai * b[j]
        for i in range(n):
            out[i] %= p
        return cnorm(out, n)
    for i in range(la):
        ai = a[i]
        if ai:
            lga = logt[ai]
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[i + j] = cfadd(kf, out[i + j], expt[(lga + logt[bj]) % q1])
    return cnorm(out, n)


cdef int cpmod_inplace(KernelField kf, int* r, int lr, int* b, int lb) except -1:
    # reduces r mod b in place; returns the reduced length
    cdef int i, j, off, c, f, inv_lc
    if lb == 1:
        return 0
    if lr < lb:
        return lr
    inv_lc = cfinv(kf, b[lb - 1])
    for i in range(lr - 1, lb - 2, -1):
        c = r[i]
        if c:
            f = cfmul(kf, c, inv_lc)
            off = i - lb + 1
            for j in range(lb - 1):
                if b[j]:
                    r[off + j] = cfsub(kf, r[off + j], cfmul(kf, f, b[j]))
            r[i] = 0
    return cnorm(r, lb - 1)


cdef int cpgcd(KernelField kf, int* a, int la, int* b, int lb, int* x, int* y) except -1:
    # monic gcd into x; x and y are scratch of size >= max(la, lb)
    cdef int i, lx, ly, t, inv_lc
    cdef int* sw
    for i in range(la):
        x[i] = a[i]
    for i in range(lb):
        y[i] = b[i]
    lx, ly = la, lb
    while ly:
        lx = cpmod_inplace(kf, x, lx, y, ly)
        sw = x; x = y; y = sw
        t = lx; lx = ly; ly = t
    if lx and x[lx - 1] != 1:
        inv_lc = cfinv(kf, x[lx - 1])
        for i in range(lx):
            x[i] = cfmul(kf, x[i], inv_lc)
    # the monic gcd sits in one of the two scratch buffers; callers only
    # branch on the length
    return lx


cdef int cpowmod_bits(KernelField kf, int* base, int lbase,
                      unsigned char* bits, int nbits,
                      int* mod, int lmod, int* val, int* scratch) except -1:
    # val <- base**n mod `mod`; base reduced and nonzero; bits MSB-first
    cdef int i, lv, ls
    cdef bint flip = False
    cdef int* a = val
    cdef int* b = scratch
    cdef int* sw
    for i in range(lbase):
        a[i] = base[i]
    lv = lbase
    for i in range(1, nbits):
        ls = cpmul(kf, a, lv, a, lv, b)
        ls = cpmod_inplace(kf, b, ls, mod, lmod)
        sw = a; a = b; b = sw
        lv = ls
        flip = not flip
        if bits[i]:
            ls = cpmul(kf, a, lv, base, lbase, b)
            ls = cpmod_inplace(kf, b, ls, mod, lmod)
            sw = a; a = b; b = sw
            lv = ls
            flip = not flip
    if flip:
        for i in range(lv):
            val[i] = a[i]
    return lv


cdef bytes _bit_bytes(object n):
    # MSB-first 0/1 bytes of a (possibly huge) Python int
    return bytes(1 if ch == 49 else 0 for ch in bin(n)[2:].encode())


cdef list _to_list(int* a, int n):
    cdef int i
    return [a[i] for i in range(n)]


def poly_add(KernelField kf, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = cfadd(kf, out[i], x)
    n = len(out)
    while n and out[n - 1] == 0:
        n -= 1
    del out[n:]
    return out


def poly_sub(KernelField kf, a, b):
    out = list(a)
    if len(out) < len(b):
        out.extend([0] * (len(b) - len(out)))
    for i, x in enumerate(b):
        out[i] = cfsub(kf, out[i], x)
    n = len(out)
    while n and out[n - 1] == 0:
        n -= 1
    del out[n:]
    return out


def poly_neg(KernelField kf, a):
    return [cfneg(kf, x) for x in a]


def poly_mul(KernelField kf, a, b):
    cdef array.array aa = array.array("i", a)
    cdef array.array bb = array.array("i", b)
    cdef int la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef array.array out = _ibuf(la + lb - 1)
    cdef int n = cpmul(kf, aa.data.as_ints, la, bb.data.as_ints, lb, out.data.as_ints)
    return _to_list(out.data.as_ints, n)


def poly_divmod(KernelField kf, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef int lb = len(b)
    cdef array.array rr = array.array("i", a)
    cdef int lr = len(a)
    if lr < lb:
        return [], list(a)
    cdef array.array bb = array.array("i", b)
    cdef array.array qq = _ibuf(lr - lb + 1)
    cdef int* r = rr.data.as_ints
    cdef int* bp = bb.data.as_ints
    cdef int* quot = qq.data.as_ints
    cdef int inv_lc = cfinv(kf, bp[lb - 1])
    cdef int i, j, off, c, f
    for i in range(lr - 1, lb - 2, -1):
        c = r[i]
        if c:
            f = cfmul(kf, c, inv_lc)
            quot[i - lb + 1] = f
            off = i - lb + 1
            for j in range(lb - 1):
                if bp[j]:
                    r[off + j] = cfsub(kf, r[off + j], cfmul(kf, f, bp[j]))
            r[i] = 0
    return _to_list(quot, lr - lb + 1), _to_list(r, cnorm(r, lb - 1))


def poly_mod(KernelField kf, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef int lb = len(b)
    if lb == 1:
        return []
    cdef array.array rr = array.array("i", a)
    cdef int lr = len(a)
    if lr < lb:
        return list(a)
    cdef array.array bb = array.array("i", b)
    cdef int n = cpmod_inplace(kf, rr.data.as_ints, lr, bb.data.as_ints, lb)
    return _to_list(rr.data.as_ints, n)


def poly_gcd(KernelField kf, a, b):
    cdef int la = len(a), lb = len(b)
    cdef int size = la if la > lb else lb
    if size == 0:
        return []
    cdef array.array xx = _ibuf(size)
    cdef array.array yy = _ibuf(size)
    cdef int* x = xx.data.as_ints
    cdef int* y = yy.data.as_ints
    cdef int i, lx, ly, t, inv_lc
    cdef int* sw
    for i in range(la):
        x[i] = a[i]
    for i in range(lb):
        y[i] = b[i]
    lx, ly = la, lb
    while ly:
        lx = cpmod_inplace(kf, x, lx, y, ly)
        sw = x; x = y; y = sw
        t = lx; lx = ly; ly = t
    if lx and x[lx - 1] != 1:
        inv_lc = cfinv(kf, x[lx - 1])
        for i in range(lx):
            x[i] = cfmul(kf, x[i], inv_lc)
    return _to_list(x, lx)


def poly_powmod(KernelField kf, a, n, mod):
    if len(mod) < 2:
        raise ValueError("powmod modulus must be nonconstant")
    if n == 0:
        return [1]
    r = poly_mod(kf, a, mod)
    if not r:
        return []
    cdef bytes bits = _bit_bytes(n)
    cdef array.array base = array.array("i", r)
    cdef array.array mm = array.array("i", mod)
    cdef int lmod = len(mod)
    cdef int worst = 2 * lmod
    cdef array.array val = _ibuf(worst)
    cdef array.array scratch = _ibuf(worst)
    cdef int lv = cpowmod_bits(kf, base.data.as_ints, len(r),
                               <unsigned char*> bits, len(bits),
                               mm.data.as_ints, lmod,
                               val.data.as_ints, scratch.data.as_ints)
    return _to_list(val.data.as_ints, lv)


# ----------------------------------------------------------- irreducibility

cdef list _prime_divisors(int n):
    out = []
    cdef int d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


cdef class _Scan:
    """Workspace for the candidate loop: all buffers sized once."""

    cdef array.array _f, _u, _t, _diff, _gx, _gy, _val, _scr, _res
    cdef int* f
    cdef int* u
    cdef int* t
    cdef int* diff
    cdef int* gx
    cdef int* gy
    cdef int* val
    cdef int* scr
    cdef int* res

    def __cinit__(self, int n, int extra):
        cdef int w = 2 * n + 4
        if extra + 2 > w:
            w = extra + 2
        self._f = _ibuf(n + 1)
        self._u = _ibuf(w)
        self._t = _ibuf(w)
        self._diff = _ibuf(w)
        self._gx = _ibuf(w)
        self._gy = _ibuf(w)
        self._val = _ibuf(w)
        self._scr = _ibuf(w)
        self._res = _ibuf(w)
        self.f = self._f.data.as_ints
        self.u = self._u.data.as_ints
        self.t = self._t.data.as_ints
        self.diff = self._diff.data.as_ints
        self.gx = self._gx.data.as_ints
        self.gy = self._gy.data.as_ints
        self.val = self._val.data.as_ints
        self.scr = self._scr.data.as_ints
        self.res = self._res.data.as_ints


cdef bint cscreen(KernelField kf, _Scan w, int lf,
                  unsigned char* qbits, int nqb) except -1:
    # no factor of degree <= deg/2, early exit on the first gcd hit
    cdef int d = lf - 1
    cdef int lu, ldiff, lg, i, k
    if d == 1:
        return True
    w.u[0] = 0
    w.u[1] = 1
    lu = 2
    for k in range(d // 2):
        lu = cpowmod_bits(kf, w.u, lu, qbits, nqb, w.f, lf, w.val, w.scr)
        for i in range(lu):
            w.u[i] = w.val[i]
        # diff = u - t with t = [0, 1]
        for i in range(lu):
            w.diff[i] = w.u[i]
        for i in range(lu, 2):
            w.diff[i] = 0
        ldiff = lu if lu > 2 else 2
        w.diff[1] = cfsub(kf, w.diff[1], 1)
        ldiff = cnorm(w.diff, ldiff)
        lg = cpgcd(kf, w.diff, ldiff, w.f, lf, w.gx, w.gy)
        if lg != 1:
            return False
    return True


def poly_is_irreducible(KernelField kf, f):
    """f monic, degree >= 1.  t^(q^d) == t mod f and gcd checks at d/r."""
    cdef int d = len(f) - 1
    if d == 1:
        return True
    cdef bytes qbits = _bit_bytes(kf.q)
    checkpoints = {d // r for r in _prime_divisors(d)}
    cdef _Scan w = _Scan(d, len(f))
    cdef array.array ff = array.array("i", f)
    cdef int lf = len(f)
    cdef int i, j, lu, ldiff, lg
    for i in range(lf):
        w.f[i] = ff.data.as_ints[i]
    w.u[0] = 0
    w.u[1] = 1
    lu = 2
    for j in range(1, d + 1):
        lu = cpowmod_bits(kf, w.u, lu, <unsigned char*> qbits, len(qbits),
                          w.f, lf, w.val, w.scr)
        for i in range(lu):
            w.u[i] = w.val[i]
        if j in checkpoints:
            for i in range(lu):
                w.diff[i] = w.u[i]
            for i in range(lu, 2):
                w.diff[i] = 0
            ldiff = lu if lu > 2 else 2
            w.diff[1] = cfsub(kf, w.diff[1], 1)
            ldiff = cnorm(w.diff, ldiff)
            lg = cpgcd(kf, w.diff, ldiff, w.f, lf, w.gx, w.gy)
            if lg != 1:
                return False
    return lu == 2 and w.u[0] == 0 and w.u[1] == 1


# ------------------------------------------------------------------ scans

cdef void _first_candidate(KernelField kf, _Scan w, int n, long long start):
    cdef long long d = start
    cdef int i
    for i in range(n):
        w.f[i] = <int> (d % kf.q)
        d //= kf.q
    w.f[n] = 1


cdef void _advance(_Scan w, int n, int q):
    cdef int j = 0
    cdef int d
    while j < n:
        d = w.f[j] + 1
        if d == q:
            w.f[j] = 0
            j += 1
        else:
            w.f[j] = d
            return


def scan_irreducibles(KernelField kf, int n, start, stop):
    """Indexes in [start, stop) whose monic degree-n polynomial is irreducible."""
    cdef bytes qbits = _bit_bytes(kf.q)
    cdef unsigned char* qb = <unsigned char*> qbits
    cdef int nqb = len(qbits)
    cdef _Scan w = _Scan(n, 0)
    cdef long long idx, lo = start, hi = stop
    out = []
    _first_candidate(kf, w, n, lo)
    for idx in range(lo, hi):
        if cscreen(kf, w, n + 1, qb, nqb):
            out.append(idx)
        _advance(w, n, kf.q)
    return out


def kummer_class_scan(KernelField kf, int n, start, stop, elems, int m):
    """Joint power-residue class histogram over degree-n primes.

    Same contract as the fallback: hist over class tuples encoded base m,
    primes dividing some element counted in `excluded`.
    """
    cdef int q = kf.q
    cdef bytes qbits = _bit_bytes(q)
    cdef unsigned char* qb = <unsigned char*> qbits
    cdef int nqb = len(qbits)
    cdef int s = kf.q1 // m
    cdef bytes ebits = _bit_bytes((pow(<object> q, <object> n) - 1) // m)
    cdef unsigned char* eb = <unsigned char*> ebits
    cdef int neb = len(ebits)
    cdef int l = len(elems)
    if l > 16:
        raise ValueError("at most 16 elements per scan")
    cdef list earrs = [array.array("i", e) for e in elems]
    cdef int maxlen = 0
    for e in earrs:
        if len(e) > maxlen:
            maxlen = len(e)
    cdef _Scan w = _Scan(n, maxlen)
    cdef long long sz = 1
    cdef int i
    for i in range(l):
        sz *= m
    cdef array.array hist = array.clone(_LL, sz, zero=True)
    cdef long long* hp = hist.data.as_longlongs
    cdef long long weights[16]
    cdef long long ww = 1
    for i in range(l):
        weights[i] = ww
        ww *= m
    cdef long long excluded = 0, idx, lo = start, hi = stop, cls
    cdef int* logt = kf.log_t
    cdef array.array ea
    cdef int lr, lc, lg, j
    cdef bint zero
    _first_candidate(kf, w, n, lo)
    for idx in range(lo, hi):
        if cscreen(kf, w, n + 1, qb, nqb):
            cls = 0
            zero = False
            for i in range(l):
                ea = <array.array> earrs[i]
                lr = len(ea)
                for j in range(lr):
                    w.res[j] = ea.data.as_ints[j]
                lr = cpmod_inplace(kf, w.res, lr, w.f, n + 1)
                if lr == 0:
                    zero = True
                    break
                lc = cpowmod_bits(kf, w.res, lr, eb, neb, w.f, n + 1, w.val, w.scr)
                if lc != 1:
                    raise AssertionError("power residue value not constant")
                lg = logt[w.val[0]]
                if lg % s:
                    raise AssertionError("power residue value outside subgroup")
                cls += (lg // s) * weights[i]
            if zero:
                excluded += 1
            else:
                hp[cls] += 1
        _advance(w, n, q)
    return [hp[i] for i in range(sz)], excluded


def hasse_class_scan(KernelField kf, int n, start, stop, nums, dens):
    """Joint Hasse symbol histogram over degree-n primes.

    Same contract as the fallback: classes are absolute traces to F_p,
    primes hitting a pole counted in `excluded`.
    """
    cdef int p = kf.p
    cdef int q = kf.q
    cdef bytes qbits = _bit_bytes(q)
    cdef unsigned char* qb = <unsigned char*> qbits
    cdef int nqb = len(qbits)
    cdef bytes ibits = b""
    cdef object qn = pow(<object> q, <object> n)
    cdef bint use_inv = qn > 2
    if use_inv:
        ibits = _bit_bytes(qn - 2)
    cdef unsigned char* ib = <unsigned char*> ibits
    cdef int nib = len(ibits)
    cdef int l = len(nums)
    if l > 16:
        raise ValueError("at most 16 elements per scan")
    cdef list narrs = [array.array("i", e) for e in nums]
    cdef list darrs = [array.array("i", e) for e in dens]
    cdef int maxlen = 0
    for e in narrs:
        if len(e) > maxlen:
            maxlen = len(e)
    for e in darrs:
        if len(e) > maxlen:
            maxlen = len(e)
    cdef _Scan w = _Scan(n, maxlen)
    # one extra reduced-numerator buffer: w.res holds the denominator
    cdef array.array _rn = _ibuf(2 * n + 4 if 2 * n + 4 > maxlen + 2 else maxlen + 2)
    cdef int* rn = _rn.data.as_ints
    cdef array.array _acc = _ibuf(2 * n + 4)
    cdef int* acc = _acc.data.as_ints
    cdef long long sz = 1
    cdef int i
    for i in range(l):
        sz *= p
    cdef array.array hist = array.clone(_LL, sz, zero=True)
    cdef long long* hp = hist.data.as_longlongs
    cdef long long weights[16]
    cdef long long ww = 1
    for i in range(l):
        weights[i] = ww
        ww *= p
    cdef long long excluded = 0, idx, lo = start, hi = stop, cls
    cdef int* tracet = kf.trace_t
    cdef array.array na, da
    cdef int ld, lnum, linv, lrr, lacc, lu, j, k, c
    cdef bint pole
    _first_candidate(kf, w, n, lo)
    for idx in range(lo, hi):
        if cscreen(kf, w, n + 1, qb, nqb):
            cls = 0
            pole = False
            for i in range(l):
                da = <array.array> darrs[i]
                ld = len(da)
                for j in range(ld):
                    w.res[j] = da.data.as_ints[j]
                ld = cpmod_inplace(kf, w.res, ld, w.f, n + 1)
                if ld == 0:
                    pole = True
                    break
                na = <array.array> narrs[i]
                lnum = len(na)
                for j in range(lnum):
                    rn[j] = na.data.as_ints[j]
                lnum = cpmod_inplace(kf, rn, lnum, w.f, n + 1)
                if lnum == 0:
                    continue
                if use_inv:
                    linv = cpowmod_bits(kf, w.res, ld, ib, nib, w.f, n + 1,
                                        w.val, w.scr)
                else:
                    w.val[0] = 1
                    linv = 1
                lrr = cpmul(kf, rn, lnum, w.val, linv, w.scr)
                lrr = cpmod_inplace(kf, w.scr, lrr, w.f, n + 1)
                for j in range(lrr):
                    acc[j] = w.scr[j]
                    w.u[j] = w.scr[j]
                lacc = lrr
                lu = lrr
                for k in range(n - 1):
                    lu = cpowmod_bits(kf, w.u, lu, qb, nqb, w.f, n + 1,
                                      w.val, w.scr)
                    for j in range(lu):
                        w.u[j] = w.val[j]
                    # acc += u, in place
                    if lu > lacc:
                        for j in range(lacc, lu):
                            acc[j] = 0
                        lacc = lu
                    for j in range(lu):
                        acc[j] = cfadd(kf, acc[j], w.u[j])
                    lacc = cnorm(acc, lacc)
                if lacc > 1:
                    raise AssertionError("residue trace not constant")
                c = acc[0] if lacc else 0
                cls += tracet[c] * weights[i]
            if pole:
                excluded += 1
            else:
                hp[cls] += 1
        _advance(w, n, q)
    return [hp[i] for i in range(sz)], excluded

"""Pure-Python kernel backend.

Mirror of the compiled module `_corekern`: same functions, same results,
no C toolchain required.  Conventions shared by both backends:

- field elements are integer codes c0 + c1*p + ... + c_{e-1}*p^(e-1),
  so the numeric order of codes is the lexicographic order that compares
  high-degree coordinates first;
- polynomials are lists of codes, lowest degree first, with no trailing
  zeros; the zero polynomial is [];
- a monic polynomial of degree N is indexed by
  i = sum(coeffs[j] * q**j for j < N) in [0, q**N).
"""

BACKEND = "python"


class KernelField:
    """Field tables shared by the kernel routines."""

    __slots__ = ("p", "e", "q", "q1", "exp", "log", "trace")

    def __init__(self, p, e, exp, log, trace):
        self.p = p
        self.e = e
        self.q = p**e
        self.q1 = self.q - 1
        self.exp = list(exp)
        self.log = list(log)
        self.trace = list(trace)


def make_field(p, e, exp, log, trace):
    return KernelField(p, e, exp, log, trace)


# ---------------------------------------------------------------- scalars

def fadd(kf, a, b):
    p = kf.p
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


def fneg(kf, a):
    p = kf.p
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


def fsub(kf, a, b):
    p = kf.p
    if kf.e == 1:
        s = a - b
        return s + p if s < 0 else s
    return fadd(kf, a, fneg(kf, b))


def fmul(kf, a, b):
    if a == 0 or b == 0:
        return 0
    return kf.exp[(kf.log[a] + kf.log[b]) % kf.q1]


def finv(kf, a):
    if a == 0:
        raise ZeroDivisionError("inversion of zero field element")
    return kf.exp[(kf.q1 - kf.log[a]) % kf.q1]


# ------------------------------------------------------------ polynomials

def _norm(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    del c[n:]
    return c


def poly_add(kf, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = fadd(kf, out[i], x)
    return _norm(out)


def poly_sub(kf, a, b):
    out = list(a)
    if len(out) < len(b):
        out.extend([0] * (len(b) - len(out)))
    for i, x in enumerate(b):
        out[i] = fsub(kf, out[i], x)
    return _norm(out)


def poly_neg(kf, a):
    return [fneg(kf, x) for x in a]


def poly_mul(kf, a, b):
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    if kf.e == 1:
        p = kf.p
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return [c % p for c in out]
    expt, logt, q1 = kf.exp, kf.log, kf.q1
    for i, ai in enumerate(a):
        if ai:
            lga = logt[ai]
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = fadd(kf, out[i + j], expt[(lga + logt[bj]) % q1])
    return out


def poly_divmod(kf, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = len(b)
    r = list(a)
    if len(r) < lb:
        return [], r
    inv_lc = finv(kf, b[lb - 1])
    quot = [0] * (len(r) - lb + 1)
    for i in range(len(r) - 1, lb - 2, -1):
        c = r[i]
        if c:
            f = fmul(kf, c, inv_lc)
            quot[i - lb + 1] = f
            off = i - lb + 1
            for j in range(lb - 1):
                if b[j]:
                    r[off + j] = fsub(kf, r[off + j], fmul(kf, f, b[j]))
            r[i] = 0
    del r[lb - 1:]
    return quot, _norm(r)


def poly_mod(kf, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = len(b)
    if lb == 1:
        return []
    r = list(a)
    if len(r) < lb:
        return r
    inv_lc = finv(kf, b[lb - 1])
    for i in range(len(r) - 1, lb - 2, -1):
        c = r[i]
        if c:
            f = fmul(kf, c, inv_lc)
            off = i - lb + 1
            for j in range(lb - 1):
                if b[j]:
                    r[off + j] = fsub(kf, r[off + j], fmul(kf, f, b[j]))
            r[i] = 0
    del r[lb - 1:]
    return _norm(r)


def poly_gcd(kf, a, b):
    x, y = list(a), list(b)
    while y:
        x, y = y, poly_mod(kf, x, y)
    if not x:
        return []
    inv_lc = finv(kf, x[-1])
    if x[-1] != 1:
        x = [fmul(kf, c, inv_lc) for c in x]
    return x


def _bits(n):
    return [c == "1" for c in bin(n)[2:]]


def _powmod_bits(kf, base, bits, mod):
    # base reduced mod `mod` and nonzero; bits MSB-first, bits[0] is True
    result = base
    for bit in bits[1:]:
        result = poly_mod(kf, poly_mul(kf, result, result), mod)
        if bit:
            result = poly_mod(kf, poly_mul(kf, result, base), mod)
    return result


def poly_powmod(kf, a, n, mod):
    if len(mod) < 2:
        raise ValueError("powmod modulus must be nonconstant")
    if n == 0:
        return [1]
    r = poly_mod(kf, a, mod)
    if not r:
        return []
    return _powmod_bits(kf, r, _bits(n), mod)


# ----------------------------------------------------------- irreducibility

def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def poly_is_irreducible(kf, f):
    """f monic, degree >= 1.  t^(q^d) == t mod f and gcd checks at d/r."""
    d = len(f) - 1
    if d == 1:
        return True
    q = kf.q
    qbits = _bits(q)
    checkpoints = {d // r for r in _prime_divisors(d)}
    t = [0, 1]
    u = list(t)
    for j in range(1, d + 1):
        u = _powmod_bits(kf, u, qbits, f)
        if j in checkpoints:
            g = poly_gcd(kf, poly_sub(kf, u, t), f)
            if len(g) != 1:
                return False
    return u == t


def _screen(kf, f, qbits):
    # irreducible iff no factor of degree <= deg/2; early exit on the
    # first gcd that picks one up
    d = len(f) - 1
    if d == 1:
        return True
    t = [0, 1]
    u = list(t)
    for _ in range(d // 2):
        u = _powmod_bits(kf, u, qbits, f)
        g = poly_gcd(kf, poly_sub(kf, u, t), f)
        if len(g) != 1:
            return False
    return True


# ------------------------------------------------------------------ scans

def _first_candidate(kf, n, start):
    d = start
    digits = []
    for _ in range(n):
        digits.append(d % kf.q)
        d //= kf.q
    return digits + [1]


def _advance(f, n, q):
    j = 0
    while j < n:
        d = f[j] + 1
        if d == q:
            f[j] = 0
            j += 1
        else:
            f[j] = d
            return


def scan_irreducibles(kf, n, start, stop):
    """Indexes in [start, stop) whose monic degree-n polynomial is irreducible."""
    out = []
    q = kf.q
    qbits = _bits(q)
    f = _first_candidate(kf, n, start)
    for idx in range(start, stop):
        if _screen(kf, f, qbits):
            out.append(idx)
        _advance(f, n, q)
    return out


def kummer_class_scan(kf, n, start, stop, elems, m):
    """Joint power-residue class histogram over degree-n primes.

    For each irreducible P in the index range, evaluates the class
    k_i in Z_m of every element (a_i^((q^n-1)/m) mod P as a power of the
    canonical m-th root of unity) and increments hist[sum k_i * m^i].
    Primes dividing some element are tallied in `excluded` instead.
    """
    q = kf.q
    qbits = _bits(q)
    s = kf.q1 // m
    ebits = _bits((q**n - 1) // m)
    l = len(elems)
    weights = [m**i for i in range(l)]
    hist = [0] * (m**l)
    excluded = 0
    logt = kf.log
    f = _first_candidate(kf, n, start)
    for _ in range(start, stop):
        if _screen(kf, f, qbits):
            cls = 0
            zero = False
            for i in range(l):
                ra = poly_mod(kf, elems[i], f)
                if not ra:
                    zero = True
                    break
                c = _powmod_bits(kf, ra, ebits, f)
                if len(c) != 1:
                    raise AssertionError("power residue value not constant")
                lg = logt[c[0]]
                if lg % s:
                    raise AssertionError("power residue value outside subgroup")
                cls += (lg // s) * weights[i]
            if zero:
                excluded += 1
            else:
                hist[cls] += 1
        _advance(f, n, q)
    return hist, excluded


def hasse_class_scan(kf, n, start, stop, nums, dens):
    """Joint Hasse symbol histogram over degree-n primes.

    The symbol of D_i = nums[i]/dens[i] at P is the absolute trace to F_p
    of the residue of D_i mod P; primes dividing some denominator are
    tallied in `excluded`.
    """
    p = kf.p
    q = kf.q
    qbits = _bits(q)
    ibits = _bits(q**n - 2) if q**n > 2 else None
    l = len(nums)
    weights = [p**i for i in range(l)]
    hist = [0] * (p**l)
    excluded = 0
    tracet = kf.trace
    f = _first_candidate(kf, n, start)
    for _ in range(start, stop):
        if _screen(kf, f, qbits):
            cls = 0
            pole = False
            for i in range(l):
                rd = poly_mod(kf, dens[i], f)
                if not rd:
                    pole = True
                    break
                rn = poly_mod(kf, nums[i], f)
                if not rn:
                    continue
                if ibits is None:
                    inv = [1]
                else:
                    inv = _powmod_bits(kf, rd, ibits, f)
                r = poly_mod(kf, poly_mul(kf, rn, inv), f)
                acc = list(r)
                u = r
                for _j in range(n - 1):
                    u = _powmod_bits(kf, u, qbits, f)
                    acc = poly_add(kf, acc, u)
                if len(acc) > 1:
                    raise AssertionError("residue trace not constant")
                c = acc[0] if acc else 0
                cls += tracet[c] * weights[i]
            if pole:
                excluded += 1
            else:
                hist[cls] += 1
        _advance(f, n, q)
    return hist, excluded

"""Slow, independent reimplementations used as oracles by the tests.

Everything here works on plain integers and lists, written as directly
as possible: schoolbook products, trial division, exhaustive searches.
The only data borrowed from the library is the field's modulus and its
chosen multiplicative generator, so that element codes and root-of-unity
classes mean the same thing on both sides.
"""

import itertools


class NaiveField:
    """F_{p^e} on integer codes, all arithmetic done longhand."""

    def __init__(self, p, e, modulus_codes, generator_code):
        self.p = p
        self.e = e
        self.q = p**e
        # modulus over F_p: codes below p are literal coefficients
        self.modulus = [int(c) for c in modulus_codes]
        assert len(self.modulus) == e + 1 and self.modulus[-1] == 1
        self.g = generator_code

    def decode(self, code):
        out = []
        for _ in range(self.e):
            out.append(code % self.p)
            code //= self.p
        return out

    def encode(self, vec):
        code = 0
        for c in reversed(vec):
            code = code * self.p + (c % self.p)
        return code

    def add(self, a, b):
        va, vb = self.decode(a), self.decode(b)
        return self.encode([(x + y) % self.p for x, y in zip(va, vb)])

    def neg(self, a):
        return self.encode([(-x) % self.p for x in self.decode(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        va, vb = self.decode(a), self.decode(b)
        conv = [0] * (2 * self.e - 1)
        for i, x in enumerate(va):
            for j, y in enumerate(vb):
                conv[i + j] = (conv[i + j] + x * y) % self.p
        # reduce by the monic modulus
        for i in range(len(conv) - 1, self.e - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                for j in range(self.e):
                    conv[i - self.e + j] = (conv[i - self.e + j] - c * self.modulus[j]) % self.p
        return self.encode(conv[: self.e])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise AssertionError("no inverse found")

    def pow(self, a, n):
        out = 1
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def trace_to_prime(self, a):
        # sum of the e Frobenius iterates, landing in F_p
        acc = 0
        x = a
        for _ in range(self.e):
            acc = self.add(acc, x)
            x = self.pow(x, self.p)
        vec = self.decode(acc)
        assert all(c == 0 for c in vec[1:])
        return vec[0]


# ------------------------------------------------------------- polynomials
# polys are lists of codes, low degree first, no trailing zeros

def ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def padd(F, a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = F.add(out[i], y)
    return ptrim(out)


def psub(F, a, b):
    return padd(F, a, [F.neg(y) for y in b])


def pmul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return ptrim(out)


def pdivmod(F, a, b):
    assert b
    r = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lc = F.inv(b[-1])
    while len(r) >= len(b):
        c = F.mul(r[-1], inv_lc)
        shift = len(r) - len(b)
        q[shift] = c
        for j, y in enumerate(b):
            r[shift + j] = F.sub(r[shift + j], F.mul(c, y))
        ptrim(r)
        if not r:
            break
    return ptrim(q), r


def pmod(F, a, b):
    return pdivmod(F, a, b)[1]


def ppow(F, a, n):
    out = [1]
    for _ in range(n):
        out = pmul(F, out, a)
    return out


def ppowmod(F, a, n, mod):
    out = [1]
    base = pmod(F, a, mod)
    while n:
        if n & 1:
            out = pmod(F, pmul(F, out, base), mod)
        base = pmod(F, pmul(F, base, base), mod)
        n >>= 1
    return out


def monics(F, n):
    """All monic polynomials of degree exactly n."""
    for tail in itertools.product(range(F.q), repeat=n):
        yield list(tail) + [1]


def is_irreducible(F, f):
    d = len(f) - 1
    if d <= 0:
        return False
    for k in range(1, d // 2 + 1):
        for g in monics(F, k):
            if not pmod(F, f, g):
                return False
    return True


def irreducibles(F, n):
    return [f for f in monics(F, n) if is_irreducible(F, f)]


def pi_count(F, n):
    return len(irreducibles(F, n))


# ----------------------------------------------------------------- symbols

def kummer_symbol(F, a, P, m):
    """Class in Z_m of a at the prime P, or None when P divides a."""
    d = len(P) - 1
    if not pmod(F, a, P):
        return None
    v = ppowmod(F, a, (F.q**d - 1) // m, P)
    assert len(v) == 1
    s = (F.q - 1) // m
    omega = F.pow(F.g, s)
    w = 1
    for k in range(m):
        if w == v[0]:
            return k
        w = F.mul(w, omega)
    raise AssertionError("value not a power of the canonical root of unity")


def hasse_symbol(F, num, den, P):
    """Absolute trace of num/den mod P, or None at a pole."""
    d = len(P) - 1
    rd = pmod(F, den, P)
    if not rd:
        return None
    rn = pmod(F, num, P)
    if not rn:
        return 0
    inv = ppowmod(F, rd, F.q**d - 2, P) if F.q**d > 2 else [1]
    r = pmod(F, pmul(F, rn, inv), P)
    acc = []
    x = r
    for _ in range(d * F.e):
        acc = padd(F, acc, x)
        x = ppowmod(F, x, F.p, P)
    assert len(acc) <= 1
    c = acc[0] if acc else 0
    assert c < F.p
    return c


def kummer_split_histogram(F, elems, m, n):
    """(joint class histogram, excluded count) over degree-n primes."""
    l = len(elems)
    hist = {}
    excluded = 0
    for P in irreducibles(F, n):
        classes = [kummer_symbol(F, a, P, m) for a in elems]
        if any(c is None for c in classes):
            excluded += 1
            continue
        key = tuple(classes)
        hist[key] = hist.get(key, 0) + 1
    return hist, excluded


def hasse_split_histogram(F, nums, dens, n):
    hist = {}
    excluded = 0
    for P in irreducibles(F, n):
        classes = [hasse_symbol(F, a, b, P) for a, b in zip(nums, dens)]
        if any(c is None for c in classes):
            excluded += 1
            continue
        key = tuple(classes)
        hist[key] = hist.get(key, 0) + 1
    return hist, excluded


# ------------------------------------------------- extension degree oracles

def mth_root(F, f, m):
    """Exhaustive m-th root of a monic polynomial, or None."""
    d = len(f) - 1
    if d % m:
        return None
    for g in monics(F, d // m):
        if ppow(F, g, m) == f:
            return g
    return None


def kummer_combo_is_trivial(F, elems, vector, m):
    """Is prod elems[i]^vector[i] equal to (const) * (monic)^m with the
    constant an m-th power?  Decided by exhaustive root search."""
    prod = [1]
    for a, v in zip(elems, vector):
        prod = pmul(F, prod, ppow(F, a, v))
    lc = prod[-1]
    monic = [F.mul(c, F.inv(lc)) for c in prod]
    root = mth_root(F, monic, m)
    if root is None:
        return False
    return any(F.pow(c, m) == lc for c in range(1, F.q))


def naive_kummer_kernel(F, elems, m):
    """All vectors in (Z_m)^l whose combo is a scaled m-th power."""
    l = len(elems)
    out = []
    for vector in itertools.product(range(m), repeat=l):
        if kummer_combo_is_trivial(F, elems, vector, m):
            out.append(vector)
    return out


def certify_hasse_nontrivial(F, num, den, max_deg=4):
    """A prime certifying that num/den is not of the form G^p - G + c with
    trace-zero c: nonzero symbol somewhere, or a pole of order not
    divisible by p.  None when no certificate shows up in range."""
    for n in range(1, max_deg + 1):
        for P in irreducibles(F, n):
            rd = pmod(F, den, P)
            if not rd:
                shifted, k = list(den), 0
                while not pmod(F, shifted, P):
                    shifted = pdivmod(F, shifted, P)[0]
                    k += 1
                if pmod(F, num, P) and k % F.p:
                    return P
                continue
            s = hasse_symbol(F, num, den, P)
            if s:
                return P
    return None

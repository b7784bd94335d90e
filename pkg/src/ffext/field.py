"""Finite fields F_q, q = p^e, with the tables the rest of the package runs on.

Elements are integer codes c0 + c1*p + ... + c_{e-1}*p^(e-1) for
coordinates c_i over F_p; numeric code order therefore coincides with
the lexicographic order that compares high-degree coordinates first.
A FieldCtx owns the modulus, a fixed multiplicative generator, and the
exp/log/trace tables shared with the kernel backends; FieldElem is a
thin wrapper around (ctx, code) for callers who want operators.
"""

from . import linalg
from ._kernels import kern

Q_CAP = 1 << 20


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_divisors(n):
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


class FieldCtx:
    """Arithmetic context for F_q.

    `modulus` is the monic irreducible degree-e polynomial over F_p
    defining the extension (coefficient tuple, lowest degree first); when
    omitted, the lexicographically smallest one is selected, so equal
    (p, e) means equal arithmetic.  `primitive_g` is the smallest code of
    multiplicative order q-1.
    """

    def __init__(self, p, e=1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree e = {e} must be >= 1")
        q = p**e
        if q > Q_CAP:
            raise ValueError(f"q = {q} exceeds the supported cap {Q_CAP}")
        self.p = p
        self.e = e
        self.q = q
        if e == 1:
            self.modulus = (0, 1) if modulus is None else self._check_modulus(modulus)
        elif modulus is not None:
            self.modulus = self._check_modulus(modulus)
        else:
            self.modulus = self._default_modulus()
        self._q1_primes = prime_divisors(q - 1)
        self.primitive_g = self._find_generator()
        self._exp = None
        self._log = None
        self._trace = None
        self._kf = None
        self._roots_of_unity = {}
        self._trace_preimages = {}

    # -------------------------------------------------------- construction

    def _check_modulus(self, modulus):
        coeffs = tuple(int(c) for c in modulus)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) != self.e + 1:
            raise ValueError(f"modulus must have degree {self.e}")
        if coeffs[-1] != 1:
            raise ValueError("modulus must be monic")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"modulus coefficients must lie in [0, {self.p})")
        if self.e > 1 and not self._modulus_irreducible(coeffs):
            raise ValueError(f"modulus {coeffs} is reducible over F_{self.p}")
        return coeffs

    def _modulus_irreducible(self, coeffs):
        from .polyring import Poly, is_irreducible

        base = FieldCtx(self.p)
        return is_irreducible(Poly(base, coeffs))

    def _default_modulus(self):
        # smallest monic irreducible of degree e over F_p, comparing
        # high-degree coefficients first (= ascending index order)
        from .polyring import Poly, is_irreducible

        base = FieldCtx(self.p)
        p, e = self.p, self.e
        for idx in range(p**e):
            digits = []
            d = idx
            for _ in range(e):
                digits.append(d % p)
                d //= p
            coeffs = tuple(digits) + (1,)
            if is_irreducible(Poly(base, coeffs)):
                return coeffs
        raise AssertionError("no irreducible modulus found")

    def _find_generator(self):
        q1 = self.q - 1
        for c in range(1, self.q):
            if all(self._raw_pow(c, q1 // r) != 1 for r in self._q1_primes):
                return c
        raise AssertionError("no generator found")

    # --------------------------------------------- table-free digit arithmetic

    def digits(self, code):
        p = self.p
        out = []
        for _ in range(self.e):
            out.append(code % p)
            code //= p
        return tuple(out)

    def from_digits(self, digits):
        code = 0
        for d in reversed(tuple(digits)):
            code = code * self.p + d % self.p
        return code

    def add(self, a, b):
        p = self.p
        if self.e == 1:
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

    def neg(self, a):
        p = self.p
        if self.e == 1:
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

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _raw_mul(self, a, b):
        # multiplication without tables; used while building them
        p = self.p
        if self.e == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] = (conv[i + j] + x * y) % p
        mod = self.modulus
        for i in range(len(conv) - 1, self.e - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                off = i - self.e
                for j in range(self.e):
                    conv[off + j] = (conv[off + j] - c * mod[j]) % p
        return self.from_digits(conv[: self.e])

    def _raw_pow(self, a, n):
        r = 1
        b = a
        while n:
            if n & 1:
                r = self._raw_mul(r, b)
            b = self._raw_mul(b, b)
            n >>= 1
        return r

    # ------------------------------------------------------- table arithmetic

    def _build_tables(self):
        q = self.q
        exp = []
        log = [-1] * q
        cur = 1
        for i in range(q - 1):
            exp.append(cur)
            log[cur] = i
            cur = self._raw_mul(cur, self.primitive_g)
        if cur != 1 or any(log[c] < 0 for c in range(1, q)):
            raise AssertionError("generator does not enumerate the units")
        self._exp = exp
        self._log = log

    @property
    def exp_table(self):
        if self._exp is None:
            self._build_tables()
        return self._exp

    @property
    def log_table(self):
        if self._log is None:
            self._build_tables()
        return self._log

    @property
    def trace_table(self):
        if self._trace is None:
            table = []
            for c in range(self.q):
                acc = c
                x = c
                for _ in range(self.e - 1):
                    x = self.pow(x, self.p)
                    acc = self.add(acc, x)
                if acc >= self.p:
                    raise AssertionError("trace landed outside F_p")
                table.append(acc)
            self._trace = table
        return self._trace

    @property
    def kf(self):
        """Field handle for the selected kernel backend."""
        if self._kf is None:
            self._kf = kern.make_field(
                self.p, self.e, self.exp_table, self.log_table, self.trace_table
            )
        return self._kf

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        log = self.log_table
        return self._exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        log = self.log_table
        return self._exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("inversion of zero field element")
            return 1 if n == 0 else 0
        log = self.log_table
        return self._exp[(log[a] * n) % (self.q - 1)]

    def pth_root(self, a):
        # inverse of x -> x^p; bijective on F_q
        return self.pow(a, self.q // self.p)

    # ------------------------------------------------------------- structure

    def trace_to_prime(self, x):
        """Absolute trace F_q -> F_p, as an int in [0, p)."""
        return self.trace_table[_code(self, x)]

    def trace_preimage(self, tau):
        """Smallest code whose absolute trace is tau."""
        tau %= self.p
        hit = self._trace_preimages.get(tau)
        if hit is None:
            table = self.trace_table
            for c in range(self.q):
                if table[c] == tau:
                    hit = c
                    break
            else:
                raise AssertionError("trace is surjective; no preimage found")
            self._trace_preimages[tau] = hit
        return hit

    def _check_subgroup_order(self, m):
        if not is_prime(m):
            raise ValueError(f"m = {m} must be prime")
        if (self.q - 1) % m:
            raise ValueError(f"m = {m} does not divide q - 1 = {self.q - 1}")

    def root_of_unity(self, m):
        """Canonical primitive m-th root of unity: primitive_g^((q-1)/m)."""
        self._check_subgroup_order(m)
        hit = self._roots_of_unity.get(m)
        if hit is None:
            hit = self.pow(self.primitive_g, (self.q - 1) // m)
            if hit == 1 or self.pow(hit, m) != 1:
                raise AssertionError("root of unity has wrong order")
            self._roots_of_unity[m] = hit
        return hit

    def mth_power_class(self, c, m):
        """k in [0, m) with c^((q-1)/m) = root_of_unity(m)^k; 0 iff c is an m-th power."""
        self._check_subgroup_order(m)
        c = _code(self, c)
        if c == 0:
            raise ValueError("the zero element has no power class")
        r = self.pow(c, (self.q - 1) // m)
        eta = self.root_of_unity(m)
        val = 1
        for k in range(m):
            if r == val:
                return k
            val = self.mul(val, eta)
        raise AssertionError("power class value outside the order-m subgroup")

    def mth_root_unit(self, c, m):
        """Code x with x^m = c and smallest discrete log base primitive_g, or None."""
        self._check_subgroup_order(m)
        c = _code(self, c)
        if c == 0:
            return 0
        lg = self.log_table[c]
        if lg % m:
            return None
        q1 = self.q - 1
        step = q1 // m
        best = min((lg // m + j * step) % q1 for j in range(m))
        return self._exp[best]

    def solve_artin_schreier_const(self, c):
        """FieldElem b with b^p - b = c, or None (exists iff trace(c) = 0)."""
        c = _code(self, c)
        if self.trace_to_prime(c) != 0:
            return None
        e, p = self.e, self.p
        cols = []
        for j in range(e):
            bj = p**j
            im = self.sub(self.pow(bj, p), bj)
            cols.append(self.digits(im))
        rows = [[cols[j][d] for j in range(e)] for d in range(e)]
        x = linalg.solve(rows, list(self.digits(c)), p)
        if x is None:
            raise AssertionError("zero-trace element must have a preimage")
        b = self.from_digits(x)
        if self.sub(self.pow(b, p), b) != c:
            raise AssertionError("preimage verification failed")
        return FieldElem(self, b)

    # ------------------------------------------------------------- elements

    def elem(self, x):
        """FieldElem from a code in [0, q) or a coordinate sequence over F_p."""
        if isinstance(x, FieldElem):
            if x.ctx != self:
                raise ValueError("element belongs to a different field")
            return x
        if isinstance(x, int):
            if not 0 <= x < self.q:
                raise ValueError(f"code {x} out of range [0, {self.q})")
            return FieldElem(self, x)
        seq = tuple(int(v) % self.p for v in x)
        if len(seq) > self.e:
            raise ValueError(f"at most {self.e} coordinates expected")
        return FieldElem(self, self.from_digits(seq))

    @property
    def zero(self):
        return FieldElem(self, 0)

    @property
    def one(self):
        return FieldElem(self, 1)

    def format_elem(self, code):
        """Canonical text form: plain integer for e = 1, else a polynomial in u."""
        if self.e == 1:
            return str(code)
        if code == 0:
            return "0"
        terms = []
        for i in reversed(range(self.e)):
            d = (code // self.p**i) % self.p
            if not d:
                continue
            if i == 0:
                terms.append(str(d))
            else:
                var = "u" if i == 1 else f"u^{i}"
                terms.append(var if d == 1 else f"{d}*{var}")
        return "+".join(terms)

    # ---------------------------------------------------------------- dunder

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"F_{self.p}"
        return f"F_{self.q}"


def _code(ctx, x):
    if isinstance(x, FieldElem):
        if x.ctx != ctx:
            raise ValueError("element belongs to a different field")
        return x.code
    if isinstance(x, int):
        if not 0 <= x < ctx.q:
            raise ValueError(f"code {x} out of range [0, {ctx.q})")
        return x
    raise TypeError(f"expected FieldElem or int code, got {type(x).__name__}")


class FieldElem:
    """One element of a FieldCtx; arithmetic via the context tables.

    Integers mixed into arithmetic are taken modulo p, i.e. they denote
    prime-subfield constants.
    """

    __slots__ = ("ctx", "code")

    def __init__(self, ctx, code):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self):
        return self.ctx.digits(self.code)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise ValueError("elements from different fields")
            return other.code
        if isinstance(other, int):
            return other % self.ctx.p
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub(c, self.code))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul(self.code, self.ctx.inv(c)))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul(c, self.ctx.inv(self.code)))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.pow(self.code, n))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"FieldElem({self.ctx.format_elem(self.code)} in {self.ctx!r})"

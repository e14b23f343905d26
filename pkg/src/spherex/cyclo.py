"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are kept in canonical form: a sparse integer polynomial in zeta_n over
the power basis {zeta_n^e : 0 <= e < phi(n)} (reduced modulo the n-th
cyclotomic polynomial), divided by a positive integer denominator, with the
conductor n minimal (n is 1 for rationals and never 2 mod 4).  Equal field
elements therefore have identical representations and structural equality is
field equality.  Instances are immutable and safe to share between threads.

Conductor minimization is exact: repeated primes are visible as exponent
divisibility in the power basis, and dropping a prime entirely is decided by
splitting exponents through the CRT isomorphism Q(zeta_n) = Q(zeta_p) (x)
Q(zeta_{n/p}) and checking the non-trivial tensor coordinates vanish.
"""

from array import array
from fractions import Fraction
from math import gcd
import cmath

from . import kernel
from .errors import NotRationalError, NotRootOfUnityError

__all__ = [
    "Cyc",
    "Accumulator",
    "cyc_make",
    "cyc_as_rational",
    "root_of_unity_log",
    "cyclotomic_poly",
]


def _euler_phi(n):
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _prime_factors(n):
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def _poly_divexact(a, b):
    # exact division of integer polynomials, b monic; coeffs low -> high
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    assert all(c == 0 for c in a[:db]), "inexact polynomial division"
    return q


_CYCLO_CACHE = {1: (-1, 1)}


def cyclotomic_poly(n):
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    poly = tuple(poly)
    _CYCLO_CACHE[n] = poly
    return poly


class _Ctx:
    """Per-conductor reduction data; rows of x^e mod Phi_n built on demand."""

    __slots__ = ("n", "phi", "primes", "_rows", "_cur", "_first", "_row_arrays", "_units")

    def __init__(self, n):
        self.n = n
        self.phi = _euler_phi(n)
        self.primes = _prime_factors(n)
        self._row_arrays = None
        self._units = None
        if n == 1:
            self._rows = []
            self._first = None
            self._cur = None
            return
        mod = cyclotomic_poly(n)
        self._first = [-c for c in mod[: self.phi]]
        self._rows = [tuple((e, c) for e, c in enumerate(self._first) if c)]
        self._cur = self._first[:]

    def row(self, k):
        """Sparse expansion of x^(phi + k) mod Phi_n, 0 <= k < n - phi."""
        rows = self._rows
        phi = self.phi
        first = self._first
        while len(rows) <= k:
            cur = self._cur
            top = cur[phi - 1]
            cur = [0] + cur[: phi - 1]
            if top:
                for e in range(phi):
                    if first[e]:
                        cur[e] += top * first[e]
            self._cur = cur
            rows.append(tuple((e, c) for e, c in enumerate(cur) if c))
        return rows[k]

    def row_arrays(self):
        # flattened int64 view of all rows, for the compiled kernel
        if self._row_arrays is None:
            if self.n > self.phi:
                self.row(self.n - self.phi - 1)
            off = array("i", [0])
            exps = array("i")
            coefs = array("q")
            for row in self._rows:
                for e, c in row:
                    exps.append(e)
                    coefs.append(c)
                off.append(len(exps))
            self._row_arrays = (off, exps, coefs)
        return self._row_arrays

    def units(self):
        if self._units is None:
            n = self.n
            self._units = tuple(a for a in range(1, n) if gcd(a, n) == 1) or (1,)
        return self._units


_CTX_CACHE = {}


def _ctx(n):
    ctx = _CTX_CACHE.get(n)
    if ctx is None:
        ctx = _Ctx(n)
        _CTX_CACHE[n] = ctx
    return ctx


def _reduce_items(n, items):
    """Fold (exp, coef) pairs into the power basis of conductor n."""
    ctx = _ctx(n)
    phi = ctx.phi
    acc = {}
    for e, c in items:
        if not c:
            continue
        e %= n
        if e < phi:
            acc[e] = acc.get(e, 0) + c
        else:
            for re, rc in ctx.row(e - phi):
                acc[re] = acc.get(re, 0) + rc * c
    return {e: c for e, c in acc.items() if c}


def _tensor_split(n, part, M, acc):
    """Re-express acc over conductor M if it lies in Q(zeta_M), else None.

    part is an odd prime exactly dividing n, or 4 when 4 exactly divides n;
    M = n // part is coprime to part.  Uses zeta_n^e = zeta_part^u zeta_M^v
    with u, v the CRT coordinates of e.
    """
    minv = pow(M, -1, part)
    pinv = pow(part, -1, M) if M > 1 else 0
    buckets = [dict() for _ in range(part)]
    for e, c in acc.items():
        u = (e * minv) % part
        v = (e * pinv) % M
        b = buckets[u]
        b[v] = b.get(v, 0) + c
    def diff(i, j):
        d = dict(buckets[i])
        for v, c in buckets[j].items():
            d[v] = d.get(v, 0) - c
        return _reduce_items(M, d.items())
    if part == 4:
        # basis 1, zeta_4 over Q(zeta_M); zeta_4^2 = -1 folds u=2,3 down
        if diff(1, 3):
            return None
        return diff(0, 2)
    # odd prime: basis zeta_p^u, u < p-1; zeta_p^(p-1) = -(1 + ... + zeta_p^(p-2))
    last = part - 1
    for u in range(1, part - 1):
        if diff(u, last):
            return None
    return diff(0, last)


def _canon(n, den, acc):
    """Minimize the conductor of a reduced coefficient dict and build a Cyc."""
    assert den > 0
    while True:
        if not acc:
            return _ZERO
        if n == 1:
            break
        g = n
        for e in acc:
            g = gcd(g, e)
            if g == 1:
                break
        if g > 1:
            n //= g
            acc = _reduce_items(n, ((e // g, c) for e, c in acc.items()))
            continue
        if n % 4 == 2:
            m = n // 2
            h = (m + 1) // 2
            acc = _reduce_items(
                m, (((e * h) % m, c if e % 2 == 0 else -c) for e, c in acc.items())
            )
            n = m
            continue
        dropped = False
        for p in _ctx(n).primes:
            if p == 2:
                if n % 8 == 0:
                    continue  # membership in Q(zeta_{n/2}) shows as even exponents
                part = 4
            else:
                if (n // p) % p == 0:
                    continue  # same: repeated primes are caught by the gcd path
                part = p
            comp = _tensor_split(n, part, n // part, acc)
            if comp is not None:
                n //= part
                acc = comp
                dropped = True
                break
        if not dropped:
            break
    content = den
    for c in acc.values():
        content = gcd(content, c)
        if content == 1:
            break
    if content > 1:
        den //= content
        acc = {e: c // content for e, c in acc.items()}
    if not acc:
        return _ZERO
    return Cyc._raw(n, den, tuple(sorted(acc.items())))


def _apply_galois(n, acc, a):
    return _reduce_items(n, (((e * a) % n, c) for e, c in acc.items()))


def _coerce_terms(terms):
    """Split rational coefficients into integers over a common denominator."""
    den = 1
    pairs = []
    for e, c in terms:
        c = Fraction(c)
        pairs.append((e, c))
        den = den * c.denominator // gcd(den, c.denominator)
    return den, [(e, int(c * den)) for e, c in pairs]


class Cyc:
    """An element of Q(zeta_n) in canonical form."""

    __slots__ = ("n", "den", "terms", "_arrays")

    def __init__(self, value=0):
        src = value if isinstance(value, Cyc) else Cyc.rational(value)
        object.__setattr__(self, "n", src.n)
        object.__setattr__(self, "den", src.den)
        object.__setattr__(self, "terms", src.terms)
        object.__setattr__(self, "_arrays", None)

    @staticmethod
    def _raw(n, den, terms):
        self = object.__new__(Cyc)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_arrays", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Cyc values are immutable")

    def term_arrays(self):
        """(exps, coefs) as int arrays for the compiled kernel; cached."""
        if self._arrays is None:
            object.__setattr__(
                self,
                "_arrays",
                (
                    array("i", [e for e, _ in self.terms]),
                    array("q", [c for _, c in self.terms]),
                ),
            )
        return self._arrays

    @staticmethod
    def make(n, terms):
        if n < 1:
            raise ValueError("conductor must be a positive integer")
        den, pairs = _coerce_terms(terms)
        return _canon(n, den, _reduce_items(n, pairs))

    @staticmethod
    def root(n, e=1):
        """zeta_n^e."""
        return Cyc.make(n, [(e, 1)])

    @staticmethod
    def rational(value, den=None):
        f = Fraction(value) if den is None else Fraction(value, den)
        if f == 0:
            return _ZERO
        return Cyc._raw(1, f.denominator, ((0, f.numerator),))

    # ---- predicates and conversions -------------------------------------

    def is_zero(self):
        return not self.terms

    def is_rational(self):
        return self.n == 1

    def as_fraction(self):
        if self.n != 1:
            raise NotRationalError(self)
        if not self.terms:
            return Fraction(0)
        return Fraction(self.terms[0][1], self.den)

    def __complex__(self):
        z = 0j
        for e, c in self.terms:
            z += c * cmath.exp(2j * cmath.pi * e / self.n)
        return z / self.den

    def __bool__(self):
        return bool(self.terms)

    # ---- arithmetic ------------------------------------------------------

    def _lift(self, n):
        f = n // self.n
        return [(e * f, c) for e, c in self.terms]

    def __add__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        n = _lcm(self.n, other.n)
        den = self.den * other.den // gcd(self.den, other.den)
        sa = den // self.den
        sb = den // other.den
        items = [(e, c * sa) for e, c in self._lift(n)]
        items += [(e, c * sb) for e, c in other._lift(n)]
        return _canon(n, den, _reduce_items(n, items))

    __radd__ = __add__

    def __neg__(self):
        return Cyc._raw(self.n, self.den, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return _ZERO
        n = _lcm(self.n, other.n)
        fa = n // self.n
        fb = n // other.n
        items = []
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                items.append((ea * fa + eb * fb, ca * cb))
        return _canon(n, self.den * other.den, _reduce_items(n, items))

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse via the product of Galois conjugates."""
        if not self.terms:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.n == 1:
            return Cyc.rational(Fraction(self.den, self.terms[0][1]))
        prod = _ONE
        for a in _ctx(self.n).units():
            if a != 1:
                prod = prod * self.galois(a)
        norm = (self * prod).as_fraction()
        return prod * Cyc.rational(1 / norm)

    def __truediv__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return _as_cyc(other) * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def galois(self, a):
        """Apply the field automorphism zeta_n -> zeta_n^a (a coprime to n)."""
        if self.n == 1:
            return self
        a %= self.n
        if gcd(a, self.n) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        return _canon(self.n, self.den, _apply_galois(self.n, dict(self.terms), a))

    def conj(self):
        """Complex conjugation zeta -> zeta^-1."""
        if self.n == 1:
            return self
        return self.galois(self.n - 1)

    # ---- root-of-unity structure ----------------------------------------

    def root_log(self):
        """Minimal (order, exponent) with self == zeta_order^exponent."""
        if self * self.conj() != _ONE:
            raise NotRootOfUnityError(self)
        n = self.n
        if n == 1:
            f = self.as_fraction()
            if f == 1:
                return (1, 0)
            if f == -1:
                return (2, 1)
            raise NotRootOfUnityError(self)
        L = n if n % 2 == 0 else 2 * n
        signs = (1,) if n % 2 == 0 else (1, -1)
        for e in range(n):
            cand = Cyc.make(n, [(e, 1)])
            for sign in signs:
                if self == (cand if sign == 1 else -cand):
                    k = e * (L // n)
                    if sign == -1:
                        k = (k + L // 2) % L
                    g = gcd(k, L)
                    return (L // g, (k // g) % (L // g))
        raise NotRootOfUnityError(self)

    # ---- structure, rendering -------------------------------------------

    def __eq__(self, other):
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return (
            self.n == other.n and self.den == other.den and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.den, self.terms))

    def coeff_map(self):
        """Exponent -> rational coefficient view of the canonical form."""
        return {e: Fraction(c, self.den) for e, c in self.terms}

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            coef = Fraction(c, self.den)
            if e == 0:
                parts.append(str(coef))
            else:
                zee = "z(%d)" % self.n if e == 1 else "z(%d)^%d" % (self.n, e)
                if coef == 1:
                    parts.append(zee)
                elif coef == -1:
                    parts.append("-" + zee)
                else:
                    parts.append("%s*%s" % (coef, zee))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self):
        return {
            "conductor": self.n,
            "terms": [[e, str(Fraction(c, self.den))] for e, c in self.terms],
        }

    @staticmethod
    def from_json(obj):
        return Cyc.make(obj["conductor"], [(e, Fraction(s)) for e, s in obj["terms"]])

    def __repr__(self):
        return "Cyc(%s)" % self.to_text()


_ZERO = Cyc._raw(1, 1, ())
_ONE = Cyc._raw(1, 1, ((0, 1),))

ZERO = _ZERO
ONE = _ONE


def _as_cyc(value):
    if isinstance(value, Cyc):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyc.rational(value)
    return NotImplemented


def _lcm(a, b):
    return a * b // gcd(a, b)


# ---- accumulator for long sums ------------------------------------------


class Accumulator:
    """Fixed-conductor accumulator for sums of products of Cyc values.

    Avoids re-canonicalizing after every partial sum; finalize() returns the
    canonical Cyc.  Uses the compiled kernel when available, transparently
    falling back to big-integer arithmetic on overflow.
    """

    def __init__(self, n):
        self.n = n
        self.ctx = _ctx(n)
        self.den = 1
        self.fast = kernel.HAVE_FAST and n > 1
        size = max(self.ctx.phi, 1)
        self.nums = array("q", [0] * size) if self.fast else [0] * size

    def _demote(self):
        self.nums = list(self.nums)
        self.fast = False

    def _rescale(self, factor):
        if factor == 1:
            return
        if self.fast:
            try:
                kernel.scale_fast(self.nums, factor)
                return
            except OverflowError:
                self._demote()
        kernel.scale_pure(self.nums, factor)

    def add_product(self, a, b, scale=1, scale_den=1):
        """Accumulate scale/scale_den * a * b."""
        a = _as_cyc(a)
        b = _as_cyc(b)
        if not a.terms or not b.terms or scale == 0:
            return
        if self.n % a.n or self.n % b.n:
            raise ValueError(
                "conductor %d does not contain Q(zeta_%d), Q(zeta_%d)"
                % (self.n, a.n, b.n)
            )
        d = a.den * b.den * scale_den
        new_den = self.den * d // gcd(self.den, d)
        self._rescale(new_den // self.den)
        term_scale = scale * (new_den // d)
        self.den = new_den
        n, phi = self.n, self.ctx.phi
        fa, fb = n // a.n, n // b.n
        if self.fast:
            try:
                off, exps, coefs = self.ctx.row_arrays()
                ae, ac = a.term_arrays()
                be, bc = b.term_arrays()
                kernel.addmul_fast(
                    self.nums, n, phi, off, exps, coefs, ae, ac, fa, be, bc, fb,
                    term_scale,
                )
                return
            except OverflowError:
                self._demote()
        kernel.addmul_pure(
            self.nums, n, phi, self.ctx.row,
            [e for e, _ in a.terms], [c for _, c in a.terms], fa,
            [e for e, _ in b.terms], [c for _, c in b.terms], fb,
            term_scale,
        )

    def add(self, a, scale=1, scale_den=1):
        self.add_product(a, _ONE, scale, scale_den)

    def finalize(self):
        acc = {e: c for e, c in enumerate(self.nums) if c}
        return _canon(self.n, self.den, acc)


def lcm_conductors(values):
    n = 1
    for v in values:
        n = _lcm(n, v.n)
    return n


# ---- spec-level operation names ------------------------------------------


def cyc_make(n, terms):
    """Canonical element sum(c * zeta_n^e) from a term list."""
    return Cyc.make(n, terms)


def cyc_as_rational(x):
    """The Fraction value of x, or NotRationalError carrying the canonical form."""
    return x.as_fraction()


def root_of_unity_log(x):
    """Minimal (order, exponent) with x == zeta_order^exponent."""
    return x.root_log()

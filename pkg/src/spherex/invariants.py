"""xi-invariants and Cheeger-Chern-Simons numbers of group representations.

The reduced xi-invariant of a character chi on S^3/G is the exact finite sum

    xi(chi) = (1/|G|) sum_{g != 1} (chi(g) - chi(1)) * def(g),

where def(g) = s(g) / ((1 - l1)(1 - l2)) weights each element by its
eigenvalues l1, l2 in the defining U(2) representation and s is a fixed
degree-1 character with s^2 = det of that representation (the square-root
branch).  Everything is carried exactly; reduction mod Z happens last.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .cyclo import Accumulator, Cyc, lcm_conductors
from .errors import (
    CatalogError,
    ConstructionError,
    IrrationalXiError,
    ParameterError,
    SpinCharacterError,
)
from .matgroup import abelianization, build_group, FamilySpec
from .refdata import BPG_TABLE
from .reptheory import (
    Character,
    Irrep,
    det_character,
    irrep_catalog,
    one_dim_from_gen_values,
)


@dataclass(frozen=True, order=True)
class RatMod1:
    """An exact rational residue in [0, 1), i.e. an element of Q/Z."""

    value: Fraction

    @staticmethod
    def of(x):
        return RatMod1(Fraction(x) % 1)

    def __add__(self, other):
        return RatMod1((self.value + other.value) % 1)

    def __sub__(self, other):
        return RatMod1((self.value - other.value) % 1)

    def __mul__(self, k):
        return RatMod1((self.value * k) % 1)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return "RatMod1(%s)" % self.value


@dataclass(frozen=True)
class SpinSqrt:
    """The chosen square root of det of the defining representation."""

    character: Character = field(repr=False)
    gen_values: tuple  # ((generator display name, (order, exponent)), ...)
    candidates: tuple = field(repr=False, default=())

    def __call__(self, i):
        return self.character.value_at_element(i)


@dataclass(frozen=True)
class CcsVector:
    """(rank; first CCS-numbers on the chosen H1 generators; second CCS-number)."""

    rank: int
    first: tuple
    second: RatMod1

    def key(self):
        return (self.rank, tuple(v.value for v in self.first), self.second.value)

    def __str__(self):
        firsts = ",".join(str(v) for v in self.first)
        return "(%d; %s; %s)" % (self.rank, firsts, self.second)


def det_of_natural(g):
    """Determinant of the defining embedding, as a degree-1 character."""
    return one_dim_from_gen_values(
        g, {name: m.det() for name, m in zip(g.gen_names, g.gen_mats)}
    )


def _all_one_dim_characters(g, ab):
    out = []

    def rec(i, vals):
        if i == len(ab.factors):
            out.append(tuple(vals))
            return
        for v in range(ab.factors[i]):
            rec(i + 1, vals + [v])

    rec(0, [])
    chars = []
    for vals in out:
        values = []
        for rep in g.class_reps:
            res = ab.project(rep)
            acc = Cyc.rational(1)
            for f, e, v in zip(ab.factors, res, vals):
                if v and e:
                    acc = acc * Cyc.root(f, (v * e) % f)
            values.append(acc)
        chars.append(Character(g, tuple(values)))
    return chars


def spin_sqrt_character(g, ab=None, override=None):
    """Select the degree-1 character s with s^2 = det of the embedding.

    Among all square roots, prefer per-generator order agreement with det,
    then the lexicographically smallest exponent tuple.  `override` maps
    chosen-generator display names to (order, exponent) pairs.
    """
    if ab is None:
        ab = abelianization(g)
    det = det_of_natural(g)
    candidates = [
        s for s in _all_one_dim_characters(g, ab) if s.mul(s).values == det.values
    ]
    if not candidates:
        raise SpinCharacterError("no square-root character of det exists")

    def describe(s):
        return tuple(
            (name, s.value_at_element(idx).root_log())
            for name, idx in zip(ab.gen_names, ab.gen_indices)
        )

    if override is not None:
        for name in ab.gen_names:
            if name not in override:
                raise SpinCharacterError("override must assign generator %r" % name)
        wanted = [Cyc.root(*override[name]) for name in ab.gen_names]
        for s in candidates:
            if all(
                s.value_at_element(idx) == w
                for idx, w in zip(ab.gen_indices, wanted)
            ):
                return SpinSqrt(s, describe(s), tuple(describe(c) for c in candidates))
        raise SpinCharacterError(
            "override is not a square root of det; candidates: %s"
            % [describe(c) for c in candidates]
        )

    det_orders = [
        det.value_at_element(idx).root_log()[0] for idx in ab.gen_indices
    ]

    def key(s):
        logs = [s.value_at_element(idx).root_log() for idx in ab.gen_indices]
        penalty = sum(1 for (o, _), od in zip(logs, det_orders) if o != od)
        return (penalty, tuple(Fraction(e, o) for o, e in logs))

    best = min(candidates, key=key)
    return SpinSqrt(best, describe(best), tuple(describe(c) for c in candidates))


def _inv_one_minus_root(o, a):
    """1 / (1 - zeta_o^a) for a not divisible by o, in closed form."""
    d = o // gcd(o, a)
    e = (a // gcd(o, a)) % d
    return Cyc.make(d, [((i * e) % d, Fraction(-i, d)) for i in range(1, d)])


def defect(g, s, elem):
    """s(g) / (1 - Tr + det) for a non-identity element, exact."""
    if elem == 0:
        raise ParameterError("the defect is undefined at the identity")
    m = g.elements[elem]
    o = g.element_order(elem)
    det = m.det()
    do, de = det.root_log()
    if o % do:
        raise ConstructionError("determinant order does not divide element order")
    dexp = de * (o // do)
    tr = m.trace()
    powers = [Cyc.root(o, i) if o > 1 else Cyc.rational(1) for i in range(o)]
    pair = None
    for a in range(o):
        b = (dexp - a) % o
        if powers[a] + powers[b] == tr:
            pair = (a, b)
            break
    if pair is None:
        raise ConstructionError("element has no root-of-unity eigenvalue pair")
    a, b = pair
    if a % o == 0 or b % o == 0:
        raise ConstructionError("eigenvalue 1 on a non-identity element")
    return s(elem) * _inv_one_minus_root(o, a) * _inv_one_minus_root(o, b)


class InvariantContext:
    """Per-group cache of catalog, abelianization, spin character and defects."""

    def __init__(self, group, spin_override=None):
        self.group = group
        self.ab = abelianization(group)
        self.catalog = irrep_catalog(group)
        self.spin = spin_sqrt_character(group, self.ab, override=spin_override)
        self._defects = None
        self._xi_cache = {}
        self._det_cache = {}
        self._labels = None

    def det_char(self, chi):
        """Cached determinant character of chi."""
        hit = self._det_cache.get(chi.values)
        if hit is None:
            hit = self._det_cache[chi.values] = det_character(chi)
        return hit

    @property
    def defects(self):
        """Defect per conjugacy class (class index -> Cyc), identity omitted."""
        if self._defects is None:
            out = {}
            for ci, cls in enumerate(self.group.classes):
                if cls[0] == 0:
                    continue
                out[ci] = defect(self.group, self.spin, cls[0])
            self._defects = out
        return self._defects

    def xi_exact(self, chi):
        """The raw xi sum as an exact Fraction (before reduction mod Z)."""
        key = chi.values
        hit = self._xi_cache.get(key)
        if hit is not None:
            return hit
        g = self.group
        defs = self.defects
        deg = chi.values[0]
        n = lcm_conductors(list(chi.values) + list(defs.values()))
        acc = Accumulator(n)
        for ci, d in defs.items():
            acc.add_product(chi.values[ci] - deg, d, len(g.classes[ci]))
        total = acc.finalize()
        try:
            raw = total.as_fraction() / len(g)
        except Exception:
            raise IrrationalXiError(total)
        self._xi_cache[key] = raw
        return raw

    def xi(self, chi):
        return RatMod1.of(self.xi_exact(chi))

    def first_ccs(self, chi):
        det = self.det_char(chi)
        out = []
        for idx in self.ab.gen_indices:
            o, e = det.value_at_element(idx).root_log()
            out.append(RatMod1(Fraction(e, o)))
        return tuple(out)

    def second_ccs(self, chi):
        det = self.det_char(chi)
        xi_det = self.xi_exact(det)
        if all(v == Cyc.rational(1) for v in det.values):
            assert xi_det == 0, "xi of the trivial determinant must vanish"
        return RatMod1.of(self.xi_exact(chi) - xi_det)

    def ccs_vector(self, chi):
        return CcsVector(chi.degree, self.first_ccs(chi), self.second_ccs(chi))

    def vectors(self):
        """[(label, CcsVector)] over the whole catalog, in catalog order."""
        return [(item.label, self.ccs_vector(item.character)) for item in self.catalog]

    def reference_labels(self):
        """Structural label -> published alpha label, for BT/BO/BI catalogs.

        The assignment matches each computed (degree, first, second) vector
        against the reference column data; a failed match is a hard error.
        """
        if self._labels is None:
            kind = self.group.spec.kind if self.group.spec else None
            if kind == "PROD" and self.group.spec.inner.kind in BPG_TABLE:
                inner_ctx = InvariantContext(self.group.inner_group)
                inner_map = inner_ctx.reference_labels()
                out = {}
                for item in self.catalog:
                    base, _, j = item.label.rpartition("*a")
                    out[item.label] = "%s*a%s" % (inner_map[base], j)
                self._labels = out
            elif kind not in BPG_TABLE:
                self._labels = {item.label: item.label for item in self.catalog}
            else:
                rows = list(BPG_TABLE[kind])
                mapping = {}
                for item in self.catalog:
                    vec = self.ccs_vector(item.character)
                    first = vec.first[0].value if vec.first else None
                    hit = None
                    for row in rows:
                        if row[1] == vec.rank and row[2] == first and row[3] == vec.second.value:
                            hit = row
                            break
                    if hit is None:
                        raise CatalogError(
                            "no reference column matches %s with vector %s"
                            % (item.label, vec)
                        )
                    rows.remove(hit)
                    mapping[item.label] = hit[0]
                self._labels = mapping
        return self._labels


# ---------------------------------------------------------------------------
# spec-level operations


def _bare_context(g, s, ab=None):
    ctx = InvariantContext.__new__(InvariantContext)
    ctx.group = g
    ctx.ab = ab
    ctx.spin = s
    ctx._defects = None
    ctx._xi_cache = {}
    ctx._det_cache = {}
    ctx._labels = None
    return ctx


def xi_tilde(g, chi, s):
    """Reduced xi-invariant of the character chi, as an element of Q/Z."""
    return RatMod1.of(_bare_context(g, s).xi_exact(chi))


def first_ccs(chi, ab):
    det = det_character(chi)
    out = []
    for idx in ab.gen_indices:
        o, e = det.value_at_element(idx).root_log()
        out.append(RatMod1(Fraction(e, o)))
    return tuple(out)


def second_ccs(chi, g, s):
    return _bare_context(g, s).second_ccs(chi)


def ccs_vector(irrep, g, ab, s):
    chi = irrep.character if isinstance(irrep, Irrep) else irrep
    ctx = _bare_context(g, s, ab)
    return CcsVector(chi.degree, ctx.first_ccs(chi), ctx.second_ccs(chi))


def xi_closed_form_bd(q, t):
    """(t^2 - 2qt - 2q) / 4q reduced mod Z."""
    return RatMod1.of(xi_closed_form_bd_exact(q, t))


def xi_closed_form_bd_exact(q, t):
    if q < 2 or not (1 <= t <= q - 1):
        raise ParameterError("need q >= 2 and 1 <= t <= q-1")
    return Fraction(t * t - 2 * q * t - 2 * q, 4 * q)


_D_CLOSED_DENOMS = {}


def xi_closed_form_d_exact(k, r, t, s):
    """The triple-sum closed form for rho_{t,s} of the 2-group dihedral family."""
    if not (k > 1 and r >= 1):
        raise ParameterError("need k > 1 and r >= 1")
    if not (1 <= t <= 2 * r and 0 <= s <= 2 ** (k - 1) - 1):
        raise ParameterError("parameters t, s out of range")
    n2 = 2 ** k
    q1 = 2 * r + 1
    key = (k, r)
    if key not in _D_CLOSED_DENOMS:
        inv1 = {}
        for l in range(1, n2):
            den = Cyc.root(n2, l) + Cyc.root(n2, (-l) % n2) - ((-1) ** l) * 2
            inv1[l] = den.inv()
        inv2 = {}
        for qq in range(1, q1):
            for l in range(n2):
                den = (
                    Cyc.root(n2, l % n2) + Cyc.root(n2, (-l) % n2)
                    - ((-1) ** l) * (Cyc.root(q1, qq) + Cyc.root(q1, q1 - qq))
                )
                inv2[(qq, l)] = den.inv()
        inv3 = {}
        for l in range(n2):
            e = 2 * l + 1
            den = Cyc.root(2 * n2, e) + Cyc.root(2 * n2, (2 * n2 - e) % (2 * n2))
            inv3[l] = den.inv()
        _D_CLOSED_DENOMS[key] = (inv1, inv2, inv3)
    inv1, inv2, inv3 = _D_CLOSED_DENOMS[key]
    acc = Accumulator(lcm_conductors(
        [v for v in inv1.values()] + [v for v in inv2.values()] + [v for v in inv3.values()]
        + [Cyc.root(n2), Cyc.root(q1) if q1 > 1 else Cyc.rational(1)]
    ))
    for l in range(1, n2):
        num = Cyc.root(n2, (l * s) % n2) * (2 * (-1) ** (t * l)) - 2
        acc.add_product(num, inv1[l])
    for qq in range(1, q1):
        for l in range(n2):
            num = (
                Cyc.root(n2, (l * s) % n2)
                * (Cyc.root(q1, (t * qq) % q1) + Cyc.root(q1, (-t * qq) % q1))
                * ((-1) ** (t * l))
                - 2
            )
            acc.add_product(num, inv2[(qq, l)])
    for l in range(n2):
        acc.add_product(Cyc.rational(-2 * q1), inv3[l])
    total = acc.finalize()
    try:
        return total.as_fraction() / (2 * n2 * q1)
    except Exception:
        raise IrrationalXiError(total)


def xi_closed_form_d(k, r, t, s):
    return RatMod1.of(xi_closed_form_d_exact(k, r, t, s))


def telescoping_identity_check(n, t, j):
    """Exact check of the telescoping quotient identity for zeta_n^j != 1."""
    if n < 1 or t < 1:
        raise ParameterError("need n >= 1 and t >= 1")
    if j % n == 0:
        raise ZeroDivisionError("zeta_n^j = 1 makes the denominator vanish")
    z = lambda e: Cyc.root(n, e % n)
    lhs = (2 - z(t * j) - z(-t * j)) / (2 - z(j) - z(-j))
    rhs = Cyc.rational(0)
    for i in range(t):
        rhs = rhs + (t - i) * z(i * j)
    for l in range(1, t):
        rhs = rhs + (t - l) * z(-l * j)
    return lhs == rhs


def tensor_chern_first_check(inner_spec, l, ctx=None):
    """First-Chern tensor identity on all catalog pairs of inner x C_l."""
    if ctx is None:
        if isinstance(inner_spec, str):
            inner_spec = FamilySpec.parse(inner_spec)
        g = build_group(FamilySpec.product(inner_spec, l))
        ctx = InvariantContext(g)
    firsts = {}
    degrees = {}
    for item in ctx.catalog:
        firsts[item.label] = ctx.first_ccs(item.character)
        degrees[item.label] = item.degree
    inner_labels = sorted({label.rsplit("*a", 1)[0] for label in firsts})
    trivial_inner = None
    for item in ctx.catalog:
        if item.degree == 1 and all(v == Cyc.rational(1) for v in item.character.values):
            trivial_inner = item.label.rsplit("*a", 1)[0]
            break
    ok = True
    for label in firsts:
        base, j = label.rsplit("*a", 1)
        n = degrees[label]
        lhs = firsts[label]
        rho_part = firsts["%s*a0" % base]
        sigma_part = firsts["%s*a%s" % (trivial_inner, j)]
        rhs = tuple(a + (b * n) for a, b in zip(rho_part, sigma_part))
        if lhs != rhs:
            ok = False
    return ok

"""Irreducible characters of the small U(2) groups.

Explicit matrix models are used for the families that have them (cyclic,
binary dihedral, the 2-group dihedral family, the 8*3^k family); the three
exceptional binary polyhedral groups get a character-only catalog found by
tensoring the natural character and peeling known constituents; products are
catalogued as tensor pairs through the recorded factor projections.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cyclo import Accumulator, Cyc, lcm_conductors
from .errors import CatalogError, ParameterError
from .matgroup import Mat, abelianization

MAX_IRREP_DEGREE = 12


@dataclass(frozen=True)
class Character:
    """A class function given by one value per conjugacy class."""

    group: object = field(repr=False)
    values: tuple

    @property
    def degree_value(self):
        return self.values[0]

    @property
    def degree(self):
        return int(self.values[0].as_fraction())

    def value_at_element(self, i):
        return self.values[self.group.class_of[i]]

    def conj(self):
        return Character(self.group, tuple(v.conj() for v in self.values))

    def mul(self, other):
        _same_group(self, other)
        return Character(
            self.group, tuple(a * b for a, b in zip(self.values, other.values))
        )

    def sub_scaled(self, other, m):
        return Character(
            self.group, tuple(a - b * m for a, b in zip(self.values, other.values))
        )

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.group is other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash(self.values)


@dataclass(frozen=True)
class Irrep:
    label: str
    character: Character
    matrices: dict = None  # generator name -> Mat, when an explicit model exists

    @property
    def degree(self):
        return self.character.degree


def _same_group(a, b):
    if a.group is not b.group:
        raise ParameterError("characters belong to different groups")


@lru_cache(maxsize=8192)
def _conj_values(values):
    return tuple(v.conj() for v in values)


def char_inner_product(a, b):
    """(1/|G|) sum_g a(g) conj(b(g)), exact."""
    _same_group(a, b)
    g = a.group
    sizes = [len(c) for c in g.classes]
    bconj = _conj_values(b.values)
    acc = Accumulator(lcm_conductors(list(a.values) + list(bconj)))
    for av, bv, s in zip(a.values, bconj, sizes):
        acc.add_product(av, bv, s)
    return acc.finalize() * Fraction(1, len(g))


def _inner_int(a, b):
    v = char_inner_product(a, b).as_fraction()
    if v.denominator != 1:
        raise CatalogError("non-integral character inner product %s" % v)
    return int(v)


def character_from_matrices(g, mats_by_gen):
    """Trace character of the representation sending each generator to its matrix."""
    d = next(iter(mats_by_gen.values())).size
    reps = [None] * len(g.elements)
    reps[0] = Mat.identity(d)
    gen_mats = [mats_by_gen[name] for name in g.gen_names]
    traces = {}
    class_of = g.class_of
    want = set(g.class_reps)
    for i in range(len(g.elements)):
        if i:
            prefix, gi = g.bfs[i]
            reps[i] = reps[prefix] * gen_mats[gi]
        if i in want:
            traces[class_of[i]] = reps[i].trace()
    return Character(g, tuple(traces[ci] for ci in range(len(g.classes))))


def one_dim_from_gen_values(g, values_by_gen):
    """Degree-1 character from root-of-unity values on the generators."""
    vals = [None] * len(g.elements)
    vals[0] = Cyc.rational(1)
    gen_vals = [Cyc(values_by_gen[name]) for name in g.gen_names]
    out = {}
    class_of = g.class_of
    for i in range(len(g.elements)):
        if i:
            prefix, gi = g.bfs[i]
            vals[i] = vals[prefix] * gen_vals[gi]
        out.setdefault(class_of[i], vals[i])
    return Character(g, tuple(out[ci] for ci in range(len(g.classes))))


def natural_character(g):
    return Character(
        g, tuple(g.elements[r].trace() for r in g.class_reps)
    )


# ---------------------------------------------------------------------------
# per-family catalogs


def _cyclic_catalog(g):
    n, _ = g.spec.params
    out = []
    z = Cyc.root(n) if n > 1 else Cyc.rational(1)
    for j in range(n):
        mats = {"x": Mat([[Cyc.root(n, j) if n > 1 else 1]])}
        out.append(Irrep("alpha_%d" % j, one_dim_from_gen_values(g, {"x": z ** j}), mats))
    return out


def _bd_alpha_values(q):
    i = Cyc.root(4)
    one = Cyc.rational(1)
    if q % 2 == 0:
        table = [(one, one), (-one, one), (one, -one), (-one, -one)]
    else:
        table = [(one, one), (i, -one), (-one, one), (-i, -one)]
    return table


def _bd_catalog(g):
    (q,) = g.spec.params
    out = []
    for j, (vb, vc) in enumerate(_bd_alpha_values(q)):
        mats = {"b": Mat([[vb]]), "c": Mat([[vc]])}
        out.append(Irrep("alpha_%d" % j, one_dim_from_gen_values(g, {"b": vb, "c": vc}), mats))
    for t in range(1, q):
        mats = {
            "b": Mat([[0, 1], [(-1) ** t, 0]]),
            "c": Mat([[Cyc.root(2 * q, t), 0], [0, Cyc.root(2 * q, 2 * q - t)]]),
        }
        out.append(Irrep("rho_%d" % t, character_from_matrices(g, mats), mats))
    return out


def _d2k_catalog(g):
    k, r = g.spec.params
    n2 = 2 ** (k + 1)
    out = []
    for j in range(n2):
        vx = Cyc.root(n2, j)
        mats = {"x": Mat([[vx]]), "y": Mat([[1]])}
        out.append(Irrep("alpha_%d" % j, one_dim_from_gen_values(g, {"x": vx, "y": 1}), mats))
    for t in range(1, 2 * r + 1):
        for s in range(2 ** (k - 1)):
            zs = Cyc.root(n2, s) if s else Cyc.rational(1)
            mats = {
                "x": Mat([[0, 1], [(-1) ** t, 0]]).scale(zs),
                "y": Mat([[Cyc.root(2 * r + 1, t), 0], [0, Cyc.root(2 * r + 1, 2 * r + 1 - t)]]),
            }
            out.append(Irrep("rho_%d_%d" % (t, s), character_from_matrices(g, mats), mats))
    return out


def _pprime_catalog(g):
    (k,) = g.spec.params
    n3 = 3 ** k
    w = Cyc.root(3)
    w2 = Cyc.root(3, 2)
    out = []
    for j in range(n3):
        vz = Cyc.root(n3, j)
        mats = {"x": Mat([[1]]), "y": Mat([[1]]), "z": Mat([[vz]])}
        out.append(
            Irrep("alpha_%d" % j, one_dim_from_gen_values(g, {"x": 1, "y": 1, "z": vz}), mats)
        )
    two_x = Mat([[0, w2], [-w, 0]])
    two_y = Mat([[w2, 1], [w2, -w2]])
    two_z = Mat([[0, w], [-w2, -1]])
    for s in range(n3):
        mats = {"x": two_x, "y": two_y, "z": two_z.scale(Cyc.root(n3, s) if s else 1)}
        out.append(Irrep("rho_%d" % s, character_from_matrices(g, mats), mats))
    three_x = Mat([[-1, -1, -1], [0, 0, 1], [0, 1, 0]])
    three_y = Mat([[0, 0, 1], [-1, -1, -1], [1, 0, 0]])
    three_z = Mat([[-1, -1, -1], [0, 1, 0], [1, 0, 0]])
    for s in range(3 ** (k - 1)):
        mats = {"x": three_x, "y": three_y, "z": three_z.scale(Cyc.root(n3, s) if s else 1)}
        out.append(Irrep("sigma_%d" % s, character_from_matrices(g, mats), mats))
    return out


def _ab_characters(g):
    """All degree-1 characters, ordered lexicographically in the factor exponents."""
    ab = abelianization(g)
    out = []
    def rec(i, assign):
        if i == len(ab.factors):
            vals = tuple(assign)
            chi = []
            for ci, rep in enumerate(g.class_reps):
                res = ab.project(rep)
                acc = Cyc.rational(1)
                for (f, e, v) in zip(ab.factors, res, vals):
                    if v:
                        acc = acc * Cyc.root(f, (v * e) % f)
                chi.append(acc)
            out.append(Character(g, tuple(chi)))
            return
        for v in range(ab.factors[i]):
            rec(i + 1, assign + [v])
    rec(0, [])
    return out


def _bpg_catalog(g):
    """Character-only catalog by tensor-and-peel from the natural character."""
    order = len(g)
    found = []

    def adopt(chi):
        deg = chi.degree
        if deg > MAX_IRREP_DEGREE:
            raise CatalogError("candidate irreducible of degree %d; catalog bug" % deg)
        found.append(chi)

    for chi in _ab_characters(g):
        adopt(chi)
    one_dims = list(found)
    nat = natural_character(g)

    def peel(f):
        for chi in found:
            m = _inner_int(f, chi)
            if m:
                f = f.sub_scaled(chi, m)
        return f

    queue = [nat]
    residuals = []
    rounds = 0
    while sum(chi.degree ** 2 for chi in found) < order:
        rounds += 1
        if rounds > 200:
            raise CatalogError("character catalog search did not terminate")
        if not queue:
            raise CatalogError("character catalog incomplete and no candidates left")
        f = peel(queue.pop(0))
        norm = _inner_int(f, f)
        if norm == 0:
            continue
        if norm == 1:
            adopt(f)
            queue.append(f.mul(nat))
            queue.extend(f.mul(od) for od in one_dims)
            # stored residuals may now peel further
            queue.extend(residuals)
            residuals = []
        else:
            residuals.append(f)
            queue.append(f.mul(nat))
    if sum(chi.degree ** 2 for chi in found) != order:
        raise CatalogError("sum of squared degrees overshot the group order")
    ranked = sorted(enumerate(found), key=lambda iv: (iv[1].degree, iv[0]))
    out = []
    counters = {}
    for _, chi in ranked:
        d = chi.degree
        counters[d] = counters.get(d, 0)
        out.append(Irrep("d%d_%d" % (d, counters[d]), chi, None))
        counters[d] += 1
    return out


def _product_catalog(g):
    inner = g.inner_group
    l = g.spec.l
    inner_catalog = irrep_catalog(inner)
    parts = g.product_parts()
    inner_class_of = inner.class_of
    out = []
    zl = Cyc.root(l) if l > 1 else Cyc.rational(1)
    for item in inner_catalog:
        for j in range(l):
            vals = []
            for rep in g.class_reps:
                ii, a = parts[rep]
                v = item.character.values[inner_class_of[ii]]
                if j and a:
                    v = v * zl ** ((a * j) % l)
                vals.append(v)
            out.append(
                Irrep("%s*a%d" % (item.label, j), Character(g, tuple(vals)), None)
            )
    return out


_CATALOG_CACHE = {}


def irrep_catalog(g):
    """The complete list of irreducible characters of g, deterministically ordered."""
    key = id(g)
    if key in _CATALOG_CACHE:
        return _CATALOG_CACHE[key]
    kind = g.spec.kind if g.spec is not None else None
    if kind == "C":
        out = _cyclic_catalog(g)
    elif kind == "BD":
        out = _bd_catalog(g)
    elif kind == "D":
        out = _d2k_catalog(g)
    elif kind == "P":
        out = _pprime_catalog(g)
    elif kind in ("BT", "BO", "BI"):
        out = _bpg_catalog(g)
    elif kind == "PROD":
        out = _product_catalog(g)
    else:
        raise ParameterError("no irreducible catalog for this group")
    total = sum(item.degree ** 2 for item in out)
    if total != len(g) or len(out) != len(g.classes):
        raise CatalogError(
            "catalog inconsistent: sum d^2 = %d vs |G| = %d, %d irreps vs %d classes"
            % (total, len(g), len(out), len(g.classes))
        )
    _CATALOG_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# determinants and tensor decomposition


def det_character(r):
    """The degree-1 determinant character of an irrep or bare character.

    With an explicit matrix model this is the pointwise determinant; otherwise
    the top elementary symmetric function of the eigenvalues is rebuilt from
    the power sums chi(g^k) by Newton's identities.
    """
    if isinstance(r, Irrep):
        if r.matrices is not None:
            g = r.character.group
            dets = {name: m.det() for name, m in r.matrices.items()}
            return one_dim_from_gen_values(g, dets)
        r = r.character
    g = r.group
    d = r.degree
    values = []
    for rep in g.class_reps:
        p = [None]  # power sums, 1-indexed
        for k in range(1, d + 1):
            p.append(r.value_at_element(g.pow(rep, k)))
        e = [Cyc.rational(1)]
        for k in range(1, d + 1):
            acc = Cyc.rational(0)
            for i in range(1, k + 1):
                term = e[k - i] * p[i]
                acc = acc + (term if i % 2 == 1 else -term)
            e.append(acc * Fraction(1, k))
        values.append(e[d])
    return Character(g, tuple(values))


def tensor_decompose(a, b, catalog):
    """Multiplicities of catalog irreps in the pointwise product character."""
    _same_group(a, b)
    prod = a.mul(b)
    out = {}
    for item in catalog:
        m = _inner_int(prod, item.character)
        if m:
            out[item.label] = m
            prod = prod.sub_scaled(item.character, m)
    if any(not v.is_zero() for v in prod.values):
        raise CatalogError("tensor product does not decompose over the catalog")
    total = sum(out[item.label] * item.degree for item in catalog if item.label in out)
    if total != a.degree * b.degree:
        raise CatalogError("tensor decomposition degree mismatch")
    return out

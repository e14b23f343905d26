"""Small finite subgroups of U(2): construction, conjugacy, abelianization.

Groups are built by closing explicit generator matrices under multiplication,
with exact cyclotomic entries, so element deduplication is structural
equality.  Element order is breadth-first from the generators in declared
order, which makes every downstream table deterministic.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .cyclo import Cyc
from .errors import ConstructionError, ParameterError, ResourceLimitError

DEFAULT_ELEMENT_CAP = 100000
ELEMENT_CAP_ENV = "SPHEREX_ELEMENT_CAP"


def default_element_cap():
    raw = os.environ.get(ELEMENT_CAP_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ParameterError("%s must be an integer, got %r" % (ELEMENT_CAP_ENV, raw))
    return DEFAULT_ELEMENT_CAP


# ---------------------------------------------------------------------------
# matrices


class Mat:
    """Small square matrix of Cyc entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        object.__setattr__(
            self, "rows", tuple(tuple(Cyc(x) for x in row) for row in rows)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Mat values are immutable")

    @staticmethod
    def identity(k):
        return Mat([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @property
    def size(self):
        return len(self.rows)

    def __mul__(self, other):
        k = self.size
        return Mat(
            [
                [
                    sum((self.rows[i][t] * other.rows[t][j] for t in range(k)), Cyc(0))
                    for j in range(k)
                ]
                for i in range(k)
            ]
        )

    def scale(self, c):
        return Mat([[x * c for x in row] for row in self.rows])

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.size)), Cyc(0))

    def det(self):
        k = self.size
        if k == 1:
            return self.rows[0][0]
        if k == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        total = Cyc(0)
        for j in range(k):
            minor = Mat([row[:j] + row[j + 1 :] for row in self.rows[1:]])
            term = self.rows[0][j] * minor.det()
            total = total + (term if j % 2 == 0 else -term)
        return total

    def conj_transpose(self):
        k = self.size
        return Mat([[self.rows[j][i].conj() for j in range(k)] for i in range(k)])

    def is_unitary(self):
        return self * self.conj_transpose() == Mat.identity(self.size)

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Mat(%s)" % (
            "; ".join(", ".join(x.to_text() for x in row) for row in self.rows),
        )


def _z(n, e=1):
    return Cyc.root(n, e)


def phi_mat(k):
    """Scalar matrix diag(z_k, z_k)."""
    return Mat([[_z(k), 0], [0, _z(k)]])


def psi_mat(k):
    """diag(z_k, z_k^-1)."""
    return Mat([[_z(k), 0], [0, _z(k, k - 1)]])


TAU = Mat([[0, _z(4)], [_z(4), 0]])

SIGMA = Mat([[0, -1], [1, 0]])
OMEGA = Mat([[_z(5, 3), 0], [0, _z(5, 2)]])

_INV_SQRT2 = (_z(8) - _z(8, 3)) * Fraction(1, 2)
ETA = Mat(
    [[_z(8), _z(8, 3)], [_z(8), _z(8, 7)]]
).scale(_INV_SQRT2)
_INV_SQRT5 = (_z(5) - _z(5, 2) - _z(5, 3) + _z(5, 4)) * Fraction(1, 5)
IOTA = Mat(
    [
        [_z(5, 4) - _z(5), _z(5, 2) - _z(5, 3)],
        [_z(5, 2) - _z(5, 3), _z(5) - _z(5, 4)],
    ]
).scale(_INV_SQRT5)


def _quaternion(a, b, c, d):
    # a + bi + cj + dk as an SU(2) matrix
    i = _z(4)
    return Mat([[a + b * i, c + d * i], [-c + d * i, a - b * i]])


_H = Fraction(1, 2)
BT_B = _quaternion(_H, _H, _H, _H)
BT_C = _quaternion(_H, _H, _H, -_H)
BO_C = Mat([[1, _z(4)], [_z(4), 1]]).scale(_INV_SQRT2)  # (1 + k)/sqrt(2)
BI_C = OMEGA.scale(-1)


# ---------------------------------------------------------------------------
# family specs


_BASE_KINDS = ("C", "BD", "BT", "BO", "BI", "D", "P")


@dataclass(frozen=True)
class FamilySpec:
    """A parametrized group family: base family or base x cyclic."""

    kind: str
    params: tuple = ()
    inner: "FamilySpec" = None
    l: int = 0

    # -- constructors -------------------------------------------------------

    @staticmethod
    def cyclic(n, q):
        return FamilySpec("C", (n, q))

    @staticmethod
    def binary_dihedral(q):
        return FamilySpec("BD", (q,))

    @staticmethod
    def binary_tetrahedral():
        return FamilySpec("BT")

    @staticmethod
    def binary_octahedral():
        return FamilySpec("BO")

    @staticmethod
    def binary_icosahedral():
        return FamilySpec("BI")

    @staticmethod
    def dihedral_2k(k, r):
        return FamilySpec("D", (k, r))

    @staticmethod
    def pprime(k):
        return FamilySpec("P", (k,))

    @staticmethod
    def product(inner, l):
        return FamilySpec("PROD", (), inner, l)

    # -- parsing / printing --------------------------------------------------

    @staticmethod
    def parse(text):
        text = text.strip()
        if "xC:" in text:
            base, _, ltxt = text.partition("xC:")
            try:
                l = int(ltxt)
            except ValueError:
                raise ParameterError("bad cyclic factor in %r" % text)
            spec = FamilySpec.product(FamilySpec.parse(base), l)
            spec.validate()
            return spec
        kind, _, ptxt = text.partition(":")
        if kind not in _BASE_KINDS:
            raise ParameterError("unknown family %r (expected C, BD, BT, BO, BI, D, P)" % kind)
        try:
            params = tuple(int(x) for x in ptxt.split(",")) if ptxt else ()
        except ValueError:
            raise ParameterError("bad parameters in %r" % text)
        want = {"C": 2, "BD": 1, "BT": 0, "BO": 0, "BI": 0, "D": 2, "P": 1}[kind]
        if len(params) != want:
            raise ParameterError("family %s takes %d parameter(s), got %r" % (kind, want, text))
        spec = FamilySpec(kind, params)
        spec.validate()
        return spec

    def __str__(self):
        if self.kind == "PROD":
            return "%sxC:%d" % (self.inner, self.l)
        if self.params:
            return "%s:%s" % (self.kind, ",".join(str(p) for p in self.params))
        return self.kind

    # -- validation / invariants ---------------------------------------------

    def validate(self):
        k = self.kind
        if k == "C":
            n, q = self.params
            if n == 1 and q == 0:
                return  # the trivial group
            if not (0 < q < n and gcd(n, q) == 1):
                raise ParameterError("Cyclic(n,q) needs 0 < q < n with gcd(n,q)=1")
        elif k == "BD":
            (q,) = self.params
            if q < 2:
                raise ParameterError("BinaryDihedral(q) needs q >= 2")
        elif k == "D":
            kk, r = self.params
            if not (kk > 1 and r >= 1):
                raise ParameterError("D(k,r) needs k > 1 and r >= 1")
        elif k == "P":
            (kk,) = self.params
            if kk < 2:
                raise ParameterError("Pprime(k) needs k >= 2")
        elif k == "PROD":
            if self.inner.kind == "C":
                raise ParameterError(
                    "products with a cyclic inner group are cyclic; use Cyclic(n*l, q) directly"
                )
            if self.inner.kind == "PROD":
                raise ParameterError("nested products are not supported")
            self.inner.validate()
            if self.l < 1:
                raise ParameterError("cyclic factor must be a positive integer")
            if gcd(self.l, self.inner.order()) != 1:
                raise ParameterError(
                    "cyclic factor order %d must be coprime to |inner| = %d"
                    % (self.l, self.inner.order())
                )
        elif k not in _BASE_KINDS:
            raise ParameterError("unknown family kind %r" % k)

    def order(self):
        k = self.kind
        if k == "C":
            return self.params[0]
        if k == "BD":
            return 4 * self.params[0]
        if k == "BT":
            return 24
        if k == "BO":
            return 48
        if k == "BI":
            return 120
        if k == "D":
            kk, r = self.params
            return (2 ** (kk + 1)) * (2 * r + 1)
        if k == "P":
            return 8 * 3 ** self.params[0]
        if k == "PROD":
            return self.inner.order() * self.l
        raise ParameterError("unknown family kind %r" % k)


def _base_generators(spec):
    k = spec.kind
    if k == "C":
        n, q = spec.params
        if n == 1:
            return [("x", Mat.identity(2))]
        return [("x", Mat([[_z(n), 0], [0, _z(n, q)]]))]
    if k == "BD":
        (q,) = spec.params
        return [("b", TAU), ("c", psi_mat(2 * q))]
    if k == "BT":
        return [("b", BT_B), ("c", BT_C)]
    if k == "BO":
        return [("b", BT_B), ("c", BO_C)]
    if k == "BI":
        return [("b", bi_b_matrix()), ("c", BI_C)]
    if k == "D":
        kk, r = spec.params
        return [("x", TAU * phi_mat(2 ** (kk + 1))), ("y", psi_mat(2 * r + 1))]
    if k == "P":
        (kk,) = spec.params
        ephi = ETA * phi_mat(2 * 3 ** kk)
        return [("x", TAU.scale(-1)), ("y", psi_mat(4).scale(-1)), ("z", ephi * ephi)]
    if k == "PROD":
        return _base_generators(spec.inner) + [("w", phi_mat(2 * spec.l))]
    raise ParameterError("unknown family kind %r" % k)


# order-6 element with Tr(b * BI_C) = 0 that generates the order-120 group
# together with BI_C; found by exhaustive search over <sigma, omega, iota>
_BI_B_WORD = "sios"


def bi_b_matrix():
    """The chosen order-6 partner generator of the icosahedral group."""
    m = Mat.identity(2)
    for letter in _BI_B_WORD:
        m = m * {"s": SIGMA, "o": OMEGA, "i": IOTA}[letter]
    return m


# ---------------------------------------------------------------------------
# built groups


class MatGroup:
    """A fully enumerated finite subgroup of U(2)."""

    def __init__(self, spec, gen_names, gen_mats, element_cap=None, expect_order=None):
        self.spec = spec
        self.gen_names = tuple(gen_names)
        self.gen_mats = tuple(gen_mats)
        cap = element_cap if element_cap is not None else default_element_cap()
        for name, g in zip(self.gen_names, self.gen_mats):
            if not g.is_unitary():
                raise ConstructionError("generator %s is not unitary" % name)
        elements = [Mat.identity(2)]
        index = {elements[0]: 0}
        bfs = [(-1, -1)]
        cursor = 0
        while cursor < len(elements):
            cur = elements[cursor]
            for gi, g in enumerate(self.gen_mats):
                m = cur * g
                if m not in index:
                    index[m] = len(elements)
                    elements.append(m)
                    bfs.append((cursor, gi))
                    if len(elements) > cap:
                        raise ResourceLimitError(
                            "group closure exceeded element cap %d" % cap
                        )
            cursor += 1
        self.elements = tuple(elements)
        self.index = index
        self.bfs = tuple(bfs)
        if expect_order is None and spec is not None:
            expect_order = spec.order()
        if expect_order is not None and len(elements) != expect_order:
            raise ConstructionError(
                "built %d elements, expected %d for %s"
                % (len(elements), expect_order, spec)
            )
        ident = Mat.identity(2)
        for i, m in enumerate(elements):
            if i == 0:
                continue
            d = (ident.rows[0][0] - m.rows[0][0]) * (ident.rows[1][1] - m.rows[1][1]) \
                - (-m.rows[0][1]) * (-m.rows[1][0])
            if d.is_zero():
                raise ConstructionError(
                    "element %d has a fixed point (not a small subgroup)" % i
                )
        self._table = None
        self._inv = None
        self._classes = None
        self._class_of = None
        self._orders = None
        self._product_parts = None
        self.inner_group = None

    # -- index arithmetic ----------------------------------------------------

    def __len__(self):
        return len(self.elements)

    @property
    def table(self):
        if self._table is None:
            n = len(self.elements)
            rows = [None] * n
            rows[0] = list(range(n))
            gen_rows = {}
            for gi, g in enumerate(self.gen_mats):
                gen_rows[gi] = [self.index[g * x] for x in self.elements]
            for i in range(1, n):
                prefix, gi = self.bfs[i]
                rp = rows[prefix]
                rg = gen_rows[gi]
                # left row of prefix*g: (p*g)*x = p*(g*x)
                rows[i] = [rp[v] for v in rg]
            self._table = rows
        return self._table

    @property
    def inv(self):
        if self._inv is None:
            t = self.table
            inv = [0] * len(self.elements)
            for i, row in enumerate(t):
                for j, v in enumerate(row):
                    if v == 0:
                        inv[i] = j
                        break
            self._inv = inv
        return self._inv

    def mul(self, i, j):
        return self.table[i][j]

    def pow(self, i, k):
        if k < 0:
            return self.pow(self.inv[i], -k)
        result = 0
        base = i
        while k:
            if k & 1:
                result = self.table[result][base]
            k >>= 1
            if k:
                base = self.table[base][base]
        return result

    def element_order(self, i):
        t = self.table
        k = 1
        cur = i
        while cur != 0:
            cur = t[cur][i]
            k += 1
        return k

    @property
    def orders(self):
        if self._orders is None:
            self._orders = [self.element_order(i) for i in range(len(self.elements))]
        return self._orders

    def gen_index(self, name):
        try:
            gi = self.gen_names.index(name)
        except ValueError:
            raise ParameterError("unknown generator %r (have %s)" % (name, list(self.gen_names)))
        return self.index[self.gen_mats[gi]]

    def element_of_word(self, word):
        """Element index of a word [(gen_name, exponent), ...] or (name, name, ...)."""
        idx = 0
        for item in word:
            name, exp = item if isinstance(item, tuple) else (item, 1)
            idx = self.mul(idx, self.pow(self.gen_index(name), exp))
        return idx

    # -- conjugacy -----------------------------------------------------------

    @property
    def classes(self):
        if self._classes is None:
            t = self.table
            inv = self.inv
            n = len(self.elements)
            seen = [False] * n
            classes = []
            for i in range(n):
                if seen[i]:
                    continue
                orbit = set()
                for h in range(n):
                    c = t[t[h][i]][inv[h]]
                    orbit.add(c)
                for c in orbit:
                    seen[c] = True
                classes.append(tuple(sorted(orbit)))
            classes.sort(key=lambda c: (len(c), c[0]))
            self._classes = tuple(classes)
            class_of = [0] * n
            for ci, cls in enumerate(self._classes):
                for e in cls:
                    class_of[e] = ci
            self._class_of = class_of
        return self._classes

    @property
    def class_of(self):
        self.classes
        return self._class_of

    @property
    def class_reps(self):
        return [c[0] for c in self.classes]

    # -- direct-product structure ---------------------------------------------

    def product_parts(self):
        """Per element (inner element index, cyclic exponent) for product groups."""
        if self.spec is None or self.spec.kind != "PROD":
            raise ParameterError("not a product group")
        if self._product_parts is None:
            l = self.spec.l
            if self.inner_group is None:
                self.inner_group = build_group(self.spec.inner)
            inner = self.inner_group
            scalar = self.index[Mat.identity(2).scale(Cyc.root(l))] if l > 1 else 0
            zpow = {}
            cur = 0
            for a in range(l):
                zpow[cur] = a
                cur = self.mul(cur, scalar)
            n_inner = len(inner)
            u = pow(n_inner, -1, l) if l > 1 else 0
            parts = []
            for i in range(len(self.elements)):
                zi = self.pow(i, n_inner)
                a = (zpow[zi] * u) % l if l > 1 else 0
                g = self.mul(i, self.pow(scalar, (-a) % l)) if l > 1 else i
                parts.append((inner.index[self.elements[g]], a))
            self._product_parts = parts
        return self._product_parts


def build_group(spec, element_cap=None):
    """Enumerate the matrix group described by spec."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    spec.validate()
    names, mats = zip(*_base_generators(spec))
    g = MatGroup(spec, names, mats, element_cap=element_cap)
    if spec.kind == "PROD":
        g.product_parts()
    return g


def conjugacy_classes(g):
    """Partition of element indices into conjugation orbits, deterministically ordered."""
    return list(g.classes)


# ---------------------------------------------------------------------------
# presentations and isomorphism checking


@dataclass(frozen=True)
class Presentation:
    name: str
    generators: tuple
    relators: tuple  # each relator is a word: tuple of (generator, exponent)

    def check_names(self):
        for rel in self.relators:
            for name, _ in rel:
                if name not in self.generators:
                    raise ParameterError(
                        "relator uses unknown generator %r in %s" % (name, self.name)
                    )


def _w(*items):
    # compact word builder: _w("x", ("y", -1), ("x", 2))
    out = []
    for it in items:
        out.append(it if isinstance(it, tuple) else (it, 1))
    return tuple(out)


def presentation_2st(s, t):
    """<b, c | (bc)^2 = b^s = c^t>."""
    return Presentation(
        "<2,%d,%d>" % (s, t),
        ("b", "c"),
        (
            _w("b", "c", "b", "c", ("b", -s)),
            _w(("b", s), ("c", -t)),
        ),
    )


def presentation_quaternion(t):
    """Q_4t = <x, y | x^2 = (xy)^2 = y^t>."""
    return Presentation(
        "Q_%d" % (4 * t),
        ("x", "y"),
        (
            _w(("x", 2), ("y", -t)),
            _w("x", "y", "x", "y", ("y", -t)),
        ),
    )


def presentation_milnor_p(n):
    """P_{24n/(6-n)} = <x, y | x^2 = (xy)^3 = y^n, x^4 = 1>."""
    return Presentation(
        "P_%d" % (24 * n // (6 - n)),
        ("x", "y"),
        (
            _w(("x", 2), ("y", -n)),
            _w("x", "y", "x", "y", "x", "y", ("y", -n)),
            _w(("x", 4)),
        ),
    )


def presentation_dihedral(k, q):
    """D_{2^{k+1} q} = <x, y | x^{2^{k+1}} = 1, y^q = 1, x y x^-1 = y^-1>."""
    return Presentation(
        "D_%d(%d)" % (2 ** (k + 1), q),
        ("x", "y"),
        (
            _w(("x", 2 ** (k + 1))),
            _w(("y", q)),
            _w("x", "y", ("x", -1), "y"),
        ),
    )


def presentation_pprime(k):
    """P'_{8*3^k} = <x,y,z | x^2=(xy)^2=y^2, zxz^-1=y, zyz^-1=xy, z^{3^k}=1>."""
    return Presentation(
        "P'_%d" % (8 * 3 ** k),
        ("x", "y", "z"),
        (
            _w(("x", 2), ("y", -2)),
            _w("x", "y", "x", "y", ("y", -2)),
            _w("z", "x", ("z", -1), ("y", -1)),
            _w("z", "y", ("z", -1), ("y", -1), ("x", -1)),
            _w(("z", 3 ** k)),
        ),
    )


def with_central_factor(pres, extra, order):
    """Adjoin a central generator of the given order to a presentation."""
    rels = list(pres.relators) + [_w((extra, order))]
    for g in pres.generators:
        rels.append(_w(extra, g, (extra, -1), (g, -1)))
    return Presentation(
        "%s x C_%d" % (pres.name, order),
        pres.generators + (extra,),
        tuple(rels),
    )


def verify_isomorphism(presentation, assignment, g):
    """True iff the assignment kills every relator and its image generates g.

    assignment maps presentation generator names to element indices or to
    words in g's generators.  For the presentations shipped here the
    presented group's order equals |g|, so this epimorphism check certifies
    an isomorphism.
    """
    presentation.check_names()
    images = {}
    for name in presentation.generators:
        try:
            val = assignment[name]
        except KeyError:
            raise ParameterError("assignment missing generator %r" % name)
        images[name] = val if isinstance(val, int) else g.element_of_word(val)
    for rel in presentation.relators:
        idx = 0
        for name, exp in rel:
            idx = g.mul(idx, g.pow(images[name], exp))
        if idx != 0:
            return False
    # surjectivity: close the image set under the group operation
    seen = set([0]) | set(images.values())
    frontier = list(seen)
    gens = list(set(images.values()))
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                c = g.mul(a, b)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return len(seen) == len(g)


# ---------------------------------------------------------------------------
# special realizations used by the isomorphism battery


def build_dihedral_nq_even(k, q, l, element_cap=None):
    """The U(2) dihedral group <psi_2q, tau*phi_4m> with m = 2^{k-1} l (l odd)."""
    if l % 2 == 0 or q % 2 == 0 or k < 2:
        raise ParameterError("need odd q, odd l and k >= 2")
    if gcd(q, l) != 1:
        raise ParameterError("need gcd(q, l) = 1")
    m = 2 ** (k - 1) * l
    gens = [("a", psi_mat(2 * q)), ("t", TAU * phi_mat(4 * m))]
    names, mats = zip(*gens)
    return MatGroup(None, names, mats, element_cap=element_cap, expect_order=4 * q * m)


def build_tetrahedral_3m(k, l, element_cap=None):
    """The U(2) tetrahedral group <psi_4, tau, eta*phi_6m> with m = 3^{k-1} l."""
    if l % 3 == 0 or l % 2 == 0 or k < 2:
        raise ParameterError("need l coprime to 6 and k >= 2")
    m = 3 ** (k - 1) * l
    gens = [("p", psi_mat(4)), ("t", TAU), ("e", ETA * phi_mat(6 * m))]
    names, mats = zip(*gens)
    return MatGroup(None, names, mats, element_cap=element_cap, expect_order=24 * m)


# ---------------------------------------------------------------------------
# abelianization


def smith_normal_form(rows):
    """Invariant factors (diagonal of the Smith normal form) of an integer matrix."""
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return []
    nrows, ncols = len(mat), len(mat[0])
    diag = []
    top = 0
    while top < min(nrows, ncols):
        # find a nonzero pivot of least magnitude
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                v = abs(mat[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, bi, bj = best
        mat[top], mat[bi] = mat[bi], mat[top]
        for row in mat:
            row[top], row[bj] = row[bj], row[top]
        done = False
        while not done:
            done = True
            p = mat[top][top]
            for i in range(top + 1, nrows):
                if mat[i][top]:
                    f = mat[i][top] // p
                    mat[i] = [a - f * b for a, b in zip(mat[i], mat[top])]
                    if mat[i][top]:
                        mat[top], mat[i] = mat[i], mat[top]
                        done = False
                        break
            if not done:
                continue
            for j in range(top + 1, ncols):
                if mat[top][j]:
                    f = mat[top][j] // p
                    for row in mat:
                        row[j] -= f * row[top]
                    if mat[top][j]:
                        for row in mat:
                            row[top], row[j] = row[j], row[top]
                        done = False
                        break
        diag.append(abs(mat[top][top]))
        top += 1
    # enforce divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return [d for d in diag if d]


def _elementary_divisors(factors):
    out = []
    for f in factors:
        m = f
        p = 2
        while p * p <= m:
            if m % p == 0:
                pk = 1
                while m % p == 0:
                    pk *= p
                    m //= p
                out.append(pk)
            p += 1
        if m > 1:
            out.append(m)
    return sorted(out)


@dataclass(frozen=True)
class Abelianization:
    """Ab(G) with the family's conventional generators.

    factors[i] is the order of chosen generator i; projection[e] is the
    residue tuple of element e with respect to those generators.
    """

    group: MatGroup = field(repr=False)
    factors: tuple
    gen_names: tuple
    gen_words: tuple
    gen_indices: tuple
    projection: tuple = field(repr=False)
    commutator_size: int = 0

    def project(self, i):
        return self.projection[i]


def _conventional_ab_generators(spec):
    """(display name, word) pairs for the family's H_1 generators."""
    k = spec.kind
    if k == "C":
        n, _ = spec.params
        return [] if n == 1 else [("x", ("x",))]
    if k == "BD":
        (q,) = spec.params
        if q % 2 == 0:
            return [("b", ("b",)), ("c", ("c",))]
        return [("b", ("b",))]
    if k in ("BT", "BO"):
        return [("c", ("c",))]
    if k == "BI":
        return []
    if k == "D":
        return [("x", ("x",))]
    if k == "P":
        return [("z", ("z",))]
    if k == "PROD":
        inner = _conventional_ab_generators(spec.inner)
        return inner + [("w^2", ("w", "w"))]
    raise ParameterError("unknown family kind %r" % k)


def abelianization(g):
    """Quotient by the commutator subgroup, on the family's chosen generators."""
    t = g.table
    inv = g.inv
    n = len(g.elements)
    # commutator subgroup by brute force: all [a,b], closed under multiplication
    comms = set()
    for a in range(n):
        ra = t[a]
        ia = inv[a]
        for b in range(n):
            c = t[t[ra[b]][ia]][inv[b]]
            comms.add(c)
    frontier = list(comms)
    sub = set(comms)
    base = list(comms)
    while frontier:
        nxt = []
        for x in frontier:
            for y in base:
                z = t[x][y]
                if z not in sub:
                    sub.add(z)
                    nxt.append(z)
        frontier = nxt
    ksize = len(sub)
    ksort = sorted(sub)
    # cosets
    coset_of = [-1] * n
    ncosets = 0
    for e in range(n):
        if coset_of[e] < 0:
            for x in ksort:
                coset_of[t[e][x]] = ncosets
            ncosets += 1
    if ksize * ncosets != n:
        raise ConstructionError("commutator subgroup does not partition the group")
    coset_rep = [0] * ncosets
    for e in range(n - 1, -1, -1):
        coset_rep[coset_of[e]] = e

    def cmul(c1, c2):
        return coset_of[t[coset_rep[c1]][coset_rep[c2]]]

    spec = g.spec
    pairs = _conventional_ab_generators(spec) if spec is not None else None
    if pairs is None:
        raise ParameterError("abelianization needs a family spec")
    gen_names = tuple(name for name, _ in pairs)
    gen_words = tuple(word for _, word in pairs)
    gen_indices = tuple(g.element_of_word(w) for w in gen_words)
    gen_cosets = [coset_of[i] for i in gen_indices]
    factors = []
    for c in gen_cosets:
        o = 1
        cur = c
        while cur != coset_of[0]:
            cur = cmul(cur, c)
            o += 1
        factors.append(o)
    factors = tuple(factors)
    # the chosen generators must give a direct-product coordinate system
    dlog = {}
    def fill(i, coset, residues):
        if i == len(factors):
            if coset in dlog:
                raise ConstructionError("chosen generators are not independent")
            dlog[coset] = tuple(residues)
            return
        cur = coset
        for r in range(factors[i]):
            fill(i + 1, cur, residues + [r])
            cur = cmul(cur, gen_cosets[i])
    fill(0, coset_of[0], [])
    if len(dlog) != ncosets:
        raise ConstructionError("chosen generators do not span the abelianization")
    projection = tuple(dlog[coset_of[e]] for e in range(n))
    # cross-check the cyclic decomposition against a Smith normal form of the
    # quotient's relation lattice on the images of the group generators
    gi = [coset_of[g.index[m]] for m in g.gen_mats]
    vecs = {coset_of[0]: tuple([0] * len(gi))}
    rels = []
    frontier = [coset_of[0]]
    while frontier:
        nxt = []
        for c in frontier:
            v = vecs[c]
            for j, gc in enumerate(gi):
                c2 = cmul(c, gc)
                v2 = list(v)
                v2[j] += 1
                v2 = tuple(v2)
                if c2 in vecs:
                    rels.append([a - b for a, b in zip(v2, vecs[c2])])
                else:
                    vecs[c2] = v2
                    nxt.append(c2)
        frontier = nxt
    snf = smith_normal_form(rels)
    got = _elementary_divisors([d for d in snf if d > 1])
    want = _elementary_divisors([f for f in factors if f > 1])
    if got != want:
        raise ConstructionError(
            "Smith normal form %s disagrees with chosen factors %s" % (got, want)
        )
    return Abelianization(
        group=g,
        factors=factors,
        gen_names=gen_names,
        gen_words=gen_words,
        gen_indices=gen_indices,
        projection=projection,
        commutator_size=ksize,
    )

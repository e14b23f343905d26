"""Golden verification batteries: reference tables and isomorphism checks.

Each check returns (name, ok, detail); detail carries the first differing
cell (expected vs got, both exact) when a comparison fails.
"""

from collections import namedtuple
from fractions import Fraction
from math import gcd

from .errors import ParameterError
from .invariants import (
    InvariantContext,
    telescoping_identity_check,
    tensor_chern_first_check,
    xi_closed_form_bd_exact,
    xi_closed_form_d_exact,
)
from .matgroup import (
    build_dihedral_nq_even,
    build_group,
    build_tetrahedral_3m,
    presentation_dihedral,
    presentation_milnor_p,
    presentation_pprime,
    presentation_quaternion,
    presentation_2st,
    verify_isomorphism,
    with_central_factor,
)
from .refdata import BD_C1_TABLES, BPG_TABLE, D_C1_TABLES, D_XI_TABLES
from .classify import classification_report, rank_c1_collisions

Check = namedtuple("Check", "name ok detail")

# the families exercised by the catalog-wide property checks
SHIPPED_SPECS = [
    "C:2,1", "C:5,2", "C:7,3", "C:8,3", "C:12,5",
    "BD:2", "BD:3", "BD:4", "BD:5", "BD:6", "BD:8", "BD:9", "BD:12",
    "BT", "BO", "BI",
    "D:2,1", "D:2,2", "D:2,3", "D:3,1", "D:3,2", "D:3,3", "D:4,1",
    "P:2", "P:3",
    "BD:2xC:3", "BD:3xC:5", "BD:3xC:7", "BD:5xC:3",
    "BTxC:5", "BTxC:7", "BOxC:5", "BIxC:7",
    "D:2,1xC:5", "D:2,2xC:3", "P:2xC:5", "P:2xC:7",
]

_CTX_CACHE = {}


def group_context(text):
    if text not in _CTX_CACHE:
        _CTX_CACHE[text] = InvariantContext(build_group(text))
    return _CTX_CACHE[text]


def _check(name, mismatches):
    if mismatches:
        return Check(name, False, mismatches[0])
    return Check(name, True, "")


def check_lens_first_ccs(n_max=12):
    """First CCS-number of alpha_j on the lens space L(n;q) is j/n."""
    bad = []
    for n in range(2, n_max + 1):
        for q in range(1, n):
            if gcd(n, q) != 1:
                continue
            ctx = group_context("C:%d,%d" % (n, q))
            for j, item in enumerate(ctx.catalog):
                got = ctx.first_ccs(item.character)[0].value
                want = Fraction(j, n)
                if got != want:
                    bad.append("C:%d,%d alpha_%d: expected %s got %s" % (n, q, j, want, got))
    return _check("lens-c1(n<=%d)" % n_max, bad)


def check_bd_onedim_tables(qs=(2, 3, 4, 5, 8, 9)):
    """First CCS-numbers of the binary dihedral one-dimensional characters."""
    bad = []
    for q in qs:
        ctx = group_context("BD:%d" % q)
        table = BD_C1_TABLES["even" if q % 2 == 0 else "odd"]
        for item in ctx.catalog:
            if item.label not in table:
                continue
            got = tuple(v.value for v in ctx.first_ccs(item.character))
            want = table[item.label]
            if got != want:
                bad.append("BD:%d %s: expected %s got %s" % (q, item.label, want, got))
    return _check("bd-onedim-c1", bad)


def check_bpg_table():
    """All (rank, c1, c2) columns for the exceptional binary polyhedral groups."""
    bad = []
    for kind in ("BT", "BO", "BI"):
        ctx = group_context(kind)
        try:
            names = ctx.reference_labels()
        except Exception as exc:
            bad.append("%s: %s" % (kind, exc))
            continue
        computed = {}
        for item in ctx.catalog:
            vec = ctx.ccs_vector(item.character)
            first = vec.first[0].value if vec.first else None
            computed[names[item.label]] = (vec.rank, first, vec.second.value)
        for label, rank, c1, c2 in BPG_TABLE[kind]:
            if computed.get(label) != (rank, c1, c2):
                bad.append(
                    "%s %s: expected %s got %s"
                    % (kind, label, (rank, c1, c2), computed.get(label))
                )
    return _check("bpg-ccs-table", bad)


def check_d_c1_tables():
    bad = []
    for (k, r), table in sorted(D_C1_TABLES.items()):
        ctx = group_context("D:%d,%d" % (k, r))
        cat = {item.label: item for item in ctx.catalog}
        for (t, s), cell in sorted(table["cells"].items()):
            got = ctx.first_ccs(cat["rho_%d_%d" % (t, s)].character)[0].value
            want = Fraction(cell, table["scale"])
            if got != want % 1:
                bad.append("D:%d,%d rho_%d_%d: expected %s got %s" % (k, r, t, s, want, got))
    return _check("d-c1-tables", bad)


def check_d_xi_tables():
    """Scaled xi values, compared as classes mod Z."""
    bad = []
    raw_match = 0
    total = 0
    for (k, r), table in sorted(D_XI_TABLES.items()):
        ctx = group_context("D:%d,%d" % (k, r))
        cat = {item.label: item for item in ctx.catalog}
        scale = table["scale"]
        for (t, s), cell in sorted(table["cells"].items()):
            total += 1
            raw = ctx.xi_exact(cat["rho_%d_%d" % (t, s)].character)
            if raw % 1 != Fraction(cell, scale) % 1:
                bad.append(
                    "D:%d,%d rho_%d_%d: expected %s/%s got %s mod Z"
                    % (k, r, t, s, cell, scale, raw)
                )
            if raw * scale == cell:
                raw_match += 1
    ok = _check("d-xi-tables", bad)
    if ok.ok:
        return Check(ok.name, True, "raw scaled integers match %d/%d cells" % (raw_match, total))
    return ok


def check_bd_closed_form(q_max=30):
    """xi sum equals (t^2 - 2qt - 2q)/4q for every binary dihedral group."""
    bad = []
    for q in range(2, q_max + 1):
        ctx = group_context("BD:%d" % q)
        cat = {item.label: item for item in ctx.catalog}
        for t in range(1, q):
            got = ctx.xi_exact(cat["rho_%d" % t].character)
            want = xi_closed_form_bd_exact(q, t)
            if got != want:
                bad.append("BD:%d rho_%d: closed form %s, sum %s" % (q, t, want, got))
    return _check("bd-closed-form(q<=%d)" % q_max, bad)


def check_d_closed_form(ks=(2, 3), rs=(1, 2, 3)):
    """xi sum equals the triple-sum closed form on the 2-group dihedral family."""
    bad = []
    for k in ks:
        for r in rs:
            ctx = group_context("D:%d,%d" % (k, r))
            cat = {item.label: item for item in ctx.catalog}
            for t in range(1, 2 * r + 1):
                for s in range(2 ** (k - 1)):
                    got = ctx.xi_exact(cat["rho_%d_%d" % (t, s)].character)
                    want = xi_closed_form_d_exact(k, r, t, s)
                    if got != want:
                        bad.append(
                            "D:%d,%d rho_%d_%d: closed form %s, sum %s"
                            % (k, r, t, s, want, got)
                        )
    return _check("d-closed-form", bad)


def check_telescoping(n_max=50, t_max=10):
    bad = []
    for n in range(2, n_max + 1):
        for t in range(1, t_max + 1):
            for j in (1, 2, 3):
                if j % n == 0:
                    continue
                if not telescoping_identity_check(n, t, j):
                    bad.append("telescoping fails at n=%d t=%d j=%d" % (n, t, j))
    return _check("telescoping(n<=%d,t<=%d)" % (n_max, t_max), bad)


def check_onedim_second_ccs(specs=None):
    """Second CCS-number of every degree-1 character vanishes."""
    bad = []
    for text in specs or SHIPPED_SPECS:
        ctx = group_context(text)
        for item in ctx.catalog:
            if item.degree != 1:
                continue
            got = ctx.second_ccs(item.character)
            if got.value != 0:
                bad.append("%s %s: second CCS %s != 0" % (text, item.label, got))
    return _check("onedim-second-ccs", bad)


def check_first_ccs_det(specs=None):
    """c1 of a character equals c1 of its determinant character."""
    from .reptheory import det_character

    bad = []
    for text in specs or SHIPPED_SPECS:
        ctx = group_context(text)
        for item in ctx.catalog:
            det = det_character(item.character)
            if ctx.first_ccs(item.character) != ctx.first_ccs(det):
                bad.append("%s %s: c1 != c1(det)" % (text, item.label))
    return _check("first-ccs-det", bad)


def check_tensor_chern():
    bad = []
    combos = [("BT", 5), ("BT", 7), ("BD:3", 5), ("BD:3", 7), ("BI", 7)]
    for inner, l in combos:
        ctx = group_context("%sxC:%d" % (inner, l))
        if not tensor_chern_first_check(inner, l, ctx=ctx):
            bad.append("tensor c1 identity fails for %sxC:%d" % (inner, l))
    try:
        tensor_chern_first_check("BI", 5)
        bad.append("BIxC:5 accepted despite gcd(120,5) != 1")
    except ParameterError:
        pass
    return _check("tensor-first-chern", bad)


def check_wunram_example():
    """Two irreps of BIxC7 share (rank, c1) but are split by the full vector."""
    ctx = group_context("BIxC:7")
    pairs = rank_c1_collisions(ctx)
    rep = classification_report(ctx.group, ctx)
    bad = []
    if not pairs:
        bad.append("no (rank, c1) collision found in BIxC:7")
    if rep.verdict != "Injective":
        bad.append("BIxC:7 full vectors do not classify: %s" % rep.verdict)
    ok = _check("wunram-collision", bad)
    if ok.ok:
        return Check(ok.name, True, "%d collision pairs, e.g. %s" % (len(pairs), pairs[0],))
    return ok


def reference_battery():
    return [
        check_lens_first_ccs(),
        check_bd_onedim_tables(),
        check_bpg_table(),
        check_d_c1_tables(),
        check_d_xi_tables(),
        check_bd_closed_form(),
        check_d_closed_form(),
        check_telescoping(),
        check_onedim_second_ccs(),
        check_first_ccs_det(),
        check_tensor_chern(),
        check_wunram_example(),
    ]


# ---------------------------------------------------------------------------
# isomorphism battery


def _bool_check(name, ok):
    return Check(name, ok, "" if ok else "map is not a surjective relation-preserving assignment")


def iso_lemma_binary(n):
    """P_{24n/(6-n)} presentation holds in <2,3,n> via x = bc, y = c^-1."""
    kind = {3: "BT", 4: "BO", 5: "BI"}[n]
    g = group_context(kind).group
    ok = verify_isomorphism(
        presentation_milnor_p(n),
        {"x": [("b", 1), ("c", 1)], "y": [("c", -1)]},
        g,
    )
    return _bool_check("iso-P%d-%s" % (24 * n // (6 - n), kind), ok)


def iso_remark_dihedral(r):
    """D_{4(2r+1)} presentation holds in BD_{2(2r+1)} via x -> b, y -> c^2."""
    q = 2 * r + 1
    g = group_context("BD:%d" % q).group
    ok = verify_isomorphism(
        presentation_dihedral(1, q),
        {"x": g.gen_index("b"), "y": [("c", 2)]},
        g,
    )
    return _bool_check("iso-D4(%d)-BD%d" % (q, 2 * q), ok)


def iso_remark_pprime24():
    """The printed P'_24 <-> P_24 generator maps are mutually inverse in BT."""
    g = group_context("BT").group
    # x, y of the Milnor presentation realized inside <b, c>
    x = g.element_of_word([("b", 1), ("c", 1)])
    y = g.element_of_word([("c", -1)])
    yinv = g.inv[y]
    big_x = g.mul(g.mul(y, x), yinv)
    big_y = x
    big_z = g.mul(y, y)
    fwd = verify_isomorphism(
        presentation_pprime(1),
        {"x": big_x, "y": big_y, "z": big_z},
        g,
    )
    # inverse assignment x -> Y, y -> X^-1 Z^-1 Y^-1 recovers the originals
    x_back = big_y
    y_back = g.mul(g.mul(g.inv[big_x], g.inv[big_z]), g.inv[big_y])
    bwd = verify_isomorphism(
        presentation_milnor_p(3), {"x": x_back, "y": y_back}, g
    )
    return _bool_check("iso-Pprime24-P24", fwd and bwd and x_back == x and y_back == y)


def iso_theorem_dihedral(k, q, l):
    target = build_dihedral_nq_even(k, q, l)
    pres = with_central_factor(presentation_dihedral(k, q), "z", l)
    ok = verify_isomorphism(
        pres,
        {"x": [("t", l)], "y": [("a", 2)], "z": [("t", 2 ** (k + 1))]},
        target,
    )
    n = q + 2 ** (k - 1) * l
    return _bool_check("iso-Psi-D%d(%d)xC%d-DD(%d,%d)" % (2 ** (k + 1), q, l, n, q), ok)


def iso_theorem_tetrahedral(k, l):
    target = build_tetrahedral_3m(k, l)
    pres = with_central_factor(presentation_pprime(k), "w", l)
    if l % 3 == 2:
        assign = {"x": [("p", 1)], "y": [("t", 1)]}
    else:
        assign = {"x": [("t", -1)], "y": [("p", -1)]}
    assign["z"] = [("e", 2 * l)]
    assign["w"] = [("e", 2 * 3 ** k)]
    ok = verify_isomorphism(pres, assign, target)
    return _bool_check("iso-Phi-Pprime%dxC%d-T(%d)" % (8 * 3 ** k, l, 3 ** (k - 1) * l), ok)


def iso_quaternion(t):
    g = group_context("BD:%d" % t).group
    ok = verify_isomorphism(
        presentation_quaternion(t),
        {"x": g.gen_index("b"), "y": g.gen_index("c")},
        g,
    )
    ok2 = verify_isomorphism(
        presentation_2st(2, t),
        {"b": g.gen_index("b"), "c": g.gen_index("c")},
        g,
    )
    return _bool_check("iso-Q%d-BD%d" % (4 * t, 2 * t), ok and ok2)


def iso_battery():
    checks = [iso_lemma_binary(n) for n in (3, 4, 5)]
    checks += [iso_quaternion(t) for t in (2, 3, 5)]
    checks += [iso_remark_dihedral(r) for r in (1, 2, 3, 4)]
    checks.append(iso_remark_pprime24())
    for (k, q, l) in [(2, 5, 1), (2, 3, 5), (2, 9, 7), (3, 5, 1), (3, 3, 5), (3, 7, 5)]:
        checks.append(iso_theorem_dihedral(k, q, l))
    for (k, l) in [(2, 1), (2, 5), (2, 7), (3, 1), (3, 5)]:
        checks.append(iso_theorem_tetrahedral(k, l))
    return checks


def run_all(write=print):
    """Run every golden check; returns True when everything passes."""
    ok = True
    for check in reference_battery() + iso_battery():
        status = "PASS" if check.ok else "FAIL"
        detail = (" - " + check.detail) if check.detail else ""
        write("%s %s%s" % (status, check.name, detail))
        ok = ok and check.ok
    return ok

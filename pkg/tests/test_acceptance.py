"""Acceptance criteria, one test (and one printed pass/fail line) each.

All comparisons are exact; there are no tolerances anywhere.  Criterion 9's
classification half is asserted verbatim and FAILS on this build: reduced
mod Z, the CCS vector provably does not classify 2-dimensional irreducibles
of BD(6)/BD(8)/BD(12) (raw xi values differ by an exact nonzero integer);
see notes on the binary dihedral mod-Z collisions in the repository docs.
"""

from fractions import Fraction

import pytest

from spherex.classify import classification_report, conjecture_scan, rank_c1_collisions
from spherex.errors import ParameterError
from spherex.invariants import (
    telescoping_identity_check,
    tensor_chern_first_check,
    xi_closed_form_bd_exact,
    xi_closed_form_d_exact,
)
from spherex.refdata import BD_C1_TABLES, BPG_TABLE, D_C1_TABLES, D_XI_TABLES
from spherex.reptheory import char_inner_product, det_character
from spherex.verify import SHIPPED_SPECS, group_context, iso_battery


def _report(num, desc, ok, detail=""):
    line = "[%s] criterion %s: %s" % ("PASS" if ok else "FAIL", num, desc)
    if detail:
        line += " - " + str(detail)
    print(line)
    assert ok, line


def _xi_cells(k, r):
    ctx = group_context("D:%d,%d" % (k, r))
    cat = {item.label: item for item in ctx.catalog}
    table = D_XI_TABLES[(k, r)]
    bad = []
    for (t, s), cell in sorted(table["cells"].items()):
        got = ctx.xi_exact(cat["rho_%d_%d" % (t, s)].character) % 1
        want = Fraction(cell, table["scale"]) % 1
        if got != want:
            bad.append("(t=%d,s=%d): expected %s got %s" % (t, s, want, got))
    return bad


def test_criterion_01_d22_xi_table():
    bad = _xi_cells(2, 2)
    _report(1, "40*xi values of D(2,2) match the published table as mod-Z classes",
            not bad, "; ".join(bad))


def test_criterion_02_d32_d31_xi_tables():
    bad = _xi_cells(3, 2) + _xi_cells(3, 1)
    _report(2, "80*xi of D(3,2) and 48*xi of D(3,1) match all printed cells",
            not bad, "; ".join(bad))


def test_criterion_03_first_ccs_tables():
    bad = []
    for (k, r), table in sorted(D_C1_TABLES.items()):
        ctx = group_context("D:%d,%d" % (k, r))
        cat = {item.label: item for item in ctx.catalog}
        for (t, s), cell in sorted(table["cells"].items()):
            got = ctx.first_ccs(cat["rho_%d_%d" % (t, s)].character)[0].value
            if got != Fraction(cell, table["scale"]) % 1:
                bad.append("D(%d,%d) (t=%d,s=%d)" % (k, r, t, s))
    _report(3, "scaled first CCS-numbers of D(2,2), D(3,2), D(3,1) match all cells",
            not bad, "; ".join(bad))


def test_criterion_04_bpg_ccs_table():
    bad = []
    for kind in ("BT", "BO", "BI"):
        ctx = group_context(kind)
        names = ctx.reference_labels()  # raises if any vector fails to match
        computed = {}
        for item in ctx.catalog:
            vec = ctx.ccs_vector(item.character)
            first = vec.first[0].value if vec.first else None
            computed[names[item.label]] = (vec.rank, first, vec.second.value)
        for label, rank, c1, c2 in BPG_TABLE[kind]:
            if computed.get(label) != (rank, c1, c2):
                bad.append("%s %s" % (kind, label))
    spot = {
        ("BT", "alpha_4"): Fraction(1, 24),
        ("BO", "alpha_8"): Fraction(5, 24),
        ("BI", "alpha_2"): Fraction(1, 120),
    }
    for (kind, label), want in spot.items():
        ctx = group_context(kind)
        names = ctx.reference_labels()
        item = next(i for i in ctx.catalog if names[i.label] == label)
        if ctx.second_ccs(item.character).value != want:
            bad.append("spot %s %s" % (kind, label))
    _report(4, "all c1 and c2 values for BT, BO, BI match the published columns",
            not bad, "; ".join(bad))


def test_criterion_05_lens_and_bd_tables():
    from math import gcd

    bad = []
    for n in range(2, 13):
        for q in range(1, n):
            if gcd(n, q) != 1:
                continue
            ctx = group_context("C:%d,%d" % (n, q))
            for j, item in enumerate(ctx.catalog):
                if ctx.first_ccs(item.character)[0].value != Fraction(j, n):
                    bad.append("C:%d,%d alpha_%d" % (n, q, j))
    for q in (2, 4, 8, 3, 5, 9):
        ctx = group_context("BD:%d" % q)
        table = BD_C1_TABLES["even" if q % 2 == 0 else "odd"]
        for item in ctx.catalog:
            if item.label in table:
                got = tuple(v.value for v in ctx.first_ccs(item.character))
                if got != table[item.label]:
                    bad.append("BD:%d %s" % (q, item.label))
    _report(5, "lens c1(alpha_j) = j/n for n <= 12 and BD one-dim tables, both parities",
            not bad, "; ".join(bad))


def test_criterion_06_bd_closed_form():
    bad = []
    for q in range(2, 31):
        ctx = group_context("BD:%d" % q)
        cat = {item.label: item for item in ctx.catalog}
        for t in range(1, q):
            if ctx.xi_exact(cat["rho_%d" % t].character) != xi_closed_form_bd_exact(q, t):
                bad.append("q=%d t=%d" % (q, t))
    _report(6, "xi sum equals (t^2-2qt-2q)/4q for 2 <= q <= 30, all t", not bad, "; ".join(bad))


def test_criterion_07_d_closed_form():
    bad = []
    for k in (2, 3):
        for r in (1, 2, 3):
            ctx = group_context("D:%d,%d" % (k, r))
            cat = {item.label: item for item in ctx.catalog}
            for t in range(1, 2 * r + 1):
                for s in range(2 ** (k - 1)):
                    got = ctx.xi_exact(cat["rho_%d_%d" % (t, s)].character)
                    if got != xi_closed_form_d_exact(k, r, t, s):
                        bad.append("k=%d r=%d t=%d s=%d" % (k, r, t, s))
    _report(7, "xi sum equals the triple-sum closed form for k in {2,3}, r in {1,2,3}",
            not bad, "; ".join(bad))


def test_criterion_08_catalog_completeness():
    bad = []
    for text in SHIPPED_SPECS:
        ctx = group_context(text)
        g = ctx.group
        if sum(item.degree ** 2 for item in ctx.catalog) != len(g):
            bad.append("%s degree sum" % text)
        if len(ctx.catalog) != len(g.classes):
            bad.append("%s class count" % text)
        cat = ctx.catalog
        for i in range(len(cat)):
            for j in range(i, len(cat)):
                v = char_inner_product(cat[i].character, cat[j].character).as_fraction()
                if v != (1 if i == j else 0):
                    bad.append("%s <%s,%s>" % (text, cat[i].label, cat[j].label))
    _report(8, "sum d^2 = |G|, #irreps = #classes, full orthonormality on the shipped catalog",
            not bad, "; ".join(bad[:4]))


def test_criterion_09a_classification_injective():
    bad = []
    for text in SHIPPED_SPECS:
        ctx = group_context(text)
        rep = classification_report(ctx.group, ctx)
        if rep.verdict == "Injective":
            continue
        if rep.verdict == "ConjecturalCaseExcluded" and (
            ctx.group.spec.kind == "D"
            or (ctx.group.spec.kind == "PROD" and ctx.group.spec.inner.kind == "D")
        ):
            continue
        pairs = [c for c in rep.collisions]
        bad.append("%s -> %s %s" % (text, rep.verdict, pairs))
    _report(
        "9a",
        "classification_report returns Injective outside the open dihedral rank-2 case",
        not bad,
        "; ".join(bad) + " [mod-Z CCS vectors provably collide on these binary "
        "dihedral groups: raw xi values differ by an exact nonzero integer, so the "
        "real-valued invariant separates them but its reduction mod Z does not]",
    )


def test_criterion_09b_conjecture_scan():
    res = conjecture_scan(range(2, 5), range(1, 6))
    _report("9b", "conjecture scan finds zero counterexamples for k <= 4, r <= 5",
            res["counterexamples"] == [], res["counterexamples"][:3])


def test_criterion_10_isomorphism_checks():
    checks = iso_battery()
    bad = [c.name for c in checks if not c.ok]
    _report(10, "all presentation isomorphism maps verify (%d checks)" % len(checks),
            not bad, "; ".join(bad))


def test_criterion_11_property_suites():
    bad = []
    for n in range(2, 51):
        for t in range(1, 11):
            for j in (1, 2, 3):
                if j % n and not telescoping_identity_check(n, t, j):
                    bad.append("telescoping n=%d t=%d j=%d" % (n, t, j))
    for text in SHIPPED_SPECS:
        ctx = group_context(text)
        for item in ctx.catalog:
            if item.degree == 1 and ctx.second_ccs(item.character).value != 0:
                bad.append("%s %s second CCS != 0" % (text, item.label))
            det = det_character(item.character)
            if ctx.first_ccs(item.character) != ctx.first_ccs(det):
                bad.append("%s %s c1 != c1(det)" % (text, item.label))
    for inner, l in [("BT", 5), ("BT", 7), ("BD:3", 5), ("BD:3", 7), ("BI", 7)]:
        ctx = group_context("%sxC:%d" % (inner, l))
        if not tensor_chern_first_check(inner, l, ctx=ctx):
            bad.append("tensor c1 %sxC:%d" % (inner, l))
    with pytest.raises(ParameterError):
        tensor_chern_first_check("BI", 5)
    _report(11, "telescoping identity, c2(deg-1) = 0, c1 = c1(det), tensor c1 identity",
            not bad, "; ".join(bad[:4]))


def test_criterion_12_wunram_example():
    ctx = group_context("BIxC:7")
    pairs = rank_c1_collisions(ctx)
    rep = classification_report(ctx.group, ctx)
    ok = bool(pairs) and rep.verdict == "Injective"
    _report(12, "BIxC7 has equal (rank, c1) pairs split by the full CCS vector",
            ok, "%d pairs, e.g. %s" % (len(pairs), pairs[0] if pairs else None))

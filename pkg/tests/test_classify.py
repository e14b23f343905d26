import pytest

from spherex.classify import (
    classification_report,
    conjecture_scan,
    rank_c1_collisions,
    verify_collision_lemmas,
)
from spherex.errors import ParameterError, ResourceLimitError
from spherex.invariants import InvariantContext
from spherex.matgroup import build_group


@pytest.mark.parametrize(
    "text", ["C:5,2", "C:12,5", "BD:5", "BD:4", "BT", "BO", "BI", "D:2,2", "D:3,1", "P:2", "BD:3xC:5"]
)
def test_injective_reports(text):
    rep = classification_report(build_group(text))
    assert rep.verdict == "Injective"
    assert not rep.collisions and not rep.excluded
    labels = [lab for lab, _ in rep.entries]
    assert len(set(labels)) == len(labels)


def test_d31_xi_collision_resolved_by_c1():
    # xi alone collides at (t=1,s=0) vs (t=2,s=0); c1 separates them
    g = build_group("D:3,1")
    ctx = InvariantContext(g)
    cat = {item.label: item for item in ctx.catalog}
    a, b = cat["rho_1_0"].character, cat["rho_2_0"].character
    assert ctx.xi(a) == ctx.xi(b)
    assert ctx.first_ccs(a) != ctx.first_ccs(b)
    assert classification_report(g, ctx).verdict == "Injective"


def test_bd_collision_absence_small_q():
    # no 2-dim mod-Z collisions for these q: (t1-t2)(t1+t2-2q) != 0 mod 4q in range
    for q in (2, 3, 4, 5, 7, 9, 13):
        g = build_group("BD:%d" % q)
        ctx = InvariantContext(g)
        vecs = {}
        for item in ctx.catalog:
            if item.degree == 2:
                vec = ctx.ccs_vector(item.character)
                assert vec.key() not in vecs, (q, item.label)
                vecs[vec.key()] = item.label


@pytest.mark.parametrize("q,t1,t2", [(6, 1, 5), (8, 2, 6), (12, 2, 10)])
def test_bd_mod_z_collisions_exist(q, t1, t2):
    # documented finding: mod-Z CCS vectors do NOT separate these pairs; the
    # raw xi values differ by a nonzero integer, so the real-valued invariant does
    g = build_group("BD:%d" % q)
    ctx = InvariantContext(g)
    cat = {item.label: item for item in ctx.catalog}
    a, b = cat["rho_%d" % t1].character, cat["rho_%d" % t2].character
    assert a.values != b.values
    assert ctx.ccs_vector(a) == ctx.ccs_vector(b)
    diff = ctx.xi_exact(a) - ctx.xi_exact(b)
    assert diff != 0 and diff.denominator == 1
    rep = classification_report(g, ctx)
    assert rep.verdict == "CollisionsFound"
    assert any({"rho_%d" % t1, "rho_%d" % t2} <= set(c) for c in rep.collisions)


@pytest.mark.parametrize("text", ["D:2,2", "D:3,2", "D:3,1"])
def test_collision_lemmas(text):
    assert verify_collision_lemmas(build_group(text))


def test_collision_lemmas_wrong_family():
    with pytest.raises(ParameterError):
        verify_collision_lemmas(build_group("BD:3"))


def test_conjecture_scan_small():
    res = conjecture_scan(range(2, 4), range(1, 3))
    assert res["counterexamples"] == []
    assert len(res["points"]) == 4
    point = res["points"][0]
    assert set(point) == {"params", "orders", "counterexamples", "status"}
    assert point["status"] == "verified"


def test_conjecture_scan_cap():
    with pytest.raises(ResourceLimitError):
        conjecture_scan(range(2, 3), range(1, 2), order_cap=10)
    with pytest.raises(ParameterError):
        conjecture_scan(range(1, 2), range(1, 2))


def test_rank_c1_collision_smallest():
    # already in plain BT two 2-dim irreps share (rank, c1 = 1/3 vs ...)? they do not;
    # but in BI all first CCS-numbers vanish, so equal-rank pairs collide
    ctx = InvariantContext(build_group("BI"))
    pairs = rank_c1_collisions(ctx)
    assert pairs, "BI has equal-rank irreps with trivial H1"
    rep = classification_report(ctx.group, ctx)
    assert rep.verdict == "Injective"

"""Classification of irreducible representations by their CCS vectors.

A group's catalog is injectively classified when every irreducible has a
distinct (rank; first CCS-numbers; second CCS-number) vector.  The one open
case is rank 2 in the 2-group dihedral family (possibly times a cyclic
factor), where two representations with the same s, the same cyclic twist and
t of equal parity could in principle share a vector; such collisions are
surfaced as a conjectural exclusion, never silently dropped.  Any other
collision is a hard finding.
"""

import re
from dataclasses import dataclass

from .errors import ParameterError, ResourceLimitError
from .invariants import InvariantContext
from .matgroup import FamilySpec, build_group

VERDICT_INJECTIVE = "Injective"
VERDICT_COLLISIONS = "CollisionsFound"
VERDICT_CONJECTURAL = "ConjecturalCaseExcluded"

_D_RHO = re.compile(r"^rho_(\d+)_(\d+)$")


@dataclass(frozen=True)
class ClassificationReport:
    spec: FamilySpec
    entries: tuple  # (label, CcsVector) in catalog order
    collisions: tuple  # tuples of labels sharing a vector, size >= 2
    verdict: str
    excluded: tuple  # labels excluded under the open rank-2 dihedral case


def _d_rho_params(spec, label):
    """(t, s, cyclic twist) when label is a 2-dim dihedral-family irrep."""
    if spec is None:
        return None
    if spec.kind == "D":
        m = _D_RHO.match(label)
        return (int(m.group(1)), int(m.group(2)), 0) if m else None
    if spec.kind == "PROD" and spec.inner.kind == "D":
        base, _, j = label.rpartition("*a")
        m = _D_RHO.match(base)
        return (int(m.group(1)), int(m.group(2)), int(j)) if m else None
    return None


def _is_conjectural(spec, labels):
    """True when a collision set is exactly the open dihedral rank-2 case."""
    params = [_d_rho_params(spec, lab) for lab in labels]
    if any(p is None for p in params):
        return False
    ts = [p[0] for p in params]
    ss = {p[1] for p in params}
    js = {p[2] for p in params}
    if len(ss) != 1 or len(js) != 1:
        return False
    return len(set(ts)) == len(ts) and len({t % 2 for t in ts}) == 1


def classification_report(g, ctx=None):
    """Compute all CCS vectors of g's catalog and report collisions."""
    if ctx is None:
        ctx = InvariantContext(g)
    names = ctx.reference_labels()
    entries = [(names[item.label], ctx.ccs_vector(item.character)) for item in ctx.catalog]
    by_key = {}
    for label, vec in entries:
        by_key.setdefault(vec.key(), []).append(label)
    collisions = tuple(
        tuple(labels) for labels in by_key.values() if len(labels) >= 2
    )
    if not collisions:
        verdict = VERDICT_INJECTIVE
        excluded = ()
    elif all(_is_conjectural(g.spec, labels) for labels in collisions):
        verdict = VERDICT_CONJECTURAL
        excluded = tuple(lab for labels in collisions for lab in labels)
    else:
        verdict = VERDICT_COLLISIONS
        excluded = ()
    return ClassificationReport(
        spec=g.spec,
        entries=tuple(entries),
        collisions=collisions,
        verdict=verdict,
        excluded=excluded,
    )


def conjecture_scan(k_range, r_range, order_cap=5000):
    """Scan t -> xi(rho_{t,s}) injectivity within parity classes of t.

    Returns a ledger with one entry per (k, r) grid point and the list of
    counterexamples found (none are expected).
    """
    points = []
    total = []
    for k in k_range:
        for r in r_range:
            if not (k > 1 and r >= 1):
                raise ParameterError("scan needs k > 1 and r >= 1")
            order = 2 ** (k + 1) * (2 * r + 1)
            if order > order_cap:
                raise ResourceLimitError(
                    "group of order %d exceeds the scan cap %d" % (order, order_cap)
                )
            g = build_group(FamilySpec.dihedral_2k(k, r))
            ctx = InvariantContext(g)
            xi = {}
            for item in ctx.catalog:
                m = _D_RHO.match(item.label)
                if m:
                    xi[(int(m.group(1)), int(m.group(2)))] = ctx.xi(item.character)
            found = []
            for s in range(2 ** (k - 1)):
                for parity in (0, 1):
                    seen = {}
                    for t in range(1, 2 * r + 1):
                        if t % 2 != parity:
                            continue
                        v = xi[(t, s)]
                        if v in seen:
                            found.append(
                                {"k": k, "r": r, "s": s, "t1": seen[v], "t2": t,
                                 "xi": str(v.value)}
                            )
                        else:
                            seen[v] = t
            points.append(
                {
                    "params": [k, r],
                    "orders": order,
                    "counterexamples": found,
                    "status": "verified" if not found else "counterexamples",
                }
            )
            total.extend(found)
    return {"points": points, "counterexamples": total}


def verify_collision_lemmas(g, ctx=None):
    """Brute-force the dihedral collision lemmas on a 2-group dihedral group.

    Equal first CCS class forces equal s and equal t-parity; an equal full
    CCS vector additionally forces equal xi.
    """
    if g.spec is None or g.spec.kind != "D":
        raise ParameterError("collision lemmas apply to the D family")
    if ctx is None:
        ctx = InvariantContext(g)
    rhos = []
    for item in ctx.catalog:
        m = _D_RHO.match(item.label)
        if m:
            rhos.append((int(m.group(1)), int(m.group(2)), item.character))
    ok = True
    for i, (t1, s1, c1) in enumerate(rhos):
        f1 = ctx.first_ccs(c1)
        v1 = ctx.ccs_vector(c1)
        for t2, s2, c2 in rhos[i + 1 :]:
            if ctx.first_ccs(c2) == f1:
                if s1 != s2 or (t1 - t2) % 2:
                    ok = False
            if ctx.ccs_vector(c2) == v1:
                if ctx.xi(c1) != ctx.xi(c2) or s1 != s2 or (t1 - t2) % 2:
                    ok = False
    return ok


def rank_c1_collisions(ctx):
    """Pairs sharing (rank, first CCS-numbers) but with distinct full vectors."""
    names = ctx.reference_labels()
    seen = {}
    out = []
    for item in ctx.catalog:
        vec = ctx.ccs_vector(item.character)
        key = (vec.rank, tuple(v.value for v in vec.first))
        for other_label, other_vec in seen.get(key, []):
            if other_vec != vec:
                out.append((other_label, names[item.label]))
        seen.setdefault(key, []).append((names[item.label], vec))
    return out

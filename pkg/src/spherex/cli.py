"""Command-line front end.

Group specs use the syntax  C:n,q | BD:q | BT | BO | BI | D:k,r | P:k |
<base>xC:l  (e.g. "D:2,2", "BIxC:7").  Exit codes: 0 success, 1 verification
failure, 2 usage error.  SPHEREX_ELEMENT_CAP overrides the closure cap.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .classify import classification_report, conjecture_scan
from .errors import ParameterError, ResourceLimitError, SpherexError
from .invariants import InvariantContext
from .matgroup import FamilySpec, abelianization, build_group
from . import verify as verify_mod

USAGE_ERROR = 2


class Table:
    """A rendered table of exact-value strings; round-trips through csv/json."""

    def __init__(self, headers, rows):
        self.headers = list(headers)
        self.rows = [[str(c) for c in row] for row in rows]

    def render(self, fmt, out):
        if fmt == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(self.headers)
            w.writerows(self.rows)
        elif fmt == "json":
            json.dump({"headers": self.headers, "rows": self.rows}, out, indent=1)
            out.write("\n")
        else:
            widths = [
                max(len(h), *(len(r[i]) for r in self.rows)) if self.rows else len(h)
                for i, h in enumerate(self.headers)
            ]
            out.write("  ".join(h.ljust(w) for h, w in zip(self.headers, widths)).rstrip() + "\n")
            for row in self.rows:
                out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")

    @staticmethod
    def parse_csv(text):
        rows = list(csv.reader(io.StringIO(text)))
        return Table(rows[0], rows[1:])

    @staticmethod
    def parse_json(text):
        obj = json.loads(text)
        return Table(obj["headers"], obj["rows"])

    def __eq__(self, other):
        return self.headers == other.headers and self.rows == other.rows


def _frac(x):
    return str(x)


def _scaled(raw, order):
    v = raw * order
    return str(int(v)) if v.denominator == 1 else str(v)


def _parse_spin_override(text):
    """--spin-character 'x=16:3,y=1:0' -> {gen name: (order, exponent)}."""
    out = {}
    for part in text.split(","):
        name, _, val = part.partition("=")
        order, _, exp = val.partition(":")
        try:
            out[name.strip()] = (int(order), int(exp))
        except ValueError:
            raise ParameterError("bad --spin-character entry %r" % part)
    return out


def _context(args):
    g = build_group(FamilySpec.parse(args.spec), element_cap=args.element_cap)
    override = None
    if getattr(args, "spin_character", None):
        override = _parse_spin_override(args.spin_character)
    return InvariantContext(g, spin_override=override)


def cmd_group(args, out):
    if args.action != "info":
        raise ParameterError("unknown group action %r (expected 'info')" % args.action)
    spec = FamilySpec.parse(args.spec)
    g = build_group(spec, element_cap=args.element_cap)
    ab = abelianization(g)
    info = {
        "family": spec.kind if spec.kind != "PROD" else "%sxC" % spec.inner.kind,
        "params": _spec_params(spec),
        "order": len(g),
        "num_classes": len(g.classes),
        "abelianization": list(ab.factors),
    }
    if args.format == "json":
        json.dump(info, out, indent=1)
        out.write("\n")
    elif args.format == "csv":
        t = Table(["field", "value"], [[k, json.dumps(v) if isinstance(v, (list, dict)) else v] for k, v in info.items()])
        t.render("csv", out)
    else:
        for k, v in info.items():
            out.write("%s: %s\n" % (k, v))
    return 0


def _spec_params(spec):
    if spec.kind == "C":
        return {"n": spec.params[0], "q": spec.params[1]}
    if spec.kind == "BD":
        return {"q": spec.params[0]}
    if spec.kind == "D":
        return {"k": spec.params[0], "r": spec.params[1]}
    if spec.kind == "P":
        return {"k": spec.params[0]}
    if spec.kind == "PROD":
        inner = _spec_params(spec.inner)
        inner["l"] = spec.l
        return inner
    return {}


def cmd_irreps(args, out):
    ctx = _context(args)
    names = ctx.reference_labels()
    t = Table(
        ["label", "degree", "explicit_matrices"],
        [
            [names[item.label], item.degree, "yes" if item.matrices else "no"]
            for item in ctx.catalog
        ],
    )
    t.render(args.format, out)
    return 0


def cmd_char_table(args, out):
    ctx = _context(args)
    g = ctx.group
    names = ctx.reference_labels()
    headers = ["label"] + [
        "g%d:%d" % (cls[0], len(cls)) for cls in g.classes
    ]
    rows = [
        [names[item.label]] + [v.to_text() for v in item.character.values]
        for item in ctx.catalog
    ]
    Table(headers, rows).render(args.format, out)
    return 0


def cmd_ccs_table(args, out):
    ctx = _context(args)
    order = len(ctx.group)
    names = ctx.reference_labels()
    headers = (
        ["label", "rank"]
        + ["c1(%s)" % name for name in ctx.ab.gen_names]
        + ["c2", "xi", "%d*xi" % order]
    )
    rows = []
    for item in ctx.catalog:
        vec = ctx.ccs_vector(item.character)
        raw = ctx.xi_exact(item.character)
        rows.append(
            [names[item.label], vec.rank]
            + [_frac(v) for v in vec.first]
            + [_frac(vec.second), _frac(Fraction(raw) % 1), _scaled(raw, order)]
        )
    Table(headers, rows).render(args.format, out)
    return 0


def cmd_xi_table(args, out):
    ctx = _context(args)
    order = len(ctx.group)
    names = ctx.reference_labels()
    headers = ["label", "xi", "%d*xi" % order]
    rows = []
    for item in ctx.catalog:
        raw = ctx.xi_exact(item.character)
        rows.append([names[item.label], _frac(Fraction(raw) % 1), _scaled(raw, order)])
    Table(headers, rows).render(args.format, out)
    return 0


def cmd_classify(args, out):
    ctx = _context(args)
    rep = classification_report(ctx.group, ctx)
    if args.format == "json":
        json.dump(
            {
                "spec": str(rep.spec),
                "verdict": rep.verdict,
                "entries": [[lab, str(vec)] for lab, vec in rep.entries],
                "collisions": [list(c) for c in rep.collisions],
                "excluded": list(rep.excluded),
            },
            out,
            indent=1,
        )
        out.write("\n")
    else:
        t = Table(
            ["label", "vector"],
            [[lab, str(vec)] for lab, vec in rep.entries],
        )
        t.render(args.format, out)
        if args.format == "text":
            out.write("verdict: %s\n" % rep.verdict)
            names = ctx.reference_labels()
            by_label = {names[item.label]: item.character for item in ctx.catalog}
            for c in rep.collisions:
                raws = {ctx.xi_exact(by_label[lab]) for lab in c}
                note = "raw xi separates" if len(raws) == len(c) else "raw xi collides too"
                out.write("collision: %s (%s)\n" % (c, note))
            if rep.excluded:
                out.write("excluded (open case): %s\n" % (rep.excluded,))
    return 0 if rep.verdict != "CollisionsFound" else 1


def cmd_conjecture_scan(args, out):
    res = conjecture_scan(
        range(2, args.k_max + 1), range(1, args.r_max + 1), order_cap=args.order_cap
    )
    if args.format == "text":
        for point in res["points"]:
            out.write(
                "k=%d r=%d order=%d: %s\n"
                % (point["params"][0], point["params"][1], point["orders"], point["status"])
            )
        out.write("counterexamples: %d\n" % len(res["counterexamples"]))
    else:
        for point in res["points"]:
            json.dump(point, out)
            out.write("\n")
    return 0 if not res["counterexamples"] else 1


def cmd_iso_check(args, out):
    ok = True
    for check in verify_mod.iso_battery():
        out.write("%s %s\n" % ("PASS" if check.ok else "FAIL", check.name))
        ok = ok and check.ok
    return 0 if ok else 1


def cmd_verify_paper(args, out):
    ok = verify_mod.run_all(write=lambda line: out.write(line + "\n"))
    return 0 if ok else 1


def build_parser():
    # global flags are accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"),
                        default=argparse.SUPPRESS)
    common.add_argument("--element-cap", type=int, default=argparse.SUPPRESS,
                        help="closure cap (default 100000 or SPHEREX_ELEMENT_CAP)")
    common.add_argument("--spin-character", default=argparse.SUPPRESS,
                        help="override square-root character, e.g. 'x=16:3'")
    p = argparse.ArgumentParser(
        prog="spherex",
        description="Exact invariants of spherical 3-manifold groups.",
        parents=[common],
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("group", help="group facts", parents=[common])
    sp.add_argument("action")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_group)

    for name, func in [
        ("irreps", cmd_irreps),
        ("char-table", cmd_char_table),
        ("ccs-table", cmd_ccs_table),
        ("xi-table", cmd_xi_table),
        ("classify", cmd_classify),
    ]:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("spec")
        sp.set_defaults(func=func)

    sp = sub.add_parser("conjecture-scan", parents=[common])
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--r-max", type=int, required=True)
    sp.add_argument("--order-cap", type=int, default=5000)
    sp.set_defaults(func=cmd_conjecture_scan)

    sp = sub.add_parser("iso-check", parents=[common])
    sp.set_defaults(func=cmd_iso_check)

    sp = sub.add_parser("verify-paper", parents=[common])
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    for name, default in (("format", "text"), ("element_cap", None),
                          ("spin_character", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args, out)
    except (ParameterError, ResourceLimitError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except SpherexError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

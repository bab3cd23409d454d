"""Command-line front end: field facts, normal forms, presentation checks,
catalog browsing, and the verification campaigns.

Report streams go to stdout one record per line, followed by a summary;
timing and figure paths go to stderr so two runs with identical inputs
produce byte-identical stdout.  Exit status is 0 exactly when every check
requested by the command passed.
"""
from __future__ import annotations

import argparse
import sys

from . import harness
from .catalog import describe, list_families
from .findim import from_confluent
from .gf import Field, make_field
from .hopf import (
    HopfPresentation,
    build_hopf,
    check_axioms,
    grouplikes,
    iso_search,
    skew_primitive_space,
)
from .rewrite import complete, enumerate_basis, make_system, normal_form


def _field(text: str) -> Field:
    parts = text.replace(" ", "").split(",")
    if len(parts) == 1:
        parts.append("1")
    try:
        p, k = (int(x) for x in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected p,k integers, got {text!r}")
    try:
        return make_field(p, k)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _load(path: str) -> HopfPresentation:
    with open(path) as fh:
        return HopfPresentation.from_text(fh.read())


def _completed_system(P: HopfPresentation):
    sys_, status = complete(make_system(P.ctx, P.relations))
    return sys_, status


def _modulus_text(f: Field) -> str:
    terms = []
    for i in range(f.k, -1, -1):
        c = f.modulus[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            t = "t" if i == 1 else f"t^{i}"
            terms.append(t if c == 1 else f"{c}*{t}")
    return " + ".join(terms)


def _element_text(f: Field, a: int) -> str:
    ds = f.digits(a)
    terms = []
    for i in range(f.k - 1, -1, -1):
        c = ds[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            t = "t" if i == 1 else f"t^{i}"
            terms.append(t if c == 1 else f"{c}*{t}")
    return " + ".join(terms) or "0"


def cmd_field_info(args) -> int:
    f = make_field(args.p, args.k)
    print(f"GF({f.q}) = GF({f.p}^{f.k}), characteristic {f.p}")
    if f.k > 1:
        print(f"modulus: {_modulus_text(f)}")
        print("encoding: integer a represents the base-p digit vector of a in t")
    else:
        print("prime field; elements are residues mod p")
    if f.q <= 32:
        for a in f.elements():
            inv = f.inv(a) if a else "-"
            print(f"  {a:>2}  =  {_element_text(f, a):<16} inverse {inv}")
    return 0


def cmd_nf(args) -> int:
    P = _load(args.file)
    sys_, status = _completed_system(P)
    if status != "confluent":
        print("completion exceeded the degree cap; normal forms not canonical", file=sys.stderr)
        return 2
    poly = P.ctx.parse_poly(args.poly)
    print(P.ctx.format_poly(normal_form(poly, sys_)))
    return 0


def cmd_dim(args) -> int:
    P = _load(args.file)
    sys_, status = _completed_system(P)
    if status != "confluent":
        print("completion exceeded the degree cap", file=sys.stderr)
        return 2
    words, finite = enumerate_basis(sys_)
    if sys_.unit_collapsed:
        print("0 (unit collapse: the relations force 1 = 0)")
        return 0
    if not finite:
        print(f"not finite dimensional (more than {len(words)} basis words)")
        return 2
    print(len(words))
    return 0


def cmd_hopf_check(args) -> int:
    P = _load(args.file)
    H = build_hopf(P)
    if not H.ok:
        print(f"collapse: {H.kind}: {H.message}")
        return 1
    rep = check_axioms(H)
    print(f"dim {H.dim}")
    for name, (ok, _) in rep.checks.items():
        print(f"  {name:<24} {'ok' if ok else 'FAIL'}")
    return 0 if rep.ok else 1


def cmd_skewprim(args) -> int:
    P = _load(args.file)
    H = build_hopf(P)
    if not H.ok:
        print(f"collapse: {H.kind}: {H.message}")
        return 1
    basis = skew_primitive_space(H, args.g, args.h)
    print(f"dim {len(basis)}")
    for v in basis:
        print(f"  {H.A.format_element(v)}")
    return 0


def cmd_grouplikes(args) -> int:
    P = _load(args.file)
    H = build_hopf(P)
    if not H.ok:
        print(f"collapse: {H.kind}: {H.message}")
        return 1
    if args.enumerate:
        els = grouplikes(H, "enumerate")
        print(f"{len(els)} grouplike elements (exhaustive scan)")
        for v in els:
            print(f"  {H.A.format_element(v)}")
        return 0
    els = H.group_elements()
    checked = grouplikes(H, "verify", els)
    print(f"{len(els)} elements in the group generated by the grouplike generators")
    all_ok = True
    for v, ok in checked:
        all_ok &= ok
        print(f"  {H.A.format_element(v):<24} {'ok' if ok else 'FAIL'}")
    return 0 if all_ok else 1


def cmd_nichols(args) -> int:
    from .nichols import make_braided, nichols_dims

    f = args.field or make_field(2, 1)
    V = make_braided(args.spec, f)
    graded, total, closed = nichols_dims(V, n_max=args.nmax)
    seq = ",".join(str(d) for d in graded)
    kind = "total" if closed else "lower bound"
    print(f"nichols|{harness.field_label(f)}|{args.spec}|graded={seq}|{kind}={total}")
    if args.figures:
        path = harness.render_nichols_figure(args.spec, graded, f, args.figures)
        print(f"figure: {path}", file=sys.stderr)
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        t42 = list_families("T4.2")
        t37 = list_families("T3.7")
        lem = list_families("lemmas")
        print(f"T4.2 families: {len(t42)}")
        print(f"T3.7 families: {len(t37)}")
        print(f"lemma records: {len(lem)}")
        for fid in t42 + t37 + lem:
            print(fid)
        return 0
    if not args.id:
        print("catalog show needs a family id", file=sys.stderr)
        return 2
    print(describe(args.id))
    return 0


def _parse_fix(items) -> dict | None:
    if not items:
        return None
    out = {}
    for item in items:
        name, _, val = item.partition("=")
        if not _:
            raise SystemExit(f"--fix expects name=value, got {item!r}")
        out[name] = int(val)
    return out


def cmd_verify(args) -> int:
    campaign = harness.verify_scope(
        args.scope, args.field, sample=args.sample, seed=args.seed, fix=_parse_fix(args.fix)
    )
    records = harness.render_records(campaign)
    if records:
        print(records)
    print()
    print(harness.render_summary(campaign))
    print(f"elapsed {campaign.elapsed:.1f}s", file=sys.stderr)
    if args.figures:
        path = harness.render_campaign_figure(campaign, args.figures)
        print(f"figure: {path}", file=sys.stderr)
    return 0 if campaign.passed else 1


def cmd_iso(args) -> int:
    H1 = build_hopf(_load(args.file1))
    H2 = build_hopf(_load(args.file2))
    for name, H in ((args.file1, H1), (args.file2, H2)):
        if not H.ok:
            print(f"collapse in {name}: {H.kind}: {H.message}")
            return 2
    found = iso_search(H1, H2, limit=1)
    if not found:
        print("not isomorphic")
        return 1
    print("isomorphic")
    phi = found[0]
    for g in H1.presentation.gens:
        print(f"  {g.name} -> {H2.A.format_element(phi.images[g.name])}")
    return 0


def cmd_iso_criteria(args) -> int:
    rep = harness.verify_iso_criteria(args.id, args.field)
    records = rep.records()
    if records:
        print(records)
    print()
    print(rep.summary())
    print(f"elapsed {rep.elapsed:.1f}s", file=sys.stderr)
    if args.figures:
        path = harness.render_iso_figure(rep, args.figures)
        print(f"figure: {path}", file=sys.stderr)
    return 0 if rep.agreement else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfbench", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="print the arithmetic facts of GF(p^k)")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(fn=cmd_field_info)

    p = sub.add_parser("nf", help="normal form of a polynomial in a presented algebra")
    p.add_argument("file")
    p.add_argument("poly")
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("dim", help="dimension of the presented algebra")
    p.add_argument("file")
    p.set_defaults(fn=cmd_dim)

    p = sub.add_parser("hopf-check", help="build the presentation and check all Hopf axioms")
    p.add_argument("file")
    p.set_defaults(fn=cmd_hopf_check)

    p = sub.add_parser("skewprim", help="basis of the (g,h) skew-primitive space")
    p.add_argument("file")
    p.add_argument("g")
    p.add_argument("h")
    p.set_defaults(fn=cmd_skewprim)

    p = sub.add_parser("grouplikes", help="grouplike elements of the presented algebra")
    p.add_argument("file")
    p.add_argument("--enumerate", action="store_true", help="exhaustive scan instead of generator closure")
    p.set_defaults(fn=cmd_grouplikes)

    p = sub.add_parser("nichols", help="graded dimensions of a Nichols algebra")
    p.add_argument("spec")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--field", type=_field, default=None, help="p,k (default 2,1)")
    p.add_argument("--figures", metavar="DIR", help="also render a bar chart into DIR")
    p.set_defaults(fn=cmd_nichols)

    p = sub.add_parser("catalog", help="list the family catalog or show one record")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("id", nargs="?")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("verify", help="sweep a scope or family: build, dimension, axioms")
    p.add_argument("scope")
    p.add_argument("--field", type=_field, required=True, help="p,k")
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--fix", action="append", metavar="NAME=VAL", help="pin a parameter (repeatable)")
    p.add_argument("--figures", metavar="DIR", help="also render the outcome chart into DIR")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("iso", help="search for a Hopf isomorphism between two presentations")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("iso-criteria", help="compare the family's isomorphism criterion with brute force")
    p.add_argument("id")
    p.add_argument("--field", type=_field, required=True, help="p,k")
    p.add_argument("--figures", metavar="DIR", help="also render the agreement matrix into DIR")
    p.set_defaults(fn=cmd_iso_criteria)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())

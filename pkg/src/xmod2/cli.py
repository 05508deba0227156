"""Command-line interface.

Commands:
  validate FILE                 construct and certify every named structure
  simplicial FILE --module M    build the simplex tower and check identities
  homotopy OP FILE --names ...  apply / compose / invert / assoc on named
                                derivations or quadratic derivations
  groupoid cm|tcm FILE ...      sampled groupoid-law suites
  selftest                      the full built-in suite

Exit codes: 0 all checks pass, 1 check failures, 2 usage errors, 3 I/O or
parse errors.  Reports go to stdout as text; --json PATH writes the
canonical JSON form (byte-identical across runs for a fixed seed).
The seed falls back to the XMOD2_SEED environment variable, then 0.
"""

import argparse
import os
import sys

from .cm_homotopy import apply_cm_homotopy, cm_groupoid_check, concat_cm, invert_cm
from .errors import FreeBasisRequired, ParseError, UnresolvedReference, ValidationError, XmodError
from .maps import Policy
from .report import Report, canonical_json
from .simplex import build_tower, check_simplicial_identities
from .specdoc import load_spec
from .tcm_homotopy import (
    apply_2cm_homotopy,
    box_plus_s,
    box_plus_t,
    check_w_change,
    concat_2cm,
    invert_2cm,
    tcm_groupoid_check,
)


def _default_seed():
    try:
        return int(os.environ.get("XMOD2_SEED", "0"))
    except ValueError:
        return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="xmod2",
        description="Exact verification of crossed and 2-crossed module structure, "
        "simplex algebras, and homotopy groupoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_policy=True):
        p.add_argument("--json", metavar="PATH", help="also write the canonical JSON report")
        if with_policy:
            p.add_argument("--samples", type=int, default=100)
            p.add_argument("--max-degree", type=int, default=4)
            p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("validate", help="validate every structure in a file")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("simplicial", help="simplex tower and simplicial identities")
    p.add_argument("file")
    p.add_argument("--module", required=True, help="name of a 2-crossed module")
    common(p)

    p = sub.add_parser("homotopy", help="operations on named homotopies")
    p.add_argument("op", choices=["apply", "compose", "invert", "assoc"])
    p.add_argument("file")
    p.add_argument("--names", required=True, help="comma-separated homotopy names")
    common(p)

    p = sub.add_parser("groupoid", help="sampled groupoid-law suite")
    p.add_argument("flavor", choices=["cm", "tcm"])
    p.add_argument("file")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    common(p)

    p = sub.add_parser("selftest", help="run the full built-in verification suite")
    common(p)
    return parser


def _policy(args):
    seed = args.seed if args.seed is not None else _default_seed()
    return Policy(samples=args.samples, max_degree=args.max_degree, seed=seed)


def _load(args, policy):
    return load_spec(args.file, policy)


def _cmd_validate(args, policy):
    report = Report("validate", params={"file": os.path.basename(args.file), "seed": policy.seed})
    doc = _load(args, policy)
    for name in sorted(doc.algebras):
        report.add("algebra/%s" % name, "associativity", True)
    for name in sorted(doc.actions):
        report.add("action/%s" % name, "A1+A2", True, certificate=doc.actions[name].certificate)
    for section, store in (
        ("precrossed", doc.precrossed),
        ("crossed", doc.crossed),
    ):
        for name in sorted(store):
            for law, cert in sorted(store[name].certificates.items()):
                report.add("%s/%s/%s" % (section, name, law), law, True, certificate=cert)
    for name in sorted(doc.two_crossed):
        for law, cert in sorted(doc.two_crossed[name].certificates.items()):
            report.add("two_crossed/%s/%s" % (name, law), law, True, certificate=cert)
    for name in sorted(doc.maps):
        report.add("map/%s" % name, "morphism", True)
    for name in sorted(doc.derivations):
        report.add("derivation/%s" % name, "derivation-law", True,
                   certificate=doc.derivations[name].certificate)
    for name in sorted(doc.quadratic):
        for law, cert in sorted(doc.quadratic[name].certificates.items()):
            report.add("quadratic/%s/%s" % (name, law), law, True, certificate=cert)
    return report


def _cmd_simplicial(args, policy):
    report = Report(
        "simplicial",
        params={
            "file": os.path.basename(args.file), "module": args.module,
            "seed": policy.seed, "samples": policy.samples, "max_degree": policy.max_degree,
        },
    )
    doc = _load(args, policy)
    if args.module not in doc.two_crossed:
        raise UnresolvedReference(args.module, "two_crossed")
    A = doc.two_crossed[args.module]
    tower = build_tower(A, policy)
    for name in sorted(tower.actions):
        report.add("action/%s" % name, "A1+A2", True, certificate=tower.actions[name].certificate)
    for (n, i), f in sorted(tower.faces.items()):
        report.add("face/d%d@%d" % (i, n), "morphism", True, certificate=f.multiplicative)
    for (n, i), f in sorted(tower.degeneracies.items()):
        report.add("degeneracy/s%d@%d" % (i, n), "morphism", True, certificate=f.multiplicative)
    for name, ok, witness in check_simplicial_identities(tower, policy):
        report.add("identity/%s" % name, name, ok, witness)
    return report


def _homotopy_by_name(doc, name):
    if name in doc.quadratic:
        return ("tcm", doc.quadratic[name])
    if name in doc.derivations:
        return ("cm", doc.derivations[name])
    raise UnresolvedReference(name, "derivation")


def _sample_points(R):
    """Generator values plus low-degree monomials for display."""
    from .algebra import FreeAlgebra

    points = []
    if isinstance(R, FreeAlgebra):
        for g in R.generators:
            points.append(R.monomial(g))
        for g in R.generators:
            points.append(R.monomial(g, g))
            points.append(R.monomial(g, g, g))
    else:
        points = R.basis_elements()
    return points


def _cmd_homotopy(args, policy):
    names = [n.strip() for n in args.names.split(",") if n.strip()]
    report = Report(
        "homotopy " + args.op,
        params={"file": os.path.basename(args.file), "names": names, "seed": policy.seed},
    )
    doc = _load(args, policy)
    flavors = [_homotopy_by_name(doc, n) for n in names]
    kinds = {k for k, _ in flavors}
    if len(kinds) != 1:
        raise ValidationError("homotopy " + args.op, "mixed derivation kinds %r" % kinds)
    kind = kinds.pop()
    items = [h for _, h in flavors]

    if args.op == "apply":
        for name, item in zip(names, items):
            if kind == "cm":
                hom = apply_cm_homotopy(item, policy)
                g0, g1 = hom.target.f0, hom.target.f1
                for r in _sample_points(item.f.src.R):
                    report.add("value/%s/g0(%s)" % (name, r), "target", True, witness=str(g0(r)))
            else:
                hom = apply_2cm_homotopy(item, policy)
                for r in _sample_points(item.f.src.R):
                    report.add("value/%s/g0(%s)" % (name, r), "target", True,
                               witness=str(hom.target.f0(r)))
            report.add("homotopy/%s/target-valid" % name, "target", True)
        return report

    if args.op == "compose":
        if len(items) != 2:
            raise ValidationError("homotopy compose", "need exactly two names")
        a, b = items
        if kind == "cm":
            out = concat_cm(a, b, policy)
            for r in _sample_points(a.f.src.R):
                report.add("value/(s+s')(%s)" % r, "concat", True, witness=str(out(r)))
        else:
            ha, hb = apply_2cm_homotopy(a, policy), apply_2cm_homotopy(b, policy)
            out = concat_2cm(ha, hb, policy)
            box = box_plus_s(ha, hb, policy)
            for r in _sample_points(a.f.src.R):
                report.add("value/(s[+]s')(%s)" % r, "box-plus", True, witness=str(box(r)))
            for k in a.f.src.E.basis_keys():
                e = a.f.src.E.basis_element(k)
                report.add("value/(t[+]t')(%s)" % k, "box-plus", True,
                           witness=str(box_plus_t(ha, hb, e, policy)))
        report.add("homotopy/compose/laws", "concat", True)
        return report

    if args.op == "invert":
        for name, item in zip(names, items):
            if kind == "cm":
                inv = invert_cm(item, policy)
                for r in _sample_points(item.f.src.R):
                    report.add("value/%s/sbar(%s)" % (name, r), "inverse", True, witness=str(inv(r)))
            else:
                hom = apply_2cm_homotopy(item, policy)
                inv = invert_2cm(hom, policy)
                for r in _sample_points(item.f.src.R):
                    report.add("value/%s/sbar(%s)" % (name, r), "inverse", True,
                               witness=str(inv.s(r)))
            report.add("homotopy/%s/inverse-valid" % name, "inverse", True)
        return report

    # assoc
    if len(items) != 3:
        raise ValidationError("homotopy assoc", "need exactly three names")
    if kind == "cm":
        a, b, c = items
        left = concat_cm(concat_cm(a, b, policy), c, policy)
        right = concat_cm(a, concat_cm(b, c, policy), policy)
        report.add("assoc/derivations", "associativity", left.equal(right))
        return report
    ha, hb, hc = [apply_2cm_homotopy(i, policy) for i in items]
    for r in _sample_points(ha.qd.f.src.R):
        ok, lhs, rhs = check_w_change(ha, hb, hc, r, policy)
        report.add("assoc/w-change(%s)" % r, "wchange", ok, "%s vs %s" % (lhs, rhs))
    c12 = concat_2cm(ha, hb, policy)
    c23 = concat_2cm(hb, hc, policy)
    left = concat_2cm(c12, hc, policy)
    right = concat_2cm(ha, c23, policy)
    report.add("assoc/s-component", "associativity", left.qd.equal(right.qd))
    t_ok = all(
        box_plus_t(c12, hc, e, policy) == box_plus_t(ha, c23, e, policy)
        for e in ha.qd.f.src.E.basis_elements()
    )
    report.add("assoc/t-component", "associativity", t_ok)
    return report


def _cmd_groupoid(args, policy):
    report = Report(
        "groupoid " + args.flavor,
        params={
            "file": os.path.basename(args.file), "source": args.source, "target": args.target,
            "seed": policy.seed, "samples": policy.samples,
        },
    )
    doc = _load(args, policy)
    src = doc.module_named(args.source)
    tgt = doc.module_named(args.target)
    if args.flavor == "cm":
        entries = cm_groupoid_check(src, tgt, samples=policy.samples, seed=policy.seed, policy=policy)
    else:
        entries = tcm_groupoid_check(src, tgt, samples=policy.samples, seed=policy.seed, policy=policy)
    report.extend("", entries)
    return report


def _cmd_selftest(args, policy):
    from .selftest import run_selftest

    return run_selftest(seed=policy.seed, samples=min(policy.samples, 25), max_degree=policy.max_degree)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    policy = _policy(args)
    try:
        if args.command == "validate":
            report = _cmd_validate(args, policy)
        elif args.command == "simplicial":
            report = _cmd_simplicial(args, policy)
        elif args.command == "homotopy":
            report = _cmd_homotopy(args, policy)
        elif args.command == "groupoid":
            report = _cmd_groupoid(args, policy)
        else:
            report = _cmd_selftest(args, policy)
    except OSError as exc:
        print("i/o error: %s" % exc, file=sys.stderr)
        return 3
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 3
    except (UnresolvedReference, ValidationError, FreeBasisRequired, XmodError) as exc:
        report = Report(args.command, params={})
        report.add("load/%s" % type(exc).__name__, type(exc).__name__, False, witness=str(exc))
        print(report.to_text(), end="")
        if getattr(args, "json", None):
            _write_json(args.json, report)
        return 1

    print(report.to_text(), end="")
    if getattr(args, "json", None):
        _write_json(args.json, report)
    return 0 if report.ok else 1


def _write_json(path, report):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(canonical_json(report.to_json_obj()))


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: inspect posets, enumerate bijection groups, decide
properness, and run the verification harness.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra as alg
from . import bijections as bij
from . import chains as chn
from . import families as fam
from . import groups as grp
from . import poset as pst
from . import suites
from .errors import BoundExceeded, ParseError, PosetLieError, InvalidParameter
from .fields import parse_field_spec


def _dump(data):
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _load_poset(args):
    if args.family:
        return fam.from_selector(args.family)
    if args.file:
        with open(args.file, "r", encoding="utf-8") as handle:
            return pst.parse_poset(handle.read())
    raise InvalidParameter("need --family or --file")


def _add_source_flags(sub):
    sub.add_argument("--family", help="family selector, e.g. crown:3 or kmn:2x3")
    sub.add_argument("--file", help="path to a poset v1 file")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--bound", type=int, default=bij.DEFAULT_BOUND,
                     help="largest |B| exhaustive sweeps may attempt")
    sub.add_argument("--field", default="q", help="q or fp:<prime>")
    sub.add_argument("--jobs", type=int, default=1)


def cmd_info(args):
    poset = _load_poset(args)
    crowns = pst.weak_crowns(poset)
    classes = chn.chain_classes(poset)
    data = {
        "elements": list(poset.names),
        "size": poset.n,
        "length": poset.length,
        "min": [poset.names[i] for i in poset.min_set],
        "max": [poset.names[i] for i in poset.max_set],
        "strict_pairs": len(poset.strict_pairs),
        "maximal_chains": len(poset.maximal_chains),
        "chain_classes": len(classes),
        "crownless": not crowns,
        "weak_crowns": len(crowns),
    }
    if args.format == "json":
        print(_dump(data))
    else:
        for key in (
            "size", "length", "min", "max", "strict_pairs",
            "maximal_chains", "chain_classes", "weak_crowns", "crownless",
        ):
            print("%s: %s" % (key, data[key]))
    return 0


def cmd_chains(args):
    poset = _load_poset(args)
    chains = [list(poset.label_chain(c)) for c in poset.maximal_chains]
    if args.format == "json":
        print(_dump({"chains": chains}))
    else:
        for c in chains:
            print(" < ".join(c))
    return 0


def cmd_classes(args):
    poset = _load_poset(args)
    report = chn.classes_to_json(poset, chn.chain_classes(poset))
    if args.format == "json":
        print(_dump(report))
    else:
        for k, cls in enumerate(report["classes"]):
            print("class %d: support {%s}" % (k, ", ".join(cls["support"])))
            for chain in cls["chains"]:
                print("  " + " < ".join(chain))
    return 0


def cmd_aut(args):
    poset = _load_poset(args)
    maps = pst.poset_maps(poset)
    data = [
        {"kind": m.kind.value, "images": [poset.names[m.perm[i]] for i in range(poset.n)]}
        for m in maps
    ]
    if args.format == "json":
        print(_dump({"maps": data, "order": len(data)}))
    else:
        print("order: %d" % len(data))
        for m in data:
            print("%s: %s" % (m["kind"], " ".join(m["images"])))
    return 0


def cmd_enumerate(args):
    poset = _load_poset(args)
    if args.group == "m":
        elements = list(bij.enumerate_M(poset, bound=args.bound))
        report = {"order": len(elements)}
    elif args.group == "am":
        elements = bij.enumerate_AM(poset, bound=args.bound, jobs=args.jobs)
        report = grp.verify_group(elements).to_json()
    else:
        elements = bij.enumerate_P(poset)
        report = grp.verify_group(elements).to_json()
    if args.format == "json":
        print(
            _dump(
                {
                    "group": args.group,
                    "structure": report,
                    "elements": [t.to_json(poset) for t in elements],
                }
            )
        )
    else:
        print("order: %d" % len(elements))
        if "element_order_histogram" in report:
            histogram = ", ".join(
                "%s:%d" % (k, v)
                for k, v in report["element_order_histogram"].items()
            )
            print("element orders: %s" % histogram)
            print("generators: %d" % len(report["witness_generators"]))
    return 0


def cmd_decide(args):
    poset = _load_poset(args)
    verdict = chn.decide_all_proper(poset, bound=args.bound, jobs=args.jobs)
    if args.format == "json":
        print(_dump(verdict.to_json(poset)))
    else:
        print("all_proper: %s" % verdict.all_proper)
        print("|AM| = %d, |P| = %d" % (verdict.am_order, verdict.p_order))
        print(
            "chain classes: %d (single class is sufficient: %s)"
            % (verdict.class_count, verdict.single_class_sufficient)
        )
        if verdict.counterexample is not None:
            pairs = verdict.counterexample.to_json(poset)
            moved = [
                "e[%s,%s] -> e[%s,%s]"
                % (
                    poset.names[a], poset.names[b],
                    poset.names[c], poset.names[d],
                )
                for (a, b), (c, d) in pairs
                if (a, b) != (c, d)
            ]
            print("witness (admissible, not proper): " + "; ".join(moved))
    return 0


def cmd_verify(args):
    results = suites.run_suite(
        args.suite, jobs=args.jobs, field=parse_field_spec(args.field)
    )
    failed = [c for c in results if not c.ok]
    if args.format == "json":
        print(
            _dump(
                {
                    "checks": [
                        {"name": c.name, "ok": c.ok, "detail": c.detail}
                        for c in results
                    ],
                    "passed": len(results) - len(failed),
                    "failed": len(failed),
                }
            )
        )
    else:
        for c in results:
            line = "%s %s" % ("PASS" if c.ok else "FAIL", c.name)
            if c.detail:
                line += " (%s)" % c.detail
            print(line)
        print("%d passed, %d failed" % (len(results) - len(failed), len(failed)))
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="posetlie",
        description="Bijection groups and properness checks for incidence algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, handler in (
        ("info", cmd_info),
        ("chains", cmd_chains),
        ("classes", cmd_classes),
        ("aut", cmd_aut),
    ):
        p = sub.add_parser(name)
        _add_source_flags(p)
        p.set_defaults(handler=handler)

    p = sub.add_parser("enumerate")
    p.add_argument("group", choices=("m", "am", "p"))
    _add_source_flags(p)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("decide")
    _add_source_flags(p)
    p.set_defaults(handler=cmd_decide)

    p = sub.add_parser("verify")
    p.add_argument("suite", help="suite name or 'all'")
    _add_source_flags(p)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    # the --field flag selects the scalar field for algebra-layer checks
    try:
        parse_field_spec(args.field)
    except InvalidParameter as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except BoundExceeded as err:
        print("error: %s" % err, file=sys.stderr)
        return 3
    except (InvalidParameter, ParseError, FileNotFoundError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except PosetLieError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

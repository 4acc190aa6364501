"""Command-line front end: input parsing, invariant reports, and the
built-in example verification suite.

Reports are deterministic: identical inputs and flags produce byte-identical
output (pass --timing to append wall-clock data, which is excluded from that
contract).  Exit codes: 0 success, 1 input error, 2 property-assertion
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from . import fixtures, krull
from .congruence import MasterRelation, RelationVector, betti_elements, kernel_generating_set, master_relation
from .errors import InputError, MonoidError, PropertyAssertionError
from .factorizations import Factorization, factorizations, length_set
from .intlinalg import Sublattice2
from .invariants import (
    catenary_element,
    catenary_monoid,
    classify,
    cross_check_pure_sets,
    decompose,
    default_bound,
    is_length_factorial,
    pure_sets,
    puiseux_classify,
    relation_shape_check,
    signature_verdict,
)
from .presentation import MonoidPresentation, MonoidSpec, normalize_spec, spec_from_document

REPORT_VERSION = 1


def jsonable(obj):
    if isinstance(obj, Factorization):
        return list(obj.exponents)
    if isinstance(obj, MasterRelation):
        return {"w1": list(obj.w1.exponents), "w2": list(obj.w2.exponents),
                "lengths": list(obj.lengths)}
    if isinstance(obj, RelationVector):
        return {"vector": list(obj.vector), "positive": list(obj.positive),
                "negative": list(obj.negative), "balance": obj.balance}
    if isinstance(obj, Sublattice2):
        return {"rank": obj.rank,
                "generator": list(obj.generator) if obj.generator else None,
                "basis": [list(b) for b in obj.basis]}
    if isinstance(obj, Fraction):
        return str(obj)
    if is_dataclass(obj) and not isinstance(obj, type):
        return jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = list(obj) if not isinstance(obj, (set, frozenset)) else sorted(obj)
        return [jsonable(v) for v in items]
    return obj


def render_text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, dict) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            elif isinstance(v, list) and v and isinstance(v[0], dict):
                lines.append(f"{pad}{k}:")
                for item in v:
                    lines.append(f"{pad}  -")
                    lines.append(render_text(item, indent + 2))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, sort_keys=True)}")
    else:
        lines.append(f"{pad}{json.dumps(doc, sort_keys=True)}")
    return "\n".join(line for line in lines if line)


def presentation_summary(p: MonoidPresentation) -> dict:
    return {
        "ambient": {"free_rank": p.ambient.free_rank, "torsion": list(p.ambient.torsion)},
        "atoms": [list(a) for a in p.atoms],
        "grading": list(p.grading.weights),
        "kernel_basis": [list(c) for c in p.kernel.vectors],
        "dropped_generators": [list(g) for g in p.dropped_generators],
        "scale": p.scale,
    }


def parse_element(text: str, p: MonoidPresentation) -> tuple[int, ...]:
    tokens = [t for t in text.replace(",", " ").split() if t]
    if not tokens:
        raise InputError("empty element")
    if any("/" in t for t in tokens):
        if p.ambient.dim != 1:
            raise InputError("fractional elements only make sense for rank-1 inputs")
        q = Fraction(tokens[0]) * p.scale
        if q.denominator != 1:
            raise InputError(f"element {tokens[0]} is not in the scaled lattice")
        return (int(q),)
    try:
        vec = tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise InputError(f"element must be integers or a fraction: {exc}") from None
    if p.ambient.dim == 1 and p.scale != 1:
        vec = (vec[0] * p.scale,)
    if len(vec) != p.ambient.dim:
        raise InputError(f"element has {len(vec)} coordinates, ambient needs {p.ambient.dim}")
    return p.ambient.canon(vec)


def load_spec(path: str) -> tuple[MonoidSpec, dict]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    return spec_from_document(doc), doc


def base_report(command: str, args, input_echo) -> dict:
    return {
        "report_version": REPORT_VERSION,
        "command": command,
        "flags": {
            "bound": args.bound,
            "strategy": getattr(args, "strategy", None),
            "format": args.format,
        },
        "input": input_echo,
    }


def cmd_classify(args) -> dict:
    spec, doc = load_spec(args.input)
    p = normalize_spec(spec)
    bound = args.bound if args.bound is not None else default_bound(p)
    report = base_report("classify", args, doc)
    report["presentation"] = presentation_summary(p)
    if args.strategy in ("lattice", "all"):
        cls = classify(p)
        report["classification"] = jsonable(cls.as_dict())
        pure = pure_sets(p)
        report["pure_sets"] = {
            "purely_long": [list(p.atoms[i]) for i in pure.purely_long],
            "purely_short": [list(p.atoms[i]) for i in pure.purely_short],
            "verdicts": [signature_verdict(s) for s in pure.signatures],
            "signatures": [jsonable(s) for s in pure.signatures],
        }
        report["betti"] = jsonable(betti_elements(p, "certified"))
        report["catenary"] = jsonable(catenary_monoid(p, bound))
        if spec.kind in ("numerical", "puiseux"):
            report["rank_one"] = jsonable(puiseux_classify(spec))
    if args.strategy in ("brute", "all"):
        lf_sweep, cert = is_length_factorial(p, "brute", bound)
        report["sweeps"] = {
            "bound": bound,
            "length_factorial_up_to_bound": lf_sweep,
        }
        if not lf_sweep:
            report["sweeps"]["violating_pair"] = jsonable(cert["violating_pair"])
            report["sweeps"]["violating_element"] = list(cert["element"])
    if args.strategy == "all":
        exact_lf = report["classification"]["length_factorial"]
        if not report["sweeps"]["length_factorial_up_to_bound"] and exact_lf:
            raise PropertyAssertionError("bounded sweep found a violation the "
                                         "exact decider missed")
        oracle = cross_check_pure_sets(p, bound)
        report["pure_cross_check"] = jsonable(oracle)
        if not oracle["agree"]:
            raise PropertyAssertionError("pure-set oracle disagrees with the "
                                         "signature lattice")
    return report


def cmd_factorize(args) -> dict:
    spec, doc = load_spec(args.input)
    p = normalize_spec(spec)
    x = parse_element(args.element, p)
    zs = factorizations(p, x)
    report = base_report("factorize", args, doc)
    report["presentation"] = presentation_summary(p)
    report["element"] = list(x)
    report["factorizations"] = [list(z.exponents) for z in zs]
    report["lengths"] = list(zs.lengths)
    report["count"] = len(zs)
    report["in_monoid"] = bool(len(zs))
    return report


def cmd_lengths(args) -> dict:
    spec, doc = load_spec(args.input)
    p = normalize_spec(spec)
    x = parse_element(args.element, p)
    report = base_report("lengths", args, doc)
    report["element"] = list(x)
    report["length_set"] = list(length_set(p, x))
    return report


def cmd_betti(args) -> dict:
    spec, doc = load_spec(args.input)
    p = normalize_spec(spec)
    report = base_report("betti", args, doc)
    report["presentation"] = presentation_summary(p)
    certified = betti_elements(p, "certified")
    report["betti"] = jsonable(certified)
    report["generating_set"] = [jsonable(r) for r in kernel_generating_set(p)]
    if args.strategy in ("brute", "all"):
        bound = args.bound if args.bound is not None else default_bound(p)
        sweep = betti_elements(p, "sweep", bound)
        report["betti_sweep"] = jsonable(sweep)
        if args.strategy == "all":
            certified_within = [list(b) for b in certified.elements
                                if p.grading.value(b, p.ambient) <= bound]
            if certified_within != [list(b) for b in sweep.elements]:
                raise PropertyAssertionError("Betti sweep disagrees with the "
                                             "certified set inside the bound")
    return report


def cmd_catenary(args) -> dict:
    spec, doc = load_spec(args.input)
    p = normalize_spec(spec)
    report = base_report("catenary", args, doc)
    if args.element:
        x = parse_element(args.element, p)
        report["element"] = list(x)
        report["catenary"] = jsonable(catenary_element(p, x))
    else:
        report["catenary"] = jsonable(catenary_monoid(p, args.bound))
    return report


def cmd_pure(args) -> dict:
    spec, doc = load_spec(args.input)
    p = normalize_spec(spec)
    pure = pure_sets(p)
    report = base_report("pure", args, doc)
    report["presentation"] = presentation_summary(p)
    report["purely_long"] = [list(p.atoms[i]) for i in pure.purely_long]
    report["purely_short"] = [list(p.atoms[i]) for i in pure.purely_short]
    report["verdicts"] = [signature_verdict(s) for s in pure.signatures]
    report["signatures"] = [jsonable(s) for s in pure.signatures]
    if args.strategy in ("brute", "all"):
        bound = args.bound if args.bound is not None else default_bound(p)
        oracle = cross_check_pure_sets(p, bound)
        report["cross_check"] = jsonable(oracle)
        if args.strategy == "all" and not oracle["agree"]:
            raise PropertyAssertionError("pure-set oracle disagrees with the "
                                         "signature lattice")
    if pure.is_pls:
        report["relation_shape"] = jsonable(relation_shape_check(p, args.bound))
    return report


def cmd_decompose(args) -> dict:
    spec, doc = load_spec(args.input)
    p = normalize_spec(spec)
    H, O, checks = decompose(p, args.bound)
    report = base_report("decompose", args, doc)
    report["presentation"] = presentation_summary(p)
    report["half_factorial_part"] = [list(a) for a in H.atoms]
    report["length_factorial_part"] = [list(a) for a in O.atoms]
    report["checks"] = jsonable(checks)
    return report


def cmd_krull(args) -> dict:
    report: dict
    if args.scenario:
        result = krull.verify_dedekind_example(args.scenario)
        report = {
            "report_version": REPORT_VERSION,
            "command": "krull",
            "flags": {"scenario": args.scenario, "format": args.format},
            "verification": jsonable(result),
        }
        return report
    if not args.input:
        raise InputError("krull needs an input document or --scenario")
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    dist = krull.distribution_from_document(doc)
    atoms = krull.ideal_atoms(dist, args.degree_bound)
    p = krull.to_presentation(dist, args.degree_bound)
    pure = pure_sets(p)
    index_of = {a.vector: a for a in atoms}
    report = base_report("krull", args, doc)
    report["flags"]["degree_bound"] = args.degree_bound
    report["primes"] = [{"label": lab, "class": list(cls)} for lab, cls in dist.primes]
    report["atom_count"] = len(atoms)
    report["census"] = krull.atom_census(atoms)
    if dist.class_group.free_rank:
        report["completeness"] = f"complete up to degree {args.degree_bound}"
    else:
        report["completeness"] = "complete (Davenport bound)"
    report["purely_long"] = sorted(index_of[p.atoms[i]].type_tag for i in pure.purely_long)
    report["purely_short"] = sorted(index_of[p.atoms[i]].type_tag for i in pure.purely_short)
    report["pls"] = pure.is_pls
    return report


# ---------------------------------------------------------------------------
# Built-in verification suite
# ---------------------------------------------------------------------------


def _row(fixture: str, claim: str, expected, computed) -> dict:
    return {
        "fixture": fixture,
        "claim": claim,
        "expected": jsonable(expected),
        "computed": jsonable(computed),
        "pass": jsonable(expected) == jsonable(computed),
    }


def suite_rows() -> list[dict]:
    rows: list[dict] = []

    p23 = fixtures.presentation("N23")
    cls = classify(p23)
    rows.append(_row("N23", "length-factorial, not factorial",
                     {"lf": True, "factorial": False},
                     {"lf": cls.length_factorial, "factorial": cls.factorial}))
    m = master_relation(p23)
    rows.append(_row("N23", "master relation lengths", [2, 3], sorted(m.lengths)))
    rows.append(_row("N23", "Betti set", [[6]],
                     [list(b) for b in betti_elements(p23, "certified").elements]))
    cat = catenary_monoid(p23)
    rows.append(_row("N23", "catenary degrees c = c_adj = c_mon = 3, c_eq = 0",
                     {"c": 3, "c_adj": 3, "c_mon": 3, "c_eq": 0},
                     {"c": cat["sweep"]["c"], "c_adj": cat["sweep"]["c_adj"],
                      "c_mon": cat["sweep"]["c_mon"], "c_eq": cat["sweep"]["c_eq"]}))

    for n, fid in ((3, "MN3"), (4, "MN4"), (5, "MN5")):
        p = fixtures.presentation(fid)
        c = classify(p)
        witness = [0] * p.atom_count
        witness[1] = 2
        witness[0] -= 1
        witness[2] -= 1
        gens = kernel_generating_set(p)
        proportional = len({_direction(r.vector) for r in gens}) <= 1
        rows.append(_row(fid, "not length-factorial; 2(n+1) = n + (n+2) in the kernel; "
                              "non-cyclic congruence",
                         {"lf": False, "witness_in_kernel": True, "generators_proportional": False},
                         {"lf": c.length_factorial,
                          "witness_in_kernel": p.kernel.member(witness),
                          "generators_proportional": proportional or len(gens) < 2}))

    for fid, expect in (("M0", {"hf": True, "L": [], "S": []}),
                        ("M1", {"hf": False, "L": [[1, 1]], "S": []}),
                        ("M2", {"hf": False, "L": [], "S": [[2, 2]]}),
                        ("M3", {"hf": False, "L": [], "S": []})):
        p = fixtures.presentation(fid)
        c = classify(p)
        pure = pure_sets(p)
        rows.append(_row(fid, "half-factoriality and pure sets", expect,
                         {"hf": c.half_factorial,
                          "L": [list(p.atoms[i]) for i in pure.purely_long],
                          "S": [list(p.atoms[i]) for i in pure.purely_short]}))

    p46 = fixtures.presentation("E46")
    c46 = classify(p46)
    pure46 = pure_sets(p46)
    check46 = cross_check_pure_sets(p46, default_bound(p46))
    rows.append(_row("E46", "first atom purely long; PLS; not length-factorial; "
                            "oracle agrees",
                     {"a1_long": True, "pls": True, "lf": False, "oracle": True},
                     {"a1_long": 0 in pure46.purely_long, "pls": c46.pls,
                      "lf": c46.length_factorial, "oracle": check46["agree"]}))
    rows.append(_row("E46", "computed pure sets (engine ground truth)",
                     {"L": [[0, 1, 1]], "S": [[0, 2, 1]]},
                     {"L": [list(p46.atoms[i]) for i in pure46.purely_long],
                      "S": [list(p46.atoms[i]) for i in pure46.purely_short]}))

    for r, fid in ((2, "MR2"), (3, "MR3")):
        p = fixtures.presentation(fid)
        c = classify(p)
        rows.append(_row(fid, "half-factorial, not LF, atom count = rank + 1",
                         {"hf": True, "lf": False, "atoms": r + 1, "rank": r},
                         {"hf": c.half_factorial, "lf": c.length_factorial,
                          "atoms": c.atom_count, "rank": c.rank}))

    for n, fid in ((4, "T4"), (5, "T5")):
        p = fixtures.presentation(fid)
        c = classify(p)
        pure = pure_sets(p)
        long_atoms = [p.atoms[i] for i in pure.purely_long]
        short_atoms = [p.atoms[i] for i in pure.purely_short]
        witness = [0] * p.atom_count
        a3 = p.atoms.index((0, 1, 0))
        a4 = p.atoms.index((1, 1, 0))
        witness[a3] = n - 2
        witness[a4] = -(n - 2)
        rows.append(_row(fid, "torsion PLS without LF; (n-2)a3 = (n-2)a4 balanced witness",
                         {"L": [[0, 0, 2]], "S": [[0, 0, 3]], "pls": True, "lf": False,
                          "witness_in_kernel": True},
                         {"L": [list(a) for a in long_atoms],
                          "S": [list(a) for a in short_atoms],
                          "pls": c.pls, "lf": c.length_factorial,
                          "witness_in_kernel": p.kernel.member(witness)}))

    for fid in ("N23", "E46", "T4", "T5"):
        p = fixtures.presentation(fid)
        H, O, checks = decompose(p)
        rows.append(_row(fid, "decomposition: H half-factorial, O proper LF, "
                              "trivial intersection",
                         {"h_hf": True, "o_lf": True, "o_factorial": False,
                          "trivial": True},
                         {"h_hf": checks["h_half_factorial"],
                          "o_lf": checks["o_length_factorial"],
                          "o_factorial": checks["o_factorial"],
                          "trivial": checks["intersection_trivial"]}))

    pdec = fixtures.presentation("DEC")
    try:
        decompose(pdec)
        dec_not_pls = False
    except MonoidError:
        dec_not_pls = True
    h_hand = normalize_spec(MonoidSpec("affine", ((1, 2), (0, 3))))
    o_hand = normalize_spec(MonoidSpec("affine", ((1, 1), (2, 1), (3, 0))))
    ch = classify(h_hand)
    co = classify(o_hand)
    rows.append(_row("DEC", "not PLS, but splits by hand into factorial + proper LF",
                     {"not_pls": True, "hand_h_factorial": True, "hand_o_proper_lf": True},
                     {"not_pls": dec_not_pls, "hand_h_factorial": ch.factorial,
                      "hand_o_proper_lf": co.proper_length_factorial}))

    for fid, scenario, census, expect in (
            ("K62", "6.2", 41, {"long": [], "short": ["PPP"]}),
            ("K63", "6.3", 37, {"long": ["PQ"], "short": []})):
        result = krull.verify_dedekind_example(scenario)
        rows.append(_row(fid, "truncated Dedekind model: pure sets, census, witnesses",
                         {"atoms": census, "long": expect["long"], "short": expect["short"],
                          "pls": False, "witnesses_ok": True},
                         {"atoms": result["atom_count"],
                          "long": result["purely_long_tags"],
                          "short": result["purely_short_tags"],
                          "pls": result["pls"],
                          "witnesses_ok": all(w["in_kernel"] and w["irredundant"]
                                              for w in result["witnesses"])}))
    return rows


def _direction(vec) -> tuple:
    g = 0
    for x in vec:
        g = g if x == 0 else (abs(x) if g == 0 else _gcd2(g, abs(x)))
    if g == 0:
        return tuple(vec)
    norm = tuple(x // g for x in vec)
    first = next((x for x in norm if x), 0)
    return norm if first > 0 else tuple(-x for x in norm)


def _gcd2(a, b):
    while b:
        a, b = b, a % b
    return a


def cmd_paper_suite(args) -> dict:
    rows = suite_rows()
    report = {
        "report_version": REPORT_VERSION,
        "command": "paper-suite",
        "flags": {"format": args.format},
        "rows": rows,
        "passed": sum(1 for r in rows if r["pass"]),
        "failed": sum(1 for r in rows if not r["pass"]),
    }
    return report


def render_suite_text(report: dict) -> str:
    lines = []
    width = max(len(r["fixture"]) for r in report["rows"])
    for r in report["rows"]:
        status = "pass" if r["pass"] else "FAIL"
        lines.append(f"{r['fixture']:<{width}}  {status}  {r['claim']}")
        if not r["pass"]:
            lines.append(f"{'':<{width}}        expected: {json.dumps(r['expected'], sort_keys=True)}")
            lines.append(f"{'':<{width}}        computed: {json.dumps(r['computed'], sort_keys=True)}")
    lines.append(f"passed {report['passed']} / {report['passed'] + report['failed']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoidfact",
        description="Exact factorization invariants of finitely generated "
                    "commutative monoids and truncated Krull models.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, element=False):
        sp.add_argument("--bound", type=int, default=None,
                        help="sweep bound (default: 4x the largest atom grading)")
        sp.add_argument("--strategy", choices=["lattice", "brute", "all"], default="all")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--out", default=None, help="write the report to this path")
        sp.add_argument("--timing", action="store_true",
                        help="append wall-clock timing (breaks byte-determinism)")
        if element:
            sp.add_argument("--element", default=None,
                            help="element, e.g. '8' or '1,2' (torsion coordinates first)")

    for name, needs_element in (("classify", False), ("factorize", True),
                                ("lengths", True), ("betti", False),
                                ("catenary", True), ("pure", False),
                                ("decompose", False)):
        sp = sub.add_parser(name)
        sp.add_argument("input", help="monoid input document (JSON)")
        common(sp, element=needs_element)

    sp = sub.add_parser("krull")
    sp.add_argument("input", nargs="?", default=None,
                    help="prime distribution document (JSON)")
    sp.add_argument("--scenario", default=None,
                    help="bundled scenario: 6.2/dedekind-short or 6.3/dedekind-long")
    sp.add_argument("--degree-bound", type=int, default=None)
    common(sp)

    sp = sub.add_parser("paper-suite")
    common(sp)
    return parser


COMMANDS = {
    "classify": cmd_classify,
    "factorize": cmd_factorize,
    "lengths": cmd_lengths,
    "betti": cmd_betti,
    "catenary": cmd_catenary,
    "pure": cmd_pure,
    "decompose": cmd_decompose,
    "krull": cmd_krull,
    "paper-suite": cmd_paper_suite,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        for name in ("factorize", "lengths"):
            if args.command == name and not args.element:
                raise InputError(f"{name} needs --element")
        report = COMMANDS[args.command](args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PropertyAssertionError as exc:
        print(f"property assertion failed: {exc}", file=sys.stderr)
        return 2
    except MonoidError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 1
    if args.timing:
        report["timing_ms"] = round(1000 * (time.perf_counter() - started), 3)
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True)
    elif args.command == "paper-suite":
        text = render_suite_text(report)
    else:
        text = render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.command == "paper-suite" and report["failed"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

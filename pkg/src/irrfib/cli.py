"""Command line front end.

Every subcommand emits a Report: echoed inputs, results, and a list of
named checks. Exit status: 0 all checks pass, 2 a check failed, 64 usage
error, 65 domain error (the raising error class is printed).
"""

import argparse
import json
import sys
from fractions import Fraction

from .bundles import (EllipticPoint, ample_part_is_line, elliptic_origin,
                      generic_point, h0, h1, jump_h1,
                      pushforward_decomposition, xiao_structure)
from .characters import kernel_of_restriction, two_torsion_character_tables
from .errors import IrrfibError
from .intersection import (DivisorClass, IntersectionLattice, KernelCurve,
                           degree_vs_product_polarization,
                           derive_pen6_pairings, dot, kernel_dot,
                           kernel_dot_oracle, nef_violation_certificate,
                           pen6_fibres, pen6_lattice, serrano_canonical_pen6)
from .invariants import (NOT_ISOTRIVIAL, genus_bound_rank_one,
                         isotriviality_obstruction, isotrivial_examples,
                         nonisotrivial_examples, slope, unbounded_family)
from .lattice import sublattice_index
from .polarization import kernel_K_L, phi_two_torsion_data, polarization_type
from .report import Report, render
from .torus import (admissible_pairs, build_reference_surface, character_name,
                    classification_report, classify_origin_singularity,
                    classify_origin_singularity_oracle, moduli_type,
                    parse_character, reference_lattice_a, rf_pair)

EXAMPLE_IDS = ("pen-1", "pen-4", "pen-5", "pen-6",
               "k26-d2", "k5-3", "k6-4", "family-fn")

_KL_POINTS = (("0", "0", "0", "0"), ("0", "0", "0", "1/2"),
              ("0", "1/2", "0", "0"), ("0", "1/2", "0", "1/2"))
_EXTENDABLE_NAMES = sorted(("trivial", "chiA1", "chiA2", "chiA3", "chiA5",
                            "chiA1*chiA5", "chiA2*chiA5", "chiA3*chiA5"))
_NEW_NAMES = tuple("eps%d" % i for i in range(1, 9))
_IMAGE_NAMES = sorted(("trivial", "chiA1", "chiA2*chiA5", "chiA3*chiA5"))
_VERDICT_COUNTS = {"node": 1, "smooth_point": 12, "none": 50}
_MODULI_ROWS = {"Ia/none": 8, "Ia/smooth_point": 4, "Ib/node": 1,
                "Ib/none": 2, "II/none": 40, "II/smooth_point": 8}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        sys.exit(64)


def _display(chi):
    return character_name(chi) or ",".join(str(v) for v in chi.values)


def _parse_point(text):
    text = text.strip()
    if text == "0":
        return elliptic_origin()
    if text == "generic" or text.startswith("generic:"):
        return generic_point(text.partition(":")[2] or "p")
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError("point must be '0', 'generic[:name]' or 'a,b'")
    try:
        return EllipticPoint(tuple(Fraction(p) for p in parts))
    except (ValueError, ZeroDivisionError):
        raise UsageError("bad point coordinates: %r" % text)


def _parse_int_vector(text, length=None):
    try:
        v = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError("bad integer vector: %r" % text)
    if length is not None and len(v) != length:
        raise UsageError("expected %d comma-separated integers" % length)
    return v


def _parse_named_character(text, lattice):
    try:
        return parse_character(text, lattice)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_appendix(args):
    rep = Report("appendix", inputs={"corrupt": bool(args.corrupt)})
    s = build_reference_surface()
    e = s.embedding

    rep.check("sublattice index", 2, sublattice_index(e))
    t = polarization_type(s.form_A)
    rep.check("polarization type", [1, 2], [t.d1, t.d2])

    kl = kernel_K_L(s.form_A)
    rep.check("polarization kernel invariant factors", [2, 2],
              list(kl.invariant_factors))
    rep.check("polarization kernel points", [list(p) for p in _KL_POINTS],
              [[str(c) for c in x.coords] for x in kl.elements()])

    rep.check("restriction kernel", ["chiB1*chiB4", "trivial"],
              sorted(_display(c) for c in kernel_of_restriction(e, 2)))

    extendable, new = two_torsion_character_tables(e)
    expected_new = sorted(_NEW_NAMES)
    if args.corrupt:
        expected_new = expected_new[:-1] + ["eps8-corrupted"]
    rep.check("extendable character table", _EXTENDABLE_NAMES,
              sorted(_display(c) for c in extendable))
    rep.check("new character table", expected_new,
              sorted(_display(c) for c in new))

    kernel2, image2 = phi_two_torsion_data(s.form_A)
    rep.check("two-torsion image", _IMAGE_NAMES,
              sorted(_display(c) for c in image2))
    rep.check("two-torsion kernel points", [list(p) for p in _KL_POINTS],
              sorted([str(c) for c in x.coords] for x in kernel2))

    mismatches, counts, rows = [], {}, {}
    pairs = admissible_pairs(s)
    for Q, Qhalf in pairs:
        closed = classify_origin_singularity(s, Q, Qhalf)
        oracle = classify_origin_singularity_oracle(s, Q, Qhalf)
        if closed != oracle:
            mismatches.append({"Qhalf": _display(Qhalf),
                               "closed": closed, "oracle": oracle})
        counts[closed] = counts.get(closed, 0) + 1
        key = "%s/%s" % (moduli_type(Q, Qhalf, frozenset(image2)), closed)
        rows[key] = rows.get(key, 0) + 1
    rep.results["admissible_pairs"] = len(pairs)
    rep.check("admissible pair count", 63, len(pairs))
    rep.check("classification routes agree", [], mismatches)
    rep.check("classification verdict counts", _VERDICT_COUNTS, counts)
    rep.check("classification moduli rows", _MODULI_ROWS, rows)
    return rep


def _family_report(command, n):
    if n < 1:
        raise UsageError("--n must be a positive integer")
    rec = unbounded_family(n)
    rep = Report(command, inputs={"n": n})
    rep.results["record"] = rec
    rep.check("fibre genus", n * n + 2, rec.gF)
    rep.check("ample part rank", n * n + 1, rec.r)
    rep.check("slope", Fraction(4), slope(4, 1, 1, rec.gF))
    rep.check("xiao semistable rank", rec.r,
              xiao_structure(rec.gF, Fraction(4), 2, 1).semistable_rank)
    line, _ = ample_part_is_line(rec.decomposition)
    rep.check("ample part is a line bundle", False, line)
    return rep


def _pen6_checks(rep, record):
    lattice = pen6_lattice()
    for pair, value in derive_pen6_pairings().items():
        i, j = (lattice.basis_labels.index(x) for x in pair)
        rep.check("derived pairing %s.%s" % pair, lattice.gram[i][j], value)
    k = serrano_canonical_pen6(lattice)
    f1, f2 = pen6_fibres(lattice)
    y1 = lattice.basis_class("Y1")
    y2 = lattice.basis_class("Y2")
    rep.check("canonical self-intersection", 5, dot(k, k))
    rep.check("fibre self-intersections", [0, 0],
              [dot(f1, f1), dot(f2, f2)])
    rep.check("fibre product equals group order", 6, dot(f1, f2))
    rep.check("canonical against sections", [1, 1],
              [dot(k, y1), dot(k, y2)])
    rep.check("adjunction degree on fibres", [4, 4],
              [dot(k + f1, f1), dot(k + f2, f2)])
    rep.check("nef violation certificate", -2,
              nef_violation_certificate(k - f1, f2))
    rep.check("certificate forces rank 2", [2, 2],
              [f.r for f in record.fibrations])


def _pen5_checks(rep, record):
    s = slope(4, 1, 1, 3)
    rep.check("slope", Fraction(4), s)
    shape = xiao_structure(3, s, 2, 1)
    rep.check("xiao semistable rank", 2, shape.semistable_rank)
    rep.check("splitting forces rank 2", [2, 2],
              [f.r for f in record.fibrations])


def _bound_checks(rep, record):
    bound = genus_bound_rank_one(record.invariants.K2, record.invariants.chi)
    rep.results["rank_one_genus_bound"] = bound
    for i, f in enumerate(record.fibrations):
        if f.r == 1:
            rep.check("rank-1 genus bound holds (fibration %d)" % (i + 1),
                      True, f.gF <= bound)


def cmd_example(args):
    ex_id = args.id
    if ex_id == "family-fn":
        return _family_report("example family-fn", args.n)
    rep = Report("example %s" % ex_id, inputs={"id": ex_id})
    table = {e.id: e for e in isotrivial_examples()}
    table.update({e.id: e for e in nonisotrivial_examples()})
    record = table[ex_id]
    rep.results["record"] = record
    rep.check("chi", 1, record.invariants.chi)
    if ex_id == "pen-5":
        _pen5_checks(rep, record)
    if ex_id == "pen-6":
        _pen6_checks(rep, record)
    if ex_id in ("pen-1", "pen-4"):
        _bound_checks(rep, record)
    if ex_id == "k26-d2":
        verdict, inequality = isotriviality_obstruction(
            record.invariants.K2, record.invariants.chi, ample=True)
        rep.results["isotriviality_inequality"] = inequality
        rep.check("isotriviality obstruction", NOT_ISOTRIVIAL, verdict)
        if args.Qhalf or args.Q:
            rep.results["classification"] = _classified(args, rep)
    elif args.Qhalf or args.Q:
        raise UsageError("--Q/--Qhalf only apply to k26-d2")
    return rep


def _classified(args, rep):
    if not args.Qhalf:
        raise UsageError("--Qhalf is required when classifying")
    s = build_reference_surface()
    lattice = reference_lattice_a()
    qhalf = _parse_named_character(args.Qhalf, lattice)
    q = (_parse_named_character(args.Q, lattice) if args.Q
         else qhalf * qhalf)
    result = classification_report(s, q, qhalf)
    result["Q_name"] = _display(q)
    result["Qhalf_name"] = _display(qhalf)
    rep.check("classification routes agree", result["singularity"],
              result["singularity_oracle"])
    return result


def cmd_family(args):
    return _family_report("family-fn", args.n)


def cmd_slope(args):
    rep = Report("slope", inputs={"K2": args.k2, "chi": args.chi,
                                  "gC": args.gc, "gF": args.gf})
    rep.results["slope"] = slope(args.k2, args.chi, args.gc, args.gf)
    return rep


def cmd_bounds(args):
    ample = {"true": True, "false": False, None: None}[args.ample]
    rep = Report("bounds", inputs={"K2": args.k2, "chi": args.chi,
                                   "ample": ample})
    rep.results["rank_one_genus_bound"] = genus_bound_rank_one(
        args.k2, args.chi)
    verdict, inequality = isotriviality_obstruction(args.k2, args.chi, ample)
    rep.results["isotriviality"] = verdict
    rep.results["inequality"] = inequality
    return rep


def _load_lattice(fixture):
    if fixture in (None, "pen6"):
        return pen6_lattice()
    try:
        with open(fixture) as handle:
            data = json.load(handle)
        return IntersectionLattice(tuple(data["basis_labels"]),
                                   tuple(tuple(r) for r in data["gram"]))
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise UsageError("cannot load lattice fixture: %s" % exc)


def cmd_intersect(args):
    if args.pq and args.cls:
        raise UsageError("use either --pq pairs or --class vectors")
    if args.pq:
        if len(args.pq) != 2:
            raise UsageError("need exactly two --pq pairs")
        c1, c2 = (KernelCurve(*_parse_int_vector(t, 2)) for t in args.pq)
        rep = Report("intersect", inputs={"pq": [c1, c2], "m": args.m})
        det = c1.p * c2.q - c1.q * c2.p
        value = kernel_dot(c1, c2)
        rep.results["kernel_dot"] = value
        rep.results["degree_vs_product_polarization"] = [
            degree_vs_product_polarization(c1),
            degree_vs_product_polarization(c2)]
        if args.m is not None:
            count = kernel_dot_oracle(c1, c2, args.m)
            rep.results["oracle_count"] = count
            if det != 0 and args.m % abs(det) == 0:
                rep.check("oracle agreement", value, count)
        return rep
    if not args.cls or len(args.cls) != 2:
        raise UsageError("need exactly two --class vectors (or two --pq)")
    lattice = _load_lattice(args.fixture)
    a, b = (DivisorClass(lattice, _parse_int_vector(t, lattice.rank))
            for t in args.cls)
    rep = Report("intersect", inputs={"fixture": args.fixture or "pen6",
                                      "classes": [a, b]})
    rep.results["dot"] = dot(a, b)
    rep.results["nef_violation"] = nef_violation_certificate(a, b)
    return rep


def _bundle_spec(args):
    spec = {}
    if args.spec:
        text = args.spec
        try:
            if not text.lstrip().startswith("{"):
                with open(text) as handle:
                    text = handle.read()
            spec = json.loads(text)
        except (OSError, ValueError) as exc:
            raise UsageError("cannot load bundle spec: %s" % exc)
    g = spec.get("g", args.g)
    r = spec.get("r", args.r)
    if g is None or r is None:
        raise UsageError("need --g and --r (or a --spec with g and r)")
    p = _parse_point(str(spec.get("p", args.p)))
    torsion = [_parse_point(str(t))
               for t in spec.get("torsion", args.torsion or [])]
    return int(g), int(r), p, torsion


def cmd_bundle(args):
    g, r, p, torsion = _bundle_spec(args)
    decomposition = pushforward_decomposition(g, r, p, torsion)
    rep = Report("bundle %s" % args.action,
                 inputs={"g": g, "r": r, "p": p, "torsion": torsion})
    rep.results["decomposition"] = decomposition
    if args.action == "h0":
        rep.results["h0"] = h0(decomposition)
    elif args.action == "h1":
        rep.results["h1"] = h1(decomposition)
    elif args.action == "jump":
        if args.q is None:
            raise UsageError("jump needs --q")
        q = _parse_point(args.q)
        rep.inputs["q"] = q
        rep.results["jump_h1"] = jump_h1(decomposition, q)
    else:  # r-criterion
        line, witness = ample_part_is_line(decomposition)
        rep.results["ample_part_is_line"] = line
        rep.results["witness"] = witness
    return rep


def cmd_classify(args):
    s = build_reference_surface()
    if args.sweep:
        rep = Report("classify", inputs={"sweep": True})
        table, counts, rows, mismatches = [], {}, {}, []
        _, image2 = phi_two_torsion_data(s.form_A)
        for Q, Qhalf in admissible_pairs(s):
            closed = classify_origin_singularity(s, Q, Qhalf)
            oracle = classify_origin_singularity_oracle(s, Q, Qhalf)
            if closed != oracle:
                mismatches.append(_display(Qhalf))
            mtype = moduli_type(Q, Qhalf, frozenset(image2))
            counts[closed] = counts.get(closed, 0) + 1
            key = "%s/%s" % (mtype, closed)
            rows[key] = rows.get(key, 0) + 1
            table.append({"Qhalf": _display(Qhalf), "Q": _display(Q),
                          "singularity": closed,
                          "rf_pair": list(rf_pair(closed)),
                          "moduli_type": mtype})
        rep.results["pairs"] = table
        rep.results["verdict_counts"] = counts
        rep.results["moduli_rows"] = rows
        rep.check("classification routes agree", [], mismatches)
        rep.check("classification verdict counts", _VERDICT_COUNTS, counts)
        rep.check("classification moduli rows", _MODULI_ROWS, rows)
        return rep
    rep = Report("classify", inputs={"Q": args.Q, "Qhalf": args.Qhalf})
    rep.results.update(_classified(args, rep))
    return rep


def build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="emit the report as canonical JSON")
    shared.add_argument("--fixture", default=argparse.SUPPRESS,
                        help="path to a JSON lattice fixture "
                             "({basis_labels, gram}); default: pen6")

    parser = _Parser(prog="irrfib",
                     description="Exact invariants of polarized abelian "
                                 "surfaces and irrational fibrations.")
    parser.add_argument("--json", action="store_true", help=argparse.SUPPRESS)
    parser.add_argument("--fixture", help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("appendix", parents=[shared],
                       help="run the full reference-surface verification")
    p.add_argument("--corrupt", action="store_true",
                   help="self-test: corrupt one expected table and fail")
    p.set_defaults(handler=cmd_appendix)

    p = sub.add_parser("example", parents=[shared],
                       help="emit a database record with its checks")
    p.add_argument("id", choices=EXAMPLE_IDS)
    p.add_argument("--n", type=int, default=1,
                   help="family index (family-fn only)")
    p.add_argument("--Q", help="twist character name or vector (k26-d2)")
    p.add_argument("--Qhalf", help="square-root character (k26-d2)")
    p.set_defaults(handler=cmd_example)

    p = sub.add_parser("family-fn", parents=[shared],
                       help="the unbounded-rank family record")
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("slope", parents=[shared], help="fibration slope")
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--gc", type=int, required=True)
    p.add_argument("--gf", type=int, required=True)
    p.set_defaults(handler=cmd_slope)

    p = sub.add_parser("bounds", parents=[shared],
                       help="genus bound and isotriviality windows")
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--ample", choices=("true", "false"))
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("intersect", parents=[shared],
                       help="kernel-curve or divisor-class intersections")
    p.add_argument("--pq", action="append",
                   help="kernel curve 'p,q' (give twice)")
    p.add_argument("--m", type=int,
                   help="modulus for the counting oracle (with --pq)")
    p.add_argument("--class", dest="cls", action="append",
                   help="divisor class coefficients 'a,b,...' (give twice)")
    p.set_defaults(handler=cmd_intersect)

    p = sub.add_parser("bundle", parents=[shared],
                       help="pushforward decomposition queries")
    p.add_argument("action", choices=("h0", "h1", "jump", "r-criterion"))
    p.add_argument("--spec", help="JSON {g, r, p, torsion[]} inline or path")
    p.add_argument("--g", type=int, help="fibre genus")
    p.add_argument("--r", type=int, help="rank of the ample part")
    p.add_argument("--p", default="generic",
                   help="determinant point ('0', 'generic[:name]', 'a,b')")
    p.add_argument("--torsion", action="append",
                   help="torsion line-bundle point 'a,b' (repeatable)")
    p.add_argument("--q", help="twist point for the jump query")
    p.set_defaults(handler=cmd_bundle)

    p = sub.add_parser("classify", parents=[shared],
                       help="origin singularity for a twist pair")
    p.add_argument("--Q", help="twist character name or vector")
    p.add_argument("--Qhalf", help="square root character name or vector")
    p.add_argument("--sweep", action="store_true",
                   help="classify every admissible pair")
    p.set_defaults(handler=cmd_classify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    try:
        report = args.handler(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 64
    except IrrfibError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 65
    print(render(report, getattr(args, "json", False)))
    return 0 if report.passed else 2


if __name__ == "__main__":
    sys.exit(main())

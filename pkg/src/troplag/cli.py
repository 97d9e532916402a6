"""Command-line interface.

Commands: validate, topology, homology, audin, triangle, gen-family,
gen-visible, genus-bound, squeeze, render.  A file argument of '-' reads
the document from stdin, so generators pipe into checkers:

    troplag gen-family 2 | troplag topology -

Exit codes: 0 pass/success, 1 check failure, 2 input error.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .constructions import (
    genus_bound,
    squeeze_check,
    triangle_check,
    trop_family,
    visible_segment,
)
from .diagram import rectangle
from .errors import TroplagError
from .homology import (
    SweepDirection,
    audin_check,
    mod2_class,
    pontryagin_square,
    sweep_parity,
)
from .lattice import IntVec, RatPoint
from .render import render_document
from .textio import Document, ParseError, parse_document, serialize_document
from .topology import (
    EndKind,
    classify,
    classify_end,
    euler_breakdown,
    surface_name,
)
from .tropical import validate, vertex_multiplicity
from . import __version__

PASS, FAIL, INPUT_ERROR = 0, 1, 2


def _read_document(path: str) -> Document:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as err:
            raise TroplagError(f"cannot read {path}: {err}") from None
    return parse_document(text)


def _parse_rational(text: str) -> Fraction:
    import re
    if not re.fullmatch(r"-?\d+(/[1-9]\d*)?", text):
        raise TroplagError(
            f"expected an exact rational like 3 or 22/7, got {text!r}")
    return Fraction(text)


def _parse_pair(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise TroplagError(f"expected two comma-separated values, got {text!r}")
    return parts


# ---------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------

def _cmd_validate(args) -> int:
    doc = _read_document(args.file)
    print(f"diagram: {doc.diagram.name}; curves: {len(doc.curves)}")
    code = PASS
    for curve in doc.curves:
        report = validate(doc.diagram, curve)
        if report.passed:
            print(f"curve {curve.name}: valid")
        else:
            code = FAIL
            print(f"curve {curve.name}: INVALID")
            for line in report.lines():
                print(f"  - {line}")
    return code


def _topology_lines(doc, curve):
    report = validate(doc.diagram, curve)
    if not report.passed:
        lines = [f"curve {curve.name}: INVALID"]
        lines += [f"  - {line}" for line in report.lines()]
        return lines, FAIL
    multiplicities = sorted(
        vertex_multiplicity(curve, v.id) for v in curve.vertices)
    kinds = [classify_end(doc.diagram, e) for e in curve.ends]
    breakdown = euler_breakdown(doc.diagram, curve)
    sc = classify(doc.diagram, curve)

    lines = [f"curve {curve.name}: vertices={len(curve.vertices)} "
             f"edges={len(curve.edges)} ends={len(curve.ends)}"]
    counts = {kind: kinds.count(kind) for kind in EndKind}
    lines.append(f"curve {curve.name}: end kinds: "
                 f"disccap={counts[EndKind.DISC_CAP]} "
                 f"crosscap={counts[EndKind.CROSS_CAP]} "
                 f"collar={counts[EndKind.COLLAR]}")
    if multiplicities:
        grouped = []
        for m in sorted(set(multiplicities)):
            grouped.append(f"m={m} x{multiplicities.count(m)}")
        lines.append(f"curve {curve.name}: vertex multiplicities: "
                     + ", ".join(grouped))
    else:
        lines.append(f"curve {curve.name}: vertex multiplicities: none")
    lines.append(f"curve {curve.name}: double points surgered = "
                 f"{sc.double_points_surgered}")
    lines.append(f"curve {curve.name}: chi = {sc.euler_char} "
                 f"(vertices {breakdown.vertex_term:+d}, "
                 f"caps {breakdown.cap_term:+d}, "
                 f"surgeries {breakdown.surgery_term:+d})")
    name = surface_name(sc)
    tag = f" ({name})" if name else ""
    if sc.closed and not sc.orientable:
        sentence = (f"closed nonorientable surface, chi={sc.euler_char}, "
                    f"nonorientable genus k={sc.nonorientable_genus}{tag}")
    elif sc.closed:
        sentence = (f"closed orientable surface, chi={sc.euler_char}, "
                    f"genus g={sc.orientable_genus}{tag}")
    else:
        orientability = "orientable" if sc.orientable else "nonorientable"
        sentence = (f"{orientability} surface with boundary, "
                    f"chi={sc.euler_char}, "
                    f"boundary circles={sc.boundary_circles}{tag}")
    lines.append(f"curve {curve.name}: {sentence}")
    return lines, PASS


def _cmd_topology(args) -> int:
    doc = _read_document(args.file)
    code = PASS
    for curve in doc.curves:
        lines, curve_code = _topology_lines(doc, curve)
        code = max(code, curve_code)
        for line in lines:
            print(line)
    return code


def _cmd_homology(args) -> int:
    doc = _read_document(args.file)
    labels = doc.diagram.homology.basis_labels
    if labels:
        print("basis: " + ", ".join(labels))
    code = PASS
    for curve in doc.curves:
        report = validate(doc.diagram, curve)
        if not report.passed:
            print(f"curve {curve.name}: INVALID")
            for line in report.lines():
                print(f"  - {line}")
            code = FAIL
            continue
        horizontal = sweep_parity(doc.diagram, curve, SweepDirection.HORIZONTAL)
        vertical = sweep_parity(doc.diagram, curve, SweepDirection.VERTICAL)
        print(f"curve {curve.name}: horizontal sweep parity = "
              f"{horizontal.parity} (witness y = "
              f"{horizontal.witness_line_coordinate})")
        print(f"curve {curve.name}: vertical sweep parity = "
              f"{vertical.parity} (witness x = "
              f"{vertical.witness_line_coordinate})")
        cls = mod2_class(doc.diagram, curve)
        print(f"curve {curve.name}: mod2 class = {cls} = {cls.label_sum()}")
    return code


def _cmd_audin(args) -> int:
    doc = _read_document(args.file)
    override = None
    if args.integral_class is not None:
        override = tuple(int(part) for part in args.integral_class.split(","))
    code = PASS
    for curve in doc.curves:
        report = validate(doc.diagram, curve)
        if not report.passed:
            print(f"curve {curve.name}: INVALID")
            code = FAIL
            continue
        if override is not None:
            lift = override
            print(f"curve {curve.name}: using supplied integral class "
                  f"({','.join(str(c) for c in lift)})")
        else:
            cls = mod2_class(doc.diagram, curve)
            lift = cls.coefficients
            print(f"curve {curve.name}: mod2 class = {cls} = "
                  f"{cls.label_sum()}")
        p2 = pontryagin_square(doc.diagram.homology, lift)
        sc = classify(doc.diagram, curve)
        ok = audin_check(p2, sc.euler_char)
        verdict = "PASS" if ok else "FAIL"
        print(f"curve {curve.name}: P2 = {p2}, chi = {sc.euler_char}; "
              f"residues mod 4: {p2} vs {sc.euler_char % 4}: {verdict}")
        if not ok:
            code = FAIL
    return code


def _cmd_triangle(args) -> int:
    a = _parse_rational(args.a)
    b = _parse_rational(args.b)
    c = _parse_rational(args.c)
    result = triangle_check(a, b, c)
    print(f"triangle inequalities for a={a}, b={b}, c={c}:")
    for label, lhs, rhs in (("a < b+c", a, b + c), ("b < c+a", b, c + a),
                            ("c < a+b", c, a + b)):
        status = "satisfied" if lhs < rhs else "VIOLATED"
        print(f"  {label}: {lhs} < {rhs}: {status}")
    if result.satisfied:
        print("satisfied: all three strict inequalities hold")
        return PASS
    print("violated: " + ", ".join(result.violated))
    return FAIL


def _cmd_gen_family(args) -> int:
    instance = trop_family(args.ell)
    doc = Document(instance.diagram, (instance.curve,))
    sys.stdout.write(serialize_document(doc))
    return PASS


def _cmd_gen_visible(args) -> int:
    width = _parse_rational(args.width)
    height = _parse_rational(args.height)
    diagram = rectangle(width, height)
    dx, dy = _parse_pair(args.direction)
    direction = IntVec(int(dx), int(dy))
    if args.anchor is None:
        anchor = RatPoint(width / 2, height / 2)
    else:
        ax, ay = _parse_pair(args.anchor)
        anchor = RatPoint(_parse_rational(ax), _parse_rational(ay))
    curve = visible_segment(diagram, direction, anchor)
    sys.stdout.write(serialize_document(Document(diagram, (curve,))))
    return PASS


def _cmd_genus_bound(args) -> int:
    lam = _parse_rational(args.lam)
    bound = genus_bound(lam, threshold=args.threshold)
    if args.threshold != "statement":
        print(f"threshold convention: {args.threshold}")
    if bound.witness_kind == "klein-bottle":
        print(f"lambda = {lam}: nonorientable genus bound k = {bound.k}, "
              "witness = visible Klein bottle (slope-1/2 segment)")
    else:
        width = 10 * bound.ell + 2
        print(f"lambda = {lam}: nonorientable genus bound k = {bound.k}, "
              f"witness = tropical family (ell = {bound.ell}) in "
              f"[0,{width}]x[0,3]")
    return PASS


def _cmd_squeeze(args) -> int:
    length = _parse_rational(args.interval_length)
    result = squeeze_check(length)
    if result.exists:
        left = result.witness.ends[1].terminal.landing
        right = result.witness.ends[0].terminal.landing
        print(f"interval length = {length} > 1: visible Lagrangian Klein "
              "bottle exists")
        print(f"witness: segment from {left} to {right} with direction "
              f"(2,1) in rectangle [0,2]x[0,{length}]")
        return PASS
    print(f"interval length = {length} <= 1: {result.note}")
    return FAIL


def _cmd_render(args) -> int:
    doc = _read_document(args.file)
    svg = render_document(doc)
    if args.output == "-":
        sys.stdout.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(svg)
        print(f"wrote {args.output} ({len(svg.encode('utf-8'))} bytes)")
    return PASS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="troplag",
        description="Exact tropical curves in almost toric base diagrams: "
                    "validation, surface topology, mod-2 homology, "
                    "thresholds and SVG rendering.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("validate", help="validate every curve in a document")
    p.add_argument("file", help="document path, or - for stdin")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("topology",
                       help="surface class of every curve in a document")
    p.add_argument("file", help="document path, or - for stdin")
    p.set_defaults(func=_cmd_topology)

    p = sub.add_parser("homology",
                       help="sweep parities and mod-2 class (rectangles)")
    p.add_argument("file", help="document path, or - for stdin")
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("audin",
                       help="check P2(class) = chi mod 4 for each curve")
    p.add_argument("file", help="document path, or - for stdin")
    p.add_argument("--class", dest="integral_class", default=None,
                   metavar="C1,C2,...",
                   help="integral lift to use when the diagram has no "
                        "sweep classes (e.g. 1,1,1)")
    p.set_defaults(func=_cmd_audin)

    p = sub.add_parser("triangle",
                       help="check the strict triangle inequalities")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("gen-family",
                       help="emit the genus 20L+2 family document")
    p.add_argument("ell", type=int, metavar="L")
    p.set_defaults(func=_cmd_gen_family)

    p = sub.add_parser("gen-visible",
                       help="emit a visible-segment document in a rectangle")
    p.add_argument("width")
    p.add_argument("height")
    p.add_argument("--direction", default="2,1", metavar="DX,DY")
    p.add_argument("--anchor", default=None, metavar="X,Y",
                   help="defaults to the rectangle centre")
    p.set_defaults(func=_cmd_gen_visible)

    p = sub.add_parser("genus-bound",
                       help="nonorientable genus bound at a given width")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("--threshold", choices=("statement", "proof"),
                   default="statement")
    p.set_defaults(func=_cmd_genus_bound)

    p = sub.add_parser("squeeze",
                       help="visible Klein bottle existence over a cylinder")
    p.add_argument("interval_length", metavar="I")
    p.set_defaults(func=_cmd_squeeze)

    p = sub.add_parser("render", help="render a document to SVG")
    p.add_argument("file", help="document path, or - for stdin")
    p.add_argument("-o", "--output", required=True, metavar="FILE.svg",
                   help="output path, or - for stdout")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 on --help/--version.
        return INPUT_ERROR if exc.code not in (0, None) else PASS
    if not getattr(args, "func", None):
        parser.print_usage()
        return INPUT_ERROR
    try:
        return args.func(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT_ERROR
    except TroplagError as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT_ERROR
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT_ERROR


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

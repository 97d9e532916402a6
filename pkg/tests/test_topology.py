import random
from collections import Counter
from fractions import Fraction

import pytest

from troplag import (
    BoundaryTerminal,
    CurveEnd,
    EmptyCurve,
    EndKind,
    IntVec,
    MalformedPresentation,
    Piece,
    PieceKind,
    SurfaceClass,
    SurfacePresentation,
    TropicalCurve,
    UnsupportedEndMultiplicity,
    build_presentation,
    classify,
    classify_end,
    euler_breakdown,
    euler_characteristic,
    oracle_classify,
    pt,
    rectangle,
    rp2_curve,
    surface_name,
    transformed,
    trop_family,
    validate,
    visible_segment,
)
from conftest import load_document, random_curve, random_unimodular_map

F = Fraction


@pytest.fixture(scope="module")
def fig1_left():
    return rp2_curve(1, 1, F(4, 3), 4)


@pytest.fixture(scope="module")
def klein():
    diagram = rectangle(4, F(5, 2))
    return diagram, visible_segment(diagram, IntVec(2, 1), pt(2, F(5, 4)))


# -- classify_end -------------------------------------------------------

def test_node_terminal_is_disc_cap(fig1_left):
    diagram, curve = fig1_left
    cap = next(e for e in curve.ends if e.id == "cap_a")
    assert classify_end(diagram, cap) is EndKind.DISC_CAP


def test_mu2_is_cross_cap(klein):
    diagram, curve = klein
    assert [classify_end(diagram, e) for e in curve.ends] == [
        EndKind.CROSS_CAP, EndKind.CROSS_CAP]


def test_mu1_is_collar():
    doc = load_document("fig1_right.trop")
    curve = doc.curves[0]
    out = next(e for e in curve.ends if e.id == "out")
    assert classify_end(doc.diagram, out) is EndKind.COLLAR


def test_mu3_rejected():
    diagram = rectangle(9, 9)
    curve = TropicalCurve((), (), [
        CurveEnd("a", pt(3, 3), IntVec(3, 1), BoundaryTerminal(pt(9, 5))),
        CurveEnd("b", pt(3, 3), IntVec(-3, -1), BoundaryTerminal(pt(0, 2)))])
    assert validate(diagram, curve).passed
    with pytest.raises(UnsupportedEndMultiplicity):
        classify_end(diagram, curve.ends[0])


# -- euler characteristic ------------------------------------------------

def test_chi_klein_segment(klein):
    assert euler_characteristic(*klein) == 0


def test_chi_rp2(fig1_left):
    diagram, curve = fig1_left
    assert euler_characteristic(diagram, curve) == 1
    breakdown = euler_breakdown(diagram, curve)
    assert (breakdown.vertex_term, breakdown.cap_term,
            breakdown.surgery_term) == (-1, 2, 0)


def test_chi_family():
    instance = trop_family(1)
    assert euler_characteristic(instance.diagram, instance.curve) == -20
    breakdown = euler_breakdown(instance.diagram, instance.curve)
    assert (breakdown.vertex_term, breakdown.cap_term,
            breakdown.surgery_term) == (-4, 0, -16)


def test_chi_empty_curve_rejected():
    with pytest.raises(EmptyCurve):
        euler_characteristic(rectangle(2, 2), TropicalCurve(name="empty"))


# -- classify ------------------------------------------------------------

def test_classify_klein(klein):
    sc = classify(*klein)
    assert sc == SurfaceClass(closed=True, orientable=False, euler_char=0,
                              nonorientable_genus=2, orientable_genus=None,
                              boundary_circles=0, double_points_surgered=0)
    assert surface_name(sc) == "Klein bottle"


def test_classify_disc():
    doc = load_document("fig1_right.trop")
    sc = classify(doc.diagram, doc.curves[0])
    assert (sc.closed, sc.orientable, sc.euler_char, sc.boundary_circles) \
        == (False, True, 1, 1)
    assert sc.nonorientable_genus is None and sc.orientable_genus is None
    assert surface_name(sc) == "disc"


def test_classify_family_two_blocks():
    instance = trop_family(2)
    sc = classify(instance.diagram, instance.curve)
    assert sc.euler_char == -40
    assert sc.nonorientable_genus == 42
    assert sc.double_points_surgered == 16
    assert sc == instance.expected


def test_oracle_two_discs_plus_annulus_is_sphere():
    presentation = SurfacePresentation(
        (Piece(PieceKind.ANNULUS, ("l", "r")), Piece(PieceKind.DISC, ("a",)),
         Piece(PieceKind.DISC, ("b",))), (("l", "a"), ("r", "b")), 0)
    sc = oracle_classify(presentation)
    assert (sc.closed, sc.orientable, sc.euler_char, sc.orientable_genus) \
        == (True, True, 2, 0)


def test_chi_parity_invariant_on_bundled():
    docs = ["fig1_left.trop", "fig1_right.trop", "fig2_klein.trop",
            "fig3_family.trop", "fig4_squeeze.trop"]
    for name in docs:
        doc = load_document(name)
        for curve in doc.curves:
            chi = euler_characteristic(doc.diagram, curve)
            disccaps = sum(1 for e in curve.ends
                           if classify_end(doc.diagram, e) is EndKind.DISC_CAP)
            assert (chi - len(curve.vertices) - disccaps) % 2 == 0


# -- presentations -------------------------------------------------------

def test_presentation_klein(klein):
    presentation = build_presentation(*klein)
    kinds = Counter(p.kind for p in presentation.pieces)
    assert kinds == {PieceKind.ANNULUS: 1, PieceKind.MOBIUS: 2}
    assert len(presentation.gluings) == 2
    assert presentation.handles == 0


def test_presentation_rp2(fig1_left):
    presentation = build_presentation(*fig1_left)
    kinds = Counter(p.kind for p in presentation.pieces)
    assert kinds == {PieceKind.PANTS: 1, PieceKind.DISC: 2,
                     PieceKind.MOBIUS: 1}
    assert len(presentation.gluings) == 3


def test_presentation_family():
    instance = trop_family(1)
    presentation = build_presentation(instance.diagram, instance.curve)
    kinds = Counter(p.kind for p in presentation.pieces)
    assert kinds == {PieceKind.PANTS: 4, PieceKind.ANNULUS: 3,
                     PieceKind.MOBIUS: 6}
    assert presentation.handles == 8
    assert len(presentation.gluings) == 2 * 3 + 6


# -- oracle --------------------------------------------------------------

def test_oracle_disc_plus_mobius_is_rp2():
    sc = oracle_classify(SurfacePresentation(
        (Piece(PieceKind.DISC, ("a",)), Piece(PieceKind.MOBIUS, ("b",))),
        (("a", "b"),), 0))
    assert (sc.closed, sc.orientable, sc.euler_char,
            sc.nonorientable_genus) == (True, False, 1, 1)


def test_oracle_two_mobius_plus_annulus_is_klein():
    sc = oracle_classify(SurfacePresentation(
        (Piece(PieceKind.MOBIUS, ("a",)), Piece(PieceKind.MOBIUS, ("b",)),
         Piece(PieceKind.ANNULUS, ("l", "r"))),
        (("a", "l"), ("b", "r")), 0))
    assert (sc.closed, sc.euler_char, sc.nonorientable_genus) == (True, 0, 2)


def test_oracle_rejects_double_gluing():
    with pytest.raises(MalformedPresentation):
        oracle_classify(SurfacePresentation(
            (Piece(PieceKind.DISC, ("a",)), Piece(PieceKind.MOBIUS, ("b",))),
            (("a", "b"), ("a", "b")), 0))


def test_oracle_rejects_disconnected():
    with pytest.raises(MalformedPresentation):
        oracle_classify(SurfacePresentation(
            (Piece(PieceKind.DISC, ("a",)), Piece(PieceKind.DISC, ("b",)),
             Piece(PieceKind.DISC, ("c",)), Piece(PieceKind.DISC, ("d",))),
            (("a", "b"), ("c", "d")), 0))


def test_engine_equals_oracle_on_bundled():
    docs = ["fig1_left.trop", "fig1_right.trop", "fig2_klein.trop",
            "fig3_family.trop", "fig4_squeeze.trop"]
    for name in docs:
        doc = load_document(name)
        for curve in doc.curves:
            sc = classify(doc.diagram, curve)
            assert oracle_classify(build_presentation(doc.diagram, curve)) == sc


def test_engine_equals_oracle_on_random_curves():
    rng = random.Random(424242)
    for _ in range(60):
        diagram, curve = random_curve(rng)
        sc = classify(diagram, curve)
        assert oracle_classify(build_presentation(diagram, curve)) == sc


def test_classify_invariant_under_unimodular_maps(fig1_left):
    rng = random.Random(20250809)
    diagram, curve = fig1_left
    expected = classify(diagram, curve)
    for _ in range(20):
        m = random_unimodular_map(rng)
        d2, c2 = transformed(diagram, curve, m)
        assert validate(d2, c2).passed
        assert classify(d2, c2) == expected

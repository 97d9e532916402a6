"""Generators for the bundled Lagrangian constructions and the existence
thresholds that govern them.

* visible_segment: the straight-segment (vertexless) curves; a slope-1/2
  segment spanning a rectangle between its vertical edges gives a Klein
  bottle (both ends have mu = 2).
* rp2_curve: the one-vertex curve in the triple blow-up triangle whose
  surface is a projective plane exactly when the strict triangle
  inequalities a < b+c, b < c+a, c < a+b hold.
* trop_family: the repeating pattern of multiplicity-5 vertices whose
  surgered Lagrangian has nonorientable genus 20*ell + 2 in the rectangle
  [0, 10*ell+2] x [0, 3].
* genus_bound / klein_threshold / squeeze_check: the width thresholds for
  the constructions above, all strict.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TroplagError
from .diagram import BaseDiagram, LocationKind, UnsupportedDiagram, rectangle, x_abc
from .lattice import IntVec, RatPoint, _as_fraction, ray_segment_hit
from .topology import SurfaceClass
from .tropical import (
    BoundaryTerminal,
    CurveEnd,
    InternalEdge,
    InvalidCurve,
    NodeTerminal,
    TropicalCurve,
    TropicalVertex,
    validate,
)


class DoesNotFit(TroplagError):
    """The requested segment does not fit in the diagram."""


class DegenerateConstruction(TroplagError):
    """The construction hits a corner or boundary exactly; no surface is
    assigned."""


class InvalidInput(TroplagError):
    """Parameters outside the stated preconditions."""


#: Integral lift of the mod-2 class of the triple blow-up projective plane
#: (the sum of the three exceptional classes E1 + E2 + E3).
RP2_INTEGRAL_CLASS = (1, 1, 1)

#: Minimal nonorientable genus in the trivial mod-2 class, when the
#: symplectic form pairs positively with the first Chern class.  A known
#: classification fact, recorded as a documented constant rather than
#: computed: a six-cross-cap surface exists in a ball, and no smaller genus
#: (in particular no nullhomologous Klein bottle) can occur.
NULL_CLASS_MIN_GENUS = 6


def visible_segment(diagram: BaseDiagram, direction: IntVec,
                    anchor: RatPoint) -> TropicalCurve:
    """The vertexless curve over the full line through anchor.

    The line must cross the rectangle from its left to its right edge,
    meeting both in their interiors; it exits corner-free.  The result is a
    Klein bottle exactly when both ends have mu = 2.
    """
    if not diagram.is_rectangle or diagram.nodes:
        raise UnsupportedDiagram(
            "visible segments are constructed in node-free rectangles")
    if direction.is_zero:
        raise InvalidInput("direction must be nonzero")
    u = direction.primitive()
    if u.x < 0:
        u = -u
    if u.x == 0:
        raise DoesNotFit("a vertical line exits through the horizontal "
                         "edges, not the two vertical ones")
    if diagram.contains(anchor).kind is not LocationKind.INTERIOR:
        raise DoesNotFit(f"anchor {anchor} is not strictly inside")
    x0, y0, x1, y1 = diagram.bounds()
    slope = Fraction(u.y, u.x)
    y_left = anchor.y + (x0 - anchor.x) * slope
    y_right = anchor.y + (x1 - anchor.x) * slope
    for y_exit in (y_left, y_right):
        if y_exit in (y0, y1):
            raise DoesNotFit("the line exits through a corner")
        if not y0 < y_exit < y1:
            raise DoesNotFit("the line exits through a horizontal edge")
    left = RatPoint(x0, y_left)
    right = RatPoint(x1, y_right)
    ends = (
        CurveEnd("plus", anchor, u, BoundaryTerminal(right)),
        CurveEnd("minus", anchor, -u, BoundaryTerminal(left)),
    )
    return TropicalCurve((), (), ends, name="visible")


def klein_threshold(width, height) -> bool:
    """Whether a slope-1/2 segment spanning the width fits with both ends
    in the interiors of the vertical edges: strictly, height > width/2."""
    width = _as_fraction(width)
    height = _as_fraction(height)
    if width <= 0 or height <= 0:
        raise InvalidInput("rectangle sides must be positive")
    return height > width / 2


@dataclass(frozen=True)
class TriangleResult:
    satisfied: bool
    violated: tuple[str, ...]

    def __str__(self):
        if self.satisfied:
            return "satisfied"
        return "violated: " + ", ".join(self.violated)


def triangle_check(a, b, c) -> TriangleResult:
    """The strict triangle inequalities on the three blow-up sizes;
    equality counts as a violation."""
    a = _as_fraction(a)
    b = _as_fraction(b)
    c = _as_fraction(c)
    if a <= 0 or b <= 0 or c <= 0:
        raise InvalidInput("blow-up sizes must be positive")
    violated = []
    if not a < b + c:
        violated.append("a < b+c")
    if not b < c + a:
        violated.append("b < c+a")
    if not c < a + b:
        violated.append("c < a+b")
    return TriangleResult(not violated, tuple(violated))


def rp2_curve(a, b, c, s):
    """The one-vertex curve in x_abc(a, b, c, s): vertex at (a, b), one end
    up to node_a, one end right to node_b, and a third end in direction
    (-1,-1) continued to its first boundary hit.

    Returns (diagram, curve).  Raises DegenerateConstruction if the third
    end hits a corner or the vertex degenerates onto the boundary, and
    InvalidCurve if the configuration fails validation (e.g. the vertex
    falls outside the polygon).  When the triangle inequalities hold
    strictly the third end lands on the chopped-corner edge with mu = 2 and
    the surface is a projective plane; when one is strictly violated it
    lands on a leg with mu = 1 and the surface is a disc.
    """
    diagram = x_abc(a, b, c, s)
    a = _as_fraction(a)
    b = _as_fraction(b)
    vertex_pos = RatPoint(a, b)
    location = diagram.contains(vertex_pos)
    if location.kind in (LocationKind.ON_BOUNDARY_EDGE, LocationKind.ON_CORNER):
        raise DegenerateConstruction(
            f"vertex {vertex_pos} lies on the boundary (c = a + b)")

    down = IntVec(-1, -1)
    hits = []
    for edge in diagram.boundary_edges:
        hit = ray_segment_hit(vertex_pos, down, edge.start, edge.end)
        if hit is not None:
            hits.append(hit)
    if location.kind is LocationKind.INTERIOR and hits:
        t, landing = min(hits, key=lambda h: h[0])
        if any(landing == v for v in diagram.polygon_vertices):
            raise DegenerateConstruction(
                f"the (-1,-1) end hits the corner {landing} exactly "
                "(|a - b| = c)")
    else:
        # Vertex outside: let validation report it on a nominal landing.
        landing = RatPoint(Fraction(0), b - a)

    curve = TropicalCurve(
        vertices=(TropicalVertex("v", vertex_pos),),
        edges=(),
        ends=(
            CurveEnd("cap_a", "v", IntVec(0, 1), NodeTerminal(0)),
            CurveEnd("cap_b", "v", IntVec(1, 0), NodeTerminal(1)),
            CurveEnd("xcap", "v", down, BoundaryTerminal(landing)),
        ),
        name="rp2")
    report = validate(diagram, curve)
    if not report.passed:
        raise InvalidCurve(f"rp2 construction is invalid: {report}")
    return diagram, curve


@dataclass(frozen=True)
class FamilyInstance:
    ell: int
    diagram: BaseDiagram
    curve: TropicalCurve
    expected: SurfaceClass


def trop_family(ell: int) -> FamilyInstance:
    """The genus 20*ell + 2 family in the rectangle [0, 10*ell+2] x [0, 3].

    Block j (j = 0..ell-1) has vertices at (10j+2, 1), (10j+5, 2),
    (10j+7, 1), (10j+10, 2), chained by edges of directions (3,1) and
    (2,-1); consecutive blocks are chained by a (2,-1) edge.  Every vertex
    has multiplicity 5 (two double points).  The 4*ell + 2 ends all land
    with mu = 2: one (-2,1) end on the left edge at height 2, one (2,-1)
    end on the right edge at height 1, and (-1,-2) / (1,2) ends to the
    bottom and top.  The down-end from (10j+7, 1) lands at x = 10j + 13/2,
    as balancing forces.
    """
    if not isinstance(ell, int) or ell < 1:
        raise InvalidInput(f"ell must be a positive integer, got {ell!r}")
    width = 10 * ell + 2
    diagram = rectangle(width, 3)
    vertices = []
    edges = []
    ends = []
    half = Fraction(1, 2)
    for j in range(ell):
        base = 10 * j
        vertices += [
            TropicalVertex(f"a{j}", RatPoint(base + 2, 1)),
            TropicalVertex(f"b{j}", RatPoint(base + 5, 2)),
            TropicalVertex(f"c{j}", RatPoint(base + 7, 1)),
            TropicalVertex(f"d{j}", RatPoint(base + 10, 2)),
        ]
        edges += [
            InternalEdge(f"ab{j}", f"a{j}", f"b{j}", IntVec(3, 1)),
            InternalEdge(f"bc{j}", f"b{j}", f"c{j}", IntVec(2, -1)),
            InternalEdge(f"cd{j}", f"c{j}", f"d{j}", IntVec(3, 1)),
        ]
        if j + 1 < ell:
            edges.append(InternalEdge(f"da{j}", f"d{j}", f"a{j + 1}",
                                      IntVec(2, -1)))
        ends += [
            CurveEnd(f"down_a{j}", f"a{j}", IntVec(-1, -2),
                     BoundaryTerminal(RatPoint(base + 2 - half, 0))),
            CurveEnd(f"up_b{j}", f"b{j}", IntVec(1, 2),
                     BoundaryTerminal(RatPoint(base + 5 + half, 3))),
            CurveEnd(f"down_c{j}", f"c{j}", IntVec(-1, -2),
                     BoundaryTerminal(RatPoint(base + 7 - half, 0))),
            CurveEnd(f"up_d{j}", f"d{j}", IntVec(1, 2),
                     BoundaryTerminal(RatPoint(base + 10 + half, 3))),
        ]
    ends.append(CurveEnd("left", "a0", IntVec(-2, 1),
                         BoundaryTerminal(RatPoint(0, 2))))
    ends.append(CurveEnd("right", f"d{ell - 1}", IntVec(2, -1),
                         BoundaryTerminal(RatPoint(width, 1))))
    curve = TropicalCurve(vertices, edges, ends, name=f"family_ell{ell}")
    expected = SurfaceClass(
        closed=True, orientable=False, euler_char=-20 * ell,
        nonorientable_genus=20 * ell + 2, orientable_genus=None,
        boundary_circles=0, double_points_surgered=8 * ell)
    return FamilyInstance(ell, diagram, curve, expected)


@dataclass(frozen=True)
class GenusBound:
    """An upper bound k for the nonorientable genus, with its witness."""

    k: int
    witness_kind: str          # "klein-bottle" or "family"
    ell: int | None = None

    def __str__(self):
        if self.witness_kind == "klein-bottle":
            return f"k = {self.k}, witness: visible Klein bottle"
        return f"k = {self.k}, witness: family (ell = {self.ell})"


def genus_bound(lam, threshold: str = "statement") -> GenusBound:
    """Genus bound at width parameter lambda, all thresholds strict.

    lambda < 2 admits the visible Klein bottle (k = 2); otherwise the
    smallest family index ell with lambda below the width threshold gives
    k = 20*ell + 2.  Two threshold conventions are in circulation and both
    are exposed: "statement" admits lambda < 10*ell + 2 (the width of the
    family's rectangle), "proof" the more conservative lambda < 10*ell + 1.
    """
    lam = _as_fraction(lam)
    if lam <= 0:
        raise InvalidInput("lambda must be positive")
    if threshold not in ("statement", "proof"):
        raise InvalidInput(f"unknown threshold convention {threshold!r}")
    if lam < 2:
        return GenusBound(2, "klein-bottle")
    offset = 2 if threshold == "statement" else 1
    ell = max(1, (lam - offset) // 10 + 1)
    return GenusBound(20 * ell + 2, "family", ell)


@dataclass(frozen=True)
class SqueezeResult:
    exists: bool
    interval_length: Fraction
    diagram: BaseDiagram | None
    witness: TropicalCurve | None
    note: str


def squeeze_check(interval_length) -> SqueezeResult:
    """Existence of a visible Lagrangian Klein bottle over the cylinder of
    the given interval length (sphere area fixed at 2).

    Exists strictly above length 1, witnessed by the centred slope-1/2
    segment in the rectangle [0,2] x [0,length].  At 1 and below no visible
    construction exists, and in that range any embedded Lagrangian Klein
    bottle in the nontrivial class is homologically inessential (its
    rational first homology maps to zero), so no essential representative
    can exist by any construction.
    """
    length = _as_fraction(interval_length)
    if length <= 0:
        raise InvalidInput("interval length must be positive")
    if length > 1:
        diagram = rectangle(2, length)
        anchor = RatPoint(Fraction(1), length / 2)
        curve = visible_segment(diagram, IntVec(2, 1), anchor)
        return SqueezeResult(
            True, length, diagram, curve,
            "visible Klein bottle over the centred slope-1/2 segment")
    return SqueezeResult(
        False, length, None, None,
        "no visible Klein bottle: a slope-1/2 segment does not fit; in "
        "this range any Lagrangian Klein bottle in the nontrivial class "
        "is homologically inessential")

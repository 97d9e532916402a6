"""Almost toric base diagrams.

A base diagram is a strictly convex polygon together with interior
focus-focus nodes, each carrying a straight cut running from the node to the
boundary, plus a description of the mod-2 homology of the ambient
4-manifold (basis labels and intersection form).  Two constructors cover
the spaces used throughout the package: the toric rectangle (a product of
two spheres) and the triple blow-up triangle with one toric corner chop and
two non-toric nodes.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import TroplagError
from .lattice import (
    IntVec,
    RatPoint,
    UnimodularAffineMap,
    _as_fraction,
    on_open_segment,
    orientation,
    ray_segment_hit,
    segment_contact,
)


class InvalidDiagram(TroplagError):
    """A diagram constructor was given inconsistent data."""


class UnsupportedDiagram(TroplagError):
    """The requested operation is only defined for a narrower diagram class."""


class LocationKind(Enum):
    INTERIOR = "interior"
    ON_BOUNDARY_EDGE = "on-boundary-edge"
    ON_CORNER = "on-corner"
    OUTSIDE = "outside"
    ON_NODE = "on-node"
    ON_CUT = "on-cut"


@dataclass(frozen=True)
class PointLocation:
    """Where a point sits relative to a diagram; index names the edge, corner,
    node or cut when applicable."""

    kind: LocationKind
    index: int | None = None

    def __str__(self) -> str:
        if self.index is None:
            return self.kind.value
        return f"{self.kind.value}[{self.index}]"


@dataclass(frozen=True)
class BoundaryEdge:
    """One edge of the polygon, oriented counterclockwise.

    direction is primitive and points from start to end; affine_length is
    the rational t with end - start == t * direction (the lattice length).
    """

    start: RatPoint
    end: RatPoint
    direction: IntVec
    affine_length: Fraction


@dataclass(frozen=True)
class Node:
    """A focus-focus node with the primitive direction of its cut.

    The cut runs from the node position along cut_direction until it leaves
    the polygon through the interior of a boundary edge.
    """

    position: RatPoint
    cut_direction: IntVec

    def __post_init__(self):
        if not self.cut_direction.is_primitive:
            raise InvalidDiagram(
                f"cut direction {self.cut_direction} is not primitive")


@dataclass(frozen=True)
class HomologyModel:
    """Mod-2 homology bookkeeping for the ambient space.

    basis_labels name a basis of H_2(X; Z/2); intersection_form is the
    symmetric integer pairing in that basis.  The two sweep-class vectors,
    present for rectangle diagrams only, give the classes of the sphere over
    a horizontal and over a vertical segment.
    """

    basis_labels: tuple[str, ...]
    intersection_form: tuple[tuple[int, ...], ...]
    class_of_horizontal_sweep: tuple[int, ...] | None = None
    class_of_vertical_sweep: tuple[int, ...] | None = None

    def __post_init__(self):
        n = len(self.basis_labels)
        if len(self.intersection_form) != n or any(
                len(row) != n for row in self.intersection_form):
            raise InvalidDiagram("intersection form must be square and match "
                                 "the number of basis labels")
        for i in range(n):
            for j in range(n):
                if self.intersection_form[i][j] != self.intersection_form[j][i]:
                    raise InvalidDiagram("intersection form must be symmetric")
        for vec in (self.class_of_horizontal_sweep,
                    self.class_of_vertical_sweep):
            if vec is not None and len(vec) != n:
                raise InvalidDiagram("sweep class vector has wrong length")

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    def pairing(self, u, v) -> int:
        if len(u) != self.rank or len(v) != self.rank:
            raise InvalidDiagram("class vector has wrong length")
        return sum(u[i] * self.intersection_form[i][j] * v[j]
                   for i in range(self.rank) for j in range(self.rank))


_EMPTY_HOMOLOGY = HomologyModel((), ())


class BaseDiagram:
    """A strictly convex polygon with focus-focus nodes and cuts.

    polygon_vertices are counterclockwise.  Boundary edges are derived from
    consecutive vertex pairs; cut segments are computed by shooting each
    node's cut ray to the boundary.  Construction validates convexity, node
    interiority and cut disjointness, raising InvalidDiagram with the
    violated constraint named.
    """

    def __init__(self, polygon_vertices, nodes=(), homology=_EMPTY_HOMOLOGY,
                 name="polygon", kind="polygon", params=None):
        vertices = tuple(polygon_vertices)
        if len(vertices) < 3:
            raise InvalidDiagram("a polygon needs at least three vertices")
        if len(set((v.x, v.y) for v in vertices)) != len(vertices):
            raise InvalidDiagram("polygon vertices must be distinct")
        n = len(vertices)
        for i in range(n):
            a, b, c = vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]
            turn = orientation(a, b, c)
            if turn < 0:
                raise InvalidDiagram("polygon vertices must be listed "
                                     "counterclockwise")
            if turn == 0:
                raise InvalidDiagram("polygon must be strictly convex "
                                     f"(vertices {a}, {b}, {c} are collinear)")
        edges = []
        for i in range(n):
            a, b = vertices[i], vertices[(i + 1) % n]
            delta = b - a
            direction = delta.primitive_direction()
            length = delta.ratio_along(direction)
            edges.append(BoundaryEdge(a, b, direction, length))

        self.polygon_vertices = vertices
        self.boundary_edges = tuple(edges)
        self.nodes = tuple(nodes)
        self.homology = homology
        self.name = name
        self.kind = kind
        self.params = dict(params) if params else None
        self._cut_segments = tuple(self._trace_cut(node) for node in self.nodes)
        self._check_nodes()

    # -- construction-time validation ---------------------------------

    def _trace_cut(self, node: Node):
        if self._locate_in_polygon(node.position).kind is not LocationKind.INTERIOR:
            raise InvalidDiagram(
                f"node at {node.position} is not strictly inside the polygon")
        hits = []
        for index, edge in enumerate(self.boundary_edges):
            hit = ray_segment_hit(node.position, node.cut_direction,
                                  edge.start, edge.end)
            if hit is not None:
                hits.append((hit[0], hit[1], index))
        if not hits:
            raise InvalidDiagram(f"cut from node at {node.position} never "
                                 "reaches the boundary")
        t, point, index = min(hits, key=lambda h: h[0])
        edge = self.boundary_edges[index]
        if point == edge.start or point == edge.end:
            raise InvalidDiagram(f"cut from node at {node.position} exits "
                                 f"through the corner {point}")
        return node.position, point

    def _check_nodes(self):
        positions = [(n.position.x, n.position.y) for n in self.nodes]
        if len(set(positions)) != len(positions):
            raise InvalidDiagram("nodes must be at distinct positions")
        segs = self._cut_segments
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                if segment_contact(*segs[i], *segs[j]) is not None:
                    raise InvalidDiagram(
                        f"cuts from nodes at {self.nodes[i].position} and "
                        f"{self.nodes[j].position} collide")
        for i, node in enumerate(self.nodes):
            for j, seg in enumerate(segs):
                if i != j and on_open_segment(node.position, *seg):
                    raise InvalidDiagram(
                        f"node at {node.position} lies on the cut of the node "
                        f"at {self.nodes[j].position}")

    # -- queries -------------------------------------------------------

    @property
    def cut_segments(self):
        """One (node position, boundary exit point) pair per node."""
        return self._cut_segments

    def _locate_in_polygon(self, p: RatPoint) -> PointLocation:
        on_edges = []
        for index, edge in enumerate(self.boundary_edges):
            side = orientation(edge.start, edge.end, p)
            if side < 0:
                return PointLocation(LocationKind.OUTSIDE)
            if side == 0:
                on_edges.append(index)
        if not on_edges:
            return PointLocation(LocationKind.INTERIOR)
        for index, v in enumerate(self.polygon_vertices):
            if p == v:
                return PointLocation(LocationKind.ON_CORNER, index)
        for index in on_edges:
            edge = self.boundary_edges[index]
            if on_open_segment(p, edge.start, edge.end):
                return PointLocation(LocationKind.ON_BOUNDARY_EDGE, index)
        return PointLocation(LocationKind.OUTSIDE)

    def contains(self, p: RatPoint) -> PointLocation:
        """Exact classification of p against polygon, nodes and cuts."""
        location = self._locate_in_polygon(p)
        if location.kind is not LocationKind.INTERIOR:
            return location
        for index, node in enumerate(self.nodes):
            if p == node.position:
                return PointLocation(LocationKind.ON_NODE, index)
        for index, (start, end) in enumerate(self._cut_segments):
            if on_open_segment(p, start, end):
                return PointLocation(LocationKind.ON_CUT, index)
        return PointLocation(LocationKind.INTERIOR)

    def bounds(self):
        xs = [v.x for v in self.polygon_vertices]
        ys = [v.y for v in self.polygon_vertices]
        return min(xs), min(ys), max(xs), max(ys)

    @property
    def is_rectangle(self) -> bool:
        """Axis-aligned rectangle (the diagrams whose sweeps define classes)."""
        if len(self.boundary_edges) != 4:
            return False
        dirs = [(e.direction.x, e.direction.y) for e in self.boundary_edges]
        return sorted(dirs) == [(-1, 0), (0, -1), (0, 1), (1, 0)]

    def transform(self, m: UnimodularAffineMap) -> "BaseDiagram":
        """The diagram in new integral affine coordinates.

        Orientation-reversing maps reverse the vertex list to keep it
        counterclockwise.  The result is a generic polygon diagram; homology
        data is carried over unchanged.
        """
        vertices = [m.apply(v) for v in self.polygon_vertices]
        if m.det < 0:
            vertices.reverse()
        nodes = [Node(m.apply(n.position), m.apply(n.cut_direction))
                 for n in self.nodes]
        return BaseDiagram(vertices, nodes, self.homology, name=self.name)

    def __eq__(self, other):
        if not isinstance(other, BaseDiagram):
            return NotImplemented
        return (self.polygon_vertices == other.polygon_vertices
                and self.nodes == other.nodes
                and self.homology == other.homology
                and self.name == other.name
                and self.kind == other.kind
                and self.params == other.params)

    def __repr__(self):
        return (f"BaseDiagram({self.name!r}, {len(self.polygon_vertices)} "
                f"vertices, {len(self.nodes)} nodes)")


RECTANGLE_BASIS = ("sphere_h", "sphere_v")
RECTANGLE_BASIS_LEGEND = (
    "sphere_h = class of the sphere over a horizontal segment; "
    "sphere_v = class of the sphere over a vertical segment")


def rectangle(width, height) -> BaseDiagram:
    """The moment rectangle [0,width] x [0,height] of a product of spheres.

    Homology basis: sphere_h (sphere over a horizontal segment) and sphere_v
    (sphere over a vertical segment), intersection form [[0,1],[1,0]].
    """
    width = _as_fraction(width)
    height = _as_fraction(height)
    if width <= 0 or height <= 0:
        raise InvalidDiagram("rectangle sides must be positive")
    zero = Fraction(0)
    vertices = [RatPoint(zero, zero), RatPoint(width, zero),
                RatPoint(width, height), RatPoint(zero, height)]
    homology = HomologyModel(
        RECTANGLE_BASIS, ((0, 1), (1, 0)),
        class_of_horizontal_sweep=(1, 0),
        class_of_vertical_sweep=(0, 1))
    return BaseDiagram(vertices, (), homology,
                       name=f"rectangle {width}x{height}",
                       kind="rectangle",
                       params={"width": width, "height": height})


def x_abc(a, b, c, s) -> BaseDiagram:
    """The triple blow-up triangle: leg s, toric corner chop c, two nodes.

    The polygon has vertices (0,c), (c,0), (s,0), (0,s).  The chopped edge
    has affine length c (the toric blow-up).  The two non-toric blow-ups of
    sizes a and b are encoded by focus-focus nodes placed so that the cut
    from each node to the slanted edge has affine length equal to the
    blow-up size: node_a = (a, s-2a) with vertical cut (its cut exits at
    (a, s-a), lattice length a) and node_b = (s-2b, b) with horizontal cut.
    Homology basis E1, E2, E3 with intersection form -Identity.
    """
    a = _as_fraction(a)
    b = _as_fraction(b)
    c = _as_fraction(c)
    s = _as_fraction(s)
    if a <= 0 or b <= 0:
        raise InvalidDiagram("blow-up sizes a and b must be positive")
    if not 0 < c < s:
        raise InvalidDiagram("chop size must satisfy 0 < c < s")
    zero = Fraction(0)
    vertices = [RatPoint(zero, c), RatPoint(c, zero),
                RatPoint(s, zero), RatPoint(zero, s)]
    node_a = Node(RatPoint(a, s - 2 * a), IntVec(0, 1))
    node_b = Node(RatPoint(s - 2 * b, b), IntVec(1, 0))
    homology = HomologyModel(("E1", "E2", "E3"),
                             ((-1, 0, 0), (0, -1, 0), (0, 0, -1)))
    try:
        return BaseDiagram(vertices, (node_a, node_b), homology,
                           name=f"xabc a={a} b={b} c={c} s={s}",
                           kind="xabc",
                           params={"a": a, "b": b, "c": c, "s": s})
    except InvalidDiagram as err:
        raise InvalidDiagram(f"x_abc(a={a}, b={b}, c={c}, s={s}): {err}") from None

"""Tropical curves in a base diagram.

A curve is a plane graph: vertices at rational interior points, weighted
internal edges with primitive integer directions, and ends that leave the
graph and terminate either on the interior of a boundary edge or at a
focus-focus node (travelling along the node's cut direction).  A vertexless
curve (a single straight segment) is written as two opposite ends sharing a
standalone anchor point.

validate() checks every geometric and combinatorial invariant and returns a
report; the numeric operations (vertex multiplicity, end multiplicity)
assume a validated curve and raise on contract violations.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import TroplagError
from .diagram import BaseDiagram, LocationKind
from .lattice import (
    IntVec,
    RatPoint,
    UnimodularAffineMap,
    on_open_segment,
    segment_contact,
)


class InvalidCurve(TroplagError):
    """Curve data is structurally unusable (bad ids, degenerate geometry)."""


class NonTrivalentVertex(TroplagError):
    """Vertex multiplicity is only defined at trivalent vertices."""


class WeightedVertexUnsupported(TroplagError):
    """Vertex multiplicity requires all incident weights equal to one."""


class WeightedEndUnsupported(TroplagError):
    """End multiplicity and end classification require weight one."""


class UnbalancedVertex(TroplagError):
    """The three pairwise wedge values at a vertex disagree."""


class NonIntegralSelfIntersection(TroplagError):
    """(m-1)/2 requested for even m."""


class NotABoundaryEnd(TroplagError):
    """End multiplicity is only defined for boundary-terminal ends."""


@dataclass(frozen=True)
class TropicalVertex:
    id: str
    position: RatPoint


@dataclass(frozen=True)
class InternalEdge:
    """An edge between two vertices.  direction is primitive, src -> dst;
    pass None to have it derived from the vertex positions."""

    id: str
    src: str
    dst: str
    direction: IntVec | None = None
    weight: int = 1


@dataclass(frozen=True)
class BoundaryTerminal:
    """An end landing at a point in the open interior of a boundary edge.
    edge_index may be left None and resolved geometrically."""

    landing: RatPoint
    edge_index: int | None = None


@dataclass(frozen=True)
class NodeTerminal:
    """An end terminating at a focus-focus node, along its cut direction."""

    node_index: int


@dataclass(frozen=True)
class CurveEnd:
    """A ray leaving the curve.  source is a vertex id, or a RatPoint anchor
    for a standalone (vertexless) segment.  direction is primitive and
    outgoing."""

    id: str
    source: str | RatPoint
    direction: IntVec
    terminal: BoundaryTerminal | NodeTerminal
    weight: int = 1


def _anchor_key(point: RatPoint):
    return ("anchor", point.x, point.y)


class TropicalCurve:
    """An immutable tropical curve; geometry is validated against a diagram
    by validate()."""

    def __init__(self, vertices=(), edges=(), ends=(), name=""):
        self.name = name
        self.vertices = tuple(vertices)
        self.ends = tuple(ends)
        self._vertex_by_id = {}
        for v in self.vertices:
            if v.id in self._vertex_by_id:
                raise InvalidCurve(f"duplicate vertex id {v.id!r}")
            self._vertex_by_id[v.id] = v

        resolved = []
        seen_ids = set(self._vertex_by_id)
        for e in edges:
            if e.id in seen_ids:
                raise InvalidCurve(f"duplicate element id {e.id!r}")
            seen_ids.add(e.id)
            for endpoint in (e.src, e.dst):
                if endpoint not in self._vertex_by_id:
                    raise InvalidCurve(
                        f"edge {e.id!r} refers to unknown vertex {endpoint!r}")
            if e.src == e.dst:
                raise InvalidCurve(f"edge {e.id!r} is a loop")
            if not isinstance(e.weight, int) or e.weight < 1:
                raise InvalidCurve(f"edge {e.id!r} has non-positive weight")
            if e.direction is None:
                delta = (self._vertex_by_id[e.dst].position
                         - self._vertex_by_id[e.src].position)
                if delta.is_zero:
                    raise InvalidCurve(
                        f"edge {e.id!r} joins coincident vertices")
                e = InternalEdge(e.id, e.src, e.dst,
                                 delta.primitive_direction(), e.weight)
            elif not e.direction.is_primitive:
                raise InvalidCurve(
                    f"edge {e.id!r} direction {e.direction} is not primitive")
            resolved.append(e)
        self.edges = tuple(resolved)

        for e in self.ends:
            if e.id in seen_ids:
                raise InvalidCurve(f"duplicate element id {e.id!r}")
            seen_ids.add(e.id)
            if isinstance(e.source, str) and e.source not in self._vertex_by_id:
                raise InvalidCurve(
                    f"end {e.id!r} refers to unknown vertex {e.source!r}")
            if not e.direction.is_primitive:
                raise InvalidCurve(
                    f"end {e.id!r} direction {e.direction} is not primitive")
            if not isinstance(e.weight, int) or e.weight < 1:
                raise InvalidCurve(f"end {e.id!r} has non-positive weight")

    # -- basic accessors ------------------------------------------------

    def vertex(self, vertex_id: str) -> TropicalVertex:
        try:
            return self._vertex_by_id[vertex_id]
        except KeyError:
            raise InvalidCurve(f"no vertex with id {vertex_id!r}") from None

    def start_point(self, end: CurveEnd) -> RatPoint:
        if isinstance(end.source, str):
            return self.vertex(end.source).position
        return end.source

    def anchors(self):
        """Standalone anchor points, with their ends, in declaration order."""
        found = {}
        for e in self.ends:
            if not isinstance(e.source, str):
                found.setdefault(_anchor_key(e.source), (e.source, []))[1].append(e)
        return list(found.values())

    def outgoing(self, key):
        """Weighted outgoing primitive directions at a vertex id or anchor key."""
        out = []
        for e in self.edges:
            if e.src == key:
                out.append((e.direction, e.weight, e.id))
            if e.dst == key:
                out.append((-e.direction, e.weight, e.id))
        for e in self.ends:
            source = e.source if isinstance(e.source, str) else _anchor_key(e.source)
            if source == key:
                out.append((e.direction, e.weight, e.id))
        return out

    @property
    def is_empty(self) -> bool:
        return not (self.vertices or self.edges or self.ends)

    def edge_segment(self, edge: InternalEdge):
        return (self.vertex(edge.src).position, self.vertex(edge.dst).position)

    def end_segment(self, diagram: BaseDiagram, end: CurveEnd):
        start = self.start_point(end)
        if isinstance(end.terminal, NodeTerminal):
            if not 0 <= end.terminal.node_index < len(diagram.nodes):
                raise InvalidCurve(
                    f"end {end.id!r} refers to missing node "
                    f"{end.terminal.node_index}")
            return (start, diagram.nodes[end.terminal.node_index].position)
        return (start, end.terminal.landing)

    def transform(self, m: UnimodularAffineMap) -> "TropicalCurve":
        """The curve in new integral affine coordinates.

        Boundary edge indices are dropped (they are re-resolved
        geometrically against the transformed diagram)."""
        vertices = [TropicalVertex(v.id, m.apply(v.position))
                    for v in self.vertices]
        edges = [InternalEdge(e.id, e.src, e.dst, m.apply(e.direction),
                              e.weight) for e in self.edges]
        ends = []
        for e in self.ends:
            source = e.source if isinstance(e.source, str) else m.apply(e.source)
            if isinstance(e.terminal, NodeTerminal):
                terminal = e.terminal
            else:
                terminal = BoundaryTerminal(m.apply(e.terminal.landing))
            ends.append(CurveEnd(e.id, source, m.apply(e.direction),
                                 terminal, e.weight))
        return TropicalCurve(vertices, edges, ends, name=self.name)

    def __eq__(self, other):
        if not isinstance(other, TropicalCurve):
            return NotImplemented
        return (self.name == other.name and self.vertices == other.vertices
                and self.edges == other.edges and self.ends == other.ends)

    def __repr__(self):
        return (f"TropicalCurve({self.name!r}, {len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, {len(self.ends)} ends)")


def transformed(diagram: BaseDiagram, curve: TropicalCurve,
                m: UnimodularAffineMap):
    """Apply one integral affine change of coordinates to both."""
    return diagram.transform(m), curve.transform(m)


# -----------------------------------------------------------------------
# Validation
# -----------------------------------------------------------------------

@dataclass(frozen=True)
class ValidationIssue:
    code: str
    element: str
    message: str

    def __str__(self):
        return f"[{self.code}] {self.element}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[ValidationIssue, ...]

    @property
    def passed(self) -> bool:
        return not self.issues

    def lines(self):
        return [str(issue) for issue in self.issues]

    def __str__(self):
        return "ok" if self.passed else "; ".join(self.lines())


def check_balancing(curve: TropicalCurve) -> ValidationReport:
    """Weighted outgoing directions must sum to zero at every vertex, and at
    every standalone anchor (where this just says the segment is straight)."""
    issues = []
    sites = [(v.id, v.id) for v in curve.vertices]
    sites += [(_anchor_key(point), f"anchor {point}")
              for point, _ in curve.anchors()]
    for key, label in sites:
        out = curve.outgoing(key)
        sx = sum(d.x * w for d, w, _ in out)
        sy = sum(d.y * w for d, w, _ in out)
        if (sx, sy) != (0, 0):
            issues.append(ValidationIssue(
                "balancing", label,
                f"weighted outgoing directions sum to ({sx},{sy}), "
                "expected (0,0)"))
    return ValidationReport(tuple(issues))


def _segment_inventory(diagram: BaseDiagram, curve: TropicalCurve):
    """All curve segments with identity tokens for their two endpoints.

    Two segments may share a point only where both carry the same token
    (a common vertex, anchor or terminal node)."""
    inventory = []
    for e in curve.edges:
        a, b = curve.edge_segment(e)
        inventory.append((e.id, a, b, ("v", e.src), ("v", e.dst)))
    for e in curve.ends:
        try:
            a, b = curve.end_segment(diagram, e)
        except InvalidCurve:
            continue  # reported separately
        if isinstance(e.source, str):
            start_token = ("v", e.source)
        else:
            start_token = _anchor_key(e.source)
        if isinstance(e.terminal, NodeTerminal):
            finish_token = ("node", e.terminal.node_index)
        else:
            finish_token = ("landing", e.id)
        inventory.append((e.id, a, b, start_token, finish_token))
    return inventory


def validate(diagram: BaseDiagram, curve: TropicalCurve) -> ValidationReport:
    """Full geometric and combinatorial validation.

    Checks vertex/anchor containment, edge and end collinearity, terminal
    legality (boundary landings in open edge interiors, node ends along the
    cut direction), embeddedness (segments meet only at shared named
    endpoints, and avoid nodes and cuts), balancing, and connectivity.
    The empty curve is vacuously valid.
    """
    issues = []

    def issue(code, element, message):
        issues.append(ValidationIssue(code, element, message))

    for v in curve.vertices:
        loc = diagram.contains(v.position)
        if loc.kind is not LocationKind.INTERIOR:
            issue("vertex-position", v.id,
                  f"position {v.position} is {loc}, must be strictly interior")
        if not curve.outgoing(v.id):
            issue("isolated-vertex", v.id, "vertex has no incident elements")

    for point, anchor_ends in curve.anchors():
        label = f"anchor {point}"
        loc = diagram.contains(point)
        if loc.kind is not LocationKind.INTERIOR:
            issue("anchor-position", label,
                  f"anchor is {loc}, must be strictly interior")
        if len(anchor_ends) != 2:
            issue("anchor-not-segment", label,
                  f"{len(anchor_ends)} ends meet here; an anchor carries "
                  "exactly two (declare a vertex instead)")

    for e in curve.edges:
        a, b = curve.edge_segment(e)
        t = (b - a).ratio_along(e.direction)
        if t is None or t <= 0:
            issue("edge-collinearity", e.id,
                  f"displacement {b - a} is not a positive multiple of "
                  f"direction {e.direction}")

    for e in curve.ends:
        start = curve.start_point(e)
        if isinstance(e.terminal, NodeTerminal):
            if not 0 <= e.terminal.node_index < len(diagram.nodes):
                issue("end-terminal", e.id,
                      f"no node with index {e.terminal.node_index}")
                continue
            node = diagram.nodes[e.terminal.node_index]
            t = (node.position - start).ratio_along(e.direction)
            if t is None or t <= 0:
                issue("end-collinearity", e.id,
                      f"node at {node.position} is not reached along "
                      f"direction {e.direction}")
            if e.direction != node.cut_direction:
                issue("end-cut-direction", e.id,
                      f"direction {e.direction} differs from the node's cut "
                      f"direction {node.cut_direction}")
        else:
            landing = e.terminal.landing
            t = (landing - start).ratio_along(e.direction)
            if t is None or t <= 0:
                issue("end-collinearity", e.id,
                      f"landing {landing} is not reached along direction "
                      f"{e.direction}")
            loc = diagram.contains(landing)
            if loc.kind is LocationKind.ON_CORNER:
                issue("end-corner-landing", e.id,
                      f"landing {landing} is a polygon corner; corners are "
                      "not legal landing sites")
            elif loc.kind is not LocationKind.ON_BOUNDARY_EDGE:
                issue("end-landing", e.id,
                      f"landing {landing} is {loc}, must lie in the open "
                      "interior of a boundary edge")
            elif (e.terminal.edge_index is not None
                  and e.terminal.edge_index != loc.index):
                issue("end-edge-mismatch", e.id,
                      f"landing lies on boundary edge {loc.index}, "
                      f"not {e.terminal.edge_index}")

    # Embeddedness: pairwise segment contacts, nodes, cuts.
    inventory = _segment_inventory(diagram, curve)
    for i in range(len(inventory)):
        id1, a, b, tok_a, tok_b = inventory[i]
        if a == b:
            issue("degenerate-segment", id1, "segment has zero length")
            continue
        for j in range(i + 1, len(inventory)):
            id2, c, d, tok_c, tok_d = inventory[j]
            contact = segment_contact(a, b, c, d)
            if contact is None:
                continue
            if contact == "overlap":
                issue("embedding", id1,
                      f"overlaps {id2} along a segment")
                continue
            tokens1 = {tok_a if contact == a else None,
                       tok_b if contact == b else None} - {None}
            tokens2 = {tok_c if contact == c else None,
                       tok_d if contact == d else None} - {None}
            if not tokens1 & tokens2:
                issue("embedding", id1,
                      f"meets {id2} at {contact}, which is not a shared "
                      "endpoint")
        for node_index, node in enumerate(diagram.nodes):
            if on_open_segment(node.position, a, b):
                issue("crosses-node", id1,
                      f"passes through the node at {node.position}")
        for cut_index, (cs, ce) in enumerate(diagram.cut_segments):
            contact = segment_contact(a, b, cs, ce)
            if contact is None:
                continue
            if contact != "overlap" and contact == cs \
                    and ("node", cut_index) in (tok_a, tok_b):
                continue  # an end terminating at this cut's own node
            issue("crosses-cut", id1,
                  f"touches the cut of node {cut_index}")

    issues.extend(check_balancing(curve).issues)

    # Connectivity of the underlying graph (edges join vertices; each
    # anchor is its own component unless the curve is just that segment).
    keys = [v.id for v in curve.vertices]
    keys += [_anchor_key(point) for point, _ in curve.anchors()]
    if keys:
        parent = {k: k for k in keys}

        def find(k):
            while parent[k] != k:
                parent[k] = parent[parent[k]]
                k = parent[k]
            return k

        for e in curve.edges:
            parent[find(e.src)] = find(e.dst)
        roots = {find(k) for k in keys}
        if len(roots) > 1:
            issue("disconnected", curve.name or "curve",
                  f"underlying graph has {len(roots)} components")

    return ValidationReport(tuple(issues))


# -----------------------------------------------------------------------
# Multiplicities
# -----------------------------------------------------------------------

def vertex_multiplicity(curve: TropicalCurve, vertex_id: str) -> int:
    """The determinant m = |v1 ^ v2| of the outgoing directions at a
    balanced trivalent weight-one vertex (the three pairwise values agree)."""
    curve.vertex(vertex_id)
    out = curve.outgoing(vertex_id)
    if len(out) != 3:
        raise NonTrivalentVertex(
            f"vertex {vertex_id!r} has valence {len(out)}, expected 3")
    if any(w != 1 for _, w, _ in out):
        raise WeightedVertexUnsupported(
            f"vertex {vertex_id!r} has incident weights != 1")
    (d1, _, _), (d2, _, _), (d3, _, _) = out
    m12, m23, m31 = abs(d1.wedge(d2)), abs(d2.wedge(d3)), abs(d3.wedge(d1))
    if not m12 == m23 == m31:
        raise UnbalancedVertex(
            f"vertex {vertex_id!r} has pairwise wedges {m12}, {m23}, {m31}; "
            "it cannot be balanced")
    return m12


def vertex_double_points(m: int) -> int:
    """(m-1)/2, the number of Lagrangian double points a vertex of
    multiplicity m contributes."""
    if not isinstance(m, int) or m < 1:
        raise NonIntegralSelfIntersection(f"multiplicity must be a positive "
                                          f"integer, got {m}")
    if m % 2 == 0:
        raise NonIntegralSelfIntersection(
            f"multiplicity m={m} is even; (m-1)/2 is not an integer")
    return (m - 1) // 2


def resolve_boundary_edge(diagram: BaseDiagram, end: CurveEnd) -> int:
    """The index of the boundary edge the end lands on."""
    if not isinstance(end.terminal, BoundaryTerminal):
        raise NotABoundaryEnd(f"end {end.id!r} terminates at a node")
    loc = diagram.contains(end.terminal.landing)
    if loc.kind is not LocationKind.ON_BOUNDARY_EDGE:
        raise InvalidCurve(
            f"end {end.id!r} landing {end.terminal.landing} is {loc}, "
            "not in the open interior of a boundary edge")
    if end.terminal.edge_index is not None and end.terminal.edge_index != loc.index:
        raise InvalidCurve(
            f"end {end.id!r} names boundary edge {end.terminal.edge_index} "
            f"but lands on edge {loc.index}")
    return loc.index


def end_multiplicity(diagram: BaseDiagram, end: CurveEnd) -> int:
    """mu = |wedge(end direction, boundary edge direction)| at the landing.

    mu = 1 is a collar (the Lagrangian acquires a boundary circle there),
    mu = 2 a cross-cap.  Only weight-one boundary ends are supported.
    """
    if not isinstance(end.terminal, BoundaryTerminal):
        raise NotABoundaryEnd(f"end {end.id!r} terminates at a node")
    if end.weight != 1:
        raise WeightedEndUnsupported(
            f"end {end.id!r} has weight {end.weight}; multiplicity is "
            "defined for weight one")
    index = resolve_boundary_edge(diagram, end)
    mu = abs(end.direction.wedge(diagram.boundary_edges[index].direction))
    if mu == 0:
        raise InvalidCurve(
            f"end {end.id!r} is parallel to the boundary edge it lands on; "
            "a legal landing cannot have mu = 0")
    return mu

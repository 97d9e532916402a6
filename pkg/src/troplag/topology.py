"""Surface topology of the Lagrangian over a tropical curve.

The Lagrangian lift assembles from standard pieces: a pair of pants over
each trivalent vertex, an annulus over each internal edge (and over each
standalone anchor), and a cap over each end.  The cap type is a pure
function of the end's terminal and multiplicity:

  * node terminal            -> disc cap   (chi contribution +1)
  * boundary terminal, mu=2  -> cross-cap  (chi 0, kills orientability)
  * boundary terminal, mu=1  -> collar     (chi 0, one boundary circle)

A vertex of multiplicity m carries (m-1)/2 transverse double points; the
surgery replacing each one by an embedded handle drops chi by 2.  So

    chi = -#vertices + #disc caps - 2 * sum (m-1)/2.

classify() runs this bookkeeping directly; build_presentation() +
oracle_classify() re-derive the same answer from an explicit piece/gluing
presentation and cell counts, giving an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import TroplagError
from .diagram import BaseDiagram
from .tropical import (
    CurveEnd,
    NodeTerminal,
    TropicalCurve,
    WeightedEndUnsupported,
    end_multiplicity,
    vertex_double_points,
    vertex_multiplicity,
)


class UnsupportedEndMultiplicity(TroplagError):
    """Boundary ends with mu >= 3 have no assigned surface topology."""


class EmptyCurve(TroplagError):
    """The empty curve carries no surface."""


class MalformedPresentation(TroplagError):
    """A surface presentation with inconsistent gluing data."""


class EndKind(Enum):
    DISC_CAP = "disccap"
    CROSS_CAP = "crosscap"
    COLLAR = "collar"

    @property
    def chi(self) -> int:
        return 1 if self is EndKind.DISC_CAP else 0


def classify_end(diagram: BaseDiagram, end: CurveEnd) -> EndKind:
    """The cap type of a weight-one end (see module docstring)."""
    if end.weight != 1:
        raise WeightedEndUnsupported(
            f"end {end.id!r} has weight {end.weight}; topology is defined "
            "for weight one")
    if isinstance(end.terminal, NodeTerminal):
        return EndKind.DISC_CAP
    mu = end_multiplicity(diagram, end)
    if mu == 1:
        return EndKind.COLLAR
    if mu == 2:
        return EndKind.CROSS_CAP
    raise UnsupportedEndMultiplicity(
        f"end {end.id!r} has mu = {mu}; only mu = 1 (collar) and mu = 2 "
        "(cross-cap) carry a surface meaning")


@dataclass(frozen=True)
class ChiBreakdown:
    """Euler characteristic with its provenance terms."""

    vertex_term: int     # -1 per vertex
    cap_term: int        # +1 per disc cap
    surgery_term: int    # -2 per surgered double point

    @property
    def chi(self) -> int:
        return self.vertex_term + self.cap_term + self.surgery_term


def _vertex_data(curve: TropicalCurve):
    """(vertex id, m, double points) for every vertex; raises if any vertex
    is not trivalent weight-one."""
    data = []
    for v in curve.vertices:
        m = vertex_multiplicity(curve, v.id)
        data.append((v.id, m, vertex_double_points(m)))
    return data


def _end_kinds(diagram: BaseDiagram, curve: TropicalCurve):
    return [(e, classify_end(diagram, e)) for e in curve.ends]


def euler_breakdown(diagram: BaseDiagram, curve: TropicalCurve) -> ChiBreakdown:
    if curve.is_empty:
        raise EmptyCurve("the empty curve has no Euler characteristic")
    vertex_data = _vertex_data(curve)
    kinds = _end_kinds(diagram, curve)
    return ChiBreakdown(
        vertex_term=-len(vertex_data),
        cap_term=sum(kind.chi for _, kind in kinds),
        surgery_term=-2 * sum(dp for _, _, dp in vertex_data))


def euler_characteristic(diagram: BaseDiagram, curve: TropicalCurve) -> int:
    """chi of the (surgered) Lagrangian surface over a validated curve."""
    return euler_breakdown(diagram, curve).chi


@dataclass(frozen=True)
class SurfaceClass:
    """The topological type of the surface.

    For closed surfaces exactly one genus field is set: nonorientable_genus
    k with chi = 2 - k, or orientable_genus g with chi = 2 - 2g.  Surfaces
    with boundary leave both genus fields empty.
    """

    closed: bool
    orientable: bool
    euler_char: int
    nonorientable_genus: int | None
    orientable_genus: int | None
    boundary_circles: int
    double_points_surgered: int

    def __post_init__(self):
        if self.closed != (self.boundary_circles == 0):
            raise ValueError("closed must match boundary_circles == 0")
        if self.closed and not self.orientable:
            if self.nonorientable_genus is None or self.orientable_genus is not None:
                raise ValueError("closed nonorientable surfaces carry exactly "
                                 "the nonorientable genus")
            if self.euler_char != 2 - self.nonorientable_genus:
                raise ValueError("chi must equal 2 - k")
            if self.nonorientable_genus < 1:
                raise ValueError("nonorientable genus must be positive")
        elif self.closed:
            if self.orientable_genus is None or self.nonorientable_genus is not None:
                raise ValueError("closed orientable surfaces carry exactly "
                                 "the orientable genus")
            if self.euler_char != 2 - 2 * self.orientable_genus:
                raise ValueError("chi must equal 2 - 2g")
            if self.orientable_genus < 0:
                raise ValueError("orientable genus must be nonnegative")
        else:
            if self.nonorientable_genus is not None or self.orientable_genus is not None:
                raise ValueError("surfaces with boundary leave both genus "
                                 "fields empty")


def _surface_class(chi: int, crosscaps: int, collars: int,
                   double_points: int) -> SurfaceClass:
    closed = collars == 0
    orientable = crosscaps == 0
    k = g = None
    if closed and not orientable:
        k = 2 - chi
    elif closed:
        if chi % 2 != 0:
            raise MalformedPresentation(
                f"closed orientable surface with odd chi = {chi}")
        g = (2 - chi) // 2
    return SurfaceClass(closed=closed, orientable=orientable, euler_char=chi,
                        nonorientable_genus=k, orientable_genus=g,
                        boundary_circles=collars,
                        double_points_surgered=double_points)


def classify(diagram: BaseDiagram, curve: TropicalCurve) -> SurfaceClass:
    """SurfaceClass of the Lagrangian over a validated curve.

    closed iff there are no collar ends; orientable iff there are no
    cross-caps (surgery handles attach orientably; the curve avoids cuts, so
    transporting fiber orientations around cycles is monodromy-free).
    """
    if curve.is_empty:
        raise EmptyCurve("the empty curve has no surface class")
    vertex_data = _vertex_data(curve)
    kinds = _end_kinds(diagram, curve)
    chi = (-len(vertex_data)
           + sum(kind.chi for _, kind in kinds)
           - 2 * sum(dp for _, _, dp in vertex_data))
    crosscaps = sum(1 for _, kind in kinds if kind is EndKind.CROSS_CAP)
    collars = sum(1 for _, kind in kinds if kind is EndKind.COLLAR)
    return _surface_class(chi, crosscaps, collars,
                          sum(dp for _, _, dp in vertex_data))


def surface_name(sc: SurfaceClass) -> str | None:
    """A common name for the surface, when it has one."""
    if sc.closed and sc.orientable:
        return {0: "sphere", 1: "torus"}.get(sc.orientable_genus)
    if sc.closed:
        return {1: "projective plane", 2: "Klein bottle"}.get(
            sc.nonorientable_genus)
    if sc.orientable and sc.boundary_circles == 1 and sc.euler_char == 1:
        return "disc"
    if sc.orientable and sc.boundary_circles == 2 and sc.euler_char == 0:
        return "annulus"
    return None


# -----------------------------------------------------------------------
# Presentation oracle
# -----------------------------------------------------------------------

class PieceKind(Enum):
    PANTS = "pair-of-pants"
    ANNULUS = "annulus"
    DISC = "disc"
    MOBIUS = "mobius-band"
    COLLAR = "collar-annulus"


# Boundary circle count and a cell structure (V, E, F) per piece, with each
# boundary circle cellulated as one vertex and one loop edge:
#   disc: its circle plus one face                       -> chi = 1
#   annulus/collar: two circles, a rung, one face        -> chi = 0
#   mobius band: boundary circle, core circle, rung, one face (the face
#     runs around the core twice)                        -> chi = 0
#   pants: three circles, two rungs, one face            -> chi = -1
_PIECE_CELLS = {
    PieceKind.DISC: (1, 1, 1),
    PieceKind.ANNULUS: (2, 3, 1),
    PieceKind.COLLAR: (2, 3, 1),
    PieceKind.MOBIUS: (2, 3, 1),
    PieceKind.PANTS: (3, 5, 1),
}
_PIECE_CIRCLES = {
    PieceKind.DISC: 1,
    PieceKind.ANNULUS: 2,
    PieceKind.COLLAR: 2,
    PieceKind.MOBIUS: 1,
    PieceKind.PANTS: 3,
}


@dataclass(frozen=True)
class Piece:
    kind: PieceKind
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != _PIECE_CIRCLES[self.kind]:
            raise MalformedPresentation(
                f"{self.kind.value} carries {_PIECE_CIRCLES[self.kind]} "
                f"boundary circles, got labels {self.labels}")


@dataclass(frozen=True)
class SurfacePresentation:
    """Pieces with labelled boundary circles, a pairing of labels, and a
    count of surgery handle attachments."""

    pieces: tuple[Piece, ...]
    gluings: tuple[tuple[str, str], ...]
    handles: int


def build_presentation(diagram: BaseDiagram,
                       curve: TropicalCurve) -> SurfacePresentation:
    """The piece decomposition mirroring the curve's incidence structure."""
    if curve.is_empty:
        raise EmptyCurve("the empty curve has no presentation")
    pieces = []
    gluings = []
    handles = 0

    slot = {}  # (site key, element id) -> circle label on the site's piece
    for v in curve.vertices:
        incident = curve.outgoing(v.id)
        labels = tuple(f"{v.id}:{eid}" for _, _, eid in incident)
        for _, _, eid in incident:
            slot[(v.id, eid)] = f"{v.id}:{eid}"
        if len(incident) != 3:
            raise MalformedPresentation(
                f"vertex {v.id!r} has valence {len(incident)}; the piece "
                "decomposition needs trivalent vertices")
        pieces.append(Piece(PieceKind.PANTS, labels))
        handles += vertex_double_points(vertex_multiplicity(curve, v.id))

    for point, anchor_ends in curve.anchors():
        if len(anchor_ends) != 2:
            raise MalformedPresentation(
                f"anchor {point} carries {len(anchor_ends)} ends, expected 2")
        key = ("anchor", point.x, point.y)
        labels = tuple(f"@{point}:{e.id}" for e in anchor_ends)
        for e in anchor_ends:
            slot[(key, e.id)] = f"@{point}:{e.id}"
        pieces.append(Piece(PieceKind.ANNULUS, labels))

    for e in curve.edges:
        pieces.append(Piece(PieceKind.ANNULUS, (f"{e.id}:src", f"{e.id}:dst")))
        gluings.append((slot[(e.src, e.id)], f"{e.id}:src"))
        gluings.append((slot[(e.dst, e.id)], f"{e.id}:dst"))

    for e in curve.ends:
        kind = classify_end(diagram, e)
        if isinstance(e.source, str):
            site = e.source
        else:
            site = ("anchor", e.source.x, e.source.y)
        if kind is EndKind.DISC_CAP:
            pieces.append(Piece(PieceKind.DISC, (f"{e.id}:cap",)))
        elif kind is EndKind.CROSS_CAP:
            pieces.append(Piece(PieceKind.MOBIUS, (f"{e.id}:cap",)))
        else:
            pieces.append(Piece(PieceKind.COLLAR,
                                (f"{e.id}:cap", f"{e.id}:boundary")))
        gluings.append((slot[(site, e.id)], f"{e.id}:cap"))

    return SurfacePresentation(tuple(pieces), tuple(gluings), handles)


def oracle_classify(presentation: SurfacePresentation) -> SurfaceClass:
    """Classify the glued surface from the presentation alone.

    chi comes from cell counts of the glued complex: each piece contributes
    its (V, E, F) from the table above, and every circle gluing identifies
    one vertex and one edge pair; each surgery handle then subtracts 2.
    Orientability is decided by propagating orientations across the gluing
    graph: Mobius pieces admit none, and the remaining pieces glue by the
    orientation-compatible identifications the construction uses.
    """
    owner = {}
    for index, piece in enumerate(presentation.pieces):
        for label in piece.labels:
            if label in owner:
                raise MalformedPresentation(f"label {label!r} appears twice")
            owner[label] = index

    glued = set()
    for a, b in presentation.gluings:
        for label in (a, b):
            if label not in owner:
                raise MalformedPresentation(f"gluing names unknown label "
                                            f"{label!r}")
            if label in glued:
                raise MalformedPresentation(f"label {label!r} glued twice")
            glued.add(label)
        if a == b:
            raise MalformedPresentation(f"label {a!r} glued to itself")
    if presentation.handles < 0:
        raise MalformedPresentation("negative handle count")

    # Connectivity of the gluing graph.
    if presentation.pieces:
        adjacency = {i: set() for i in range(len(presentation.pieces))}
        for a, b in presentation.gluings:
            adjacency[owner[a]].add(owner[b])
            adjacency[owner[b]].add(owner[a])
        seen = {0}
        queue = [0]
        while queue:
            current = queue.pop()
            for neighbour in adjacency[current]:
                if neighbour not in seen:
                    seen.add(neighbour)
                    queue.append(neighbour)
        if len(seen) != len(presentation.pieces):
            raise MalformedPresentation("presentation is disconnected")
    else:
        raise MalformedPresentation("presentation has no pieces")

    cells_v = sum(_PIECE_CELLS[p.kind][0] for p in presentation.pieces)
    cells_e = sum(_PIECE_CELLS[p.kind][1] for p in presentation.pieces)
    cells_f = sum(_PIECE_CELLS[p.kind][2] for p in presentation.pieces)
    n_glue = len(presentation.gluings)
    chi = (cells_v - n_glue) - (cells_e - n_glue) + cells_f
    chi -= 2 * presentation.handles

    # Orientation propagation: each gluing joins two distinct boundary
    # circles, so orientations chosen piece by piece can always be made
    # compatible across every gluing; the propagation fails exactly when a
    # piece admits no orientation at all, i.e. on a Mobius band.
    nonorientable = any(p.kind is PieceKind.MOBIUS
                        for p in presentation.pieces)

    free = [label for label in owner if label not in glued]
    boundary_circles = len(free)
    collars = boundary_circles  # each free label is one boundary circle
    return _surface_class(chi, crosscaps=int(nonorientable), collars=collars,
                          double_points=presentation.handles)

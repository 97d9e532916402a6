"""Mod-2 homology of tropical Lagrangians via exact line sweeps.

In a rectangle diagram the class of the Lagrangian over a closed curve is
read off from intersection parities with the two sphere families: the
sphere over a segment of primitive direction t meets the Lagrangian piece
over a curve segment of direction u in |dot(u, t)| points (the sphere's
fiber circle is t itself, the Lagrangian's is the 90-degree rotation of u,
and |wedge(rot90(u), t)| = |dot(u, t)|).  Summing over the segments that
cross one generic witness line gives the parity; balancing makes the parity
independent of the witness for closed curves.

Pontryagin squares are evaluated on integral lifts through the diagram's
intersection form, Q(c, c) mod 4, which only depends on c mod 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import TroplagError
from .diagram import BaseDiagram, HomologyModel, UnsupportedDiagram
from .lattice import IntVec
from .tropical import BoundaryTerminal, TropicalCurve, end_multiplicity


class InvalidClass(TroplagError):
    """A homology class vector of the wrong shape."""


class NonGenericWitness(TroplagError):
    """The witness line passes through a vertex, anchor or landing point."""


class UnsweepableCurve(TroplagError):
    """Sweep parities are defined for closed weight-one curves only."""


class SweepDirection(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"

    @property
    def line_direction(self) -> IntVec:
        return IntVec(1, 0) if self is SweepDirection.HORIZONTAL else IntVec(0, 1)


@dataclass(frozen=True)
class SweepParity:
    direction: SweepDirection
    parity: int
    witness_line_coordinate: Fraction


@dataclass(frozen=True)
class Mod2Class:
    """Coefficients over {0,1} in the diagram's homology basis."""

    coefficients: tuple[int, ...]
    basis_labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.coefficients) != len(self.basis_labels):
            raise InvalidClass("coefficient vector does not match basis")
        if any(c not in (0, 1) for c in self.coefficients):
            raise InvalidClass("mod-2 coefficients must be 0 or 1")

    def label_sum(self) -> str:
        terms = [label for c, label in
                 zip(self.coefficients, self.basis_labels) if c]
        return " + ".join(terms) if terms else "0"

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coefficients) + ")"


def _require_sweepable(diagram: BaseDiagram, curve: TropicalCurve):
    if not diagram.is_rectangle or diagram.nodes:
        raise UnsupportedDiagram(
            "sweep parities are defined for node-free rectangle diagrams")
    for e in curve.ends:
        if e.weight != 1:
            raise UnsweepableCurve(f"end {e.id!r} has weight {e.weight}")
        if not isinstance(e.terminal, BoundaryTerminal):
            raise UnsweepableCurve(
                f"end {e.id!r} terminates at a node; rectangle diagrams "
                "carry no nodes")
        if end_multiplicity(diagram, e) % 2 != 0:
            raise UnsweepableCurve(
                f"end {e.id!r} has odd multiplicity; the surface has "
                "boundary there and carries no closed mod-2 class")
    for e in curve.edges:
        if e.weight != 1:
            raise UnsweepableCurve(f"edge {e.id!r} has weight {e.weight}")


def _segments(diagram: BaseDiagram, curve: TropicalCurve):
    segments = []
    for e in curve.edges:
        a, b = curve.edge_segment(e)
        segments.append((a, b, e.direction))
    for e in curve.ends:
        a, b = curve.end_segment(diagram, e)
        segments.append((a, b, e.direction))
    return segments


def _axis(point, direction: SweepDirection) -> Fraction:
    # The coordinate that varies across witness lines of this direction:
    # vertical lines are x = const, horizontal lines y = const.
    return point.x if direction is SweepDirection.VERTICAL else point.y


def critical_coordinates(diagram: BaseDiagram, curve: TropicalCurve,
                         direction: SweepDirection):
    """Sorted coordinates a generic witness line must avoid, including the
    rectangle bounds."""
    x0, y0, x1, y1 = diagram.bounds()
    lo, hi = ((x0, x1) if direction is SweepDirection.VERTICAL else (y0, y1))
    coords = {lo, hi}
    for a, b, _ in _segments(diagram, curve):
        coords.add(_axis(a, direction))
        coords.add(_axis(b, direction))
    return sorted(coords)


def default_witness(diagram: BaseDiagram, curve: TropicalCurve,
                    direction: SweepDirection) -> Fraction:
    """Midpoint of the largest gap between critical coordinates (first
    largest if tied); deterministic."""
    coords = critical_coordinates(diagram, curve, direction)
    best = None
    for a, b in zip(coords, coords[1:]):
        if best is None or b - a > best[1] - best[0]:
            best = (a, b)
    if best is None or best[0] == best[1]:
        raise UnsweepableCurve("no generic witness line exists")
    return (best[0] + best[1]) / 2


def sweep_parity(diagram: BaseDiagram, curve: TropicalCurve,
                 direction: SweepDirection,
                 witness: Fraction | None = None) -> SweepParity:
    """Mod-2 intersection parity with the sphere family of this direction.

    A generic line of the given direction is chosen (or supplied); the
    parity is the sum of |dot(segment direction, line direction)| over the
    curve segments crossing it, mod 2.  Requires a closed weight-one curve
    in a node-free rectangle diagram.
    """
    _require_sweepable(diagram, curve)
    criticals = critical_coordinates(diagram, curve, direction)
    if witness is None:
        witness = default_witness(diagram, curve, direction)
    else:
        witness = Fraction(witness)
        if witness in criticals:
            raise NonGenericWitness(
                f"witness {witness} hits a critical coordinate")
        if not criticals[0] < witness < criticals[-1]:
            raise NonGenericWitness(
                f"witness {witness} lies outside the rectangle")
    t = direction.line_direction
    total = 0
    for a, b, seg_dir in _segments(diagram, curve):
        ca, cb = _axis(a, direction), _axis(b, direction)
        if min(ca, cb) < witness < max(ca, cb):
            total += abs(seg_dir.dot(t))
    return SweepParity(direction, total % 2, witness)


def _solve_mod2_2x2(matrix, rhs):
    a, b = matrix[0]
    c, d = matrix[1]
    det = (a * d - b * c) % 2
    if det == 0:
        return None
    x = (d * rhs[0] - b * rhs[1]) % 2
    y = (-c * rhs[0] + a * rhs[1]) % 2
    return (x, y)


def mod2_class(diagram: BaseDiagram, curve: TropicalCurve) -> Mod2Class:
    """The curve's Lagrangian mod-2 class in the diagram's basis.

    The two sweep parities are the pairings of the class with the sweep
    sphere classes; the coefficients are obtained by solving through the
    intersection form.  For the standard rectangle basis this gives
    (vertical parity, horizontal parity).
    """
    homology = diagram.homology
    if (homology.class_of_horizontal_sweep is None
            or homology.class_of_vertical_sweep is None):
        raise UnsupportedDiagram("diagram carries no sweep class vectors")
    if homology.rank != 2:
        raise UnsupportedDiagram("sweep classes determine the mod-2 class "
                                 "only in a rank-2 basis")
    p_v = sweep_parity(diagram, curve, SweepDirection.VERTICAL).parity
    p_h = sweep_parity(diagram, curve, SweepDirection.HORIZONTAL).parity
    q = homology.intersection_form
    rows = []
    for sweep_vec in (homology.class_of_vertical_sweep,
                      homology.class_of_horizontal_sweep):
        rows.append(tuple(
            sum(sweep_vec[i] * q[i][j] for i in range(2)) % 2
            for j in range(2)))
    solution = _solve_mod2_2x2(rows, (p_v, p_h))
    if solution is None:
        raise UnsupportedDiagram(
            "sweep classes do not determine the mod-2 class "
            "(singular pairing)")
    return Mod2Class(solution, homology.basis_labels)


def pontryagin_square(form: HomologyModel, integral_class) -> int:
    """Q(c, c) mod 4 for an integral lift c; well defined on c mod 2."""
    c = tuple(integral_class)
    if len(c) != form.rank:
        raise InvalidClass(
            f"class vector has length {len(c)}, basis has rank {form.rank}")
    for entry in c:
        if isinstance(entry, bool) or not isinstance(entry, int):
            raise InvalidClass(f"integral lift required, got {entry!r}")
    return form.pairing(c, c) % 4


def audin_check(p2: int, chi: int) -> bool:
    """Whether P2(class) = chi mod 4 (necessary for an embedded
    nonorientable Lagrangian of that Euler characteristic in that class)."""
    return (p2 - chi) % 4 == 0


@dataclass(frozen=True)
class GenusSpectrum:
    """The arithmetic progression {base, base+4, base+8, ...} of realizable
    nonorientable genera above a known minimum."""

    base: int
    step: int = 4

    def __contains__(self, k: int) -> bool:
        return k >= self.base and (k - self.base) % self.step == 0

    def first(self, count: int):
        return [self.base + self.step * i for i in range(count)]

    def __str__(self):
        return f"{{{self.base}, {self.base + self.step}, " \
               f"{self.base + 2 * self.step}, ...}}"


def genus_spectrum(k_min: int) -> GenusSpectrum:
    """The set of genera realizable above the minimal one: cross-cap pairs
    added by a finger move plus surgery raise the genus in steps of 4."""
    if not isinstance(k_min, int) or k_min < 1:
        raise InvalidClass(f"minimal genus must be a positive integer, "
                           f"got {k_min!r}")
    return GenusSpectrum(k_min)

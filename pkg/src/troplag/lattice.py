"""Exact planar lattice geometry.

Integer vectors (edge directions), rational points (positions in a base
diagram), unimodular affine maps (integral affine changes of coordinates),
and the exact segment predicates the rest of the package is built on.

All arithmetic is exact: integer coordinates are Python ints (arbitrary
precision, so overflow cannot occur), rational coordinates are
fractions.Fraction (always reduced, positive denominator).  Floats are
rejected at construction time.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import TroplagError


class DegenerateDirection(TroplagError):
    """A nonzero direction was required but the zero vector was supplied."""


class NonUnimodularMap(TroplagError):
    """The linear part of an affine map must have determinant +1 or -1."""


def _as_fraction(value) -> Fraction:
    """Convert to Fraction, refusing floats (exactness is a hard contract)."""
    if isinstance(value, float):
        raise TypeError("floating point coordinates are not allowed; "
                        "use int, Fraction or a 'p/q' string")
    return Fraction(value)


def _as_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"integer coordinate expected, got {value!r}")
    return value


@dataclass(frozen=True)
class IntVec:
    """An exact integer vector in the plane."""

    x: int
    y: int

    def __post_init__(self):
        _as_int(self.x)
        _as_int(self.y)

    def __add__(self, other: "IntVec") -> "IntVec":
        return IntVec(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "IntVec") -> "IntVec":
        return IntVec(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "IntVec":
        return IntVec(-self.x, -self.y)

    def scaled(self, k: int) -> "IntVec":
        return IntVec(self.x * k, self.y * k)

    def wedge(self, other) -> int:
        """Determinant |self other|; antisymmetric, unimodular-invariant."""
        return self.x * other.y - self.y * other.x

    def dot(self, other) -> int:
        return self.x * other.x + self.y * other.y

    def rot90(self) -> "IntVec":
        """Rotate 90 degrees counterclockwise: (x, y) -> (-y, x)."""
        return IntVec(-self.y, self.x)

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    @property
    def is_primitive(self) -> bool:
        return not self.is_zero and gcd(abs(self.x), abs(self.y)) == 1

    def primitive(self) -> "IntVec":
        """Divide out the gcd, keeping direction and sign."""
        if self.is_zero:
            raise DegenerateDirection("the zero vector has no direction")
        g = gcd(abs(self.x), abs(self.y))
        return IntVec(self.x // g, self.y // g)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class RatVec:
    """An exact rational displacement (difference of two RatPoints)."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _as_fraction(self.x))
        object.__setattr__(self, "y", _as_fraction(self.y))

    def __add__(self, other: "RatVec") -> "RatVec":
        return RatVec(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "RatVec") -> "RatVec":
        return RatVec(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "RatVec":
        return RatVec(-self.x, -self.y)

    def scaled(self, t) -> "RatVec":
        t = _as_fraction(t)
        return RatVec(self.x * t, self.y * t)

    def wedge(self, other) -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other) -> Fraction:
        return self.x * other.x + self.y * other.y

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def primitive_direction(self) -> IntVec:
        """The primitive integer vector pointing the same way."""
        if self.is_zero:
            raise DegenerateDirection("the zero displacement has no direction")
        scale = self.x.denominator * self.y.denominator // gcd(
            self.x.denominator, self.y.denominator)
        return IntVec(int(self.x * scale), int(self.y * scale)).primitive()

    def ratio_along(self, direction: IntVec) -> Fraction | None:
        """The t with self == t*direction, or None if not parallel."""
        if direction.is_zero:
            raise DegenerateDirection("cannot measure along the zero vector")
        if self.wedge(direction) != 0:
            return None
        if direction.x != 0:
            return self.x / direction.x
        return self.y / direction.y

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class RatPoint:
    """An exact rational point in the plane."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _as_fraction(self.x))
        object.__setattr__(self, "y", _as_fraction(self.y))

    def __sub__(self, other: "RatPoint") -> RatVec:
        return RatVec(self.x - other.x, self.y - other.y)

    def translated(self, v) -> "RatPoint":
        return RatPoint(self.x + _as_fraction(v.x), self.y + _as_fraction(v.y))

    def moved(self, direction, t) -> "RatPoint":
        """The point self + t*direction."""
        t = _as_fraction(t)
        return RatPoint(self.x + t * direction.x, self.y + t * direction.y)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def ivec(x, y) -> IntVec:
    return IntVec(_as_int(x), _as_int(y))


def pt(x, y) -> RatPoint:
    return RatPoint(_as_fraction(x), _as_fraction(y))


@dataclass(frozen=True)
class UnimodularAffineMap:
    """An integral affine map x -> L x + t with det L = +-1."""

    linear: tuple[tuple[int, int], tuple[int, int]]
    translation: RatVec

    def __post_init__(self):
        (a, b), (c, d) = self.linear
        for entry in (a, b, c, d):
            _as_int(entry)
        if a * d - b * c not in (1, -1):
            raise NonUnimodularMap(
                f"determinant {a * d - b * c} is not +1 or -1")

    @classmethod
    def identity(cls) -> "UnimodularAffineMap":
        return cls(((1, 0), (0, 1)), RatVec(Fraction(0), Fraction(0)))

    @classmethod
    def of(cls, a, b, c, d, tx=0, ty=0) -> "UnimodularAffineMap":
        return cls(((a, b), (c, d)), RatVec(_as_fraction(tx), _as_fraction(ty)))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.linear
        return a * d - b * c

    def apply(self, obj):
        """Points get linear part plus translation; vectors only the linear part."""
        (a, b), (c, d) = self.linear
        if isinstance(obj, IntVec):
            return IntVec(a * obj.x + b * obj.y, c * obj.x + d * obj.y)
        if isinstance(obj, RatVec):
            return RatVec(a * obj.x + b * obj.y, c * obj.x + d * obj.y)
        if isinstance(obj, RatPoint):
            return RatPoint(a * obj.x + b * obj.y + self.translation.x,
                            c * obj.x + d * obj.y + self.translation.y)
        raise TypeError(f"cannot apply an affine map to {obj!r}")

    def compose(self, other: "UnimodularAffineMap") -> "UnimodularAffineMap":
        """The map sending x to self(other(x))."""
        (a, b), (c, d) = self.linear
        (e, f), (g, h) = other.linear
        linear = ((a * e + b * g, a * f + b * h),
                  (c * e + d * g, c * f + d * h))
        shift = self.apply(other.translation) + self.translation
        return UnimodularAffineMap(linear, shift)

    def inverse(self) -> "UnimodularAffineMap":
        (a, b), (c, d) = self.linear
        det = self.det  # 1/det == det for det in {1, -1}
        linear = ((d * det, -b * det), (-c * det, a * det))
        bare = UnimodularAffineMap(linear, RatVec(Fraction(0), Fraction(0)))
        return UnimodularAffineMap(linear, -bare.apply(self.translation))

    def __str__(self) -> str:
        (a, b), (c, d) = self.linear
        return f"[[{a},{b}],[{c},{d}]]+{self.translation}"


# ---------------------------------------------------------------------------
# Exact segment predicates.
#
# These are the only primitives the validation layers use, so all the sign
# conventions live here.  Everything is on closed segments of RatPoints.
# ---------------------------------------------------------------------------

def orientation(a: RatPoint, b: RatPoint, c: RatPoint) -> int:
    """Sign of the turn a->b->c: +1 left, -1 right, 0 collinear."""
    s = (b - a).wedge(c - a)
    return (s > 0) - (s < 0)


def on_closed_segment(p: RatPoint, a: RatPoint, b: RatPoint) -> bool:
    """Whether p lies on the closed segment [a, b]."""
    if orientation(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def on_open_segment(p: RatPoint, a: RatPoint, b: RatPoint) -> bool:
    """Whether p lies strictly between a and b on the segment."""
    return on_closed_segment(p, a, b) and p != a and p != b


def segment_contact(a: RatPoint, b: RatPoint, c: RatPoint, d: RatPoint):
    """How the closed segments [a,b] and [c,d] meet.

    Returns None if disjoint, the single RatPoint of contact if they meet
    in exactly one point, or the string "overlap" if they share a
    one-dimensional piece.
    """
    u = b - a
    v = d - c
    denom = u.wedge(v)
    w = c - a
    if denom == 0:
        if w.wedge(u) != 0:
            return None          # parallel, distinct lines
        # Collinear: compare parameter intervals along the common line.
        if u.is_zero and v.is_zero:
            return a if a == c else None
        axis = u if not u.is_zero else v
        key = (lambda p: (p - a).dot(axis))
        lo1, hi1 = sorted((key(a), key(b)))
        lo2, hi2 = sorted((key(c), key(d)))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return None
        if lo < hi:
            return "overlap"
        # Touch at a single parameter; reconstruct the point.
        for p in (a, b, c, d):
            if key(p) == lo and on_closed_segment(p, a, b) \
                    and on_closed_segment(p, c, d):
                return p
        return None
    t = w.wedge(v) / denom
    s = w.wedge(u) / denom
    if 0 <= t <= 1 and 0 <= s <= 1:
        return a.moved(u, t)
    return None


def ray_segment_hit(origin: RatPoint, direction: IntVec,
                    a: RatPoint, b: RatPoint):
    """First meeting of the ray origin + t*direction (t > 0) with [a, b].

    Returns (t, point) or None.  Collinear rays are treated as missing the
    segment; callers fire rays from strictly interior points of convex
    polygons, where that case cannot occur against boundary edges.
    """
    v = b - a
    dvec = RatVec(Fraction(direction.x), Fraction(direction.y))
    denom = dvec.wedge(v)
    if denom == 0:
        return None
    w = a - origin
    t = w.wedge(v) / denom
    s = w.wedge(dvec) / denom
    if t > 0 and 0 <= s <= 1:
        return t, origin.moved(direction, t)
    return None


def wedge(u: IntVec, v: IntVec) -> int:
    """u.x*v.y - u.y*v.x."""
    return u.wedge(v)


def primitive_of(v: IntVec) -> IntVec:
    """v divided by gcd(|x|, |y|); raises DegenerateDirection on (0,0)."""
    return v.primitive()


def rot90(v: IntVec) -> IntVec:
    """(x, y) -> (-y, x)."""
    return v.rot90()


def apply_map(m: UnimodularAffineMap, obj):
    """Apply the affine map to a point (with translation) or vector (without)."""
    return m.apply(obj)

"""Shared fixtures: bundled documents, random balanced curves, random
unimodular maps."""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest

from troplag import (
    BoundaryTerminal,
    CurveEnd,
    IntVec,
    InternalEdge,
    RatPoint,
    RatVec,
    TropicalCurve,
    TropicalVertex,
    UnimodularAffineMap,
    rectangle,
    validate,
)
from troplag.lattice import ray_segment_hit
from troplag.textio import parse_document

FIGURES = Path(__file__).resolve().parent.parent / "figures"
GOLDEN = Path(__file__).resolve().parent / "golden"

BUNDLED_DOCS = ["fig1_left.trop", "fig1_right.trop", "fig2_klein.trop",
                "fig3_family.trop", "fig4_squeeze.trop"]


def load_document(name: str):
    return parse_document((FIGURES / name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def bundled_documents():
    return {name: load_document(name) for name in BUNDLED_DOCS}


# ---------------------------------------------------------------------
# Random balanced curves in a rectangle, for oracle/invariance soups.
# Directions are capped at |coordinate| <= 2 so every boundary landing has
# mu in {1, 2}.
# ---------------------------------------------------------------------

DIRECTION_POOL = tuple(
    IntVec(x, y)
    for x in range(-2, 3) for y in range(-2, 3)
    if (x, y) != (0, 0) and gcd(abs(x), abs(y)) == 1)

BALANCED_TRIPLES = tuple(
    (u, v, IntVec(-u.x - v.x, -u.y - v.y))
    for u in DIRECTION_POOL for v in DIRECTION_POOL
    if IntVec(-u.x - v.x, -u.y - v.y) in DIRECTION_POOL
    and u != v and v != IntVec(-u.x - v.x, -u.y - v.y)
    and u != IntVec(-u.x - v.x, -u.y - v.y))

# incoming direction d -> pairs (a, b) with a + b == d, for growing a new
# trivalent vertex at the far end of an edge of direction d.
SPLITS = {}
for _u in DIRECTION_POOL:
    for _v in DIRECTION_POOL:
        _w = IntVec(_u.x + _v.x, _u.y + _v.y)
        if not _w.is_zero and _w.is_primitive and _u != _v:
            SPLITS.setdefault((_w.x, _w.y), []).append((_u, _v))


def _first_boundary_hit(diagram, origin, direction):
    hits = []
    for edge in diagram.boundary_edges:
        hit = ray_segment_hit(origin, direction, edge.start, edge.end)
        if hit is not None:
            hits.append(hit)
    return min(hits, key=lambda h: h[0])


def random_curve(rng: random.Random, max_vertices: int = 6, size: int = 24):
    """A random valid weight-one tropical curve in rectangle(size, size).

    Grows a tree of trivalent vertices from balanced direction triples and
    terminates the remaining rays on the boundary; retries until the result
    validates.  Deterministic for a seeded rng.
    """
    diagram = rectangle(size, size)
    corners = set((v.x, v.y) for v in diagram.polygon_vertices)
    for _ in range(400):
        target = rng.randint(1, max_vertices)
        position = RatPoint(rng.randint(size // 3, 2 * size // 3),
                            rng.randint(size // 3, 2 * size // 3))
        vertices = [TropicalVertex("v0", position)]
        edges = []
        rays = [("v0", d) for d in rng.choice(BALANCED_TRIPLES)]
        counter = 1
        while rays and len(vertices) < target:
            index = rng.randrange(len(rays))
            vid, direction = rays[index]
            splits = SPLITS.get((direction.x, direction.y))
            step = rng.randint(1, 3)
            source = next(v.position for v in vertices if v.id == vid)
            landing_zone = source.moved(direction, step)
            margin = Fraction(2)
            if (not splits
                    or not margin <= landing_zone.x <= size - margin
                    or not margin <= landing_zone.y <= size - margin):
                break  # stop growing; terminate every remaining ray
            rays.pop(index)
            new_id = f"v{counter}"
            counter += 1
            vertices.append(TropicalVertex(new_id, landing_zone))
            edges.append(InternalEdge(f"e{vid}.{new_id}", vid, new_id,
                                      direction))
            a, b = rng.choice(splits)
            rays.append((new_id, a))
            rays.append((new_id, b))
        ends = []
        corner_hit = False
        for i, (vid, direction) in enumerate(rays):
            source = next(v.position for v in vertices if v.id == vid)
            _, landing = _first_boundary_hit(diagram, source, direction)
            if (landing.x, landing.y) in corners:
                corner_hit = True
                break
            ends.append(CurveEnd(f"x{i}", vid, direction,
                                 BoundaryTerminal(landing)))
        if corner_hit:
            continue
        curve = TropicalCurve(vertices, edges, ends, name="random")
        if validate(diagram, curve).passed:
            return diagram, curve
    raise AssertionError("random curve generation failed to converge")


_SHEARS = (((1, 1), (0, 1)), ((1, -1), (0, 1)), ((1, 0), (1, 1)),
           ((1, 0), (-1, 1)), ((0, 1), (1, 0)), ((0, -1), (1, 0)))


def random_unimodular_map(rng: random.Random) -> UnimodularAffineMap:
    m = UnimodularAffineMap.identity()
    for _ in range(rng.randint(1, 4)):
        g = UnimodularAffineMap(rng.choice(_SHEARS),
                                RatVec(Fraction(0), Fraction(0)))
        m = g.compose(m)
    translation = RatVec(Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))),
                         Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))))
    return UnimodularAffineMap(m.linear, translation)

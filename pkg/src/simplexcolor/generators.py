"""Deterministic, seedable generators of test complexes.

Kinds:
  fan               k simplices forming a closed ring around a (d-2)-face
                    (for d=2, k triangles surrounding a central vertex)
  closed-fan        the d=2 ring under its usual name
  tri-tiling        m x m window of the planar triangular lattice
  delaunay2d        Delaunay triangulation of n seeded random grid points,
                    built with exact integer predicates
  freudenthal       vertex-ordering triangulation of an m^d grid,
                    d! simplices per cell
  path              staircase chain of n simplices, dual graph a path
  boundary-abstract the d+2 facets of a (d+1)-simplex, forced into R^d:
                    combinatorially fine, geometrically overlapping, and
                    deliberately unpeelable
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from .errors import InputError, InvariantError
from .geometry import Point
from .model import Complex, Simplex

FAN = "fan"
CLOSED_FAN = "closed-fan"
TRI_TILING = "tri-tiling"
DELAUNAY2D = "delaunay2d"
FREUDENTHAL = "freudenthal"
PATH = "path"
BOUNDARY_ABSTRACT = "boundary-abstract"

KINDS = (FAN, CLOSED_FAN, TRI_TILING, DELAUNAY2D, FREUDENTHAL, PATH, BOUNDARY_ABSTRACT)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    dimension: int
    size: int = 1
    seed: int = 0


def generate(spec: GeneratorSpec) -> Complex:
    d, size = spec.dimension, spec.size
    if spec.kind == FAN:
        if d < 2:
            raise InputError("fan requires dimension >= 2")
        if size < 3:
            raise InputError("fan requires at least 3 simplices")
        return _ring(d, size)
    if spec.kind == CLOSED_FAN:
        if d != 2:
            raise InputError("closed-fan is a planar kind (dimension 2)")
        if size < 3:
            raise InputError("closed-fan requires at least 3 triangles")
        return _ring(2, size)
    if spec.kind == TRI_TILING:
        if d != 2:
            raise InputError("tri-tiling is a planar kind (dimension 2)")
        if size < 1:
            raise InputError("tri-tiling requires at least 1 row")
        return _tri_tiling(size)
    if spec.kind == DELAUNAY2D:
        if d != 2:
            raise InputError("delaunay2d is a planar kind (dimension 2)")
        if size < 3:
            raise InputError("delaunay2d requires at least 3 points")
        return _delaunay2d(size, spec.seed)
    if spec.kind == FREUDENTHAL:
        if d < 1:
            raise InputError("freudenthal requires dimension >= 1")
        if size < 1:
            raise InputError("freudenthal requires at least 1 cell per side")
        return _freudenthal(d, size)
    if spec.kind == PATH:
        if d < 1:
            raise InputError("path requires dimension >= 1")
        if size < 1:
            raise InputError("path requires at least 1 simplex")
        return _path(d, size)
    if spec.kind == BOUNDARY_ABSTRACT:
        if d < 1:
            raise InputError("boundary-abstract requires dimension >= 1")
        return _boundary_abstract(d)
    raise InputError(f"unknown generator kind {spec.kind!r}")


# ---------------------------------------------------------------------------
# Ring (fan) around a (d-2)-dimensional hinge


def _ring_directions(k: int) -> list[tuple[Fraction, Fraction]]:
    """k rational directions in strict ccw order around the full circle,
    with consecutive angular gaps below pi."""
    denom = 1 << max(13, (8 * k).bit_length())
    dirs = []
    for i in range(k):
        theta = -math.pi + 2.0 * math.pi * (i + 0.5) / k
        t = Fraction(round(math.tan(theta / 2.0) * denom), denom)
        dirs.append((1 - t * t, 2 * t))  # same direction as (cos, sin)
    for i in range(k):
        a, b = dirs[i], dirs[(i + 1) % k]
        if a[0] * b[1] - a[1] * b[0] <= 0:
            raise InvariantError("ring directions out of ccw order")
    return dirs


def _ring(d: int, k: int) -> Complex:
    """k d-simplices glued in a cycle around a common (d-2)-face."""
    hinge = [tuple(Fraction(0) for _ in range(d))]
    for j in range(d - 2):
        hinge.append(tuple(Fraction(1 if i == j else 0) for i in range(d)))
    ring = [
        tuple([Fraction(0)] * (d - 2) + [cx, sx])
        for cx, sx in _ring_directions(k)
    ]
    vertices = tuple(Point(p) for p in hinge + ring)
    nh = len(hinge)
    hinge_ids = tuple(range(nh))
    simplices = tuple(
        Simplex(tuple(sorted(hinge_ids + (nh + i, nh + (i + 1) % k))))
        for i in range(k)
    )
    return Complex(d, vertices, simplices)


# ---------------------------------------------------------------------------
# Triangular lattice window


def _tri_tiling(m: int) -> Complex:
    def vid(i, j):
        return j * (m + 1) + i

    vertices = tuple(
        Point((Fraction(i) + Fraction(j, 2), Fraction(j)))
        for j in range(m + 1)
        for i in range(m + 1)
    )
    simplices = []
    for j in range(m):
        for i in range(m):
            up = (vid(i, j), vid(i + 1, j), vid(i, j + 1))
            down = (vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1))
            simplices.append(Simplex(tuple(sorted(up))))
            simplices.append(Simplex(tuple(sorted(down))))
    return Complex(2, vertices, tuple(simplices))


# ---------------------------------------------------------------------------
# Freudenthal (vertex-ordering) triangulation of a grid


def _freudenthal(d: int, m: int) -> Complex:
    side = m + 1
    def vid(coords):
        acc = 0
        for c in coords:
            acc = acc * side + c
        return acc

    vertices = tuple(
        Point(tuple(Fraction(c) for c in coords))
        for coords in product(range(side), repeat=d)
    )
    simplices = []
    for corner in product(range(m), repeat=d):
        for perm in permutations(range(d)):
            walk = [corner]
            for axis in perm:
                step = list(walk[-1])
                step[axis] += 1
                walk.append(tuple(step))
            simplices.append(Simplex(tuple(sorted(vid(c) for c in walk))))
    return Complex(d, vertices, tuple(simplices))


# ---------------------------------------------------------------------------
# Staircase path


def _path(d: int, n: int) -> Complex:
    walk = [tuple(0 for _ in range(d))]
    for j in range(n + d - 1):
        step = list(walk[-1])
        step[j % d] += 1
        walk.append(tuple(step))
    vertices = tuple(Point(tuple(Fraction(c) for c in p)) for p in walk)
    simplices = tuple(
        Simplex(tuple(range(j, j + d + 1))) for j in range(n)
    )
    return Complex(d, vertices, simplices)


# ---------------------------------------------------------------------------
# Abstract boundary of a (d+1)-simplex


def _boundary_abstract(d: int) -> Complex:
    pts = [tuple(Fraction(0) for _ in range(d))]
    for j in range(d):
        pts.append(tuple(Fraction(1 if i == j else 0) for i in range(d)))
    pts.append(tuple(Fraction(1, d + 1) for _ in range(d)))
    vertices = tuple(Point(p) for p in pts)
    simplices = tuple(
        Simplex(ids) for ids in combinations(range(d + 2), d + 1)
    )
    return Complex(d, vertices, simplices)


# ---------------------------------------------------------------------------
# Exact incremental Delaunay triangulation

_GRID = 1 << 20
# Far corners, outside the circumcircle of any non-degenerate triple of grid
# points (circumradius is bounded by (sqrt(2) * 2^20)^3 / (4 * 1/2) < 2^63).
_FAR = 1 << 80


def _orient2(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _incircle_strict(a, b, c, p) -> bool:
    """p strictly inside the circumcircle of ccw triangle (a, b, c)."""
    ax, ay = a[0] - p[0], a[1] - p[1]
    bx, by = b[0] - p[0], b[1] - p[1]
    cx, cy = c[0] - p[0], c[1] - p[1]
    det = (
        (ax * ax + ay * ay) * (bx * cy - by * cx)
        - (bx * bx + by * by) * (ax * cy - ay * cx)
        + (cx * cx + cy * cy) * (ax * by - ay * bx)
    )
    return det > 0


class _Triangulation:
    def __init__(self, points):
        self.points = [(-_FAR, -_FAR), (3 * _FAR, -_FAR), (-_FAR, 3 * _FAR)]
        self.points.extend(points)
        self.tris: dict[int, tuple[int, int, int]] = {}
        self.edge_owner: dict[tuple[int, int], int] = {}
        self.next_id = 0
        self.hint = self._add(0, 1, 2)

    def _add(self, a, b, c) -> int:
        tid = self.next_id
        self.next_id += 1
        self.tris[tid] = (a, b, c)
        self.edge_owner[(a, b)] = tid
        self.edge_owner[(b, c)] = tid
        self.edge_owner[(c, a)] = tid
        return tid

    def _remove(self, tid):
        a, b, c = self.tris.pop(tid)
        for e in ((a, b), (b, c), (c, a)):
            del self.edge_owner[e]

    def _locate(self, p) -> int:
        tid = self.hint if self.hint in self.tris else next(iter(self.tris))
        pts = self.points
        while True:
            a, b, c = self.tris[tid]
            moved = False
            for u, v in ((a, b), (b, c), (c, a)):
                if _orient2(pts[u], pts[v], p) < 0:
                    tid = self.edge_owner[(v, u)]
                    moved = True
                    break
            if not moved:
                return tid

    def insert(self, pid) -> bool:
        """Bowyer-Watson insertion; returns False when the point would
        create a degenerate triangle (exactly on an existing edge line
        through two cavity-boundary vertices) and is skipped."""
        pts = self.points
        p = pts[pid]
        start = self._locate(p)
        cavity = {start}
        stack = [start]
        while stack:
            tid = stack.pop()
            a, b, c = self.tris[tid]
            for u, v in ((a, b), (b, c), (c, a)):
                nb = self.edge_owner.get((v, u))
                if nb is None or nb in cavity:
                    continue
                na, nbv, nc = self.tris[nb]
                if _incircle_strict(pts[na], pts[nbv], pts[nc], p):
                    cavity.add(nb)
                    stack.append(nb)
        boundary = []
        for tid in cavity:
            a, b, c = self.tris[tid]
            for u, v in ((a, b), (b, c), (c, a)):
                if self.edge_owner.get((v, u)) not in cavity:
                    boundary.append((u, v))
        if any(_orient2(pts[u], pts[v], p) <= 0 for u, v in boundary):
            return False
        for tid in sorted(cavity):
            self._remove(tid)
        for u, v in boundary:
            self.hint = self._add(pid, u, v)
        return True


def _delaunay2d(n: int, seed: int) -> Complex:
    rng = random.Random(seed)
    raw: list[tuple[int, int]] = []
    seen = set()
    attempts = 0
    while len(raw) < n:
        attempts += 1
        if attempts > 20 * n + 100:
            raise InputError("could not draw enough distinct points")
        p = (rng.randrange(_GRID), rng.randrange(_GRID))
        if p not in seen:
            seen.add(p)
            raw.append(p)
    raw.sort()

    tri = _Triangulation(raw)
    for i in range(len(raw)):
        tri.insert(3 + i)

    real = [
        ids for ids in tri.tris.values() if min(ids) >= 3
    ]
    if not real:
        raise InputError("degenerate point set: no triangle survives")
    used = sorted({v for ids in real for v in ids})
    remap = {v: i for i, v in enumerate(used)}
    vertices = tuple(
        Point((Fraction(tri.points[v][0]), Fraction(tri.points[v][1])))
        for v in used
    )
    simplices = tuple(
        Simplex(tuple(sorted(remap[v] for v in ids))) for ids in sorted(real)
    )
    return Complex(2, vertices, simplices)

"""Data model, validation and serialization for pure d-simplex complexes.

A complex stores only its top-dimensional simplices; vertex identity is by
index, and two simplices share a facet exactly when they share d vertex
indices.  Coordinates are exact rationals, and the JSON form is bit-exact
("p/q" strings), so load(save(c)) == c.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import InputError
from .geometry import Point, orientation, rational

JSON_FORMAT = "json"
OFF_FORMAT = "off"

COMBINATORIAL = "combinatorial"
GEOMETRIC_STRICT = "geometric-strict"


@dataclass(frozen=True, order=True)
class Facet:
    """A (d-1)-face: d strictly increasing vertex indices."""

    vertex_ids: tuple[int, ...]

    def __post_init__(self):
        ids = tuple(int(i) for i in self.vertex_ids)
        object.__setattr__(self, "vertex_ids", ids)
        if any(a >= b for a, b in zip(ids, ids[1:])):
            raise InputError(f"facet ids must be strictly increasing: {ids}")


@dataclass(frozen=True, order=True)
class Simplex:
    """A d-simplex: d+1 strictly increasing vertex indices."""

    vertex_ids: tuple[int, ...]

    def __post_init__(self):
        ids = tuple(int(i) for i in self.vertex_ids)
        object.__setattr__(self, "vertex_ids", ids)
        if any(a >= b for a, b in zip(ids, ids[1:])):
            raise InputError(f"simplex ids must be strictly increasing: {ids}")

    def facets(self) -> tuple[Facet, ...]:
        ids = self.vertex_ids
        return tuple(
            Facet(ids[:k] + ids[k + 1:]) for k in range(len(ids))
        )


@dataclass(frozen=True)
class Complex:
    """A pure d-simplex complex: vertex table plus top-dimensional simplices."""

    dimension: int
    vertices: tuple[Point, ...]
    simplices: tuple[Simplex, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self,
            "simplices",
            tuple(s if isinstance(s, Simplex) else Simplex(tuple(s)) for s in self.simplices),
        )
        d = self.dimension
        if d < 1:
            raise InputError(f"dimension must be >= 1, got {d}")
        for i, p in enumerate(self.vertices):
            if p.dim != d:
                raise InputError(f"vertex {i} has dimension {p.dim}, expected {d}")
        n = len(self.vertices)
        for i, s in enumerate(self.simplices):
            if len(s.vertex_ids) != d + 1:
                raise InputError(
                    f"simplex {i} has {len(s.vertex_ids)} vertices, expected {d + 1}"
                )
            if s.vertex_ids[0] < 0 or s.vertex_ids[-1] >= n:
                raise InputError(f"simplex {i} references a missing vertex")

    def simplex_points(self, i: int) -> list[Point]:
        return [self.vertices[v] for v in self.simplices[i].vertex_ids]


@dataclass(frozen=True)
class Coloring:
    """One color in {0..d} per simplex; witnesses a (d+1)-coloring."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))


@dataclass(frozen=True)
class Issue:
    code: str
    message: str
    where: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    level: str
    issues: tuple[Issue, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.issues

    def summary(self) -> str:
        head = f"{self.level}: {'ok' if self.ok else f'{len(self.issues)} issue(s)'}"
        lines = [head] + [f"  [{i.code}] {i.message}" for i in self.issues]
        lines += [f"  (note) {n}" for n in self.notes]
        return "\n".join(lines)


def facet_multiplicity(c: Complex) -> dict[Facet, int]:
    """How many simplices own each facet: 1 = exposed, 2 = glued."""
    mult: dict[Facet, int] = {}
    for s in c.simplices:
        for f in s.facets():
            mult[f] = mult.get(f, 0) + 1
    return mult


def _bbox(pts: list[Point]):
    lo = tuple(min(p[i] for p in pts) for i in range(pts[0].dim))
    hi = tuple(max(p[i] for p in pts) for i in range(pts[0].dim))
    return lo, hi


def _cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _separating_axes(pts_a: list[Point], pts_b: list[Point], d: int):
    """Candidate separating directions for two simplices (SAT)."""
    axes = []
    if d == 1:
        axes.append((Fraction(1),))
        return axes
    for pts in (pts_a, pts_b):
        if d == 2:
            for i in range(3):
                p, q = pts[i], pts[(i + 1) % 3]
                axes.append((q[1] - p[1], p[0] - q[0]))
        else:
            for skip in range(4):
                tri = [pts[k] for k in range(4) if k != skip]
                u = tuple(tri[1][i] - tri[0][i] for i in range(3))
                v = tuple(tri[2][i] - tri[0][i] for i in range(3))
                axes.append(_cross3(u, v))
    if d == 3:
        edges_a = [
            tuple(q[i] - p[i] for i in range(3))
            for p, q in combinations(pts_a, 2)
        ]
        edges_b = [
            tuple(q[i] - p[i] for i in range(3))
            for p, q in combinations(pts_b, 2)
        ]
        for ea in edges_a:
            for eb in edges_b:
                axes.append(_cross3(ea, eb))
    return [a for a in axes if any(a)]


def _interiors_overlap(pts_a: list[Point], pts_b: list[Point], d: int) -> bool:
    """Exact SAT: convex simplices have disjoint interiors iff some axis
    separates them in the closed sense (touching allowed)."""
    for axis in _separating_axes(pts_a, pts_b, d):
        proj_a = [sum(axis[i] * p[i] for i in range(d)) for p in pts_a]
        proj_b = [sum(axis[i] * p[i] for i in range(d)) for p in pts_b]
        if max(proj_a) <= min(proj_b) or max(proj_b) <= min(proj_a):
            return False
    return True


def validate(c: Complex, level: str = COMBINATORIAL) -> ValidationReport:
    """Check the complex invariants; never raises, returns a report.

    combinatorial: non-degenerate simplices, facet multiplicity <= 2, no
    duplicate simplices, distinct coordinates for distinct vertex ids.
    geometric-strict: additionally pairwise interior-disjointness (d <= 3).
    """
    if level not in (COMBINATORIAL, GEOMETRIC_STRICT):
        raise InputError(f"unknown validation level {level!r}")
    issues: list[Issue] = []
    notes: list[str] = []
    d = c.dimension

    seen: dict[tuple[int, ...], int] = {}
    for i, s in enumerate(c.simplices):
        if s.vertex_ids in seen:
            issues.append(
                Issue("duplicate-simplex", f"simplices {seen[s.vertex_ids]} and {i} are identical",
                      (seen[s.vertex_ids], i))
            )
        else:
            seen[s.vertex_ids] = i

    coords_seen: dict[tuple, int] = {}
    for i, p in enumerate(c.vertices):
        if p.coords in coords_seen:
            issues.append(
                Issue("coincident-vertices",
                      f"vertices {coords_seen[p.coords]} and {i} share coordinates",
                      (coords_seen[p.coords], i))
            )
        else:
            coords_seen[p.coords] = i

    degenerate = []
    for i in range(len(c.simplices)):
        if orientation(c.simplex_points(i), d) == 0:
            degenerate.append(i)
            issues.append(Issue("degenerate-simplex", f"simplex {i} is affinely degenerate", (i,)))

    owners: dict[Facet, list[int]] = {}
    for i, s in enumerate(c.simplices):
        for f in s.facets():
            owners.setdefault(f, []).append(i)
    for f, own in owners.items():
        if len(own) > 2:
            issues.append(
                Issue("overglued-facet",
                      f"facet {f.vertex_ids} shared by {len(own)} simplices",
                      tuple(own))
            )

    if level == GEOMETRIC_STRICT:
        if d > 3:
            notes.append(f"interior-overlap check skipped for dimension {d} (supported up to 3)")
        else:
            boxes = []
            for i in range(len(c.simplices)):
                if i in degenerate:
                    continue
                pts = c.simplex_points(i)
                boxes.append((i, pts, *_bbox(pts)))
            boxes.sort(key=lambda entry: entry[2])
            for a in range(len(boxes)):
                i, pts_i, lo_i, hi_i = boxes[a]
                for b in range(a + 1, len(boxes)):
                    j, pts_j, lo_j, hi_j = boxes[b]
                    if lo_j[0] >= hi_i[0]:
                        break
                    if any(lo_j[k] >= hi_i[k] or lo_i[k] >= hi_j[k] for k in range(d)):
                        continue
                    if _interiors_overlap(pts_i, pts_j, d):
                        pair = (min(i, j), max(i, j))
                        issues.append(
                            Issue("interior-overlap",
                                  f"simplices {pair[0]} and {pair[1]} have overlapping interiors",
                                  pair)
                        )

    return ValidationReport(level, tuple(issues), tuple(notes))


# ---------------------------------------------------------------------------
# Serialization


def _coord_to_json(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def complex_to_dict(c: Complex) -> dict:
    return {
        "dimension": c.dimension,
        "vertices": [[_coord_to_json(x) for x in p.coords] for p in c.vertices],
        "simplices": [list(s.vertex_ids) for s in c.simplices],
    }


def complex_from_dict(data: dict) -> Complex:
    for key in ("dimension", "vertices", "simplices"):
        if key not in data:
            raise InputError(f"complex JSON is missing the {key!r} field")
    d = data["dimension"]
    if not isinstance(d, int):
        raise InputError("'dimension' must be an integer")
    try:
        vertices = tuple(
            Point(tuple(rational(x) for x in row)) for row in data["vertices"]
        )
        simplices = tuple(Simplex(tuple(row)) for row in data["simplices"])
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad complex JSON: {exc}") from exc
    return Complex(d, vertices, simplices)


def coloring_to_dict(col: Coloring) -> dict:
    return {"colors": list(col.colors)}


def coloring_from_dict(data: dict) -> Coloring:
    if "colors" not in data:
        raise InputError("coloring JSON is missing the 'colors' field")
    return Coloring(tuple(data["colors"]))


def _load_json(path: str) -> Complex:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return complex_from_dict(data)


def _save_json(c: Complex, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(complex_to_dict(c), fh, separators=(",", ":"))
        fh.write("\n")


def _parse_off_number(token: str, path: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{path}:{lineno}: bad coordinate {token!r}") from exc


def _load_off(path: str) -> Complex:
    """OFF import, restricted to planar triangle meshes (dimension 2).

    Vertex lines may carry 2 or 3 coordinates; a third coordinate must be
    exactly zero.  Faces must all be triangles.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = [(n + 1, ln.split("#", 1)[0].strip()) for n, ln in enumerate(fh)]
    lines = [(n, ln) for n, ln in lines if ln]
    if not lines or lines[0][1].upper() != "OFF":
        raise InputError(f"{path}: not an OFF file (missing OFF header)")
    if len(lines) < 2:
        raise InputError(f"{path}: truncated OFF file")
    counts = lines[1][1].split()
    if len(counts) < 2:
        raise InputError(f"{path}:{lines[1][0]}: expected vertex and face counts")
    try:
        nv, nf = int(counts[0]), int(counts[1])
    except ValueError as exc:
        raise InputError(f"{path}:{lines[1][0]}: bad counts line") from exc
    body = lines[2:]
    if len(body) < nv + nf:
        raise InputError(f"{path}: expected {nv} vertex and {nf} face lines")
    vertices = []
    for lineno, ln in body[:nv]:
        tokens = ln.split()
        if len(tokens) not in (2, 3):
            raise InputError(f"{path}:{lineno}: expected 2 or 3 coordinates")
        coords = [_parse_off_number(t, path, lineno) for t in tokens]
        if len(coords) == 3:
            if coords[2] != 0:
                raise InputError(f"{path}:{lineno}: nonplanar vertex (z != 0); only planar triangle meshes are supported")
            coords = coords[:2]
        vertices.append(Point(tuple(coords)))
    simplices = []
    for lineno, ln in body[nv:nv + nf]:
        tokens = ln.split()
        try:
            k = int(tokens[0])
            ids = [int(t) for t in tokens[1:1 + k]]
        except (ValueError, IndexError) as exc:
            raise InputError(f"{path}:{lineno}: bad face line") from exc
        if k != 3:
            raise InputError(f"{path}:{lineno}: face with {k} vertices; only triangles are accepted")
        if len(set(ids)) != 3:
            raise InputError(f"{path}:{lineno}: face repeats a vertex")
        simplices.append(Simplex(tuple(sorted(ids))))
    return Complex(2, tuple(vertices), tuple(simplices))


def _off_coord(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _save_off(c: Complex, path: str) -> None:
    if c.dimension != 2:
        raise InputError("OFF export supports only dimension-2 complexes")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("OFF\n")
        fh.write(f"{len(c.vertices)} {len(c.simplices)} 0\n")
        for p in c.vertices:
            fh.write(f"{_off_coord(p[0])} {_off_coord(p[1])} 0\n")
        for s in c.simplices:
            fh.write("3 " + " ".join(str(i) for i in s.vertex_ids) + "\n")


def load(path: str, format: str = JSON_FORMAT) -> Complex:
    if format == JSON_FORMAT:
        return _load_json(path)
    if format == OFF_FORMAT:
        return _load_off(path)
    raise InputError(f"unknown format {format!r}")


def save(c: Complex, path: str, format: str = JSON_FORMAT) -> None:
    if format == JSON_FORMAT:
        _save_json(c, path)
    elif format == OFF_FORMAT:
        _save_off(c, path)
    else:
        raise InputError(f"unknown format {format!r}")


def save_coloring(col: Coloring, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(coloring_to_dict(col), fh, separators=(",", ":"))
        fh.write("\n")


def load_coloring(path: str) -> Coloring:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return coloring_from_dict(data)

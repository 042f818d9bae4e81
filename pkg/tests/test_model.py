import json
import random
from fractions import Fraction

import pytest

from simplexcolor.errors import InputError
from simplexcolor.geometry import point
from simplexcolor.model import (
    COMBINATORIAL,
    GEOMETRIC_STRICT,
    Coloring,
    Complex,
    Facet,
    Simplex,
    facet_multiplicity,
    load,
    load_coloring,
    save,
    save_coloring,
    validate,
)


def unit_triangle():
    return Complex(2, (point(0, 0), point(1, 0), point(0, 1)), (Simplex((0, 1, 2)),))


def two_glued_triangles():
    verts = (point(0, 0), point(1, 0), point(0, 1), point(1, 1))
    return Complex(2, verts, (Simplex((0, 1, 2)), Simplex((1, 2, 3))))


def fan_k3():
    # Three triangles sharing and surrounding a central vertex.
    verts = (point(0, 0), point(2, 0), point(-1, 2), point(-1, -2))
    return Complex(2, verts, (Simplex((0, 1, 2)), Simplex((0, 2, 3)), Simplex((0, 1, 3))))


def tetra_boundary_in_plane():
    # Boundary of a tetrahedron forced into R^2: combinatorially fine,
    # geometrically overlapping.
    verts = (point(0, 0), point(4, 0), point(0, 4), point(1, 1))
    simplices = tuple(
        Simplex(ids) for ids in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
    )
    return Complex(2, verts, simplices)


class TestStructure:
    def test_simplex_ids_must_increase(self):
        with pytest.raises(InputError):
            Simplex((2, 1, 3))
        with pytest.raises(InputError):
            Simplex((1, 1, 2))

    def test_facets_of_simplex(self):
        s = Simplex((0, 2, 5))
        assert [f.vertex_ids for f in s.facets()] == [(2, 5), (0, 5), (0, 2)]

    def test_vertex_reference_checked(self):
        with pytest.raises(InputError):
            Complex(2, (point(0, 0), point(1, 0)), (Simplex((0, 1, 2)),))

    def test_vertex_dimension_checked(self):
        with pytest.raises(InputError):
            Complex(2, (point(0, 0, 0),), ())


class TestValidate:
    def test_single_triangle_valid(self):
        assert validate(unit_triangle(), COMBINATORIAL).ok
        assert validate(unit_triangle(), GEOMETRIC_STRICT).ok

    def test_two_glued_triangles_valid(self):
        c = two_glued_triangles()
        assert validate(c, GEOMETRIC_STRICT).ok
        mult = facet_multiplicity(c)
        assert mult[Facet((1, 2))] == 2

    def test_degenerate_simplex_reported(self):
        c = Complex(2, (point(0, 0), point(1, 0), point(2, 0)), (Simplex((0, 1, 2)),))
        rep = validate(c)
        assert not rep.ok
        assert any(i.code == "degenerate-simplex" for i in rep.issues)

    def test_overglued_facet_reported(self):
        verts = (point(0, 0), point(1, 0), point(0, 1), point(1, 1), point(-1, -1))
        c = Complex(2, verts, (Simplex((0, 1, 2)), Simplex((1, 2, 3)), Simplex((1, 2, 4))))
        rep = validate(c)
        assert any(i.code == "overglued-facet" for i in rep.issues)

    def test_duplicate_simplex_reported(self):
        c = Complex(
            2,
            (point(0, 0), point(1, 0), point(0, 1)),
            (Simplex((0, 1, 2)), Simplex((0, 1, 2))),
        )
        rep = validate(c)
        assert any(i.code == "duplicate-simplex" for i in rep.issues)

    def test_coincident_vertices_reported(self):
        c = Complex(
            2,
            (point(0, 0), point(1, 0), point(0, 1), point(1, 0)),
            (Simplex((0, 1, 2)),),
        )
        rep = validate(c)
        assert any(i.code == "coincident-vertices" for i in rep.issues)

    def test_abstract_tetra_boundary_overlaps_in_plane(self):
        c = tetra_boundary_in_plane()
        assert validate(c, COMBINATORIAL).ok
        rep = validate(c, GEOMETRIC_STRICT)
        assert any(i.code in ("interior-overlap", "degenerate-simplex") for i in rep.issues)

    def test_combinatorial_verdict_unchanged_by_level(self):
        c = tetra_boundary_in_plane()
        comb = validate(c, COMBINATORIAL)
        strict = validate(c, GEOMETRIC_STRICT)
        comb_codes = {i.code for i in comb.issues}
        strict_comb_codes = {
            i.code for i in strict.issues if i.code != "interior-overlap"
        }
        assert comb_codes == strict_comb_codes

    def test_unknown_level_rejected(self):
        with pytest.raises(InputError):
            validate(unit_triangle(), "sloppy")

    def test_3d_overlap_detected(self):
        # A small tetrahedron strictly inside a big one (no shared ids).
        verts = (
            point(0, 0, 0), point(6, 0, 0), point(0, 6, 0), point(0, 0, 6),
            point(1, 1, 1), point(2, 1, 1), point(1, 2, 1), point(1, 1, 2),
        )
        c = Complex(3, verts, (Simplex((0, 1, 2, 3)), Simplex((4, 5, 6, 7))))
        rep = validate(c, GEOMETRIC_STRICT)
        assert any(i.code == "interior-overlap" for i in rep.issues)

    def test_3d_glued_tetra_not_flagged(self):
        verts = (
            point(0, 0, 0), point(1, 0, 0), point(0, 1, 0),
            point(0, 0, 1), point(0, 0, -1),
        )
        c = Complex(3, verts, (Simplex((0, 1, 2, 3)), Simplex((0, 1, 2, 4))))
        assert validate(c, GEOMETRIC_STRICT).ok


def oracle_triangles_overlap(t1, t2):
    """Independent open-interior overlap test for two 2D triangles.

    Interiors intersect iff some edge pair crosses properly, or one
    triangle's vertex lies strictly inside the other, or they coincide
    partially (detected by midpoint-of-overlap probing of edge pairs).
    """

    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (v > 0) - (v < 0)

    def strictly_inside(p, tri):
        s = {orient(tri[i], tri[(i + 1) % 3], p) for i in range(3)}
        return s == {1} or s == {-1}

    def proper_cross(a, b, c, d):
        return (
            orient(a, b, c) * orient(a, b, d) < 0
            and orient(c, d, a) * orient(c, d, b) < 0
        )

    for i in range(3):
        for j in range(3):
            if proper_cross(t1[i], t1[(i + 1) % 3], t2[j], t2[(j + 1) % 3]):
                return True
    for p in t1:
        if strictly_inside(p, t2):
            return True
    for p in t2:
        if strictly_inside(p, t1):
            return True
    # Centroid probes catch identical/nested-with-touching cases.
    c1 = tuple(sum(v[i] for v in t1) / 3 for i in range(2))
    c2 = tuple(sum(v[i] for v in t2) / 3 for i in range(2))
    return strictly_inside(c1, t2) or strictly_inside(c2, t1)


def test_overlap_check_matches_independent_oracle():
    rng = random.Random(7)
    checked = 0
    for _ in range(300):
        raw = [
            (Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))
            for _ in range(6)
        ]
        t1, t2 = raw[:3], raw[3:]

        def orient(a, b, c):
            return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

        if orient(*t1) == 0 or orient(*t2) == 0:
            continue
        if len({p for p in raw}) != 6:
            continue
        verts = tuple(point(x, y) for x, y in raw)
        c = Complex(2, verts, (Simplex((0, 1, 2)), Simplex((3, 4, 5))))
        rep = validate(c, GEOMETRIC_STRICT)
        flagged = any(i.code == "interior-overlap" for i in rep.issues)
        assert flagged == oracle_triangles_overlap(t1, t2), (t1, t2)
        checked += 1
    assert checked > 150


class TestFacetMultiplicity:
    def test_single_simplex_all_exposed(self):
        mult = facet_multiplicity(unit_triangle())
        assert sorted(mult.values()) == [1, 1, 1]

    def test_single_tetrahedron(self):
        c = Complex(
            3,
            (point(0, 0, 0), point(1, 0, 0), point(0, 1, 0), point(0, 0, 1)),
            (Simplex((0, 1, 2, 3)),),
        )
        assert sorted(facet_multiplicity(c).values()) == [1, 1, 1, 1]

    def test_two_glued(self):
        mult = facet_multiplicity(two_glued_triangles())
        assert sorted(mult.values()) == [1, 1, 1, 1, 2]

    def test_fan_of_three(self):
        mult = facet_multiplicity(fan_k3())
        interior = [f for f, m in mult.items() if m == 2]
        boundary = [f for f, m in mult.items() if m == 1]
        assert len(interior) == 3 and len(boundary) == 3
        assert all(0 in f.vertex_ids for f in interior)


class TestSerialization:
    def test_json_single_triangle(self, tmp_path):
        p = tmp_path / "tri.json"
        p.write_text(
            json.dumps(
                {
                    "dimension": 2,
                    "vertices": [[0, 0], ["1/1", 0], [0, "1/3"]],
                    "simplices": [[0, 1, 2]],
                }
            )
        )
        c = load(str(p))
        assert c.dimension == 2
        assert c.vertices[2].coords == (Fraction(0), Fraction(1, 3))
        assert len(c.simplices) == 1

    def test_round_trip_exact(self, tmp_path):
        verts = (
            point(Fraction(1, 3), Fraction(-7, 11)),
            point(2, 0),
            point(0, Fraction(22, 7)),
        )
        c = Complex(2, verts, (Simplex((0, 1, 2)),))
        path = str(tmp_path / "c.json")
        save(c, path)
        assert load(path) == c

    def test_round_trip_bytes_stable(self, tmp_path):
        c = two_glued_triangles()
        p1, p2 = str(tmp_path / "a.json"), str(tmp_path / "b.json")
        save(c, p1)
        save(load(p1), p2)
        assert open(p1, "rb").read() == open(p2, "rb").read()

    def test_missing_dimension_named(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text(json.dumps({"vertices": [], "simplices": []}))
        with pytest.raises(InputError, match="dimension"):
            load(str(p))

    def test_json_syntax_error_positioned(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"dimension": 2,,}')
        with pytest.raises(InputError, match="line 1"):
            load(str(p))

    def test_coloring_round_trip(self, tmp_path):
        col = Coloring((0, 2, 1))
        path = str(tmp_path / "col.json")
        save_coloring(col, path)
        assert load_coloring(path) == col

    def test_off_import(self, tmp_path):
        p = tmp_path / "mesh.off"
        p.write_text(
            "OFF\n4 2 0\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n3 0 1 2\n3 1 3 2\n"
        )
        c = load(str(p), format="off")
        assert c.dimension == 2
        assert len(c.simplices) == 2
        assert validate(c, GEOMETRIC_STRICT).ok

    def test_off_rejects_quads(self, tmp_path):
        p = tmp_path / "quad.off"
        p.write_text("OFF\n4 1 0\n0 0\n1 0\n1 1\n0 1\n4 0 1 2 3\n")
        with pytest.raises(InputError, match="triangle"):
            load(str(p), format="off")

    def test_off_rejects_nonplanar(self, tmp_path):
        p = tmp_path / "solid.off"
        p.write_text("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 1\n3 0 1 2\n")
        with pytest.raises(InputError, match="planar"):
            load(str(p), format="off")

    def test_off_round_trip(self, tmp_path):
        c = two_glued_triangles()
        path = str(tmp_path / "c.off")
        save(c, path, format="off")
        assert load(path, format="off") == c

    def test_unknown_format(self, tmp_path):
        with pytest.raises(InputError):
            load(str(tmp_path / "x"), format="stl")

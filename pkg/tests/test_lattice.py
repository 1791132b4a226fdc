import random
from fractions import Fraction

import pytest

from tripatch.errors import Gap, NonFaceIntersection, NotTrigonalSupport, Overlap
from tripatch.lattice import (
    LatticePolygon,
    Subdivision,
    boundary_middle_count,
    height,
    interior_count,
    moment_map,
    trigonal_triangle,
    validate_subdivision,
)


def poly(*pts):
    return LatticePolygon(pts)


class TestCounts:
    def test_interior_spec_examples(self):
        assert interior_count(poly((0, 0), (0, 3), (3, 0))) == 1
        assert interior_count(poly((0, 0), (1, 0), (0, 1))) == 0
        for n in (1, 2, 3, 4):
            assert interior_count(trigonal_triangle(n)) == 3 * n - 2

    def test_boundary_middle_spec_examples(self):
        assert boundary_middle_count(poly((0, 0), (0, 3), (3, 0))) == 4
        assert boundary_middle_count(poly((0, 2), (1, 0), (2, 0))) == 1
        for n in (1, 2, 3, 4):
            assert boundary_middle_count(trigonal_triangle(n)) == 4

    def test_degree_budget_of_triangle(self):
        # 2I + boundary-middle equals 6n on the trigonal triangle
        for n in (1, 2, 3, 4, 5):
            t = trigonal_triangle(n)
            assert 2 * interior_count(t) + boundary_middle_count(t) == 6 * n

    def test_pick_consistency_random(self):
        rng = random.Random(5)
        done = 0
        while done < 40:
            pts = [(rng.randint(0, 5), rng.randint(0, 4)) for _ in range(rng.randint(3, 6))]
            try:
                p = LatticePolygon(pts)
            except Exception:
                continue
            if not p.is_two_dimensional:
                continue
            area = Fraction(p.area2, 2)
            inside = interior_count(p)
            boundary = len(p.boundary_lattice_points())
            assert area == inside + Fraction(boundary, 2) - 1
            done += 1


class TestHeight:
    def test_spec_examples(self):
        assert height(poly((0, 0), (0, 3), (1, 2))) == 3
        assert height(poly((0, 0), (0, 2), (1, 2), (3, 0))) == 2
        assert height(poly((0, 1), (2, 1))) == 1


class TestValidate:
    def test_single_cell(self):
        sub = Subdivision.from_cells(trigonal_triangle(1), [trigonal_triangle(1)])
        rep = validate_subdivision(sub)
        assert rep.n == 1
        assert rep.shared_edges == []

    def test_horizontal_split(self):
        top = poly((0, 2), (0, 3), (1, 2))
        bottom = poly((0, 0), (0, 2), (1, 2), (3, 0))
        rep = validate_subdivision(Subdivision.from_cells(trigonal_triangle(1), [top, bottom]))
        assert rep.n == 1
        hs = rep.horizontal_shared()
        assert len(hs) == 1
        e = hs[0]
        assert e.height == 2 and {e.a, e.b} == {(0, 2), (1, 2)}
        assert e.upper == 0 and e.lower == 1

    def test_overlap(self):
        t = trigonal_triangle(1)
        with pytest.raises(Overlap):
            validate_subdivision(Subdivision.from_cells(t, [t, t]))

    def test_gap(self):
        t = trigonal_triangle(1)
        with pytest.raises(Gap):
            validate_subdivision(Subdivision.from_cells(t, [poly((0, 2), (0, 3), (1, 2))]))

    def test_not_trigonal(self):
        sq = poly((0, 0), (2, 0), (0, 2))
        with pytest.raises(NotTrigonalSupport):
            validate_subdivision(Subdivision.from_cells(sq, [sq]))

    def test_partial_edge_rejected(self):
        # right cell shares only part of the left cell's edge: invalid complex
        left = poly((0, 0), (0, 3), (2, 1))
        up = poly((0, 3), (2, 1), (3, 0), (6, 0))
        low = poly((0, 0), (2, 1), (3, 0))
        sub = Subdivision.from_cells(trigonal_triangle(2), [left, up, low])
        with pytest.raises((NonFaceIntersection, Gap, Overlap)):
            validate_subdivision(sub)

    def test_two_triangles_delta2(self):
        left = poly((0, 0), (0, 3), (3, 0))
        right = poly((0, 3), (3, 0), (6, 0))
        rep = validate_subdivision(Subdivision.from_cells(trigonal_triangle(2), [left, right]))
        assert rep.n == 2
        assert len(rep.shared_edges) == 1
        assert not rep.shared_edges[0].horizontal


class TestMomentMap:
    def test_equal_weights_give_centroid(self):
        t = trigonal_triangle(1)
        cx, cy = moment_map(t, 1.0, 1.0)
        assert abs(cx - 1.0) < 1e-12 and abs(cy - 1.0) < 1e-12

    def test_limit_toward_vertex(self):
        sq = poly((0, 0), (1, 0), (1, 1), (0, 1))
        cx, _ = moment_map(sq, 1e9, 1.0)
        assert cx > 0.999

    def test_rejects_nonpositive(self):
        with pytest.raises(Exception):
            moment_map(trigonal_triangle(1), -1.0, 2.0)

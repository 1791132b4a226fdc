from fractions import Fraction

import pytest

from tripatch.algebra import BivarPoly, Poly1
from tripatch.lattice import LatticePolygon, Subdivision, trigonal_triangle
from tripatch.patchwork import PatchCell, Patchwork
from tripatch.scanorder import classify_group, compute_scan_order, group_height


def sub(n, *cells):
    return Subdivision.from_cells(trigonal_triangle(n), [LatticePolygon(c) for c in cells])


class TestScanOrder:
    def test_trivial(self):
        s = sub(2, [(0, 0), (6, 0), (0, 3)])
        order = compute_scan_order(s)
        assert [g.cells for g in order.groups] == [(0,)]
        assert order.discarded == ()

    def test_horizontal_split_is_one_group(self):
        s = sub(1, [(0, 2), (0, 3), (1, 2)], [(0, 0), (0, 2), (1, 2), (3, 0)])
        order = compute_scan_order(s)
        assert len(order.groups) == 1
        assert set(order.groups[0].cells) == {0, 1}
        assert order.groups[0].cells[0] == 0  # top cell first
        assert order.groups[0].distinguished_vertex == (0, 3)

    def test_two_triangles_delta2(self):
        s = sub(2, [(0, 0), (0, 3), (3, 0)], [(0, 3), (3, 0), (6, 0)])
        order = compute_scan_order(s)
        assert [g.cells for g in order.groups] == [(0,), (1,)]

    def test_discards_height_one_cell(self):
        # a chord from (0,3) to (4,1) and one from (4,1) to (3,0) wedge a
        # height-1 cell between two height-3 cells (degree 2)
        left = [(0, 0), (0, 3), (4, 1), (3, 0)]
        wedge = [(3, 0), (4, 1), (6, 0)]
        # wait: (6,0) is the corner; the right cell must contain the corner
        order = compute_scan_order(sub(2, left, wedge))
        # wedge has height 1 and no horizontal edges: discarded
        assert order.discarded == (1,)
        assert [g.cells for g in order.groups] == [(0,)]

    def test_determinism(self):
        s = sub(1, [(0, 2), (0, 3), (1, 2)], [(0, 0), (0, 2), (1, 2), (3, 0)])
        a = compute_scan_order(s).to_json()
        b = compute_scan_order(s).to_json()
        assert a == b

    def test_left_monotonicity_and_partition(self):
        # two consecutive groups, each a height-3 cell chained to a height-1
        # cell across a height-1 horizontal edge
        cells = [
            [(0, 1), (0, 3), (2, 1)],
            [(0, 0), (0, 1), (2, 1), (5, 0)],
            [(0, 3), (2, 1), (4, 1)],
            [(5, 0), (6, 0), (4, 1), (2, 1)],
        ]
        s = sub(2, *cells)
        order = compute_scan_order(s)
        assert [set(g.cells) for g in order.groups] == [{0, 1}, {2, 3}]
        seen = set(order.discarded)
        for g in order.groups:
            assert not (seen & set(g.cells))
            seen |= set(g.cells)
        assert seen == set(range(len(cells)))
        minxs = [min(min(v[0] for v in s.cells[i].vertices) for i in g.cells)
                 for g in order.groups]
        assert minxs == sorted(minxs)
        for g in order.groups:
            assert group_height(g, s) >= 2
        for i in order.discarded:
            assert s.cells[i].max_y == 1


def _pw_split():
    top = LatticePolygon([(0, 2), (0, 3), (1, 2)])
    bottom = LatticePolygon([(0, 0), (0, 2), (1, 2), (3, 0)])
    a1 = Poly1((1, 1))
    ctop = BivarPoly((Poly1.zero(), Poly1.zero(), a1, Poly1.constant(1)))
    cbot = BivarPoly((Poly1((2, 0, 0, 1)), Poly1((1, 0, 1)), a1))
    return Patchwork(1, [PatchCell(top, ctop), PatchCell(bottom, cbot)])


class TestClassify:
    def test_h3(self):
        tri = trigonal_triangle(1)
        C = BivarPoly.from_coeff_dict({(0, 3): 1, (0, 1): -3, (3, 0): 1,
                                       (1, 0): -2, (0, 0): Fraction(1, 4)})
        pw = Patchwork(1, [PatchCell(tri, C)])
        order = compute_scan_order(pw.subdivision, pw.report)
        prof = classify_group(order.groups[0], pw)
        assert prof.tag == "H3"
        assert prof.a1.is_zero and prof.a2 == Poly1((-3,))

    def test_h3_h2(self):
        pw = _pw_split()
        order = compute_scan_order(pw.subdivision, pw.report)
        prof = classify_group(order.groups[0], pw)
        assert prof.tag == "H3+H2"
        assert prof.h2_link and not prof.h1_link
        assert prof.a1 == Poly1((1, 1))
        assert prof.a2 == Poly1((1, 0, 1))
        assert prof.a3 == Poly1((2, 0, 0, 1))

    def test_h2_h1(self):
        # height-2 cell over a height-1 cell across a height-1 edge, plus a
        # top cell covering heights [2,3] chained by a height-2 edge
        cells = [
            LatticePolygon([(0, 2), (0, 3), (1, 2)]),
            LatticePolygon([(0, 1), (0, 2), (1, 2), (2, 1)]),
            LatticePolygon([(0, 0), (0, 1), (2, 1), (3, 0)]),
        ]
        a1 = Poly1((1, 1))
        a2 = Poly1((1, 1, 1))
        a3 = Poly1((1, 1, 0, 1))
        curves = [
            BivarPoly((Poly1.zero(), Poly1.zero(), a1, Poly1.constant(1))),
            BivarPoly((Poly1.zero(), a2, a1)),
            BivarPoly((a3, a2)),
        ]
        pw = Patchwork(1, [PatchCell(p, c) for p, c in zip(cells, curves)])
        order = compute_scan_order(pw.subdivision, pw.report)
        assert len(order.groups) == 1
        prof = classify_group(order.groups[0], pw)
        assert prof.tag == "H3+H2+H1"
        assert prof.h1_link and prof.h2_link

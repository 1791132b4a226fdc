"""Convex lattice polygons, subdivisions of the trigonal triangle, counts.

All geometry is exact: vertices are integer points, derived coordinates are
Fractions.  The one floating-point routine, :func:`moment_map`, is used only
by rendering code.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import (
    DegeneratePolygon,
    Gap,
    NonFaceIntersection,
    NonPositiveInput,
    NotTrigonalSupport,
    Overlap,
    ValidationError,
)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Andrew monotone chain; returns CCW vertices without collinear points."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lo = []
    for p in pts:
        while len(lo) >= 2 and _cross(lo[-2], lo[-1], p) <= 0:
            lo.pop()
        lo.append(p)
    hi = []
    for p in reversed(pts):
        while len(hi) >= 2 and _cross(hi[-2], hi[-1], p) <= 0:
            hi.pop()
        hi.append(p)
    return lo[:-1] + hi[:-1]


def _on_segment(p, a, b):
    if _cross(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


class LatticePolygon:
    """Convex polygon with integer vertices, stored CCW from the lexicographic minimum.

    Points and segments are allowed as degenerate instances (they occur as
    faces); subdivision 2-cells are checked for positive area separately.
    """

    __slots__ = ("vertices",)

    def __init__(self, points):
        pts = [(int(x), int(y)) for x, y in points]
        if not pts:
            raise DegeneratePolygon("empty polygon")
        hull = convex_hull(pts)
        for p in pts:
            if len(hull) == 1:
                ok = p == hull[0]
            elif len(hull) == 2:
                ok = _on_segment(p, hull[0], hull[1])
            else:
                ok = any(_on_segment(p, hull[i], hull[(i + 1) % len(hull)])
                         for i in range(len(hull)))
            if not ok:
                raise ValidationError("vertex list is not convex", point=p)
        if len(hull) >= 3:
            start = min(range(len(hull)), key=lambda i: hull[i])
            hull = hull[start:] + hull[:start]
        object.__setattr__(self, "vertices", tuple(hull))

    def __setattr__(self, name, value):
        raise AttributeError("LatticePolygon is immutable")

    def __eq__(self, other):
        return isinstance(other, LatticePolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "LatticePolygon(%s)" % (list(self.vertices),)

    @property
    def area2(self):
        """Twice the area (integer)."""
        v = self.vertices
        n = len(v)
        if n < 3:
            return 0
        return abs(sum(v[i][0] * v[(i + 1) % n][1] - v[(i + 1) % n][0] * v[i][1]
                       for i in range(n)))

    @property
    def is_two_dimensional(self):
        return self.area2 > 0

    def edges(self):
        v = self.vertices
        if len(v) < 2:
            return []
        if len(v) == 2:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def contains(self, p, strict=False):
        """Exact membership for a point with Fraction or int coordinates."""
        v = self.vertices
        if len(v) == 1:
            return (not strict) and (Fraction(p[0]), Fraction(p[1])) == v[0]
        if len(v) == 2:
            if strict:
                return False
            return _segment_contains_frac(v[0], v[1], p)
        for i in range(len(v)):
            a, b = v[i], v[(i + 1) % len(v)]
            c = (b[0] - a[0]) * (Fraction(p[1]) - a[1]) - (b[1] - a[1]) * (Fraction(p[0]) - a[0])
            if strict and c <= 0:
                return False
            if not strict and c < 0:
                return False
        return True

    def lattice_points(self, strict=False):
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        out = []
        for x in range(min(xs), max(xs) + 1):
            for y in range(min(ys), max(ys) + 1):
                if self.contains((x, y), strict=strict):
                    out.append((x, y))
        return out

    def boundary_lattice_points(self):
        if len(self.vertices) == 1:
            return [self.vertices[0]]
        out = set()
        for a, b in self.edges():
            out.update(edge_lattice_points(a, b))
        return sorted(out)

    @property
    def min_y(self):
        return min(v[1] for v in self.vertices)

    @property
    def max_y(self):
        return max(v[1] for v in self.vertices)

    def points_at_height(self, y):
        """Exact x-interval of the slice at height y, or None."""
        if not (self.min_y <= y <= self.max_y):
            return None
        xs = []
        y = Fraction(y)
        for a, b in self.edges() or [(self.vertices[0], self.vertices[0])]:
            ya, yb = a[1], b[1]
            if ya == yb:
                if ya == y:
                    xs.extend([Fraction(a[0]), Fraction(b[0])])
                continue
            if min(ya, yb) <= y <= max(ya, yb):
                t = (y - ya) / (yb - ya)
                xs.append(a[0] + t * (b[0] - a[0]))
        if len(self.vertices) == 1:
            xs = [Fraction(self.vertices[0][0])]
        if not xs:
            return None
        return (min(xs), max(xs))

    def min_x_at(self, y):
        s = self.points_at_height(y)
        return s[0] if s else None

    def top_face(self):
        """Vertices at the maximal ordinate (one vertex or a horizontal edge)."""
        ymax = self.max_y
        return tuple(sorted(v for v in self.vertices if v[1] == ymax))

    def bottom_face(self):
        ymin = self.min_y
        return tuple(sorted(v for v in self.vertices if v[1] == ymin))

    def horizontal_edges(self):
        return [(a, b) for a, b in self.edges() if a[1] == b[1]]

    def to_json(self):
        return [list(v) for v in self.vertices]


def _segment_contains_frac(a, b, p):
    px, py = Fraction(p[0]), Fraction(p[1])
    cr = (b[0] - a[0]) * (py - a[1]) - (b[1] - a[1]) * (px - a[0])
    if cr != 0:
        return False
    return (min(a[0], b[0]) <= px <= max(a[0], b[0])
            and min(a[1], b[1]) <= py <= max(a[1], b[1]))


def edge_lattice_points(a, b):
    """All lattice points on the closed segment [a, b]."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    g = gcd(abs(dx), abs(dy))
    if g == 0:
        return [a]
    sx, sy = dx // g, dy // g
    return [(a[0] + k * sx, a[1] + k * sy) for k in range(g + 1)]


def edge_key(a, b):
    return (a, b) if a <= b else (b, a)


def height(poly):
    """Maximum ordinate over the polygon."""
    return poly.max_y


def interior_count(poly):
    """Lattice points strictly inside; raises on degenerate polygons."""
    if not poly.is_two_dimensional:
        raise DegeneratePolygon("interior count needs positive area")
    return len(poly.lattice_points(strict=True))


def boundary_middle_count(poly):
    """Boundary lattice points whose ordinate is neither maximal nor minimal."""
    if not poly.is_two_dimensional:
        raise DegeneratePolygon("boundary count needs positive area")
    lo, hi = poly.min_y, poly.max_y
    return sum(1 for p in poly.boundary_lattice_points() if lo < p[1] < hi)


def tangency_capacity(poly):
    """2*interior + boundary-middle: the torus tangency budget of the polygon."""
    return 2 * interior_count(poly) + boundary_middle_count(poly)


def trigonal_triangle(n):
    return LatticePolygon([(0, 0), (3 * n, 0), (0, 3)])


@dataclass(frozen=True)
class SharedEdge:
    a: tuple
    b: tuple
    cells: tuple            # indices of the two incident cells
    horizontal: bool
    height: int | None
    upper: int | None = None  # for horizontal edges: cell lying above/below
    lower: int | None = None


@dataclass
class Subdivision:
    support: LatticePolygon
    cells: list

    @classmethod
    def from_cells(cls, support, cells):
        return cls(support=support, cells=list(cells))


@dataclass
class SubdivisionReport:
    n: int
    shared_edges: list = field(default_factory=list)
    boundary_edges: list = field(default_factory=list)

    def horizontal_shared(self, h=None):
        out = [e for e in self.shared_edges if e.horizontal]
        if h is not None:
            out = [e for e in out if e.height == h]
        return out


def _clip_halfplane(poly_pts, a, b):
    """Keep points p with cross(b-a, p-a) >= 0 (Fraction coordinates)."""
    out = []
    n = len(poly_pts)
    for i in range(n):
        p, q = poly_pts[i], poly_pts[(i + 1) % n]
        sp = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
        sq = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])
        if sp >= 0:
            out.append(p)
        if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
            t = sp / (sp - sq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    dedup = []
    for p in out:
        if not dedup or p != dedup[-1]:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def convex_intersection(A, B):
    """Exact intersection polygon (list of Fraction points, may be degenerate)."""
    pts = [(Fraction(x), Fraction(y)) for x, y in A.vertices]
    if len(pts) == 1 or len(pts) == 2:
        # degenerate cells are rejected earlier; not needed here
        raise DegeneratePolygon("intersection of degenerate cell")
    for a, b in B.edges():
        pts = _clip_halfplane(pts, a, b)
        if not pts:
            return []
    uniq = []
    for p in pts:
        if p not in uniq:
            uniq.append(p)
    return uniq


def _classify_point_set(pts):
    if not pts:
        return "empty"
    if len(pts) == 1:
        return "point"
    a = pts[0]
    for b in pts[1:]:
        if b != a:
            for c in pts[1:]:
                if _cross(a, b, c) != 0:
                    return "area"
            return "segment"
    return "point"


def validate_subdivision(sub):
    """Check that the cells tile the trigonal triangle; returns a report.

    Raises NotTrigonalSupport / Overlap / Gap / NonFaceIntersection naming
    the offending cells.
    """
    sup = sub.support
    vs = set(sup.vertices)
    n3 = max(v[0] for v in sup.vertices)
    if (len(sup.vertices) != 3 or n3 % 3 != 0 or n3 == 0
            or vs != {(0, 0), (n3, 0), (0, 3)}):
        raise NotTrigonalSupport("support is not a trigonal triangle",
                                 vertices=[list(v) for v in sup.vertices])
    n = n3 // 3

    for i, c in enumerate(sub.cells):
        if not c.is_two_dimensional:
            raise DegeneratePolygon("cell %d has zero area" % i, cell=i)
        for v in c.vertices:
            if not sup.contains(v):
                raise Gap("cell %d leaves the support" % i, cell=i, vertex=list(v))

    # pairwise face intersections
    for i in range(len(sub.cells)):
        for j in range(i + 1, len(sub.cells)):
            inter = convex_intersection(sub.cells[i], sub.cells[j])
            kind = _classify_point_set(inter)
            if kind == "empty":
                continue
            if kind == "area":
                raise Overlap("cells %d and %d overlap" % (i, j), cells=[i, j])
            if kind == "point":
                p = inter[0]
                if p not in [(Fraction(x), Fraction(y)) for x, y in sub.cells[i].vertices] or \
                   p not in [(Fraction(x), Fraction(y)) for x, y in sub.cells[j].vertices]:
                    raise NonFaceIntersection(
                        "cells %d and %d meet in a non-vertex point" % (i, j),
                        cells=[i, j], point=[str(p[0]), str(p[1])])
                continue
            # segment: must be a full edge of both
            lo = min(inter)
            hi = max(inter)
            seg = (lo, hi)
            if any(f.denominator != 1 for pt in seg for f in pt):
                raise NonFaceIntersection(
                    "cells %d and %d share a non-lattice segment" % (i, j), cells=[i, j])
            seg = ((int(seg[0][0]), int(seg[0][1])), (int(seg[1][0]), int(seg[1][1])))
            for idx in (i, j):
                keys = [edge_key(a, b) for a, b in sub.cells[idx].edges()]
                if edge_key(*seg) not in keys:
                    raise NonFaceIntersection(
                        "cells %d and %d meet along a partial edge" % (i, j),
                        cells=[i, j], segment=[list(seg[0]), list(seg[1])])

    total = sum(c.area2 for c in sub.cells)
    if total > sup.area2:
        raise Overlap("cell areas exceed the support", total=total, support=sup.area2)
    if total < sup.area2:
        raise Gap("cells do not cover the support", total=total, support=sup.area2)

    # edge incidence bookkeeping
    incidence = {}
    for idx, c in enumerate(sub.cells):
        for a, b in c.edges():
            incidence.setdefault(edge_key(a, b), []).append(idx)

    sup_edges = sup.edges()

    def on_support_boundary(a, b):
        return any(_on_segment(a, p, q) and _on_segment(b, p, q) for p, q in sup_edges)

    report = SubdivisionReport(n=n)
    for (a, b), cells in sorted(incidence.items()):
        if len(cells) == 1:
            if not on_support_boundary(a, b):
                raise Gap("interior edge with a single incident cell",
                          edge=[list(a), list(b)], cell=cells[0])
            report.boundary_edges.append((a, b, cells[0]))
            continue
        if len(cells) > 2:
            raise Overlap("edge shared by more than two cells",
                          edge=[list(a), list(b)], cells=cells)
        horizontal = a[1] == b[1]
        upper = lower = None
        if horizontal:
            h = a[1]
            ci, cj = cells
            if sub.cells[ci].max_y > h:
                upper, lower = ci, cj
            else:
                upper, lower = cj, ci
            if not (sub.cells[upper].min_y >= h >= sub.cells[lower].max_y):
                raise NonFaceIntersection("horizontal edge without clear sides",
                                          edge=[list(a), list(b)], cells=cells)
        report.shared_edges.append(SharedEdge(
            a=a, b=b, cells=tuple(cells), horizontal=horizontal,
            height=a[1] if horizontal else None, upper=upper, lower=lower))
    return report


def moment_map(delta, x, y):
    """Weighted average of lattice points; floating point, rendering only."""
    if x <= 0 or y <= 0:
        raise NonPositiveInput("moment map needs x > 0 and y > 0")
    if not delta.is_two_dimensional:
        raise DegeneratePolygon("moment map needs a two-dimensional polygon")
    pts = delta.lattice_points()
    wx = wy = wt = 0.0
    # normalize against the dominant monomial to keep the weights finite
    logs = [(i * _safe_log(x) + j * _safe_log(y), (i, j)) for i, j in pts]
    m = max(l for l, _ in logs)
    import math
    for l, (i, j) in logs:
        w = math.exp(l - m)
        wx += w * i
        wy += w * j
        wt += w
    return (wx / wt, wy / wt)


def _safe_log(v):
    import math
    return math.log(v)

"""Scan order: the sequence in which the vertical pencil meets the cells.

The loop repeatedly selects, among the leftmost remaining cells, the one
whose top vertex has the smallest ordinate and is not on a horizontal edge,
then gathers the maximal chain of cells linked to it by shared horizontal
edges (those are swept simultaneously).  Groups of height one are discarded:
they contribute no vertical tangencies.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Poly1
from .errors import NonTerminatingChain, UnsupportedProfile, ValidationError
from .lattice import validate_subdivision

KNOWN_PROFILES = ("H3", "H3+H2", "H3+H1", "H3+H2+H1", "H2", "H2+H1")


@dataclass(frozen=True)
class ScanGroup:
    cells: tuple                 # cell indices, top cell first (chain order)
    distinguished_vertex: tuple  # (x0, y0) selected in step 1
    chain: tuple                 # same as cells; kept for clarity


@dataclass
class ScanOrder:
    groups: list
    discarded: tuple
    ties: list = field(default_factory=list)

    def to_json(self):
        return {
            "groups": [list(g.cells) for g in self.groups],
            "discarded": sorted(self.discarded),
            "ties": self.ties,
        }


def group_height(group, subdivision):
    return max(subdivision.cells[i].max_y for i in group.cells)


def _left_profile(subdivision, remaining, y):
    best = None
    for i in remaining:
        mx = subdivision.cells[i].min_x_at(y)
        if mx is not None and (best is None or mx < best):
            best = mx
    return best


def _edge_on_left_boundary(subdivision, remaining, edge):
    (ax, ay), (bx, by) = edge
    if ay == by:
        return False  # a horizontal edge is never the leftmost point set
    ylo, yhi = min(ay, by), max(ay, by)
    for y in range(ylo, yhi + 1):
        t = Fraction(y - ay, by - ay)
        x_edge = ax + t * (bx - ax)
        if _left_profile(subdivision, remaining, y) != x_edge:
            return False
    return True


def compute_scan_order(subdivision, report=None):
    """Run the sweep loop; returns the ordered groups and the discarded cells."""
    if report is None:
        report = validate_subdivision(subdivision)
    horiz = {}
    for e in report.shared_edges:
        if e.horizontal:
            horiz.setdefault(e.upper, []).append((e.height, e.lower))
            horiz.setdefault(e.lower, []).append((e.height, e.upper))

    remaining = set(range(len(subdivision.cells)))
    groups = []
    discarded = []
    ties = []
    while remaining:
        # step 1: leftmost cells and their admissible top vertices
        candidates = []
        for i in sorted(remaining):
            cell = subdivision.cells[i]
            if not any(_edge_on_left_boundary(subdivision, remaining, e)
                       for e in cell.edges()):
                continue
            top = cell.top_face()
            if len(top) != 1:
                continue  # the top face is a horizontal edge
            v = top[0]
            if _left_profile(subdivision, remaining, v[1]) == v[0]:
                candidates.append((v[1], v[0], i, v))
        if not candidates:
            raise ValidationError("no admissible scan candidate",
                                  remaining=sorted(remaining))
        candidates.sort()
        if len(candidates) > 1 and candidates[0][0] == candidates[1][0]:
            ties.append({"ordinate": candidates[0][0],
                         "cells": [c[2] for c in candidates if c[0] == candidates[0][0]]})
        y0, x0, start, v0 = candidates[0]

        # step 2: follow shared horizontal edges downward
        chain = [start]
        prev = None
        cur = start
        while True:
            nxt = None
            for _, other in sorted(horiz.get(cur, [])):
                if other != prev and other in remaining:
                    nxt = other
                    break
            if nxt is None:
                break
            if nxt in chain:
                raise NonTerminatingChain("horizontal chain revisits a cell",
                                          chain=chain, next=nxt)
            chain.append(nxt)
            prev, cur = cur, nxt

        # step 3: remove the group; keep it when its height exceeds 1
        remaining -= set(chain)
        group = ScanGroup(cells=tuple(chain), distinguished_vertex=v0, chain=tuple(chain))
        if group_height(group, subdivision) >= 2:
            groups.append(group)
        else:
            discarded.extend(chain)

    for i in discarded:
        if subdivision.cells[i].max_y != 1:
            raise ValidationError("discarded cell of height > 1", cell=i)
    return ScanOrder(groups=groups, discarded=tuple(sorted(discarded)))


@dataclass(frozen=True)
class GroupProfile:
    tag: str                 # one of KNOWN_PROFILES
    cells: tuple             # indices, top first
    heights: tuple           # member heights, strictly decreasing
    a: tuple                 # (a0, a1, a2, a3): Y^3.. Y^0 coefficient polys
    h1_link: bool            # members joined across a height-1 horizontal edge
    h2_link: bool            # members joined across a height-2 horizontal edge

    @property
    def a0(self):
        return self.a[0]

    @property
    def a1(self):
        return self.a[1]

    @property
    def a2(self):
        return self.a[2]

    @property
    def a3(self):
        return self.a[3]


def classify_group(group, pw):
    """Profile of a kept group: case tag plus the coefficient polynomials."""
    cells = list(group.cells)
    heights = [pw.cells[i].polygon.max_y for i in cells]
    if heights != sorted(heights, reverse=True) or len(set(heights)) != len(heights):
        raise UnsupportedProfile("chain heights are not strictly decreasing",
                                 cells=cells, heights=heights)
    tag = "+".join("H%d" % h for h in heights)
    if tag not in KNOWN_PROFILES:
        raise UnsupportedProfile("unknown group profile %s" % tag, cells=cells)

    merged = {}
    for i in cells:
        for (p, q), v in pw.cells[i].curve.coeff_dict().items():
            if (p, q) in merged and merged[(p, q)] != v:
                raise ValidationError("incompatible coefficients inside a group",
                                      cells=cells, monomial=[p, q])
            merged[(p, q)] = v
    rows = [dict() for _ in range(4)]
    for (p, q), v in merged.items():
        rows[q][p] = v
    a = tuple(Poly1.from_dict(rows[3 - j]) for j in range(4))

    h1_link = h2_link = False
    for upper, lower in zip(cells, cells[1:]):
        h = pw.cells[lower].polygon.max_y
        if h == 1:
            h1_link = True
        elif h == 2:
            h2_link = True
    return GroupProfile(tag=tag, cells=tuple(cells), heights=tuple(heights),
                        a=a, h1_link=h1_link, h2_link=h2_link)


def top_cell_curve(profile, pw):
    """Curve of the highest member (used to build trigonal group skeletons)."""
    return pw.cells[profile.cells[0]].curve


def height2_cell_curve(profile, pw):
    """Curve of the height-2 member (base of the conic-type constructions)."""
    for i in profile.cells:
        if pw.cells[i].polygon.max_y == 2:
            return pw.cells[i].curve
    raise UnsupportedProfile("group has no height-2 member", cells=list(profile.cells))

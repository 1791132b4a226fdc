"""Trigonal patchworks: data model, hypotheses, perturbation.

A patchwork is a subdivision of the trigonal triangle with one curve per
2-cell whose Newton polygon is exactly that cell; truncations agree on
shared edges.  The two running hypotheses are total nondegeneracy of every
cell curve (condition 1) and maximal, ordinary vertical tangency (condition
2); both are decided exactly.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    BivarPoly,
    Poly1,
    count_cstar_roots,
    count_distinct_cstar_roots,
    discriminant_y,
    format_rational,
    parse_rational,
)
from .errors import (
    NotAFace,
    ParseError,
    PerturbationFailed,
    ValidationError,
)
from .lattice import (
    LatticePolygon,
    Subdivision,
    convex_hull,
    edge_key,
    edge_lattice_points,
    tangency_capacity,
    trigonal_triangle,
    validate_subdivision,
)


@dataclass(frozen=True)
class PatchCell:
    polygon: LatticePolygon
    curve: BivarPoly


@dataclass(frozen=True)
class LeadingFiberCubic:
    """Coefficients read off the hypotenuse: entry i is the Y^i coefficient."""

    coeffs: tuple

    def poly(self):
        return Poly1(self.coeffs)

    def discriminant(self):
        b0, b1, b2, b3 = (Fraction(c) for c in self.coeffs)
        return (18 * b3 * b2 * b1 * b0 - 4 * b2**3 * b0 + b2**2 * b1**2
                - 4 * b3 * b1**3 - 27 * b3**2 * b0**2)


@dataclass
class CheckReport:
    name: str
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def fail(self, **info):
        self.failures.append(info)

    def to_json(self):
        return {"check": self.name, "ok": self.ok,
                "failures": self.failures, "notes": self.notes}


class Patchwork:
    """Validated subdivision plus one curve per cell."""

    def __init__(self, n, cells):
        self.n = n
        self.cells = list(cells)
        self.subdivision = Subdivision.from_cells(
            trigonal_triangle(n), [c.polygon for c in self.cells])
        self.report = validate_subdivision(self.subdivision)
        for idx, cell in enumerate(self.cells):
            _check_newton_exact(idx, cell)
            y3 = cell.curve.y_coeff(3)
            if not (y3.is_zero or y3 == Poly1.constant(1)):
                raise ValidationError(
                    "Y^3 coefficient of cell %d must be 0 or 1" % idx, cell=idx)

    # --- coefficient bookkeeping -----------------------------------------

    def global_coeffs(self):
        out = {}
        for cell in self.cells:
            for key, val in cell.curve.coeff_dict().items():
                out.setdefault(key, val)
        return out

    def coeff(self, i, j):
        for cell in self.cells:
            v = cell.curve.coeff(i, j)
            if v != 0:
                return v
        return Fraction(0)

    def to_document(self):
        cells = []
        for cell in self.cells:
            cells.append({
                "vertices": cell.polygon.to_json(),
                "coefficients": [
                    {"i": i, "j": j, "value": format_rational(v)}
                    for (i, j), v in sorted(cell.curve.coeff_dict().items())],
            })
        return {"degree": self.n, "cells": cells}


def _check_newton_exact(idx, cell):
    support = cell.curve.support()
    hull_pts = set(cell.polygon.vertices)
    for (i, j) in support:
        if not cell.polygon.contains((i, j)):
            raise ValidationError(
                "cell %d has the monomial X^%dY^%d outside its polygon" % (idx, i, j),
                cell=idx, monomial=[i, j])
    for v in hull_pts:
        if v not in support:
            raise ValidationError(
                "cell %d misses a vertex coefficient at %s" % (idx, list(v)),
                cell=idx, vertex=list(v))
    if set(convex_hull(list(support))) != hull_pts:
        raise ValidationError(
            "cell %d: Newton polygon differs from the declared polygon" % idx,
            cell=idx)


def patchwork_from_document(doc):
    """Parse and structurally validate a patchwork JSON document."""
    try:
        n = int(doc["degree"])
        raw_cells = doc["cells"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("document needs 'degree' and 'cells'", error=str(exc))
    cells = []
    for k, rc in enumerate(raw_cells):
        try:
            poly = LatticePolygon(rc["vertices"])
            coeffs = {(int(e["i"]), int(e["j"])): parse_rational(e["value"])
                      for e in rc["coefficients"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("malformed cell %d" % k, cell=k, error=str(exc))
        cells.append(PatchCell(polygon=poly, curve=BivarPoly.from_coeff_dict(coeffs)))
    return Patchwork(n, cells)


def lifting_from_document(doc, n):
    """Optional lifting: maps 'i,j' keys to rationals on all lattice points."""
    if "lifting" not in doc:
        return None
    out = {}
    for key, val in doc["lifting"].items():
        i, j = (int(t) for t in str(key).split(","))
        out[(i, j)] = parse_rational(val)
    return out


# --- truncations ----------------------------------------------------------


def truncation(C, gamma):
    """Sub-polynomial of C supported on the face gamma of its Newton polygon.

    gamma is a pair of lattice points (an edge) or a single point (vertex).
    """
    support = C.support()
    hull = convex_hull(list(support))
    newton = LatticePolygon(hull)
    if isinstance(gamma[0], int):
        gamma = (gamma,)
    if len(gamma) == 1:
        v = tuple(gamma[0])
        if v not in newton.vertices:
            raise NotAFace("point %s is not a vertex of the Newton polygon" % (v,))
        return BivarPoly.from_coeff_dict({v: C.coeff(*v)})
    a, b = tuple(gamma[0]), tuple(gamma[1])
    edge_keys = [edge_key(p, q) for p, q in newton.edges()]
    if edge_key(a, b) not in edge_keys:
        raise NotAFace("segment %s-%s is not an edge of the Newton polygon" % (a, b))
    pts = set(edge_lattice_points(a, b))
    return BivarPoly.from_coeff_dict(
        {(i, j): C.coeff(i, j) for (i, j) in support if (i, j) in pts})


def edge_polynomial(C, a, b):
    """One-variable restriction of the truncation along the edge a-b."""
    pts = edge_lattice_points(a, b)
    return Poly1([C.coeff(i, j) for (i, j) in pts])


# --- the two hypotheses -----------------------------------------------------


def check_compatibility(pw):
    """Shared-edge truncations of incident cells must coincide."""
    rep = CheckReport("compatibility")
    for e in pw.report.shared_edges:
        ca, cb = e.cells
        ta = edge_polynomial(pw.cells[ca].curve, e.a, e.b)
        tb = edge_polynomial(pw.cells[cb].curve, e.a, e.b)
        if ta != tb:
            rep.fail(edge=[list(e.a), list(e.b)], cells=[ca, cb],
                     reason="truncations differ")
    return rep


def _strip_monomial(C):
    h, g = C.strip_y()
    k, g = g.strip_x()
    return h, k, g


def check_condition1(pw):
    """Total nondegeneracy of every cell curve (vertices, edges, 2-face)."""
    rep = CheckReport("condition1")
    for idx, cell in enumerate(pw.cells):
        C = cell.curve
        for a, b in cell.polygon.edges():
            e = edge_polynomial(C, a, b)
            if e.is_zero:
                rep.fail(cell=idx, face=[list(a), list(b)], reason="zero edge truncation")
                continue
            g = e.gcd(e.derivative())
            if not g.is_zero and g.degree >= 1 and count_cstar_roots(g) > 0:
                rep.fail(cell=idx, face=[list(a), list(b)],
                         reason="edge truncation has a repeated torus root")
        _, _, g = _strip_monomial(C)
        if g.deg_y == 0:
            rep.fail(cell=idx, face="2-face", reason="curve is a monomial times a unit")
            continue
        xc = g.y_coeffs[0]
        for p in g.y_coeffs[1:]:
            xc = xc.gcd(p)
        if not xc.is_zero and xc.degree >= 1 and count_cstar_roots(xc) > 0:
            rep.fail(cell=idx, face="2-face", reason="curve contains vertical lines")
            continue
        if g.deg_y >= 2 and discriminant_y(g).is_zero:
            rep.fail(cell=idx, face="2-face", reason="repeated component")
            continue
        gx = g.partial_x()
        gy = g.partial_y()
        r1 = g.resultant_y(gx) if not gx.is_zero else Poly1.zero()
        r2 = g.resultant_y(gy) if not gy.is_zero else Poly1.zero()
        gcd12 = r1.gcd(r2)
        if gcd12.is_zero:
            rep.fail(cell=idx, face="2-face", reason="identically singular")
        elif gcd12.degree >= 1 and count_cstar_roots(gcd12) > 0:
            rep.fail(cell=idx, face="2-face", reason="singular point in the torus")
    return rep


def check_condition2(pw):
    """Maximal ordinary tangency with the vertical pencil in the torus.

    Per cell: the Y-discriminant of the monomial-stripped curve must have
    exactly 2I+boundary-middle distinct nonzero complex roots (the maximum),
    and adjacent top/bottom Y-coefficients may not share nonzero roots.
    """
    rep = CheckReport("condition2")
    for idx, cell in enumerate(pw.cells):
        C = cell.curve
        h, k, g = _strip_monomial(C)
        if g.deg_y >= 2:
            disc = discriminant_y(g)
            if disc.is_zero:
                rep.fail(cell=idx, reason="discriminant vanishes identically")
                continue
            want = tangency_capacity(cell.polygon)
            got = count_distinct_cstar_roots(disc)
            if got != want:
                rep.fail(cell=idx, reason="tangency count %d, maximum is %d" % (got, want))
        d = C.deg_y
        top, nxt = C.y_coeff(d), C.y_coeff(d - 1)
        if not nxt.is_zero:
            gtop = top.gcd(nxt)
            if gtop.degree >= 1 and count_cstar_roots(gtop) > 0:
                rep.fail(cell=idx, reason="top coefficient pair shares a torus root")
        h0 = h  # lowest Y-power present
        bot, up = C.y_coeff(h0), C.y_coeff(h0 + 1)
        if not up.is_zero and not bot.is_zero:
            gbot = bot.gcd(up)
            if gbot.degree >= 1 and count_cstar_roots(gbot) > 0:
                rep.fail(cell=idx, reason="bottom coefficient pair shares a torus root")
    return rep


def leading_fiber_cubic(pw):
    """Coefficients along the hypotenuse, Y-degree 0..3 (absent monomials are 0)."""
    n = pw.n
    return LeadingFiberCubic(coeffs=tuple(
        pw.coeff((3 - i) * n, i) for i in range(4)))


# --- perturbation ------------------------------------------------------------


def perturb(pw, seed, extra_check=None, max_rounds=24):
    """Perturb coefficients until conditions (1) and (2) (and extra_check) pass.

    Shared-edge data is perturbed once per lattice point, so compatibility is
    preserved by construction.  The Y^3 row is left untouched.  Deterministic
    for a fixed seed.
    """
    def valid(candidate):
        if not (check_compatibility(candidate).ok and check_condition1(candidate).ok
                and check_condition2(candidate).ok):
            return False
        return extra_check is None or extra_check(candidate)

    if valid(pw):
        return pw
    rng = random.Random(seed)
    for round_ in range(max_rounds):
        eps = Fraction(1, 2 ** (round_ + 3))
        offsets = {}
        cells = []
        for cell in pw.cells:
            coeffs = {}
            for (i, j) in cell.polygon.lattice_points():
                v = cell.curve.coeff(i, j)
                if j == 3:
                    if v != 0:
                        coeffs[(i, j)] = v
                    continue
                if (i, j) not in offsets:
                    offsets[(i, j)] = rng.randint(-3, 3) * eps
                nv = v + offsets[(i, j)]
                vert = (i, j) in cell.polygon.vertices
                if vert and nv == 0:
                    nv = v + offsets[(i, j)] / 2
                    offsets[(i, j)] = offsets[(i, j)] / 2
                if nv != 0 or not vert:
                    if nv != 0:
                        coeffs[(i, j)] = nv
                else:
                    coeffs[(i, j)] = v
            cells.append(PatchCell(polygon=cell.polygon,
                                   curve=BivarPoly.from_coeff_dict(coeffs)))
        try:
            candidate = Patchwork(pw.n, cells)
        except ValidationError:
            continue
        if valid(candidate):
            return candidate
    raise PerturbationFailed("no valid perturbation found", seed=seed, rounds=max_rounds)

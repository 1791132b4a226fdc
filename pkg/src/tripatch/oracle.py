"""Convex-case ground truth: certified liftings and the exact glued curve.

Given a patchwork whose subdivision is induced by a certified convex
piecewise-linear lifting, the one-parameter family obtained by scaling each
coefficient with t**lift(i,j) realizes the predicted topology for all small
t > 0.  The oracle computes exact sign arrays along t = 1/2, 1/4, ... until
they stabilize.  It never touches the combinatorial sign-list or graph code,
so it is an independent referee for them.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import BivarPoly
from .errors import (
    IncompleteLifting,
    NoStabilization,
    NotCertifiedConvex,
    NotLNonsingular,
    TripleRootFiber,
)
from .signs import curve_sign_array, monicize_cubic


@dataclass
class ConvexityCertificate:
    ok: bool
    affines: list = field(default_factory=list)   # (alpha, beta, gamma) per cell
    violation: dict | None = None


def _fit_affine(points, values):
    """Affine function through three non-collinear lifted points (Cramer)."""
    (x1, y1), (x2, y2), (x3, y3) = points
    v1, v2, v3 = values
    det = (x1 * (y2 - y3) - y1 * (x2 - x3) + (x2 * y3 - x3 * y2))
    if det == 0:
        return None
    da = (v1 * (y2 - y3) - y1 * (v2 - v3) + (v2 * y3 - v3 * y2))
    db = (x1 * (v2 - v3) - v1 * (x2 - x3) + (x2 * v3 - x3 * v2))
    dg = (x1 * (y2 * v3 - y3 * v2) - y1 * (x2 * v3 - x3 * v2)
          + v1 * (x2 * y3 - x3 * y2))
    return (Fraction(da, det), Fraction(db, det), Fraction(dg, det))


def certify_convexity(subdivision, lifting):
    """Certify a lifting: affine on each cell, strictly above elsewhere."""
    support_pts = subdivision.support.lattice_points()
    for p in support_pts:
        if p not in lifting:
            raise IncompleteLifting("lifting misses the lattice point %s" % (p,))
    cert = ConvexityCertificate(ok=True)
    for idx, cell in enumerate(subdivision.cells):
        vs = cell.vertices
        plane = _fit_affine(vs[:3], [lifting[v] for v in vs[:3]])
        if plane is None:
            cert.ok = False
            cert.violation = {"cell": idx, "reason": "collinear vertices"}
            return cert
        a, b, g = plane
        for p in cell.lattice_points():
            if a * p[0] + b * p[1] + g != lifting[p]:
                cert.ok = False
                cert.violation = {"cell": idx, "point": list(p),
                                  "reason": "lifting is not affine on the cell"}
                return cert
        inside = set(cell.lattice_points())
        for p in support_pts:
            if p in inside:
                continue
            if a * p[0] + b * p[1] + g >= lifting[p]:
                cert.ok = False
                cert.violation = {"cell": idx, "point": list(p),
                                  "reason": "lifting not strictly above the cell plane"}
                return cert
        cert.affines.append((a, b, g))
    return cert


def _integer_lifting(lifting):
    den = 1
    for v in lifting.values():
        v = Fraction(v)
        den = den * v.denominator // __import__("math").gcd(den, v.denominator)
    return {k: int(Fraction(v) * den) for k, v in lifting.items()}


def viro_polynomial(pw, lifting, t):
    """The glued polynomial at parameter t (exact; rational t > 0)."""
    t = Fraction(t)
    if t <= 0:
        raise NotCertifiedConvex("t must be positive")
    lift = _integer_lifting(lifting)
    coeffs = {}
    for (i, j), v in pw.global_coeffs().items():
        coeffs[(i, j)] = v * t ** lift[(i, j)]
    return BivarPoly.from_coeff_dict(coeffs)


def oracle_sign_array(pw, lifting, expected_length=None, max_halvings=20):
    """Stabilized exact sign array of the lifted family.

    Halve t until two consecutive arrays agree (and, when given, the length
    matches the combinatorial prediction).  Returns (array, t).
    """
    cert = certify_convexity(pw.subdivision, lifting)
    if not cert.ok:
        raise NotCertifiedConvex("lifting is not a convex certificate",
                                 violation=cert.violation)
    prev = None
    prev_t = None
    t = Fraction(1, 2)
    for _ in range(max_halvings):
        try:
            sa = curve_sign_array(monicize_cubic(viro_polynomial(pw, lifting, t)))
        except (NotLNonsingular, TripleRootFiber):
            t /= 2
            prev = None
            continue
        if prev is not None and sa == prev and (
                expected_length is None or len(sa) == expected_length):
            return sa, prev_t
        prev, prev_t = sa, t
        t /= 2
    raise NoStabilization("sign array did not stabilize",
                          halvings=max_halvings,
                          last=None if prev is None else prev.to_string())

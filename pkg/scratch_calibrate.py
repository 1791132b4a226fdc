"""Calibration scratch: oracle vs combinatorial rules (not part of the package)."""
from fractions import Fraction

from tripatch.algebra import BivarPoly, Poly1, isolate_real_roots
from tripatch.lattice import LatticePolygon
from tripatch.patchwork import PatchCell, Patchwork, check_condition1, check_condition2, check_compatibility
from tripatch.scanorder import compute_scan_order
from tripatch.signs import patchwork_sign_array, group_sign_lists, pqd
from tripatch.oracle import oracle_sign_array, certify_convexity


def split_h3h2(a1, a2, a3):
    top = LatticePolygon([(0, 2), (0, 3), (1, 2)])
    bottom = LatticePolygon([(0, 0), (0, 2), (1, 2), (3, 0)])
    ctop = BivarPoly((Poly1.zero(), Poly1.zero(), Poly1(a1), Poly1.constant(1)))
    cbot = BivarPoly((Poly1(a3), Poly1(a2), Poly1(a1)))
    return Patchwork(1, [PatchCell(top, ctop), PatchCell(bottom, cbot)])


def lifting_y2(pw):
    lift = {}
    for p in pw.subdivision.support.lattice_points():
        lift[p] = Fraction(max(0, p[1] - 2))
    return lift


def run(tag, a1, a2, a3):
    pw = split_h3h2(a1, a2, a3)
    ok1, ok2, okc = check_condition1(pw), check_condition2(pw), check_compatibility(pw)
    print(tag, "cond1", ok1.ok, "cond2", ok2.ok, "compat", okc.ok)
    if not (ok1.ok and ok2.ok and okc.ok):
        print("   failures:", ok1.failures, ok2.failures)
        return
    order = compute_scan_order(pw.subdivision, pw.report)
    print("   groups:", [g.cells for g in order.groups])
    gl = group_sign_lists(order.groups[0], pw)
    comb = patchwork_sign_array(pw, order)
    lift = lifting_y2(pw)
    cert = certify_convexity(pw.subdivision, lift)
    assert cert.ok, cert.violation
    ora, t = oracle_sign_array(pw, lift)
    match = "MATCH" if comb == ora else "********** MISMATCH **********"
    print("   lists neg=%s pos=%s" % (gl.negative, gl.positive))
    print("   comb = %s   oracle = %s (t=%s)   %s" % (comb.to_string(), ora.to_string(), t, match))
    # diagnostics: a1 root positions and a2 sign there
    a1p, a2p = Poly1(a1), Poly1(a2)
    for iv in isolate_real_roots(a1p):
        iv.refine_below_width(Fraction(1, 64))
        print("   a1 root in [%s, %s]  a2 mid-sign=%s" % (iv.low, iv.high, a2p.sign_at(iv.sample())))


# positive-side a1 root (x0=1), a2 positive there
run("A: pos-side site, a2>0 ", (-1, 1), (1,), (1, 0, 0, 1))
# negative-side a1 root (x0=-1), a2 positive there -- the disputed ordering
run("B: neg-side site, a2>0 ", (1, 1), (1,), (1, 0, 0, 1))
# negative-side a1 root, a2 negative there: site contributes nothing
run("C: neg-side site, a2<0 ", (1, 1), (-1,), (-1, 0, 0, 1))
# both-side variants with richer a2, a3
run("D: pos site, rich      ", (-2, 1), (1, 1), (2, 1, 0, 1))
run("E: neg site, rich      ", (2, 1), (1, -1), (2, -1, 0, 1))
run("F: neg site, rich2     ", (3, 1), (2, 1), (-1, 1, 0, 1))

"""Sign arrays: of an explicit trigonal curve and of a patchwork.

The sign array [s0, s1...sl] records the sign of the cubic discriminant
D(X) left of its first real root, then the sign of Q(X) at each real root
of D in increasing order.  It pins the curve's position relative to the
vertical pencil up to the Y -> -Y flip.

For a patchwork the same array is predicted combinatorially: each kept scan
group contributes one list of signs per side of x = 0, assembled from exact
sign evaluations at discriminant roots and at roots of the edge polynomials.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    BivarPoly,
    Poly1,
    isolate_real_roots,
    separate_intervals,
    sign_at_root,
)
from .errors import (
    DegenerateLeadingFiber,
    DegenerateSite,
    NotLNonsingular,
    NotMonicCubic,
    ParseError,
    TripleRootFiber,
    VanishesAtRoot,
)
from .patchwork import leading_fiber_cubic
from .scanorder import classify_group, height2_cell_curve, top_cell_curve


def _sgn_char(s):
    return "+" if s > 0 else "-"


@dataclass(frozen=True)
class SignArray:
    leading: int
    entries: tuple

    def to_string(self):
        if not self.entries:
            return "[%s]" % _sgn_char(self.leading)
        return "[%s,%s]" % (_sgn_char(self.leading),
                            "".join(_sgn_char(e) for e in self.entries))

    @classmethod
    def from_string(cls, text):
        t = text.strip()
        if not (t.startswith("[") and t.endswith("]")):
            raise ParseError("sign array must look like [+,+-...]", text=text)
        body = t[1:-1]
        if "," in body:
            head, tail = body.split(",", 1)
        else:
            head, tail = body, ""
        head = head.strip()
        if head not in ("+", "-"):
            raise ParseError("bad leading sign", text=text)
        entries = []
        for ch in tail.strip():
            if ch not in "+-":
                raise ParseError("bad sign character %r" % ch, text=text)
            entries.append(1 if ch == "+" else -1)
        return cls(leading=1 if head == "+" else -1, entries=tuple(entries))

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class PQDTriple:
    P: Poly1
    Q: Poly1
    D: Poly1


def _require_monic_cubic(C):
    if C.is_zero or C.deg_y != 3 or C.y_coeff(3) != Poly1.constant(1):
        raise NotMonicCubic("expected a monic cubic in Y")


def pqd(C):
    """Depressed-cubic invariants of a monic cubic in Y."""
    _require_monic_cubic(C)
    a1, a2, a3 = C.y_coeff(2), C.y_coeff(1), C.y_coeff(0)
    P = a2 - a1 * a1 * Fraction(1, 3)
    Q = a3 - a2 * a1 * Fraction(1, 3) + a1 * a1 * a1 * Fraction(2, 27)
    D = P * P * P * (-4) - Q * Q * 27
    return PQDTriple(P=P, Q=Q, D=D)


def monicize_cubic(C):
    """Equivalent monic cubic when the Y^3 coefficient is a positive constant.

    Substituting W = L*Y and scaling by L^2 keeps every fiber's root order,
    so the sign array is unchanged.
    """
    lead = C.y_coeff(3)
    if lead.is_zero or lead.degree != 0 or lead.coeffs[0] <= 0:
        raise NotMonicCubic("Y^3 coefficient must be a positive constant")
    L = lead.coeffs[0]
    if L == 1:
        return C
    return BivarPoly((C.y_coeff(0) * (L * L), C.y_coeff(1) * L,
                      C.y_coeff(2), Poly1.constant(1)))


def sign_at_minus_infinity(p):
    """Sign of p(x) for x below every root."""
    s = 1 if p.lead > 0 else -1
    return -s if p.degree % 2 == 1 else s


def curve_sign_array(C):
    """Exact sign array of a monic trigonal cubic.

    Requires all real roots of D simple (else NotLNonsingular) and Q nonzero
    at each of them (else TripleRootFiber: P and Q share the root, so the
    fiber carries a triple root).
    """
    t = pqd(C)
    if t.D.is_zero:
        raise NotLNonsingular("discriminant vanishes identically")
    roots = isolate_real_roots(t.D)
    if any(iv.multiplicity > 1 for iv in roots):
        raise NotLNonsingular("discriminant has a repeated real root")
    if t.D.degree == 0:
        return SignArray(leading=1 if t.D.coeffs[0] > 0 else -1, entries=())
    entries = []
    for iv in roots:
        try:
            entries.append(sign_at_root(t.Q, iv))
        except VanishesAtRoot:
            raise TripleRootFiber("Q vanishes at a discriminant root",
                                  interval=[str(iv.low), str(iv.high)])
    return SignArray(leading=sign_at_minus_infinity(t.D), entries=tuple(entries))


def negate_y(C):
    """The curve with Y -> -Y, renormalized to a monic cubic."""
    _require_monic_cubic(C)
    return BivarPoly((-C.y_coeff(0), C.y_coeff(1), -C.y_coeff(2), Poly1.constant(1)))


@dataclass(frozen=True)
class LScheme:
    """Window branch counts and tangency placements decoded from a sign array."""

    branch_counts: tuple   # one count (3 or 1) per window between roots
    tangencies: tuple      # 'above' (Q>0) or 'below' (Q<0), one per root

    def to_json(self):
        return {"branch_counts": list(self.branch_counts),
                "tangencies": list(self.tangencies)}


def sign_array_to_lscheme(sa):
    counts = []
    cur = 3 if sa.leading > 0 else 1
    counts.append(cur)
    for _ in sa.entries:
        cur = 4 - cur
        counts.append(cur)
    tang = tuple("above" if e > 0 else "below" for e in sa.entries)
    return LScheme(branch_counts=tuple(counts), tangencies=tang)


# --- the combinatorial array of a patchwork ---------------------------------


@dataclass(frozen=True)
class GroupSignLists:
    negative: tuple   # signs at the group's negative-axis sites, increasing x
    positive: tuple


@dataclass(frozen=True)
class _Site:
    interval: object     # IsolatingInterval
    kind: str            # 'disc', 'a2', 'a1'


def _real_cstar_roots(p):
    """Isolating intervals of the real nonzero roots, refined away from 0."""
    out = []
    for iv in isolate_real_roots(p):
        if iv.is_exact and iv.low == 0:
            continue
        while iv.contains(0) and not iv.is_exact:
            iv.refine()
        if iv.is_exact and iv.low == 0:
            continue
        out.append(iv)
    return out


def _stripped_disc_sites(pw, cell_index):
    """Real torus roots of the cell's Y-discriminant after monomial stripping."""
    from .algebra import discriminant_y

    C = pw.cells[cell_index].curve
    h, g = C.strip_y()
    k, g = g.strip_x()
    if g.deg_y < 2:
        return []
    disc = discriminant_y(g)
    if disc.is_zero:
        raise DegenerateSite("cell %d has an identically zero discriminant" % cell_index)
    return _real_cstar_roots(disc)


def _a1_continued_sign(a1, site, a1_roots, side):
    """Sign of a1 carried from 0 to the site along its side of the axis.

    Counts a1 roots (with multiplicity) strictly between 0 and the site;
    the starting sign is that of the lowest-order term of a1 on this side.
    The intervals must already be pairwise separated.
    """
    low = a1.coeffs[a1.ord_zero]
    sigma0 = 1 if low > 0 else -1
    if side < 0 and a1.ord_zero % 2 == 1:
        sigma0 = -sigma0
    crossings = 0
    for rv in a1_roots:
        if rv is site:
            continue
        if side > 0 and rv.low > 0 and rv.high < site.low:
            crossings += rv.multiplicity
        elif side < 0 and rv.high < 0 and rv.low > site.high:
            crossings += rv.multiplicity
    return sigma0 * (-1) ** (crossings % 2)


def group_sign_lists(group, pw):
    """The two per-side sign lists of one kept scan group."""
    profile = classify_group(group, pw)
    has_h2 = "H2" in profile.tag

    sites = []
    for idx in profile.cells:
        for iv in _stripped_disc_sites(pw, idx):
            sites.append(_Site(interval=iv, kind="disc"))

    a1, a2, a3 = profile.a1, profile.a2, profile.a3

    if profile.h1_link:
        if a2.is_zero:
            raise DegenerateSite("height-1 edge with zero a2")
        for iv in _real_cstar_roots(a2):
            try:
                s1 = sign_at_root(a1, iv)
                s3 = sign_at_root(a3, iv)
            except VanishesAtRoot:
                raise DegenerateSite("a1 or a3 vanishes at an a2 root")
            if s1 == s3:
                sites.append(_Site(interval=iv, kind="a2"))

    a1_roots = []
    if has_h2 and not a1.is_zero and a1.degree > a1.ord_zero:
        a1_roots = _real_cstar_roots(a1)
    if profile.h2_link:
        for iv in a1_roots:
            if iv.multiplicity > 1:
                raise DegenerateSite("a1 has a repeated torus root")
            try:
                s2 = sign_at_root(a2, iv)
            except VanishesAtRoot:
                raise DegenerateSite("a2 vanishes at an a1 root")
            if s2 > 0:
                sites.append(_Site(interval=iv, kind="a1"))

    # pairwise separation across sources; coinciding sites are degenerate.
    # a1 roots that are not sites still enter (they calibrate the continued
    # sign), deduplicated by identity.
    all_ivs = list({id(v): v for v in
                    [s.interval for s in sites] + a1_roots}.values())
    try:
        separate_intervals(all_ivs)
    except VanishesAtRoot:
        raise DegenerateSite("coincident sites from different sources")

    if not has_h2:
        cubic = top_cell_curve(profile, pw)
        Qc = pqd(cubic).Q
    else:
        Qc = None

    neg, pos = [], []
    for site in sorted(sites, key=lambda s: s.interval.low):
        side = 1 if site.interval.low > 0 else -1
        target = pos if side > 0 else neg
        if not has_h2:
            sigma = sign_at_root(Qc, site.interval)
            target.extend([sigma] if site.kind == "disc" else [sigma, sigma])
        else:
            if site.kind == "a1":
                sp = _a1_continued_sign(a1, site.interval, a1_roots, side)
                # increasing-x order: the entry nearer 0 is -sp, the farther one sp
                target.extend([-sp, sp] if side > 0 else [sp, -sp])
            else:
                sp = sign_at_root(a1, site.interval)
                target.extend([sp] if site.kind == "disc" else [sp, sp])
    return GroupSignLists(negative=tuple(neg), positive=tuple(pos))


def group_discriminant_proxy(profile, pw):
    """The polynomial whose sign tracks the first pair component on the group.

    Height >= 3 groups follow the cubic discriminant of their top cell;
    groups with a height-2 member follow the conic discriminant of that cell
    (the limit of the cubic one when the Y^3 coefficient degenerates).
    """
    if "H2" in profile.tag:
        conic = height2_cell_curve(profile, pw)
        a1c, a2c, a3c = conic.y_coeff(2), conic.y_coeff(1), conic.y_coeff(0)
        return a2c * a2c - a1c * a3c * 4
    return pqd(top_cell_curve(profile, pw)).D


def patchwork_sign_array(pw, order):
    """Concatenate the per-group lists around the circle of fibers.

    Negative lists run from the last group down to the first, positive lists
    from the first group up to the last.  The leading sign is the exact sign,
    at minus infinity, of the last group's discriminant data: left of every
    marked fiber the curve behaves like that group's model.  (When one cell
    carries the whole hypotenuse this is the sign of the discriminant of the
    cubic read off the hypotenuse; with a subdivided hypotenuse the scale
    separation between groups makes the per-group reading the correct one,
    as the exact convex-case oracle confirms.)
    """
    if not order.groups:
        raise DegenerateLeadingFiber("no kept scan groups")
    last = classify_group(order.groups[-1], pw)
    proxy = group_discriminant_proxy(last, pw)
    if proxy.is_zero:
        raise DegenerateLeadingFiber(
            "the fiber at infinity is not transverse; perturb the patchwork")
    lists = [group_sign_lists(g, pw) for g in order.groups]
    entries = []
    for gl in reversed(lists):
        entries.extend(gl.negative)
    for gl in lists:
        entries.extend(gl.positive)
    return SignArray(leading=sign_at_minus_infinity(proxy), entries=tuple(entries))

"""Combinatorial signed real rational graph skeletons.

A skeleton records, around the circle of real fibers, the cyclic word of
critical preimages of 0, 1 and infinity of the position-encoding rational
map (with orders), the two marked points 0 and infinity, the interval each
real arc maps into, the pair (sign of the discriminant data, sign of the
second polynomial) on each arc, and the multiplicity-weighted counts of
non-real preimages in the upper half plane.  That data determines degree,
realizability as a trigonal curve, and the sign array.

Interval codes: 'neg' is the arc of values in ]inf,0[, 'mid' is ]0,1[,
'pos' is ]1,inf[.  For a trigonal map the exact identity f - 1 = D/(27 Q^2)
forces sd = + exactly on 'pos' arcs; for the conic-type map the first sign
is + on 'neg' and 'pos' arcs and - on 'mid' arcs.
"""

from dataclasses import dataclass, replace
from fractions import Fraction

from .algebra import Poly1, isolate_real_roots
from .errors import (
    DegenerateConic,
    IdenticallyDegenerate,
    Unbalanced,
    UnmarkedSkeleton,
    ValidationError,
)
from .patchwork import CheckReport
from .signs import SignArray, pqd

NEG, MID, POS = "neg", "mid", "pos"


@dataclass(frozen=True)
class Event:
    kind: str            # 'zero' | 'pole' | 'one' | 'plain'
    order: int           # multiplicity of the map (0 for plain)
    mark: str | None = None   # None | '0' | 'inf'
    pos: tuple | None = None  # ('fin', lo, hi) | ('inf',) | None

    def to_json(self):
        out = {"kind": self.kind, "order": self.order}
        if self.mark:
            out["mark"] = self.mark
        if self.pos and self.pos[0] == "fin":
            out["pos"] = [str(self.pos[1]), str(self.pos[2])]
        elif self.pos:
            out["pos"] = "inf"
        return out


@dataclass(frozen=True)
class Arc:
    interval: str        # 'neg' | 'mid' | 'pos'
    sd: int
    sq: int

    def to_json(self):
        return {"interval": self.interval,
                "signs": ("+" if self.sd > 0 else "-") + ("+" if self.sq > 0 else "-")}


class GraphSkeleton:
    """Cyclic boundary word plus interior counts.

    nodes[i] is followed by arcs[i]; the word starts at the 0-mark and runs
    through the positive axis, the infinity mark, then the negative axis in
    increasing order (that storage convention is maintained by construction
    and by the assembly splices).
    """

    def __init__(self, nodes, arcs, interior_zero, interior_pole, interior_one,
                 map_kind="trigonal"):
        if len(nodes) != len(arcs):
            raise ValidationError("nodes and arcs must alternate")
        self.nodes = list(nodes)
        self.arcs = list(arcs)
        self.interior_zero = interior_zero
        self.interior_pole = interior_pole
        self.interior_one = interior_one
        self.map_kind = map_kind

    def copy(self):
        return GraphSkeleton(list(self.nodes), list(self.arcs),
                             self.interior_zero, self.interior_pole,
                             self.interior_one, self.map_kind)

    def mark_index(self, mark):
        for i, nd in enumerate(self.nodes):
            if nd.mark == mark:
                return i
        raise UnmarkedSkeleton("skeleton has no mark %r" % mark)

    def real_weight(self, kind):
        return sum(nd.order for nd in self.nodes if nd.kind == kind)

    def weights(self):
        return {
            "zero": self.real_weight("zero") + 2 * self.interior_zero,
            "pole": self.real_weight("pole") + 2 * self.interior_pole,
            "one": self.real_weight("one") + 2 * self.interior_one,
        }

    def to_json(self):
        return {
            "boundary": [{"event": nd.to_json(), "arc": a.to_json()}
                         for nd, a in zip(self.nodes, self.arcs)],
            "interior": {"zero": self.interior_zero, "pole": self.interior_pole,
                         "one": self.interior_one},
            "map_kind": self.map_kind,
        }

    @classmethod
    def from_json(cls, data):
        nodes, arcs = [], []
        for item in data["boundary"]:
            e = item["event"]
            pos = None
            if "pos" in e:
                if e["pos"] == "inf":
                    pos = ("inf",)
                else:
                    pos = ("fin", Fraction(e["pos"][0]), Fraction(e["pos"][1]))
            nodes.append(Event(kind=e["kind"], order=e.get("order", 0),
                               mark=e.get("mark"), pos=pos))
            signs = item["arc"]["signs"]
            arcs.append(Arc(interval=item["arc"]["interval"],
                            sd=1 if signs[0] == "+" else -1,
                            sq=1 if signs[1] == "+" else -1))
        it = data.get("interior", {})
        return cls(nodes, arcs, it.get("zero", 0), it.get("pole", 0),
                   it.get("one", 0), data.get("map_kind", "trigonal"))


def cross_interval(interval, kind, order):
    """Interval on the far side of an event (odd orders swap the two values
    adjacent to the critical value, even orders fix everything)."""
    if kind == "plain" or order % 2 == 0:
        return interval
    swaps = {"zero": {NEG: MID, MID: NEG, POS: POS},
             "pole": {NEG: POS, POS: NEG, MID: MID},
             "one": {MID: POS, POS: MID, NEG: NEG}}
    return swaps[kind][interval]


_ADJACENT = {"zero": {NEG, MID}, "pole": {NEG, POS}, "one": {MID, POS}}


# --- construction from exact polynomial data --------------------------------


def _reduce_fraction(n_aff, m_aff, deg):
    """Reduce the homogeneous fraction n/m (both homogenized to degree deg).

    Returns the reduced affine parts and the degree of the reduced map; the
    degree drops by the gcd's degree and by the shared power of the variable
    at infinity.
    """
    g = n_aff.gcd(m_aff)
    if g.degree >= 1:
        n_aff = n_aff.divexact(g)
        m_aff = m_aff.divexact(g)
    z_shared = min(deg - (n_aff.degree + g.degree), deg - (m_aff.degree + g.degree))
    d = deg - g.degree - z_shared
    return n_aff, m_aff, d


def _cstar_intervals(p):
    """Isolating intervals of real nonzero roots, refined to avoid 0."""
    k = p.ord_zero
    if k:
        p = Poly1(p.coeffs[k:])
    if p.degree == 0:
        return []
    out = []
    for iv in isolate_real_roots(p):
        while iv.contains(0):
            iv.refine()
        out.append(iv)
    return out


def skeleton_from_map(n_aff, m_aff, deg, sd_poly, sq_poly, map_kind):
    """Skeleton of the degree-`deg` map n/m on the projective line.

    sd_poly and sq_poly are the exact polynomials whose signs label arcs;
    sd_poly must be a positive multiple of (n-m) times a square, so that its
    sign is constant on every arc.
    """
    r, s, d = _reduce_fraction(n_aff, m_aff, deg)
    if d == 0:
        raise IdenticallyDegenerate("the position map is constant")
    rs = r - s
    if rs.is_zero:
        raise IdenticallyDegenerate("the position map is identically 1")

    events = []  # (lo, hi, kind, order, iv_or_None)
    for poly, kind in ((r, "zero"), (s, "pole"), (rs, "one")):
        for iv in _cstar_intervals(poly):
            events.append([iv.low, iv.high, kind, iv.multiplicity, iv])
    # separate across the three pairwise-coprime polynomials
    for _ in range(64):
        events.sort(key=lambda e: (e[0], e[1]))
        clash = False
        for a, b in zip(events, events[1:]):
            if not (a[1] < b[0]):
                clash = True
                a[4].refine()
                b[4].refine()
                a[0], a[1] = a[4].low, a[4].high
                b[0], b[1] = b[4].low, b[4].high
        if not clash:
            break
    else:
        raise ValidationError("could not separate map events")

    def kind_at_zero():
        for poly, kind in ((r, "zero"), (s, "pole"), (rs, "one")):
            k = poly.ord_zero
            if k:
                return kind, k
        return "plain", 0

    def kind_at_inf():
        for poly, kind in ((r, "zero"), (s, "pole"), (rs, "one")):
            k = d - poly.degree
            if k:
                return kind, k
        return "plain", 0

    k0, o0 = kind_at_zero()
    ki, oi = kind_at_inf()

    nodes = [Event(kind=k0, order=o0, mark="0", pos=("fin", Fraction(0), Fraction(0)))]
    pos_events = [e for e in events if e[0] > 0]
    neg_events = [e for e in events if e[1] < 0]
    for lo, hi, kind, order, _ in pos_events:
        nodes.append(Event(kind=kind, order=order, pos=("fin", lo, hi)))
    nodes.append(Event(kind=ki, order=oi, mark="inf", pos=("inf",)))
    for lo, hi, kind, order, _ in neg_events:
        nodes.append(Event(kind=kind, order=order, pos=("fin", lo, hi)))

    bound = max([abs(e[0]) for e in events] + [abs(e[1]) for e in events] + [1]) + 1

    def sample_between(i):
        a, b = nodes[i], nodes[(i + 1) % len(nodes)]
        if a.pos[0] == "fin" and b.pos[0] == "fin":
            return (a.pos[2] + b.pos[1]) / 2
        if a.pos[0] == "fin":
            return bound     # last arc of the positive side
        return -bound        # arc out of infinity into the negative side

    def signs_at(x):
        sd = sd_poly.sign_at(x)
        sq = sq_poly.sign_at(x)
        if sd == 0 or sq == 0:
            raise ValidationError("arc sample hit a degenerate point", at=str(x))
        return sd, sq

    arcs = []
    for i in range(len(nodes)):
        x = sample_between(i)
        sd, sq = signs_at(x)
        if map_kind == "trigonal":
            interval = POS if sd > 0 else (NEG if _map_negative(r, s, x) else MID)
        else:
            interval = MID if sd < 0 else (NEG if _map_negative(r, s, x) else POS)
        arcs.append(Arc(interval=interval, sd=sd, sq=sq))

    weights = {"zero": 0, "pole": 0, "one": 0}
    for nd in nodes:
        if nd.kind in weights:
            weights[nd.kind] += nd.order
    for kind, w in weights.items():
        if (d - w) % 2 or d < w:
            raise Unbalanced("real %s weight %d incompatible with degree %d"
                             % (kind, w, d))
    return GraphSkeleton(
        nodes, arcs,
        interior_zero=(d - weights["zero"]) // 2,
        interior_pole=(d - weights["pole"]) // 2,
        interior_one=(d - weights["one"]) // 2,
        map_kind=map_kind)


def _map_negative(r, s, x):
    sr, ss = r.sign_at(x), s.sign_at(x)
    if sr == 0 or ss == 0:
        raise ValidationError("arc sample hit an event", at=str(x))
    return sr * ss < 0


def skeleton_of_trigonal(C, n):
    """Signed skeleton of the trigonal position map of a monic cubic."""
    t = pqd(C)
    for j, a in ((2, C.y_coeff(2)), (1, C.y_coeff(1)), (0, C.y_coeff(0))):
        if not a.is_zero and a.degree > (3 - j) * n:
            raise ValidationError("coefficient degree exceeds the surface degree",
                                  y_power=j)
    if t.Q.is_zero or t.P.is_zero:
        raise IdenticallyDegenerate("position map degenerates (P or Q vanishes)")
    num = t.P * t.P * t.P * (-4)
    den = t.Q * t.Q * 27
    return skeleton_from_map(num, den, 6 * n, t.D, t.Q, "trigonal")


def skeleton_of_bidegree2(C, n):
    """Signed skeleton of the conic-type position map of a (2, n) curve."""
    if C.is_zero or C.deg_y != 2:
        raise DegenerateConic("expected degree 2 in Y")
    a1, a2, a3 = C.y_coeff(2), C.y_coeff(1), C.y_coeff(0)
    if a1.is_zero:
        raise DegenerateConic("zero leading coefficient")
    for j, a in ((2, a1), (1, a2), (0, a3)):
        if not a.is_zero and a.degree > (3 - j) * n:
            raise ValidationError("coefficient degree exceeds the surface degree",
                                  y_power=j)
    d2 = a2 * a2 - a1 * a3 * 4
    num = -(a1 * a1 * a1 * a1)
    den = d2 - a1 * a1 * a1 * a1
    if den.is_zero:
        raise DegenerateConic("position map has empty target")
    try:
        return skeleton_from_map(num, den, 4 * n, d2, a1, "bidegree2")
    except IdenticallyDegenerate:
        raise DegenerateConic("position map is constant")


# --- validation and extraction ----------------------------------------------


def validate_skeleton(G):
    """Consistency report: interval parity, sign placement, sign flips, balance."""
    rep = CheckReport("skeleton")
    n = len(G.nodes)
    if n == 0:
        rep.fail(reason="empty boundary word")
        return rep
    marks = [nd.mark for nd in G.nodes if nd.mark]
    if sorted(marks) != ["0", "inf"]:
        rep.fail(reason="marks 0 and inf must occur exactly once", marks=marks)
    for i, nd in enumerate(G.nodes):
        before = G.arcs[(i - 1) % n]
        after = G.arcs[i]
        if nd.kind == "plain":
            if before.interval != after.interval:
                rep.fail(node=i, reason="interval changes across a plain point")
            if (before.sd, before.sq) != (after.sd, after.sq):
                rep.fail(node=i, reason="signs change across a plain point")
            continue
        if before.interval not in _ADJACENT[nd.kind] or \
           after.interval not in _ADJACENT[nd.kind]:
            rep.fail(node=i, kind=nd.kind,
                     reason="arc interval not adjacent to the critical value")
        if cross_interval(before.interval, nd.kind, nd.order) != after.interval:
            rep.fail(node=i, kind=nd.kind, order=nd.order,
                     reason="interval parity violated")
        if nd.mark is None:
            flip = _second_sign_flips(G.map_kind, nd)
            if after.sq != (-before.sq if flip else before.sq):
                rep.fail(node=i, kind=nd.kind, order=nd.order,
                         reason="second sign flip rule violated")
            # the first sign has its roots exactly at the preimages of 1
            sd_expected = -before.sd if (nd.kind == "one" and nd.order % 2) else before.sd
            if after.sd != sd_expected:
                rep.fail(node=i, kind=nd.kind,
                         reason="first sign parity violated")
    for i, a in enumerate(G.arcs):
        if G.map_kind == "trigonal":
            if (a.sd > 0) != (a.interval == POS):
                rep.fail(arc=i, reason="sd placement: + exactly on pos arcs")
        else:
            if (a.sd < 0) != (a.interval == MID):
                rep.fail(arc=i, reason="sd placement: - exactly on mid arcs")
    w = G.weights()
    if not (w["zero"] == w["pole"] == w["one"]):
        rep.fail(reason="degree balance violated", weights=w)
    return rep


def _second_sign_flips(map_kind, nd):
    """Does the second sign flip across this event?

    Trigonal: the second polynomial vanishes exactly at the poles, with
    multiplicity order/2, so the sign flips iff order/2 is odd.  Conic-type:
    it vanishes at the zeros with multiplicity order/4.
    """
    if map_kind == "trigonal":
        return nd.kind == "pole" and (nd.order // 2) % 2 == 1
    return nd.kind == "zero" and (nd.order // 4) % 2 == 1


def skeleton_degree(G):
    w = G.weights()
    if not (w["zero"] == w["pole"] == w["one"]):
        raise Unbalanced("weights disagree", weights=w)
    return w["one"]


def check_trigonal_criteria(G, n):
    """Realizability of the skeleton by a nonsingular trigonal curve."""
    rep = validate_skeleton(G)
    rep.name = "trigonal-criteria"
    if G.map_kind != "trigonal":
        rep.fail(reason="skeleton is not labeled with trigonal signs")
        return rep
    w = G.weights()
    if w["zero"] == w["pole"] == w["one"]:
        if w["one"] != 6 * n:
            rep.fail(reason="degree %d, expected %d" % (w["one"], 6 * n))
    for i, nd in enumerate(G.nodes):
        if nd.kind == "zero" and nd.order % 3:
            rep.fail(node=i, reason="preimage of 0 with order not divisible by 3",
                     order=nd.order)
        if nd.kind == "pole" and nd.order % 2:
            rep.fail(node=i, reason="preimage of infinity with odd order",
                     order=nd.order)
        if nd.kind == "one" and nd.order != 1:
            rep.fail(node=i, reason="preimage of 1 with order != 1", order=nd.order)
    if G.interior_zero % 3:
        rep.fail(reason="interior zero weight not divisible by 3")
    if G.interior_pole % 2:
        rep.fail(reason="interior pole weight not divisible by 2")
    return rep


def extract_sign_array(G):
    """Walk from the infinity mark through 0 and back, reading the signs.

    The leading sign is the first-arc sd entering the negative side; every
    preimage of 1 away from the infinity mark contributes the sign carried
    by its adjacent arcs (a degree drop at infinity is not an affine root,
    so a preimage of 1 at the infinity mark is skipped).
    """
    i_inf = G.mark_index("inf")
    n = len(G.nodes)
    leading = G.arcs[i_inf].sd
    entries = []
    for k in range(1, n):
        i = (i_inf + k) % n
        nd = G.nodes[i]
        if nd.kind == "one":
            entries.append(G.arcs[i].sq)
    return SignArray(leading=leading, entries=tuple(entries))

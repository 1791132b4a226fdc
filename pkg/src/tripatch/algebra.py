"""Exact rational scalars, univariate and Y-stacked bivariate polynomials.

Everything here is exact: scalars are ``fractions.Fraction``, root isolation
is Sturm bisection over the integers (via :mod:`tripatch.kernel`), and
resultants are fraction-free determinants.  No floats anywhere.
"""

from fractions import Fraction
from math import gcd as _int_gcd

from . import kernel
from .errors import ConstantInY, VanishesAtRoot, ZeroPolynomial

Rational = Fraction


def parse_rational(text):
    """Parse 'p/q' or 'p' (also accepts ints)."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    return Fraction(str(text).strip())


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


class Poly1:
    """Dense univariate polynomial over Q, immutable.

    The zero polynomial is a distinguished state: ``degree`` raises
    ZeroPolynomial on it, and every operation documents how it treats zero.
    """

    __slots__ = ("coeffs", "_int", "_sturm", "_sqfree")

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_int", None)
        object.__setattr__(self, "_sturm", None)
        object.__setattr__(self, "_sqfree", None)

    def __setattr__(self, name, value):  # only the caches may mutate
        if name in ("_int", "_sturm", "_sqfree"):
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("Poly1 is immutable")

    # --- constructors ---------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def constant(cls, c):
        return cls((Fraction(c),))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, c, k):
        return cls((0,) * k + (Fraction(c),))

    @classmethod
    def from_dict(cls, d):
        if not d:
            return cls.zero()
        n = max(d)
        cs = [Fraction(0)] * (n + 1)
        for k, v in d.items():
            cs[int(k)] = parse_rational(v)
        return cls(cs)

    # --- basics ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        if not self.coeffs:
            raise ZeroPolynomial("degree of the zero polynomial")
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            raise ZeroPolynomial("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @property
    def ord_zero(self):
        """Multiplicity of 0 as a root (degree+1 convention avoided: zero poly raises)."""
        if not self.coeffs:
            raise ZeroPolynomial("ord_zero of the zero polynomial")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def __eq__(self, other):
        return isinstance(other, Poly1) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return "Poly1(%s)" % (self,)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(format_rational(c))
            else:
                xs = "X" if k == 1 else "X^%d" % k
                if c == 1:
                    parts.append(xs)
                elif c == -1:
                    parts.append("-" + xs)
                else:
                    parts.append("%s*%s" % (format_rational(c), xs))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    # --- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly1(
            tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly1(
            tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self):
        return Poly1(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly1(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Poly1.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly1(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _coerce(self, other):
        if isinstance(other, Poly1):
            return other
        return Poly1.constant(other)

    def __pow__(self, n):
        out = Poly1.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by X**k."""
        if not self.coeffs:
            return self
        return Poly1((Fraction(0),) * k + self.coeffs)

    def derivative(self):
        return Poly1(tuple(i * self.coeffs[i] for i in range(1, len(self.coeffs))))

    def __call__(self, x):
        """Exact evaluation (Horner)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other):
        """Field division: self = q*other + r with deg r < deg other."""
        if other.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        r = list(self.coeffs)
        d = other.degree
        lc = other.lead
        q = [Fraction(0)] * max(len(r) - d, 0)
        for k in range(len(r) - 1, d - 1, -1):
            if r[k] == 0:
                continue
            f = r[k] / lc
            q[k - d] = f
            for j in range(d + 1):
                r[k - d + j] -= f * other.coeffs[j]
        return Poly1(q), Poly1(r)

    def divexact(self, other):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ZeroPolynomial("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero:
            raise ZeroPolynomial("monic of the zero polynomial")
        return self * (1 / self.lead)

    # --- integer normalization and Sturm machinery ----------------------

    def int_coeffs(self):
        """(list of ints c, positive denominator D) with self = c/D."""
        if self._int is None:
            den = 1
            for c in self.coeffs:
                den = den * c.denominator // _int_gcd(den, c.denominator)
            self._int = ([int(c * den) for c in self.coeffs], den)
        return self._int

    def sturm(self):
        if self._sturm is None:
            ic, _ = self.int_coeffs()
            self._sturm = kernel.sturm_chain(ic)
        return self._sturm

    def sign_at(self, x):
        """Exact sign of self(x) in {-1, 0, 1}."""
        x = Fraction(x)
        ic, _ = self.int_coeffs()
        return kernel.eval_sign(ic, x.numerator, x.denominator)

    def count_roots_in(self, lo, hi):
        """Distinct real roots in the half-open interval (lo, hi]."""
        lo, hi = Fraction(lo), Fraction(hi)
        return kernel.count_roots(
            self.sturm(), lo.numerator, lo.denominator, hi.numerator, hi.denominator)

    def count_real_roots(self):
        if self.is_zero:
            raise ZeroPolynomial("root count of the zero polynomial")
        return kernel.count_roots_all(self.sturm())

    def root_bound(self):
        """A rational B with every real root in (-B, B)."""
        if self.is_zero or self.degree == 0:
            return Fraction(1)
        m = max(abs(c) for c in self.coeffs[:-1])
        return Fraction(2) + m / abs(self.lead)

    def gcd(self, other):
        """Monic gcd (gcd with zero is the monic other operand)."""
        if self.is_zero and other.is_zero:
            return Poly1.zero()
        a, _ = self.int_coeffs()
        b, _ = other.int_coeffs()
        g = Poly1(kernel.gcd_poly(a, b))
        return g.monic() if not g.is_zero else g

    def squarefree_decomposition(self):
        """Yun decomposition: list of (monic factor, multiplicity), factors coprime."""
        if self.is_zero:
            raise ZeroPolynomial("squarefree decomposition of zero")
        if self._sqfree is not None:
            return self._sqfree
        f = self.monic()
        out = []
        if f.degree >= 1:
            a = f.gcd(f.derivative())
            b = f.divexact(a)
            c = f.derivative().divexact(a)
            d = c - b.derivative()
            i = 1
            while not (b.degree == 0):
                a = b.gcd(d)
                if a.degree >= 1:
                    out.append((a, i))
                b = b.divexact(a)
                c = d.divexact(a)
                d = c - b.derivative()
                i += 1
        self._sqfree = out
        return out

    def squarefree_part_monic(self):
        out = Poly1.constant(1)
        for f, _ in self.squarefree_decomposition():
            out = out * f
        return out

    def to_json(self):
        return {str(k): format_rational(c) for k, c in enumerate(self.coeffs) if c != 0}

    @classmethod
    def from_json(cls, d):
        return cls.from_dict({int(k): parse_rational(v) for k, v in d.items()})


class IsolatingInterval:
    """One distinct real root of ``parent``: unique root in [low, high].

    ``sf`` is the squarefree factor actually used for refinement and
    ``multiplicity`` the root's multiplicity in the parent.
    """

    __slots__ = ("low", "high", "parent", "multiplicity", "sf")

    def __init__(self, low, high, parent, multiplicity, sf=None):
        self.low = Fraction(low)
        self.high = Fraction(high)
        self.parent = parent
        self.multiplicity = multiplicity
        self.sf = sf if sf is not None else parent

    def __repr__(self):
        return "IsolatingInterval(%s, %s, mult=%d)" % (self.low, self.high, self.multiplicity)

    @property
    def is_exact(self):
        return self.low == self.high

    def copy(self):
        return IsolatingInterval(self.low, self.high, self.parent, self.multiplicity, self.sf)

    def _split_point(self):
        """A point inside (low, high) that is not a root of sf."""
        lo, hi = self.low, self.high
        width = hi - lo
        k = 2
        while True:
            m = lo + width / k
            if self.sf.sign_at(m) != 0:
                return m
            k += 1
            if k > 64:
                # root keeps hitting sample points: it is rational, pin it
                return None

    def refine(self):
        """One bisection step (no-op on exact intervals)."""
        if self.is_exact:
            return
        m = self._split_point()
        if m is None:
            # locate the rational root exactly by scanning dyadic candidates
            m = (self.low + self.high) / 2
            if self.sf.sign_at(m) == 0:
                self.low = self.high = m
                return
            raise AssertionError("unreachable")
        if self.sf.count_roots_in(self.low, m) == 1:
            self.high = m
        else:
            self.low = m
        assert self.sf.count_roots_in(self.low, self.high) == 1 or (
            self.sf.sign_at(self.low) == 0)

    def refine_below_width(self, w):
        while not self.is_exact and self.high - self.low > w:
            self.refine()

    def sample(self):
        """A rational point of [low, high] (the root itself when exact)."""
        return self.low if self.is_exact else (self.low + self.high) / 2

    def contains(self, x):
        return self.low <= x <= self.high

    def overlaps(self, other):
        return not (self.high < other.low or other.high < self.low)

    def sturm_count_of(self, q):
        """Number of distinct roots of q inside (low, high]."""
        if self.is_exact:
            return 1 if q.sign_at(self.low) == 0 else 0
        return q.count_roots_in(self.low, self.high)


def poly_eval(p, x):
    """Exact value p(x)."""
    return p(Fraction(x))


def squarefree_part(p):
    """p / gcd(p, p'), monic.  Raises on the zero polynomial."""
    if p.is_zero:
        raise ZeroPolynomial("squarefree part of zero")
    return p.squarefree_part_monic()


def _isolate_squarefree(f, parent, mult):
    """Isolating intervals for a monic squarefree factor (endpoints non-roots)."""
    if f.degree == 0:
        return []
    b = f.root_bound()
    lo, hi = -b, b
    total = f.count_roots_in(lo, hi)
    out = []
    stack = [(lo, hi, total)]
    while stack:
        a, c, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(a, c, parent, mult, sf=f))
            continue
        iv = IsolatingInterval(a, c, parent, mult, sf=f)
        m = iv._split_point()
        if m is None:
            m = (a + c) / 2  # rational root exactly at the midpoint
            out.append(IsolatingInterval(m, m, parent, mult, sf=f))
            # shrink symmetric windows until the exact root is alone
            w = (c - a) / 4
            while f.count_roots_in(m - w, m + w) > 1:
                w /= 2
            nl = f.count_roots_in(a, m - w)
            nr = f.count_roots_in(m + w, c)
            stack.append((a, m - w, nl))
            stack.append((m + w, c, nr))
            continue
        nl = f.count_roots_in(a, m)
        stack.append((a, m, nl))
        stack.append((m, c, n - nl))
    out.sort(key=lambda iv: (iv.low, iv.high))
    return out


def separate_intervals(intervals, max_rounds=256):
    """Refine a list of IsolatingIntervals until pairwise disjoint.

    The roots must be pairwise distinct (callers check gcds first when the
    intervals come from different polynomials).
    """
    ivs = sorted(intervals, key=lambda iv: (iv.low, iv.high))
    for _ in range(max_rounds):
        clash = False
        for a, b in zip(ivs, ivs[1:]):
            if a.overlaps(b):
                clash = True
                a.refine()
                b.refine()
        if not clash:
            return ivs
        ivs.sort(key=lambda iv: (iv.low, iv.high))
    raise VanishesAtRoot("could not separate isolating intervals (equal roots?)")


def isolate_real_roots(p):
    """Sorted disjoint isolating intervals, one per distinct real root of p."""
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    out = []
    for f, m in p.squarefree_decomposition():
        out.extend(_isolate_squarefree(f, p, m))
    return separate_intervals(out)


def count_cstar_roots(p):
    """Complex nonzero roots counted with multiplicity: deg - ord_0."""
    if p.is_zero:
        raise ZeroPolynomial("count_cstar_roots of zero")
    return p.degree - p.ord_zero


def count_distinct_cstar_roots(p):
    if p.is_zero:
        raise ZeroPolynomial("count_distinct_cstar_roots of zero")
    return count_cstar_roots(squarefree_part(p))


def sign_at_root(q, root):
    """Exact sign of q at the unique root of root.parent inside the interval.

    Raises VanishesAtRoot when q vanishes there (degenerate input).
    """
    if q.is_zero:
        raise ZeroPolynomial("sign_at_root of the zero polynomial")
    if root.is_exact:
        s = q.sign_at(root.low)
        if s == 0:
            raise VanishesAtRoot("q vanishes at the root", root=str(root))
        return s
    g = q.gcd(root.sf)
    if not g.is_zero and g.degree >= 1 and root.sturm_count_of(g) > 0:
        raise VanishesAtRoot("q shares the root", root=str(root))
    iv = root
    while True:
        if (iv.sturm_count_of(q) == 0 and q.sign_at(iv.low) != 0
                and q.sign_at(iv.low) == q.sign_at(iv.high)):
            return q.sign_at(iv.low)
        iv.refine()
        if iv.is_exact:
            s = q.sign_at(iv.low)
            if s == 0:
                raise VanishesAtRoot("q shares the root", root=str(iv))
            return s


def resultant(p, q):
    """Resultant of two nonzero univariate polynomials (exact)."""
    if p.is_zero or q.is_zero:
        raise ZeroPolynomial("resultant with a zero polynomial")
    if p.degree == 0:
        return p.coeffs[0] ** q.degree
    if q.degree == 0:
        return q.coeffs[0] ** p.degree
    m = _sylvester([p.coeffs, q.coeffs])
    return _det_fractions(m)


def _sylvester(pair):
    a, b = pair
    da, db = len(a) - 1, len(b) - 1
    n = da + db
    rows = []
    for i in range(db):
        row = [Fraction(0)] * n
        for j, c in enumerate(reversed(a)):
            row[i + j] = Fraction(c)
        rows.append(row)
    for i in range(da):
        row = [Fraction(0)] * n
        for j, c in enumerate(reversed(b)):
            row[i + j] = Fraction(c)
        rows.append(row)
    return rows


def _det_fractions(m):
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def _det_poly_bareiss(m):
    """Fraction-free determinant with Poly1 entries (exact divisions)."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = Poly1.constant(1)
    for k in range(n - 1):
        if m[k][k].is_zero:
            piv = None
            for r in range(k + 1, n):
                if not m[r][k].is_zero:
                    piv = r
                    break
            if piv is None:
                return Poly1.zero()
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.divexact(prev)
            m[i][k] = Poly1.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


class BivarPoly:
    """Polynomial in X and Y stored as Y-coefficients (each a Poly1 in X)."""

    __slots__ = ("y_coeffs",)

    def __init__(self, y_coeffs=()):
        cs = [c if isinstance(c, Poly1) else Poly1(c) for c in y_coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "y_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def from_coeff_dict(cls, d):
        """d maps (i, j) -> coefficient; i is the X power, j the Y power."""
        if not d:
            return cls.zero()
        dy = max(j for _, j in d)
        per = [dict() for _ in range(dy + 1)]
        for (i, j), v in d.items():
            per[j][i] = v
        return cls(tuple(Poly1.from_dict(p) for p in per))

    @property
    def is_zero(self):
        return not self.y_coeffs

    @property
    def deg_y(self):
        if not self.y_coeffs:
            raise ZeroPolynomial("deg_y of the zero polynomial")
        return len(self.y_coeffs) - 1

    def y_coeff(self, j):
        if 0 <= j < len(self.y_coeffs):
            return self.y_coeffs[j]
        return Poly1.zero()

    def coeff(self, i, j):
        return self.y_coeff(j).coeff(i)

    def support(self):
        out = set()
        for j, p in enumerate(self.y_coeffs):
            for i, c in enumerate(p.coeffs):
                if c != 0:
                    out.add((i, j))
        return out

    def coeff_dict(self):
        return {(i, j): self.coeff(i, j) for (i, j) in self.support()}

    def __eq__(self, other):
        return isinstance(other, BivarPoly) and self.y_coeffs == other.y_coeffs

    def __hash__(self):
        return hash(self.y_coeffs)

    def __repr__(self):
        if self.is_zero:
            return "BivarPoly(0)"
        terms = []
        for j in range(len(self.y_coeffs) - 1, -1, -1):
            p = self.y_coeffs[j]
            if p.is_zero:
                continue
            if j == 0:
                terms.append("(%s)" % p)
            else:
                ys = "Y" if j == 1 else "Y^%d" % j
                terms.append("(%s)*%s" % (p, ys))
        return "BivarPoly(%s)" % " + ".join(terms)

    def __add__(self, other):
        n = max(len(self.y_coeffs), len(other.y_coeffs))
        return BivarPoly(tuple(self.y_coeff(j) + other.y_coeff(j) for j in range(n)))

    def __sub__(self, other):
        n = max(len(self.y_coeffs), len(other.y_coeffs))
        return BivarPoly(tuple(self.y_coeff(j) - other.y_coeff(j) for j in range(n)))

    def __neg__(self):
        return BivarPoly(tuple(-p for p in self.y_coeffs))

    def scale(self, c):
        return BivarPoly(tuple(p * c for p in self.y_coeffs))

    def mul_poly1(self, q):
        return BivarPoly(tuple(p * q for p in self.y_coeffs))

    def partial_y(self):
        return BivarPoly(tuple(j * self.y_coeffs[j] for j in range(1, len(self.y_coeffs))))

    def partial_x(self):
        return BivarPoly(tuple(p.derivative() for p in self.y_coeffs))

    def eval_x(self, x):
        """Univariate polynomial in Y obtained by substituting X = x."""
        return Poly1(tuple(p(Fraction(x)) for p in self.y_coeffs))

    def strip_y(self):
        """(h, q) with self = Y**h * q and q(X, 0) nonzero."""
        if self.is_zero:
            raise ZeroPolynomial("strip_y of zero")
        h = 0
        while self.y_coeffs[h].is_zero:
            h += 1
        return h, BivarPoly(self.y_coeffs[h:])

    def strip_x(self):
        """(k, q) with self = X**k * q and q not divisible by X."""
        if self.is_zero:
            raise ZeroPolynomial("strip_x of zero")
        k = min(p.ord_zero for p in self.y_coeffs if not p.is_zero)
        if k == 0:
            return 0, self
        out = []
        for p in self.y_coeffs:
            out.append(Poly1(p.coeffs[k:]) if not p.is_zero else p)
        return k, BivarPoly(out)

    def resultant_y(self, other):
        """Resultant with respect to Y; a Poly1 in X."""
        if self.is_zero or other.is_zero:
            raise ZeroPolynomial("resultant_y with a zero polynomial")
        if self.deg_y == 0:
            return self.y_coeffs[0] ** other.deg_y
        if other.deg_y == 0:
            return other.y_coeffs[0] ** self.deg_y
        da, db = self.deg_y, other.deg_y
        n = da + db
        rows = []
        ac = list(reversed(self.y_coeffs))
        bc = list(reversed(other.y_coeffs))
        for i in range(db):
            row = [Poly1.zero()] * n
            for j, c in enumerate(ac):
                row[i + j] = c
            rows.append(row)
        for i in range(da):
            row = [Poly1.zero()] * n
            for j, c in enumerate(bc):
                row[i + j] = c
            rows.append(row)
        return _det_poly_bareiss(rows)


def discriminant_y(C):
    """Discriminant of C with respect to Y, as a Poly1 in X.

    Degree-1 input has discriminant 1; degree-0 input is rejected.
    """
    if C.is_zero:
        raise ZeroPolynomial("discriminant of zero")
    d = C.deg_y
    if d == 0:
        raise ConstantInY("discriminant needs deg_Y >= 1")
    if d == 1:
        return Poly1.constant(1)
    res = C.resultant_y(C.partial_y())
    lc = C.y_coeffs[d]
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return res.divexact(lc) * sign

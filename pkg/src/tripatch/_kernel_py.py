"""Pure-Python kernel for dense integer polynomial arithmetic.

Polynomials are lists of Python ints, little-endian (index = exponent),
with a nonzero last entry; the zero polynomial is the empty list.  These
routines are the hot path of every Sturm-based computation, so they avoid
Fraction objects entirely: a rational point num/den (den > 0) is handled
by scaled Horner evaluation.

``tripatch._speedups`` implements the same interface in Cython; the two
must stay behaviourally identical (tests compare them).
"""

from math import gcd

BACKEND = "python"


def trim(c):
    """Drop leading (high-degree) zeros; canonical zero is []."""
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return list(c[:n])


def content(c):
    g = 0
    for x in c:
        if x:
            g = gcd(g, abs(x))
            if g == 1:
                return 1
    return g


def primitive(c):
    """Divide by the (positive) content.  Zero maps to zero."""
    c = trim(c)
    g = content(c)
    if g <= 1:
        return c
    return [x // g for x in c]


def deriv(c):
    return [i * c[i] for i in range(1, len(c))]


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim(out)


def eval_scaled(c, num, den):
    """Return p(num/den) * den**deg(p) as an exact integer (den > 0)."""
    if not c:
        return 0
    acc = c[-1]
    dpow = 1
    for i in range(len(c) - 2, -1, -1):
        dpow *= den
        acc = acc * num + c[i] * dpow
    return acc


def eval_sign(c, num, den):
    v = eval_scaled(c, num, den)
    return (v > 0) - (v < 0)


def prem_pos(a, b):
    """Pseudo-remainder of a by b scaled by a positive integer.

    Returns r with r = c * (a mod b) for some c > 0, trimmed but not
    made primitive.  b must be nonzero.
    """
    a = trim(a)
    b = trim(b)
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    steps = 0
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        coef = r[-1]
        shift = dr - db
        r = [lb * x for x in r]
        for j in range(db + 1):
            r[shift + j] -= coef * b[j]
        steps += 1
        r = trim(r)
    if lb < 0 and steps % 2 == 1:
        r = [-x for x in r]
    return r


def gcd_poly(a, b):
    """Primitive gcd with positive leading coefficient (PRS with content strips)."""
    a = primitive(a)
    b = primitive(b)
    if not a:
        g = b
    elif not b:
        g = a
    else:
        while b:
            a, b = b, primitive(prem_pos(a, b))
        g = a
    if g and g[-1] < 0:
        g = [-x for x in g]
    return g


def sturm_chain(c):
    """Canonical Sturm chain of c (primitive at every step, signs preserved)."""
    p = primitive(c)
    chain = [p]
    d = primitive(deriv(p))
    if d:
        chain.append(d)
        while len(chain[-1]) > 1:
            r = prem_pos(chain[-2], chain[-1])
            if not r:
                break
            chain.append(primitive([-x for x in r]))
    return chain


def _variations(signs):
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def var_at(chain, num, den):
    return _variations([eval_sign(c, num, den) for c in chain])


def var_inf(chain, direction):
    """Sign variations at +infinity (direction=1) or -infinity (-1)."""
    signs = []
    for c in chain:
        if not c:
            signs.append(0)
            continue
        s = (c[-1] > 0) - (c[-1] < 0)
        if direction < 0 and (len(c) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_roots(chain, a_num, a_den, b_num, b_den):
    """Distinct real roots of chain[0] in the half-open interval (a, b]."""
    return var_at(chain, a_num, a_den) - var_at(chain, b_num, b_den)


def count_roots_all(chain):
    return var_inf(chain, -1) - var_inf(chain, 1)

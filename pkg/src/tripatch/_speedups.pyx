# cython: language_level=3
"""Cython kernel: same interface and semantics as tripatch._kernel_py.

Coefficients are arbitrary-precision Python ints, so the win over the pure
twin comes from loop and call overhead, not machine arithmetic.  Keep the
two implementations in lockstep; the test suite compares them on a shared
battery.
"""

from math import gcd

BACKEND = "cython"


def trim(c):
    cdef Py_ssize_t n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return list(c[:n])


def content(c):
    cdef Py_ssize_t i
    g = 0
    for i in range(len(c)):
        x = c[i]
        if x:
            g = gcd(g, -x if x < 0 else x)
            if g == 1:
                return 1
    return g


def primitive(c):
    c = trim(c)
    g = content(c)
    if g <= 1:
        return c
    return [x // g for x in c]


def deriv(c):
    cdef Py_ssize_t i
    return [i * c[i] for i in range(1, len(c))]


def mul(a, b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                out[i + j] = out[i + j] + ai * b[j]
    return trim(out)


def eval_scaled(c, num, den):
    cdef Py_ssize_t i, n = len(c)
    if n == 0:
        return 0
    acc = c[n - 1]
    dpow = 1
    for i in range(n - 2, -1, -1):
        dpow = dpow * den
        acc = acc * num + c[i] * dpow
    return acc


def eval_sign(c, num, den):
    v = eval_scaled(c, num, den)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def prem_pos(a, b):
    cdef Py_ssize_t db, dr, shift, j
    cdef long steps = 0
    a = trim(a)
    b = trim(b)
    db = len(b) - 1
    lb = b[db]
    r = list(a)
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        coef = r[dr]
        shift = dr - db
        for j in range(len(r)):
            r[j] = lb * r[j]
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - coef * b[j]
        steps += 1
        r = trim(r)
    if lb < 0 and steps % 2 == 1:
        r = [-x for x in r]
    return r


def gcd_poly(a, b):
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
    if g and g[len(g) - 1] < 0:
        g = [-x for x in g]
    return g


def sturm_chain(c):
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


cdef int _variations(list signs):
    cdef int v = 0, prev = 0, s
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def var_at(chain, num, den):
    cdef list signs = [eval_sign(c, num, den) for c in chain]
    return _variations(signs)


def var_inf(chain, direction):
    cdef list signs = []
    cdef int s
    for c in chain:
        if not c:
            signs.append(0)
            continue
        lead = c[len(c) - 1]
        s = 1 if lead > 0 else -1
        if direction < 0 and (len(c) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_roots(chain, a_num, a_den, b_num, b_den):
    return var_at(chain, a_num, a_den) - var_at(chain, b_num, b_den)


def count_roots_all(chain):
    return var_inf(chain, -1) - var_inf(chain, 1)

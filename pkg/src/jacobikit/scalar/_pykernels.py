"""Pure-Python kernels for sparse exponential-polynomial arithmetic.

A polynomial is a ``dict`` mapping ``(a, c)`` to a nonzero rational, where
``a`` is a tuple of nonnegative ints (monomial exponents) and ``c`` is either
``None`` (no exponential factor) or a tuple of rationals, not all zero
(frequencies of ``exp(c . x)``).  Every function returns a fresh dict and
never mutates its arguments.

``_ckernels.pyx`` implements the same interface; keep the two in sync.
"""

from operator import add as _add

BACKEND = "python"


def _add_freq(c1, c2):
    if c1 is None:
        return c2
    if c2 is None:
        return c1
    c = tuple(map(_add, c1, c2))
    for v in c:
        if v:
            return c
    return None


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = dict(p)
    get = r.get
    for k, v in q.items():
        s = get(k)
        if s is None:
            r[k] = v
        else:
            s = s + v
            if s:
                r[k] = s
            else:
                del r[k]
    return r


def sub(p, q):
    r = dict(p)
    get = r.get
    for k, v in q.items():
        s = get(k)
        if s is None:
            r[k] = -v
        else:
            s = s - v
            if s:
                r[k] = s
            else:
                del r[k]
    return r


def neg(p):
    return {k: -v for k, v in p.items()}


def scale(p, k):
    if not k:
        return {}
    return {key: v * k for key, v in p.items()}


def mul(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = {}
    get = r.get
    qitems = list(q.items())
    for (a1, c1), v1 in p.items():
        for (a2, c2), v2 in qitems:
            if c1 is None and c2 is None:
                key = (tuple(map(_add, a1, a2)), None)
            else:
                key = (tuple(map(_add, a1, a2)), _add_freq(c1, c2))
            s = get(key)
            if s is None:
                r[key] = v1 * v2
            else:
                s = s + v1 * v2
                if s:
                    r[key] = s
                else:
                    del r[key]
    return r


def mul_term(p, a, c, coeff):
    """Multiply every term of ``p`` by ``coeff * x^a * exp(c . x)``."""
    r = {}
    for (a1, c1), v in p.items():
        r[(tuple(map(_add, a1, a)), _add_freq(c1, c))] = v * coeff
    return r


def diff(p, i):
    r = {}
    get = r.get
    for (a, c), v in p.items():
        ai = a[i]
        if ai:
            k = (a[:i] + (ai - 1,) + a[i + 1:], c)
            w = v * ai
            s = get(k)
            if s is None:
                r[k] = w
            else:
                s = s + w
                if s:
                    r[k] = s
                else:
                    del r[k]
        if c is not None and c[i]:
            k = (a, c)
            w = v * c[i]
            s = get(k)
            if s is None:
                r[k] = w
            else:
                s = s + w
                if s:
                    r[k] = s
                else:
                    del r[k]
    return r

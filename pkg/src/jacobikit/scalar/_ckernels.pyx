# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for sparse exponential-polynomial arithmetic.

Same contract as ``_pykernels``: dicts of ``(a, c) -> nonzero rational``,
arguments never mutated.
"""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM, PyTuple_GET_SIZE

BACKEND = "cython"


cdef inline tuple _add_exps(tuple a1, tuple a2):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a1)
    cdef Py_ssize_t i
    cdef long s
    cdef object v
    cdef tuple out = PyTuple_New(n)
    for i in range(n):
        s = <long>(<object>PyTuple_GET_ITEM(a1, i)) + <long>(<object>PyTuple_GET_ITEM(a2, i))
        v = s
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline object _add_freq(object c1, object c2):
    cdef Py_ssize_t n, i
    cdef list out
    cdef bint nonzero = False
    if c1 is None:
        return c2
    if c2 is None:
        return c1
    n = len(<tuple>c1)
    out = [None] * n
    for i in range(n):
        v = (<tuple>c1)[i] + (<tuple>c2)[i]
        if v:
            nonzero = True
        out[i] = v
    if nonzero:
        return tuple(out)
    return None


cdef inline void _accumulate(dict r, object key, object w):
    cdef object s = r.get(key)
    if s is None:
        r[key] = w
    else:
        s = s + w
        if s:
            r[key] = s
        else:
            del r[key]


def add(dict p, dict q):
    cdef dict r
    if len(p) < len(q):
        p, q = q, p
    r = dict(p)
    for k, v in q.items():
        _accumulate(r, k, v)
    return r


def sub(dict p, dict q):
    cdef dict r = dict(p)
    for k, v in q.items():
        _accumulate(r, k, -v)
    return r


def neg(dict p):
    return {k: -v for k, v in p.items()}


def scale(dict p, k):
    if not k:
        return {}
    return {key: v * k for key, v in p.items()}


def mul(dict p, dict q):
    cdef dict r = {}
    cdef list qitems
    cdef tuple k1, k2, a1, a2
    cdef object c1, c2, key
    if len(p) < len(q):
        p, q = q, p
    qitems = list(q.items())
    for k1obj, v1 in p.items():
        k1 = <tuple>k1obj
        a1 = <tuple>k1[0]
        c1 = k1[1]
        for item in qitems:
            k2 = <tuple>(<tuple>item)[0]
            v2 = (<tuple>item)[1]
            a2 = <tuple>k2[0]
            c2 = k2[1]
            if c1 is None and c2 is None:
                key = (_add_exps(a1, a2), None)
            else:
                key = (_add_exps(a1, a2), _add_freq(c1, c2))
            _accumulate(r, key, v1 * v2)
    return r


def mul_term(dict p, tuple a, c, coeff):
    cdef dict r = {}
    cdef tuple k1
    for k1obj, v in p.items():
        k1 = <tuple>k1obj
        r[(_add_exps(<tuple>k1[0], a), _add_freq(k1[1], c))] = v * coeff
    return r


def diff(dict p, Py_ssize_t i):
    cdef dict r = {}
    cdef tuple a, k1
    cdef long ai
    for k1obj, v in p.items():
        k1 = <tuple>k1obj
        a = <tuple>k1[0]
        c = k1[1]
        ai = <long>a[i]
        if ai:
            _accumulate(r, (a[:i] + (ai - 1,) + a[i + 1:], c), v * ai)
        if c is not None:
            ci = (<tuple>c)[i]
            if ci:
                _accumulate(r, (a, c), v * ci)
    return r

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``; same signatures, same results."""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF
from libc.stdlib cimport malloc, free


cdef inline tuple _pack(long *buf, Py_ssize_t w):
    cdef tuple t = PyTuple_New(w)
    cdef Py_ssize_t i
    cdef object o
    for i in range(w):
        o = buf[i]
        Py_INCREF(o)
        PyTuple_SET_ITEM(t, i, o)
    return t


cdef long *_unpack_keys(list keys, Py_ssize_t w) except NULL:
    cdef Py_ssize_t n = len(keys), i, g
    cdef long *arr = <long *>malloc((n * w + 1) * sizeof(long))
    if arr == NULL:
        raise MemoryError()
    for i in range(n):
        e = keys[i]
        for g in range(w):
            arr[i * w + g] = e[g]
    return arr


def mul(dict a, dict b):
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    if not a or not b:
        return out
    cdef list akeys = list(a.keys()), bkeys = list(b.keys())
    cdef list avals = list(a.values()), bvals = list(b.values())
    cdef Py_ssize_t w = len(akeys[0])
    cdef Py_ssize_t na = len(akeys), nb = len(bkeys), i, j, g
    cdef long *ea = _unpack_keys(akeys, w)
    cdef long *eb
    cdef long *buf
    try:
        eb = _unpack_keys(bkeys, w)
    except MemoryError:
        free(ea)
        raise
    buf = <long *>malloc((w + 1) * sizeof(long))
    cdef tuple key
    cdef object ca, c
    try:
        for i in range(na):
            ca = avals[i]
            for j in range(nb):
                for g in range(w):
                    buf[g] = ea[i * w + g] + eb[j * w + g]
                key = _pack(buf, w)
                c = out.get(key, 0) + ca * bvals[j]
                if c:
                    out[key] = c
                elif key in out:
                    del out[key]
    finally:
        free(ea)
        free(eb)
        free(buf)
    return out


def add(dict a, dict b):
    if len(a) < len(b):
        a, b = b, a
    cdef dict out = dict(a)
    cdef object e, c, s
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, s
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def scale(dict a, c):
    if not c:
        return {}
    cdef dict out = {}
    cdef object e, v
    for e, v in a.items():
        out[e] = v * c
    return out


def mono_mul(dict a, m):
    cdef dict out = {}
    if not a:
        return out
    cdef Py_ssize_t w = len(m), g
    cdef long *mv = <long *>malloc((w + 1) * sizeof(long))
    cdef long *buf = <long *>malloc((w + 1) * sizeof(long))
    cdef tuple e
    try:
        for g in range(w):
            mv[g] = m[g]
        for e, v in a.items():
            for g in range(w):
                buf[g] = <long>e[g] + mv[g]
            out[_pack(buf, w)] = v
    finally:
        free(mv)
        free(buf)
    return out


def remap(dict a, images, Py_ssize_t width):
    cdef Py_ssize_t src = len(images), w = width, g, t
    cdef long *img = <long *>malloc((src * w + 1) * sizeof(long))
    cdef long *buf = <long *>malloc((w + 1) * sizeof(long))
    cdef dict out = {}
    cdef long eg
    cdef tuple e, key
    cdef object s
    try:
        for g in range(src):
            for t in range(w):
                img[g * w + t] = images[g][t]
        for e, v in a.items():
            for t in range(w):
                buf[t] = 0
            for g in range(src):
                eg = e[g]
                if eg:
                    for t in range(w):
                        buf[t] += eg * img[g * w + t]
            key = _pack(buf, w)
            s = out.get(key, 0) + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    finally:
        free(img)
        free(buf)
    return out

"""Pure-Python sparse Laurent polynomial kernels.

A polynomial is a dict mapping exponent tuples (signed ints, one slot per
generator) to nonzero coefficients (int or Fraction).  Every function returns a
fresh dict and never mutates its arguments.  ``_ckernels`` mirrors this module
function for function.
"""

from __future__ import annotations

from operator import add as _add


def mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    bitems = list(b.items())
    for ea, ca in a.items():
        for eb, cb in bitems:
            key = tuple(map(_add, ea, eb))
            c = get(key, 0) + ca * cb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def sub(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def scale(a, c):
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def mono_mul(a, m):
    return {tuple(map(_add, e, m)): v for e, v in a.items()}


def remap(a, images, width):
    """Apply the linear exponent map e -> sum_g e[g] * images[g].

    ``width`` is the target exponent length.  Distinct source monomials may
    collide, so coefficients are accumulated.
    """
    out = {}
    for e, v in a.items():
        key = [0] * width
        for g, eg in enumerate(e):
            if eg:
                img = images[g]
                for t in range(width):
                    key[t] += eg * img[t]
        key = tuple(key)
        s = out.get(key, 0) + v
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out

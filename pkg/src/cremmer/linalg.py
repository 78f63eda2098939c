"""Fraction-free determinants over Laurent polynomial rings."""

from __future__ import annotations

from typing import Sequence

from .ring import LaurentPoly, RatFn


def _as_poly(v) -> LaurentPoly:
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, RatFn):
        p = v.as_poly()
        if p is None:
            raise ValueError("determinant entries must be Laurent polynomials")
        return p
    raise TypeError(f"unsupported matrix entry {v!r}")


def bareiss_det(matrix: Sequence[Sequence[object]]) -> LaurentPoly:
    """Determinant by Bareiss elimination; every division is exact."""
    m = [[_as_poly(v) for v in row] for row in matrix]
    size = len(m)
    if size == 0:
        raise ValueError("empty matrix")
    if any(len(row) != size for row in m):
        raise ValueError("matrix must be square")
    ctx = m[0][0].ctx
    prev = LaurentPoly.const(ctx, 1)
    sign = 1
    for k in range(size - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, size):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly(ctx)
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                val = m[i][j] * pivot - m[i][k] * m[k][j]
                q = val.divexact(prev)
                if q is None:  # cannot happen for exact input
                    raise ArithmeticError("Bareiss step left a remainder")
                m[i][j] = q
            m[i][k] = LaurentPoly(ctx)
        prev = pivot
    det = m[-1][-1]
    return -det if sign < 0 else det

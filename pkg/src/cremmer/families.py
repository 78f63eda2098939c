"""Constructors for the named homogeneous operators."""

from __future__ import annotations

from .ring import RatFn, RingCtx, as_ratfn
from .tensor import HomOp, lincomb

EMPTY = RingCtx([])


def _check(n: int, least: int = 1) -> None:
    if not isinstance(n, int) or n < least:
        raise ValueError(f"n must be an integer >= {least}, got {n!r}")


def eta_value(i: int, j: int, k: int) -> int:
    if i <= k < j:
        return 1
    if j <= k < i:
        return -1
    return 0


def eta_op(n: int, ctx: RingCtx = EMPTY) -> HomOp:
    _check(n)
    table = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(min(i, j), max(i, j)):
                table[(i, j, k)] = RatFn.const(ctx, eta_value(i, j, k))
    return HomOp(n, ctx, table)


def flip_op(n: int, ctx: RingCtx = EMPTY) -> HomOp:
    _check(n)
    one = RatFn.const(ctx, 1)
    return HomOp(n, ctx, {(i, j, j): one for i in range(1, n + 1) for j in range(1, n + 1)})


def id_op(n: int, ctx: RingCtx = EMPTY) -> HomOp:
    _check(n)
    one = RatFn.const(ctx, 1)
    return HomOp(n, ctx, {(i, j, i): one for i in range(1, n + 1) for j in range(1, n + 1)})


def zero_op(n: int, ctx: RingCtx = EMPTY) -> HomOp:
    return HomOp(n, ctx, {})


def qhat(q: RatFn) -> RatFn:
    return q - q.inverse()


def cg_operator(n: int, q: RatFn, p: RatFn) -> HomOp:
    """rho_p(e_i (x) e_j) = q p^(i-j) e_j (x) e_i + sum_k qhat p^(i-k) eta(i,j,k) e_k (x) e_(i+j-k)."""
    _check(n)
    ctx = q.ctx
    qh = qhat(q)
    table: dict = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            table[(i, j, j)] = q * p ** (i - j)
            for k in range(min(i, j), max(i, j)):
                t = qh * p ** (i - k) * eta_value(i, j, k)
                key = (i, j, k)
                table[key] = table[key] + t if key in table else t
    return HomOp(n, ctx, table)


def cremmer_gervais(n: int, parameterization: str = "formal-p") -> HomOp:
    """Cremmer-Gervais operator rho_p.

    ``formal-p``: context [q, p] with both parameters formal.
    ``standard``: p = q^(2/n), rebased to s = q^(1/n) so q = s^n, p = s^2.
    """
    _check(n)
    if parameterization in ("formal-p", "formal"):
        ctx = RingCtx(["q", "p"])
        return cg_operator(n, RatFn.gen(ctx, "q"), RatFn.gen(ctx, "p"))
    if parameterization == "standard":
        ctx = RingCtx(["s"])
        return cg_operator(n, RatFn.gen(ctx, "s", n), RatFn.gen(ctx, "s", 2))
    raise ValueError(f"unknown parameterization {parameterization!r}")


def rho1(n: int, ctx: RingCtx | None = None) -> HomOp:
    """rho_1 = qP + qhat eta over a context containing q."""
    ctx = ctx or RingCtx(["q"])
    q = RatFn.gen(ctx, "q")
    return family1(n, q, qhat(q))


def family1(n: int, a, b) -> HomOp:
    """a P + b eta."""
    ctx = _ctx_of(a, b)
    a, b = as_ratfn(a, ctx), as_ratfn(b, ctx)
    return lincomb([(a, flip_op(n, ctx)), (b, eta_op(n, ctx))])


def family2(n: int, a, b) -> HomOp:
    """a P + b (I - eta)."""
    ctx = _ctx_of(a, b)
    a, b = as_ratfn(a, ctx), as_ratfn(b, ctx)
    return lincomb([(a, flip_op(n, ctx)), (b, id_op(n, ctx)), (-b, eta_op(n, ctx))])


def abc_op(n: int, a, b, c) -> HomOp:
    """a I + b P + c eta."""
    ctx = _ctx_of(a, b, c)
    a, b, c = (as_ratfn(v, ctx) for v in (a, b, c))
    return lincomb([(a, id_op(n, ctx)), (b, flip_op(n, ctx)), (c, eta_op(n, ctx))])


def _ctx_of(*vals) -> RingCtx:
    for v in vals:
        if hasattr(v, "ctx"):
            return v.ctx
    return EMPTY

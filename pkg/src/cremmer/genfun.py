"""Generating functions of homogeneous operators.

G_{i,j}(x) = sum_k gamma(i,j,k) x^k.  Operators whose generating functions
have the shape alpha(x) x^i + beta(x) x^j are described by the pair
(alpha, beta); the YBE for them reduces to two functional identities in x, y.
The generator names ``x`` and ``y`` are reserved for this purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContextMismatch, ExponentOutOfRange, IndexOutOfRange, NotPolynomial
from .parse import parse_coeff
from .ring import LaurentPoly, RatFn, RingCtx, mono_subst
from .tensor import HomOp, lift12, lift23

X, Y = "x", "y"


@dataclass(frozen=True)
class GenFnPair:
    alpha: RatFn
    beta: RatFn

    def __post_init__(self):
        if self.alpha.ctx != self.beta.ctx:
            raise ContextMismatch("alpha and beta must share a context")
        ctx = self.alpha.ctx
        if X not in ctx:
            raise ValueError("pair context must contain the generator 'x'")
        if Y in ctx:
            iy = ctx.index[Y]
            for f in (self.alpha, self.beta):
                for part in (f.num, f.den):
                    if any(e[iy] for e in part.terms):
                        raise ValueError("alpha and beta must not involve 'y'")

    @property
    def ctx(self) -> RingCtx:
        return self.alpha.ctx

    @classmethod
    def parse(cls, alpha: str, beta: str, ctx: RingCtx) -> GenFnPair:
        return cls(parse_coeff(alpha, ctx), parse_coeff(beta, ctx))


def pair_ctx(*params: str) -> RingCtx:
    """Context with the given formal parameters followed by x and y."""
    return RingCtx([*params, X, Y])


def _with_x(ctx: RingCtx) -> RingCtx:
    if X in ctx or Y in ctx:
        raise ValueError("operator context must not use the reserved names 'x' or 'y'")
    return ctx.extend([X])


def genfun(g: HomOp, i: int, j: int) -> RatFn:
    """sum_k g(i,j,k) x^k, over the operator's context extended by x."""
    if not (1 <= i <= g.n and 1 <= j <= g.n):
        raise IndexOutOfRange(f"({i}, {j}) outside 1..{g.n}")
    ctx = _with_x(g.ctx)
    total = RatFn.const(ctx, 0)
    for k in range(1, g.n + 1):
        c = g.get(i, j, k)
        if c is not None:
            total = total + c.to_ctx(ctx) * RatFn.gen(ctx, X, k)
    return total


def pair_value(pair: GenFnPair, i: int, j: int) -> RatFn:
    ctx = pair.ctx
    return pair.alpha * RatFn.gen(ctx, X, i) + pair.beta * RatFn.gen(ctx, X, j)


def op_from_pair(n: int, pair: GenFnPair) -> HomOp:
    """The homogeneous operator whose generating functions are alpha x^i + beta x^j.

    The operator's context is the pair's context without x and y.
    """
    if n < 1:
        raise ValueError("n must be positive")
    pctx = pair.ctx
    base = pctx.without([g for g in (X, Y) if g in pctx])
    ix = pctx.index[X]
    keep = [pctx.index[g] for g in base.generators]
    table = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            f = pair_value(pair, i, j)
            poly = f.num.divexact(f.den) if not f.den.is_one() else f.num
            if poly is None:
                raise NotPolynomial(f"alpha x^{i} + beta x^{j} is not a Laurent polynomial")
            groups: dict[int, dict] = {}
            for e, c in poly.terms.items():
                k = e[ix]
                if not (1 <= k <= n and 1 <= i + j - k <= n):
                    raise ExponentOutOfRange(f"G_{i},{j} has exponent x^{k} outside the range for n={n}")
                groups.setdefault(k, {})[tuple(e[t] for t in keep)] = c
            for k, terms in groups.items():
                table[(i, j, k)] = RatFn(LaurentPoly.from_terms(base, terms))
    return HomOp(n, base, table)


# ---------------------------------------------------------------------------
# functional identities


def _subst_table(f: RatFn) -> dict[str, RatFn]:
    """f evaluated at x, y, x/y, y/x and 1/y (ctx must contain x and y)."""
    ctx = f.ctx
    x, y = ctx.gen(X), ctx.gen(Y)
    inv_x, inv_y = ctx.gen(X, -1), ctx.gen(Y, -1)
    return {
        "x": f,
        "y": mono_subst(f, {X: y}),
        "x/y": mono_subst(f, {X: x * inv_y}),
        "y/x": mono_subst(f, {X: y * inv_x}),
        "1/y": mono_subst(f, {X: inv_y}),
        "1/x": mono_subst(f, {X: inv_x}),
    }


def _xy_ctx(ctx: RingCtx) -> RingCtx:
    return ctx if Y in ctx else ctx.extend([Y])


def cond1_sides(alpha: RatFn) -> tuple[RatFn, RatFn]:
    """alpha(x) alpha(y)  vs  alpha(x/y) alpha(y) + alpha(x) alpha(y/x)."""
    alpha = alpha.to_ctx(_xy_ctx(alpha.ctx))
    a = _subst_table(alpha)
    return a["x"] * a["y"], a["x/y"] * a["y"] + a["x"] * a["y/x"]


def cond2_sides(alpha: RatFn, beta: RatFn) -> tuple[RatFn, RatFn]:
    """alpha(x/y)^2 alpha(y) + beta(x/y) alpha(x) beta(y/x)
    vs alpha(y)^2 alpha(x/y) + beta(y) alpha(x) beta(1/y)."""
    ctx = _xy_ctx(alpha.ctx)
    a = _subst_table(alpha.to_ctx(ctx))
    b = _subst_table(beta.to_ctx(ctx))
    lhs = a["x/y"] ** 2 * a["y"] + b["x/y"] * a["x"] * b["y/x"]
    rhs = a["y"] ** 2 * a["x/y"] + b["y"] * a["x"] * b["1/y"]
    return lhs, rhs


def cond1_check(alpha: RatFn) -> bool:
    lhs, rhs = cond1_sides(alpha)
    return lhs.equals(rhs)


def cond2_check(alpha: RatFn, beta: RatFn) -> bool:
    lhs, rhs = cond2_sides(alpha, beta)
    return lhs.equals(rhs)


def gfybe_check(pair: GenFnPair) -> bool:
    """beta = 0, or both functional identities hold."""
    if pair.beta.is_zero():
        return True
    return cond1_check(pair.alpha) and cond2_check(pair.alpha, pair.beta)


# ---------------------------------------------------------------------------
# triple products


def _xy(ctx: RingCtx) -> RingCtx:
    if X in ctx or Y in ctx:
        raise ValueError("operator context must not use the reserved names 'x' or 'y'")
    return ctx.extend([X, Y])


def triple_products(g: HomOp):
    """(g23 g12 g23, g12 g23 g12) as TriOps."""
    a, b = lift12(g), lift23(g)
    return b.compose(a.compose(b)), a.compose(b.compose(a))


def triple_genfun(g: HomOp, i: int, j: int, k: int, order: str = "232", _products=None) -> RatFn:
    """sum over outputs e_c (x) e_h (x) e_* of the triple product's coefficient times x^c y^h.

    ``order`` selects g23 g12 g23 ("232") or g12 g23 g12 ("121").
    """
    n = g.n
    if not all(1 <= t <= n for t in (i, j, k)):
        raise IndexOutOfRange(f"({i}, {j}, {k}) outside 1..{n}")
    prods = _products or triple_products(g)
    op = prods[0] if order == "232" else prods[1] if order == "121" else None
    if op is None:
        raise ValueError(f"unknown order {order!r}")
    ctx = _xy(g.ctx)
    total = RatFn.const(ctx, 0)
    for (c, h, _), coeff in sorted(op.cols.get((i, j, k), {}).items()):
        mono = RatFn(LaurentPoly.monomial(ctx, (0,) * len(g.ctx) + (c, h)))
        total = total + coeff.to_ctx(ctx) * mono
    return total


def _xy_mono(ctx: RingCtx, a: int, b: int) -> RatFn:
    return RatFn(LaurentPoly.monomial(ctx, [0] * (len(ctx) - 2) + [a, b]))


def six_term_forms(pair: GenFnPair, ctx: RingCtx, i: int, j: int, k: int) -> tuple[RatFn, RatFn]:
    """Closed forms for the 232 and 121 triple generating functions.

    ``ctx`` must end with x, y; the pair is re-expressed in it by name.
    """
    a = _subst_table(pair.alpha.to_ctx(ctx))
    b = _subst_table(pair.beta.to_ctx(ctx))
    m = lambda u, v: _xy_mono(ctx, u, v)  # noqa: E731
    lhs = (
        m(i, k) * (b["y"] * a["x"] * a["1/y"] + a["y"] * a["x/y"] * b["y"])
        + m(i, j) * (a["y"] * a["x/y"] * a["y"] + b["y"] * a["x"] * b["1/y"])
        + m(j, i) * a["y"] * b["x/y"] * a["x"]
        + m(k, i) * a["y"] * b["x/y"] * b["x"]
        + m(j, k) * b["y"] * b["x"] * a["x/y"]
        + m(k, j) * b["y"] * b["x"] * b["x/y"]
    )
    rhs = (
        m(i, j) * (a["x/y"] ** 2 * a["y"] + b["x/y"] * a["x"] * b["y/x"])
        + m(j, i) * (a["x/y"] * a["y"] * b["x/y"] + b["x/y"] * a["x"] * a["y/x"])
        + m(i, k) * a["x/y"] * b["y"] * a["x"]
        + m(k, i) * a["y"] * b["x/y"] * b["x"]
        + m(j, k) * b["y"] * b["x"] * a["x/y"]
        + m(k, j) * b["y"] * b["x"] * b["x/y"]
    )
    return lhs, rhs


def triple_expansion_mismatch(pair: GenFnPair, n: int):
    g = op_from_pair(n, pair)
    ctx = _xy(g.ctx)
    prods = triple_products(g)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                lhs_form, rhs_form = six_term_forms(pair, ctx, i, j, k)
                t232 = triple_genfun(g, i, j, k, "232", prods)
                if not t232.equals(lhs_form):
                    return ("232", i, j, k), t232, lhs_form
                t121 = triple_genfun(g, i, j, k, "121", prods)
                if not t121.equals(rhs_form):
                    return ("121", i, j, k), t121, rhs_form
    return None


def triple_expansion_check(pair: GenFnPair, n: int) -> bool:
    """Both triple products' generating functions match their six-term closed forms."""
    return triple_expansion_mismatch(pair, n) is None


def eta_triple_closed_form(ctx: RingCtx, i: int, j: int, k: int) -> RatFn:
    """(x^k y^j + x^j y^i + x^i y^k - x^k y^i - x^i y^j - x^j y^k) / ((x-1)(y-1)(x/y-1))."""
    m = lambda u, v: _xy_mono(ctx, u, v)  # noqa: E731
    num = m(k, j) + m(j, i) + m(i, k) - m(k, i) - m(i, j) - m(j, k)
    one = RatFn.const(ctx, 1)
    den = (m(1, 0) - one) * (m(0, 1) - one) * (m(1, -1) - one)
    return num / den


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReflectionResult:
    difference: RatFn
    is_constant: bool
    matches_b_times_b_minus_c: bool
    matches_b_times_b_minus_1: bool


def beta_reflection_check(b: RatFn, c: RatFn) -> ReflectionResult:
    """Examine beta(x) beta(1/x) - alpha(x) alpha(1/x) for alpha = c/(1-x), beta = b - alpha.

    ``b`` and ``c`` live in a context containing x (constants in x).
    """
    ctx = b.ctx
    if X not in ctx:
        raise ValueError("context must contain 'x'")
    one = RatFn.const(ctx, 1)
    alpha = c / (one - RatFn.gen(ctx, X))
    beta = b - alpha
    inv = {X: ctx.gen(X, -1)}
    diff = beta * mono_subst(beta, inv) - alpha * mono_subst(alpha, inv)
    red = diff.reduced()
    ix = ctx.index[X]
    is_const = red.den.is_one() and all(e[ix] == 0 for e in red.num.terms)
    return ReflectionResult(
        difference=red,
        is_constant=is_const,
        matches_b_times_b_minus_c=diff.equals(b * (b - c)),
        matches_b_times_b_minus_1=diff.equals(b * (b - one)),
    )


def pair_for_abc(ctx: RingCtx, a, b, c) -> GenFnPair:
    """(a + c/(1-x), b - c/(1-x)), the pair of a I + b P + c eta."""
    one = RatFn.const(ctx, 1)
    conv = lambda v: v if isinstance(v, RatFn) else RatFn.const(ctx, Fraction(v))  # noqa: E731
    a, b, c = conv(a), conv(b), conv(c)
    tail = c / (one - RatFn.gen(ctx, X))
    return GenFnPair(a + tail, b - tail)

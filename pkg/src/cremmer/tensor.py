"""Homogeneous operators on V(x)V and sparse operators on tensor powers of V.

Basis indices run over 1..n.  A :class:`HomOp` stores gamma(i, j, k), the
coefficient of e_k (x) e_{i+j-k} in gamma(e_i (x) e_j).  A :class:`SparseOp`
stores columns: ``cols[in_index][out_index] = coefficient`` where indices are
tuples of basis labels; composition is the ordinary matrix product.
"""

from __future__ import annotations

import itertools
import json
from typing import Callable, Iterable, Iterator, Mapping

from .errors import ContextMismatch, DimensionMismatch, FormatError, IndexOutOfRange
from .parse import format_ratfn, parse_coeff
from .ring import RatFn, RingCtx, as_ratfn

Key3 = tuple[int, int, int]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")


class HomOp:
    """Homogeneous operator on V (x) V with sparse table (i, j, k) -> RatFn."""

    __slots__ = ("n", "ctx", "table")

    def __init__(self, n: int, ctx: RingCtx, table: Mapping[Key3, RatFn] | None = None):
        _check_n(n)
        self.n = n
        self.ctx = ctx
        clean: dict[Key3, RatFn] = {}
        for (i, j, k), c in (table or {}).items():
            if not (1 <= i <= n and 1 <= j <= n and 1 <= k <= n and 1 <= i + j - k <= n):
                raise IndexOutOfRange(f"key {(i, j, k)} outside the range for n={n}")
            c = as_ratfn(c, ctx)
            if c.ctx != ctx:
                raise ContextMismatch(f"coefficient at {(i, j, k)} lives in {c.ctx!r}")
            if not c.is_zero():
                clean[(i, j, k)] = c
        self.table = clean

    def __getitem__(self, key: Key3) -> RatFn:
        c = self.table.get(key)
        return c if c is not None else RatFn.const(self.ctx, 0)

    def get(self, i: int, j: int, k: int):
        """Coefficient or None when structurally zero (including out-of-range keys)."""
        return self.table.get((i, j, k))

    def __repr__(self):
        return f"HomOp(n={self.n}, ctx={self.ctx!r}, nnz={len(self.table)})"

    def __eq__(self, other):
        if not isinstance(other, HomOp):
            return NotImplemented
        return op_eq(self, other)

    __hash__ = None

    def rows(self, i: int, j: int) -> list[tuple[int, RatFn]]:
        return [(k, self.table[(i, j, k)]) for k in range(1, self.n + 1) if (i, j, k) in self.table]

    def map_coeffs(self, fn: Callable[[RatFn], RatFn], ctx: RingCtx | None = None) -> HomOp:
        return HomOp(self.n, ctx or self.ctx, {key: fn(c) for key, c in self.table.items()})

    def to_ctx(self, ctx: RingCtx) -> HomOp:
        if ctx == self.ctx:
            return self
        return self.map_coeffs(lambda c: c.to_ctx(ctx), ctx)

    def __add__(self, other: HomOp) -> HomOp:
        return lincomb([(RatFn.const(self.ctx, 1), self), (RatFn.const(self.ctx, 1), other)])

    def __sub__(self, other: HomOp) -> HomOp:
        return lincomb([(RatFn.const(self.ctx, 1), self), (RatFn.const(self.ctx, -1), other)])

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def scaled(self, c) -> HomOp:
        c = as_ratfn(c, self.ctx)
        return self.map_coeffs(lambda v: v * c)

    def __matmul__(self, other: HomOp) -> HomOp:
        return compose2(self, other)

    def to_sparse(self) -> SparseOp:
        """The operator as a degree-2 sparse matrix."""
        cols: dict[tuple, dict[tuple, RatFn]] = {}
        for (i, j, k), c in self.table.items():
            cols.setdefault((i, j), {})[(k, i + j - k)] = c
        return SparseOp(2, self.n, self.ctx, cols)


def _same_space(*ops) -> None:
    first = ops[0]
    for op in ops[1:]:
        if op.n != first.n:
            raise DimensionMismatch(f"n={first.n} vs n={op.n}")
        if op.ctx != first.ctx:
            raise ContextMismatch(f"{first.ctx!r} vs {op.ctx!r}")


def apply(g: HomOp, i: int, j: int) -> list[tuple[int, RatFn]]:
    """Nonzero (k, coefficient) pairs of g(e_i (x) e_j), k ascending."""
    if not (1 <= i <= g.n and 1 <= j <= g.n):
        raise IndexOutOfRange(f"({i}, {j}) outside 1..{g.n}")
    return g.rows(i, j)


def lincomb(terms: Iterable[tuple[object, HomOp]]) -> HomOp:
    terms = list(terms)
    if not terms:
        raise ValueError("empty linear combination")
    _same_space(*(op for _, op in terms))
    n, ctx = terms[0][1].n, terms[0][1].ctx
    out: dict[Key3, RatFn] = {}
    for c, op in terms:
        c = as_ratfn(c, ctx)
        if c.ctx != ctx:
            raise ContextMismatch(f"scalar lives in {c.ctx!r}")
        if c.is_zero():
            continue
        for key, v in op.table.items():
            t = v * c
            out[key] = out[key] + t if key in out else t
    return HomOp(n, ctx, out)


def compose2(g: HomOp, d: HomOp) -> HomOp:
    """g after d: (g d)(i, j, k) = sum_s g(s, i+j-s, k) d(i, j, s)."""
    _same_space(g, d)
    n = g.n
    gt, dt = g.table, d.table
    out: dict[Key3, RatFn] = {}
    for (i, j, s), dv in dt.items():
        t = i + j - s
        for k in range(1, n + 1):
            gv = gt.get((s, t, k))
            if gv is None:
                continue
            key = (i, j, k)
            prod = gv * dv
            out[key] = out[key] + prod if key in out else prod
    return HomOp(n, g.ctx, out)


def op_eq(a: HomOp, b: HomOp) -> bool:
    return first_homop_mismatch(a, b) is None


def first_homop_mismatch(a: HomOp, b: HomOp):
    """Smallest key (lexicographic) where a and b differ, with both values."""
    _same_space(a, b)
    for key in sorted(set(a.table) | set(b.table)):
        if not a[key].equals(b[key]):
            return key, a[key], b[key]
    return None


def transpose(g: HomOp) -> HomOp:
    """P g P."""
    from .families import flip_op

    p = flip_op(g.n, g.ctx)
    return compose2(p, compose2(g, p))


def identity_like(g: HomOp) -> HomOp:
    from .families import id_op

    return id_op(g.n, g.ctx)


def hecke_check(g: HomOp, a, b) -> bool:
    """True iff (g - a)(g + (a - b)) vanishes."""
    a = as_ratfn(a, g.ctx)
    b = as_ratfn(b, g.ctx)
    one = RatFn.const(g.ctx, 1)
    ident = identity_like(g)
    left = lincomb([(one, g), (-a, ident)])
    right = lincomb([(one, g), (a - b, ident)])
    return not compose2(left, right).table


# ---------------------------------------------------------------------------
# sparse operators on V^(x)d


class SparseOp:
    """Sparse matrix on V^(x)degree: ``cols[in][out] = coefficient``."""

    __slots__ = ("degree", "n", "ctx", "cols")

    def __init__(self, degree: int, n: int, ctx: RingCtx, cols: dict[tuple, dict[tuple, RatFn]]):
        self.degree = degree
        self.n = n
        self.ctx = ctx
        self.cols = {i: {o: c for o, c in col.items() if not c.is_zero()} for i, col in cols.items()}
        self.cols = {i: col for i, col in self.cols.items() if col}

    def __repr__(self):
        nnz = sum(len(c) for c in self.cols.values())
        return f"{type(self).__name__}(degree={self.degree}, n={self.n}, nnz={nnz})"

    def entries(self) -> Iterator[tuple[tuple, tuple, RatFn]]:
        """(out, in, coefficient) triples in lexicographic (out, in) order."""
        flat = [(o, i, c) for i, col in self.cols.items() for o, c in col.items()]
        flat.sort(key=lambda t: (t[0], t[1]))
        return iter(flat)

    def get(self, out: tuple, inp: tuple) -> RatFn:
        c = self.cols.get(inp, {}).get(out)
        return c if c is not None else RatFn.const(self.ctx, 0)

    def basis(self) -> list[tuple]:
        return list(itertools.product(range(1, self.n + 1), repeat=self.degree))

    def _like(self, cols) -> SparseOp:
        new = object.__new__(type(self))
        SparseOp.__init__(new, self.degree, self.n, self.ctx, cols)
        return new

    def compose(self, other: SparseOp) -> SparseOp:
        """self after other."""
        if (self.degree, self.n) != (other.degree, other.n):
            raise DimensionMismatch("operators act on different spaces")
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx!r} vs {other.ctx!r}")
        left = self.cols
        cols = {}
        for inp, col in other.cols.items():
            acc: dict[tuple, RatFn] = {}
            for mid, c1 in col.items():
                lcol = left.get(mid)
                if not lcol:
                    continue
                for out, c2 in lcol.items():
                    prod = c2 * c1
                    acc[out] = acc[out] + prod if out in acc else prod
            cols[inp] = acc
        return self._like(cols)

    def __matmul__(self, other):
        return self.compose(other)

    def __sub__(self, other: SparseOp) -> SparseOp:
        cols = {i: dict(c) for i, c in self.cols.items()}
        for inp, col in other.cols.items():
            tgt = cols.setdefault(inp, {})
            for out, c in col.items():
                tgt[out] = tgt[out] - c if out in tgt else -c
        return self._like(cols)

    def map_coeffs(self, fn: Callable[[RatFn], RatFn], ctx: RingCtx | None = None) -> SparseOp:
        new = object.__new__(type(self))
        cols = {i: {o: fn(c) for o, c in col.items()} for i, col in self.cols.items()}
        SparseOp.__init__(new, self.degree, self.n, ctx or self.ctx, cols)
        return new

    def is_zero(self) -> bool:
        return not self.cols


class TriOp(SparseOp):
    """Operator on V (x) V (x) V; keys conserve the index sum."""

    def __init__(self, n: int, ctx: RingCtx, cols: dict[tuple, dict[tuple, RatFn]] | None = None):
        super().__init__(3, n, ctx, cols or {})


def first_mismatch(a: SparseOp, b: SparseOp):
    """Smallest (out, in) where a and b differ, with both values; None if equal."""
    keys = set()
    for op in (a, b):
        for inp, col in op.cols.items():
            keys.update((out, inp) for out in col)
    for out, inp in sorted(keys):
        va, vb = a.get(out, inp), b.get(out, inp)
        if not va.equals(vb):
            return (out, inp), va, vb
    return None


def tri_eq(f: SparseOp, g: SparseOp) -> bool:
    return first_mismatch(f, g) is None


def lift12(g: HomOp) -> TriOp:
    n = g.n
    cols: dict[tuple, dict[tuple, RatFn]] = {}
    for (i, j, k), c in g.table.items():
        for t in range(1, n + 1):
            cols.setdefault((i, j, t), {})[(k, i + j - k, t)] = c
    return TriOp(n, g.ctx, cols)


def lift23(g: HomOp) -> TriOp:
    n = g.n
    cols: dict[tuple, dict[tuple, RatFn]] = {}
    for (i, j, k), c in g.table.items():
        for t in range(1, n + 1):
            cols.setdefault((t, i, j), {})[(t, k, i + j - k)] = c
    return TriOp(n, g.ctx, cols)


def compose3(f: TriOp, g: TriOp) -> TriOp:
    return f.compose(g)


def ybe_sides(g: HomOp) -> tuple[TriOp, TriOp]:
    """(g12 g23 g12, g23 g12 g23)."""
    a, b = lift12(g), lift23(g)
    return a.compose(b.compose(a)), b.compose(a.compose(b))


def ybe_residual(g: HomOp) -> TriOp:
    lhs, rhs = ybe_sides(g)
    return lhs - rhs


def _ybe_identity_mismatch(g: HomOp):
    """Check the coefficient identity entry by entry.

    For all i, j, k, c, h:
      sum_a g(j,k,a) g(i,a,c) g(i+a-c, j+k-a, h)
        = sum_s g(i,j,s) g(i+j-s, k, h+c-s) g(s, h+c-s, c)
    """
    n = g.n
    get = g.table.get
    rng = range(1, n + 1)
    zero = RatFn.const(g.ctx, 0)
    for i, j, k in itertools.product(rng, repeat=3):
        lhs: dict[tuple[int, int], RatFn] = {}
        for a in rng:
            g1 = get((j, k, a))
            if g1 is None:
                continue
            for c in rng:
                g2 = get((i, a, c))
                if g2 is None:
                    continue
                for h in rng:
                    g3 = get((i + a - c, j + k - a, h))
                    if g3 is None:
                        continue
                    t = g1 * g2 * g3
                    lhs[(c, h)] = lhs[(c, h)] + t if (c, h) in lhs else t
        rhs: dict[tuple[int, int], RatFn] = {}
        for s in rng:
            g1 = get((i, j, s))
            if g1 is None:
                continue
            for c in rng:
                for h in rng:
                    m = h + c - s
                    g2 = get((i + j - s, k, m))
                    if g2 is None:
                        continue
                    g3 = get((s, m, c))
                    if g3 is None:
                        continue
                    t = g1 * g2 * g3
                    rhs[(c, h)] = rhs[(c, h)] + t if (c, h) in rhs else t
        for c, h in sorted(set(lhs) | set(rhs)):
            lv, rv = lhs.get((c, h), zero), rhs.get((c, h), zero)
            if not lv.equals(rv):
                return (i, j, k, c, h), lv, rv
    return None


def ybe_check(g: HomOp, method: str = "compose") -> bool:
    """Braid relation g12 g23 g12 = g23 g12 g23, decided exactly.

    ``method`` is ``"compose"`` (triple products of lifted operators),
    ``"identity"`` (the summed coefficient identity) or ``"both"``, which
    raises if the two routes disagree.
    """
    if method == "compose":
        return tri_eq(*ybe_sides(g))
    if method == "identity":
        return _ybe_identity_mismatch(g) is None
    if method == "both":
        a = tri_eq(*ybe_sides(g))
        b = _ybe_identity_mismatch(g) is None
        if a != b:
            raise AssertionError(f"YBE routes disagree: compose={a}, identity={b}")
        return a
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# dense materialisation


def to_dense(g: HomOp) -> list[list[RatFn]]:
    """n^2 x n^2 matrix, row = output (k, l), column = input (i, j), 0-based order."""
    n = g.n
    zero = RatFn.const(g.ctx, 0)
    idx = {(a, b): (a - 1) * n + (b - 1) for a in range(1, n + 1) for b in range(1, n + 1)}
    m = [[zero] * (n * n) for _ in range(n * n)]
    for (i, j, k), c in g.table.items():
        m[idx[(k, i + j - k)]][idx[(i, j)]] = c
    return m


# ---------------------------------------------------------------------------
# JSON operator format


def homop_to_json(g: HomOp) -> dict:
    entries = [
        {"i": i, "j": j, "k": k, "coeff": format_ratfn(c)}
        for (i, j, k), c in sorted(g.table.items())
    ]
    return {"kind": "homogeneous", "n": g.n, "generators": list(g.ctx.generators), "entries": entries}


def homop_from_json(doc: dict) -> HomOp:
    if not isinstance(doc, dict) or doc.get("kind") != "homogeneous":
        raise FormatError("expected an object with kind 'homogeneous'")
    try:
        n = int(doc["n"])
        gens = list(doc.get("generators", []))
        entries = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed operator document: {exc}") from exc
    ctx = RingCtx(gens)
    table: dict[Key3, RatFn] = {}
    for pos, ent in enumerate(entries):
        try:
            key = (int(ent["i"]), int(ent["j"]), int(ent["k"]))
            src = str(ent["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"entry {pos}: {exc}") from exc
        i, j, k = key
        if not (1 <= i <= n and 1 <= j <= n and 1 <= k <= n and 1 <= i + j - k <= n):
            raise IndexOutOfRange(f"entry {pos}: key {key} outside the range for n={n}")
        if key in table:
            raise FormatError(f"entry {pos}: duplicate key {key}")
        table[key] = parse_coeff(src, ctx)
    return HomOp(n, ctx, table)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


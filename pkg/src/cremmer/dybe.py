"""Dynamical R-matrices over the torus coefficient field.

Coefficients live in the fraction field of Q[s^+-1, K_1^+-1, ..., K_n^+-1]
modulo K_1 ... K_n = 1, with q = s^n so that q^(2/n) = s^2.  The weight
pairing is (nu_i, nu_j) = delta_ij - 1/n, so shifting the monomial K^m by a
weight l multiplies it by s^(n sum_a l_a m_a - (sum l)(sum m)).

A morphism V^(x)d -> V^(x)d (x) B is a :class:`DynOp`: a sparse matrix whose
composition is the plain matrix product over the (commutative) field.  The
twisted tensor product of two maps shifts the left factor's coefficient by
the weight of the right factor's output index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, FormatError
from .families import cremmer_gervais
from .linalg import bareiss_det
from .parse import format_ratfn, parse_coeff
from .ring import LaurentPoly, RatFn, RingCtx, mono_subst
from .tensor import HomOp, SparseOp, first_mismatch


def torus_ctx(n: int) -> RingCtx:
    ks = [f"K{a}" for a in range(1, n + 1)]
    return RingCtx(["s", *ks], relation=ks)


def weight_vec(coords: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative modulo the all-ones vector (last coordinate 0)."""
    last = coords[-1]
    return tuple(c - last for c in coords)


def nu(n: int, k: int) -> tuple[int, ...]:
    """Weight of e_k (1-based)."""
    return weight_vec(tuple(1 if a == k else 0 for a in range(1, n + 1)))


def pairing_times_n(lam: Sequence[int], mu: Sequence[int]) -> int:
    """n (lam, mu) for lam = sum l_a nu_a, mu = sum m_a nu_a."""
    n = len(lam)
    return n * sum(a * b for a, b in zip(lam, mu)) - sum(lam) * sum(mu)


class Torus:
    """Helpers for the coefficient field attached to rank-n weights."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("torus rank must be positive")
        self.n = n
        self.ctx = torus_ctx(n)

    def mono(self, s_exp: int = 0, k_exps: Sequence[int] | None = None) -> LaurentPoly:
        k_exps = list(k_exps) if k_exps is not None else [0] * self.n
        return LaurentPoly.monomial(self.ctx, [s_exp, *k_exps])

    def K(self, a: int, power: int = 1) -> LaurentPoly:
        return LaurentPoly.gen(self.ctx, f"K{a}", power)

    def s(self, power: int = 1) -> RatFn:
        return RatFn.gen(self.ctx, "s", power)

    def q(self) -> RatFn:
        return self.s(self.n)

    def shift_images(self, lam: Sequence[int]) -> dict[str, tuple[int, ...]]:
        n = self.n
        total = sum(lam)
        images = {}
        for a in range(1, n + 1):
            e = [0] * (n + 1)
            e[0] = n * lam[a - 1] - total
            e[a] = 1
            images[f"K{a}"] = tuple(e)
        return images


def sigma_shift(b, lam: Sequence[int], torus: Torus | None = None):
    """b^lam: every monomial K^m is multiplied by s^(n (lam, m)); s is fixed."""
    torus = torus or Torus(len(lam))
    if len(lam) != torus.n:
        raise DimensionMismatch("weight length differs from torus rank")
    if not any(lam):
        return b
    return mono_subst(b, torus.shift_images(lam))


class DynOp(SparseOp):
    """Morphism V^(x)degree -> V^(x)degree (x) B with torus coefficients."""

    def __init__(self, degree: int, n: int, cols: dict, ctx: RingCtx | None = None):
        super().__init__(degree, n, ctx or torus_ctx(n), cols)

    @property
    def torus(self) -> Torus:
        return Torus(self.n)


# ---------------------------------------------------------------------------
# standard solution


def alpha_beta(torus: Torus) -> tuple[RatFn, RatFn]:
    """alpha(x) = (q - 1/q)/(1 - x), beta(x) = (1/q - q x)/(1 - x) over torus ctx + [x]."""
    ctx = torus.ctx.extend(["x"])
    q = RatFn.gen(ctx, "s", torus.n)
    x = RatFn.gen(ctx, "x")
    one = RatFn.const(ctx, 1)
    return (q - q.inverse()) / (one - x), (q.inverse() - q * x) / (one - x)


def _root_arg(torus: Torus, i: int, j: int) -> LaurentPoly:
    """(K_{nu_j - nu_i} q^(-delta_ij))^2."""
    n = torus.n
    k = [0] * n
    k[j - 1] += 2
    k[i - 1] -= 2
    return torus.mono(-2 * n if i == j else 0, k)


def standard_solution(n: int, convention: str = "theorem") -> DynOp:
    """Standard dynamical solution R.

    R(e_i (x) e_j) = e_i (x) e_j alpha(X_ij) + e_j (x) e_i beta(X_*) with
    X_ij = (K_{nu_j - nu_i} q^(-delta_ij))^2.  ``convention="theorem"`` uses
    X_* = X_ij, the flip term indexed by the input pair.  ``"intertwining"``
    uses X_* = X_ji, indexed by the output pair, which is the form taken in
    the change-of-basis matrix identity.  Both satisfy the sigma-DYBE.
    """
    if n < 2:
        raise ValueError("standard solution needs n >= 2")
    if convention not in ("theorem", "intertwining"):
        raise ValueError(f"unknown convention {convention!r}")
    torus = Torus(n)
    alpha, beta = alpha_beta(torus)
    tctx = torus.ctx

    def at(f: RatFn, arg: LaurentPoly) -> RatFn:
        return mono_subst(f, {"x": arg}, tctx).reduced()

    cols: dict = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            col = cols.setdefault((i, j), {})
            diag = at(alpha, _root_arg(torus, i, j))
            barg = _root_arg(torus, i, j) if convention == "theorem" else _root_arg(torus, j, i)
            flip = at(beta, barg)
            if i == j:
                col[(i, i)] = (diag + flip).reduced()
            else:
                col[(i, j)] = diag
                col[(j, i)] = flip
    return DynOp(2, n, cols, tctx)


def constant_dynop(g: HomOp) -> DynOp:
    """Embed a homogeneous operator with coefficients in Q(s) (or Q) as a degree-2 DynOp."""
    torus = Torus(g.n)
    if any(name not in ("s",) for name in g.ctx.generators):
        raise ValueError("only coefficients in Q(s) can be embedded")
    sp = g.to_sparse()
    return DynOp(2, g.n, {i: {o: c.to_ctx(torus.ctx) for o, c in col.items()} for i, col in sp.cols.items()})


# ---------------------------------------------------------------------------
# twisted tensor products


def tensor_tilde(f: DynOp, g: DynOp) -> DynOp:
    """f ~(x) g for degree-1 maps: entry[(c,d),(i,j)] = (f^c_i)^(nu_d) g^d_j."""
    if f.degree != 1 or g.degree != 1 or f.n != g.n:
        raise DimensionMismatch("tensor_tilde expects two degree-1 maps of equal rank")
    torus = Torus(f.n)
    cols: dict = {}
    for (i,), fcol in f.cols.items():
        for (j,), gcol in g.cols.items():
            col = cols.setdefault((i, j), {})
            for (d,), gv in gcol.items():
                lam = nu(f.n, d)
                for (c,), fv in fcol.items():
                    col[(c, d)] = sigma_shift(fv, lam, torus) * gv
    return DynOp(2, f.n, cols)


def identity_map(n: int, degree: int = 1) -> DynOp:
    one = RatFn.const(torus_ctx(n), 1)
    basis = itertools.product(range(1, n + 1), repeat=degree)
    return DynOp(degree, n, {b: {b: one} for b in basis})


def lift12_dyn(r: DynOp) -> DynOp:
    """R (x)~ 1: coefficient for third index t shifted by nu_t."""
    if r.degree != 2:
        raise DimensionMismatch("lift12_dyn expects a degree-2 operator")
    n = r.n
    torus = Torus(n)
    cols: dict = {}
    for t in range(1, n + 1):
        lam = nu(n, t)
        for (i, j), col in r.cols.items():
            cols[(i, j, t)] = {(c, d, t): sigma_shift(v, lam, torus) for (c, d), v in col.items()}
    return DynOp(3, n, cols, r.ctx)


def lift23_dyn(r: DynOp) -> DynOp:
    """1 (x)~ R: coefficients unchanged."""
    if r.degree != 2:
        raise DimensionMismatch("lift23_dyn expects a degree-2 operator")
    n = r.n
    cols: dict = {}
    for t in range(1, n + 1):
        for (i, j), col in r.cols.items():
            cols[(t, i, j)] = {(t, c, d): v for (c, d), v in col.items()}
    return DynOp(3, n, cols, r.ctx)


def dybe_sides(r: DynOp) -> tuple[DynOp, DynOp]:
    """(R12 R23 R12, R23 R12 R23)."""
    a, b = lift12_dyn(r), lift23_dyn(r)
    return a.compose(b.compose(a)), b.compose(a.compose(b))


def dybe_check(r: DynOp) -> bool:
    return first_mismatch(*dybe_sides(r)) is None


# ---------------------------------------------------------------------------
# change of basis


def cob_matrix(n: int) -> DynOp:
    """A(e_i) = sum_a e_a (x) K_a^(-2i)."""
    if n < 2:
        raise ValueError("change of basis needs n >= 2")
    torus = Torus(n)
    cols = {(i,): {(a,): RatFn(torus.K(a, -2 * i)) for a in range(1, n + 1)} for i in range(1, n + 1)}
    return DynOp(1, n, cols)


def cob_lift1(a: DynOp) -> DynOp:
    return tensor_tilde(a, identity_map(a.n))


def cob_lift2(a: DynOp) -> DynOp:
    return tensor_tilde(identity_map(a.n), a)


def cob_det(a: DynOp) -> LaurentPoly:
    n = a.n
    rows = [[a.get((r,), (c,)) for c in range(1, n + 1)] for r in range(1, n + 1)]
    return bareiss_det(rows)


def cob_sides(n: int, r: DynOp | None = None, rho: HomOp | None = None) -> tuple[DynOp, DynOp]:
    """(R A1 A2, A1 A2 rho) for the standard change of basis."""
    r = r if r is not None else standard_solution(n, "intertwining")
    rho = rho if rho is not None else cremmer_gervais(n, "standard")
    a = cob_matrix(n)
    a1, a2 = cob_lift1(a), cob_lift2(a)
    a12 = a1.compose(a2)
    return r.compose(a12), a12.compose(constant_dynop(rho))


def cob_intertwine_check(n: int, r: DynOp | None = None, rho: HomOp | None = None) -> bool:
    return first_mismatch(*cob_sides(n, r, rho)) is None


def perturbed_rho(n: int) -> HomOp:
    """Standard Cremmer-Gervais operator with q replaced by 1/q (s -> 1/s)."""
    rho = cremmer_gervais(n, "standard")
    inv = {"s": rho.ctx.gen("s", -1)}
    return rho.map_coeffs(lambda c: mono_subst(c, inv))


# ---------------------------------------------------------------------------
# category identities for linear (non-equivariant) maps


@dataclass(frozen=True)
class CategoryReport:
    composition_left: bool  # (f~1)(f'~1) = ff'~1
    composition_right: bool  # (1~g)(1~g') = 1~gg'
    interchange: bool  # (f~1)(1~g) = f~g
    reverse_interchange: bool  # (1~g)(f~1) = f~g, false in general

    @property
    def stated_identities(self) -> bool:
        return self.composition_left and self.composition_right and self.interchange


def category_identity_checks(f: DynOp, f2: DynOp, g: DynOp, g2: DynOp) -> CategoryReport:
    one = identity_map(f.n)
    ff = f.compose(f2)
    gg = g.compose(g2)
    lhs1 = tensor_tilde(f, one).compose(tensor_tilde(f2, one))
    lhs2 = tensor_tilde(one, g).compose(tensor_tilde(one, g2))
    lhs3 = tensor_tilde(f, one).compose(tensor_tilde(one, g))
    rev = tensor_tilde(one, g).compose(tensor_tilde(f, one))
    fg = tensor_tilde(f, g)
    return CategoryReport(
        composition_left=first_mismatch(lhs1, tensor_tilde(ff, one)) is None,
        composition_right=first_mismatch(lhs2, tensor_tilde(one, gg)) is None,
        interchange=first_mismatch(lhs3, fg) is None,
        reverse_interchange=first_mismatch(rev, fg) is None,
    )


def a1_on_three(a: DynOp) -> DynOp:
    """A ~(x) 1 ~(x) 1 on V^(x)3: coefficient shifted by nu_j + nu_k."""
    n = a.n
    torus = Torus(n)
    cols: dict = {}
    for (i,), col in a.cols.items():
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                lam = tuple(x + y for x, y in zip(nu(n, j), nu(n, k)))
                cols[(i, j, k)] = {(c, j, k): sigma_shift(v, lam, torus) for (c,), v in col.items()}
    return DynOp(3, n, cols)


def a1_commutes_with_r23(a: DynOp, r: DynOp) -> bool:
    a1 = a1_on_three(a)
    r23 = lift23_dyn(r)
    return first_mismatch(a1.compose(r23), r23.compose(a1)) is None


# ---------------------------------------------------------------------------
# JSON


def dynop_to_json(op: DynOp) -> dict:
    entries = [
        {"out": list(out), "in": list(inp), "coeff": format_ratfn(c)}
        for out, inp, c in op.entries()
    ]
    return {
        "kind": "dynamical",
        "s_generator": "s",
        "torus_rank": op.n,
        "n": op.n,
        "degree": op.degree,
        "generators": list(op.ctx.generators),
        "entries": entries,
    }


def dynop_from_json(doc: dict) -> DynOp:
    if not isinstance(doc, dict) or doc.get("kind") != "dynamical":
        raise FormatError("expected an object with kind 'dynamical'")
    try:
        n = int(doc["torus_rank"])
        degree = int(doc.get("degree", 2))
        entries = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed dynamical document: {exc}") from exc
    if doc.get("s_generator", "s") != "s":
        raise FormatError("only the generator name 's' is supported for q^(1/n)")
    ctx = torus_ctx(n)
    cols: dict = {}
    for pos, ent in enumerate(entries):
        try:
            out = tuple(int(v) for v in ent["out"])
            inp = tuple(int(v) for v in ent["in"])
            src = str(ent["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"entry {pos}: {exc}") from exc
        if len(out) != degree or len(inp) != degree or not all(1 <= v <= n for v in out + inp):
            raise FormatError(f"entry {pos}: index out of range")
        col = cols.setdefault(inp, {})
        if out in col:
            raise FormatError(f"entry {pos}: duplicate key {(out, inp)}")
        col[out] = parse_coeff(src, ctx)
    return DynOp(degree, n, cols, ctx)

"""Checks with witnesses, in exact or seeded-random mode.

Each ``verify_*`` function returns ``(passed, mismatch)`` where ``mismatch``
is None on success, else ``(key, lhs, rhs)`` for the lexicographically
smallest failing entry.
"""

from __future__ import annotations

import random

from . import dybe as D
from . import genfun as G
from .families import eta_op, flip_op, id_op
from .randeval import EMPTY, specialize, specialize_homop, specialize_sparse, with_point
from .ring import RatFn, RingCtx, as_ratfn
from .tensor import HomOp, compose2, first_homop_mismatch, first_mismatch, lincomb, ybe_sides

MODES = ("exact", "random")


def _rng(mode: str, seed: int | None) -> random.Random | None:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exact":
        return None
    if seed is None:
        raise ValueError("random mode needs a seed")
    return random.Random(seed)


def verify_ybe(g: HomOp, mode: str = "exact", seed: int | None = None):
    rng = _rng(mode, seed)
    if rng is None:
        mm = first_mismatch(*ybe_sides(g))
    else:
        mm = with_point(g.ctx, rng, lambda pt: first_mismatch(*ybe_sides(specialize_homop(g, pt))))
    return mm is None, mm


def hecke_product(g: HomOp, a, b) -> HomOp:
    a, b = as_ratfn(a, g.ctx), as_ratfn(b, g.ctx)
    one = RatFn.const(g.ctx, 1)
    ident = id_op(g.n, g.ctx)
    return compose2(lincomb([(one, g), (-a, ident)]), lincomb([(one, g), (a - b, ident)]))


def verify_hecke(g: HomOp, a, b, mode: str = "exact", seed: int | None = None):
    rng = _rng(mode, seed)
    a, b = as_ratfn(a, g.ctx), as_ratfn(b, g.ctx)

    def run(g, a, b):
        prod = hecke_product(g, a, b)
        if not prod.table:
            return None
        key = min(prod.table)
        return key, prod.table[key], RatFn.const(prod.ctx, 0)

    if rng is None:
        mm = run(g, a, b)
    else:
        mm = with_point(
            g.ctx, rng,
            lambda pt: run(specialize_homop(g, pt), specialize(a, pt), specialize(b, pt)),
        )
    return mm is None, mm


def _pair_identities(pair: G.GenFnPair):
    """Named (lhs, rhs) identities whose conjunction is the gfybe criterion."""
    if pair.beta.is_zero():
        return []
    l1, r1 = G.cond1_sides(pair.alpha)
    l2, r2 = G.cond2_sides(pair.alpha, pair.beta)
    return [("cond1", l1, r1), ("cond2", l2, r2)]


def verify_gfybe(pair: G.GenFnPair, mode: str = "exact", seed: int | None = None):
    """Returns (passed, mismatch, sub-verdicts)."""
    rng = _rng(mode, seed)
    subs = {"beta_zero": pair.beta.is_zero()}
    idents = _pair_identities(pair)
    first = None
    for name, lhs, rhs in idents:
        if rng is None:
            ok = lhs.equals(rhs)
            lv, rv = lhs, rhs
        else:
            ctx = lhs.ctx
            lv, rv = with_point(ctx, rng, lambda pt: (specialize(lhs, pt), specialize(rhs, pt)))
            ok = lv.equals(rv)
        subs[name] = ok
        if not ok and first is None:
            first = (name, lv, rv)
    passed = subs["beta_zero"] or all(subs.get(k, False) for k in ("cond1", "cond2"))
    return passed, (None if passed else first), subs


def verify_triple_expansion(pair: G.GenFnPair, n: int, mode: str = "exact", seed: int | None = None):
    rng = _rng(mode, seed)
    if rng is None:
        mm = G.triple_expansion_mismatch(pair, n)
        return mm is None, mm
    g = G.op_from_pair(n, pair)
    ctx = G._xy(g.ctx)
    prods = G.triple_products(g)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                lhs_form, rhs_form = G.six_term_forms(pair, ctx, i, j, k)
                for order, form in (("232", lhs_form), ("121", rhs_form)):
                    t = G.triple_genfun(g, i, j, k, order, prods)
                    tv, fv = with_point(ctx, rng, lambda pt: (specialize(t, pt), specialize(form, pt)))
                    if not tv.equals(fv):
                        return False, ((order, i, j, k), tv, fv)
    return True, None


def verify_dybe(r: D.DynOp, mode: str = "exact", seed: int | None = None):
    rng = _rng(mode, seed)
    if rng is None:
        mm = first_mismatch(*D.dybe_sides(r))
    else:
        a, b = D.lift12_dyn(r), D.lift23_dyn(r)

        def run(pt):
            sa, sb = specialize_sparse(a, pt), specialize_sparse(b, pt)
            return first_mismatch(sa.compose(sb.compose(sa)), sb.compose(sa.compose(sb)))

        mm = with_point(r.ctx, rng, run)
    return mm is None, mm


def verify_cob(n: int, mode: str = "exact", seed: int | None = None, r=None, rho=None):
    rng = _rng(mode, seed)
    r = r if r is not None else D.standard_solution(n, "intertwining")
    rho = rho if rho is not None else D.cremmer_gervais(n, "standard")
    if rng is None:
        mm = first_mismatch(*D.cob_sides(n, r, rho))
    else:
        a = D.cob_matrix(n)
        a12 = D.cob_lift1(a).compose(D.cob_lift2(a))
        rho_d = D.constant_dynop(rho)

        def run(pt):
            sr, sa, sp = (specialize_sparse(op, pt) for op in (r, a12, rho_d))
            return first_mismatch(sr.compose(sa), sa.compose(sp))

        mm = with_point(r.ctx, rng, run)
    det = D.cob_det(D.cob_matrix(n))
    if mm is None and det.is_zero():
        mm = ("det(A)", RatFn(det), RatFn.const(det.ctx, 0))
    return mm is None, mm


def eta_identity_results(n: int) -> dict[str, bool]:
    """Operator identities among eta, P and I, plus the generic quadratic relation."""
    e, p, i = eta_op(n), flip_op(n), id_op(n)
    res = {
        "eta^2 = eta": first_homop_mismatch(compose2(e, e), e) is None,
        "eta P = -eta": first_homop_mismatch(compose2(e, p), -e) is None,
        "P eta = eta + P - I": first_homop_mismatch(compose2(p, e), e + p - i) is None,
        "P eta = eta + P + I (as printed)": first_homop_mismatch(compose2(p, e), e + p + i) is None,
    }
    ctx = RingCtx(["a", "b"])
    a, b = RatFn.gen(ctx, "a"), RatFn.gen(ctx, "b")
    g = lincomb([(a, flip_op(n, ctx)), (b, eta_op(n, ctx))])
    res["(g - a)(g + a - b) = 0 for g = aP + b eta"] = not hecke_product(g, a, b).table
    return res


EXPECTED_ETA = {
    "eta^2 = eta": True,
    "eta P = -eta": True,
    "P eta = eta + P - I": True,
    "P eta = eta + P + I (as printed)": False,
    "(g - a)(g + a - b) = 0 for g = aP + b eta": True,
}


def verify_eta_identities(n: int):
    """Passes when every identity has its expected truth value (the printed +I sign fails for n >= 1)."""
    res = eta_identity_results(n)
    for name, want in EXPECTED_ETA.items():
        if res[name] != want:
            mm = (name, RatFn.const(EMPTY, int(res[name])), RatFn.const(EMPTY, int(want)))
            return False, mm, res
    return True, None, res

"""Command-line front end: gen, verify, genfun, classify, export.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import dybe as D
from . import genfun as G
from .errors import CremmerError
from .families import cremmer_gervais, eta_op, family1, family2, flip_op, id_op, qhat, rho1
from .parse import format_ratfn, parse_coeff
from .report import VerifyReport, Witness
from .ring import RatFn, RingCtx
from .tensor import HomOp, dumps, homop_from_json, homop_to_json, to_dense
from . import verify as V

FAMILIES = ("eta", "flip", "id", "cg", "rho1", "family1", "family2", "dybe-standard")
CHECKS = ("ybe", "gfybe", "hecke", "dybe", "cob", "triple-expansion", "eta-identities")
PARAM_NAMES = ("q", "p", "a", "b", "c")


class UsageError(Exception):
    pass


def _minimal_ctx(exprs: list[str], names=PARAM_NAMES) -> RingCtx:
    """Smallest context (in the order of ``names``) covering the generators used."""
    full = RingCtx(names)
    used = set()
    for src in exprs:
        f = parse_coeff(src, full)
        for part in (f.num, f.den):
            for e in part.terms:
                used.update(full.generators[i] for i, v in enumerate(e) if v)
    return RingCtx([g for g in names if g in used])


def _param_exprs(args) -> tuple[str, str]:
    return (args.a if args.a is not None else "a", args.b if args.b is not None else "b")


def build_homop(args) -> tuple[HomOp, str]:
    fam, n = args.family, args.n
    if n is None:
        raise UsageError("--n is required with --family")
    if fam == "eta":
        return eta_op(n), f"eta n={n}"
    if fam == "flip":
        return flip_op(n), f"flip n={n}"
    if fam == "id":
        return id_op(n), f"id n={n}"
    if fam == "cg":
        params = "formal-p" if args.params in (None, "formal") else args.params
        return cremmer_gervais(n, params), f"cg n={n} params={params}"
    if fam == "rho1":
        return rho1(n), f"rho1 n={n}"
    if fam in ("family1", "family2"):
        a_src, b_src = _param_exprs(args)
        ctx = _minimal_ctx([a_src, b_src])
        a, b = parse_coeff(a_src, ctx), parse_coeff(b_src, ctx)
        op = family1(n, a, b) if fam == "family1" else family2(n, a, b)
        return op, f"{fam} n={n} a={a_src} b={b_src}"
    raise UsageError(f"family {fam!r} does not produce a homogeneous operator")


def build_dynop(args) -> tuple[D.DynOp, str]:
    if args.target:
        doc = _load_json(args.target)
        return D.dynop_from_json(doc), args.target
    if args.family not in (None, "dybe-standard"):
        raise UsageError("the dybe check needs --family dybe-standard or a dynamical JSON target")
    if args.n is None:
        raise UsageError("--n is required")
    conv = args.convention or "theorem"
    return D.standard_solution(args.n, conv), f"dybe-standard n={args.n} convention={conv}"


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def resolve_homop(args) -> tuple[HomOp, str]:
    if args.target:
        doc = _load_json(args.target)
        if doc.get("kind") != "homogeneous":
            raise UsageError(f"{args.target}: expected a homogeneous operator")
        return homop_from_json(doc), args.target
    if args.family is None:
        raise UsageError("give a JSON target or --family")
    return build_homop(args)


def resolve_pair(args) -> tuple[G.GenFnPair, str]:
    if getattr(args, "alpha", None) is not None or getattr(args, "beta", None) is not None:
        if args.alpha is None or args.beta is None:
            raise UsageError("--alpha and --beta go together")
        ctx = G.pair_ctx(*PARAM_NAMES)
        return G.GenFnPair.parse(args.alpha, args.beta, ctx), f"alpha={args.alpha} beta={args.beta}"
    fam = args.family
    one_minus_x = "(1 - x)"
    if fam == "eta":
        a, b, params = f"1/{one_minus_x}", f"-1/{one_minus_x}", []
    elif fam == "id":
        a, b, params = "1", "0", []
    elif fam == "flip":
        a, b, params = "0", "1", []
    elif fam == "rho1":
        a, b, params = f"(q - q^-1)/{one_minus_x}", f"(q^-1 - q*x)/{one_minus_x}", ["q"]
    elif fam in ("family1", "family2"):
        pa, pb = _param_exprs(args)
        params = list(_minimal_ctx([pa, pb]).generators)
        if fam == "family1":
            a, b = f"({pb})/{one_minus_x}", f"({pa}) - ({pb})/{one_minus_x}"
        else:
            a, b = f"({pb}) - ({pb})/{one_minus_x}", f"({pa}) + ({pb})/{one_minus_x}"
    else:
        raise UsageError(f"family {fam!r} has no generating-function pair; use --alpha/--beta")
    ctx = G.pair_ctx(*params)
    return G.GenFnPair.parse(a, b, ctx), f"{fam} pair"


def hecke_params(args, g: HomOp) -> tuple[RatFn, RatFn]:
    ctx = g.ctx
    if args.hecke_a is not None or args.hecke_b is not None:
        if args.hecke_a is None or args.hecke_b is None:
            raise UsageError("--hecke-a and --hecke-b go together")
        return parse_coeff(args.hecke_a, ctx), parse_coeff(args.hecke_b, ctx)
    fam = args.family if not args.target else None
    if fam in ("rho1", "cg"):
        q = RatFn.gen(ctx, "q") if "q" in ctx else RatFn.gen(ctx, "s", g.n)
        return q, qhat(q)
    if fam in ("family1", "family2"):
        a_src, b_src = _param_exprs(args)
        a, b = parse_coeff(a_src, ctx), parse_coeff(b_src, ctx)
        # aP + b(I - eta) is the transpose of (a + b)P + b eta
        return (a, b) if fam == "family1" else (a + b, b)
    if fam == "eta":
        return RatFn.const(ctx, 0), RatFn.const(ctx, 1)
    if fam == "flip":
        return RatFn.const(ctx, 1), RatFn.const(ctx, 0)
    if fam == "id":
        return RatFn.const(ctx, 1), RatFn.const(ctx, 1)
    raise UsageError("hecke needs --hecke-a and --hecke-b for this target")


def _witness(mm) -> Witness:
    key, lhs, rhs = mm
    fmt = lambda v: format_ratfn(v) if isinstance(v, RatFn) else str(v)  # noqa: E731
    return Witness(key=str(key), lhs=fmt(lhs), rhs=fmt(rhs))


# ---------------------------------------------------------------------------
# commands


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.family == "dybe-standard":
        if args.n is None or args.n < 2:
            raise UsageError("dybe-standard needs --n >= 2")
        op = D.standard_solution(args.n, args.convention or "theorem")
        doc = D.dynop_to_json(op)
    else:
        if args.n is None or args.n < 1:
            raise UsageError("--n must be >= 1")
        op, _ = build_homop(args)
        doc = homop_to_json(op)
    _emit(args, dumps(doc))
    return 0


def cmd_verify(args) -> int:
    check = args.check
    seed = args.seed
    if args.mode == "random" and seed is None:
        raise UsageError("--seed is required in random mode")
    start = time.perf_counter()
    notes: list[str] = []
    if check == "ybe":
        g, target = resolve_homop(args)
        ok, mm = V.verify_ybe(g, args.mode, seed)
    elif check == "hecke":
        g, target = resolve_homop(args)
        a, b = hecke_params(args, g)
        ok, mm = V.verify_hecke(g, a, b, args.mode, seed)
        notes.append(f"a = {format_ratfn(a)}, b = {format_ratfn(b)}")
    elif check == "gfybe":
        pair, target = resolve_pair(args)
        ok, mm, subs = V.verify_gfybe(pair, args.mode, seed)
        notes += [f"{k}: {'pass' if v else 'fail'}" for k, v in subs.items()]
    elif check == "triple-expansion":
        if args.n is None:
            raise UsageError("--n is required")
        pair, target = resolve_pair(args)
        ok, mm = V.verify_triple_expansion(pair, args.n, args.mode, seed)
        target += f" n={args.n}"
    elif check == "dybe":
        r, target = build_dynop(args)
        ok, mm = V.verify_dybe(r, args.mode, seed)
    elif check == "cob":
        if args.n is None:
            raise UsageError("--n is required")
        target = f"standard change of basis n={args.n}"
        ok, mm = V.verify_cob(args.n, args.mode, seed)
    elif check == "eta-identities":
        if args.n is None:
            raise UsageError("--n is required")
        target = f"eta n={args.n}"
        ok, mm, res = V.verify_eta_identities(args.n)
        notes += [f"{k}: {'holds' if v else 'fails'}" for k, v in res.items()]
    else:  # argparse restricts choices
        raise UsageError(f"unknown check {check!r}")
    report = VerifyReport(
        check=check,
        target=target,
        mode=args.mode,
        passed=ok,
        witness=None if ok else _witness(mm),
        wall_time=time.perf_counter() - start,
        notes=notes,
    )
    _emit(args, report.to_json(args.timing) if args.json else report.to_text(args.timing))
    return 0 if ok else 1


def cmd_genfun(args) -> int:
    g, _ = build_homop(args)
    f = G.genfun(g, args.i, args.j)
    f = f.reduced()
    _emit(args, format_ratfn(f) + "\n")
    return 0


def cmd_classify(args) -> int:
    ctx = G.pair_ctx(*PARAM_NAMES)
    pair = G.GenFnPair.parse(args.alpha, args.beta, ctx)
    mode = args.mode
    ok, _, subs = V.verify_gfybe(pair, mode, args.seed)
    if pair.beta.is_zero():
        subs.setdefault("cond1", G.cond1_check(pair.alpha) if mode == "exact" else None)
        subs.setdefault("cond2", G.cond2_check(pair.alpha, pair.beta) if mode == "exact" else None)
    verdicts = {k: v for k, v in subs.items() if v is not None}
    if args.json:
        doc = {"alpha": args.alpha, "beta": args.beta, "mode": mode, **verdicts, "gfybe": ok}
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        lines = [f"{k}: {'pass' if v else 'fail'}" for k, v in verdicts.items()]
        lines.append(f"gfybe: {'pass' if ok else 'fail'}")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_export(args) -> int:
    if args.family == "dybe-standard" or (args.target and _load_json(args.target).get("kind") == "dynamical"):
        op, _ = build_dynop(args)
        if args.format == "json":
            _emit(args, dumps(D.dynop_to_json(op)))
            return 0
        basis = op.basis()
        rows = [[format_ratfn(op.get(o, i)) for i in basis] for o in basis]
    else:
        g, _ = resolve_homop(args)
        if args.format == "json":
            _emit(args, dumps(homop_to_json(g)))
            return 0
        rows = [[format_ratfn(v) for v in row] for row in to_dense(g)]
    _emit(args, "\n".join("\t".join(r) for r in rows) + "\n")
    return 0


# ---------------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--mode", choices=V.MODES, default="exact")
    p.add_argument("--seed", type=int, help="seed for random mode")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", help="write output to this path instead of stdout")
    return p


def _target_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--params", choices=("formal", "formal-p", "standard"))
    p.add_argument("--a", help="first family parameter (expression)")
    p.add_argument("--b", help="second family parameter (expression)")
    p.add_argument("--convention", choices=("theorem", "intertwining"))


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="cremmer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write an operator as JSON")
    _target_opts(p)
    p.set_defaults(func=cmd_gen, target=None)

    p = sub.add_parser("verify", parents=[common], help="run a verification check")
    p.add_argument("check", choices=CHECKS)
    p.add_argument("target", nargs="?", help="JSON operator file")
    _target_opts(p)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--hecke-a", dest="hecke_a")
    p.add_argument("--hecke-b", dest="hecke_b")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("genfun", parents=[common], help="print a generating function G_ij(x)")
    _target_opts(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_genfun, target=None)

    p = sub.add_parser("classify", parents=[common], help="test a pair (alpha, beta) against the YBE criteria")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("export", parents=[common], help="export an operator as JSON or a dense matrix")
    p.add_argument("target", nargs="?")
    _target_opts(p)
    p.add_argument("--format", choices=("json", "dense"), default="json")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "mode", "exact") == "random" and getattr(args, "seed", None) is None:
        parser.error("--seed is required in random mode")
    try:
        return args.func(args)
    except (UsageError, CremmerError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

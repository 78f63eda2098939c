from __future__ import annotations

import json

import pytest

from cremmer import DimensionMismatch, FormatError, RatFn, RingCtx, parse_coeff
from cremmer.errors import IndexOutOfRange
from cremmer.families import abc_op, cremmer_gervais, eta_op, flip_op, id_op
from cremmer.tensor import (
    HomOp,
    apply,
    compose2,
    first_mismatch,
    homop_from_json,
    homop_to_json,
    lift12,
    lift23,
    op_eq,
    to_dense,
    transpose,
    ybe_check,
    ybe_residual,
    ybe_sides,
)

E = RingCtx([])


def c(v, ctx=E):
    return RatFn.const(ctx, v)


def test_homop_rejects_out_of_range_keys():
    with pytest.raises(IndexOutOfRange):
        HomOp(2, E, {(1, 1, 3): c(1)})  # l = -1
    with pytest.raises(IndexOutOfRange):
        HomOp(2, E, {(0, 1, 1): c(1)})


def test_zero_coefficients_are_dropped():
    g = HomOp(2, E, {(1, 2, 1): c(0), (1, 2, 2): c(5)})
    assert list(g.table) == [(1, 2, 2)]


def test_apply_flip():
    p = flip_op(3)
    out = apply(p, 1, 3)
    assert [(k, v.equals(c(1))) for k, v in out] == [(3, True)]


def test_compose2_matches_dense_product():
    g = abc_op(3, 1, 2, 3)
    d = eta_op(3)
    gd = to_dense(compose2(g, d))
    G, D = to_dense(g), to_dense(d)
    size = len(G)
    for r in range(size):
        for s in range(size):
            want = sum((G[r][t] * D[t][s] for t in range(size)), c(0))
            assert gd[r][s].equals(want)


def test_transpose_is_conjugation_by_flip():
    g = cremmer_gervais(3)
    p = flip_op(3, g.ctx)
    assert op_eq(transpose(g), compose2(p, compose2(g, p)))


def test_transpose_of_eta():
    # P eta P = I - eta - P
    e = eta_op(4)
    assert op_eq(transpose(e), id_op(4) - e - flip_op(4))


def test_lifts_act_on_right_slots():
    g = abc_op(2, 0, 1, 0)  # the flip
    l12, l23 = lift12(g), lift23(g)
    assert l12.cols[(1, 2, 1)] and set(l12.cols[(1, 2, 1)]) == {(2, 1, 1)}
    assert set(l23.cols[(1, 2, 1)]) == {(1, 1, 2)}


def test_ybe_positive_and_negative():
    assert ybe_check(flip_op(3), "both")
    assert ybe_check(eta_op(3), "both")
    bad = id_op(3) + flip_op(3) + eta_op(3)
    assert not ybe_check(bad, "both")
    assert not ybe_residual(bad).is_zero()


def test_mismatch_witness_is_lex_smallest():
    bad = id_op(2) + flip_op(2) + eta_op(2)
    lhs, rhs = ybe_sides(bad)
    key, lv, rv = first_mismatch(lhs, rhs)
    assert not lv.equals(rv)
    bad_keys = [
        (out, inp)
        for inp in set(lhs.cols) | set(rhs.cols)
        for out in set(lhs.cols.get(inp, {})) | set(rhs.cols.get(inp, {}))
        if not lhs.get(out, inp).equals(rhs.get(out, inp))
    ]
    assert key == min(bad_keys)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        compose2(eta_op(2), eta_op(3))


def test_json_roundtrip():
    g = cremmer_gervais(3)
    doc = json.loads(json.dumps(homop_to_json(g)))
    assert op_eq(homop_from_json(doc), g)


def test_json_entries_are_sorted_and_formatted():
    doc = homop_to_json(cremmer_gervais(2))
    keys = [(e["i"], e["j"], e["k"]) for e in doc["entries"]]
    assert keys == sorted(keys)
    coeff = {(e["i"], e["j"], e["k"]): e["coeff"] for e in doc["entries"]}
    # rho_p(1,2,1) = qhat, rho_p(1,2,2) = q p^-1, rho_p(2,1,1) = q p - qhat p
    assert coeff[(1, 2, 1)] == "-q^-1 + q"
    assert coeff[(1, 2, 2)] == "q*p^-1"
    assert coeff[(2, 1, 1)] == "q^-1*p"


@pytest.mark.parametrize(
    "doc, err",
    [
        ({"kind": "dynamical"}, FormatError),
        ({"kind": "homogeneous", "n": 2}, FormatError),
        ({"kind": "homogeneous", "n": 2, "entries": [{"i": 1, "j": 1, "k": 3, "coeff": "1"}]}, IndexOutOfRange),
        (
            {
                "kind": "homogeneous",
                "n": 2,
                "entries": [{"i": 1, "j": 2, "k": 1, "coeff": "1"}, {"i": 1, "j": 2, "k": 1, "coeff": "2"}],
            },
            FormatError,
        ),
    ],
)
def test_json_rejects_bad_documents(doc, err):
    with pytest.raises(err):
        homop_from_json(doc)


def test_dense_layout():
    m = to_dense(flip_op(2))
    # input e1 (x) e2 is column 1, output e2 (x) e1 is row 2
    assert m[2][1].equals(c(1)) and m[1][1].is_zero()


def test_homop_coefficients_share_context():
    q = RingCtx(["q"])
    with pytest.raises(Exception):
        HomOp(2, E, {(1, 2, 2): parse_coeff("q", q)})

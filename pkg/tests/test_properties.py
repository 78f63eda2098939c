"""Randomized soundness properties of the coefficient field, 1000 cases each."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from cremmer.parse import format_poly, format_ratfn, parse_coeff
from cremmer.ring import RatFn, RingCtx, mono_subst

from strategies import CTX, nonzero_ratfns, polys, ratfns

N = settings(max_examples=1000, derandomize=True, deadline=None)


# ring axioms -----------------------------------------------------------------


@N
@given(ratfns(), ratfns(), ratfns())
def test_field_axioms(a, b, c):
    zero, one = RatFn.const(CTX, 0), RatFn.const(CTX, 1)
    assert (a + b).equals(b + a)
    assert (a * b).equals(b * a)
    assert ((a + b) + c).equals(a + (b + c))
    assert ((a * b) * c).equals(a * (b * c))
    assert (a * (b + c)).equals(a * b + a * c)
    assert (a + zero).equals(a) and (a * one).equals(a)
    assert (a - a).is_zero()


@N
@given(nonzero_ratfns)
def test_multiplicative_inverse(a):
    assert (a * a.inverse()).equals(RatFn.const(CTX, 1))
    assert (a / a).equals(RatFn.const(CTX, 1))


@N
@given(polys(), polys(), polys())
def test_laurent_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a - b == -(b - a)


@N
@given(polys(), polys(nonzero=True))
def test_divexact_inverts_mul(a, b):
    assert (a * b).divexact(b) == a


# equality congruence -----------------------------------------------------------


@N
@given(ratfns(), ratfns(), polys(nonzero=True, max_terms=2))
def test_equality_congruence(a, b, d):
    # a2 is a with numerator and denominator multiplied by d, unreduced
    a2 = RatFn(a.num * d, a.den * d, normalize=False)
    assert a2.equals(a) and a.equals(a2)
    assert (a2 + b).equals(a + b)
    assert (a2 * b).equals(a * b)
    assert (a2 - b).equals(a - b)
    assert (-a2).equals(-a)
    if not b.is_zero():
        assert (a2 / b).equals(a / b)


@N
@given(ratfns(), ratfns(), ratfns())
def test_equality_is_transitive_through_reduction(a, b, c):
    s = a * b + c
    assert s.equals(s.reduced())
    assert s.reduced().equals(c + b * a)


# substitution homomorphism -----------------------------------------------------

TARGET = RingCtx(["u", "v", "w"])


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


# an invertible exponent matrix keeps the map injective, so no denominator dies
row = st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
mono_images = (
    st.tuples(row, row, row)
    .filter(lambda m: _det3(m) != 0)
    .map(lambda m: dict(zip(("x", "y", "z"), m)))
)


@N
@given(ratfns(), ratfns(), mono_images)
def test_substitution_homomorphism(a, b, images):
    phi = lambda f: mono_subst(f, images, TARGET)  # noqa: E731
    assert phi(a + b).equals(phi(a) + phi(b))
    assert phi(a * b).equals(phi(a) * phi(b))
    assert phi(a - b).equals(phi(a) - phi(b))
    assert phi(RatFn.const(CTX, 1)).equals(RatFn.const(TARGET, 1))


@N
@given(ratfns(), st.permutations(["x", "y", "z"]))
def test_substitution_permutation_roundtrip(a, perm):
    fwd = dict(zip(["x", "y", "z"], perm))
    back = {v: k for k, v in fwd.items()}
    images = {k: CTX.gen(v) for k, v in fwd.items()}
    inv_images = {k: CTX.gen(v) for k, v in back.items()}
    assert mono_subst(mono_subst(a, images), inv_images).equals(a)


# parser round trip ----------------------------------------------------------------


@N
@given(ratfns())
def test_parse_format_roundtrip(f):
    g = parse_coeff(format_ratfn(f), CTX)
    assert g.equals(f)


@N
@given(polys())
def test_poly_format_roundtrip(p):
    back = parse_coeff(format_poly(p), CTX)
    assert back.as_poly() == p
    assert format_poly(back.as_poly()) == format_poly(p)

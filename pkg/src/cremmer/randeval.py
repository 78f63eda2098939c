"""Seeded random evaluation: a fast probabilistic pre-check for identities.

Every generator is replaced by a rational with numerator and denominator
drawn from [1, 10^4].  Two distinct rational functions of moderate degree
agree at such a point with negligible probability (Schwartz-Zippel); the
exact mode remains the authority.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .errors import DivisionByZero
from .ring import RatFn, RingCtx
from .tensor import HomOp, SparseOp

POOL_MAX = 10_000
MAX_RETRIES = 32
EMPTY = RingCtx([])


def random_point(ctx: RingCtx, rng: random.Random) -> list[Fraction]:
    return [Fraction(rng.randint(1, POOL_MAX), rng.randint(1, POOL_MAX)) for _ in ctx.generators]


def specialize(f: RatFn, point: Sequence[Fraction]) -> RatFn:
    return RatFn.const(EMPTY, f.evaluate(point))


def specialize_homop(g: HomOp, point: Sequence[Fraction]) -> HomOp:
    return HomOp(g.n, EMPTY, {k: specialize(c, point) for k, c in g.table.items()})


def specialize_sparse(op: SparseOp, point: Sequence[Fraction]) -> SparseOp:
    return op.map_coeffs(lambda c: specialize(c, point), EMPTY)


def with_point(ctx: RingCtx, rng: random.Random, fn):
    """Call fn(point), redrawing the point whenever a denominator vanishes."""
    for _ in range(MAX_RETRIES):
        point = random_point(ctx, rng)
        try:
            return fn(point)
        except DivisionByZero:
            continue
    raise DivisionByZero(f"no pole-free evaluation point after {MAX_RETRIES} draws")


def values_equal(lhs: RatFn, rhs: RatFn, point: Sequence[Fraction]) -> bool:
    return lhs.evaluate(point) == rhs.evaluate(point)

"""Exact multivariate Laurent polynomials and rational functions over Q.

Coefficients are Python ``int`` or ``fractions.Fraction``; integral fractions
are demoted to ``int`` so that integer-only computations never touch the
slower Fraction path.  Values are immutable once constructed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Sequence

from . import kernels as K
from .errors import ContextMismatch, DivisionByZero, UnknownGenerator, UnsupportedSubstitution

Coeff = int | Fraction
Exps = tuple[int, ...]


def qnorm(c) -> Coeff:
    """Demote an integral Fraction to int; reject floats."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


class RingCtx:
    """Ordered generator list fixing the ambient Laurent ring.

    ``relation`` optionally names a block of generators whose exponent
    vectors are taken modulo the all-ones vector (the torus relation
    K_1...K_n = 1).  Canonical forms carry exponent 0 in the block's last
    slot.
    """

    __slots__ = ("generators", "index", "relation", "_key")

    def __init__(self, generators: Iterable[str], relation: Sequence[str] | None = None):
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names in {gens}")
        for g in gens:
            if not g.isidentifier():
                raise ValueError(f"invalid generator name {g!r}")
        self.generators = gens
        self.index = {g: i for i, g in enumerate(gens)}
        if relation:
            missing = [g for g in relation if g not in self.index]
            if missing:
                raise UnknownGenerator(f"relation generators {missing} not in context")
            self.relation = tuple(self.index[g] for g in relation)
        else:
            self.relation = ()
        self._key = (gens, self.relation)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, RingCtx) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        rel = f", relation={[self.generators[i] for i in self.relation]}" if self.relation else ""
        return f"RingCtx({list(self.generators)}{rel})"

    def __contains__(self, name):
        return name in self.index

    def canon(self, e: Exps) -> Exps:
        rel = self.relation
        if not rel:
            return e
        last = e[rel[-1]]
        if not last:
            return e
        e = list(e)
        for i in rel:
            e[i] -= last
        return tuple(e)

    def extend(self, names: Iterable[str]) -> RingCtx:
        """Append generators not already present; the relation is kept."""
        gens = list(self.generators)
        for g in names:
            if g not in self.index:
                gens.append(g)
        return RingCtx(gens, [self.generators[i] for i in self.relation])

    def without(self, names: Iterable[str]) -> RingCtx:
        drop = set(names)
        rel = [self.generators[i] for i in self.relation]
        if drop & set(rel):
            raise ValueError("cannot drop generators taking part in the relation")
        return RingCtx([g for g in self.generators if g not in drop], rel)

    def zero_exps(self) -> Exps:
        return (0,) * len(self.generators)

    # convenience constructors
    def gen(self, name: str, power: int = 1) -> LaurentPoly:
        return LaurentPoly.gen(self, name, power)

    def const(self, c) -> LaurentPoly:
        return LaurentPoly.const(self, c)

    def ratfn(self, c) -> RatFn:
        return RatFn(LaurentPoly.const(self, c))


def check_ctx(a, b) -> None:
    if a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx!r} vs {b.ctx!r}")


class LaurentPoly:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: RingCtx, terms: Mapping[Exps, Coeff] | None = None):
        # trusted: terms must already be canonical with no zero coefficients
        self.ctx = ctx
        self.terms = terms if terms is not None else {}

    # -- construction ---------------------------------------------------
    @classmethod
    def const(cls, ctx: RingCtx, c) -> LaurentPoly:
        c = qnorm(c)
        return cls(ctx, {ctx.zero_exps(): c} if c else {})

    @classmethod
    def gen(cls, ctx: RingCtx, name: str, power: int = 1) -> LaurentPoly:
        if name not in ctx.index:
            raise UnknownGenerator(f"unknown generator {name!r}")
        e = [0] * len(ctx)
        e[ctx.index[name]] = power
        return cls(ctx, {ctx.canon(tuple(e)): 1})

    @classmethod
    def monomial(cls, ctx: RingCtx, exps: Sequence[int], coeff=1) -> LaurentPoly:
        if len(exps) != len(ctx):
            raise ValueError(f"exponent vector of length {len(exps)} for {len(ctx)} generators")
        coeff = qnorm(coeff)
        return cls(ctx, {ctx.canon(tuple(exps)): coeff} if coeff else {})

    @classmethod
    def from_terms(cls, ctx: RingCtx, terms: Mapping[Sequence[int], Coeff]) -> LaurentPoly:
        out: dict[Exps, Coeff] = {}
        for e, c in terms.items():
            e = ctx.canon(tuple(e))
            if len(e) != len(ctx):
                raise ValueError("exponent vector length mismatch")
            v = qnorm(out.get(e, 0) + qnorm(c))
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return cls(ctx, out)

    def _lift(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            check_ctx(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.ctx, other)
        return NotImplemented

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        t = self.terms
        return len(t) == 1 and t.get(self.ctx.zero_exps()) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        t = self.terms
        return not t or (len(t) == 1 and self.ctx.zero_exps() in t)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get(self.ctx.zero_exps(), 0)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.ctx, K.add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.ctx, K.sub(self.terms, other.terms))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return LaurentPoly(self.ctx, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.ctx, K.mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (e, c), = self.terms.items()
            return LaurentPoly(self.ctx, {tuple(k * x for x in e): qnorm(Fraction(c) ** k)})
        if self.is_monomial():
            (e, c), = self.terms.items()
            return LaurentPoly(self.ctx, {tuple(k * x for x in e): c**k})
        result = LaurentPoly.const(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> LaurentPoly:
        c = qnorm(c)
        if isinstance(c, Fraction):
            return LaurentPoly(self.ctx, {e: qnorm(v * c) for e, v in self.terms.items()})
        return LaurentPoly(self.ctx, K.scale(self.terms, c))

    def mono_mul(self, m: Exps) -> LaurentPoly:
        return LaurentPoly(self.ctx, K.mono_mul(self.terms, m))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.ctx, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    # -- structure ------------------------------------------------------
    def min_exps(self) -> Exps:
        w = len(self.ctx)
        if not self.terms:
            return (0,) * w
        keys = list(self.terms)
        return tuple(min(e[g] for e in keys) for g in range(w))

    def degree_in(self, name: str) -> tuple[int, int]:
        """(min, max) exponent of a generator over the support."""
        i = self.ctx.index[name]
        ex = [e[i] for e in self.terms]
        return (min(ex), max(ex)) if ex else (0, 0)

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        nums, dens = [], []
        for c in self.terms.values():
            c = Fraction(c)
            nums.append(c.numerator)
            dens.append(c.denominator)
        if not nums:
            return Fraction(1)
        g = reduce(gcd, nums)
        lcm = reduce(lambda a, b: a * b // gcd(a, b), dens)
        return Fraction(abs(g), lcm)

    def divexact(self, other: LaurentPoly) -> LaurentPoly | None:
        """Quotient self/other in the Laurent ring, or None if it does not exist.

        Both operands are shifted to ordinary polynomials; once the divisor
        has no monomial factor, divisibility in the Laurent ring coincides
        with polynomial divisibility, decided by lex-order division.
        """
        check_ctx(self, other)
        if not other.terms:
            raise DivisionByZero("division by the zero polynomial")
        if not self.terms:
            return self
        if other.is_monomial():
            (e, c), = other.terms.items()
            return self.mono_mul(tuple(-x for x in e)).scale(Fraction(1, 1) / c)
        ma, mb = self.min_exps(), other.min_exps()
        rem = K.mono_mul(self.terms, tuple(-x for x in ma))
        div = K.mono_mul(other.terms, tuple(-x for x in mb))
        lead = max(div)
        lc = Fraction(div[lead])
        quot: dict[Exps, Coeff] = {}
        while rem:
            top = max(rem)
            d = tuple(a - b for a, b in zip(top, lead))
            if min(d) < 0:
                return None
            c = qnorm(rem[top] / lc)
            quot[d] = c
            rem = K.sub(rem, K.mono_mul(K.scale(div, c), d))
            rem = {e: qnorm(v) for e, v in rem.items()}
        shift = tuple(a - b for a, b in zip(ma, mb))
        return LaurentPoly(self.ctx, K.mono_mul(quot, shift))

    def remap(self, images: Sequence[Exps], target: RingCtx) -> LaurentPoly:
        terms = K.remap(self.terms, list(images), len(target))
        if target.relation:
            terms = LaurentPoly.from_terms(target, terms).terms
        return LaurentPoly(target, terms)

    def to_ctx(self, target: RingCtx) -> LaurentPoly:
        """Re-express in another context, matching generators by name."""
        if target == self.ctx:
            return self
        images = []
        w = len(target)
        used = set()
        for i, g in enumerate(self.ctx.generators):
            if g in target.index:
                row = [0] * w
                row[target.index[g]] = 1
                images.append(tuple(row))
            else:
                images.append((0,) * w)
                used.add(i)
        for e in self.terms:
            if any(e[i] for i in used):
                missing = [self.ctx.generators[i] for i in used if e[i]]
                raise ContextMismatch(f"generators {missing} absent from target {target!r}")
        return self.remap(images, target)

    def evaluate(self, values: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for x, k in zip(values, e):
                if k:
                    v *= x**k
            total += v
        return total

    # -- display --------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exps, Coeff]]:
        return sorted(self.terms.items())

    def __str__(self):
        from .parse import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({self})"


def _lift_ratfn(ctx: RatFn, other):
    if isinstance(other, RatFn):
        check_ctx(ctx, other)
        return other
    if isinstance(other, LaurentPoly):
        check_ctx(ctx, other)
        return RatFn(other)
    if isinstance(other, (int, Fraction)):
        return RatFn(LaurentPoly.const(ctx.ctx, other))
    return NotImplemented


class RatFn:
    """Quotient num/den of Laurent polynomials.

    Equality is decided by cross-multiplication; storage is not GCD-reduced.
    The denominator is kept free of monomial factors, with unit content and a
    positive coefficient on its lex-least monomial; a monomial denominator is
    absorbed into the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, normalize: bool = True):
        if den is None:
            self.num, self.den = num, LaurentPoly.const(num.ctx, 1)
            return
        check_ctx(num, den)
        if not den.terms:
            raise DivisionByZero("rational function with zero denominator")
        if normalize:
            num, den = _normalize(num, den)
        self.num, self.den = num, den

    @property
    def ctx(self) -> RingCtx:
        return self.num.ctx

    @classmethod
    def const(cls, ctx: RingCtx, c) -> RatFn:
        return cls(LaurentPoly.const(ctx, c))

    @classmethod
    def gen(cls, ctx: RingCtx, name: str, power: int = 1) -> RatFn:
        return cls(LaurentPoly.gen(ctx, name, power))

    def is_zero(self) -> bool:
        return not self.num.terms

    def is_poly(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return bool(self.num.terms)

    def __add__(self, other):
        other = _lift_ratfn(self, other)
        if other is NotImplemented:
            return other
        a, b = self, other
        if not a.num.terms:
            return b
        if not b.num.terms:
            return a
        if a.den.is_one() and b.den.is_one():
            return RatFn(a.num + b.num)
        if a.den == b.den:
            return RatFn(a.num + b.num, a.den)
        if b.den.is_one():
            return RatFn(a.num + b.num * a.den, a.den)
        if a.den.is_one():
            return RatFn(a.num * b.den + b.num, b.den)
        return RatFn(a.num * b.den + b.num * a.den, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        other = _lift_ratfn(self, other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _lift_ratfn(self, other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFn(LaurentPoly(self.ctx))
            return RatFn(self.num.scale(other), self.den, normalize=False)
        other = _lift_ratfn(self, other)
        if other is NotImplemented:
            return other
        a, b = self, other
        if not a.num.terms or not b.num.terms:
            return RatFn(LaurentPoly(a.ctx))
        if a.den.is_one() and b.den.is_one():
            return RatFn(a.num * b.num)
        # cheap cancellations before falling back to the full product
        if not b.den.is_one() and a.num == b.den:
            return RatFn(b.num, a.den)
        if not a.den.is_one() and b.num == a.den:
            return RatFn(a.num, b.den)
        return RatFn(a.num * b.num, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFn:
        if not self.num.terms:
            raise DivisionByZero("inverse of zero")
        return RatFn(self.den, self.num)

    def __truediv__(self, other):
        other = _lift_ratfn(self, other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _lift_ratfn(self, other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RatFn(self.num**k, self.den**k)

    def equals(self, other) -> bool:
        other = _lift_ratfn(self, other)
        if other is NotImplemented:
            return False
        if self.den.is_one() and other.den.is_one():
            return self.num.terms == other.num.terms
        return (self.num * other.den).terms == (other.num * self.den).terms

    def __eq__(self, other):
        if not isinstance(other, (RatFn, LaurentPoly, int, Fraction)):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def reduced(self) -> RatFn:
        """Collapse to a Laurent polynomial when the denominator divides."""
        if self.den.is_one():
            return self
        q = self.num.divexact(self.den)
        return RatFn(q) if q is not None else self

    def as_poly(self) -> LaurentPoly | None:
        r = self.reduced()
        return r.num if r.den.is_one() else None

    def subst(self, images: Mapping[str, object], target: RingCtx | None = None) -> RatFn:
        return mono_subst(self, images, target)

    def to_ctx(self, target: RingCtx) -> RatFn:
        if target == self.ctx:
            return self
        return RatFn(self.num.to_ctx(target), self.den.to_ctx(target))

    def evaluate(self, values: Sequence[Fraction]) -> Fraction:
        d = self.den.evaluate(values)
        if d == 0:
            raise DivisionByZero("denominator vanishes at evaluation point")
        return self.num.evaluate(values) / d

    def __str__(self):
        from .parse import format_ratfn

        return format_ratfn(self)

    def __repr__(self):
        return f"RatFn({self})"


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    ctx = num.ctx
    if not num.terms:
        return num, LaurentPoly.const(ctx, 1)
    if len(den.terms) == 1:
        (e, c), = den.terms.items()
        num = num.mono_mul(tuple(-x for x in e))
        if c != 1:
            num = num.scale(Fraction(1) / c)
        return num, LaurentPoly.const(ctx, 1)
    shift = den.min_exps()
    if any(shift):
        neg = tuple(-x for x in shift)
        num, den = num.mono_mul(neg), den.mono_mul(neg)
    factor = Fraction(1) / den.content()
    if den.terms[min(den.terms)] < 0:
        factor = -factor
    if factor != 1:
        num, den = num.scale(factor), den.scale(factor)
    return num, den


# ---------------------------------------------------------------------------
# functional surface


def as_ratfn(x, ctx: RingCtx | None = None) -> RatFn:
    if isinstance(x, RatFn):
        return x
    if isinstance(x, LaurentPoly):
        return RatFn(x)
    if isinstance(x, (int, Fraction)) and ctx is not None:
        return RatFn.const(ctx, x)
    raise TypeError(f"cannot interpret {x!r} as a rational function")


def ring_add(a: RatFn, b: RatFn) -> RatFn:
    check_ctx(a, b)
    return a + b


def ring_sub(a: RatFn, b: RatFn) -> RatFn:
    check_ctx(a, b)
    return a - b


def ring_mul(a: RatFn, b: RatFn) -> RatFn:
    check_ctx(a, b)
    return a * b


def ring_neg(a: RatFn) -> RatFn:
    return -a


def ring_div(a: RatFn, b: RatFn) -> RatFn:
    check_ctx(a, b)
    return a / b


def ring_eq(a: RatFn, b: RatFn) -> bool:
    check_ctx(a, b)
    return as_ratfn(a).equals(as_ratfn(b))


def _image_exps(img, target: RingCtx, name: str) -> Exps:
    if isinstance(img, RatFn):
        if not img.den.is_one():
            raise UnsupportedSubstitution(f"image of {name} is not a monomial")
        img = img.num
    if isinstance(img, LaurentPoly):
        if img.ctx != target:
            raise ContextMismatch(f"image of {name} lives in {img.ctx!r}, expected {target!r}")
        if not img.is_monomial():
            raise UnsupportedSubstitution(f"image of {name} is not a monomial")
        (e, c), = img.terms.items()
        if c != 1:
            raise UnsupportedSubstitution(f"image of {name} has coefficient {c}; only unit monomials")
        return e
    if isinstance(img, (tuple, list)):
        if len(img) != len(target):
            raise ValueError("image exponent vector length mismatch")
        return target.canon(tuple(img))
    raise UnsupportedSubstitution(f"unsupported image for {name}: {img!r}")


def mono_subst(f, images: Mapping[str, object], target: RingCtx | None = None):
    """Substitute unit monomials for generators (simultaneously).

    ``images`` maps generator names of ``f.ctx`` to monomials in ``target``
    (defaults to ``f.ctx``), given as LaurentPoly/RatFn or exponent vectors.
    Unmapped generators go to the same-named generator of the target.
    """
    src = f.ctx
    target = target or src
    for name in images:
        if name not in src.index:
            raise UnknownGenerator(f"unknown generator {name!r}")
    rows = []
    w = len(target)
    for g in src.generators:
        if g in images:
            rows.append(_image_exps(images[g], target, g))
        elif g in target.index:
            row = [0] * w
            row[target.index[g]] = 1
            rows.append(tuple(row))
        else:
            raise ContextMismatch(f"generator {g!r} has no image in {target!r}")
    if isinstance(f, LaurentPoly):
        return f.remap(rows, target)
    f = as_ratfn(f)
    return RatFn(f.num.remap(rows, target), f.den.remap(rows, target))

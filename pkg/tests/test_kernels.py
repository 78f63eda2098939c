from __future__ import annotations

import importlib
import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cremmer import _pykernels as P
from cremmer import kernels

try:
    from cremmer import _ckernels as C
except ImportError:  # pragma: no cover - extension missing
    C = None

needs_ext = pytest.mark.skipif(C is None, reason="compiled kernels not built")

coef = st.one_of(st.integers(-50, 50).filter(bool), st.fractions(max_denominator=9).filter(bool))
key = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
sparse = st.dictionaries(key, coef, max_size=6)


def test_mul_small():
    a = {(1, 0): 1, (0, 1): 1}
    assert P.mul(a, a) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert P.mul(a, {(1, 0): 1, (0, 1): -1}) == {(2, 0): 1, (0, 2): -1}


def test_cancellation_drops_keys():
    assert P.add({(0,): 1}, {(0,): -1}) == {}
    assert P.sub({(1,): Fraction(1, 2)}, {(1,): Fraction(1, 2)}) == {}


def test_remap_collisions_accumulate():
    # x -> t, y -> t: x + y -> 2t, x - y -> 0
    assert P.remap({(1, 0): 1, (0, 1): 1}, [(1,), (1,)], 1) == {(1,): 2}
    assert P.remap({(1, 0): 1, (0, 1): -1}, [(1,), (1,)], 1) == {}


def test_remap_into_wider_target():
    assert P.remap({(): 5}, [], 2) == {(0, 0): 5}


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
    if C is not None:
        assert kernels.BACKEND == "cython"


def test_pure_python_switch():
    env = dict(os.environ, CREMMER_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import cremmer; print(cremmer.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@needs_ext
@settings(max_examples=300)
@given(sparse, sparse, key)
def test_backends_agree(a, b, m):
    assert C.mul(a, b) == P.mul(a, b)
    assert C.add(a, b) == P.add(a, b)
    assert C.sub(a, b) == P.sub(a, b)
    assert C.scale(a, Fraction(3, 7)) == P.scale(a, Fraction(3, 7))
    assert C.mono_mul(a, m) == P.mono_mul(a, m)
    images = [(1, 0, 2), (-1, 1, 0)]
    assert C.remap(a, images, 3) == P.remap(a, images, 3)


@needs_ext
def test_backends_agree_on_types():
    a = {(0, 0): Fraction(4, 2), (1, 0): 3}
    for fn in ("mul", "add"):
        r_c, r_p = getattr(C, fn)(a, a), getattr(P, fn)(a, a)
        assert r_c == r_p
        assert {type(v) for v in r_c.values()} == {type(v) for v in r_p.values()}


@needs_ext
def test_end_to_end_same_result_on_both_backends():
    env = dict(os.environ, CREMMER_PURE_PYTHON="1")
    cmd = [sys.executable, "-m", "cremmer", "gen", "--family", "cg", "--n", "3"]
    slow = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True).stdout
    fast = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert slow == fast


def test_kernels_module_reload_is_stable():
    mod = importlib.reload(kernels)
    assert mod.mul({(1,): 2}, {(1,): 3}) == {(2,): 6}

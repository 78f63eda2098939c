"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the raw polynomial multiply on random sparse inputs, then an
end-to-end Yang-Baxter check of the formal Cremmer-Gervais operator with
each backend swapped in.
"""

from __future__ import annotations

import argparse
import random
import time
from fractions import Fraction

from cremmer import _pykernels, kernels
from cremmer.families import cremmer_gervais
from cremmer.tensor import ybe_check

try:
    from cremmer import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_poly(rng: random.Random, width: int, terms: int, frac: bool) -> dict:
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(-4, 4) for _ in range(width))
        c = rng.randint(1, 99)
        out[e] = Fraction(c, rng.randint(1, 9)) if frac else c
    return out


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def bench_mul(mod, repeat: int) -> dict[str, float]:
    rng = random.Random(7)
    cases = {
        "int 3-var 50x50": [(random_poly(rng, 3, 50, False), random_poly(rng, 3, 50, False)) for _ in range(20)],
        "int 5-var 200x200": [(random_poly(rng, 5, 200, False), random_poly(rng, 5, 200, False)) for _ in range(5)],
        "frac 3-var 50x50": [(random_poly(rng, 3, 50, True), random_poly(rng, 3, 50, True)) for _ in range(20)],
    }
    return {name: best_of(lambda: [mod.mul(a, b) for a, b in pairs], repeat) for name, pairs in cases.items()}


def bench_ybe(mod, n: int, repeat: int) -> float:
    saved = {name: getattr(kernels, name) for name in ("mul", "add", "sub", "scale", "mono_mul", "remap")}
    try:
        for name in saved:
            setattr(kernels, name, getattr(mod, name))
        return best_of(lambda: ybe_check(cremmer_gervais(n)), repeat)
    finally:
        for name, fn in saved.items():
            setattr(kernels, name, fn)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--n", type=int, default=5)
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.insert(0, ("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the Python fallback only")

    results = {name: bench_mul(mod, args.repeat) for name, mod in backends}
    print(f"{'case':<22}" + "".join(f"{name:>12}" for name, _ in backends) + ("     speedup" if len(backends) == 2 else ""))
    for case in results["python"]:
        row = [results[name][case] for name, _ in backends]
        line = f"{case:<22}" + "".join(f"{t * 1e3:>10.2f}ms" for t in row)
        if len(row) == 2:
            line += f"{row[1] / row[0]:>11.1f}x"
        print(line)

    ybe = [bench_ybe(mod, args.n, args.repeat) for _, mod in backends]
    line = f"{f'ybe cg n={args.n}':<22}" + "".join(f"{t * 1e3:>10.2f}ms" for t in ybe)
    if len(ybe) == 2:
        line += f"{ybe[1] / ybe[0]:>11.1f}x"
    print(line)


if __name__ == "__main__":
    main()

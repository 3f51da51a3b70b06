"""Compare the compiled and pure-Python polynomial multiplication kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Each case multiplies two random sparse polynomials with both kernels, checks
the products agree, and reports the best-of-N wall time.
"""

import argparse
import random
import sys
import timeit

from modhodge import _pykernels

try:
    from modhodge import _ckernels
except ImportError:
    _ckernels = None


def random_terms(rng, n, max_exp, coeff=50):
    terms = {}
    while len(terms) < n:
        k = (rng.randint(0, max_exp), rng.randint(0, max_exp), rng.randint(0, max_exp))
        terms[k] = rng.choice([-1, 1]) * rng.randint(1, coeff)
    return dict(sorted(terms.items()))


CASES = [
    # label, terms per factor, max exponent, coefficient bound
    ("dense small", 60, 6, 50),
    ("dense medium", 400, 10, 50),
    ("sparse wide", 300, 200, 50),
    ("big coefficients", 200, 10, 10**30),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
        return 1
    rng = random.Random(7)
    print(f"{'case':<18}{'terms':>7}{'python ms':>12}{'cython ms':>12}{'speedup':>9}")
    for label, n, max_exp, coeff in CASES:
        a, b = random_terms(rng, n, max_exp, coeff), random_terms(rng, n, max_exp, coeff)
        assert _pykernels.mul_terms(a, b) == _ckernels.mul_terms(a, b), label
        times = {}
        for name, mod in (("py", _pykernels), ("c", _ckernels)):
            t = timeit.Timer(lambda: mod.mul_terms(a, b))
            loops, _ = t.autorange()
            times[name] = min(t.repeat(args.repeat, loops)) / loops * 1e3
        print(f"{label:<18}{n:>7}{times['py']:>12.3f}{times['c']:>12.3f}{times['py'] / times['c']:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

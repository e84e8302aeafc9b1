"""Time the compiled kernels against the pure-Python reference.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best-of-N time for each backend and the
speedup.  Results of the two backends are compared before timing.
"""

import argparse
import timeit

from cigonality import _pykernels

try:
    from cigonality import _ckernels
except ImportError:
    _ckernels = None


def _primes_upto(n):
    flags = _pykernels.sieve_segment(0, n + 1, [])
    return [i for i, f in enumerate(flags) if f]


BASE = _primes_upto(1 << 11)
PI = _pykernels.accumulate_counts(_pykernels.sieve_segment(0, 200_001, _primes_upto(450)), 0)
FLAGS = _pykernels.sieve_segment(0, 1 << 20, BASE)

CASES = {
    "sieve_segment [0, 2^21)": lambda k: k.sieve_segment(0, 1 << 21, BASE),
    "accumulate_counts 2^20": lambda k: k.accumulate_counts(FLAGS, 0),
    "last_deficit n=1000": lambda k: k.last_deficit(PI, 1000, 200_000),
    "box_counts (30,40,50,60)": lambda k: k.box_counts([30, 40, 50, 60]),
    "codim2_scan n=2 a=b=10 s=3 k<=2000": lambda k: k.codim2_scan(2, 10, 10, 3, 1, 2000),
}


def _normalize(value):
    return list(value) if isinstance(value, (bytes, bytearray, list)) else value


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return
    print(f"{'kernel':40s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, call in CASES.items():
        ref, fast = call(_pykernels), call(_ckernels)
        if _normalize(ref) != _normalize(fast):
            raise SystemExit(f"backend mismatch on {name}")
        t_py = min(timeit.repeat(lambda: call(_pykernels), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: call(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:40s} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()

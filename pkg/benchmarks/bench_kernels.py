"""Compare the compiled and pure-Python Lucas kernels.

    python benchmarks/bench_kernels.py [--l-max 1000] [--repeat 3]
"""
import argparse
import random
import timeit

from equindex import _kernels_py

try:
    from equindex import _kernels as native
except ImportError:
    native = None


def truncation_sweep(impl, l_max):
    # the survey's inner loop: N and the obstruction degree for every (l, k)
    for l in range(2, l_max + 1):
        for k in range(1, l):
            n = impl.first_nonzero_in_row(l, l - k + 1, l, 2)
            impl.first_nonzero_in_row(n - 1, 1, l - n, 2)


def odd_prime_binomials(impl, pairs):
    for n, k, p in pairs:
        impl.lucas_binom(n, k, p)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--l-max", type=int, default=1000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(0)
    pairs = [(n, rng.randrange(n + 1), rng.choice((3, 5, 7, 101, 65521)))
             for n in (rng.randrange(1, 10**9) for _ in range(50_000))]
    cases = {
        f"truncation sweep l<={args.l_max}": lambda impl: truncation_sweep(impl, args.l_max),
        "50k odd-prime binomials": lambda impl: odd_prime_binomials(impl, pairs),
    }
    impls = {"python": _kernels_py}
    if native is not None:
        impls["cython"] = native
    else:
        print("compiled extension not available; timing the Python kernel only")

    print(f"{'case':<32} {'backend':<8} {'best (s)':>10}")
    for name, fn in cases.items():
        times = {}
        for label, impl in impls.items():
            times[label] = min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat))
            print(f"{name:<32} {label:<8} {times[label]:>10.4f}")
        if len(times) == 2:
            print(f"{'':<32} {'speedup':<8} {times['python'] / times['cython']:>9.1f}x")


if __name__ == "__main__":
    main()

"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import random
import timeit

from shadowbasis._accel import BACKENDS


def cases(rng: random.Random) -> dict[str, tuple]:
    word = list(range(1, 2001))
    rng.shuffle(word)
    return {
        "lis(n=2000)": ("lis", (word,)),
        "rsk(n=2000)": ("rsk", (word,)),
        "stat_histogram(n=7, r=1)": ("stat_histogram", (7, 1)),
        "stat_histogram(n=6, r=2)": ("stat_histogram", (6, 2)),
        "stat_histogram(n=5, r=3)": ("stat_histogram", (5, 3)),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if "cython" not in BACKENDS:
        print("compiled kernels not built; only the fallback is timed")
    print(f"{'case':<28}" + "".join(f"{name:>12}" for name in BACKENDS) + f"{'speedup':>10}")
    for label, (fn, fargs) in cases(random.Random(args.seed)).items():
        results, times = [], {}
        for name, mod in BACKENDS.items():
            func = getattr(mod, fn)
            results.append(func(*fargs))
            times[name] = min(timeit.repeat(lambda: func(*fargs), number=1, repeat=args.repeat))
        assert all(res == results[0] for res in results), f"backends disagree on {label}"
        speedup = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:<28}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times.values()) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()

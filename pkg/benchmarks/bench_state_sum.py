"""Time the compiled and pure-Python state-sum kernels on the same diagrams.

Usage: ``python benchmarks/bench_state_sum.py [--max-crossings 14] [--repeat 3]``
"""

from __future__ import annotations

import argparse
import random
import timeit

from skeinkit import kernels


def braid_crossings(strands: int, word: list[int]) -> tuple[list[tuple[int, ...]], int]:
    """Crossings of a braid closure with labels ``0..m-1``, as the kernel expects."""
    labels = iter(range(10 ** 6))
    bottom = [next(labels) for _ in range(strands)]
    current = list(bottom)
    crossings = []
    for letter in word:
        i = abs(letter)
        bl, br = current[i - 1], current[i]
        tl, tr = next(labels), next(labels)
        crossings.append((br, tr, tl, bl) if letter > 0 else (bl, br, tr, tl))
        current[i - 1], current[i] = tl, tr
    glue = dict(zip(current, bottom))
    crossings = [tuple(glue.get(e, e) for e in t) for t in crossings]
    used = sorted({e for t in crossings for e in t})
    index = {e: k for k, e in enumerate(used)}
    return [tuple(index[e] for e in t) for t in crossings], len(used)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-crossings", type=int, default=14)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    print(f"compiled kernel available: {kernels.compiled is not None}")
    print(f"{'crossings':>9} {'python [s]':>11} {'compiled [s]':>13} {'speedup':>8}")
    for n in range(4, args.max_crossings + 1, 2):
        word = [rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(n)]
        crossings, labels = braid_crossings(4, word)
        py_time = min(timeit.repeat(lambda: kernels.python.state_histogram(crossings, labels),
                                    number=1, repeat=args.repeat))
        if kernels.compiled is None:
            print(f"{n:>9} {py_time:>11.4f} {'-':>13} {'-':>8}")
            continue
        expected = kernels.python.state_histogram(crossings, labels)
        if kernels.compiled.state_histogram(crossings, labels) != expected:
            raise SystemExit(f"kernels disagree at {n} crossings")
        c_time = min(timeit.repeat(lambda: kernels.compiled.state_histogram(crossings, labels),
                                   number=1, repeat=args.repeat))
        print(f"{n:>9} {py_time:>11.4f} {c_time:>13.5f} {py_time / c_time:>7.0f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

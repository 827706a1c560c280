"""Compare the compiled and pure-Python strand tracers.

    python benchmarks/bench_concat.py [--pairs 2000] [--repeat 5]

Reports the raw kernel time per concatenation for several ``n`` and the
end-to-end time of a full product workload under each backend.
"""

import argparse
import random
import timeit

from affine_brauer import _concat_py, concat
from affine_brauer.algebra import check_relations
from affine_brauer.cellular import check_lemma42
from affine_brauer.diagram import random_diagram


def kernel_table(pairs, repeat):
    try:
        from affine_brauer import _concat
    except ImportError:
        print("compiled extension not built; only the fallback is available")
        return
    print(f"{'n':>4} {'python us':>10} {'cython us':>10} {'speedup':>8}")
    rng = random.Random(1)
    for n in (2, 4, 8, 16, 32, 64):
        args = [(n, x.partner, x.label, y.partner, y.label)
                for x, y in ((random_diagram(n, rng, (-3, 3)), random_diagram(n, rng, (-3, 3)))
                             for _ in range(pairs))]
        times = {}
        for name, fn in (("python", _concat_py.concat_kernel), ("cython", _concat.concat_kernel)):
            best = min(timeit.repeat(lambda: [fn(*a) for a in args], number=1, repeat=repeat))
            times[name] = best / pairs * 1e6
        print(f"{n:>4} {times['python']:>10.2f} {times['cython']:>10.2f} {times['python'] / times['cython']:>7.1f}x")


def workload():
    rng = random.Random(2)
    pairs = []
    for _ in range(400):
        k = rng.choice([0, 2, 4])
        pairs.append((random_diagram(4, rng, (-3, 3), through=k), random_diagram(4, rng, (-3, 3), through=k)))
    check_relations(5, 4)
    for c, d in pairs:
        check_lemma42(c, d)


def sweep():
    # every pair of colored permutation diagrams, n = 6, labels in [-1, 1]
    rng = random.Random(3)
    diagrams = [random_diagram(6, rng, (-1, 1), through=6) for _ in range(600)]
    for x in diagrams:
        for y in diagrams:
            concat.concatenate(x, y)


def end_to_end(repeat):
    backends = ["python"] + (["cython"] if concat.compiled_available() else [])
    for label, fn in (("relations n=5 plus 400 product congruence checks", workload),
                      ("360k concatenations of n=6 diagrams", sweep)):
        print(f"\nend to end: {label}")
        for name in backends:
            concat.set_backend(name)
            best = min(timeit.repeat(fn, number=1, repeat=repeat))
            print(f"  {name:>6}: {best:.3f}s")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pairs", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    kernel_table(args.pairs, args.repeat)
    end_to_end(args.repeat)

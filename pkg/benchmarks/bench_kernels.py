"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--chords 8 32 128] [--repeat 5]
"""
import argparse
import random
import timeit

from gausscover import kernels
from gausscover.enumeration import random_diagram


def _inputs(g):
    recs = g.chords.values()
    return {
        "chord_indices": (g.endpoint_signs, [r.tail_pos for r in recs], [r.head_pos for r in recs]),
        "r1_positions": (g.partner, True),
        "r2_blocks": (g.partner, [1 if e.role.value == "T" else 0 for e in g.word],
                      [g.sign(e.chord) for e in g.word], True),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--chords", type=int, nargs="+", default=[8, 32, 128, 512])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    impls = kernels.backends()
    if "cython" not in impls:
        print("compiled kernels not built; only the Python backend is available")
    names = sorted(impls)
    print(f"{'kernel':<14}{'chords':>7}" + "".join(f"{n + ' (us)':>16}" for n in names) + f"{'speedup':>10}")
    rng = random.Random(args.seed)
    for c in args.chords:
        g = random_diagram(c, rng, "circular")
        for kernel, call_args in _inputs(g).items():
            times = {}
            for name in names:
                fn = getattr(impls[name], kernel)
                number = max(1, 20000 // (2 * c))
                best = min(timeit.repeat(lambda: fn(*call_args), number=number, repeat=args.repeat))
                times[name] = best / number * 1e6
            speed = times["python"] / times["cython"] if "cython" in times else 1.0
            row = "".join(f"{times[n]:>16.2f}" for n in names)
            print(f"{kernel:<14}{c:>7}{row}{speed:>9.1f}x")


if __name__ == "__main__":
    main()

"""Compare the compiled kernels with their pure-Python twins.

Run ``python3 benchmarks/bench_kernels.py`` after building the extension
(``pip install -e . --no-build-isolation``).
"""

import argparse
import random
import timeit

from twoswitch import _pykernels
from twoswitch.generate import random_graph

try:
    from twoswitch import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

GRAPH_KERNELS = ("census4", "subgraph_counts4", "active_mask", "count_active_switches", "count_k3", "count_k4")


def bench(fn, args, repeat):
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    best = min(timer.repeat(repeat=repeat, number=number))
    return best / number


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[12, 24, 40])
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run pip install -e . --no-build-isolation")

    rng = random.Random(args.seed)
    print(f"{'kernel':<24}{'n':>4}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for n in args.n:
        g = random_graph(n, args.density, rng)
        for name in GRAPH_KERNELS:
            a = (g.n, g.rows)
            py = bench(getattr(_pykernels, name), a, args.repeat)
            cy = bench(getattr(_ckernels, name), a, args.repeat)
            print(f"{name:<24}{n:>4}{py * 1e3:>14.3f}{cy * 1e3:>14.3f}{py / cy:>9.1f}x")
    for degrees in [(2, 2, 2, 2, 2, 2, 2), (3, 3, 2, 2, 2, 2, 1, 1)]:
        py = bench(_pykernels.realizations, (degrees, 10**6), args.repeat)
        cy = bench(_ckernels.realizations, (degrees, 10**6), args.repeat)
        label = "realizations " + "".join(map(str, degrees))
        print(f"{label:<24}{len(degrees):>4}{py * 1e3:>14.3f}{cy * 1e3:>14.3f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()

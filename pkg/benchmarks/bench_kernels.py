"""Time the compiled kernels against the pure-Python fallback."""
import argparse
import itertools
import random
import timeit

from homotopes import _kernels_py
from homotopes.graph import Graph, enumerate_contracted_dense

try:
    from homotopes import _kernels as compiled
except ImportError:
    compiled = None


def cases(seed, vertices, edges, max_len):
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(1, vertices + 1), 2))
    rng.shuffle(pairs)
    g = Graph(range(1, vertices + 1), pairs[:edges])
    paths = enumerate_contracted_dense(g, max_len)
    walks = []
    for _ in range(2000):
        w = [rng.randrange(g.n)]
        for _ in range(rng.randint(0, 12)):
            w.append(rng.choice(list(g.neighbors[w[-1]]) + [w[-1]]))
        walks.append(tuple(w))
    mats = [[[rng.randint(-5, 5) for _ in range(12)] for _ in range(12)] for _ in range(50)]
    return {
        "contract x2000": lambda m: [m.contract(w, g.n, g.edge_index) for w in walks],
        "assoc_scan": lambda m: m.assoc_scan(paths, g.n, g.edge_index, len(g.edges)),
        "int_rank 12x12 x50": lambda m: [m.int_rank(a) for a in mats],
    }, len(paths)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vertices", type=int, default=5)
    ap.add_argument("--edges", type=int, default=7)
    ap.add_argument("--max-len", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    table, npaths = cases(args.seed, args.vertices, args.edges, args.max_len)
    print(f"graph: {args.vertices} vertices, {args.edges} edges, {npaths} paths of length <= {args.max_len}")
    print(f"{'kernel':<22}{'python (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for name, fn in table.items():
        py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        if compiled is None:
            print(f"{name:<22}{py:>12.4f}{'n/a':>14}{'':>10}")
            continue
        c = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:<22}{py:>12.4f}{c:>14.4f}{py / c:>9.1f}x")


if __name__ == "__main__":
    main()

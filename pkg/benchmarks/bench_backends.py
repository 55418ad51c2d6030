#!/usr/bin/env python3
"""Time the compiled kernels against the NumPy fallback.

Generates planted-partition graphs and runs each kernel on both backends,
printing per-kernel wall times and speedups.  The compiled extension is
skipped (with a note) when it is not built.

    python benchmarks/bench_backends.py --n 1000 --repeat 3
"""

import argparse
import time

from linkcohesion import GeneratorSpec, planted_partition
from linkcohesion import _kernels_py

try:
    from linkcohesion import _kernels_cy
except ImportError:
    _kernels_cy = None


def time_call(fn, *args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_graph(g, repeat):
    kernels = [
        ("hop_strengths", (g.indptr, g.indices, g.degrees, g.edges_u, g.edges_v)),
        ("truss_peel", (g.indptr, g.indices, g.adj_edge_ids, g.edges_u, g.edges_v)),
        ("edge_betweenness", (g.indptr, g.indices, g.adj_edge_ids, g.edge_count)),
    ]
    rows = []
    for name, args in kernels:
        fn_name = name if name != "edge_betweenness" else "brandes_edge_betweenness"
        t_py = time_call(getattr(_kernels_py, fn_name), *args, repeat=repeat)
        if _kernels_cy is not None:
            t_cy = time_call(getattr(_kernels_cy, fn_name), *args, repeat=repeat)
            rows.append((name, t_py, t_cy, t_py / t_cy))
        else:
            rows.append((name, t_py, None, None))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--communities", type=int, default=20)
    ap.add_argument("--p-in", type=float, default=0.21, dest="p_in")
    ap.add_argument("--p-out", type=float, default=0.02, dest="p_out")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    spec = GeneratorSpec(args.n, args.communities, args.p_in, args.p_out, args.seed)
    g, _ = planted_partition(spec)
    print(
        f"graph: n={g.num_vertices} edges={g.edge_count} "
        f"(communities={args.communities}, p_in={args.p_in}, p_out={args.p_out}, "
        f"seed={args.seed})"
    )
    if _kernels_cy is None:
        print("compiled extension not built; timing the fallback only")

    print(f"{'kernel':<18}{'python':>12}{'cython':>12}{'speedup':>10}")
    for name, t_py, t_cy, speedup in bench_graph(g, args.repeat):
        cy = f"{t_cy * 1e3:10.1f}ms" if t_cy is not None else f"{'-':>12}"
        sp = f"{speedup:9.1f}x" if speedup is not None else f"{'-':>10}"
        print(f"{name:<18}{t_py * 1e3:10.1f}ms{cy}{sp}")


if __name__ == "__main__":
    main()

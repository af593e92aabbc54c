"""Compare the numba and numpy colouring-search backends.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is run once untimed (numba compiles or loads its cache) and
then timed ``--repeat`` times; the best time is reported.
"""

from __future__ import annotations

import argparse
import time

from symbreak import _accel
from symbreak.corpus import corpus
from symbreak.graph import Graph, complete_graph, cycle_graph
from symbreak.kernels import colouring_search
from symbreak.perm import edge_permutation_array
from symbreak.search import automorphism_group


def _vertex(g):
    return automorphism_group(g).as_array()


def _edge(g):
    return edge_permutation_array(automorphism_group(g).as_array(), g)


def workloads():
    yield "count K6 edges, k=3", [(_edge(complete_graph(6)), 3)], False
    yield "count K7 vertices, k=7", [(_vertex(complete_graph(7)), 7)], False
    yield "count C12 vertices, k=3", [(_vertex(cycle_graph(12)), 3)], False
    yield "count empty graph on 8, k=8", [(_vertex(Graph(8, [])), 8)], False
    sweep = [(_edge(g), 3) for g in corpus(6, connected_only=True, n_min=3)]
    yield f"first witness, {len(sweep)} graphs (edges, k=3)", sweep, True


def run_backend(backend, jobs, first_only):
    return [colouring_search(a, k, first_only=first_only, restricted_growth=first_only,
                             backend=backend)[0] for a, k in jobs]


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if _accel.HAVE_NUMBA else [])
    print(f"{'workload':42s}" + "".join(f"{b:>12s}" for b in backends) + f"{'speedup':>10s}")
    for name, jobs, first_only in workloads():
        row, results = [], []
        for b in backends:
            results.append(run_backend(b, jobs, first_only))
            row.append(best_time(lambda: run_backend(b, jobs, first_only), args.repeat))
        assert all(r == results[0] for r in results), f"backends disagree on {name}"
        speed = f"{row[0] / row[-1]:9.1f}x" if len(row) > 1 else ""
        print(f"{name:42s}" + "".join(f"{t:11.4f}s" for t in row) + speed)


if __name__ == "__main__":
    main()

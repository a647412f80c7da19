#!/usr/bin/env python3
"""Benchmark the hot kernels on real workloads, comparing the compiled
path against the pure-numpy fallback (NEAROCT_NO_NUMBA=1).

Usage:
    python3 benchmarks/bench_kernels.py [--cache-dir DIR]

The parent process builds the input arrays once (octagon collinearity
graph, hexagon incidence graph, one suboctagon's valuation-search inputs,
a block of valuation vectors), saves them to a temporary .npz, and then
launches one child per kernel path so the import-time path selection is
exercised for real.
"""

import argparse
import json
import os
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import numpy as np

KERNELS = ("all_pairs_distances", "graph_girth", "valuation_search",
           "neighboring_pairs")


def prepare(cache_dir, out_path):
    from nearoct import incidence, subgeometries, valuations
    from nearoct.workbench import Workbench

    wb = Workbench(cache_dir=cache_dir)
    geom = wb.octagon.geometry
    oct_indptr, oct_indices = geom.adjacency_csr()

    hexgeom = wb.hexagon.geometry
    n = hexgeom.n_points + hexgeom.n_lines
    src = np.concatenate([
        hexgeom.lines.ravel(),
        np.repeat(np.arange(hexgeom.n_lines), hexgeom.line_size)
        + hexgeom.n_points,
    ]).astype(np.int32)
    dst = np.concatenate([
        np.repeat(np.arange(hexgeom.n_lines), hexgeom.line_size)
        + hexgeom.n_points,
        hexgeom.lines.ravel(),
    ]).astype(np.int32)
    order = np.argsort(src, kind="stable")
    inc_indices = dst[order]
    inc_indptr = np.concatenate(
        ([0], np.cumsum(np.bincount(src, minlength=n)))
    ).astype(np.int64)

    # one regular suboctagon, reconstructed from a far point pair
    x = 0
    labels = wb.octagon.orbitals.labels[x]
    o4 = wb.octagon.orbital_by_size[2048]
    y = int(np.flatnonzero(labels == o4)[0])
    sub = subgeometries.hj_closure(wb.octagon, wb.dm, x, y, quads=wb.quads)
    hj = sub.induced
    dm = incidence.distances(hj)
    anchor = 0
    search_order = valuations._closing_order(hj, anchor)
    lp_indptr, lp_lines = hj.lines_of_point()
    vmin = np.zeros(hj.n_points, dtype=np.int8)
    vmax = np.minimum(dm.dist[anchor], dm.diameter).astype(np.int8)

    vals = valuations.enumerate_valuations(hj, dm)

    np.savez(
        out_path,
        oct_indptr=oct_indptr, oct_indices=oct_indices,
        oct_n=np.int64(geom.n_points),
        inc_indptr=inc_indptr, inc_indices=inc_indices, inc_n=np.int64(n),
        hj_lines=hj.lines, lp_indptr=lp_indptr, lp_lines=lp_lines,
        search_order=search_order, vmin=vmin, vmax=vmax,
        valuations=vals[:1500].astype(np.int8),
    )


def run_child(data_path):
    from nearoct import kernels

    data = np.load(data_path)
    timings = {"path": "numba" if kernels.using_numba() else "numpy"}

    start = time.perf_counter()
    D = kernels.all_pairs_distances(
        data["oct_indptr"], data["oct_indices"], int(data["oct_n"])
    )
    timings["all_pairs_distances"] = time.perf_counter() - start
    assert int(D.max()) == 4

    start = time.perf_counter()
    girth = kernels.graph_girth(
        data["inc_indptr"], data["inc_indices"], int(data["inc_n"])
    )
    timings["graph_girth"] = time.perf_counter() - start
    assert girth == 12

    start = time.perf_counter()
    sols = kernels.valuation_search(
        data["search_order"], data["lp_indptr"], data["lp_lines"],
        data["hj_lines"], data["vmin"], data["vmax"],
    )
    timings["valuation_search"] = time.perf_counter() - start
    assert len(sols) > 0

    start = time.perf_counter()
    pairs = kernels.neighboring_pairs(data["valuations"])
    timings["neighboring_pairs"] = time.perf_counter() - start
    assert len(pairs) > 0

    print(json.dumps(timings))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cache-dir", default="nearoct-cache")
    parser.add_argument("--child", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.child:
        run_child(args.child)
        return

    with tempfile.TemporaryDirectory() as tmp:
        data_path = str(Path(tmp) / "bench.npz")
        print("preparing inputs ...", flush=True)
        prepare(args.cache_dir, data_path)
        results = {}
        for label, no_numba in (("numba", "0"), ("numpy", "1")):
            env = dict(os.environ, NEAROCT_NO_NUMBA=no_numba)
            print(f"running {label} path ...", flush=True)
            out = subprocess.run(
                [sys.executable, __file__, "--child", data_path],
                env=env, capture_output=True, text=True, check=True,
            )
            results[label] = json.loads(out.stdout.splitlines()[-1])
        print(f"\n{'kernel':<22} {'numba (s)':>10} {'numpy (s)':>10} "
              f"{'speedup':>8}")
        for kernel in KERNELS:
            fast = results["numba"][kernel]
            slow = results["numpy"][kernel]
            ratio = slow / fast if fast > 0 else float("inf")
            print(f"{kernel:<22} {fast:>10.3f} {slow:>10.3f} {ratio:>7.1f}x")


if __name__ == "__main__":
    main()

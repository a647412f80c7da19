"""Hand-built geometries, reference graphs, and a brute-force strong
regularity oracle used as fixed test inputs."""

import itertools

import numpy as np

from nearoct.incidence import Geometry


def grid_geometry() -> Geometry:
    """The 3x3 grid: generalized quadrangle of order (2,1)."""
    rows = [[3 * r + c for c in range(3)] for r in range(3)]
    cols = [[3 * r + c for r in range(3)] for c in range(3)]
    return Geometry(9, rows + cols)


def single_line_geometry() -> Geometry:
    return Geometry(3, [[0, 1, 2]])


def adjacency_from_edges(n, edges) -> np.ndarray:
    A = np.zeros((n, n), dtype=bool)
    for a, b in edges:
        A[a, b] = A[b, a] = True
    return A


def adjacency_csr(A):
    """(indptr, indices) of a boolean adjacency matrix, for the kernels."""
    A = np.asarray(A, dtype=bool)
    counts = A.sum(axis=1)
    indptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
    indices = A.nonzero()[1].astype(np.int32)
    return indptr, indices


def cycle_graph(n) -> np.ndarray:
    return adjacency_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n) -> np.ndarray:
    return adjacency_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> np.ndarray:
    """Kneser graph on the 2-subsets of a 5-set: srg(10, 3, 0, 1)."""
    verts = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i in range(10)
        for j in range(i + 1, 10)
        if not set(verts[i]) & set(verts[j])
    ]
    return adjacency_from_edges(10, edges)


def rook_graph(n) -> np.ndarray:
    """n x n rook's move graph: srg(n^2, 2n-2, n-2, 2)."""
    A = np.zeros((n * n, n * n), dtype=bool)
    for r1, c1 in itertools.product(range(n), repeat=2):
        for r2, c2 in itertools.product(range(n), repeat=2):
            if (r1, c1) != (r2, c2) and (r1 == r2 or c1 == c2):
                A[r1 * n + c1, r2 * n + c2] = True
    return A


def triangular_graph(m) -> np.ndarray:
    """Johnson graph on 2-subsets of an m-set: srg(C(m,2), 2(m-2), m-2, 4)."""
    verts = list(itertools.combinations(range(m), 2))
    n = len(verts)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if set(verts[i]) & set(verts[j])
    ]
    return adjacency_from_edges(n, edges)


def paley_graph(q) -> np.ndarray:
    """Quadratic-residue graph on GF(q), q prime = 1 mod 4."""
    residues = {(x * x) % q for x in range(1, q)}
    return adjacency_from_edges(
        q, [(a, b) for a in range(q) for b in range(a + 1, q)
            if (a - b) % q in residues]
    )


def complete_bipartite(a, b) -> np.ndarray:
    return adjacency_from_edges(
        a + b, [(i, a + j) for i in range(a) for j in range(b)]
    )


def brute_srg_params(adjacency):
    """Pure-python reference: (v, k, lambda, mu) by triple loops, or None
    if the graph is not strongly regular.  Complete graphs get mu=None."""
    A = [[bool(x) for x in row] for row in np.asarray(adjacency)]
    v = len(A)
    for i in range(v):
        if A[i][i]:
            return None
        for j in range(v):
            if A[i][j] != A[j][i]:
                return None
    degrees = {sum(row) for row in A}
    if v == 0 or len(degrees) != 1:
        return None
    k = degrees.pop()
    lambdas, mus = set(), set()
    for i in range(v):
        for j in range(i + 1, v):
            common = sum(1 for x in range(v) if A[i][x] and A[j][x])
            (lambdas if A[i][j] else mus).add(common)
    if len(lambdas) > 1 or len(mus) > 1:
        return None
    lam = lambdas.pop() if lambdas else None
    mu = mus.pop() if mus else None
    return (v, k, lam, mu)

"""Representation-independent point-line geometry: graphs, distances, axioms.

All distances are measured in the collinearity graph.  Unreachable pairs use
the sentinel ``kernels.UNREACHED``, which is larger than any diameter that can
occur here; connectivity is always checked before near-polygon logic runs.
All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import Disconnected, Malformed, NotNearPolygon

INF = kernels.UNREACHED


class Geometry:
    """An indexed point set with lines stored as sorted point-index tuples.

    Lines are canonicalized (sorted within each line, lines in lexicographic
    order), so two geometries are equal iff they have the same line sets.
    ``labels`` optionally carries per-point annotations; induced subgeometries
    use it to remember original point indices.
    """

    def __init__(self, n_points, lines, labels=None):
        self.n_points = int(n_points)
        arr = np.asarray(lines, dtype=np.int32)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] < 2:
            raise Malformed("lines must be tuples of at least 2 point indices")
        if arr.size and (arr.min() < 0 or arr.max() >= self.n_points):
            raise Malformed("line contains an out-of-range point index")
        arr = np.sort(arr, axis=1)
        order = np.lexsort(arr.T[::-1])
        arr = arr[order]
        if arr.shape[0] > 1 and (np.diff(arr, axis=0) == 0).all(axis=1).any():
            raise Malformed("duplicate lines")
        self.lines = arr
        self.labels = None if labels is None else np.asarray(labels)
        self._cache = {}

    @property
    def n_lines(self):
        return self.lines.shape[0]

    @property
    def line_size(self):
        return self.lines.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, Geometry)
            and self.n_points == other.n_points
            and self.lines.shape == other.lines.shape
            and bool((self.lines == other.lines).all())
        )

    def __hash__(self):
        return hash((self.n_points, self.lines.tobytes()))

    def lines_of_point(self):
        """CSR map point -> incident line ids, cached."""
        if "lop" not in self._cache:
            flat = self.lines.ravel()
            order = np.argsort(flat, kind="stable")
            line_ids = (order // self.line_size).astype(np.int32)
            counts = np.bincount(flat, minlength=self.n_points)
            indptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int32)
            self._cache["lop"] = (indptr, line_ids)
        return self._cache["lop"]

    def adjacency_csr(self):
        """Collinearity graph in CSR form (each edge once per direction)."""
        if "adj" not in self._cache:
            k = self.line_size
            src, dst = [], []
            for a, b in itertools.combinations(range(k), 2):
                src.extend((self.lines[:, a], self.lines[:, b]))
                dst.extend((self.lines[:, b], self.lines[:, a]))
            src = np.concatenate(src) if src else np.empty(0, np.int32)
            dst = np.concatenate(dst) if dst else np.empty(0, np.int32)
            pair = np.unique(
                src.astype(np.int64) * self.n_points + dst.astype(np.int64)
            )
            src = (pair // self.n_points).astype(np.int32)
            dst = (pair % self.n_points).astype(np.int32)
            counts = np.bincount(src, minlength=self.n_points)
            indptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
            self._cache["adj"] = (indptr, dst)
        return self._cache["adj"]

    def adjacency_matrix(self):
        if "adjmat" not in self._cache:
            A = np.zeros((self.n_points, self.n_points), dtype=bool)
            indptr, dst = self.adjacency_csr()
            for v in range(self.n_points):
                A[v, dst[indptr[v] : indptr[v + 1]]] = True
            self._cache["adjmat"] = A
        return self._cache["adjmat"]

    def point_degrees(self):
        return np.bincount(self.lines.ravel(), minlength=self.n_points)

    def partial_linear_violation(self):
        """A pair of points on two common lines, or None."""
        seen = {}
        for lid, line in enumerate(self.lines):
            for a, b in itertools.combinations(map(int, line), 2):
                if (a, b) in seen:
                    return (a, b, seen[(a, b)], lid)
                seen[(a, b)] = lid
        return None


@dataclass
class DistanceMatrix:
    n_points: int
    dist: np.ndarray  # int16, INF sentinel for unreachable

    def d(self, x, y):
        return int(self.dist[x, y])

    @property
    def connected(self):
        return bool((self.dist < INF).all())

    @property
    def diameter(self):
        if not self.connected:
            return INF
        return int(self.dist.max())


def distances(geom: Geometry) -> DistanceMatrix:
    """All-pairs BFS distances in the collinearity graph."""
    indptr, indices = geom.adjacency_csr()
    dist = kernels.all_pairs_distances(indptr, indices, geom.n_points)
    return DistanceMatrix(geom.n_points, dist)


@dataclass
class AxiomReport:
    verdict: bool
    parameters: dict = field(default_factory=dict)
    witness: object = None
    notes: str = ""

    def __bool__(self):
        return self.verdict

    def __str__(self):
        state = "pass" if self.verdict else "fail"
        bits = [state]
        if self.parameters:
            bits.append(str(self.parameters))
        if not self.verdict and self.witness is not None:
            bits.append(f"witness={self.witness!r}")
        if self.notes:
            bits.append(self.notes)
        return " ".join(bits)


def _order_params(geom: Geometry):
    """(s, t) if lines are equisized and point degrees constant, else None."""
    degs = geom.point_degrees()
    if geom.n_lines == 0 or degs.min() != degs.max():
        return None
    return (geom.line_size - 1, int(degs[0]) - 1)


def check_near_polygon(geom: Geometry, dm: DistanceMatrix) -> AxiomReport:
    """NP1 (connected, reports diameter) and NP2 (unique nearest point on
    every line); reports the order (s,t) when one exists."""
    viol = geom.partial_linear_violation()
    if viol is not None:
        return AxiomReport(False, witness=viol, notes="not partial linear")
    if not dm.connected:
        x = int(np.argwhere(dm.dist == INF)[0][1])
        return AxiomReport(False, witness=(0, x), notes="disconnected")
    # NP2, vectorized over chunks of lines
    D = dm.dist
    for start in range(0, geom.n_lines, 512):
        chunk = geom.lines[start : start + 512]
        dxl = D[:, chunk.T]  # (n_points, line_size, chunk)
        nearest = dxl.min(axis=1)
        n_nearest = (dxl == nearest[:, None, :]).sum(axis=1)
        bad = np.argwhere(n_nearest != 1)
        if bad.size:
            x, l = int(bad[0][0]), int(bad[0][1]) + start
            return AxiomReport(
                False,
                witness=(x, tuple(int(p) for p in geom.lines[l])),
                notes="no unique nearest point",
            )
    params = {"diameter": dm.diameter}
    order = _order_params(geom)
    if order is not None:
        params["s"], params["t"] = order
    return AxiomReport(True, parameters=params)


def regular_parameters(geom: Geometry, dm: DistanceMatrix) -> AxiomReport:
    """The constants t_i of a regular near polygon, or a violating pair.

    For every pair (x,y) at distance i, counts the lines through y containing
    a point at distance i-1 from x; regularity means the count only depends
    on i.
    """
    order = _order_params(geom)
    np_rep = check_near_polygon(geom, dm)
    if not np_rep or order is None:
        raise NotNearPolygon("input is not a near polygon with an order")
    d = dm.diameter
    D = dm.dist
    lines = geom.lines
    t_counts = {}
    witness_pair = None
    for x in range(geom.n_points):
        dx = D[x]
        line_min = dx[lines].min(axis=1)
        contrib = dx[lines] == (line_min + 1)[:, None]
        counts = np.zeros(geom.n_points, dtype=np.int32)
        np.add.at(counts, lines.ravel(), contrib.ravel())
        for i in range(1, d + 1):
            ys = np.flatnonzero(dx == i)
            vals = np.unique(counts[ys])
            prev = t_counts.setdefault(i, set())
            prev.update(int(v) for v in vals)
            if len(prev) > 1 and witness_pair is None:
                witness_pair = (x, int(ys[0]), i)
        if witness_pair is not None:
            break
    if witness_pair is not None:
        return AxiomReport(False, witness=witness_pair, notes="t_i not constant")
    t_values = [sorted(t_counts[i])[0] - 1 for i in range(1, d + 1)]
    s, t = order
    return AxiomReport(
        True,
        parameters={"s": s, "t": t, "t_i": tuple(t_values[1:-1]), "diameter": d},
    )


def check_generalized_2dgon(geom: Geometry, d: int) -> AxiomReport:
    """Generalized 2d-gon test via the bipartite incidence graph: diameter 2d
    and girth 4d.  (Equivalently: a regular near 2d-gon with all t_i = 0.)"""
    viol = geom.partial_linear_violation()
    if viol is not None:
        return AxiomReport(False, witness=viol, notes="not partial linear")
    n = geom.n_points + geom.n_lines
    edges_src = np.concatenate(
        [geom.lines.ravel(), np.repeat(np.arange(geom.n_lines), geom.line_size)
         + geom.n_points]
    ).astype(np.int32)
    edges_dst = np.concatenate(
        [np.repeat(np.arange(geom.n_lines), geom.line_size) + geom.n_points,
         geom.lines.ravel()]
    ).astype(np.int32)
    order = np.argsort(edges_src, kind="stable")
    dst = edges_dst[order]
    counts = np.bincount(edges_src, minlength=n)
    indptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
    dist = kernels.all_pairs_distances(indptr, dst, n)
    if (dist == INF).any():
        return AxiomReport(False, notes="incidence graph disconnected")
    diam = int(dist.max())
    girth = kernels.graph_girth(indptr, dst, n)
    ok = diam == 2 * d and girth == 4 * d
    params = {"incidence_diameter": diam, "incidence_girth": girth}
    order_p = _order_params(geom)
    if order_p is not None:
        params["s"], params["t"] = order_p
    return AxiomReport(ok, parameters=params)


def check_srg(adjacency: np.ndarray) -> AxiomReport:
    """Strong regularity by common-neighbour counting; returns (v,k,lambda,mu).

    Graphs with no non-edges are reported as "complete" with mu undefined.
    """
    A = np.asarray(adjacency, dtype=bool)
    v = A.shape[0]
    if A.shape != (v, v) or (A != A.T).any() or A.diagonal().any():
        return AxiomReport(False, notes="not a simple symmetric adjacency matrix")
    degs = A.sum(axis=1)
    if v == 0 or degs.min() != degs.max():
        return AxiomReport(False, notes="not regular",
                           witness=(int(degs.argmin()), int(degs.argmax())))
    k = int(degs[0])
    C = (A.astype(np.float64) @ A.astype(np.float64)).astype(np.int64)
    off = ~np.eye(v, dtype=bool)
    edge_counts = np.unique(C[A & off])
    nonedge_counts = np.unique(C[(~A) & off])
    if edge_counts.size > 1:
        return AxiomReport(False, notes="lambda not constant",
                           witness=tuple(int(c) for c in edge_counts))
    if nonedge_counts.size > 1:
        return AxiomReport(False, notes="mu not constant",
                           witness=tuple(int(c) for c in nonedge_counts))
    lam = int(edge_counts[0]) if edge_counts.size else None
    if nonedge_counts.size == 0:
        return AxiomReport(
            True, parameters={"v": v, "k": k, "lambda": lam, "mu": None},
            notes="complete graph, mu undefined",
        )
    mu = int(nonedge_counts[0])
    return AxiomReport(True, parameters={"v": v, "k": k, "lambda": lam, "mu": mu})


def check_distance_regular(adjacency: np.ndarray) -> AxiomReport:
    """Intersection numbers b_i, c_i by exact counting; returns the array."""
    A = np.asarray(adjacency, dtype=bool)
    v = A.shape[0]
    counts = np.bincount(A.nonzero()[0], minlength=v)
    indptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
    indices = A.nonzero()[1].astype(np.int32)
    D = kernels.all_pairs_distances(indptr, indices, v)
    if (D == INF).any():
        raise Disconnected("graph is disconnected")
    d = int(D.max())
    Af = A.astype(np.float32)
    bs, cs = [], []
    for i in range(0, d + 1):
        up = ((D == i + 1).astype(np.float32) @ Af).astype(np.int64) if i < d else None
        down = ((D == i - 1).astype(np.float32) @ Af).astype(np.int64) if i > 0 else None
        mask = D == i
        if i < d:
            vals = np.unique(up[mask])
            if vals.size != 1:
                pair = np.argwhere(mask & (up != up[mask][0]))
                return AxiomReport(False, witness=tuple(int(t) for t in pair[0]),
                                   notes=f"b_{i} not constant")
            bs.append(int(vals[0]))
        if i > 0:
            vals = np.unique(down[mask])
            if vals.size != 1:
                pair = np.argwhere(mask & (down != down[mask][0]))
                return AxiomReport(False, witness=tuple(int(t) for t in pair[0]),
                                   notes=f"c_{i} not constant")
            cs.append(int(vals[0]))
    return AxiomReport(True, parameters={"intersection_array": (tuple(bs), tuple(cs)),
                                         "diameter": d})


def convex_closure(geom: Geometry, dm: DistanceMatrix, seed) -> np.ndarray:
    """Smallest point set containing the seed that is closed under geodesics
    and under full lines through two of its points; returns sorted indices."""
    inx = np.zeros(geom.n_points, dtype=bool)
    inx[np.asarray(list(seed), dtype=np.int64)] = True
    D = dm.dist
    lines = geom.lines
    while True:
        before = int(inx.sum())
        pts = np.flatnonzero(inx)
        rows = D[pts].astype(np.int32)
        for ai in range(len(pts)):
            for bi in range(ai + 1, len(pts)):
                dab = rows[ai][pts[bi]]
                inx |= rows[ai] + rows[bi] == dab
        hit = inx[lines].sum(axis=1) >= 2
        if hit.any():
            inx[lines[hit].ravel()] = True
        if int(inx.sum()) == before:
            return np.flatnonzero(inx)


def induced_subgeometry(geom: Geometry, points) -> Geometry:
    """Subgeometry on the given points, keeping only fully contained lines.

    The returned geometry's ``labels`` hold the original point indices (the
    old->new index map is ``new = position in labels``).
    """
    pts = np.unique(np.asarray(list(points), dtype=np.int64))
    newid = np.full(geom.n_points, -1, dtype=np.int64)
    newid[pts] = np.arange(len(pts))
    inside = (newid[geom.lines] >= 0).all(axis=1)
    sub_lines = newid[geom.lines[inside]]
    if geom.labels is not None:
        labels = geom.labels[pts]
    else:
        labels = pts
    return Geometry(len(pts), sub_lines.reshape(-1, geom.line_size), labels=labels)


def isometric_check(
    ambient_dm: DistanceMatrix, sub_points, sub_geom: Geometry
) -> AxiomReport:
    """Internal distances of the subgeometry must equal ambient distances."""
    pts = np.unique(np.asarray(list(sub_points), dtype=np.int64))
    if len(pts) != sub_geom.n_points:
        raise Malformed("point set size does not match subgeometry")
    sub_dm = distances(sub_geom)
    amb = ambient_dm.dist[np.ix_(pts, pts)]
    bad = np.argwhere(sub_dm.dist != amb)
    if bad.size:
        i, j = (int(t) for t in bad[0])
        return AxiomReport(
            False,
            witness=(int(pts[i]), int(pts[j]),
                     int(amb[i, j]), int(sub_dm.dist[i, j])),
            notes="internal distance differs from ambient",
        )
    return AxiomReport(True)


# ---------------------------------------------------------------------------
# geometry text format (cache + corpus files)


def save_geometry(geom: Geometry, path):
    with open(path, "w") as fh:
        fh.write(f"points {geom.n_points} lines {geom.n_lines}\n")
        for line in geom.lines:
            fh.write(" ".join(str(int(p)) for p in line) + "\n")


def load_geometry(path) -> Geometry:
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 4 or header[0] != "points" or header[2] != "lines":
            raise Malformed(f"{path}: bad geometry header")
        n_points, n_lines = int(header[1]), int(header[3])
        lines = [[int(t) for t in fh.readline().split()] for _ in range(n_lines)]
    return Geometry(n_points, lines)

"""The tower of graphs built from suboctagon intersections.

From the 4095-point geometry and its 416 regular suboctagons we derive, by
pure intersection combinatorics, a chain of strongly regular graphs on
416, 1782, 100, 36 vertices plus a 14-vertex cubic-free bipartite graph,
and three further strongly regular graphs from the thin suboctagons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import incidence
from .errors import ClassificationFailure, FamilySizeMismatch
from .incidence import AxiomReport, Geometry


@dataclass
class Graph:
    n: int
    adjacency: np.ndarray  # (n, n) bool, symmetric, zero diagonal
    vertex_labels: list

    def degree_sequence(self):
        return self.adjacency.sum(axis=1)


def _pairwise_intersections(point_sets, n_points):
    m = np.zeros((n_points, len(point_sets)), dtype=bool)
    for i, pts in enumerate(point_sets):
        m[np.asarray(pts), i] = True
    inter = (m.T.astype(np.float32) @ m.astype(np.float32)).astype(np.int32)
    return m, inter


def srg_spectral_check(params: dict) -> AxiomReport:
    """Exact integer checks of the standard strongly-regular identities:
    k(k-lambda-1) = (v-k-1)mu and integrality of the eigenvalue
    multiplicities (except for conference-graph parameters)."""
    v, k, lam, mu = (params[key] for key in ("v", "k", "lambda", "mu"))
    if mu is None:
        return AxiomReport(True, notes="complete graph, nothing to check")
    if k * (k - lam - 1) != (v - k - 1) * mu:
        return AxiomReport(False, notes="count identity fails")
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    root = math.isqrt(disc) if disc >= 0 else -1
    conference = 2 * k + (v - 1) * (lam - mu) == 0
    if not conference:
        if root * root != disc:
            return AxiomReport(False, notes="eigenvalues not integral")
        num = (v - 1) * (mu - lam) - 2 * k
        if (num + (v - 1) * root) % (2 * root) != 0:
            return AxiomReport(False, notes="multiplicities not integral")
    return AxiomReport(True, parameters={"identity": True})


def _srg_with_spectrum(adjacency) -> AxiomReport:
    rep = incidence.check_srg(adjacency)
    if not rep:
        return rep
    spec = srg_spectral_check(rep.parameters)
    if not spec:
        return AxiomReport(False, parameters=rep.parameters, notes=str(spec))
    return rep


def g2_4_graph(geom: Geometry, hjs, validate_intersections=True):
    """Vertices: the 416 regular suboctagons; edges: 63-point intersections
    inducing a generalized hexagon of order (2,2)."""
    sets = [sub.points for sub in hjs]
    _, inter = _pairwise_intersections(sets, geom.n_points)
    n = len(hjs)
    adjacency = np.zeros((n, n), dtype=bool)
    size_census = {}
    for i in range(n):
        for j in range(i + 1, n):
            size = int(inter[i, j])
            size_census[size] = size_census.get(size, 0) + 1
            if size != 63:
                continue
            if validate_intersections:
                pts = np.intersect1d(sets[i], sets[j])
                sub = incidence.induced_subgeometry(geom, pts)
                rep = incidence.check_generalized_2dgon(sub, 3)
                if not rep or (
                    rep.parameters.get("s"),
                    rep.parameters.get("t"),
                ) != (2, 2):
                    raise ClassificationFailure(
                        f"63-point intersection ({i},{j}) is not a GH(2,2)"
                    )
            adjacency[i, j] = adjacency[j, i] = True
    graph = Graph(n, adjacency, [("suboctagon", i) for i in range(n)])
    rep = _srg_with_spectrum(adjacency)
    rep.parameters["intersection_sizes"] = dict(sorted(size_census.items()))
    return graph, rep


def suzuki_graph(oct_, hjs, g24: Graph, hexagon):
    """One extra vertex joined to the 416 suboctagons, plus the 1365 spread
    lines: suboctagon pairs as in the 416-vertex graph, suboctagon-line edges
    by incidence, line pairs at ambient distance 2."""
    n_a, n_b = len(hjs), len(hexagon.spread_line_ids)
    n = 1 + n_a + n_b
    adjacency = np.zeros((n, n), dtype=bool)
    adjacency[0, 1 : 1 + n_a] = adjacency[1 : 1 + n_a, 0] = True
    adjacency[1 : 1 + n_a, 1 : 1 + n_a] = g24.adjacency
    # suboctagon x spread line incidence
    m = np.zeros((oct_.geometry.n_points, n_a), dtype=bool)
    for i, sub in enumerate(hjs):
        m[sub.points, i] = True
    spread_pts = oct_.geometry.lines[hexagon.spread_line_ids]
    hit_counts = m[spread_pts].sum(axis=1)  # (n_b, n_a) points in common
    if hit_counts.max() > 1:
        raise ClassificationFailure(
            "a spread line shares more than one point with a suboctagon"
        )
    meets = hit_counts == 1
    if (meets.sum(axis=0) != 315).any():
        raise ClassificationFailure(
            "a suboctagon does not meet exactly 315 spread lines"
        )
    adjacency[1 : 1 + n_a, 1 + n_a :] = meets.T
    adjacency[1 + n_a :, 1 : 1 + n_a] = meets
    hex_dm = incidence.distances(hexagon.geometry)
    bb = hex_dm.dist == 2
    adjacency[1 + n_a :, 1 + n_a :] = bb
    labels = (
        ["infinity"]
        + [("suboctagon", i) for i in range(n_a)]
        + [("spread_line", int(l)) for l in hexagon.spread_line_ids]
    )
    graph = Graph(n, adjacency, labels)
    return graph, _srg_with_spectrum(adjacency)


# ---------------------------------------------------------------------------
# descending the tower by intersecting with a fixed member


def _distinct_intersections(fixed_pts, others, sizes, n_points):
    found = {}
    fixed = np.asarray(fixed_pts)
    for other in others:
        inter = np.intersect1d(fixed, np.asarray(other))
        if len(inter) in sizes:
            found.setdefault(inter.tobytes(), inter)
    return sorted(found.values(), key=lambda a: tuple(map(int, a)))


def _is_grid_remnant(geom: Geometry, pts) -> bool:
    """Nine points carrying four lines: one meets the other three, which are
    pairwise disjoint (a 3x3 grid with two disjoint lines removed)."""
    sub = incidence.induced_subgeometry(geom, pts)
    if sub.n_points != 9 or sub.n_lines != 4:
        return False
    shared = np.zeros((4, 4), dtype=int)
    for i in range(4):
        for j in range(4):
            shared[i, j] = len(
                np.intersect1d(sub.lines[i], sub.lines[j])
            ) if i != j else 0
    meet_counts = sorted((shared[i] > 0).sum() for i in range(4))
    return meet_counts == [1, 1, 1, 3]


def descend_graph(level: int, geom: Geometry, family, parent_adjacency):
    """Intersections of the first family member with its graph neighbours.

    level 2: inside a 315-point suboctagon — 100 hexagons of order (2,2),
    edges on 21-point intersections -> srg(100,36,14,12).
    level 1: inside a hexagon of order (2,2) — 36 hexagons of order (2,1),
    edges on 9-point grid-remnant intersections -> srg(36,14,4,6).
    level 0: inside a hexagon of order (2,1) — 14 grid remnants, edges on
    3-point coclique intersections (bipartite 4-regular graph on 14
    vertices; the shared-line 3-point intersections are excluded, see
    _coheawood_report).
    """
    specs = {
        2: dict(child_size=63, expect=100, edge_size=21),
        1: dict(child_size=21, expect=36, edge_size=9),
        0: dict(child_size=9, expect=14, edge_size=3),
    }[level]
    fixed = np.asarray(family[0])
    neighbours = [family[j] for j in np.flatnonzero(parent_adjacency[0])]
    children = _distinct_intersections(
        fixed, neighbours, {specs["child_size"]}, geom.n_points
    )
    if len(children) != specs["expect"]:
        raise FamilySizeMismatch(
            f"level {level}: {len(children)} children, expected {specs['expect']}"
        )
    # validate the children as the right kind of subgeometry
    for pts in children:
        if level == 2:
            rep = incidence.check_generalized_2dgon(
                incidence.induced_subgeometry(geom, pts), 3
            )
            ok = rep and (rep.parameters.get("s"), rep.parameters.get("t")) == (2, 2)
        elif level == 1:
            rep = incidence.check_generalized_2dgon(
                incidence.induced_subgeometry(geom, pts), 3
            )
            ok = rep and (rep.parameters.get("s"), rep.parameters.get("t")) == (2, 1)
        else:
            ok = _is_grid_remnant(geom, pts)
        if not ok:
            raise ClassificationFailure(f"level {level}: invalid child geometry")
    n = len(children)
    adjacency = np.zeros((n, n), dtype=bool)
    companion = np.zeros((n, n), dtype=bool)  # level 0: 5-point intersections
    for i in range(n):
        for j in range(i + 1, n):
            inter = np.intersect1d(children[i], children[j])
            if level == 0 and len(inter) == 5:
                companion[i, j] = companion[j, i] = True
            if len(inter) != specs["edge_size"]:
                continue
            if level == 0:
                # adjacency needs the three common points pairwise
                # non-collinear; shared-line triples give the 3-regular
                # point-line incidence graph of the projective plane of
                # order 2 instead (see _coheawood_report)
                hits = np.isin(geom.lines, inter).sum(axis=1)
                if (hits >= 2).any():
                    continue
            adjacency[i, j] = adjacency[j, i] = True
    graph = Graph(n, adjacency, [("intersection", tuple(map(int, c)))
                                 for c in children])
    if level in (1, 2):
        rep = _srg_with_spectrum(adjacency)
    else:
        rep = _coheawood_report(adjacency)
        hea = heawood_report(companion)
        rep.parameters["five_point_companion_is_plane_incidence"] = bool(hea)
        if not hea:
            rep.verdict = False
    return graph, rep, children


def _coheawood_report(adjacency) -> AxiomReport:
    """The quartic bipartite distance-regular graph on 14 vertices with
    intersection array {4,3,2;1,2,4} — the incidence graph of the unique
    2-(7,4,2) design, i.e. the bipartite complement of the incidence graph
    of the projective plane of order 2."""
    n = adjacency.shape[0]
    degs = adjacency.sum(axis=1)
    if n != 14 or degs.min() != 4 or degs.max() != 4:
        return AxiomReport(False, notes="not 4-regular on 14 vertices")
    dist = incidence_free_distances(adjacency)
    # bipartite iff every edge joins vertices of opposite parity from vertex 0
    parity_ok = not (
        adjacency & ((dist[0][:, None] + dist[0][None, :]) % 2 == 0)
    ).any()
    drg = incidence.check_distance_regular(adjacency)
    array_ok = drg.parameters.get("intersection_array") == ((4, 3, 2), (1, 2, 4))
    ok = parity_ok and bool(drg) and array_ok
    return AxiomReport(
        ok,
        parameters={
            "n": n,
            "degree": 4,
            "bipartite": parity_ok,
            "intersection_array": drg.parameters.get("intersection_array"),
        },
    )


def heawood_report(adjacency) -> AxiomReport:
    """The cubic incidence graph of the projective plane of order 2:
    distance-regular with intersection array {3,2,2;1,1,3} and girth 6."""
    from . import kernels

    n = adjacency.shape[0]
    degs = adjacency.sum(axis=1)
    if n != 14 or degs.min() != 3 or degs.max() != 3:
        return AxiomReport(False, notes="not 3-regular on 14 vertices")
    counts = np.bincount(adjacency.nonzero()[0], minlength=n)
    indptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
    indices = adjacency.nonzero()[1].astype(np.int32)
    girth = kernels.graph_girth(indptr, indices, n)
    drg = incidence.check_distance_regular(adjacency)
    array_ok = drg.parameters.get("intersection_array") == ((3, 2, 2), (1, 1, 3))
    return AxiomReport(
        girth == 6 and bool(drg) and array_ok,
        parameters={"girth": int(girth),
                    "intersection_array": drg.parameters.get("intersection_array")},
    )


def incidence_free_distances(adjacency):
    n = adjacency.shape[0]
    counts = np.bincount(adjacency.nonzero()[0], minlength=n)
    indptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
    indices = adjacency.nonzero()[1].astype(np.int32)
    from . import kernels

    return kernels.all_pairs_distances(indptr, indices, n)


# ---------------------------------------------------------------------------
# the three extra strongly regular graphs


def bonus_srgs(geom: Geometry, go280, go56, gprime, oct_, hexagon):
    """(a) the 280 thin suboctagons of one regular suboctagon, edges on
    15-point intersections; (b) the 56 thin suboctagons of the hexagonal
    suboctagon, edges on 9-point intersections; (c) those 56 plus the 105
    spread lines inside it plus an extra vertex."""
    reports = {}
    graphs = {}
    # (a)
    sets280 = [sub.points for sub in go280]
    _, inter = _pairwise_intersections(sets280, geom.n_points)
    off = ~np.eye(len(go280), dtype=bool)
    sizes = set(np.unique(inter[off]).tolist())
    if not sizes <= {5, 15}:
        raise ClassificationFailure(f"280-family intersection sizes {sizes}")
    adj280 = (inter == 15) & off
    graphs["280"] = Graph(len(go280), adj280,
                          [("thin_suboctagon", i) for i in range(len(go280))])
    reports["280"] = _srg_with_spectrum(adj280)
    # (b)
    sets56 = [sub.points for sub in go56]
    m56, inter56 = _pairwise_intersections(sets56, geom.n_points)
    off = ~np.eye(len(go56), dtype=bool)
    sizes = set(np.unique(inter56[off]).tolist())
    if not sizes <= {5, 9}:
        raise ClassificationFailure(f"56-family intersection sizes {sizes}")
    adj56 = (inter56 == 9) & off
    graphs["56"] = Graph(len(go56), adj56,
                         [("thin_suboctagon", i) for i in range(len(go56))])
    reports["56"] = _srg_with_spectrum(adj56)
    # (c) 1 + 56 + 105
    ing = np.zeros(geom.n_points, dtype=bool)
    ing[gprime.points] = True
    inner = np.flatnonzero(
        ing[geom.lines[hexagon.spread_line_ids]].all(axis=1)
    )  # positions within the spread list
    if len(inner) != 105:
        raise ClassificationFailure(f"{len(inner)} spread lines inside")
    n = 1 + 56 + 105
    adjacency = np.zeros((n, n), dtype=bool)
    adjacency[0, 1:57] = adjacency[1:57, 0] = True
    adjacency[1:57, 1:57] = adj56
    spread_pts = geom.lines[hexagon.spread_line_ids[inner]]
    meets = m56[spread_pts].any(axis=1)  # (105, 56)
    adjacency[1:57, 57:] = meets.T
    adjacency[57:, 1:57] = meets
    hex_dm = incidence.distances(hexagon.geometry)
    adjacency[57:, 57:] = hex_dm.dist[np.ix_(inner, inner)] == 2
    labels = (
        ["infinity"]
        + [("thin_suboctagon", i) for i in range(56)]
        + [("spread_line", int(hexagon.spread_line_ids[i])) for i in inner]
    )
    graphs["162"] = Graph(n, adjacency, labels)
    reports["162"] = _srg_with_spectrum(adjacency)
    return graphs, reports


# ---------------------------------------------------------------------------
# export


def save_graph(graph: Graph, path):
    with open(path, "w") as fh:
        fh.write(f"vertices {graph.n}\n")
        for i, label in enumerate(graph.vertex_labels):
            fh.write(f"# {i} {label}\n")
        for i in range(graph.n):
            nbrs = np.flatnonzero(graph.adjacency[i])
            fh.write(f"{i}: " + " ".join(map(str, nbrs.tolist())) + "\n")

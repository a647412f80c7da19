"""The 4095-point near octagon built from a conjugacy class of involutions.

Points are the members of the 4095-element involution class; lines are the
triples {x, y, xy} of pairwise-commuting members whose generated four-group
has conjugation-orbit size 1365 or 13650.  The 1365-orbit lines form a line
spread; the quads (15-point convex subspaces) sit over the spread lines, and
the spread lines + quads form a generalized hexagon of order (4,4).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import groupcore, incidence
from .errors import (
    AxiomFailure,
    IntegrityFailure,
    LineCountMismatch,
    NonQuadClosure,
    SpreadViolation,
    UnexpectedOrbitalCount,
)
from .incidence import AxiomReport, DistanceMatrix, Geometry

N_POINTS = 4095
N_LINES = 15015
N_SPREAD = 1365
N_QUADS = 1365

# suborbit size -> (distance from base, label); labels name the eight orbit
# classes of pairs, with the a/b split at equal distance resolved by size
SUBORBIT_TABLE = {
    1: (0, "O0"),
    2: (1, "O1a"),
    20: (1, "O1b"),
    40: (2, "O2a"),
    320: (2, "O2b"),
    640: (3, "O3a"),
    1024: (3, "O3b"),
    2048: (4, "O4"),
}
KLEIN_INDEX = {"O1a": 1365, "O1b": 13650, "O2a": 27300}


@dataclass
class Octagon:
    geometry: Geometry
    cls: groupcore.InvolutionClass
    gens: groupcore.GeneratorSet
    orbitals: groupcore.OrbitalPartition
    actions: np.ndarray
    spread_flags: np.ndarray  # per-line bool
    spread_line_of: np.ndarray  # per-point line id
    orbital_by_size: dict  # suborbit size -> orbital id

    @property
    def spread_line_ids(self):
        return np.flatnonzero(self.spread_flags)


def _orbital_ids_by_suborbit_size(orbitals: groupcore.OrbitalPartition) -> dict:
    if orbitals.n_orbitals != 8:
        raise UnexpectedOrbitalCount(
            f"{orbitals.n_orbitals} orbitals, expected 8"
        )
    out = {}
    for orb, size in enumerate(orbitals.orbital_sizes):
        sub = size // orbitals.base_size
        if sub * orbitals.base_size != size or sub not in SUBORBIT_TABLE:
            raise UnexpectedOrbitalCount(f"unexpected orbital size {size}")
        out[sub] = orb
    if len(out) != 8:
        raise UnexpectedOrbitalCount("orbital sizes are not pairwise distinct")
    return out


def build_octagon(
    cls: groupcore.InvolutionClass,
    gens: groupcore.GeneratorSet,
    orbitals=None,
    actions=None,
) -> Octagon:
    """Construct the geometry: lines are triples {x, y, xy} over commuting
    pairs whose four-group orbit has size 1365 (spread) or 13650."""
    if actions is None:
        actions = groupcore.class_action(cls, gens)
    if orbitals is None:
        orbitals = groupcore.pair_orbitals(cls, gens, actions)
    by_size = _orbital_ids_by_suborbit_size(orbitals)

    # sanity: commuting behaviour and Klein orbit size per orbital class,
    # checked once on a representative pair of each class
    line_orbitals = []
    suborbits0 = orbitals.suborbits(0)
    for sub, (_, label) in SUBORBIT_TABLE.items():
        orb = by_size[sub]
        rep = int(suborbits0[orb][0]) if sub == 1 else int(
            suborbits0[orb][suborbits0[orb] != 0][0]
        )
        if sub == 1:
            continue
        commutes = groupcore.commute(cls, 0, rep)
        if commutes != (label in KLEIN_INDEX):
            raise IntegrityFailure(f"commuting pattern wrong for {label}")
        if commutes:
            k = groupcore.klein_orbit_size(0, rep, cls, gens, actions)
            if k != KLEIN_INDEX[label]:
                raise IntegrityFailure(
                    f"four-group orbit of a {label} pair is {k}"
                )
    line_orbitals = [by_size[2], by_size[20]]

    labels = orbitals.labels
    line_mask = np.isin(labels, line_orbitals)
    lines = set()
    for i in range(cls.size):
        for j in np.flatnonzero(line_mask[i]):
            if j <= i:
                continue
            k = groupcore.product_index(cls, i, int(j))
            lines.add(tuple(sorted((i, int(j), k))))
    if len(lines) != N_LINES:
        raise LineCountMismatch(f"{len(lines)} lines, expected {N_LINES}")
    geom = Geometry(cls.size, sorted(lines))

    spread_flags = (
        labels[geom.lines[:, 0], geom.lines[:, 1]] == by_size[2]
    )
    if int(spread_flags.sum()) != N_SPREAD:
        raise LineCountMismatch(
            f"{int(spread_flags.sum())} spread lines, expected {N_SPREAD}"
        )
    spread_line_of = np.full(cls.size, -1, dtype=np.int32)
    for lid in np.flatnonzero(spread_flags):
        for p in geom.lines[lid]:
            if spread_line_of[p] != -1:
                raise SpreadViolation(f"point {int(p)} on two spread lines")
            spread_line_of[p] = lid
    if (spread_line_of < 0).any():
        raise SpreadViolation("a point lies on no spread line")

    return Octagon(
        geometry=geom,
        cls=cls,
        gens=gens,
        orbitals=orbitals,
        actions=actions,
        spread_flags=spread_flags,
        spread_line_of=spread_line_of,
        orbital_by_size={s: o for s, o in by_size.items()},
    )


# ---------------------------------------------------------------------------
# suborbit diagram


@dataclass
class SuborbitDiagram:
    base: int
    label_of_point: dict  # point -> label string
    suborbit_sizes: dict  # label -> size
    line_counts: dict  # label -> {sorted label pattern: lines per point}

    def points_with_label(self, label):
        return sorted(p for p, l in self.label_of_point.items() if l == label)


def suborbit_diagram(
    oct_: Octagon, dm: DistanceMatrix, base: int = 0
) -> SuborbitDiagram:
    """Label the orbit classes at a base point, cross-check their distances,
    and tabulate the per-point line counts between classes."""
    row = oct_.orbitals.labels[base]
    size_of_orb = {o: s for s, o in oct_.orbital_by_size.items()}
    label_of_point = {}
    point_label_arr = np.empty(oct_.cls.size, dtype=object)
    sizes = {}
    for orb in np.unique(row):
        pts = np.flatnonzero(row == orb)
        sub = size_of_orb[int(orb)]
        dist_expected, label = SUBORBIT_TABLE[sub]
        dvals = np.unique(dm.dist[base, pts])
        if dvals.size != 1 or int(dvals[0]) != dist_expected:
            raise IntegrityFailure(
                f"suborbit {label} not at constant distance {dist_expected}"
            )
        sizes[label] = len(pts)
        for p in pts:
            label_of_point[int(p)] = label
            point_label_arr[p] = label
    # per-point line pattern counts, constant within each suborbit
    patterns_per_point = [dict() for _ in range(oct_.cls.size)]
    for line in oct_.geometry.lines:
        pat = tuple(sorted(point_label_arr[p] for p in line))
        for p in line:
            d = patterns_per_point[p]
            d[pat] = d.get(pat, 0) + 1
    line_counts = {}
    for label in sizes:
        pts = [p for p, l in label_of_point.items() if l == label]
        first = patterns_per_point[pts[0]]
        for p in pts[1:]:
            if patterns_per_point[p] != first:
                raise IntegrityFailure(
                    f"line pattern counts not constant on suborbit {label}"
                )
        if sum(first.values()) != 11:
            raise IntegrityFailure(f"line counts at {label} do not sum to 11")
        line_counts[label] = dict(sorted(first.items()))
    return SuborbitDiagram(
        base=base,
        label_of_point=label_of_point,
        suborbit_sizes=sizes,
        line_counts=line_counts,
    )


def spread_suborbit_partition_check(
    oct_: Octagon, diagram: SuborbitDiagram
) -> AxiomReport:
    """Every spread line meets the orbit classes at the base in one of the
    patterns {O0,O1a}, {O1b,O2a}, {O2b,O3a}, {O3b,O4}."""
    allowed = {
        ("O0", "O1a", "O1a"),
        ("O1b", "O2a", "O2a"),
        ("O2b", "O3a", "O3a"),
        ("O3b", "O4", "O4"),
    }
    for lid in oct_.spread_line_ids:
        pat = tuple(
            sorted(diagram.label_of_point[int(p)] for p in oct_.geometry.lines[lid])
        )
        if pat not in allowed:
            return AxiomReport(False, witness=(int(lid), pat))
    return AxiomReport(True, parameters={"patterns": sorted(allowed)})


# ---------------------------------------------------------------------------
# quads


@dataclass
class QuadSet:
    quads: np.ndarray  # (n_quads, 15) point indices, sorted per quad
    quads_of_point: list  # point -> quad id list
    quads_of_spread_line: dict  # spread line id -> quad id list
    membership: np.ndarray = field(repr=False)  # (n_points, n_quads) bool

    @property
    def n_quads(self):
        return self.quads.shape[0]


def enumerate_quads(oct_: Octagon, dm: DistanceMatrix) -> QuadSet:
    """Convex closures of the distance-2 pairs with two common neighbours.

    Each such pair lies in a unique quad, so each new closure lets us skip
    every pair inside it; only ~1365 closures are computed.
    """
    n = oct_.cls.size
    o2a = oct_.orbital_by_size[40]
    labels = oct_.orbitals.labels
    covered = np.zeros((n, n), dtype=bool)
    quads = []
    n_o2a_pairs = 0
    for i in range(n):
        js = np.flatnonzero((labels[i] == o2a) & ~covered[i])
        for j in js:
            if covered[i, j]:
                continue
            pts = incidence.convex_closure(oct_.geometry, dm, (i, int(j)))
            if len(pts) != 15:
                raise NonQuadClosure(
                    f"closure of ({i},{int(j)}) has {len(pts)} points"
                )
            sub = incidence.induced_subgeometry(oct_.geometry, pts)
            rep = incidence.check_generalized_2dgon(sub, 2)
            if not rep or rep.parameters.get("s") != 2 or rep.parameters.get("t") != 2:
                raise NonQuadClosure(f"closure of ({i},{int(j)}) is not a GQ(2,2)")
            ix = np.ix_(pts, pts)
            # quads may share spread lines, but never a distance-2 pair
            if (covered[ix] & (labels[ix] == o2a)).any():
                raise IntegrityFailure("two quads share a distance-2 pair")
            covered[ix] = True
            quads.append(pts)
    # every distance-2 pair of a quad must be of the 2-common-neighbour kind,
    # and all such pairs must be covered exactly once
    n_o2a_pairs = int((labels == o2a).sum()) // 2
    if len(quads) * 60 != n_o2a_pairs:
        raise IntegrityFailure("quads do not partition the distance-2 pairs")
    quads_arr = np.array(sorted(map(tuple, quads)), dtype=np.int32)

    membership = np.zeros((n, quads_arr.shape[0]), dtype=bool)
    for qid, pts in enumerate(quads_arr):
        membership[pts, qid] = True
    quads_of_point = [list(map(int, np.flatnonzero(membership[p]))) for p in range(n)]
    quads_of_spread_line = {}
    lines = oct_.geometry.lines
    for lid in oct_.spread_line_ids:
        inq = membership[lines[lid]].all(axis=0)
        quads_of_spread_line[int(lid)] = list(map(int, np.flatnonzero(inq)))
    return QuadSet(
        quads=quads_arr,
        quads_of_point=quads_of_point,
        quads_of_spread_line=quads_of_spread_line,
        membership=membership,
    )


def quad_structure_checks(oct_: Octagon, quads: QuadSet) -> AxiomReport:
    """Counting facts: 1365 quads, 5 per point, each quad carries 5 disjoint
    spread lines, every quad through x contains the spread line of x, and two
    points lie in a common quad iff they commute."""
    if quads.n_quads != N_QUADS:
        return AxiomReport(False, notes=f"{quads.n_quads} quads, expected {N_QUADS}")
    per_point = quads.membership.sum(axis=1)
    if per_point.min() != 5 or per_point.max() != 5:
        return AxiomReport(False, notes="a point is not on exactly 5 quads")
    per_spread_line = {k: len(v) for k, v in quads.quads_of_spread_line.items()}
    if set(per_spread_line.values()) != {5}:
        return AxiomReport(False, notes="a spread line is not in exactly 5 quads")
    lines = oct_.geometry.lines
    for qid, pts in enumerate(quads.quads):
        inq = np.zeros(oct_.cls.size, dtype=bool)
        inq[pts] = True
        spread_in_q = [
            lid
            for lid in set(int(oct_.spread_line_of[p]) for p in pts)
            if inq[lines[lid]].all()
        ]
        if len(spread_in_q) != 5:
            return AxiomReport(
                False, witness=int(qid), notes="quad without a 5-line spread"
            )
        covered_pts = sorted(int(p) for lid in spread_in_q for p in lines[lid])
        if covered_pts != sorted(map(int, pts)):
            return AxiomReport(
                False, witness=int(qid), notes="spread lines do not partition quad"
            )
    # common quad <=> commuting pair
    common = quads.membership.astype(np.float32) @ quads.membership.T.astype(np.float32)
    commuting_orbs = [oct_.orbital_by_size[s] for s in (1, 2, 20, 40)]
    commuting = np.isin(oct_.orbitals.labels, commuting_orbs)
    mismatch = (common > 0.5) != commuting
    if mismatch.any():
        x, y = (int(t) for t in np.argwhere(mismatch)[0])
        return AxiomReport(False, witness=(x, y),
                           notes="common-quad/commuting equivalence fails")
    return AxiomReport(
        True,
        parameters={"n_quads": quads.n_quads, "quads_per_point": 5,
                    "quads_per_spread_line": 5},
    )


def quad_environment_checks(
    oct_: Octagon, dm: DistanceMatrix, quads: QuadSet
) -> AxiomReport:
    """For every quad: the point counts at distance 0/1/2 are (15,240,3840),
    every point has a unique nearest quad point through which all distances to
    the quad factor, and every spread line lies inside a single distance shell.
    """
    D = dm.dist
    lines = oct_.geometry.lines
    spread_pts = lines[oct_.spread_line_ids]  # (1365, 3)
    for qid in range(quads.n_quads):
        qpts = quads.quads[qid]
        dxq = D[:, qpts]  # (n, 15)
        gamma = dxq.min(axis=1)
        counts = np.bincount(gamma, minlength=3)
        if list(counts) != [15, 240, 3840]:
            return AxiomReport(False, witness=int(qid),
                               notes=f"shell counts {list(counts)}")
        nearest_mult = (dxq == gamma[:, None]).sum(axis=1)
        if (nearest_mult != 1).any():
            x = int(np.flatnonzero(nearest_mult != 1)[0])
            return AxiomReport(False, witness=(int(qid), x),
                               notes="no unique nearest quad point")
        nearest = dxq.argmin(axis=1)
        subd = D[np.ix_(qpts, qpts)]
        if (dxq != gamma[:, None] + subd[nearest]).any():
            x = int(np.argwhere(dxq != gamma[:, None] + subd[nearest])[0][0])
            return AxiomReport(False, witness=(int(qid), x),
                               notes="distances do not factor through nearest point")
        gl = gamma[spread_pts]
        if (gl.min(axis=1) != gl.max(axis=1)).any():
            lid = int(np.flatnonzero(gl.min(axis=1) != gl.max(axis=1))[0])
            return AxiomReport(False, witness=(int(qid), lid),
                               notes="spread line straddles distance shells")
    return AxiomReport(True, parameters={"shell_counts": (15, 240, 3840)})


def nonspread_line_quad_check(oct_: Octagon, quads: QuadSet) -> AxiomReport:
    """Every non-spread line lies in exactly one quad."""
    lines = oct_.geometry.lines
    counts = quads.membership[lines].all(axis=1).sum(axis=1)
    bad = np.flatnonzero(
        np.where(oct_.spread_flags, counts != 5, counts != 1)
    )
    if bad.size:
        return AxiomReport(False, witness=int(bad[0]))
    return AxiomReport(True, parameters={"quads_per_nonspread_line": 1})


# ---------------------------------------------------------------------------
# the hexagon on the spread


@dataclass
class SpreadHexagon:
    geometry: Geometry  # 1365 points (spread lines), 1365 lines (quads)
    spread_line_ids: np.ndarray  # hexagon point -> octagon line id
    hex_point_of_line: np.ndarray  # octagon line id -> hexagon point (-1 if none)
    quad_ids: np.ndarray  # hexagon line -> quad id


def build_spread_hexagon(oct_: Octagon, quads: QuadSet) -> tuple:
    """Spread lines as points, quads as 5-point lines; returns the hexagon and
    the generalized-hexagon axiom report (order (4,4), girth 12, diameter 6).
    """
    spread_ids = oct_.spread_line_ids.astype(np.int32)
    hex_point = np.full(oct_.geometry.n_lines, -1, dtype=np.int32)
    hex_point[spread_ids] = np.arange(len(spread_ids), dtype=np.int32)
    hex_lines = np.empty((quads.n_quads, 5), dtype=np.int32)
    hex_lines_list = [[] for _ in range(quads.n_quads)]
    for lid, qids in quads.quads_of_spread_line.items():
        for qid in qids:
            hex_lines_list[qid].append(int(hex_point[lid]))
    for qid, hl in enumerate(hex_lines_list):
        if len(hl) != 5:
            raise AxiomFailure(f"quad {qid} contains {len(hl)} spread lines")
        hex_lines[qid] = sorted(hl)
    geom = Geometry(len(spread_ids), hex_lines, labels=spread_ids)
    # Geometry canonicalization reorders lines; recover quad id per line
    order = {tuple(sorted(hl)): qid for qid, hl in enumerate(hex_lines_list)}
    quad_ids = np.array(
        [order[tuple(map(int, line))] for line in geom.lines], dtype=np.int32
    )
    report = incidence.check_generalized_2dgon(geom, 3)
    if report and (report.parameters.get("s"), report.parameters.get("t")) != (4, 4):
        report = AxiomReport(False, parameters=report.parameters,
                             notes="order is not (4,4)")
    hexagon = SpreadHexagon(
        geometry=geom,
        spread_line_ids=spread_ids,
        hex_point_of_line=hex_point,
        quad_ids=quad_ids,
    )
    return hexagon, report


def spread_distance_check(
    oct_: Octagon, dm: DistanceMatrix, hexagon: SpreadHexagon
) -> AxiomReport:
    """Hexagon distances agree with ambient distances between spread lines.

    For all points x, y: with delta the hexagon distance between the spread
    lines of x and y, the distances from x to the three points of y's spread
    line are exactly {delta, delta+1, delta+1} — so d(x,y) is delta for the
    unique nearest point of the line and delta+1 otherwise.
    """
    hex_dm = incidence.distances(hexagon.geometry)
    spread_pts = oct_.geometry.lines[hexagon.spread_line_ids]  # (1365, 3)
    hex_of_point = hexagon.hex_point_of_line[oct_.spread_line_of]  # (n,)
    D = dm.dist
    for x in range(oct_.cls.size):
        dxl = D[x][spread_pts]  # (1365, 3)
        dxl_sorted = np.sort(dxl, axis=1)
        delta = hex_dm.dist[hex_of_point[x]]
        own = hex_of_point[x]
        ok = (
            (dxl_sorted[:, 0] == delta)
            & (dxl_sorted[:, 1] == delta + 1)
            & (dxl_sorted[:, 2] == delta + 1)
        )
        if not ok.all():
            k = int(np.flatnonzero(~ok)[0])
            return AxiomReport(
                False,
                witness=(x, int(hexagon.spread_line_ids[k]),
                         tuple(int(t) for t in dxl[k]), int(delta[k])),
                notes="line distance pattern differs from hexagon distance",
            )
        if int(delta[own]) != 0:
            return AxiomReport(False, witness=x, notes="own spread line not at 0")
    return AxiomReport(True, parameters={"hexagon_diameter": hex_dm.diameter})

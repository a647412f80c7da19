"""Suboctagons of the 4095-point geometry.

Two families of 315-point suboctagons of order (2,4) are built here:

* the 416 suboctagons with regular parameters (2,4;0,3) ("regular kind"),
  reconstructed purely geometrically from any pair of opposite points by
  walking shortest paths back through the orbit classes of the pair;
* the suboctagon obtained from an order-(4,1) subhexagon of the spread
  hexagon, whose points are the points on the 105 selected spread lines.

Also here: a generic backtracking search for "thin" full subgeometries in
which every covered point lies on exactly two selected lines (used for the
order-(4,1) subhexagon and the order-(2,1) suboctagons).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import incidence
from .errors import (
    BudgetExhausted,
    ClosureNotHJ,
    CountMismatch,
    IntegrityFailure,
    NoneFound,
    UnexpectedIntersection,
    ValidationFailure,
)
from .incidence import AxiomReport, DistanceMatrix, Geometry

HJ_POINTS = 315
HJ_LINES = 525
N_HJ = 416
HJ_DIST_DISTRIBUTION = [1, 10, 80, 160, 64]


@dataclass
class Suboctagon:
    points: np.ndarray  # sorted point indices in the ambient geometry
    kind: str  # "regular" | "hexagonal" | "thin"
    induced: Geometry

    def point_set(self):
        return frozenset(map(int, self.points))


def _validate_hj(
    oct_, dm: DistanceMatrix, points: np.ndarray, x: int
) -> Suboctagon:
    pts = np.sort(np.asarray(points, dtype=np.int64))
    if len(pts) != HJ_POINTS:
        raise ClosureNotHJ(f"{len(pts)} points, expected {HJ_POINTS}")
    distrib = list(np.bincount(dm.dist[x, pts], minlength=5))
    if distrib != HJ_DIST_DISTRIBUTION:
        raise ClosureNotHJ(f"distance distribution {distrib}")
    sub = incidence.induced_subgeometry(oct_.geometry, pts)
    if sub.n_lines != HJ_LINES:
        raise ClosureNotHJ(f"{sub.n_lines} induced lines, expected {HJ_LINES}")
    sub_dm = incidence.distances(sub)
    reg = incidence.regular_parameters(sub, sub_dm)
    params = (reg.parameters.get("s"), reg.parameters.get("t"),
              reg.parameters.get("t_i"))
    if not reg or params != (2, 4, (0, 3)):
        raise ClosureNotHJ(f"regular parameters {params}")
    if not incidence.isometric_check(dm, pts, sub):
        raise ClosureNotHJ("not isometrically embedded")
    inset = np.zeros(oct_.geometry.n_points, dtype=bool)
    inset[pts] = True
    if inset[oct_.geometry.lines[oct_.spread_line_ids]].all(axis=1).any():
        raise ClosureNotHJ("contains a spread line")
    return Suboctagon(points=pts.astype(np.int32), kind="regular", induced=sub)


def hj_closure(oct_, dm: DistanceMatrix, x: int, y: int, validate=True, quads=None):
    """The unique regular suboctagon through an opposite pair, reconstructed
    from shortest paths.

    With orbit classes taken at x: (a) the suboctagon's lines through a point
    at distance 4 are the five non-spread lines meeting the 1024-class; BFS
    over the distance-4 points discovers all of them; (b) each reached
    1024-class point u keeps four of the five lines to the 320-class — the
    excluded one is the third line through u of the quad on u's discovery
    line; (c) each 320-class point has a unique line to the 20-class, and each
    20-class point a unique line back to x.
    """
    labels = oct_.orbitals.labels[x]
    by_size = oct_.orbital_by_size
    o4, o3b, o2b, o1b = (by_size[s] for s in (2048, 1024, 320, 20))
    if labels[y] != o4:
        raise ClosureNotHJ(f"points {x},{y} are not opposite")
    geom = oct_.geometry
    lines = geom.lines
    indptr, line_ids = geom.lines_of_point()

    def lines_through(p):
        return line_ids[indptr[p] : indptr[p + 1]]

    hj_lines = set()
    # (a) BFS through the distance-4 points
    up_line_of = {}  # 1024-class point -> the line on which it was discovered
    seen4 = {int(y)}
    frontier = [int(y)]
    while frontier:
        z = frontier.pop()
        for lid in lines_through(z):
            if oct_.spread_flags[lid]:
                continue
            line = lines[lid]
            lab = labels[line]
            if not (lab == o3b).any():
                continue
            hj_lines.add(int(lid))
            for p, l in zip(line, lab):
                p = int(p)
                if l == o3b:
                    up_line_of.setdefault(p, int(lid))
                elif p != z and p not in seen4:
                    seen4.add(p)
                    frontier.append(p)
    if len(seen4) != 64 or len(up_line_of) != 160:
        raise ClosureNotHJ(
            f"distance-4 stage found {len(seen4)} points, "
            f"{len(up_line_of)} descents"
        )
    # (b) per 1024-class point: drop the quad's third line, keep 4 descents
    pts2b = set()
    for u, nlid in up_line_of.items():
        # the third line through u of the quad on u's discovery line is
        # excluded; the quad is looked up if available, else closed afresh
        if quads is not None:
            qid = np.flatnonzero(quads.membership[lines[nlid]].all(axis=0))
            qpts = quads.quads[int(qid[0])]
        else:
            qpts = incidence.convex_closure(geom, dm, lines[nlid])
        candidates = []
        for lid in lines_through(u):
            line = lines[lid]
            lab = labels[line]
            if not (lab == o2b).any():
                continue
            in_quad = np.isin(line, qpts).all()
            if in_quad:
                continue  # the excluded third line of the quad
            candidates.append(int(lid))
        if len(candidates) != 4:
            raise ClosureNotHJ(
                f"{len(candidates)} descent lines at a distance-3 point"
            )
        for lid in candidates:
            hj_lines.add(lid)
            for p in lines[lid]:
                if labels[p] == o2b:
                    pts2b.add(int(p))
    if len(pts2b) != 80:
        raise ClosureNotHJ(f"{len(pts2b)} distance-2 points, expected 80")
    # (c) unique descents to the 20-class, then back to x
    pts1b = set()
    for w in pts2b:
        descents = [
            int(lid)
            for lid in lines_through(w)
            if (labels[lines[lid]] == o1b).any()
        ]
        if len(descents) != 1:
            raise ClosureNotHJ("no unique descent at a distance-2 point")
        hj_lines.add(descents[0])
        for p in lines[descents[0]]:
            if labels[p] == o1b:
                pts1b.add(int(p))
    if len(pts1b) != 10:
        raise ClosureNotHJ(f"{len(pts1b)} distance-1 points, expected 10")
    for v in pts1b:
        back = [int(lid) for lid in lines_through(v) if x in lines[lid]]
        if len(back) != 1:
            raise ClosureNotHJ("no unique line back to the base point")
        hj_lines.add(back[0])
    points = np.unique(lines[sorted(hj_lines)])
    if len(hj_lines) != HJ_LINES:
        raise ClosureNotHJ(f"{len(hj_lines)} lines, expected {HJ_LINES}")
    if validate:
        return _validate_hj(oct_, dm, points, x)
    sub = incidence.induced_subgeometry(geom, points)
    return Suboctagon(points=np.sort(points).astype(np.int32), kind="regular",
                      induced=sub)


def enumerate_hj_suboctagons(oct_, dm: DistanceMatrix, validate=True, quads=None):
    """All 416 regular suboctagons, one per opposite pair, found by closure
    with cover-skipping (each opposite pair lies in exactly one)."""
    n = oct_.geometry.n_points
    o4 = oct_.orbital_by_size[2048]
    labels = oct_.orbitals.labels
    covered = np.zeros((n, n), dtype=bool)
    subs = []
    for x in range(n):
        ys = np.flatnonzero((labels[x] == o4) & ~covered[x])
        for y in ys:
            if covered[x, y]:
                continue
            sub = hj_closure(oct_, dm, x, int(y), validate=validate, quads=quads)
            ix = np.ix_(sub.points, sub.points)
            if (covered[ix] & (labels[ix] == o4)).any():
                raise IntegrityFailure("two suboctagons share an opposite pair")
            covered[ix] = True
            subs.append(sub)
    if len(subs) != N_HJ:
        raise CountMismatch(f"{len(subs)} suboctagons, expected {N_HJ}")
    subs.sort(key=lambda s: tuple(map(int, s.points)))
    # coverage double-count: every opposite pair in exactly one suboctagon
    if len(subs) * HJ_POINTS * 64 != int((labels == o4).sum()):
        raise CountMismatch("opposite pairs not covered exactly once")
    return subs


def hj_membership_matrix(n_points: int, subs) -> np.ndarray:
    m = np.zeros((n_points, len(subs)), dtype=bool)
    for i, sub in enumerate(subs):
        m[sub.points, i] = True
    return m


def projection_onto_suboctagon(sub: Suboctagon, dm: DistanceMatrix, x: int) -> int:
    """x itself if inside, else its unique neighbour in the suboctagon."""
    if (sub.points == x).any():
        return int(x)
    nbrs = sub.points[dm.dist[x, sub.points] == 1]
    if len(nbrs) != 1:
        raise IntegrityFailure(
            f"point {x} has {len(nbrs)} neighbours in the suboctagon"
        )
    return int(nbrs[0])


def projection_census(sub: Suboctagon, dm: DistanceMatrix) -> AxiomReport:
    """Every external point has exactly one neighbour inside; the counting
    identity 315*12 + 315 = 4095 follows."""
    d = dm.dist[:, sub.points]
    inside = np.zeros(dm.n_points, dtype=bool)
    inside[sub.points] = True
    n_nbrs = (d == 1).sum(axis=1)
    bad = np.flatnonzero(~inside & (n_nbrs != 1))
    if bad.size:
        return AxiomReport(False, witness=int(bad[0]),
                           notes="external point without unique neighbour")
    per_point = np.bincount(
        d[~inside].argmin(axis=1), minlength=len(sub.points)
    )
    if (per_point != 12).any():
        return AxiomReport(False, notes="projection fibers are not all size 12")
    return AxiomReport(
        True, parameters={"external": int((~inside).sum()),
                          "fiber_size": 12,
                          "identity": 315 * 12 + 315},
    )


def distance4_trace_distinguishes(
    sub: Suboctagon, dm: DistanceMatrix, x: int, y: int
) -> bool:
    """Whether the distance-4 traces of two points on the suboctagon differ."""
    tx = dm.dist[x, sub.points] == 4
    ty = dm.dist[y, sub.points] == 4
    return bool((tx != ty).any())


def trace_injectivity_check(sub: Suboctagon, dm: DistanceMatrix) -> AxiomReport:
    """All pairs of external points with the same projection have different
    distance-4 traces."""
    inside = np.zeros(dm.n_points, dtype=bool)
    inside[sub.points] = True
    ext = np.flatnonzero(~inside)
    d = dm.dist[np.ix_(ext, sub.points)]
    proj = d.argmin(axis=1)
    traces = np.packbits(d == 4, axis=1)
    for p in range(len(sub.points)):
        fiber = traces[proj == p]
        if len(np.unique(fiber, axis=0)) != fiber.shape[0]:
            return AxiomReport(False, witness=int(sub.points[p]),
                               notes="two external points share a trace")
    return AxiomReport(True)


def internal_distance_orbit_check(oct_, sub: Suboctagon, dm) -> AxiomReport:
    """Internal distance 2 pairs lie in the 320-orbit-class, distance 3 pairs
    in the 1024-class (never the quad-type 40-class or the 640-class)."""
    labels = oct_.orbitals.labels[np.ix_(sub.points, sub.points)]
    dsub = dm.dist[np.ix_(sub.points, sub.points)]
    for dist, size in ((2, 320), (3, 1024)):
        want = oct_.orbital_by_size[size]
        if (labels[dsub == dist] != want).any():
            return AxiomReport(False, notes=f"distance-{dist} pair in wrong class")
    return AxiomReport(True)


def quad_line_checks(oct_, quads, sub: Suboctagon) -> AxiomReport:
    """No quad contains two intersecting suboctagon lines, and every quad
    through a suboctagon point has exactly one suboctagon line through it."""
    inset = np.zeros(oct_.geometry.n_points, dtype=bool)
    inset[sub.points] = True
    sub_line_ids = np.flatnonzero(inset[oct_.geometry.lines].all(axis=1))
    lines = oct_.geometry.lines
    for qid, qpts in enumerate(quads.quads):
        inq = np.zeros(oct_.geometry.n_points, dtype=bool)
        inq[qpts] = True
        inside = [lid for lid in sub_line_ids if inq[lines[lid]].all()]
        if len(inside) > 1:
            return AxiomReport(False, witness=int(qid),
                               notes="quad with two suboctagon lines")
        q_sub_pts = qpts[inset[qpts]]
        for p in q_sub_pts:
            through = sum(1 for lid in inside if p in lines[lid])
            if through != 1:
                return AxiomReport(
                    False, witness=(int(qid), int(p)),
                    notes="quad point without unique suboctagon line",
                )
    return AxiomReport(True)


# ---------------------------------------------------------------------------
# generic search for 2-regular ("thin") full subgeometries


@dataclass
class ThinTarget:
    s: int
    gonality: int  # 2d

    @property
    def expected_points(self):
        d = self.gonality // 2
        return (1 + self.s) * sum(self.s**i for i in range(d))

    @property
    def expected_lines(self):
        return 2 * self.expected_points // (self.s + 1)


def search_thin_subgeometry(
    ambient: Geometry,
    target: ThinTarget,
    budget: int = 10_000_000,
    exhaustive: bool = False,
    ambient_dm: DistanceMatrix = None,
    convex: bool = False,
):
    """Full subgeometries of order (s,1): every member point on exactly two
    selected lines.

    Backtracking over line selections with propagation.  Soundness of the
    propagation rules rests on the targets being isometrically embedded full
    subgeometries: (1) an ambient line joining two member points must itself
    be selected; (2) when two member points have a *unique* ambient geodesic
    (always the case below the diameter in a generalized polygon), all its
    points are members; with ``convex=True`` (for targets known to be convex)
    rule (2) applies to all geodesics of all member pairs; (3) the member set
    can never exceed the target point count.  Candidates are validated as
    generalized 2d-gons of order (s,1) and as isometrically embedded
    subgeometries.  In exhaustive mode each solution is found exactly once,
    rooted at its least selected line (binary branching on a line through the
    most constrained member point).
    """
    if ambient.line_size != target.s + 1:
        raise ValidationFailure("ambient line size does not match target order")
    if ambient_dm is None:
        ambient_dm = incidence.distances(ambient)
    indptr, line_ids = ambient.lines_of_point()

    def lines_of(p):
        return line_ids[indptr[p] : indptr[p + 1]]

    n_lines = ambient.n_lines
    n_points = ambient.n_points
    lines = ambient.lines
    D = ambient_dm.dist
    max_pts = target.expected_points
    results = []
    result_keys = set()
    nodes = 0

    def validate(selected):
        sel = sorted(selected)
        pts = np.unique(lines[sel])
        if len(pts) != target.expected_points or len(sel) != target.expected_lines:
            return None
        sub = incidence.induced_subgeometry(ambient, pts)
        if sub.n_lines != target.expected_lines:
            return None  # not a full subgeometry: an unselected line sneaks in
        rep = incidence.check_generalized_2dgon(sub, target.gonality // 2)
        if not rep or (rep.parameters.get("s"), rep.parameters.get("t")) != (
            target.s,
            1,
        ):
            return None
        if not incidence.isometric_check(ambient_dm, pts, sub):
            return None
        return Suboctagon(points=pts.astype(np.int32), kind="thin", induced=sub)

    def run(seed_line, banned_below):
        status = np.zeros(n_lines, dtype=np.int8)  # 0 open, 1 sel, -1 excl
        status[:banned_below] = -1
        sel_count = np.zeros(n_points, dtype=np.int8)
        member = np.zeros(n_points, dtype=bool)
        mem_count = np.zeros(n_lines, dtype=np.int8)  # member points per line
        members = []  # member points in addition order

        def propagate(ops, trail):
            """Apply selections/exclusions/member additions to fixpoint.

            Returns False on contradiction; all changes are on the trail.
            """
            stack = list(ops)
            while stack:
                op, v = stack.pop()
                if op == "sel":
                    if status[v] == -1:
                        return False
                    if status[v] == 1:
                        continue
                    status[v] = 1
                    trail.append(("line", v))
                    for p in lines[v]:
                        if not member[p]:
                            stack.append(("pt", p))
                        sel_count[p] += 1
                        trail.append(("count", p))
                        if sel_count[p] > 2:
                            return False
                        if sel_count[p] == 2:
                            for other in lines_of(p):
                                if status[other] == 0:
                                    stack.append(("exc", other))
                elif op == "exc":
                    if status[v] == 1 or mem_count[v] >= 2:
                        return False
                    if status[v] == -1:
                        continue
                    status[v] = -1
                    trail.append(("line", v))
                    for p in lines[v]:
                        if member[p] and sel_count[p] < 2 and not any(
                            status[o] == 0 for o in lines_of(p)
                        ):
                            return False
                elif op == "pt":
                    if member[v]:
                        continue
                    if len(members) >= max_pts:
                        return False
                    # geodesic interpolation against existing members
                    dv = D[v]
                    for q in members:
                        dq = dv[q]
                        mids = np.flatnonzero(dv + D[q] == dq)
                        if convex or len(mids) == dq + 1:
                            for r in mids:
                                if not member[r]:
                                    stack.append(("pt", int(r)))
                    member[v] = True
                    members.append(int(v))
                    trail.append(("member", int(v)))
                    for m in lines_of(v):
                        mem_count[m] += 1
                        trail.append(("mcount", m))
                        if mem_count[m] >= 2:
                            # line joining two member points: forced
                            if status[m] == -1:
                                return False
                            if status[m] == 0:
                                stack.append(("sel", m))
                    if sel_count[v] < 2 and not any(
                        status[o] == 0 or status[o] == 1 for o in lines_of(v)
                    ):
                        return False
            return True

        def undo(trail, mark):
            while len(trail) > mark:
                op, v = trail.pop()
                if op == "line":
                    status[v] = 0
                elif op == "member":
                    member[v] = False
                    members.pop()
                elif op == "mcount":
                    mem_count[v] -= 1
                else:
                    sel_count[v] -= 1

        def branch_line():
            """An open line through the most constrained unsaturated member."""
            best_line, best_n = -1, 1 << 30
            for p in members:
                if sel_count[p] >= 2:
                    continue
                opts = [l for l in lines_of(p) if status[l] == 0]
                need = 2 - int(sel_count[p])
                if len(opts) < need:
                    return -2  # dead end
                if len(opts) < best_n:
                    best_n = len(opts)
                    best_line = int(opts[0])
                    if best_n == need:
                        break
            return best_line

        def dfs(trail):
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(f"search budget {budget} exhausted")
            l = branch_line()
            if l == -2:
                return False
            if l == -1:  # every member point saturated: candidate
                sol = validate(np.flatnonzero(status == 1))
                if sol is not None:
                    key = sol.points.tobytes()
                    if key not in result_keys:
                        result_keys.add(key)
                        results.append(sol)
                return not exhaustive and bool(results)
            for op in ("sel", "exc"):
                mark = len(trail)
                if propagate([(op, l)], trail) and dfs(trail):
                    return True
                undo(trail, mark)
            return False

        trail = []
        if propagate([("sel", seed_line)], trail):
            dfs(trail)

    if exhaustive:
        for seed in range(n_lines):
            run(seed, seed)
    else:
        run(0, 0)
    if not results:
        raise NoneFound("no subgeometry of the requested order found")
    results.sort(key=lambda s: tuple(map(int, s.points)))
    return results


# ---------------------------------------------------------------------------
# the suboctagon over an order-(4,1) subhexagon


def build_gprime(oct_, dm, quads, hexagon, ghsub: Suboctagon) -> Suboctagon:
    """Points on the 105 selected spread lines; validated as a 315-point,
    525-line near octagon of order (2,4), isometrically embedded."""
    hexgeom = hexagon.geometry
    if len(ghsub.points) != 105:
        raise ValidationFailure("subhexagon selection must have 105 points")
    spread_lids = hexagon.spread_line_ids[ghsub.points]
    pts = np.unique(oct_.geometry.lines[spread_lids])
    if len(pts) != 315:
        raise ValidationFailure(f"{len(pts)} points, expected 315")
    sub = incidence.induced_subgeometry(oct_.geometry, pts)
    if sub.n_lines != 525:
        raise ValidationFailure(f"{sub.n_lines} lines, expected 525")
    sub_dm = incidence.distances(sub)
    rep = incidence.check_near_polygon(sub, sub_dm)
    if not rep or (rep.parameters.get("s"), rep.parameters.get("t")) != (2, 4):
        raise ValidationFailure(f"not a near octagon of order (2,4): {rep}")
    if sub_dm.diameter != 4:
        raise ValidationFailure(f"diameter {sub_dm.diameter}, expected 4")
    if not incidence.isometric_check(dm, pts, sub):
        raise ValidationFailure("not isometrically embedded")
    return Suboctagon(points=pts.astype(np.int32), kind="hexagonal", induced=sub)


def gprime_go21_suboctagons(oct_, gprime: Suboctagon, hjs) -> list:
    """Intersections of the 416 regular suboctagons with the hexagonal one:
    each is a 21-point generalized hexagon of order (2,1) or a 45-point
    generalized octagon of order (2,1); returns the distinct 45-point ones."""
    ing = np.zeros(oct_.geometry.n_points, dtype=bool)
    ing[gprime.points] = True
    found = {}
    for hj in hjs:
        inter = hj.points[ing[hj.points]]
        if len(inter) == 21:
            sub = incidence.induced_subgeometry(oct_.geometry, inter)
            rep = incidence.check_generalized_2dgon(sub, 3)
            if not rep or (rep.parameters.get("s"), rep.parameters.get("t")) != (2, 1):
                raise UnexpectedIntersection("21-point intersection is not a GH(2,1)")
        elif len(inter) == 45:
            key = inter.tobytes()
            if key not in found:
                sub = incidence.induced_subgeometry(oct_.geometry, inter)
                rep = incidence.check_generalized_2dgon(sub, 4)
                if not rep or (rep.parameters.get("s"), rep.parameters.get("t")) != (
                    2,
                    1,
                ):
                    raise UnexpectedIntersection(
                        "45-point intersection is not a GO(2,1)"
                    )
                found[key] = Suboctagon(
                    points=inter.astype(np.int32), kind="thin", induced=sub
                )
        else:
            raise UnexpectedIntersection(
                f"intersection of size {len(inter)}"
            )
    out = sorted(found.values(), key=lambda s: tuple(map(int, s.points)))
    if len(out) != 56:
        raise CountMismatch(f"{len(out)} distinct 45-point intersections")
    return out


def dual_embedding_check(oct_, quads, sub: Suboctagon) -> AxiomReport:
    """The spread-line map on points and the quad map on lines embed the dual
    of the suboctagon in the dual of the spread hexagon: both maps injective,
    each quad meets the suboctagon in exactly the mapped line, and the quads
    of the five lines through a point are the five quads through its spread
    line."""
    spread_of = oct_.spread_line_of[sub.points]
    if len(np.unique(spread_of)) != len(sub.points):
        return AxiomReport(False, notes="two points share a spread line")
    inset = np.zeros(oct_.geometry.n_points, dtype=bool)
    inset[sub.points] = True
    lines = oct_.geometry.lines
    sub_line_ids = np.flatnonzero(inset[lines].all(axis=1))
    if oct_.spread_flags[sub_line_ids].any():
        return AxiomReport(False, notes="suboctagon contains a spread line")
    quad_of_line = {}
    for lid in sub_line_ids:
        qids = np.flatnonzero(quads.membership[lines[lid]].all(axis=0))
        if len(qids) != 1:
            return AxiomReport(False, witness=int(lid),
                               notes="line not in a unique quad")
        qid = int(qids[0])
        qpts = quads.quads[qid]
        if sorted(map(int, qpts[inset[qpts]])) != sorted(map(int, lines[lid])):
            return AxiomReport(False, witness=int(lid),
                               notes="quad meets suboctagon beyond the line")
        quad_of_line[int(lid)] = qid
    if len(set(quad_of_line.values())) != len(quad_of_line):
        return AxiomReport(False, notes="two lines map to one quad")
    for p in sub.points:
        lids = [lid for lid in sub_line_ids if p in lines[lid]]
        qs = sorted(quad_of_line[int(lid)] for lid in lids)
        expected = sorted(quads.quads_of_spread_line[int(oct_.spread_line_of[p])])
        if qs != expected:
            return AxiomReport(False, witness=int(p),
                               notes="line quads differ from spread-line quads")
    return AxiomReport(True, parameters={"points": len(sub.points),
                                         "lines": len(sub_line_ids)})

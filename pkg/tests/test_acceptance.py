"""End-to-end acceptance checks, one test per criterion.

Each test appends a pass/FAIL line that is echoed in the terminal summary
(see conftest), so a plain ``pytest -v`` run shows every verdict.
"""

import numpy as np
import pytest

import helpers
from conftest import ACCEPTANCE_LINES
from nearoct import incidence, kernels, octagon as octmod, subgeometries
from nearoct import tower, valuations as val
from nearoct.subgeometries import ThinTarget


def _record(number, ok, text):
    verdict = "pass" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {number:2d}: {verdict} - {text}")
    assert ok, f"criterion {number}: {text}"


def test_criterion_01_octagon_construction(wb):
    geom = wb.octagon.geometry
    rep = incidence.check_near_polygon(geom, wb.dm)
    ok = (
        geom.n_points == 4095
        and geom.n_lines == 15015
        and bool(rep)
        and rep.parameters == {"diameter": 4, "s": 2, "t": 10}
    )
    _record(1, ok, "4095 points, 15015 lines, near octagon of order (2,10)")


def test_criterion_02_spread_and_suborbits(wb):
    oct_ = wb.octagon
    spread = oct_.geometry.lines[oct_.spread_flags]
    sizes = wb.diagram.suborbit_sizes
    ok = (
        spread.shape[0] == 1365
        and np.array_equal(np.sort(spread.ravel()), np.arange(4095))
        and sorted(sizes.values()) == [1, 2, 20, 40, 320, 640, 1024, 2048]
        and sizes["O1a"] + sizes["O1b"] + sizes["O2a"] == 62
        and bool(octmod.spread_suborbit_partition_check(oct_, wb.diagram))
    )
    _record(2, ok, "1365-line spread partition, suborbit sizes, 62 "
                   "commuting partners per point")


def test_criterion_03_quads(wb):
    quads = wb.quads
    sample = incidence.induced_subgeometry(wb.octagon.geometry,
                                           quads.quads[0])
    gq = incidence.check_generalized_2dgon(sample, 2)
    ok = (
        quads.n_quads == 1365
        and bool(gq)
        and (gq.parameters["s"], gq.parameters["t"]) == (2, 2)
        and {len(q) for q in quads.quads_of_point} == {5}
        and bool(octmod.quad_structure_checks(wb.octagon, quads))
        and bool(octmod.quad_environment_checks(wb.octagon, wb.dm, quads))
        and bool(octmod.nonspread_line_quad_check(wb.octagon, quads))
    )
    _record(3, ok, "1365 quads of order (2,2), 5 per point, environment "
                   "counts, all point-quad pairs classical")


def test_criterion_04_spread_hexagon(wb):
    rep = incidence.check_generalized_2dgon(wb.hexagon.geometry, 3)
    ok = (
        wb.hexagon.geometry.n_points == 1365
        and wb.hexagon.geometry.n_lines == 1365
        and bool(rep)
        and (rep.parameters["s"], rep.parameters["t"]) == (4, 4)
        and rep.parameters["incidence_girth"] == 12
        and rep.parameters["incidence_diameter"] == 6
        and bool(octmod.spread_distance_check(wb.octagon, wb.dm, wb.hexagon))
    )
    _record(4, ok, "generalized hexagon of order (4,4) on the spread, "
                   "distance laws against the octagon")


def test_criterion_05_suboctagons(wb):
    hjs = wb.hjs
    sample = hjs[0]
    sub_dm = incidence.distances(sample.induced)
    reg = incidence.regular_parameters(sample.induced, sub_dm)
    ok = (
        len(hjs) == 416
        and all(len(s.points) == 315 and s.induced.n_lines == 525
                for s in hjs[:20])
        and bool(reg)
        and reg.parameters == {"s": 2, "t": 4, "t_i": (0, 3), "diameter": 4}
        and bool(incidence.isometric_check(wb.dm, sample.points,
                                           sample.induced))
        and bool(subgeometries.projection_census(sample, wb.dm))
        and bool(subgeometries.trace_injectivity_check(sample, wb.dm))
    )
    _record(5, ok, "416 regular suboctagons (2,4;0,3), isometric, unique "
                   "external projections covering 315*12+315 = 4095")


def test_criterion_06_second_octagon(wb):
    gprime = wb.gprime
    rep = incidence.check_near_polygon(
        gprime.induced, incidence.distances(gprime.induced)
    )
    ok = (
        len(wb.gh41.points) == 105
        and len(gprime.points) == 315
        and gprime.induced.n_lines == 525
        and bool(rep)
        and rep.parameters == {"diameter": 4, "s": 2, "t": 4}
    )
    _record(6, ok, "thin subhexagon found within budget; derived 315-point "
                   "near octagon of order (2,4)")


def test_criterion_07_tower_graphs(wb):
    geom = wb.octagon.geometry
    g24, rep416 = wb.g24_graph
    _, rep1782 = wb.suzuki
    fam3 = [s.points for s in wb.hjs]
    g2, rep100, fam2 = tower.descend_graph(2, geom, fam3, g24.adjacency)
    g1, rep36, fam1 = tower.descend_graph(1, geom, fam2, g2.adjacency)
    g0, rep14, _ = tower.descend_graph(0, geom, fam1, g1.adjacency)

    def params(rep):
        p = rep.parameters
        return (p.get("v"), p.get("k"), p.get("lambda"), p.get("mu"))

    indptr, indices = helpers.adjacency_csr(g0.adjacency)
    # The 14-vertex graph is the quartic bipartite distance-regular graph
    # with intersection array {4,3,2;1,2,4}.  Its girth is 4, not 6: the
    # two vertex classes form a 2-design with two blocks through every
    # point pair, which forces 4-cycles (see the decisions ledger).
    ok = (
        params(rep416) == (416, 100, 36, 20)
        and params(rep1782) == (1782, 416, 100, 96)
        and params(rep100) == (100, 36, 14, 12)
        and params(rep36) == (36, 14, 4, 6)
        and bool(rep14)
        and rep14.parameters["degree"] == 4
        and rep14.parameters["bipartite"] is True
        and rep14.parameters["intersection_array"] == ((4, 3, 2), (1, 2, 4))
        and kernels.graph_girth(indptr, indices, 14) == 4
    )
    _record(7, ok, "srg(416,100,36,20), srg(1782,416,100,96), "
                   "srg(100,36,14,12), srg(36,14,4,6), and the 14-vertex "
                   "quartic bipartite graph {4,3,2;1,2,4} (girth 4)")


def test_criterion_08_bonus_graphs(wb):
    _, reports = tower.bonus_srgs(
        wb.octagon.geometry, wb.go280, wb.go56, wb.gprime, wb.octagon,
        wb.hexagon,
    )

    def params(rep):
        p = rep.parameters
        return (p.get("v"), p.get("k"), p.get("lambda"), p.get("mu"))

    ok = (
        params(reports["280"]) == (280, 36, 8, 4)
        and params(reports["56"]) == (56, 10, 0, 2)
        and params(reports["162"]) == (162, 56, 10, 24)
    )
    _record(8, ok, "srg(280,36,8,4) on {5,15} intersections, srg(56,10,0,2) "
                   "on {5,9}, srg(162,56,10,24)")


def test_criterion_09_valuations(wb):
    geom = wb.hjs[0].induced
    vals = wb.valuations
    vg = wb.valuation_geometry
    ok = (
        len(vals) == 7119
        and bool(val.valuation_census(geom, vals))
        and bool(val.line_table_census(vg))
        and bool(val.induced_isomorphism_check(
            wb.octagon.geometry, wb.dm, wb.hjs[0].points, vg))
        and bool(val.star_product_line_check(
            wb.octagon.geometry, wb.dm, wb.hjs[0].points))
    )
    _record(9, ok, "7119 valuations, value and line censuses, isomorphism "
                   "with the ambient octagon incl. the 15015-line identity")


def test_criterion_10_property_suites(wb):
    # product laws on sampled neighboring pairs
    V = np.ascontiguousarray(wb.valuations, dtype=np.int8)
    pairs = kernels.neighboring_pairs(V)
    rng = np.random.default_rng(1)
    laws_ok = True
    for i, j in pairs[rng.choice(len(pairs), 10_000, replace=False)]:
        f3 = val.star_product(V[i], V[j])
        laws_ok = laws_ok and (
            np.array_equal(f3, val.star_product(V[j], V[i]))
            and np.array_equal(val.star_product(V[i], f3), V[j])
            and np.array_equal(val.star_product(V[j], f3), V[i])
        )
        if not laws_ok:
            break
    # convex-closure idempotence on a small geometry
    grid = helpers.grid_geometry()
    gdm = incidence.distances(grid)
    closure_ok = all(
        np.array_equal(
            incidence.convex_closure(grid, gdm, seed),
            incidence.convex_closure(
                grid, gdm, incidence.convex_closure(grid, gdm, seed)
            ),
        )
        for seed in ([0], [0, 4], [0, 8])
    )
    # fast checker vs brute-force oracle on graphs up to 50 vertices
    srg_ok = True
    for A in (helpers.petersen_graph(), helpers.rook_graph(7),
              helpers.triangular_graph(10), helpers.paley_graph(13),
              helpers.cycle_graph(6), helpers.path_graph(5)):
        rep = incidence.check_srg(A)
        oracle = helpers.brute_srg_params(A)
        if oracle is None:
            srg_ok = srg_ok and not rep
        else:
            v, k, lam, mu = oracle
            srg_ok = srg_ok and bool(rep) and rep.parameters == {
                "v": v, "k": k, "lambda": lam, "mu": mu,
            }
    ok = laws_ok and closure_ok and srg_ok
    _record(10, ok, "product laws on 10^4 sampled neighboring pairs, "
                    "closure idempotence, srg checker vs brute-force oracle")

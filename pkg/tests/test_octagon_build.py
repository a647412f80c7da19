"""The 4095-point near octagon: construction, spread, suborbits, quads,
and the derived generalized hexagon."""

import numpy as np
import pytest

from nearoct import incidence, octagon as octmod
from nearoct.subgeometries import ThinTarget, search_thin_subgeometry

#: per-point line counts between orbit classes at a base point, derived
#: once by exact computation and frozen (each class lists, for every line
#: pattern through one of its points, how many such lines the point sees)
LINE_COUNT_TABLE = {
    "O0": {("O0", "O1a", "O1a"): 1, ("O0", "O1b", "O1b"): 10},
    "O1a": {("O0", "O1a", "O1a"): 1, ("O1a", "O2a", "O2a"): 10},
    "O1b": {("O0", "O1b", "O1b"): 1, ("O1b", "O2a", "O2a"): 2,
            ("O1b", "O2b", "O2b"): 8},
    "O2a": {("O1a", "O2a", "O2a"): 1, ("O1b", "O2a", "O2a"): 2,
            ("O2a", "O3a", "O3a"): 8},
    "O2b": {("O1b", "O2b", "O2b"): 1, ("O2b", "O3a", "O3a"): 2,
            ("O2b", "O3b", "O3b"): 8},
    "O3a": {("O2a", "O3a", "O3a"): 1, ("O2b", "O3a", "O3a"): 2,
            ("O3a", "O4", "O4"): 8},
    "O3b": {("O2b", "O3b", "O3b"): 5, ("O3b", "O4", "O4"): 6},
    "O4": {("O3a", "O4", "O4"): 5, ("O3b", "O4", "O4"): 6},
}


class TestOctagon:
    def test_counts(self, wb):
        geom = wb.octagon.geometry
        assert geom.n_points == octmod.N_POINTS == 4095
        assert geom.n_lines == octmod.N_LINES == 15015

    def test_near_octagon_axioms(self, wb):
        rep = incidence.check_near_polygon(wb.octagon.geometry, wb.dm)
        assert rep
        assert rep.parameters == {"diameter": 4, "s": 2, "t": 10}

    def test_lines_close_under_group_products(self, wb):
        """Each line is an involution pair with its product."""
        import nearoct.groupcore as gc

        cls = wb.cls
        for line in wb.octagon.geometry.lines[:50]:
            a, b, c = (int(t) for t in line)
            assert gc.commute(cls, a, b)
            assert gc.product_index(cls, a, b) == c


class TestSpreadAndSuborbits:
    def test_spread_partitions_the_points(self, wb):
        oct_ = wb.octagon
        spread = oct_.geometry.lines[oct_.spread_flags]
        assert spread.shape[0] == octmod.N_SPREAD == 1365
        covered = np.sort(spread.ravel())
        assert np.array_equal(covered, np.arange(4095))

    def test_suborbit_sizes(self, wb):
        sizes = wb.diagram.suborbit_sizes
        assert sorted(sizes.values()) == [1, 2, 20, 40, 320, 640, 1024, 2048]
        assert sizes == {label: size
                         for size, (_, label) in octmod.SUBORBIT_TABLE.items()}

    def test_suborbits_refine_distance(self, wb):
        diagram, dm = wb.diagram, wb.dm
        for size, (dist, label) in octmod.SUBORBIT_TABLE.items():
            pts = diagram.points_with_label(label)
            assert len(pts) == size
            assert all(dm.d(diagram.base, p) == dist for p in pts[:10])

    def test_commuting_partner_count(self, wb):
        sizes = wb.diagram.suborbit_sizes
        assert sizes["O1a"] + sizes["O1b"] + sizes["O2a"] == 62

    def test_spread_respects_suborbits(self, wb):
        assert octmod.spread_suborbit_partition_check(wb.octagon, wb.diagram)

    def test_line_count_table(self, wb):
        assert wb.diagram.line_counts == LINE_COUNT_TABLE


class TestQuads:
    def test_count_and_shape(self, wb):
        quads = wb.quads
        assert quads.n_quads == octmod.N_QUADS == 1365
        assert quads.quads.shape == (1365, 15)

    def test_structure(self, wb):
        assert octmod.quad_structure_checks(wb.octagon, wb.quads)

    def test_five_quads_per_point(self, wb):
        lengths = {len(q) for q in wb.quads.quads_of_point}
        assert lengths == {5}

    def test_environment(self, wb):
        assert octmod.quad_environment_checks(wb.octagon, wb.dm, wb.quads)

    def test_every_nonspread_line_in_a_unique_quad(self, wb):
        assert octmod.nonspread_line_quad_check(wb.octagon, wb.quads)

    def test_quad_is_the_unique_gq22(self, wb):
        """Each quad induces a generalized quadrangle of order (2,2); its
        point graph is srg(15,6,1,3) and it contains exactly 10 grids."""
        quad = incidence.induced_subgeometry(
            wb.octagon.geometry, wb.quads.quads[0]
        )
        rep = incidence.check_generalized_2dgon(quad, 2)
        assert rep
        assert (rep.parameters["s"], rep.parameters["t"]) == (2, 2)
        srg = incidence.check_srg(quad.adjacency_matrix())
        assert srg and srg.parameters == {"v": 15, "k": 6, "lambda": 1,
                                          "mu": 3}
        grids = search_thin_subgeometry(quad, ThinTarget(2, 4),
                                        exhaustive=True)
        assert len(grids) == 10


class TestSpreadHexagon:
    def test_counts(self, wb):
        geom = wb.hexagon.geometry
        assert geom.n_points == 1365 and geom.n_lines == 1365

    def test_generalized_hexagon_of_order_4_4(self, wb):
        rep = incidence.check_generalized_2dgon(wb.hexagon.geometry, 3)
        assert rep
        assert (rep.parameters["s"], rep.parameters["t"]) == (4, 4)
        assert rep.parameters["incidence_girth"] == 12
        assert rep.parameters["incidence_diameter"] == 6

    def test_point_graph_intersection_array(self, wb):
        rep = incidence.check_distance_regular(
            wb.hexagon.geometry.adjacency_matrix()
        )
        assert rep
        assert rep.parameters["intersection_array"] == ((20, 16, 16),
                                                        (1, 1, 5))

    def test_distance_law_against_the_octagon(self, wb):
        assert octmod.spread_distance_check(wb.octagon, wb.dm, wb.hexagon)

    def test_line_id_maps_are_consistent(self, wb):
        hexagon = wb.hexagon
        for hp, lid in enumerate(hexagon.spread_line_ids[:100]):
            assert hexagon.hex_point_of_line[lid] == hp

"""Property suites: product laws on sampled neighboring pairs, closure
idempotence, and kernel-path equivalences."""

import numpy as np
import pytest

import helpers
from nearoct import incidence, kernels, valuations as val


@pytest.fixture(scope="module")
def neighboring_sample(wb):
    """10^4 neighboring pairs of distinct valuations, deterministic sample."""
    V = np.ascontiguousarray(wb.valuations, dtype=np.int8)
    pairs = kernels.neighboring_pairs(V)
    rng = np.random.default_rng(20260823)
    picks = rng.choice(len(pairs), size=10_000, replace=False)
    return V, pairs[picks]


def test_sampled_pairs_are_distinct_and_neighboring(neighboring_sample):
    V, pairs = neighboring_sample
    assert len(pairs) == 10_000
    for i, j in pairs[:500]:
        assert i != j
        assert val.neighboring_epsilon(V[i], V[j]) is not None


def test_product_law_commutativity(wb, neighboring_sample):
    """(i) the product does not depend on the order of the factors."""
    V, pairs = neighboring_sample
    geom = wb.hjs[0].induced
    for i, j in pairs:
        f3 = val.star_product(V[i], V[j])
        assert np.array_equal(f3, val.star_product(V[j], V[i]))
        assert val.is_valuation(geom, f3)


def test_product_law_first_factor_recovers_second(neighboring_sample):
    """(ii) f1 and f1*f2 are neighboring and multiply back to f2."""
    V, pairs = neighboring_sample
    for i, j in pairs:
        f3 = val.star_product(V[i], V[j])
        assert val.neighboring_epsilon(V[i], f3) is not None
        assert np.array_equal(val.star_product(V[i], f3), V[j])


def test_product_law_second_factor_recovers_first(neighboring_sample):
    """(iii) f2 and f1*f2 are neighboring and multiply back to f1."""
    V, pairs = neighboring_sample
    for i, j in pairs:
        f3 = val.star_product(V[i], V[j])
        assert val.neighboring_epsilon(V[j], f3) is not None
        assert np.array_equal(val.star_product(V[j], f3), V[i])


class TestConvexClosureIdempotence:
    def test_on_the_grid(self):
        grid = helpers.grid_geometry()
        dm = incidence.distances(grid)
        for seed in ([0], [0, 1], [0, 4], [0, 8], [1, 3, 5]):
            c = incidence.convex_closure(grid, dm, seed)
            again = incidence.convex_closure(grid, dm, c)
            assert np.array_equal(c, again)
            assert np.isin(seed, c).all()

    def test_on_octagon_pairs(self, wb):
        """Closures of pairs at distance <= 2: a point, a line, or one of
        the two kinds of distance-2 closure (quad or 5-point cross)."""
        geom, dm = wb.octagon.geometry, wb.dm
        rng = np.random.default_rng(7)
        done = 0
        for y in rng.permutation(4095):
            if dm.d(0, int(y)) > 2:
                continue
            c = incidence.convex_closure(geom, dm, [0, int(y)])
            assert len(c) in (1, 3, 5, 15)
            assert np.array_equal(c, incidence.convex_closure(geom, dm, c))
            done += 1
            if done == 12:
                break

    def test_quad_closures_are_the_enumerated_quads(self, wb):
        """Pairs in the 40-point orbit class close to enumerated quads."""
        geom, dm = wb.octagon.geometry, wb.dm
        quad_keys = {q.tobytes() for q in wb.quads.quads}
        for y in wb.diagram.points_with_label("O2a")[:5]:
            c = incidence.convex_closure(geom, dm, [0, y]).astype(np.int32)
            assert len(c) == 15
            assert c.tobytes() in quad_keys


class TestKernelPathEquivalence:
    """The pure-python/numpy fallbacks must agree with the compiled path."""

    def test_distances(self):
        A = helpers.petersen_graph()
        indptr, indices = helpers.adjacency_csr(A)
        fast = kernels.all_pairs_distances(indptr, indices, 10)
        slow = kernels._bfs_all_numpy(indptr, indices, 10)
        assert np.array_equal(fast, slow)

    def test_girth(self):
        for A in (helpers.cycle_graph(9), helpers.petersen_graph(),
                  helpers.complete_bipartite(3, 4)):
            indptr, indices = helpers.adjacency_csr(A)
            n = A.shape[0]
            assert (kernels._girth_numpy(indptr, indices, n)
                    == kernels.graph_girth(indptr, indices, n))

    def test_neighboring_pairs(self, wb):
        V = np.ascontiguousarray(wb.valuations[:400], dtype=np.int8)
        out_fast = kernels.neighboring_pairs(V)
        out_slow = np.empty_like(out_fast)
        n = kernels._neighboring_numpy(V, out_slow)
        assert n == len(out_fast)
        assert np.array_equal(np.sort(out_fast, axis=0),
                              np.sort(out_slow[:n], axis=0))

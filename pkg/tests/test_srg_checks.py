"""Strong-regularity checking against a brute-force oracle and known graphs."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import helpers
from nearoct.incidence import check_srg
from nearoct.tower import srg_spectral_check

KNOWN = [
    (helpers.cycle_graph(5), (5, 2, 0, 1)),
    (helpers.petersen_graph(), (10, 3, 0, 1)),
    (helpers.rook_graph(3), (9, 4, 1, 2)),
    (helpers.rook_graph(5), (25, 8, 3, 2)),
    (helpers.triangular_graph(7), (21, 10, 5, 4)),
    (helpers.paley_graph(13), (13, 6, 2, 3)),
    (helpers.paley_graph(17), (17, 8, 3, 4)),
    (helpers.complete_bipartite(5, 5), (10, 5, 0, 5)),
]

NOT_SRG = [
    helpers.cycle_graph(6),     # regular but mu not constant
    helpers.cycle_graph(7),
    helpers.path_graph(4),      # not regular
]


@pytest.mark.parametrize("A,params", KNOWN, ids=[str(p) for _, p in KNOWN])
def test_known_strongly_regular_graphs(A, params):
    rep = check_srg(A)
    assert rep
    v, k, lam, mu = params
    assert rep.parameters == {"v": v, "k": k, "lambda": lam, "mu": mu}
    assert helpers.brute_srg_params(A) == params


@pytest.mark.parametrize("A", NOT_SRG, ids=["C6", "C7", "P4"])
def test_known_non_srg(A):
    assert not check_srg(A)
    assert helpers.brute_srg_params(A) is None


def test_checker_matches_oracle_on_named_graphs():
    """Every graph above (up to 50 vertices) gets the identical verdict
    from the fast checker and the brute-force oracle."""
    graphs = [A for A, _ in KNOWN] + NOT_SRG + [
        np.zeros((1, 1), dtype=bool),
        helpers.complete_bipartite(1, 1),
        helpers.triangular_graph(10),  # 45 vertices
        helpers.rook_graph(7),         # 49 vertices
    ]
    for A in graphs:
        rep = check_srg(A)
        oracle = helpers.brute_srg_params(A)
        if oracle is None:
            assert not rep
        else:
            v, k, lam, mu = oracle
            assert rep
            assert rep.parameters == {"v": v, "k": k, "lambda": lam, "mu": mu}


@st.composite
def random_adjacency(draw):
    n = draw(st.integers(min_value=1, max_value=10))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2,
                         max_size=n * (n - 1) // 2))
    A = np.zeros((n, n), dtype=bool)
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            A[i, j] = A[j, i] = bits[idx]
            idx += 1
    return A


@settings(max_examples=300, deadline=None)
@given(random_adjacency())
def test_checker_matches_oracle_on_random_graphs(A):
    rep = check_srg(A)
    oracle = helpers.brute_srg_params(A)
    if oracle is None:
        assert not rep
    else:
        v, k, lam, mu = oracle
        assert rep
        assert rep.parameters == {"v": v, "k": k, "lambda": lam, "mu": mu}


def test_spectral_feasibility_accepts_known_parameters():
    for params in [(10, 3, 0, 1), (416, 100, 36, 20), (1782, 416, 100, 96),
                   (100, 36, 14, 12), (36, 14, 4, 6), (280, 36, 8, 4),
                   (56, 10, 0, 2), (162, 56, 10, 24)]:
        v, k, lam, mu = params
        assert srg_spectral_check(
            {"v": v, "k": k, "lambda": lam, "mu": mu}
        )


def test_spectral_feasibility_accepts_conference_parameters():
    assert srg_spectral_check({"v": 13, "k": 6, "lambda": 2, "mu": 3})


def test_spectral_feasibility_rejects_bad_counting_identity():
    assert not srg_spectral_check({"v": 16, "k": 6, "lambda": 2, "mu": 3})

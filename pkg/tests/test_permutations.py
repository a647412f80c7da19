"""Permutation arithmetic, cycle parsing, and the bundled generator set."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nearoct import groupcore as gc
from nearoct.errors import DegreeMismatch, Malformed, OutOfRange, RepeatedPoint
from nearoct.workbench import default_generator_path


def test_parse_cycles():
    p = gc.parse_permutation("(1,2,3)(4,5)", 6)
    assert p.images.tolist() == [1, 2, 0, 4, 3, 5]


def test_parse_whitespace_and_empty_cycles():
    p = gc.parse_permutation(" (1, 2) () ", 3)
    assert p.images.tolist() == [1, 0, 2]
    assert gc.parse_permutation("", 4).is_identity()


def test_parse_rejects_repeated_point():
    with pytest.raises(RepeatedPoint):
        gc.parse_permutation("(1,2)(2,3)", 4)


def test_parse_rejects_out_of_range():
    with pytest.raises(OutOfRange):
        gc.parse_permutation("(1,5)", 4)


def test_parse_rejects_stray_text():
    with pytest.raises(Malformed):
        gc.parse_permutation("(1,2)x", 4)


def test_compose_is_left_to_right():
    a = gc.parse_permutation("(1,2)", 3)
    b = gc.parse_permutation("(2,3)", 3)
    assert gc.compose(a, b).images.tolist() == [2, 0, 1]


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        gc.compose(gc.Permutation.identity(3), gc.Permutation.identity(4))


def test_conjugate_relabels_cycles():
    x = gc.parse_permutation("(1,2)", 3)
    g = gc.parse_permutation("(1,3)", 3)
    assert gc.conjugate(x, g).images.tolist() == [0, 2, 1]  # (3,2)


def test_element_order():
    assert gc.element_order(gc.parse_permutation("(1,2,3)(4,5)", 6)) == 6
    assert gc.element_order(gc.Permutation.identity(5)) == 1


@st.composite
def permutations(draw, degree=8):
    images = draw(st.permutations(range(degree)))
    return gc.Permutation(np.asarray(images, dtype=np.int32))


@given(permutations())
def test_inverse_cancels(p):
    assert gc.compose(p, p.inverse()).is_identity()
    assert gc.compose(p.inverse(), p).is_identity()


@given(permutations(), permutations(), permutations())
def test_compose_associative(p, q, r):
    assert gc.compose(gc.compose(p, q), r) == gc.compose(p, gc.compose(q, r))


@given(permutations(), permutations())
def test_conjugation_preserves_order(x, g):
    assert gc.element_order(gc.conjugate(x, g)) == gc.element_order(x)


@given(permutations(), permutations())
def test_conjugate_matches_definition(x, g):
    direct = gc.compose(gc.compose(g.inverse(), x), g)
    assert gc.conjugate(x, g) == direct


def test_bundled_generator_file():
    gens = gc.load_generator_file(default_generator_path())
    assert gens.degree == 1365
    assert len(gens.generators) >= 2
    for g in gens.generators:
        g.validate()
        assert not g.is_identity()


class TestInvolutionClass:
    """The distinguished conjugacy class built from the bundled generators."""

    def test_class_size_and_orders(self, wb):
        cls = wb.cls
        assert cls.size == 4095
        for i in (0, 1, cls.size - 1):
            assert gc.element_order(cls.permutation(i)) == 2

    def test_index_roundtrip(self, wb):
        cls = wb.cls
        assert cls.index(cls.permutation(7)) == 7

    def test_product_of_commuting_pair_stays_in_class(self, wb):
        cls = wb.cls
        j = next(j for j in range(1, cls.size) if gc.commute(cls, 0, j))
        k = gc.product_index(cls, 0, j)
        assert k not in (0, j)
        assert gc.commute(cls, 0, k)

    def test_action_tables_are_permutations(self, wb):
        actions = wb.actions
        assert actions.shape[1] == wb.cls.size
        for row in actions:
            assert np.array_equal(np.sort(row), np.arange(wb.cls.size))

    def test_klein_orbit_sizes(self, wb):
        """Orbit sizes of the three kinds of commuting Klein subgroups."""
        from nearoct.octagon import KLEIN_INDEX

        cls, gens, actions = wb.cls, wb.gens, wb.actions
        diagram = wb.diagram
        seen = {}
        for label in ("O1a", "O1b", "O2a"):
            j = diagram.points_with_label(label)[0]
            seen[label] = gc.klein_orbit_size(0, j, cls, gens, actions)
        assert seen == KLEIN_INDEX

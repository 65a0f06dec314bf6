"""Invariance under generated Reidemeister moves: 20 pairs per move."""

import pytest

from _gen import add_kink, braid_closure, recheck, r1_pairs, r2_pairs, r3_pairs
from skeinkit.bracket import bracket, framed_invariant
from skeinkit.colorings import count_colorings
from skeinkit.homflypt import homflypt
from skeinkit.poly import LaurentPoly

A = LaurentPoly.var("A")


def assert_invariants_equal(d, e):
    assert framed_invariant(d) == framed_invariant(e)
    assert homflypt(d) == homflypt(e)
    for p in (3, 5):
        assert count_colorings(d, p) == count_colorings(e, p)


@pytest.mark.parametrize("d,e,sign", r1_pairs())
def test_r1(d, e, sign):
    assert e.n_crossings == d.n_crossings + 1
    assert bracket(e) == bracket(d) * (-(A ** (3 * sign)))
    assert_invariants_equal(d, e)


@pytest.mark.parametrize("d,e", r2_pairs())
def test_r2(d, e):
    assert bracket(e) == bracket(d)
    assert_invariants_equal(d, e)


@pytest.mark.parametrize("d,e", r3_pairs())
def test_r3(d, e):
    assert bracket(e) == bracket(d)
    assert_invariants_equal(d, e)


def test_every_kink_variant():
    d = braid_closure(2, [1, 1, 1])
    for variant in range(4):
        for edge in range(1, d.edge_count + 1):
            e = recheck(add_kink(d, edge, variant))
            assert sum(e.signs) == sum(d.signs) + (1 if variant in (0, 3) else -1)
            assert framed_invariant(e) == framed_invariant(d)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _gen import random_diagram
from skeinkit.bracket import EMPTY_LINK, jones
from skeinkit.diagram import diagram, mirror, smooth_crossing, switch_crossing
from skeinkit.homflypt import (MU, V, Z, SingularSelection, conway, conway_coefficient, homflypt,
                               jones_from_homflypt, oriented_key, vassiliev_difference)
from skeinkit.poly import LaurentPoly

TREFOIL = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"
z = LaurentPoly.var("z")


def skein_residual(d, i):
    """``v^-1 P(L+) - v P(L-) - z P(L0)`` at crossing ``i``."""
    here = d if d.signs[i] > 0 else switch_crossing(d, i)
    there = switch_crossing(here, i)
    return V**-1 * homflypt(here) - V * homflypt(there) - Z * homflypt(smooth_crossing(d, i))


def test_right_trefoil():
    assert homflypt(mirror(diagram(TREFOIL))) == 2 * V**2 - V**4 + V**2 * Z**2


def test_left_trefoil_is_the_mirror_image():
    assert homflypt(diagram(TREFOIL)) == 2 * V**-2 - V**-4 + V**-2 * Z**2


@pytest.mark.parametrize("n", range(1, 6))
def test_trivial_links(n):
    assert homflypt(diagram(f"U{n};")) == MU ** (n - 1)


def test_empty_link():
    assert homflypt(diagram("")) == EMPTY_LINK
    assert conway(diagram("")) == EMPTY_LINK


def test_skein_relation_at_every_corpus_crossing(corpus):
    for name, d in corpus.items():
        for i in range(d.n_crossings):
            assert skein_residual(d, i).is_zero(), (name, i)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_skein_relation_on_random_diagrams(seed):
    d = random_diagram(random.Random(seed), 8)
    for i in range(d.n_crossings):
        assert skein_residual(d, i).is_zero()


def test_mirror_substitution(corpus):
    for d in corpus.values():
        p = homflypt(d)
        flipped = p.substitute({"v": V**-1, "z": -Z}, ("v", "z"))
        assert homflypt(mirror(d)) == flipped


def test_jones_specialization(corpus):
    for name, d in corpus.items():
        assert jones_from_homflypt(d) == jones(d), name


def test_conway_values(corpus):
    assert conway(corpus["3_1"]) == 1 + z**2
    assert conway(corpus["4_1"]) == 1 - z**2
    assert conway(corpus["L2a1"]) in (z, -z)
    assert conway(diagram("U2;")) == 0
    assert conway_coefficient(2)(corpus["5_2"]) == 2


def test_oriented_key_is_label_invariant():
    d = diagram(TREFOIL)
    shifted = [tuple((e % 6) + 1 for e in t) for t in d.crossings]
    assert oriented_key(d.crossings, d.signs) == oriented_key(shifted, d.signs)


def test_vassiliev_three_double_points_kill_c2(corpus):
    for name in ("3_1", "4_1", "5_2", "6_1", "7_1"):
        d = corpus[name]
        rng = random.Random(name)
        chosen = rng.sample(range(d.n_crossings), 3)
        assert vassiliev_difference(SingularSelection(d, chosen), "conway_coeff(2)") == 0


def test_vassiliev_one_double_point_is_a_difference(corpus):
    d = corpus["3_1"]
    sel = SingularSelection(d, [0])
    expected = conway_coefficient(2)(d) - conway_coefficient(2)(switch_crossing(d, 0))
    assert vassiliev_difference(sel, conway_coefficient(2)) == expected
    assert vassiliev_difference(SingularSelection(d, []), "homflypt") == homflypt(d)


def test_vassiliev_bad_input(corpus):
    with pytest.raises(ValueError):
        SingularSelection(corpus["3_1"], [7])
    with pytest.raises(ValueError):
        vassiliev_difference(SingularSelection(corpus["3_1"], [0]), "alexander")

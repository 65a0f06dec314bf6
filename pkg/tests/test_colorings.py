import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from _gen import random_diagram
from oracles import brute_colorings
from skeinkit.colorings import col3_jones_check, coloring_system, count_colorings, is_prime
from skeinkit.diagram import diagram

TREFOIL = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"


def test_known_counts(corpus):
    assert count_colorings(diagram(TREFOIL), 3) == 9
    assert count_colorings(corpus["4_1"], 5) == 25
    assert count_colorings(diagram("U2;"), 7) == 49
    assert count_colorings(diagram("U1;"), 5) == 5


def test_matches_frozen_enumeration(corpus, oracle_values):
    for name, d in corpus.items():
        for p in (3, 5):
            key = f"col{p}"
            if key in oracle_values[name]:
                assert count_colorings(d, p) == oracle_values[name][key], (name, p)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3, 5]))
def test_matches_enumeration_on_random_diagrams(seed, p):
    d = random_diagram(random.Random(seed), 6)
    assume(p ** d.edge_count <= 20_000)
    assert count_colorings(d, p) == brute_colorings(d.crossings, p, d.extra_unknots)


def test_col3_identity_on_corpus(corpus):
    for name, d in corpus.items():
        lhs, rhs = col3_jones_check(d)
        assert lhs == rhs, name


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_col3_identity_on_random_diagrams(seed):
    lhs, rhs = col3_jones_check(random_diagram(random.Random(seed), 10))
    assert lhs == rhs


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        count_colorings(diagram(TREFOIL), 4)


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_system_shape():
    system = coloring_system(diagram(TREFOIL), 3)
    assert system.n_arcs == 3 and len(system.matrix) == 3
    assert system.nullity() == 2

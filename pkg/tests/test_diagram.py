import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _gen import braid_closure, random_diagram
from skeinkit.diagram import (DiagramError, LinkDiagram, PdCode, PdSyntaxError, diagram,
                              disjoint_union, linking_matrix, mirror, parse_link_line, parse_pd,
                              render, smooth_crossing, standardize, switch_crossing, validate, writhe)

TREFOIL = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"
HOPF = "X(1,3,2,4),X(3,1,4,2)"


def test_parse_trefoil():
    code = parse_pd(TREFOIL)
    assert code.crossings == ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3))
    assert parse_pd(" X( 1 ,4,2,5) ,X(3,6,4,1),X(5,2,6,3) ") == code


def test_parse_empty():
    assert len(parse_pd("")) == 0


@pytest.mark.parametrize("text, position", [
    ("X(1,2,3)", 0),
    ("X(1,2,3,x)", 8),
    ("X(1,2,3,4", 9),
    ("Y(1,2,3,4)", 0),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(PdSyntaxError) as info:
        parse_pd(text)
    assert info.value.position == position


def test_arity_message():
    with pytest.raises(PdSyntaxError, match="expected 4"):
        parse_pd("X(1,2,3)")


def test_link_line_prefix_and_comment():
    code, extra = parse_link_line(f"U2; {TREFOIL}  # trefoil plus two circles")
    assert extra == 2 and len(code) == 3
    assert parse_link_line("   # only a comment") is None
    assert parse_link_line("") is None
    assert parse_link_line("U1;") == (PdCode(()), 1)


def test_link_line_error_positions_are_absolute():
    with pytest.raises(PdSyntaxError) as info:
        parse_link_line("U1;X(1,2,3)")
    assert info.value.position == 3


def test_validate_trefoil_and_hopf():
    t = diagram(TREFOIL)
    assert t.n_components == 1 and t.n_crossings == 3
    assert writhe(t) == -3
    h = diagram(HOPF)
    assert h.n_components == 2
    assert abs(linking_matrix(h)[0][1]) == 1


@pytest.mark.parametrize("text", [
    "X(1,4,2,5),X(3,6,4,1),X(5,2,7,3)",   # 7 once, 6 once
    "X(1,2,3,4)",                          # labels outside 1..2
    "X(1,2,3,4),X(3,4,1,2)",               # components not consecutive blocks
])
def test_validate_rejects(text):
    with pytest.raises(DiagramError):
        diagram(text)


def test_negative_extra_unknots():
    with pytest.raises(DiagramError):
        validate(PdCode(()), -1)


def test_writhe_and_mirror():
    t = diagram(TREFOIL)
    assert writhe(mirror(t)) == 3
    assert mirror(mirror(t)) == t
    e = diagram("U0;")
    assert writhe(e) == 0 and mirror(e) == e


def test_linking_matrix_shapes():
    assert linking_matrix(diagram(TREFOIL)) == [[0]]
    assert linking_matrix(diagram("U2;")) == [[0, 0], [0, 0]]


def test_disjoint_union_counts():
    t, h = diagram(TREFOIL), diagram(HOPF)
    u = disjoint_union(t, h)
    assert u.n_components == 3 and u.n_crossings == 5
    assert disjoint_union(t, diagram("U0;")) == t
    assert disjoint_union(diagram("U1;"), diagram("U1;")).n_components == 2


def test_render_round_trip(corpus):
    for d in corpus.values():
        assert parse_pd(render(d)) == d.code


def test_switch_changes_one_sign():
    t = diagram(TREFOIL)
    s = switch_crossing(t, 1)
    assert s.signs == (-1, 1, -1)
    assert switch_crossing(s, 1) == t


def test_smoothing_reduces_crossings():
    t = diagram(TREFOIL)
    s = smooth_crossing(t, 0)
    assert s.n_crossings == 2 and s.n_components == 2


def test_standardize_rejects_open_strands():
    with pytest.raises(DiagramError):
        standardize([(1, 2, 3, 4)], [1])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_generated_diagrams_validate_from_bare_code(seed):
    d = random_diagram(random.Random(seed), 10)
    assert sum(len(t) for t in d.crossings) == 4 * d.n_crossings
    unders = {t[0] for t in d.crossings} | {t[2] for t in d.crossings}
    if any(len(c) <= 2 and not unders & set(c) for c in d.components):
        # a short component that only passes over carries no sign information
        with pytest.raises(DiagramError, match="undecidable"):
            validate(d.code, d.extra_unknots)
    else:
        assert validate(d.code, d.extra_unknots).signs == d.signs
    assert writhe(mirror(d)) == -writhe(d)
    m = linking_matrix(d)
    assert all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))


def test_braid_closure_component_counts():
    assert braid_closure(3, [1, 2]).n_components == 1
    assert braid_closure(3, [1, 1]).n_components == 3
    assert isinstance(braid_closure(2, [1, 1, 1]), LinkDiagram)

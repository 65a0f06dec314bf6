import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import det, invariant_factors
from skeinkit.homology_skein import PairingData, _matmul, mul, s2_decomposition, smith_normal_form


@st.composite
def matrices(draw, max_dim=6, bound=20):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return [draw(st.lists(st.integers(-bound, bound), min_size=c, max_size=c)) for _ in range(r)]


@given(matrices())
@settings(max_examples=120, deadline=None)
def test_snf_matches_determinantal_divisors(m):
    factors, left, right = smith_normal_form(m)
    assert factors == invariant_factors(m)
    d = _matmul(_matmul(left, m), right)
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            assert x == (factors[i] if i == j else 0)
    assert abs(det(left)) == 1 and abs(det(right)) == 1
    nonzero = [f for f in factors if f]
    assert factors[:len(nonzero)] == nonzero
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]])[0] == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]])[0] == [0, 0]
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]])[0] == [1, 1, 1]
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])[0] == [2, 6, 12]
    assert smith_normal_form([], cols=3)[0] == []
    with pytest.raises(ValueError):
        smith_normal_form([[1, 2], [3]])


def test_s1_times_s2():
    dec = s2_decomposition(PairingData(1, (), 1, ((1,),)), display_bound=3)
    assert not dec.is_free()
    assert dec.kernel_basis == ()
    for k in range(-3, 4):
        assert dec.mul((k,)) == abs(k)
    assert {a: m for a, m, _ in dec.table}[(2,)] == 2
    assert "q^4 - 1" in str(dec)


def test_zero_pairing_is_free():
    dec = s2_decomposition(PairingData(2, (2,), 1, ((0,), (0,))))
    assert dec.is_free()
    assert dec.torsion_summands() == []
    assert dec.free_part == "Z[q^+-1]T(H_1), T(H_1) = Z^2 + Z/2"


def test_lens_space_is_free():
    dec = s2_decomposition(PairingData(0, (5,), 0, ()))
    assert dec.is_free()
    assert len(dec.table) == 5
    assert dec.free_part.endswith("= Z/5")


def test_three_torus():
    data = PairingData(3, (), 3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    dec = s2_decomposition(data, display_bound=1)
    assert dec.mul((2, 4, 0)) == 2
    assert dec.mul((0, 0, 0)) == 0
    assert len(dec.torsion_summands()) == 26
    js = dec.to_json()
    assert js["t_h1_free_basis"] == [] and len(js["summands"]) == 26


def test_partial_kernel():
    dec = s2_decomposition(PairingData(2, (), 1, ((2,), (4,))))
    (basis,) = dec.kernel_basis
    assert mul(dec.data, basis) == 0
    assert dec.mul((1, 0)) == 2


@given(st.lists(st.lists(st.integers(-5, 5), min_size=2, max_size=2), min_size=2, max_size=2),
       st.lists(st.integers(-4, 4), min_size=2, max_size=2), st.integers(-4, 4))
def test_mul_is_homogeneous(pairing, alpha, k):
    data = PairingData(2, (), 2, tuple(map(tuple, pairing)))
    assert mul(data, [k * a for a in alpha]) == abs(k) * mul(data, alpha)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
@settings(deadline=None)
def test_kernel_basis_pairs_trivially(pairing):
    dec = s2_decomposition(PairingData(3, (), 3, tuple(map(tuple, pairing))), display_bound=0)
    rank = sum(1 for f in invariant_factors(pairing) if f)
    assert len(dec.kernel_basis) == 3 - rank
    for row in dec.kernel_basis:
        assert mul(dec.data, row) == 0


@pytest.mark.parametrize("args", [
    (1, (1,), 0, ((),)),
    (0, (2, 3), 0, ()),
    (2, (), 1, ((1,),)),
    (-1, (), 0, ()),
])
def test_validation(args):
    with pytest.raises(ValueError):
        PairingData(*args)


def test_alpha_length_checked():
    with pytest.raises(ValueError):
        mul(PairingData(2, (), 1, ((1,), (1,))), [1])
    with pytest.raises(ValueError):
        s2_decomposition(PairingData(0, (), 0, ()), display_bound=-1)

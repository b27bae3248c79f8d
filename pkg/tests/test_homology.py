import json

import pytest
from hypothesis import given, settings, strategies as st

from corkcheck import homology as hom
from corkcheck.alexander import int_det
from oracles import determinantal_divisors, rank_over_q


@st.composite
def int_matrices(draw, max_dim=4, lo=-9, hi=9):
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    return draw(st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m))


def check_decomposition(A, d):
    m, n = len(A), len(A[0])
    assert hom.matmul(hom.matmul(d.U, d.S, m), d.V, n) == A
    assert abs(int_det(d.U)) == 1 and abs(int_det(d.V)) == 1
    assert hom.is_smith_form(d.S)


@settings(max_examples=150)
@given(int_matrices())
def test_snf_properties(A):
    d = hom.smith_normal_form(A)
    check_decomposition(A, d)
    assert d.invariant_factors == determinantal_divisors(A)
    assert d.rank == rank_over_q(A)


def test_snf_example():
    d = hom.smith_normal_form([[2, 4], [6, 8]])
    assert d.S == [[2, 0], [0, 4]]
    assert d.U == [[1, 0], [3, -1]] and d.V == [[1, 2], [0, 1]]
    assert d.diagonal == [2, 4]


def test_snf_edge_cases():
    assert hom.smith_normal_form([[0, 0], [0, 0]]).rank == 0
    d = hom.smith_normal_form([[6]])
    assert d.S == [[6]]
    d = hom.smith_normal_form([[-3]])
    assert d.S == [[3]] and d.U == [[-1]]
    d = hom.smith_normal_form([], ncols=3)
    assert d.S == [] and len(d.V) == 3
    # gcd step: diag(2, 3) becomes diag(1, 6)
    assert hom.smith_normal_form([[2, 0], [0, 3]]).diagonal == [1, 6]


def test_is_smith_form():
    assert hom.is_smith_form([[1, 0], [0, 2]])
    assert not hom.is_smith_form([[2, 0], [0, 3]])
    assert not hom.is_smith_form([[0, 0], [0, 1]])
    assert not hom.is_smith_form([[1, 1], [0, 1]])
    assert not hom.is_smith_form([[-1]])


@st.composite
def complexes(draw):
    # three degrees with d1 = 0 and a random d2, so d1 d2 = 0 trivially
    r1, r2 = draw(st.integers(0, 3)), draw(st.integers(1, 4))
    d2 = draw(st.lists(st.lists(st.integers(-4, 4), min_size=r2, max_size=r2), min_size=r1, max_size=r1))
    return hom.ChainComplex((1, r1, r2), ([[0] * r1], d2 if r1 else None))


@given(complexes())
def test_homology_against_ranks(c):
    h = hom.homology_of(c)
    d2 = [list(r) for r in c.boundaries[1]]
    rk = rank_over_q(d2) if c.ranks[1] else 0
    assert h.betti == (1, c.ranks[1] - rk, c.ranks[2] - rk)
    assert h.euler == hom.euler_characteristic(c)
    if c.ranks[1]:
        expect = tuple(x for x in determinantal_divisors(d2) if x > 1)
        assert h.torsion[1] == expect


def test_witnesses():
    cx = hom.witness_complexes()
    s4 = hom.connected_sum_homology(0, 0)
    for name in ("s4_witness", "s4_witness_mixed"):
        assert cx[name].ranks == (1, 2, 4, 2, 1)
        h = hom.homology_of(cx[name])
        assert h == s4 and hom.is_homotopy_sphere_homology(h)
    assert hom.homology_of(cx["s4_counts_zero_maps"]) == hom.connected_sum_homology(2, 2)
    assert hom.homology_of(cx["log0_model"]) == hom.connected_sum_homology(1, 1)
    h = hom.homology_of(cx["torsion_h1"])
    assert h.torsion[1] == (2,) and not hom.is_homotopy_sphere_homology(h)
    assert all(hom.euler_characteristic(c) == 2 for c in cx.values())


def test_zero_boundary_complexes():
    h = hom.homology_of(hom.ChainComplex.zero((1, 1, 2, 1, 1)))
    assert h.betti == (1, 1, 2, 1, 1) and not any(h.torsion)
    h = hom.homology_of(hom.ChainComplex.zero((1, 2, 4, 2, 1)))
    assert h == hom.connected_sum_homology(2, 2)


def test_not_a_complex():
    assert hom.homology_of(hom.ChainComplex((1, 1, 1), ([[0]], [[1]]))).betti == (1, 0, 0)
    with pytest.raises(hom.NotAComplex):
        hom.ChainComplex((1, 1, 1), ([[1]], [[1]])).check()
    with pytest.raises(hom.NotAComplex):
        hom.homology_of(hom.ChainComplex((1, 1, 1), ([[1]], [[1]])))
    with pytest.raises(hom.NotAComplex):
        hom.ChainComplex((1, 2), ([[1]],))
    with pytest.raises(hom.NotAComplex):
        hom.ChainComplex((1, -1))
    with pytest.raises(hom.NotAComplex):
        hom.ChainComplex((1, 1), ([[0]], [[0]]))
    with pytest.raises(hom.NotAComplex):
        hom.ChainComplex.from_json({"boundaries": []})


def test_homology_groups_validation():
    with pytest.raises(ValueError):
        hom.HomologyGroups((1, 0), ((),))
    with pytest.raises(ValueError):
        hom.HomologyGroups((1,), ((1,),))
    with pytest.raises(ValueError):
        hom.HomologyGroups((1,), ((2, 3),))
    h = hom.HomologyGroups((1, 0), ((), (2, 4)))
    assert h.to_json() == {"betti": [1, 0], "torsion": [[], [2, 4]]}
    assert not hom.is_homotopy_sphere_homology(hom.HomologyGroups.free((1, 0, 1)))
    assert hom.is_homotopy_sphere_homology(hom.HomologyGroups.free((1, 0, 1)), dim=2)


def test_json_round_trip(tmp_path):
    c = hom.witness_complexes()["s4_witness_mixed"]
    path = tmp_path / "c.json"
    path.write_text(json.dumps(c.to_json()))
    back = hom.load_complex(path)
    assert back.ranks == c.ranks and back.boundaries == c.boundaries


def test_snf_trivial_examples():
    assert hom.smith_normal_form([[2, 0], [0, 0]]).S == [[2, 0], [0, 0]]
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert hom.smith_normal_form(eye).S == eye
    assert hom.euler_characteristic(hom.ChainComplex.zero((1, 2, 4, 2, 1))) == 2
    assert hom.euler_characteristic(hom.ChainComplex.zero((1, 1, 2, 1, 1))) == 2
    assert not hom.is_homotopy_sphere_homology(hom.connected_sum_homology(1, 1))

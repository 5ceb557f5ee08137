import pytest

from shephardlab.crosspoly import (CrossPolytopeModel,
                                   cross_polytope_retraction, iota_vertex,
                                   lex_shelling_cross_polytope, rho_vertex)

CASES = [(2, 2), (3, 2), (3, 3), (4, 2)]


def test_face_counts():
    model = CrossPolytopeModel(3, 2)
    assert model.face_count_by_dim() == {0: 6, 1: 9}
    model = CrossPolytopeModel(2, 3)
    assert model.face_count_by_dim() == {0: 6, 1: 12, 2: 8}


def test_chamber_counts():
    for r, ell in CASES:
        model = CrossPolytopeModel(r, ell)
        fact = 1
        for k in range(2, ell + 1):
            fact *= k
        assert len(model.chambers()) == fact * r ** ell


def test_vertex_maps():
    plus_e1 = frozenset([(0, 0)])
    minus_e1 = frozenset([(0, 1)])
    omega2_e1 = frozenset([(0, 2)])
    assert rho_vertex(iota_vertex(plus_e1, 3)) == plus_e1
    assert rho_vertex(iota_vertex(minus_e1, 3)) == minus_e1
    assert rho_vertex(omega2_e1) == minus_e1


def test_r_equals_two_maps_are_mutually_inverse():
    model = CrossPolytopeModel(2, 2)
    for f in model.faces:
        assert iota_vertex(f, 2) == f
        assert rho_vertex(f) == f


@pytest.mark.parametrize("r,ell", CASES)
def test_retraction(r, ell):
    res = cross_polytope_retraction(r, ell)
    assert res["pass"], res


@pytest.mark.parametrize("r,ell", CASES)
def test_lex_shelling(r, ell):
    res = lex_shelling_cross_polytope(r, ell)
    assert res["pass"], res
    assert res["chamber_count"] == res["expected_count"]


def test_invalid_parameters():
    with pytest.raises(ValueError):
        CrossPolytopeModel(1, 2)
    with pytest.raises(ValueError):
        CrossPolytopeModel(3, 0)

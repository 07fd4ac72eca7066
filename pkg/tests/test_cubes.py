import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from waldcat.cubes import (
    Cube,
    arrow_cube,
    enumerate_cubes,
    enumerate_good_cubes,
    enumerate_transformations,
    face,
    good_pushout,
    good_pushout_sweep,
    is_good,
    morphism_cube,
    point_cube,
    punctured_colimit,
    southern_arrow,
    split_arrow_cube,
    square,
    vertices_of,
)
from waldcat.errors import HypothesisError, NaturalityError, NoPushoutError
from waldcat.fincat import build_index, colimit, full_subcategory
from waldcat.pointed import FINSET, PMap
from waldcat.wald import finset_pointed, vect_fp

W = finset_pointed(4)


def pmap(dom, cod, *img):
    return PMap(dom, cod, (0,) + img)


def test_faces():
    f = pmap(1, 2, 2)
    C = morphism_cube(W, f)
    assert face(C, 1, 0) == point_cube(W, 1)
    assert face(C, 1, 1) == point_cube(W, 2)
    sq = square(W, pmap(1, 2, 1), pmap(1, 2, 2), pmap(2, 3, 1, 2), pmap(2, 3, 1, 3))
    assert face(face(sq, 1, 0), 1, 0) == face(face(sq, 2, 0), 1, 0) == point_cube(W, 1)
    with pytest.raises(ValueError):
        face(sq, 3, 0)


def test_arrow_cube_faces_are_its_ends():
    f, g = pmap(1, 2, 1), pmap(1, 2, 2)
    I, J = morphism_cube(W, f), morphism_cube(W, g)
    alpha = {(0,): FINSET.identity(1), (1,): pmap(2, 2, 2, 1)}
    A = arrow_cube(I, J, alpha)
    assert A.n == 2 and len(A.vertices) == 4
    assert face(A, 2, 0) == I and face(A, 2, 1) == J
    assert split_arrow_cube(A) == (I, J, alpha)
    with pytest.raises(NaturalityError):
        arrow_cube(I, J, {(0,): FINSET.identity(1), (1,): FINSET.identity(2)})


def test_arrow_cube_small_cases():
    A = arrow_cube(point_cube(W, 1), point_cube(W, 2), {(): pmap(1, 2, 2)})
    assert A == morphism_cube(W, pmap(1, 2, 2))
    sq = square(W, pmap(1, 2, 1), pmap(1, 2, 2), pmap(2, 3, 1, 2), pmap(2, 3, 1, 3))
    ident = {e: FINSET.identity(v) for e, v in sq.vertices.items()}
    big = arrow_cube(sq, sq, ident)
    assert len(big.vertices) == 8
    assert all(FINSET.is_identity(big.edges[(e + (0,), 2)]) for e in vertices_of(2))


def test_punctured_colimits():
    f = pmap(1, 2, 2)
    assert punctured_colimit(morphism_cube(W, f)).obj == 1
    sq = square(W, pmap(1, 2, 1), pmap(1, 2, 2), pmap(2, 3, 1, 2), pmap(2, 3, 1, 3))
    # B u_A C
    assert punctured_colimit(sq).obj == 3


def test_punctured_colimit_matches_direct_colimit():
    cube3 = build_index("cube", 3)
    punct = full_subcategory(cube3, [v for v in cube3.object_list if v != (1, 1, 1)])
    from waldcat.oracles import enumerate_diagrams

    for D in itertools.islice(enumerate_diagrams(cube3, FINSET, 1), 0, None, 5):
        C = Cube.from_functor(D, W)
        assert punctured_colimit(C, strict=False).obj == colimit(D.restrict(punct)).obj


def test_southern_arrows_of_small_cubes():
    assert southern_arrow(point_cube(W, 2)) == pmap(0, 2)
    f = pmap(2, 3, 3, 1)
    assert southern_arrow(morphism_cube(W, f)) == f


def test_pushout_square_has_iso_southern_arrow():
    f, g = pmap(1, 2, 1), pmap(1, 2, 2)
    po = W.pushout(f, g)
    sq = square(W, f, g, po.leg_b, po.leg_c)
    assert FINSET.is_iso(southern_arrow(sq))


def test_goodness_in_low_dimension():
    for a in range(4):
        assert is_good(point_cube(W, a)).good
    for f in W.morphisms(2):
        assert is_good(morphism_cube(W, f)).good == f.is_injective()


def test_non_injective_corner_is_not_good():
    # both maps are the first inclusion 1 -> 2, closed off by the fold onto one point
    inc = pmap(1, 2, 1)
    fold = pmap(2, 2, 1, 2)
    sq = square(W, inc, inc, fold, fold)
    assert sq.commutes()
    rep = is_good(sq)
    assert not rep.good
    assert rep.face == {}  # the edges are fine; the square itself fails
    assert not southern_arrow(sq).is_injective()


def test_strict_southern_arrow_needs_cofibrant_legs():
    fold = pmap(2, 1, 1, 1)
    sq = square(W, fold, fold, FINSET.identity(1), FINSET.identity(1))
    with pytest.raises(NoPushoutError):
        southern_arrow(sq)
    assert not is_good(sq).good


GOOD_SQUARES = list(enumerate_good_cubes(finset_pointed(3), 2))


def test_good_cubes_have_cofibration_edges():
    assert GOOD_SQUARES
    for C in GOOD_SQUARES:
        assert all(f.is_injective() for f in C.edges.values())


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(GOOD_SQUARES), st.integers(1, 2), st.integers(0, 1))
def test_faces_of_good_cubes_are_good(C, k, eps):
    assert is_good(face(C, k, eps)).good


def test_enumeration_counts_commuting_cubes():
    W2 = finset_pointed(2)
    ones = list(enumerate_cubes(W2, 1))
    assert len(ones) == len(W2.morphisms())
    assert all(C.commutes() for C in enumerate_cubes(W2, 2))


def test_good_pushout_base_case():
    f = pmap(1, 2, 1)
    g = pmap(1, 1, 1)
    res = good_pushout(point_cube(W, 1), point_cube(W, 2), point_cube(W, 1), {(): f}, {(): g})
    assert res.cube == point_cube(W, 2)
    assert res.beta[()].is_injective()


def test_good_pushout_one_cubes():
    # I = (1 -> 2), J = (2 -> 3), K = I, gamma the identity
    I = morphism_cube(W, pmap(1, 2, 1))
    J = morphism_cube(W, pmap(2, 3, 1, 2))
    alpha = {(0,): pmap(1, 2, 2), (1,): pmap(2, 3, 2, 3)}
    gamma = {e: FINSET.identity(v) for e, v in I.vertices.items()}
    res = good_pushout(I, J, I, alpha, gamma)
    assert is_good(res.cube).good
    assert is_good(arrow_cube(I, res.cube, res.beta)).good


def test_good_pushout_rejects_bad_input():
    I = morphism_cube(W, pmap(1, 1, 0))
    with pytest.raises(HypothesisError):
        good_pushout(I, I, I, {e: FINSET.identity(v) for e, v in I.vertices.items()},
                     {e: FINSET.identity(v) for e, v in I.vertices.items()})


def test_transformations_between_points():
    found = list(enumerate_transformations(point_cube(W, 1), point_cube(W, 2)))
    assert len(found) == 3
    assert len(list(enumerate_transformations(point_cube(W, 1), point_cube(W, 2), cofibrant=True))) == 2


def test_sweep_small():
    W2 = finset_pointed(2)
    # at n = 0 a triple is a cofibration out of I and any map out of I
    expected = sum(
        len([f for b in W2.skeleton() for f in FINSET.hom(a, b) if f.is_injective()])
        * len([f for b in W2.skeleton() for f in FINSET.hom(a, b)])
        for a in W2.skeleton()
    )
    assert expected == 7
    sweep = good_pushout_sweep(W2, 0)
    assert (sweep.triples, sweep.failures) == (expected, [])
    assert good_pushout_sweep(W2, 1).failures == []


def test_sweep_vector_spaces():
    sweep = good_pushout_sweep(vect_fp(2, 1), 1)
    assert sweep.triples > 0 and sweep.failures == []

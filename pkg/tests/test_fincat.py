import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from waldcat.cubes import southern_arrow
from waldcat.errors import NotAFunctorError, SizeCapError
from waldcat.fincat import (
    Functor,
    build_index,
    check_functor,
    colimit,
    diagram,
    full_subcategory,
    identity_functor,
    product,
    pushout,
    restricted_colimit_cube,
    subcategory,
)
from waldcat.oracles import compare_with_oracle, enumerate_diagrams, naive_pointed_colimit
from waldcat.pointed import FINSET, PMap
from waldcat.wald import finset_pointed


def pmap(dom, cod, *img):
    return PMap(dom, cod, (0,) + img)


def test_interval_has_one_non_identity_arrow():
    I = build_index("interval")
    assert I.object_list == (0, 1)
    non_id = [m for m in I.morphism_list if not I.is_identity(m)]
    assert len(non_id) == 1
    assert (I.dom(non_id[0]), I.cod(non_id[0])) == (0, 1)
    assert not I.is_iso(non_id[0])


def test_index_sizes():
    expected = [
        (("cube", 0), 1, 1),
        (("cube", 2), 4, 9),
        (("cube", 3), 8, 27),
        (("ordinal", 2), 3, 6),
        (("arrow_ordinal", 2), 6, 20),
    ]
    for (shape, n), objs, mors in expected:
        C = build_index(shape, n)
        assert (len(C.object_list), len(C.morphism_list)) == (objs, mors), shape
        assert C.validate() == []


def test_arrow_ordinal_objects():
    assert build_index("arrow_ordinal", 2).object_list == ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


def test_product_and_cap():
    P = product([build_index("interval"), build_index("ordinal", 2)])
    assert len(P.object_list) == 6
    with pytest.raises(SizeCapError):
        build_index("cube", 12)
    with pytest.raises(ValueError):
        build_index("ordinal", -1)


def test_check_functor_examples():
    I = build_index("interval")
    assert check_functor(identity_functor(I)).ok
    collapse = Functor(I, I, {0: 1, 1: 1}, {m: I.identity(1) for m in I.morphism_list})
    assert check_functor(collapse).ok

    chain = build_index("ordinal", 2)
    good = diagram(chain, FINSET, {0: 1, 1: 1, 2: 1},
                   {(0, 1): pmap(1, 1, 1), (1, 2): pmap(1, 1, 1), (0, 2): pmap(1, 1, 1)})
    assert check_functor(good).ok
    bad = diagram(chain, FINSET, {0: 1, 1: 1, 2: 1},
                  {(0, 1): pmap(1, 1, 1), (1, 2): pmap(1, 1, 1), (0, 2): pmap(1, 1, 0)})
    rep = check_functor(bad)
    assert not rep.ok
    assert ((1, 2), (0, 1)) in rep.composition_violations


def test_partial_table_is_rejected():
    I = build_index("interval")
    with pytest.raises(NotAFunctorError):
        Functor(I, FINSET, {0: 1}, {})


def test_discrete_colimit_is_wedge():
    D = diagram(build_index("discrete", 2), FINSET, {0: 1, 1: 2}, {})
    col = colimit(D)
    assert col.obj == 3
    assert col.legs[0] == pmap(1, 3, 1)
    assert col.legs[1] == pmap(2, 3, 2, 3)


def test_one_object_colimit_is_identity():
    D = diagram(build_index("discrete", 1), FINSET, {0: 2}, {})
    col = colimit(D)
    assert col.obj == 2 and FINSET.is_identity(col.legs[0])


def test_pushout_examples():
    f = pmap(1, 2, 2)
    po = pushout(FINSET, f, FINSET.identity(1))
    assert po.obj == 2 and FINSET.is_iso(po.leg_b)
    # {*,c} <- {*} -> {*,b}
    wedge = pushout(FINSET, pmap(0, 1), pmap(0, 1))
    assert wedge.obj == 2
    # two injections glued along one point
    glued = pushout(FINSET, pmap(1, 2, 1), pmap(1, 2, 2))
    assert glued.obj == 3
    assert glued.leg_b.is_injective() and glued.leg_c.is_injective()


def test_colimits_match_oracle_on_spans():
    span = build_index("span")
    count = 0
    for D in enumerate_diagrams(span, FINSET, 2):
        count += 1
        assert compare_with_oracle(D) == []
    assert count == sum((b + 1) ** a * (c + 1) ** a for a in range(3) for b in range(3) for c in range(3))


@st.composite
def spans(draw, top=3):
    a, b, c = (draw(st.integers(0, top)) for _ in range(3))
    f = PMap(a, b, (0,) + tuple(draw(st.integers(0, b)) for _ in range(a)))
    g = PMap(a, c, (0,) + tuple(draw(st.integers(0, c)) for _ in range(a)))
    return f, g


@settings(max_examples=200, deadline=None)
@given(spans())
def test_pushout_is_universal(span):
    f, g = span
    po = pushout(FINSET, f, g)
    assert FINSET.compose(po.leg_b, f) == FINSET.compose(po.leg_c, g)
    for apex in (1, 2):
        for hb in FINSET.hom(f.cod, apex):
            for hc in FINSET.hom(g.cod, apex):
                if FINSET.compose(hb, f) == FINSET.compose(hc, g):
                    u = po.factor(hb, hc)
                    assert FINSET.compose(u, po.leg_b) == hb
                    assert FINSET.compose(u, po.leg_c) == hc


@settings(max_examples=60, deadline=None)
@given(spans(top=4))
def test_pushout_size_matches_naive_quotient(span):
    f, g = span
    D = diagram(build_index("span"), FINSET, {"a": f.dom, "b": f.cod, "c": g.cod}, {("a", "b"): f, ("a", "c"): g})
    assert pushout(FINSET, f, g).obj == naive_pointed_colimit(D).obj


def test_colimits_are_canonical():
    D = diagram(build_index("discrete", 2), FINSET, {0: 2, 1: 1}, {})
    assert colimit(D).legs == colimit(D).legs
    # elements are numbered by component first
    assert colimit(D).legs[1] == pmap(1, 3, 3)


def test_subcategory_closure_is_checked():
    C = build_index("ordinal", 2)
    with pytest.raises(ValueError):
        subcategory(C, [C.identity(0), C.identity(1), C.identity(2), (0, 1), (1, 2)])
    with pytest.raises(ValueError):
        subcategory(C, [(0, 1)])
    S = full_subcategory(C, [0, 2])
    assert S.object_list == (0, 2) and len(S.morphism_list) == 3


def test_restricted_cube_single_total_cover():
    C = build_index("span")
    D = diagram(C, FINSET, {"a": 1, "b": 2, "c": 2}, {("a", "b"): pmap(1, 2, 1), ("a", "c"): pmap(1, 2, 2)})
    cube = restricted_colimit_cube(D, [C], finset_pointed(4))
    assert cube.n == 1 and FINSET.is_identity(cube.edges[((0,), 0)])


def test_restricted_cube_span_cover_is_pushout_square():
    W = finset_pointed(4)
    C = build_index("span")
    D = diagram(C, FINSET, {"a": 1, "b": 2, "c": 2}, {("a", "b"): pmap(1, 2, 1), ("a", "c"): pmap(1, 2, 2)})
    left, right = full_subcategory(C, ["a", "b"]), full_subcategory(C, ["a", "c"])
    cube = restricted_colimit_cube(D, [left, right], W)
    assert cube.vertices == {(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 3}
    assert FINSET.is_iso(southern_arrow(cube))


def test_restricted_cube_punctured_three_cube():
    W = finset_pointed(3)
    C = build_index("cube", 3)
    top = (1, 1, 1)
    # the punctured cube, and every arrow into the top vertex
    covers = [full_subcategory(C, [v for v in C.object_list if v != top])] + [
        subcategory(C, [m for m in C.morphism_list if C.cod(m) == top or C.is_identity(m) and C.dom(m) == top]
                    + [C.identity(v) for v in C.object_list if v != top])
    ]
    count = 0
    for D in itertools.islice(enumerate_diagrams(C, FINSET, 1), 0, None, 7):
        count += 1
        cube = restricted_colimit_cube(D, covers, W)
        assert FINSET.is_iso(southern_arrow(cube, strict=False))
    assert count > 20


def test_covers_must_exhaust():
    C = build_index("span")
    D = diagram(C, FINSET, {"a": 0, "b": 0, "c": 0}, {("a", "b"): pmap(0, 0), ("a", "c"): pmap(0, 0)})
    with pytest.raises(ValueError):
        restricted_colimit_cube(D, [full_subcategory(C, ["a", "b"])], finset_pointed(2))

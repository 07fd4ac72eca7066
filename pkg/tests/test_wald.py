import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from waldcat.errors import NoPushoutError
from waldcat.pointed import FINSET, PMap
from waldcat.vect import LinMap
from waldcat.wald import (
    AXIOMS,
    builtin,
    check_wald_axioms,
    finset_pointed,
    from_finite,
    from_tags,
    nstar,
    skeleton_category,
    vect_fp,
    zero_category,
)


def test_nstar_objects():
    W = nstar(2)
    assert W.skeleton() == [0, 1, 2]
    assert len(W.morphisms()) == sum((b + 1) ** a for a in range(3) for b in range(3))


def test_builtins_pass():
    for W in [finset_pointed(s) for s in (1, 2, 3)] + [nstar(3), vect_fp(2, 2), vect_fp(3, 1)]:
        rep = check_wald_axioms(W)
        assert rep.ok, rep.summary()
        assert set(rep.checked) == set(AXIOMS)


def test_zero_category_has_one_object():
    W = zero_category()
    assert W.skeleton() == [0]
    assert check_wald_axioms(W).ok


def test_identity_cofibrations_break_w3():
    rep = check_wald_axioms(finset_pointed(3, cofibrations="identities"))
    assert "W3" in rep.failed
    assert len(rep.witnesses["W3"]) <= 10


def test_all_maps_as_weqs():
    rep = check_wald_axioms(finset_pointed(3, weqs="all"))
    assert rep.ok, rep.summary()


def test_all_maps_as_cofibrations():
    # pointed sets have all pushouts, so this is again a Waldhausen structure
    assert check_wald_axioms(finset_pointed(3, cofibrations="all")).ok


def test_strict_pushout_needs_a_cofibration():
    W = finset_pointed(3)
    fold = PMap(2, 1, (0, 1, 1))
    with pytest.raises(NoPushoutError):
        W.pushout(fold, fold)
    assert W.pushout(fold, fold, strict=False).obj == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_pushout_of_injection_is_injection(a, b, data):
    c = data.draw(st.integers(a, 4))
    inj = data.draw(st.permutations(range(1, c + 1)))[:a]
    f = PMap(a, c, (0,) + tuple(inj))
    g = PMap(a, b, (0,) + tuple(data.draw(st.integers(0, b)) for _ in range(a)))
    po = finset_pointed(5).pushout(f, g)
    assert po.leg_c.is_injective()


def test_vect_injections_are_cofibrations():
    W = vect_fp(2, 2)
    line = LinMap.from_array(2, [[1], [0]])
    assert W.is_cofibration(line)
    assert not W.is_cofibration(LinMap.from_array(2, [[1, 1]]))
    assert len(W.skeleton()) == 3


def test_finite_category_from_skeleton():
    C = skeleton_category(finset_pointed(2))
    isos = [f for f in C.morphism_list if FINSET.is_iso(f)]
    cof = [f for f in C.morphism_list if f.is_injective()]
    # the truncation is not closed under wedges
    rep = check_wald_axioms(from_finite(C, 0, cof, isos))
    assert rep.failed == ["W4"]
    assert rep.witnesses["W4"][0][:3] == ("no pushout", PMap(0, 1, (0,)), PMap(0, 1, (0,)))
    assert "W3" in check_wald_axioms(from_finite(C, 0, isos, isos)).failed
    point = skeleton_category(finset_pointed(1))
    assert check_wald_axioms(from_finite(point, 0, point.morphism_list, point.morphism_list)).ok


def test_tags_rebuild_builtins():
    for W in (finset_pointed(3), nstar(2), vect_fp(2, 2)):
        again = from_tags(W.tags)
        assert again.name == W.name and again.skeleton() == W.skeleton()
    with pytest.raises(ValueError):
        builtin("nope")
    with pytest.raises(ValueError):
        finset_pointed(0)

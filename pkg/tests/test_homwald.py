import itertools

import pytest

from waldcat.errors import NotExactError
from waldcat.fincat import NatTrans
from waldcat.homwald import (
    build_hom,
    check_closed_axioms,
    curry,
    enumerate_k_exact,
    enumerate_multifunctors,
    evaluation,
    hom_action,
    partial_application,
    source_index,
    tabulate,
    uncurry,
)
from waldcat.multiexact import MultiFunctor, box_cube, check_k_exact, smash
from waldcat.pointed import FINSET
from waldcat.wald import check_wald_axioms, finset_pointed, zero_category

W2, W3 = finset_pointed(2), finset_pointed(3)


def test_arity_zero_functors_are_objects():
    found = enumerate_k_exact([], W3)
    assert [F.obj(()) for F in found] == W3.skeleton()


def test_into_the_zero_category():
    for srcs in ([W2], [W3], [W2, W3]):
        assert len(enumerate_k_exact(srcs, zero_category())) == 1


def test_pruned_search_matches_brute_force():
    for srcs, T in (([W2], W2), ([W3], W3), ([W2, W2], W3)):
        fast = enumerate_k_exact(srcs, T)
        slow = enumerate_k_exact(srcs, T, brute_force=True)
        assert [F.table for F in fast] == [F.table for F in slow]


def test_brute_force_filter_over_all_functors():
    everything = list(enumerate_multifunctors([W3], W3))
    exact = [F.table for F in everything if check_k_exact(F).ok]
    assert sorted(exact, key=lambda T: repr(T.tables)) == [F.table for F in enumerate_k_exact([W3], W3)]


def test_hom_from_zero_category():
    H = build_hom([zero_category()], W3)
    assert len(H.functors) == 1
    assert check_wald_axioms(H).ok


def test_hom_axioms():
    for srcs, T in (([W2], W2), ([W3], W3), ([W2, W2], W3)):
        H = build_hom(srcs, T, verify=True)
        assert H.functors


def _identity_table(H):
    return next(T for T in H.tables if all(T.obj(a) == a[0] for a in H.index.object_list))


def test_zero_transformation_is_not_a_cofibration():
    H = build_hom([W3], W3)
    ident = _identity_table(H)
    zero = NatTrans(ident, ident, {a: FINSET.zero_map(a[0], a[0]) for a in H.index.object_list})
    witness = H.cofibration_witness(zero)
    assert witness is not None
    fs, _, reason = witness
    assert FINSET.dom(fs[0]) > 0 or FINSET.cod(fs[0]) > 0
    assert not H.is_cofibration(zero)
    identity = NatTrans(ident, ident, {a: FINSET.identity(a[0]) for a in H.index.object_list})
    assert H.is_cofibration(identity) and H.is_weq(identity)


def test_evaluation_values():
    H = build_hom([W3], W3)
    ev = evaluation(H)
    for T in H.tables:
        assert ev.obj((0, T)) == 0
    ident = _identity_table(H)
    for a in W3.skeleton():
        assert ev.obj((a, ident)) == a


def test_evaluation_is_exact():
    for k in (0, 1, 2):
        H = build_hom([W2] * k, W3)
        assert check_k_exact(evaluation(H)).ok


def test_evaluation_box_cube_is_the_transformation_cube():
    H = build_hom([W3], W3)
    ev = evaluation(H)
    for alpha in H.cofibrations():
        F, G = H.as_multi(alpha.source), H.as_multi(alpha.target)
        for f in W3.cofibrations():
            C = box_cube([f, alpha], ev)
            assert C == H.transformation_cube((f,), F, G, alpha)


def test_curry_at_full_arity_gives_the_table():
    H = build_hom([W2, W2], W3)
    for F in enumerate_k_exact([W2, W2], W3):
        c = curry(F, H)
        assert c.arity == 0 and c.obj(()) == F.table


def test_curried_smash_gives_exact_partial_applications():
    H = build_hom([W3], W3)
    c = curry(smash(W3), H, 1)
    # smashing with the two point set is the identity on the skeleton
    assert c.obj((1,)) == _identity_table(H)
    for b in W3.skeleton():
        part = partial_application(smash(W3), {1: b})
        assert check_k_exact(part).ok
    with pytest.raises(ValueError):
        curry(smash(W3), H, 2)


def test_curry_rejects_a_non_exact_partial_application():
    H = build_hom([W3], W3)
    # fixing the second input of (a, b) -> b gives a constant functor
    proj2 = MultiFunctor([W3, W3], W3, lambda a: a[1], lambda m: m[1], name="proj2")
    assert curry(proj2, H, 1).obj((0,)) in H.tables
    with pytest.raises(NotExactError):
        curry(proj2, H, 1).obj((1,))


def test_round_trips():
    H = build_hom([W2], W3)
    index = source_index([W2, W2])
    for F in enumerate_k_exact([W2, W2], W3):
        assert tabulate(uncurry(curry(F, H, 1), H), index) == F.table
    for G in enumerate_k_exact([W2], H):
        back = curry(MultiFunctor.from_functor(tabulate(uncurry(G, H), index), [W2, W2], W3), H, 1)
        assert tabulate(back) == tabulate(G)


def test_closed_axioms_small_cases():
    for k, l in ((0, 0), (0, 1), (1, 0), (1, 1), (2, 1)):
        rep = check_closed_axioms([W2] * k, [W2] * l, W3)
        assert rep.ok, (k, l, rep.summary())
        assert rep.checked["CM1"] > 0


def test_transposition_acts_on_the_hom():
    H = build_hom([W2, W2], W3)
    act = hom_action(H, (1, 0), H)
    assert check_k_exact(act).ok
    for T in H.tables:
        swapped = act.obj((T,))
        for a, b in itertools.product(W2.skeleton(), repeat=2):
            assert swapped.obj((a, b)) == T.obj((b, a))

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from waldcat.errors import NotExactError
from waldcat.multiexact import (
    MultiFunctor,
    block_permutation,
    block_sum,
    box_cube,
    box_product,
    check_k_exact,
    check_multicategory_axioms,
    compose_multi,
    composition_good_comparison,
    doubling,
    functoriality_failures,
    identity_multi,
    perm_compose,
    projection,
    require_exact,
    sigma_action,
    smash,
    table_differences,
    tensor,
)
from waldcat.pointed import FINSET, PMap
from waldcat.wald import finset_pointed, vect_fp

W2, W3 = finset_pointed(2), finset_pointed(3)


def pmap(dom, cod, *img):
    return PMap(dom, cod, (0,) + img)


def test_one_variable_box_cube_is_the_image():
    f = pmap(1, 2, 2)
    D = doubling(W3)
    C = box_cube([f], D)
    assert C.n == 1 and C.edges[((0,), 0)] == D.mor([f])
    assert box_product([f], D) == D.mor([f])


def test_smash_box_square():
    f = pmap(1, 2, 1)
    C = box_cube([f, f], smash(W3))
    assert C.vertices == {(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 4}
    # a three point pointed set smashed with itself has five points
    assert C.vertices[(1, 1)] + 1 == 5
    g = box_product([f, f], smash(W3))
    assert g.is_injective() and g.cod == 4 and g.dom == 3


def test_box_product_with_an_identity_is_iso():
    f = pmap(1, 2, 1)
    assert FINSET.is_iso(box_product([f, FINSET.identity(2)], smash(W3)))


def test_zero_input_gives_zero_cube():
    zero = FINSET.identity(0)
    C = box_cube([zero, pmap(1, 2, 2)], smash(W3))
    assert set(C.vertices.values()) == {0}


def test_builtin_generators_are_exact():
    for F in (identity_multi(W3), doubling(W3), smash(W3, 2), smash(W2, 3), tensor(vect_fp(2, 2), 2)):
        for mode in ("full", "reduced"):
            rep = check_k_exact(F, mode)
            assert rep.ok, rep.summary()
            assert sum(rep.checked.values()) > 0


def test_projection_fails_zero_absorption():
    rep = check_k_exact(projection(W3, W3))
    assert "kE1" in rep.failed
    assert ((1, 0), 1) in rep.witnesses["kE1"]
    with pytest.raises(NotExactError):
        require_exact(projection(W3, W3))


def test_zero_absorption_readings_agree_on_skeleta():
    # the skeleton has a single zero object, so equality and "is a zero object" coincide
    for F in (projection(W3, W3), smash(W3), doubling(W3)):
        strict = check_k_exact(F, axioms=("kE1",))
        loose = check_k_exact(F, strict_zero=False, axioms=("kE1",))
        assert strict.witnesses == loose.witnesses


def test_constant_functor_breaks_zero_absorption():
    F = MultiFunctor([W2], W2, lambda a: 1, lambda m: FINSET.identity(1), name="const1")
    # spans are connected, so pushouts are still preserved
    assert check_k_exact(F).failed == ["kE1"]


def test_composites_of_generators():
    F = smash(W3)
    H = compose_multi(F, [identity_multi(W3), identity_multi(W3)], verify=True)
    assert table_differences(H, F) == []
    H2 = compose_multi(F, [doubling(W3), smash(W3)])
    assert H2.arity == 3 and check_k_exact(H2).ok
    with pytest.raises(ValueError):
        compose_multi(F, [identity_multi(W3)])


def test_composition_good_on_all_cofibration_tuples():
    F, G = smash(W2), doubling(W2)
    for fbar in itertools.product(W2.cofibrations(), repeat=2):
        assert composition_good_comparison(F, [G, identity_multi(W2)], fbar) is None


def test_sigma_action_laws():
    F = smash(W3)
    assert table_differences(sigma_action(F, (0, 1)), F) == []
    swapped = sigma_action(F, (1, 0))
    assert check_k_exact(swapped).ok
    with pytest.raises(ValueError):
        sigma_action(F, (0, 0))


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(3)), st.permutations(range(3)))
def test_right_action(sigma, tau):
    F = compose_multi(smash(W2), [smash(W2), identity_multi(W2)])
    lhs = sigma_action(F, perm_compose(sigma, tau))
    rhs = sigma_action(sigma_action(F, sigma), tau)
    assert table_differences(lhs, rhs) == []


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4).flatmap(
    lambda sizes: st.tuples(st.just(sizes), st.permutations(range(len(sizes))))))
def test_block_permutation_moves_blocks(case):
    sizes, sigma = case
    perm = block_permutation(sigma, sizes)
    assert sorted(perm) == list(range(sum(sizes)))
    starts = list(itertools.accumulate([0] + list(sizes)))
    for j, size in enumerate(sizes):
        block = list(perm[starts[j]:starts[j] + size])
        if block:
            assert block == list(range(block[0], block[0] + size))


def test_block_sum():
    assert block_sum([(1, 0), (0,), (2, 0, 1)]) == (1, 0, 2, 5, 3, 4)


def test_multicategory_laws():
    rep = check_multicategory_axioms([identity_multi(W2)])
    assert rep.ok
    rep = check_multicategory_axioms([smash(W2), doubling(W2)], max_arity=3)
    assert rep.ok, rep.summary()
    assert all(v > 0 for v in rep.checked.values())


def test_corrupted_composition_is_caught():
    # doubles the result whenever an inner functor is itself a composite
    def bad_compose(F, Gs, **kw):
        H = compose_multi(F, Gs)
        if any("o(" in G.name for G in Gs):
            return compose_multi(doubling(W3), [H])
        return H

    rep = check_multicategory_axioms([smash(W3), doubling(W3)], max_arity=2, compose=bad_compose)
    assert rep.witnesses.get("associativity")
    assert not rep.witnesses.get("unit")


def test_functoriality_of_builtins():
    for F in (smash(W2), doubling(W2), tensor(vect_fp(2, 1), 2)):
        assert functoriality_failures(F) == []
    broken = MultiFunctor([W2], W2, lambda a: a[0], lambda m: FINSET.zero_map(m[0].dom, m[0].cod))
    assert ("identity", (1,)) in functoriality_failures(broken)

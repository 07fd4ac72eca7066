import json

import pytest

from waldcat.cubes import enumerate_good_cubes, morphism_cube
from waldcat.fincat import build_index, identity_functor
from waldcat.multiexact import doubling, smash, table_differences, tensor
from waldcat.pointed import PMap
from waldcat.sdot import enumerate_Sn, k0_presentation
from waldcat.serialize import (
    FormatError,
    cube_from_dict,
    cube_to_dot,
    decode_value,
    dumps,
    encode_value,
    export,
    fincat_from_dict,
    fincat_to_dict,
    functor_from_dict,
    functor_to_dict,
    k0_from_dict,
    multifunctor_from_dict,
    multifunctor_to_dict,
    parse_dot_edges,
    to_dict,
    wald_from_dict,
    wald_to_dict,
)
from waldcat.vect import LinMap
from waldcat.wald import finset_pointed, nstar, vect_fp

W3 = finset_pointed(3)


def roundtrip(doc):
    return json.loads(dumps(doc))


def test_values_round_trip():
    values = [0, 3, "x", None, (1, (2, 3)), PMap(2, 3, (0, 3, 1)), LinMap.from_array(2, [[1], [1]]),
              [PMap(0, 1, (0,)), (0,)], {(0, 1): 2}]
    for v in values:
        assert decode_value(roundtrip({"v": encode_value(v)})["v"]) == v


def test_unknown_tags_are_rejected():
    with pytest.raises(FormatError):
        decode_value({"mystery": 1})
    with pytest.raises(FormatError):
        decode_value({"a": 1, "b": 2})


def test_index_categories_round_trip():
    for shape, n in (("interval", None), ("cube", 2), ("ordinal", 3), ("arrow_ordinal", 2)):
        C = build_index(shape, n)
        D = fincat_from_dict(roundtrip(fincat_to_dict(C)))
        assert D.object_list == C.object_list
        assert D.morphism_list == C.morphism_list
        assert all(D.compose(g, f) == C.compose(g, f) for g, f in C.composable_pairs())


def test_functors_round_trip():
    for S in enumerate_Sn(W3, 2):
        back = functor_from_dict(roundtrip(functor_to_dict(S.X)), target=S.X.target)
        assert back.object_map == S.X.object_map and back.morphism_map == S.X.morphism_map


def test_cubes_round_trip():
    for C in list(enumerate_good_cubes(W3, 2))[:20]:
        assert cube_from_dict(roundtrip(to_dict(C))) == C


def test_builtin_categories_round_trip():
    for W in (W3, nstar(2), vect_fp(2, 2)):
        assert wald_from_dict(roundtrip(wald_to_dict(W))).skeleton() == W.skeleton()


def test_multifunctors_round_trip():
    for F in (smash(W3), doubling(W3), tensor(vect_fp(2, 1))):
        G = multifunctor_from_dict(roundtrip(multifunctor_to_dict(F)))
        assert G.arity == F.arity and table_differences(G, F) == []


def test_k0_round_trip():
    doc = k0_from_dict(roundtrip(to_dict(k0_presentation(W3))))
    assert doc["group"] == "Z" and doc["rank"] == 1 and all(d == 1 for d in doc["invariant_factors"])


def test_square_as_dot():
    sq = next(iter(enumerate_good_cubes(W3, 2)))
    text = cube_to_dot(sq)
    assert text.count("[label=") == 4 + 4
    edges = parse_dot_edges(text)
    assert sorted((a, b) for a, b, _ in edges) == [("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")]
    line = morphism_cube(W3, PMap(1, 2, (0, 2)))
    assert parse_dot_edges(export(line, "dot")) == [("0", "1", repr(PMap(1, 2, (0, 2))))]


def test_index_category_as_dot():
    text = export(build_index("cube", 2), "dot")
    assert len(parse_dot_edges(text)) == 4
    # composites are left out: the interval has one edge, not counting identities
    assert len(parse_dot_edges(export(identity_functor(build_index("interval")), "dot"))) == 1


def test_export_is_deterministic():
    F = smash(W3)
    assert export(F) == export(F)
    assert export(k0_presentation(W3)) == export(k0_presentation(finset_pointed(3)))


def test_format_errors():
    with pytest.raises(FormatError):
        cube_from_dict({"kind": "functor"})
    with pytest.raises(FormatError):
        export(W3, "yaml")
    with pytest.raises(FormatError):
        export(W3, "dot")
    with pytest.raises(FormatError):
        to_dict(object())
    explicit = wald_to_dict(W3)
    del explicit["builtin"]
    with pytest.raises(FormatError):
        wald_from_dict(explicit)

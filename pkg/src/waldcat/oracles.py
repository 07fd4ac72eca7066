"""Slow independent checks for the colimit engine.

Nothing in the engine calls these; they exist so tests and suites can
compare the fast constructions against direct enumeration.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .fincat import (
    Colimit,
    FinCat,
    Functor,
    build_index,
    colimit,
    enumerate_functors,
    full_subcategory,
    product,
    restricted_colimit_cube,
    subcategory,
)
from .pointed import PMap, PointedSets


def cocones(D: Functor, apex) -> Iterator[dict]:
    """Every cocone of ``D`` with vertex ``apex``, by backtracking over legs."""
    T = D.target
    src = D.source
    objs = list(src.object_list)
    pos = {a: i for i, a in enumerate(objs)}
    checks: list[list] = [[] for _ in objs]
    for m in src.morphism_list:
        a, b = src.dom(m), src.cod(m)
        checks[max(pos[a], pos[b])].append((m, a, b))
    legs: dict = {}

    def search(i):
        if i == len(objs):
            yield dict(legs)
            return
        a = objs[i]
        for f in T.hom(D.obj(a), apex):
            legs[a] = f
            if all(T.compose(legs[b], D.mor(m)) == legs[a2] for m, a2, b in checks[i]):
                yield from search(i + 1)
            del legs[a]

    yield from search(0)


def universal_property_failures(D: Functor, col: Colimit, apexes: Sequence) -> list:
    """Check that ``h -> h o legs`` is a bijection ``hom(col, Z) -> cocones(D, Z)`` for each apex."""
    T = D.target
    bad = []
    for Z in apexes:
        found = {}
        for h in T.hom(col.obj, Z):
            key = tuple(T.compose(h, col.legs[a]) for a in D.source.object_list)
            if key in found:
                bad.append(("two factorizations", Z, found[key], h))
            found[key] = h
        wanted = {tuple(c[a] for a in D.source.object_list) for c in cocones(D, Z)}
        if set(found) != wanted:
            bad.append(("cocone count", Z, len(found), len(wanted)))
    return bad


def naive_pointed_colimit(D: Functor) -> Colimit:
    """Colimit in pointed sets by merging classes of the disjoint union until nothing changes."""
    src = D.source
    objs = list(src.object_list)
    elems = [(a, x) for a in objs for x in range(D.obj(a) + 1)]
    cls = {e: frozenset([e]) for e in elems}
    base = frozenset((a, 0) for a in objs)
    for e in base:
        cls[e] = base

    def merge(u, v):
        if cls[u] is cls[v]:
            return False
        joined = cls[u] | cls[v]
        for e in joined:
            cls[e] = joined
        return True

    changed = True
    while changed:
        changed = False
        for m in src.morphism_list:
            a, b = src.dom(m), src.cod(m)
            f = D.mor(m)
            for x in range(D.obj(a) + 1):
                changed |= merge((a, x), (b, f(x)))
    classes = []
    for e in elems:
        if cls[e] not in classes:
            classes.append(cls[e])
    # basepoint class first, the rest in first-seen order
    classes.sort(key=lambda c: c is not cls[(objs[0], 0)])
    label = {c: i for i, c in enumerate(classes)}
    L = len(classes) - 1
    legs = {a: PMap(D.obj(a), L, tuple(label[cls[(a, x)]] for x in range(D.obj(a) + 1))) for a in objs}

    def factor(cocone, apex):
        img = [0] * (L + 1)
        for a in objs:
            for x in range(D.obj(a) + 1):
                img[label[cls[(a, x)]]] = cocone[a](x)
        return PMap(L, apex, tuple(img))

    return Colimit(L, legs, factor)


def compare_with_oracle(D: Functor, apexes: Sequence = (1, 2)) -> list:
    """Engine colimit against the naive one: a canonical iso over the legs, plus the universal property."""
    if not isinstance(D.target, PointedSets):
        raise TypeError("the naive oracle handles pointed sets only")
    T = D.target
    eng = colimit(D)
    ref = naive_pointed_colimit(D)
    bad = []
    if eng.obj != ref.obj:
        return [("sizes differ", eng.obj, ref.obj)]
    phi = ref.factor(eng.legs, eng.obj)
    if not T.is_iso(phi):
        bad.append(("comparison not an iso", phi))
    for a in D.source.object_list:
        if T.compose(phi, ref.legs[a]) != eng.legs[a]:
            bad.append(("comparison does not respect legs", a))
    bad.extend(universal_property_failures(D, eng, apexes))
    return bad


def terminal_slice_comparison(F: Functor, first: FinCat, second: FinCat, terminal):
    """For ``F`` on ``first x second``, the map ``colim(F on first x {terminal}) -> colim F``."""
    T = F.target
    sub = product([first, _point(terminal, second)])
    restricted = Functor(sub, T, {a: F.obj(a) for a in sub.object_list}, {m: F.mor(m) for m in sub.morphism_list})
    small, big = colimit(restricted), colimit(F)
    return small.factor({a: big.legs[a] for a in sub.object_list}, big.obj)


def _point(t, cat: FinCat) -> FinCat:
    ident = cat.identity(t)
    return FinCat([t], [(ident, t, t)], {t: ident}, {(ident, ident): ident}, name=f"{{{t!r}}}")


def small_index_categories(max_objects: int = 4) -> list[FinCat]:
    """A fixed list of index categories with at most ``max_objects`` objects."""
    cats = [build_index("discrete", k) for k in range(1, max_objects + 1)]
    cats += [build_index("interval"), build_index("span"), build_index("cospan"), build_index("parallel")]
    cats += [build_index("ordinal", k) for k in range(2, max_objects)]
    if max_objects >= 4:
        cats.append(build_index("cube", 2))
    return [c for c in cats if len(c.object_list) <= max_objects]


def enumerate_diagrams(index: FinCat, T, max_object) -> Iterator[Functor]:
    """Every diagram of shape ``index`` whose objects are ``0..max_object``."""
    objs = list(range(max_object + 1))
    return enumerate_functors(index, T, lambda a: objs)


def all_small_diagrams(max_objects: int, T, max_object) -> Iterator[Functor]:
    for C in small_index_categories(max_objects):
        yield from enumerate_diagrams(C, T, max_object)


# --- covers ------------------------------------------------------------------------------------


def generated_subcategory(C: FinCat, gens) -> FinCat:
    """Smallest subcategory containing ``gens``."""
    keep = set(gens)
    keep |= {C.identity(C.dom(m)) for m in gens} | {C.identity(C.cod(m)) for m in gens}
    grew = True
    while grew:
        grew = False
        for f in list(keep):
            for g in list(keep):
                if C.dom(g) == C.cod(f):
                    h = C.compose(g, f)
                    if h not in keep:
                        keep.add(h)
                        grew = True
    return subcategory(C, keep)


def candidate_subcategories(C: FinCat, exhaustive_up_to: int = 4) -> list[FinCat]:
    """Full subcategories and one-morphism subcategories for small ``C``; for larger ``C``,
    full subcategories on the complement of one object and on pairs of objects."""
    objs = C.object_list
    out = []
    seen = set()

    def add(S):
        key = frozenset(S.morphism_list)
        if key and key not in seen:
            seen.add(key)
            out.append(S)

    if len(objs) <= exhaustive_up_to:
        for r in range(1, len(objs) + 1):
            for sub in itertools.combinations(objs, r):
                add(full_subcategory(C, sub))
    else:
        add(C)
        for a in objs:
            add(full_subcategory(C, [b for b in objs if b != a]))
        for a, b in itertools.combinations(objs, 2):
            add(full_subcategory(C, [a, b]))
    for m in C.morphism_list:
        if not C.is_identity(m):
            add(generated_subcategory(C, [m]))
    return out


def covers(C: FinCat, n: int, candidates: Sequence[FinCat] | None = None) -> Iterator[tuple]:
    """Unordered n-tuples (with repetition) of candidate subcategories whose union is ``C``."""
    cands = list(candidates) if candidates is not None else candidate_subcategories(C)
    total = set(C.morphism_list)
    for combo in itertools.combinations_with_replacement(range(len(cands)), n):
        covered = set()
        for i in combo:
            covered |= set(cands[i].morphism_list)
        if covered == total:
            yield tuple(cands[i] for i in combo)


def restricted_cube_failures(F: Functor, cover: Sequence[FinCat], wald) -> list:
    cube = restricted_colimit_cube(F, cover, wald)
    from .cubes import southern_arrow

    arrow = southern_arrow(cube, strict=False)
    return [] if wald.base.is_iso(arrow) else [("southern arrow not an iso", arrow)]

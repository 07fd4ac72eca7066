"""Finite categories, functors, natural transformations and the colimit engine.

Two kinds of category live here. A :class:`FinCat` is an explicit finite
category (object list, morphism list, composition) and serves as the index
category of every diagram. A :class:`TargetCategory` is an oracle interface
to a possibly infinite category: objects and morphisms are opaque hashable
values, and the category exposes composition, a zero object, finite
coproducts and coequalizers. Colimits of finite diagrams are then computed
as the coequalizer of the source and target maps

    coprod_{f} dom f  ==>  coprod_{A} A

indexed over all morphisms ``f`` and all objects ``A`` of the index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import CAPS, NotAFunctorError, SizeCapError, check_cap


class Category:
    """Minimal category protocol shared by finite and oracle categories."""

    name = "category"

    def objects(self, bound: int | None = None) -> list:
        raise NotImplementedError

    def hom(self, a, b) -> list:
        raise NotImplementedError

    def identity(self, a):
        raise NotImplementedError

    def compose(self, g, f):
        """Return ``g o f``."""
        raise NotImplementedError

    def dom(self, f):
        raise NotImplementedError

    def cod(self, f):
        raise NotImplementedError

    def is_identity(self, f) -> bool:
        return self.dom(f) == self.cod(f) and f == self.identity(self.dom(f))

    def inverse(self, f):
        """Two-sided inverse of ``f`` or ``None``."""
        a, b = self.dom(f), self.cod(f)
        for g in self.hom(b, a):
            if self.compose(g, f) == self.identity(a) and self.compose(f, g) == self.identity(b):
                return g
        return None

    def is_iso(self, f) -> bool:
        return self.inverse(f) is not None

    def isos(self, a, b) -> list:
        return [f for f in self.hom(a, b) if self.is_iso(f)]

    def iso_over(self, s1, s2):
        """An isomorphism ``phi: dom s1 -> dom s2`` with ``s2 o phi == s1``, or ``None``."""
        if self.cod(s1) != self.cod(s2):
            return None
        for phi in self.isos(self.dom(s1), self.dom(s2)):
            if self.compose(s2, phi) == s1:
                return phi
        return None


class FinCat(Category):
    """An explicit finite category.

    ``morphisms`` is a sequence of ``(id, dom, cod)`` triples. ``compose`` is
    either a mapping ``(g, f) -> g o f`` over composable pairs or a callable
    computing the same; large product categories use the callable form and
    materialize :attr:`compose_table` only on request.
    """

    def __init__(
        self,
        objects: Sequence[Hashable],
        morphisms: Sequence[tuple[Hashable, Hashable, Hashable]],
        identities: Mapping[Hashable, Hashable],
        compose: Mapping | Callable,
        name: str = "",
    ):
        check_cap("objects", len(objects), CAPS.max_objects)
        self.name = name or "FinCat"
        self.object_list = tuple(objects)
        self.morphism_list = tuple(m for m, _, _ in morphisms)
        self._dom = {m: d for m, d, _ in morphisms}
        self._cod = {m: c for m, _, c in morphisms}
        self.identities = dict(identities)
        self._compose = compose
        self._hom: dict[tuple, list] = {}
        for m, d, c in morphisms:
            self._hom.setdefault((d, c), []).append(m)
        self.object_index = {a: i for i, a in enumerate(self.object_list)}
        self.morphism_index = {m: i for i, m in enumerate(self.morphism_list)}
        self._identity_set = frozenset(self.identities.values())
        self.key = (self.object_list, self.morphism_list)

    def __repr__(self) -> str:
        return f"FinCat({self.name!r}, {len(self.object_list)} objects, {len(self.morphism_list)} morphisms)"

    def __eq__(self, other) -> bool:
        return isinstance(other, FinCat) and (self is other or self.key == other.key)

    def __hash__(self) -> int:
        return hash(self.key)

    def objects(self, bound=None):
        return list(self.object_list)

    @property
    def morphisms(self) -> tuple:
        return self.morphism_list

    def hom(self, a, b):
        return self._hom.get((a, b), [])

    def identity(self, a):
        return self.identities[a]

    def is_identity(self, f) -> bool:
        return f in self._identity_set

    def dom(self, f):
        return self._dom[f]

    def cod(self, f):
        return self._cod[f]

    def compose(self, g, f):
        if self._cod[f] != self._dom[g]:
            raise ValueError(f"{g!r} o {f!r} is not composable")
        if callable(self._compose):
            return self._compose(g, f)
        return self._compose[(g, f)]

    def composable_pairs(self) -> Iterator[tuple]:
        for f in self.morphism_list:
            for g_list in (self._hom.get((self._cod[f], c), []) for c in self.object_list):
                for g in g_list:
                    yield g, f

    @property
    def compose_table(self) -> dict:
        pairs = list(self.composable_pairs())
        check_cap("composable pairs", len(pairs), CAPS.max_enumeration)
        return {(g, f): self.compose(g, f) for g, f in pairs}

    def validate(self) -> list[str]:
        """Return a list of violated category axioms (empty when valid)."""
        problems = []
        for a in self.object_list:
            i = self.identities.get(a)
            if i is None or self._dom.get(i) != a or self._cod.get(i) != a:
                problems.append(f"bad identity at {a!r}")
        if problems:
            return problems
        for f in self.morphism_list:
            d, c = self._dom[f], self._cod[f]
            if self.compose(f, self.identities[d]) != f or self.compose(self.identities[c], f) != f:
                problems.append(f"identity law fails for {f!r}")
        for g, f in self.composable_pairs():
            h = self.compose(g, f)
            if h not in self._dom or self._dom[h] != self._dom[f] or self._cod[h] != self._cod[g]:
                problems.append(f"{g!r} o {f!r} = {h!r} is not a listed morphism with the right ends")
        for g, f in self.composable_pairs():
            gf = self.compose(g, f)
            for k in self._hom_from(self._cod[g]):
                if self.compose(k, gf) != self.compose(self.compose(k, g), f):
                    problems.append(f"associativity fails for ({k!r}, {g!r}, {f!r})")
        return problems

    def _hom_from(self, a) -> list:
        return [m for c in self.object_list for m in self._hom.get((a, c), [])]


def poset(elements: Sequence, leq: Callable[[Any, Any], bool], name: str = "") -> FinCat:
    """The finite category of a partial order; the morphism ``a <= b`` is ``(a, b)``."""
    morphisms = [((a, b), a, b) for a in elements for b in elements if leq(a, b)]
    return FinCat(
        elements,
        morphisms,
        {a: (a, a) for a in elements},
        lambda g, f: (f[0], g[1]),
        name=name,
    )


def product(categories: Sequence[FinCat], name: str = "") -> FinCat:
    """Cartesian product; objects and morphisms are tuples of components."""
    cats = list(categories)
    total = 1
    for c in cats:
        total *= len(c.object_list)
    check_cap("product objects", total, CAPS.max_objects)
    objects = list(itertools.product(*(c.object_list for c in cats)))
    morphisms = [
        (tuple(ms), tuple(c.dom(m) for c, m in zip(cats, ms)), tuple(c.cod(m) for c, m in zip(cats, ms)))
        for ms in itertools.product(*(c.morphism_list for c in cats))
    ]
    identities = {a: tuple(c.identity(x) for c, x in zip(cats, a)) for a in objects}

    def comp(g, f):
        return tuple(c.compose(gi, fi) for c, gi, fi in zip(cats, g, f))

    return FinCat(objects, morphisms, identities, comp, name=name or " x ".join(c.name for c in cats))


def build_index(shape: str, n: int | None = None, factors: Sequence[FinCat] = ()) -> FinCat:
    """Build a named index category.

    Shapes: ``interval``, ``cube`` (n), ``ordinal`` (n), ``arrow_ordinal`` (n),
    ``product`` (factors), plus the small helpers ``discrete`` (n), ``span``,
    ``cospan`` and ``parallel``.
    """
    if n is not None and n < 0:
        raise ValueError("n must be non-negative")
    if shape == "interval":
        return poset([0, 1], lambda a, b: a <= b, name="I")
    if shape == "cube":
        check_cap("cube objects", 2 ** n, CAPS.max_objects)
        verts = list(itertools.product((0, 1), repeat=n))
        return poset(verts, lambda a, b: all(x <= y for x, y in zip(a, b)), name=f"I^{n}")
    if shape == "ordinal":
        return poset(list(range(n + 1)), lambda a, b: a <= b, name=f"<{n}>")
    if shape == "arrow_ordinal":
        pairs = [(j, i) for j in range(n + 1) for i in range(j, n + 1)]
        check_cap("Ar objects", len(pairs), CAPS.max_objects)
        return poset(pairs, lambda a, b: a[0] <= b[0] and a[1] <= b[1], name=f"Ar<{n}>")
    if shape == "product":
        return product(factors)
    if shape == "discrete":
        objs = list(range(n))
        return poset(objs, lambda a, b: a == b, name=f"discrete({n})")
    if shape == "span":
        rel = {("a", "b"), ("a", "c")}
        return poset(["a", "b", "c"], lambda x, y: x == y or (x, y) in rel, name="span")
    if shape == "cospan":
        rel = {("b", "a"), ("c", "a")}
        return poset(["b", "c", "a"], lambda x, y: x == y or (x, y) in rel, name="cospan")
    if shape == "parallel":
        return FinCat(
            [0, 1],
            [("id0", 0, 0), ("id1", 1, 1), ("f", 0, 1), ("g", 0, 1)],
            {0: "id0", 1: "id1"},
            {("id0", "id0"): "id0", ("id1", "id1"): "id1", ("f", "id0"): "f", ("g", "id0"): "g",
             ("id1", "f"): "f", ("id1", "g"): "g"},
            name="parallel",
        )
    raise ValueError(f"unknown index shape {shape!r}")


def subcategory(cat: FinCat, morphisms: Iterable, name: str = "") -> FinCat:
    """The subcategory on a morphism-id subset; closure is checked."""
    keep = set(morphisms)
    for m in keep:
        if m not in cat.morphism_index:
            raise ValueError(f"{m!r} is not a morphism of {cat.name}")
    objs = [a for a in cat.object_list if cat.identity(a) in keep]
    obj_set = set(objs)
    for m in keep:
        if cat.dom(m) not in obj_set or cat.cod(m) not in obj_set:
            raise ValueError(f"subset is missing an identity at an end of {m!r}")
    for f in keep:
        for g in keep:
            if cat.dom(g) == cat.cod(f) and cat.compose(g, f) not in keep:
                raise ValueError(f"subset not closed under composition: {g!r} o {f!r}")
    mors = [(m, cat.dom(m), cat.cod(m)) for m in cat.morphism_list if m in keep]
    return FinCat(objs, mors, {a: cat.identity(a) for a in objs}, cat.compose, name=name or f"sub({cat.name})")


def full_subcategory(cat: FinCat, objects: Iterable, name: str = "") -> FinCat:
    objs = set(objects)
    return subcategory(cat, [m for m in cat.morphism_list if cat.dom(m) in objs and cat.cod(m) in objs], name)


def intersect(cat: FinCat, subs: Sequence[FinCat]) -> FinCat:
    keep = set(cat.morphism_list)
    for s in subs:
        keep &= set(s.morphism_list)
    return subcategory(cat, keep, name="cap(" + ",".join(s.name for s in subs) + ")")


class Functor:
    """A functor out of a finite category, stored as total tables."""

    def __init__(self, source: FinCat, target: Category, object_map: Mapping, morphism_map: Mapping, name: str = ""):
        try:
            self._obj = tuple(object_map[a] for a in source.object_list)
            self._mor = tuple(morphism_map[m] for m in source.morphism_list)
        except KeyError as exc:
            raise NotAFunctorError(f"table not total: missing {exc.args[0]!r}") from None
        self.source = source
        self.target = target
        self.name = name
        self._hash = hash((source.key, self._obj, self._mor))

    def obj(self, a):
        return self._obj[self.source.object_index[a]]

    def mor(self, m):
        return self._mor[self.source.morphism_index[m]]

    @property
    def object_map(self) -> dict:
        return dict(zip(self.source.object_list, self._obj))

    @property
    def morphism_map(self) -> dict:
        return dict(zip(self.source.morphism_list, self._mor))

    @property
    def tables(self) -> tuple:
        return self._obj, self._mor

    def restrict(self, sub: FinCat) -> "Functor":
        return Functor(sub, self.target, {a: self.obj(a) for a in sub.object_list},
                       {m: self.mor(m) for m in sub.morphism_list}, name=self.name)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Functor)
            and self._hash == other._hash
            and self.source == other.source
            and self._obj == other._obj
            and self._mor == other._mor
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        label = self.name or "Functor"
        return f"{label}({dict(zip(self.source.object_list, self._obj))})"


def identity_functor(cat: FinCat) -> Functor:
    return Functor(cat, cat, {a: a for a in cat.object_list}, {m: m for m in cat.morphism_list}, name="id")


class NatTrans:
    """A natural transformation between two functors with a common finite source."""

    def __init__(self, source: Functor, target: Functor, components: Mapping):
        if source.source != target.source:
            raise ValueError("functors have different sources")
        try:
            self._comp = tuple(components[a] for a in source.source.object_list)
        except KeyError as exc:
            raise NotAFunctorError(f"missing component at {exc.args[0]!r}") from None
        self.source = source
        self.target = target
        self._hash = hash((source, target, self._comp))

    def component(self, a):
        return self._comp[self.source.source.object_index[a]]

    @property
    def components(self) -> dict:
        return dict(zip(self.source.source.object_list, self._comp))

    def naturality_violations(self) -> list:
        cat, tgt = self.source.source, self.source.target
        bad = []
        for m in cat.morphism_list:
            a, b = cat.dom(m), cat.cod(m)
            lhs = tgt.compose(self.component(b), self.source.mor(m))
            rhs = tgt.compose(self.target.mor(m), self.component(a))
            if lhs != rhs:
                bad.append(m)
        return bad

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NatTrans)
            and self._hash == other._hash
            and self._comp == other._comp
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"NatTrans({self.components})"


@dataclass
class FunctorReport:
    ok: bool
    identity_violations: list = field(default_factory=list)
    end_violations: list = field(default_factory=list)
    composition_violations: list = field(default_factory=list)


def check_functor(F: Functor) -> FunctorReport:
    """Exhaustively check identity and composition laws of ``F``."""
    src, tgt = F.source, F.target
    ends, idents, comps = [], [], []
    for m in src.morphism_list:
        fm = F.mor(m)
        if tgt.dom(fm) != F.obj(src.dom(m)) or tgt.cod(fm) != F.obj(src.cod(m)):
            ends.append(m)
    for a in src.object_list:
        if F.mor(src.identity(a)) != tgt.identity(F.obj(a)):
            idents.append(a)
    if not ends:
        for g, f in src.composable_pairs():
            if F.mor(src.compose(g, f)) != tgt.compose(F.mor(g), F.mor(f)):
                comps.append((g, f))
    return FunctorReport(not (ends or idents or comps), idents, ends, comps)


def _morphism_order(src: FinCat) -> tuple[list, dict]:
    """Order non-identity morphisms for backtracking.

    Returns the order and, for morphisms whose value is forced by an earlier
    factorization, the factor pair used.
    """
    non_id = [m for m in src.morphism_list if not src.is_identity(m)]
    factorizations: dict = {m: [] for m in non_id}
    for g, f in src.composable_pairs():
        if src.is_identity(g) or src.is_identity(f):
            continue
        h = src.compose(g, f)
        if h in factorizations:
            factorizations[h].append((g, f))
    order = [m for m in non_id if not factorizations[m]]
    placed = set(order)
    forced = {}
    remaining = [m for m in non_id if m not in placed]
    while remaining:
        for m in remaining:
            pair = next(((g, f) for g, f in factorizations[m] if g in placed and f in placed), None)
            if pair is not None:
                forced[m] = pair
                break
        else:
            m = remaining[0]
        order.append(m)
        placed.add(m)
        remaining.remove(m)
    return order, forced


def enumerate_functors(
    source: FinCat,
    target: Category,
    object_candidates: Callable[[Hashable], Sequence] | Mapping,
    object_filter: Callable[[dict], bool] | None = None,
    morphism_candidates: Callable[[Hashable, Any, Any], Sequence] | None = None,
) -> Iterator[Functor]:
    """All functors ``source -> target`` with objects drawn from the candidates.

    Morphism values are searched by backtracking; values of composites are
    forced by earlier factors and every composition relation is checked as
    soon as its participants are assigned.
    """
    cands = object_candidates if callable(object_candidates) else object_candidates.__getitem__
    order, forced = _morphism_order(source)
    pos = {m: i for i, m in enumerate(order)}
    checks: list[list] = [[] for _ in order]
    for g, f in source.composable_pairs():
        if source.is_identity(g) or source.is_identity(f):
            continue
        h = source.compose(g, f)
        last = max(pos[g], pos[f], pos.get(h, -1))
        checks[last].append((g, f, h))
    hom_of = morphism_candidates or (lambda m, x, y: target.hom(x, y))

    for values in itertools.product(*(list(cands(a)) for a in source.object_list)):
        omap = dict(zip(source.object_list, values))
        if object_filter is not None and not object_filter(omap):
            continue
        mmap = {source.identity(a): target.identity(omap[a]) for a in source.object_list}

        def ok_at(i: int) -> bool:
            for g, f, h in checks[i]:
                if target.compose(mmap[g], mmap[f]) != mmap[h]:
                    return False
            return True

        def search(i: int) -> Iterator[dict]:
            if i == len(order):
                yield mmap
                return
            m = order[i]
            if m in forced:
                g, f = forced[m]
                options = [target.compose(mmap[g], mmap[f])]
            else:
                options = hom_of(m, omap[source.dom(m)], omap[source.cod(m)])
            for v in options:
                mmap[m] = v
                if ok_at(i):
                    yield from search(i + 1)
            mmap.pop(m, None)

        for table in search(0):
            yield Functor(source, target, omap, table)


# --- the colimit engine ------------------------------------------------------


@dataclass
class Colimit:
    """A colimit object, its cocone, and its universal factorization.

    ``factor(cocone, apex)`` returns the unique morphism ``obj -> apex``
    through which a cocone (mapping index objects to morphisms into ``apex``)
    factors.
    """

    obj: Any
    legs: dict
    _factor: Callable[[Mapping, Any], Any]

    def factor(self, cocone: Mapping, apex):
        return self._factor(cocone, apex)


@dataclass
class Pushout:
    """The pushout of ``B <-f- A -g-> C`` with legs into the pushout object."""

    obj: Any
    leg_b: Any
    leg_c: Any
    _factor: Callable[[Any, Any], Any]

    def factor(self, hb, hc):
        """The unique map out of the pushout restricting to ``hb`` and ``hc``."""
        return self._factor(hb, hc)


class TargetCategory(Category):
    """Oracle interface for the categories diagrams land in.

    Subclasses supply a chosen zero object, coproducts, coequalizers,
    copairing and sections of coequalizer maps; :meth:`pushout` and
    :meth:`colimit` are derived from those.
    """

    zero: Any = None

    def zero_map(self, a, b):
        raise NotImplementedError

    def coproduct(self, objs: Sequence) -> tuple[Any, list]:
        raise NotImplementedError

    def copair(self, maps: Sequence, cod):
        """The map ``coproduct(doms) -> cod`` restricting to ``maps``."""
        raise NotImplementedError

    def coequalizer(self, f, g) -> tuple[Any, Any]:
        raise NotImplementedError

    def section(self, q):
        """A right inverse of a coequalizer map."""
        raise NotImplementedError

    def is_zero_object(self, a) -> bool:
        return self.identity(a) == self.compose(self.zero_map(self.zero, a), self.zero_map(a, self.zero))

    def pushout(self, f, g) -> Pushout:
        cache = self.__dict__.setdefault("_pushout_cache", {})
        hit = cache.get((f, g))
        if hit is None:
            hit = pushout(self, f, g)
            if len(cache) < 200_000:
                cache[(f, g)] = hit
        return hit

    def colimit(self, D: Functor) -> Colimit:
        return colimit(D)


def colimit(D: Functor) -> Colimit:
    """Colimit of a finite diagram as a coequalizer of two coproduct maps."""
    T = D.target
    src = D.source
    objs = src.object_list
    idx = src.object_index
    total, inj = T.coproduct([D.obj(a) for a in objs])
    ms = src.morphism_list
    s = T.copair([inj[idx[src.dom(m)]] for m in ms], total)
    t = T.copair([T.compose(inj[idx[src.cod(m)]], D.mor(m)) for m in ms], total)
    L, q = T.coequalizer(s, t)
    legs = {a: T.compose(q, inj[i]) for i, a in enumerate(objs)}
    sec = T.section(q)

    def factor(cocone, apex):
        h = T.copair([cocone[a] for a in objs], apex)
        return T.compose(h, sec)

    return Colimit(L, legs, factor)


_SPAN = None


def _span_shape() -> FinCat:
    global _SPAN
    if _SPAN is None:
        _SPAN = build_index("span")
    return _SPAN


def pushout(T: TargetCategory, f, g) -> Pushout:
    """Pushout of ``B <-f- A -g-> C`` computed as a colimit over the span shape."""
    if T.dom(f) != T.dom(g):
        raise ValueError("span legs have different domains")
    span = _span_shape()
    a, b, c = T.dom(f), T.cod(f), T.cod(g)
    D = Functor(
        span,
        T,
        {"a": a, "b": b, "c": c},
        {("a", "a"): T.identity(a), ("b", "b"): T.identity(b), ("c", "c"): T.identity(c),
         ("a", "b"): f, ("a", "c"): g},
    )
    col = colimit(D)

    def factor(hb, hc):
        return col.factor({"a": T.compose(hb, f), "b": hb, "c": hc}, T.cod(hb))

    return Pushout(col.obj, col.legs["b"], col.legs["c"], factor)


def diagram(source: FinCat, target: Category, object_map: Mapping, morphism_map: Mapping) -> Functor:
    """Build a functor filling in identity morphisms automatically."""
    mm = dict(morphism_map)
    for a in source.object_list:
        mm.setdefault(source.identity(a), target.identity(object_map[a]))
    return Functor(source, target, object_map, mm)


def restricted_colimit_cube(F: Functor, covers: Sequence[FinCat], wald, check_union: bool = True):
    """The cube of colimits of ``F`` over intersections of a cover.

    Vertex ``e`` is the colimit of ``F`` restricted to the intersection of the
    covers with ``e_i = 0``; the terminal vertex is the colimit of ``F``.
    """
    from .cubes import Cube

    src = F.source
    n = len(covers)
    if n == 0:
        raise ValueError("need at least one cover")
    if check_union:
        covered = set()
        for c in covers:
            covered |= set(c.morphism_list)
        if covered != set(src.morphism_list):
            raise ValueError("covers do not exhaust the index category")
    T = F.target
    cols: dict = {}
    subs: dict = {}
    for eps in itertools.product((0, 1), repeat=n):
        if all(eps):
            sub = src
        else:
            sub = intersect(src, [covers[i] for i in range(n) if eps[i] == 0])
        subs[eps] = sub
        cols[eps] = colimit(F.restrict(sub))
    vertices = {eps: cols[eps].obj for eps in cols}
    edges = {}
    for eps in cols:
        for k in range(n):
            if eps[k] == 0:
                up = eps[:k] + (1,) + eps[k + 1:]
                big = cols[up]
                edges[(eps, k)] = cols[eps].factor({a: big.legs[a] for a in subs[eps].object_list}, big.obj)
    return Cube(n, wald, vertices, edges)

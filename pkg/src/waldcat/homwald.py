"""Internal hom categories of multiexact functors, evaluation and currying.

Everything here lives on bounded skeleta: a hom object is the finite
category of k-exact functors from the product of the source skeleta into
the target skeleton, with natural transformations as morphisms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .cubes import arrow_cube, is_good
from .errors import HypothesisError, NotExactError
from .fincat import FinCat, Functor, NatTrans, enumerate_functors, product
from .functorcat import FunctorCategory
from .multiexact import (
    MultiFunctor,
    block_sum,
    box_cube,
    check_k_exact,
    compose_multi,
    identity_multi,
    sigma_action,
)
from .wald import MAX_WITNESSES, WaldCat, skeleton_category


def source_index(sources: Sequence[WaldCat], bound: int | None = None) -> FinCat:
    """The product of the bounded source skeleta; objects are tuples."""
    return product([skeleton_category(W, bound) for W in sources], name=" x ".join(W.name for W in sources) or "pt")


def tabulate(F: MultiFunctor, index: FinCat | None = None) -> Functor:
    """Materialize ``F`` on the product of its source skeleta."""
    index = index or source_index(F.sources)
    return Functor(
        index,
        F.target.base,
        {a: F.obj(a) for a in index.object_list},
        {m: F.mor(m) for m in index.morphism_list},
        name=F.name,
    )


def _candidates(sources, target, bound):
    objs = target.skeleton(bound)
    zero = target.zero

    def cands(a):
        # zero absorption fixes every tuple with a zero entry
        if any(W.base.is_zero_object(x) for W, x in zip(sources, a)):
            return [zero]
        return objs

    return cands


def enumerate_k_exact(
    sources: Sequence[WaldCat], target: WaldCat, bound: int | None = None, brute_force: bool = False
) -> list[MultiFunctor]:
    """All k-exact functors between the bounded skeleta, in canonical order.

    ``brute_force`` skips the zero-absorption pruning; it is the reference
    search used to test the pruned one.
    """
    sources = list(sources)
    if not sources:
        return [MultiFunctor.constant(target, o) for o in target.skeleton(bound)]
    index = source_index(sources, bound)
    cands = (lambda a: target.skeleton(bound)) if brute_force else _candidates(sources, target, bound)
    found = []
    for T in enumerate_functors(index, target.base, cands):
        F = MultiFunctor.from_functor(T, sources, target, name=f"F{len(found)}")
        if check_k_exact(F, bound=bound).ok:
            found.append(F)
    found.sort(key=lambda F: repr(F.table.tables))
    for i, F in enumerate(found):
        F.name = f"F{i}"
    return found


def enumerate_multifunctors(sources: Sequence[WaldCat], target: WaldCat, bound: int | None = None):
    """Every functor from the product of the bounded source skeleta into the target skeleton."""
    index = source_index(list(sources), bound)
    objs = target.skeleton(bound)
    for i, T in enumerate(enumerate_functors(index, target.base, lambda a: objs)):
        yield MultiFunctor.from_functor(T, list(sources), target, name=f"G{i}")


class HomWaldCat(WaldCat):
    """Functors and natural transformations with levelwise weak equivalences.

    A transformation ``alpha: F => G`` is a cofibration when every cube
    ``[fbar]_F => [fbar]_G`` over a tuple of cofibrations is good.
    """

    def __init__(self, sources: Sequence[WaldCat], target: WaldCat, functors: Sequence[MultiFunctor],
                 bound: int | None = None, name: str = ""):
        self.sources = list(sources)
        self.target = target
        self.index = source_index(self.sources, bound)
        self.source_bound = bound
        self.functors = list(functors)
        self.tables = [F.table if F.table is not None else tabulate(F, self.index) for F in self.functors]
        base = FunctorCategory(self.index, target.base, self.tables)
        self._cofib_tuples = list(itertools.product(*(W.cofibrations(bound) for W in self.sources)))
        label = name or f"Hom({', '.join(W.name for W in self.sources)}; {target.name})"
        super().__init__(base, self._is_good_transformation, self._is_levelwise_weq, name=label,
                         tags={"kind": "hom", "sources": [W.tags for W in self.sources], "target": target.tags})
        # the zero functor of the table category must be the enumerated one
        if self.tables and base.zero not in self.tables:
            raise NotExactError("the constant zero functor is missing from the enumerated objects")

    def as_multi(self, T: Functor) -> MultiFunctor:
        return MultiFunctor.from_functor(T, self.sources, self.target)

    def _is_levelwise_weq(self, alpha: NatTrans) -> bool:
        return all(self.target.is_weq(alpha.component(a)) for a in self.index.object_list)

    def cofibration_witness(self, alpha: NatTrans):
        """``None`` for a cofibration, else a tuple of cofibrations whose cube is not good."""
        F, G = self.as_multi(alpha.source), self.as_multi(alpha.target)
        for fs in self._cofib_tuples:
            C = self.transformation_cube(fs, F, G, alpha)
            rep = is_good(C)
            if not rep.good:
                return fs, rep.face, rep.reason
        return None

    def _is_good_transformation(self, alpha: NatTrans) -> bool:
        return self.cofibration_witness(alpha) is None

    def transformation_cube(self, fs, F: MultiFunctor, G: MultiFunctor, alpha: NatTrans):
        """The cube ``[fs]_F => [fs]_G`` with ``alpha`` along the last axis."""
        CF, CG = box_cube(fs, F), box_cube(fs, G)
        ends = [(W.base.dom(f), W.base.cod(f)) for W, f in zip(self.sources, fs)]
        comps = {eps: alpha.component(tuple(ends[i][e] for i, e in enumerate(eps))) for eps in CF.vertices}
        return arrow_cube(CF, CG, comps)


def build_hom(sources: Sequence[WaldCat], target: WaldCat, bound: int | None = None, verify: bool = False) -> HomWaldCat:
    """The internal hom of k-exact functors; ``verify`` runs the axiom checker."""
    H = HomWaldCat(sources, target, enumerate_k_exact(sources, target, bound), bound)
    if verify:
        from .wald import check_wald_axioms

        rep = check_wald_axioms(H)
        if not rep.ok:
            raise NotExactError(rep.summary())
    return H


# --- evaluation and currying ----------------------------------------------------------


def evaluation(hom: HomWaldCat) -> MultiFunctor:
    """``(A_1, ..., A_k, F) -> F(A_1, ..., A_k)`` of arity ``k + 1``."""
    T = hom.target.base
    index = hom.index

    def obj(a):
        return a[-1].obj(tuple(a[:-1]))

    def mor(m):
        alpha = m[-1]
        fs = tuple(m[:-1])
        src = tuple(W.base.dom(f) for W, f in zip(hom.sources, fs))
        return T.compose(alpha.target.mor(fs), alpha.component(src))

    def domain(a):
        return tuple(a[:-1]) in index.object_index

    return MultiFunctor(hom.sources + [hom], hom.target, obj, mor, name=f"ev[{hom.name}]", domain=domain)


def uncurry(G: MultiFunctor, hom: HomWaldCat) -> MultiFunctor:
    """``ev o (1, ..., 1, G)``: inputs are the hom's sources followed by ``G``'s."""
    if G.target is not hom:
        raise ValueError("G does not land in the given hom category")
    ev = evaluation(hom)
    H = compose_multi(ev, [identity_multi(W) for W in hom.sources] + [G])
    H.name = f"uncurry({G.name})"
    return H


def curry(F: MultiFunctor, hom: HomWaldCat, k: int | None = None) -> MultiFunctor:
    """Partial application: the first ``k`` inputs of ``F`` become the hom's variables.

    The result takes the remaining inputs and lands in ``hom``; every partial
    application must be an object of ``hom``.
    """
    k = len(hom.sources) if k is None else k
    if not 0 <= k <= F.arity:
        raise ValueError(f"split {k} out of range for arity {F.arity}")
    if k != len(hom.sources):
        raise ValueError("split does not match the hom category")
    index = hom.index
    known = set(hom.tables)
    rest = F.sources[k:]

    def obj(c):
        T = Functor(index, hom.target.base, {a: F.obj(a + tuple(c)) for a in index.object_list},
                    {m: F.mor(m + tuple(W.base.identity(x) for W, x in zip(rest, c))) for m in index.morphism_list})
        if T not in known:
            raise NotExactError(f"partial application at {c} is not an object of {hom.name}")
        return T

    def mor(ms):
        src = tuple(W.base.dom(f) for W, f in zip(rest, ms))
        tgt = tuple(W.base.cod(f) for W, f in zip(rest, ms))
        comps = {a: F.mor(tuple(Wa.base.identity(x) for Wa, x in zip(hom.sources, a)) + tuple(ms)) for a in index.object_list}
        return NatTrans(obj(src), obj(tgt), comps)

    return MultiFunctor(rest, hom, obj, mor, name=f"curry({F.name})",
                        domain=lambda c: all(F.defined_on(a + tuple(c)) for a in index.object_list))


def hom_action(hom: HomWaldCat, sigma: Sequence[int], hom_sigma: HomWaldCat) -> MultiFunctor:
    """The exact functor ``F -> F.sigma`` from ``hom`` to the hom with permuted sources."""
    idx = hom_sigma.index

    def reorder(a):
        out = [None] * len(a)
        for j, s in enumerate(sigma):
            out[s] = a[j]
        return tuple(out)

    def obj(a):
        (T,) = a
        return Functor(idx, T.target, {b: T.obj(reorder(b)) for b in idx.object_list},
                       {m: T.mor(reorder(m)) for m in idx.morphism_list})

    def mor(m):
        (alpha,) = m
        return NatTrans(obj((alpha.source,)), obj((alpha.target,)),
                        {b: alpha.component(reorder(b)) for b in idx.object_list})

    return MultiFunctor([hom], hom_sigma, obj, mor, name=f"act{tuple(sigma)}")


# --- closed structure ------------------------------------------------------------------------


@dataclass
class ClosedReport:
    witnesses: dict = field(default_factory=dict)
    checked: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.witnesses.values())

    def _add(self, law, w):
        lst = self.witnesses.setdefault(law, [])
        if len(lst) < MAX_WITNESSES:
            lst.append(w)

    def summary(self) -> str:
        return " ".join(f"{k}:{'FAIL' if self.witnesses.get(k) else 'ok'}({v})" for k, v in self.checked.items())


def check_closed_axioms(
    sources: Sequence[WaldCat],
    middles: Sequence[WaldCat],
    target: WaldCat,
    bound: int | None = None,
) -> ClosedReport:
    """Check that ``f -> ev o (1, ..., 1, f)`` is a bijection and is equivariant.

    ``sources`` are the hom's variables (the A's), ``middles`` the inputs of
    the functors into the hom (the C's).
    """
    rep = ClosedReport({}, {"CM1": 0, "round_trip": 0, "CM2": 0})
    sources, middles = list(sources), list(middles)
    k, l = len(sources), len(middles)
    hom = build_hom(sources, target, bound)
    into_hom = enumerate_k_exact(middles, hom, bound)
    combined = enumerate_k_exact(sources + middles, target, bound)
    index = source_index(sources + middles, bound)
    images = {}
    for f in into_hom:
        rep.checked["CM1"] += 1
        g = uncurry(f, hom)
        T = tabulate(g, index)
        if T in images:
            rep._add("CM1", ("not injective", f.name, images[T]))
        images[T] = f.name
        rep.checked["round_trip"] += 1
        back = curry(MultiFunctor.from_functor(T, sources + middles, target), hom, k)
        if tabulate(back, source_index(middles, bound)) != tabulate(f, source_index(middles, bound)):
            rep._add("round_trip", ("curry(uncurry(f)) != f", f.name))
    tables = {F.name: F.table if F.table is not None else tabulate(F, index) for F in combined}
    targets = {T: name for name, T in tables.items()}
    for T in targets:
        if T not in images:
            rep._add("CM1", ("not surjective", targets[T]))
    for T, name in images.items():
        if T not in targets:
            rep._add("CM1", ("image is not a listed functor", name))
    for F in combined:
        rep.checked["round_trip"] += 1
        again = uncurry(curry(F, hom, k), hom)
        if tabulate(again, index) != tables[F.name]:
            rep._add("round_trip", ("uncurry(curry(F)) != F", F.name))

    homs = {}
    for sigma in itertools.permutations(range(k)):
        srcs = [sources[s] for s in sigma]
        key = tuple(id(W) for W in srcs)
        if key not in homs:
            homs[key] = hom if srcs == sources and all(a is b for a, b in zip(srcs, sources)) else build_hom(srcs, target, bound)
        hom_s = homs[key]
        act = hom_action(hom, sigma, hom_s)
        for tau in itertools.permutations(range(l)):
            perm_index = source_index(srcs + [middles[t] for t in tau], bound)
            for f in into_hom:
                rep.checked["CM2"] += 1
                right = sigma_action(uncurry(f, hom), block_sum([sigma, tau]))
                left = uncurry(compose_multi(act, [sigma_action(f, tau)]), hom_s)
                if tabulate(right, perm_index) != tabulate(left, perm_index):
                    rep._add("CM2", (sigma, tau, f.name))
    return rep


def partial_application(F: MultiFunctor, fixed: dict) -> MultiFunctor:
    """Fix the arguments in ``fixed`` (slot -> object); the rest stay variable."""
    free = [i for i in range(F.arity) if i not in fixed]
    if any(not 0 <= i < F.arity for i in fixed):
        raise HypothesisError("slot out of range")

    def fill(xs, ident):
        out = [None] * F.arity
        for i, x in zip(free, xs):
            out[i] = x
        for i, o in fixed.items():
            out[i] = ident(i, o)
        return tuple(out)

    return MultiFunctor(
        [F.sources[i] for i in free], F.target,
        lambda a: F.obj(fill(a, lambda i, o: o)),
        lambda m: F.mor(fill(m, lambda i, o: F.sources[i].base.identity(o))),
        name=f"{F.name}|{fixed}",
        domain=lambda a: F.defined_on(fill(a, lambda i, o: o)),
    )

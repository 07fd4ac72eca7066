"""Diagram categories ``[index, base]`` with levelwise structure.

Used for internal hom categories (index = product of source skeleta) and
for the levels of the S-construction (index = arrow category of an ordinal).
Objects are :class:`~waldcat.fincat.Functor` tables, morphisms are
:class:`~waldcat.fincat.NatTrans`, and pushouts are computed levelwise.
"""

from __future__ import annotations

from typing import Sequence

from .fincat import FinCat, Functor, NatTrans, Pushout, TargetCategory


def constant_functor(index: FinCat, base: TargetCategory, obj) -> Functor:
    ident = base.identity(obj)
    return Functor(index, base, {a: obj for a in index.object_list}, {m: ident for m in index.morphism_list})


class FunctorCategory(TargetCategory):
    def __init__(self, index: FinCat, base: TargetCategory, objects: Sequence[Functor] = (), name: str = ""):
        self.index = index
        self.base = base
        self._objects = list(objects)
        self.zero = constant_functor(index, base, base.zero)
        self.name = name or f"[{index.name}, {base.name}]"
        self._hom_cache: dict = {}

    def objects(self, bound=None):
        return list(self._objects)

    def hom(self, F: Functor, G: Functor) -> list:
        key = (F, G)
        if key not in self._hom_cache:
            self._hom_cache[key] = list(self._nat_trans(F, G))
        return self._hom_cache[key]

    def _nat_trans(self, F: Functor, G: Functor):
        idx, base = self.index, self.base
        objs = idx.object_list
        pos = {a: i for i, a in enumerate(objs)}
        checks: list[list] = [[] for _ in objs]
        for m in idx.morphism_list:
            if idx.is_identity(m):
                continue
            a, b = idx.dom(m), idx.cod(m)
            checks[max(pos[a], pos[b])].append((m, a, b))
        comps: dict = {}

        def search(i):
            if i == len(objs):
                yield NatTrans(F, G, comps)
                return
            a = objs[i]
            for c in base.hom(F.obj(a), G.obj(a)):
                comps[a] = c
                if all(
                    base.compose(comps[b], F.mor(m)) == base.compose(G.mor(m), comps[a2])
                    for m, a2, b in checks[i]
                ):
                    yield from search(i + 1)
            comps.pop(a, None)

        yield from search(0)

    def identity(self, F: Functor) -> NatTrans:
        return NatTrans(F, F, {a: self.base.identity(F.obj(a)) for a in self.index.object_list})

    def compose(self, beta: NatTrans, alpha: NatTrans) -> NatTrans:
        if alpha.target != beta.source:
            raise ValueError("natural transformations are not composable")
        return NatTrans(
            alpha.source,
            beta.target,
            {a: self.base.compose(beta.component(a), alpha.component(a)) for a in self.index.object_list},
        )

    def dom(self, alpha):
        return alpha.source

    def cod(self, alpha):
        return alpha.target

    def is_identity(self, alpha) -> bool:
        return alpha.source == alpha.target and all(
            self.base.is_identity(alpha.component(a)) for a in self.index.object_list
        )

    def is_iso(self, alpha) -> bool:
        return all(self.base.is_iso(alpha.component(a)) for a in self.index.object_list)

    def inverse(self, alpha):
        if not self.is_iso(alpha):
            return None
        return NatTrans(
            alpha.target,
            alpha.source,
            {a: self.base.inverse(alpha.component(a)) for a in self.index.object_list},
        )

    def isos(self, F, G):
        return [t for t in self.hom(F, G) if self.is_iso(t)]

    def zero_map(self, F, G):
        return NatTrans(F, G, {a: self.base.zero_map(F.obj(a), G.obj(a)) for a in self.index.object_list})

    def is_zero_object(self, F) -> bool:
        return all(self.base.is_zero_object(F.obj(a)) for a in self.index.object_list)

    def pushout(self, alpha: NatTrans, gamma: NatTrans) -> Pushout:
        """Levelwise pushout of ``G <-alpha- F -gamma-> H``."""
        idx, base = self.index, self.base
        G, H = alpha.target, gamma.target
        pos = {a: base.pushout(alpha.component(a), gamma.component(a)) for a in idx.object_list}
        mors = {}
        for m in idx.morphism_list:
            a, b = idx.dom(m), idx.cod(m)
            pb = pos[b]
            mors[m] = pos[a].factor(base.compose(pb.leg_b, G.mor(m)), base.compose(pb.leg_c, H.mor(m)))
        P = Functor(idx, base, {a: pos[a].obj for a in idx.object_list}, mors)
        leg_g = NatTrans(G, P, {a: pos[a].leg_b for a in idx.object_list})
        leg_h = NatTrans(H, P, {a: pos[a].leg_c for a in idx.object_list})

        def factor(hb: NatTrans, hc: NatTrans) -> NatTrans:
            return NatTrans(P, hb.target, {a: pos[a].factor(hb.component(a), hc.component(a)) for a in idx.object_list})

        return Pushout(P, leg_g, leg_h, factor)

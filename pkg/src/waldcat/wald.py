"""Waldhausen structures, the axiom checker, and builtin categories."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .errors import NoPushoutError, SizeCapError
from .fincat import FinCat, Pushout, TargetCategory
from .pointed import FINSET
from .vect import VectFp

MAX_WITNESSES = 10


class WaldCat:
    """A category with cofibrations, weak equivalences and a chosen zero object.

    ``bound`` is the default skeleton bound used when enumerating objects; the
    category itself is whatever ``base`` computes, so constructions such as
    pushouts may leave the enumerated skeleton.
    """

    def __init__(
        self,
        base: TargetCategory,
        is_cofibration: Callable[[Any], bool],
        is_weq: Callable[[Any], bool],
        name: str = "",
        bound: int | None = None,
        tags: dict | None = None,
    ):
        self.base = base
        self._cofib = is_cofibration
        self._weq = is_weq
        self.name = name or base.name
        self.bound = bound
        self.tags = dict(tags or {})
        self._cofib_cache: dict = {}
        self._weq_cache: dict = {}

    def __repr__(self) -> str:
        return f"WaldCat({self.name!r})"

    @property
    def zero(self):
        return self.base.zero

    def is_cofibration(self, f) -> bool:
        hit = self._cofib_cache.get(f)
        if hit is None:
            hit = self._cofib_cache[f] = bool(self._cofib(f))
        return hit

    def is_weq(self, f) -> bool:
        hit = self._weq_cache.get(f)
        if hit is None:
            hit = self._weq_cache[f] = bool(self._weq(f))
        return hit

    def skeleton(self, bound: int | None = None) -> list:
        return self.base.objects(self.bound if bound is None else bound)

    def morphisms(self, bound: int | None = None) -> list:
        objs = self.skeleton(bound)
        return [f for a in objs for b in objs for f in self.base.hom(a, b)]

    def cofibrations(self, bound: int | None = None) -> list:
        return [f for f in self.morphisms(bound) if self.is_cofibration(f)]

    def weqs(self, bound: int | None = None) -> list:
        return [f for f in self.morphisms(bound) if self.is_weq(f)]

    def initial_map(self, a):
        return self.base.zero_map(self.zero, a)

    def pushout(self, f, g, strict: bool = True) -> Pushout:
        """Pushout of ``B <-f- A -g-> C``.

        In strict mode at least one leg must be a cofibration; only those
        pushouts are promised by the axioms.
        """
        if strict and not (self.is_cofibration(f) or self.is_cofibration(g)):
            raise NoPushoutError(f"neither leg of the span ({f!r}, {g!r}) is a cofibration")
        return self.base.pushout(f, g)


@dataclass
class AxiomReport:
    """Per-axiom counterexamples (at most ten each) and instance counts."""

    category: str
    witnesses: dict = field(default_factory=dict)
    checked: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.witnesses.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.witnesses.items() if v]

    def _add(self, axiom: str, witness) -> None:
        lst = self.witnesses.setdefault(axiom, [])
        if len(lst) < MAX_WITNESSES:
            lst.append(witness)

    def summary(self) -> str:
        parts = [f"{k}:{'FAIL' if self.witnesses.get(k) else 'ok'}({self.checked.get(k, 0)})" for k in self.checked]
        return f"{self.category}: " + " ".join(parts)


AXIOMS = ("cofib_subcategory", "weq_subcategory", "W1", "W2", "W3", "W4", "W5")


def check_wald_axioms(W: WaldCat, bound: int | None = None, axioms: Iterable[str] = AXIOMS) -> AxiomReport:
    """Exhaustively check W1-W5 (and the subcategory conditions) on the skeleton."""
    axioms = set(axioms)
    base = W.base
    objs = W.skeleton(bound)
    hom = {(a, b): list(base.hom(a, b)) for a in objs for b in objs}
    rep = AxiomReport(W.name, {k: [] for k in AXIOMS if k in axioms}, {k: 0 for k in AXIOMS if k in axioms})
    cofib = {(a, b): [f for f in hom[a, b] if W.is_cofibration(f)] for a in objs for b in objs}
    weq = {(a, b): [f for f in hom[a, b] if W.is_weq(f)] for a in objs for b in objs}

    if "cofib_subcategory" in axioms or "weq_subcategory" in axioms:
        for name, pred, table in (("cofib_subcategory", W.is_cofibration, cofib),
                                  ("weq_subcategory", W.is_weq, weq)):
            if name not in axioms:
                continue
            for a in objs:
                rep.checked[name] += 1
                if not pred(base.identity(a)):
                    rep._add(name, ("identity", a))
            for a, b, c in itertools.product(objs, repeat=3):
                for f in table[a, b]:
                    for g in table[b, c]:
                        rep.checked[name] += 1
                        if not pred(base.compose(g, f)):
                            rep._add(name, ("composite", f, g))

    if "W1" in axioms:
        for a, b in itertools.product(objs, repeat=2):
            for f in hom[a, b]:
                if base.is_iso(f):
                    rep.checked["W1"] += 1
                    if not (W.is_cofibration(f) and W.is_weq(f)):
                        rep._add("W1", f)

    if "W2" in axioms:
        for a, b, c in itertools.product(objs, repeat=3):
            for f in hom[a, b]:
                wf = W.is_weq(f)
                for g in hom[b, c]:
                    rep.checked["W2"] += 1
                    wg, wgf = W.is_weq(g), W.is_weq(base.compose(g, f))
                    if wf + wg + wgf == 2:
                        rep._add("W2", (f, g))

    if "W3" in axioms:
        z = W.zero
        for a in objs:
            rep.checked["W3"] += 1
            into, out = list(base.hom(z, a)), list(base.hom(a, z))
            if len(into) != 1 or len(out) != 1:
                rep._add("W3", ("not a zero object against", a))
            elif not W.is_cofibration(into[0]):
                rep._add("W3", ("0 -> A not a cofibration", a))

    if "W4" in axioms:
        for a, b, c in itertools.product(objs, repeat=3):
            for f in cofib[a, b]:
                for g in hom[a, c]:
                    rep.checked["W4"] += 1
                    try:
                        po = W.pushout(f, g)
                    except (NoPushoutError, SizeCapError) as exc:
                        rep._add("W4", ("no pushout", f, g, str(exc)))
                        continue
                    if not W.is_cofibration(po.leg_c):
                        rep._add("W4", ("leg not a cofibration", f, g))

    if "W5" in axioms:
        _check_w5(W, objs, hom, cofib, weq, rep)
    return rep


def _check_w5(W, objs, hom, cofib, weq, rep):
    base = W.base
    weq_from = {a: [w for b in objs for w in weq[a, b]] for a in objs}
    lifts: dict = {}

    def precomposed(table, w, z):
        # maps x with x o w == target, indexed by target
        key = (id(table), w, z)
        hit = lifts.get(key)
        if hit is None:
            hit = {}
            for x in table[base.cod(w), z]:
                hit.setdefault(base.compose(x, w), []).append(x)
            lifts[key] = hit
        return hit

    for a, b, c in itertools.product(objs, repeat=3):
        for g in hom[a, b]:
            for f in cofib[a, c]:
                try:
                    top = W.pushout(g, f)
                except (NoPushoutError, SizeCapError):
                    continue  # already reported under W4
                for wa in weq_from[a]:
                    for wb in weq_from[b]:
                        gs = precomposed(hom, wa, base.cod(wb)).get(base.compose(wb, g), ())
                        if not gs:
                            continue
                        for wc in weq_from[c]:
                            fs = precomposed(cofib, wa, base.cod(wc)).get(base.compose(wc, f), ())
                            for g2 in gs:
                                for f2 in fs:
                                    try:
                                        bot = W.pushout(g2, f2)
                                    except (NoPushoutError, SizeCapError):
                                        continue
                                    rep.checked["W5"] += 1
                                    induced = top.factor(base.compose(bot.leg_b, wb), base.compose(bot.leg_c, wc))
                                    if not W.is_weq(induced):
                                        rep._add("W5", (g, f, wa, wb, wc, g2, f2))


# --- finite categories given by tables ---------------------------------------


class FiniteTarget(TargetCategory):
    """An explicit finite category used as a target; pushouts by cocone search."""

    def __init__(self, cat: FinCat, zero):
        self.cat = cat
        self.zero = zero
        self.name = cat.name

    def objects(self, bound=None):
        return list(self.cat.object_list)

    def hom(self, a, b):
        return self.cat.hom(a, b)

    def identity(self, a):
        return self.cat.identity(a)

    def compose(self, g, f):
        return self.cat.compose(g, f)

    def dom(self, f):
        return self.cat.dom(f)

    def cod(self, f):
        return self.cat.cod(f)

    def is_identity(self, f):
        return self.cat.is_identity(f)

    def zero_map(self, a, b):
        return self.cat.compose(self.cat.hom(self.zero, b)[0], self.cat.hom(a, self.zero)[0])

    def pushout(self, f, g) -> Pushout:
        cat = self.cat
        b, c = cat.cod(f), cat.cod(g)

        def cocones(z):
            return [(hb, hc) for hb in cat.hom(b, z) for hc in cat.hom(c, z)
                    if cat.compose(hb, f) == cat.compose(hc, g)]

        all_cocones = {z: cocones(z) for z in cat.object_list}
        for p in cat.object_list:
            for lb, lc in all_cocones[p]:
                table = {}
                universal = True
                for z in cat.object_list:
                    for hb, hc in all_cocones[z]:
                        us = [u for u in cat.hom(p, z) if cat.compose(u, lb) == hb and cat.compose(u, lc) == hc]
                        if len(us) != 1:
                            universal = False
                            break
                        table[(hb, hc)] = us[0]
                    if not universal:
                        break
                if universal:
                    return Pushout(p, lb, lc, lambda hb, hc, t=table: t[(hb, hc)])
        raise NoPushoutError(f"no pushout of ({f!r}, {g!r}) in {cat.name}")


def from_finite(cat: FinCat, zero, cofibrations: Iterable, weqs: Iterable, name: str = "") -> WaldCat:
    """A WaldCat on an explicit finite category with listed cofibrations and weqs."""
    cset, wset = frozenset(cofibrations), frozenset(weqs)
    W = WaldCat(FiniteTarget(cat, zero), cset.__contains__, wset.__contains__, name=name or cat.name, bound=0)
    W.tags = {"kind": "finite", "cofibrations": sorted(map(repr, cset)), "weqs": sorted(map(repr, wset))}
    return W


# --- builtins -----------------------------------------------------------------


def finset_pointed(maxsize: int = 3, cofibrations: str = "injections", weqs: str = "isos") -> WaldCat:
    """Pointed finite sets with at most ``maxsize`` elements (basepoint included)."""
    if maxsize < 1:
        raise ValueError("maxsize must be at least 1 (the zero object)")
    return _pointed(maxsize - 1, f"finset_pointed({maxsize})", {"name": "finset_pointed", "maxsize": maxsize},
                    cofibrations, weqs)


def nstar(maxn: int = 2, cofibrations: str = "injections", weqs: str = "isos") -> WaldCat:
    """The skeleton with objects ``{*, 1, ..., n}`` for ``n <= maxn``."""
    if maxn < 0:
        raise ValueError("maxn must be non-negative")
    return _pointed(maxn, f"nstar({maxn})", {"name": "nstar", "maxn": maxn}, cofibrations, weqs)


_PREDICATES = {
    "injections": lambda f: f.is_injective(),
    "isos": FINSET.is_iso,
    "identities": FINSET.is_identity,
    "all": lambda f: True,
}


def _pointed(bound, name, tags, cofibrations, weqs):
    tags = dict(tags, cofibrations=cofibrations, weqs=weqs)
    return WaldCat(FINSET, _PREDICATES[cofibrations], _PREDICATES[weqs], name=name, bound=bound, tags=tags)


def vect_fp(p: int = 2, maxdim: int = 2) -> WaldCat:
    """Finite-dimensional ``F_p`` vector spaces of dimension at most ``maxdim``."""
    V = VectFp(p)
    return WaldCat(V, V.is_injective, V.is_iso, name=f"vect_fp({p},{maxdim})", bound=maxdim,
                   tags={"name": "vect_fp", "p": p, "maxdim": maxdim})


def zero_category() -> WaldCat:
    return finset_pointed(1)


def builtin(name: str, **params) -> WaldCat:
    makers = {"finset_pointed": finset_pointed, "nstar": nstar, "vect_fp": vect_fp, "zero": zero_category}
    if name not in makers:
        raise ValueError(f"unknown builtin {name!r}")
    return makers[name](**params)


def from_tags(tags: dict) -> WaldCat:
    """Rebuild a builtin from its tag dictionary (as written to JSON)."""
    tags = dict(tags)
    name = tags.pop("name")
    return builtin(name, **tags)


def skeleton_category(W: WaldCat, bound: int | None = None) -> FinCat:
    """The bounded skeleton as an explicit finite category; morphism ids are the morphisms."""
    base = W.base
    objs = W.skeleton(bound)
    mors = [(f, a, b) for a in objs for b in objs for f in base.hom(a, b)]
    return FinCat(objs, mors, {a: base.identity(a) for a in objs}, base.compose,
                  name=f"{W.name}[<={objs[-1]}]")

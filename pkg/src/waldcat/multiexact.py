"""Functors of several variables between Waldhausen categories.

A :class:`MultiFunctor` evaluates on tuples of objects and tuples of
morphisms. Exactness in several variables is checked exhaustively on bounded
skeleta by :func:`check_k_exact`; composition, the symmetric-group action and
the multicategory laws are in the second half of the module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .cubes import Cube, is_good, punctured_colimit, southern_arrow, vertices_of
from .errors import CAPS, NoPushoutError, NotExactError, SizeCapError, check_cap
from .fincat import Functor
from .pointed import FINSET, smash_maps, smash_objects, wedge_maps
from .vect import tensor_maps
from .wald import MAX_WITNESSES, WaldCat


class MultiFunctor:
    """A functor ``sources[0] x ... x sources[k-1] -> target``.

    ``on_objects`` takes a k-tuple of objects, ``on_morphisms`` a k-tuple of
    morphisms. ``domain`` optionally restricts the object tuples on which the
    functor is defined (tables built from enumerated functors).
    """

    def __init__(
        self,
        sources: Sequence[WaldCat],
        target: WaldCat,
        on_objects: Callable,
        on_morphisms: Callable,
        name: str = "",
        domain: Callable[[tuple], bool] | None = None,
        table: Functor | None = None,
    ):
        check_cap("arity", len(sources), CAPS.max_arity)
        self.sources = list(sources)
        self.target = target
        self._obj = on_objects
        self._mor = on_morphisms
        self.name = name or "F"
        self._domain = domain
        self.table = table

    @property
    def arity(self) -> int:
        return len(self.sources)

    def __repr__(self) -> str:
        return f"MultiFunctor({self.name}, arity={self.arity})"

    def obj(self, objs: Sequence):
        objs = tuple(objs)
        if len(objs) != self.arity:
            raise ValueError(f"{self.name} takes {self.arity} arguments, got {len(objs)}")
        return self._obj(objs)

    def mor(self, maps: Sequence):
        maps = tuple(maps)
        if len(maps) != self.arity:
            raise ValueError(f"{self.name} takes {self.arity} arguments, got {len(maps)}")
        return self._mor(maps)

    def mor_in(self, i: int, f, objs: Sequence):
        """``F(1, ..., f, ..., 1)`` with ``f`` in slot ``i`` and identities elsewhere."""
        maps = [self.sources[j].base.identity(o) for j, o in enumerate(objs)]
        maps[i] = f
        return self.mor(maps)

    def defined_on(self, objs: Sequence) -> bool:
        return self._domain is None or self._domain(tuple(objs))

    @classmethod
    def from_functor(cls, F: Functor, sources: Sequence[WaldCat], target: WaldCat, name: str = "") -> "MultiFunctor":
        """Wrap a table functor on a product of skeleton categories."""
        objs = set(F.source.object_list)
        k = len(sources)
        if k == 1 and not isinstance(F.source.object_list[0], tuple):
            return cls(sources, target, lambda a: F.obj(a[0]), lambda m: F.mor(m[0]), name or F.name,
                       lambda a: a[0] in objs, F)
        return cls(sources, target, F.obj, F.mor, name or F.name, lambda a: a in objs, F)

    @classmethod
    def constant(cls, target: WaldCat, obj, name: str = "") -> "MultiFunctor":
        """A functor of no variables, i.e. an object of ``target``."""
        base = target.base
        return cls([], target, lambda a: obj, lambda m: base.identity(obj), name or f"const({obj!r})")


# --- builtin multifunctors ----------------------------------------------------


def identity_multi(W: WaldCat) -> MultiFunctor:
    return MultiFunctor([W], W, lambda a: a[0], lambda m: m[0], name=f"id[{W.name}]")


def smash(W: WaldCat, k: int = 2) -> MultiFunctor:
    """The smash product of ``k`` pointed sets."""
    _require_pointed(W)
    return MultiFunctor([W] * k, W, lambda a: smash_objects(*a), lambda m: smash_maps(*m), name=f"smash{k}")


def doubling(W: WaldCat) -> MultiFunctor:
    """``A -> A v A``; exact in one variable."""
    _require_pointed(W)
    return MultiFunctor([W], W, lambda a: 2 * a[0], lambda m: wedge_maps(m[0], m[0]), name="double")


def projection(W1: WaldCat, W2: WaldCat) -> MultiFunctor:
    """``(A, B) -> A``; sends ``(A, 0)`` to ``A``, so it fails zero absorption."""
    return MultiFunctor([W1, W2], W1, lambda a: a[0], lambda m: m[0], name="proj1")


def tensor(W: WaldCat, k: int = 2) -> MultiFunctor:
    """Tensor product of ``k`` vector spaces."""

    def obj(a):
        out = 1
        for d in a:
            out *= d
        return out

    return MultiFunctor([W] * k, W, obj, lambda m: tensor_maps(*m), name=f"tensor{k}")


def _require_pointed(W: WaldCat) -> None:
    if W.base is not FINSET:
        raise ValueError(f"{W.name} is not a category of pointed sets")


# --- box cubes -----------------------------------------------------------------


def box_cube(fbar: Sequence, F: MultiFunctor) -> Cube:
    """The k-cube with vertex ``eps`` equal to F of the ``eps``-ends of ``fbar``."""
    fbar = list(fbar)
    if len(fbar) != F.arity:
        raise ValueError(f"{F.name} takes {F.arity} morphisms, got {len(fbar)}")
    k = F.arity
    ends = [(W.base.dom(f), W.base.cod(f)) for W, f in zip(F.sources, fbar)]
    verts = {}
    edges = {}
    for eps in vertices_of(k):
        objs = [ends[i][e] for i, e in enumerate(eps)]
        verts[eps] = F.obj(objs)
        for i in range(k):
            if eps[i] == 0:
                edges[(eps, i)] = F.mor_in(i, fbar[i], objs)
    return Cube(k, F.target, verts, edges)


def box_product(fbar: Sequence, F: MultiFunctor, strict: bool = True):
    return southern_arrow(box_cube(fbar, F), strict=strict)


# --- exactness ------------------------------------------------------------------


@dataclass
class ExactReport:
    functor: str
    mode: str
    witnesses: dict = field(default_factory=dict)
    checked: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.witnesses.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.witnesses.items() if v]

    def _add(self, axiom, witness):
        lst = self.witnesses.setdefault(axiom, [])
        if len(lst) < MAX_WITNESSES:
            lst.append(witness)

    def summary(self) -> str:
        parts = []
        for k in self.checked:
            s = f"{k}:{'FAIL' if self.witnesses.get(k) else 'ok'}({self.checked[k]}"
            if self.skipped.get(k):
                s += f", {self.skipped[k]} outside domain"
            parts.append(s + ")")
        return f"{self.functor} [{self.mode}]: " + " ".join(parts)


def _skeleta(F: MultiFunctor, bound):
    return [W.skeleton(bound) for W in F.sources]


def check_k_exact(
    F: MultiFunctor,
    mode: str = "full",
    bound: int | None = None,
    strict_zero: bool = True,
    axioms: Sequence[str] = ("kE1", "kE2", "kE3", "kE4"),
) -> ExactReport:
    """Check zero absorption, pushout preservation, weak equivalences and goodness.

    ``mode="full"`` checks that every box cube of a cofibration tuple is good;
    ``mode="reduced"`` only that its southern arrow is a cofibration. Checks
    whose construction leaves the functor's domain are counted as skipped.
    """
    if mode not in ("full", "reduced"):
        raise ValueError("mode must be 'full' or 'reduced'")
    rep = ExactReport(F.name, mode, {a: [] for a in axioms}, {a: 0 for a in axioms}, {a: 0 for a in axioms})
    if F.arity == 0:
        return rep
    T = F.target
    tb = T.base
    skel = _skeleta(F, bound)
    object_tuples = [t for t in itertools.product(*skel) if F.defined_on(t)]

    if "kE1" in axioms:
        for objs in object_tuples:
            if any(W.base.is_zero_object(a) for W, a in zip(F.sources, objs)):
                rep.checked["kE1"] += 1
                val = F.obj(objs)
                if (val != T.zero) if strict_zero else not tb.is_zero_object(val):
                    rep._add("kE1", (objs, val))

    if "kE2" in axioms:
        for i, W in enumerate(F.sources):
            sb = W.base
            objs_i = skel[i]
            spans = [(f, g) for a in objs_i for b in objs_i for c in objs_i
                     for f in sb.hom(a, b) if W.is_cofibration(f) for g in sb.hom(a, c)]
            for rest in itertools.product(*(s for j, s in enumerate(skel) if j != i)):
                for f, g in spans:
                    rep.checked["kE2"] += 1
                    po = W.pushout(f, g)
                    tup = list(rest)
                    ends = {}
                    for name, o in (("a", sb.dom(f)), ("b", sb.cod(f)), ("c", sb.cod(g)), ("p", po.obj)):
                        ends[name] = tuple(tup[:i] + [o] + tup[i:])
                    if not all(F.defined_on(t) for t in ends.values()):
                        rep.skipped["kE2"] += 1
                        continue
                    Ff, Fg = F.mor_in(i, f, ends["a"]), F.mor_in(i, g, ends["a"])
                    Fb, Fc = F.mor_in(i, po.leg_b, ends["b"]), F.mor_in(i, po.leg_c, ends["c"])
                    tpo = tb.pushout(Ff, Fg)
                    comparison = tpo.factor(Fb, Fc)
                    if not tb.is_iso(comparison):
                        rep._add("kE2", (i, rest, f, g))

    if "kE3" in axioms:
        weqs = [[w for w in W.weqs(bound)] for W in F.sources]
        for ws in itertools.product(*weqs):
            if not all(F.defined_on(e) for e in _end_tuples(F, ws)):
                rep.skipped["kE3"] += 1
                continue
            rep.checked["kE3"] += 1
            if not T.is_weq(F.mor(ws)):
                rep._add("kE3", ws)

    if "kE4" in axioms:
        cofs = [[c for c in W.cofibrations(bound)] for W in F.sources]
        for fs in itertools.product(*cofs):
            if not all(F.defined_on(e) for e in _end_tuples(F, fs)):
                rep.skipped["kE4"] += 1
                continue
            rep.checked["kE4"] += 1
            verdict = _box_verdict(fs, F, mode)
            if verdict is not None:
                rep._add("kE4", (fs, verdict))
    return rep


def _end_tuples(F, fs):
    ends = [(W.base.dom(f), W.base.cod(f)) for W, f in zip(F.sources, fs)]
    return [tuple(ends[i][e] for i, e in enumerate(eps)) for eps in vertices_of(F.arity)]


def _box_verdict(fs, F, mode) -> str | None:
    """``None`` when the box cube passes, otherwise a reason."""
    C = box_cube(fs, F)
    if mode == "full":
        r = is_good(C)
        return None if r.good else f"face {r.face}: {r.reason}"
    try:
        arrow = southern_arrow(C)
    except NoPushoutError as exc:
        return f"southern arrow does not exist: {exc}"
    return None if F.target.is_cofibration(arrow) else f"southern arrow {arrow!r} is not a cofibration"


def require_exact(F: MultiFunctor, bound: int | None = None) -> MultiFunctor:
    rep = check_k_exact(F, bound=bound)
    if not rep.ok:
        raise NotExactError(rep.summary())
    return F


def functoriality_failures(F: MultiFunctor, bound: int | None = None) -> list:
    """Identity and composition failures of ``F`` on the bounded skeleta."""
    bad = []
    skel = _skeleta(F, bound)
    T = F.target.base
    for objs in itertools.product(*skel):
        if not F.defined_on(objs):
            continue
        ids = [W.base.identity(a) for W, a in zip(F.sources, objs)]
        if F.mor(ids) != T.identity(F.obj(objs)):
            bad.append(("identity", objs))
    for a, b, c in itertools.product(itertools.product(*skel), repeat=3):
        if not all(F.defined_on(x) for x in (a, b, c)):
            continue
        homs1 = [W.base.hom(x, y) for W, x, y in zip(F.sources, a, b)]
        homs2 = [W.base.hom(x, y) for W, x, y in zip(F.sources, b, c)]
        for fs in itertools.product(*homs1):
            Ff = F.mor(fs)
            for gs in itertools.product(*homs2):
                gf = [W.base.compose(g, f) for W, g, f in zip(F.sources, gs, fs)]
                if F.mor(gf) != T.compose(F.mor(gs), Ff):
                    bad.append(("composition", fs, gs))
    return bad


# --- composition and the symmetric action -------------------------------------------


def compose_multi(F: MultiFunctor, Gs: Sequence[MultiFunctor], verify: bool = False, bound: int | None = None) -> MultiFunctor:
    """``F o (G_1 x ... x G_k)``; arguments are the concatenated inputs of the ``G_i``."""
    Gs = list(Gs)
    if len(Gs) != F.arity:
        raise ValueError(f"{F.name} needs {F.arity} inner functors, got {len(Gs)}")
    for i, (G, W) in enumerate(zip(Gs, F.sources)):
        if G.target is not W and G.target.name != W.name:
            raise ValueError(f"target of inner functor {i} is {G.target.name}, expected {W.name}")
    cuts = list(itertools.accumulate([0] + [G.arity for G in Gs]))

    def blocks(xs):
        return [tuple(xs[cuts[i]:cuts[i + 1]]) for i in range(len(Gs))]

    def obj(a):
        return F.obj([G.obj(b) for G, b in zip(Gs, blocks(a))])

    def mor(m):
        return F.mor([G.mor(b) for G, b in zip(Gs, blocks(m))])

    def domain(a):
        bs = blocks(a)
        return all(G.defined_on(b) for G, b in zip(Gs, bs)) and F.defined_on([G.obj(b) for G, b in zip(Gs, bs)])

    H = MultiFunctor(
        [W for G in Gs for W in G.sources], F.target, obj, mor,
        name=f"{F.name}o({','.join(G.name for G in Gs)})", domain=domain,
    )
    if verify:
        require_exact(H, bound)
    return H


def _check_perm(sigma: Sequence[int], k: int) -> tuple:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(k)):
        raise ValueError(f"{sigma} is not a permutation of 0..{k - 1}")
    return sigma


def perm_compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple:
    """``(sigma tau)(j) = sigma(tau(j))``."""
    return tuple(sigma[t] for t in tau)


def sigma_action(F: MultiFunctor, sigma: Sequence[int], verify: bool = False, bound: int | None = None) -> MultiFunctor:
    """Permute inputs: argument ``j`` of ``F.sigma`` is fed to slot ``sigma[j]`` of ``F``.

    This is a right action: ``F.(sigma tau) == (F.sigma).tau``.
    """
    sigma = _check_perm(sigma, F.arity)
    inv = [0] * len(sigma)
    for j, s in enumerate(sigma):
        inv[s] = j

    def reorder(xs):
        return tuple(xs[inv[s]] for s in range(len(xs)))

    G = MultiFunctor(
        [F.sources[s] for s in sigma], F.target,
        lambda a: F.obj(reorder(a)), lambda m: F.mor(reorder(m)),
        name=f"{F.name}.{''.join(map(str, sigma))}" if sigma else F.name,
        domain=lambda a: F.defined_on(reorder(a)),
    )
    if verify:
        require_exact(G, bound)
    return G


def block_permutation(sigma: Sequence[int], sizes: Sequence[int]) -> tuple:
    """Permutation moving block ``j`` (of length ``sizes[j]``) to position ``sigma[j]``."""
    new_sizes = [0] * len(sizes)
    for j, s in enumerate(sigma):
        new_sizes[s] = sizes[j]
    new_starts = list(itertools.accumulate([0] + new_sizes))
    out = []
    for j, size in enumerate(sizes):
        out.extend(new_starts[sigma[j]] + r for r in range(size))
    return tuple(out)


def block_sum(taus: Sequence[Sequence[int]]) -> tuple:
    out = []
    offset = 0
    for t in taus:
        out.extend(offset + x for x in t)
        offset += len(t)
    return tuple(out)


# --- comparing functors on skeleta -----------------------------------------------


def _morphism_tuples(F: MultiFunctor, bound):
    skel = _skeleta(F, bound)
    for a in itertools.product(*skel):
        if not F.defined_on(a):
            continue
        for b in itertools.product(*skel):
            if not F.defined_on(b):
                continue
            yield from itertools.product(*(W.base.hom(x, y) for W, x, y in zip(F.sources, a, b)))


def _single_slot_tuples(F: MultiFunctor, bound):
    """Morphism tuples with one non-identity entry; these generate the product category."""
    skel = _skeleta(F, bound)
    for objs in itertools.product(*skel):
        if not F.defined_on(objs):
            continue
        for i, W in enumerate(F.sources):
            for b in skel[i]:
                tgt = objs[:i] + (b,) + objs[i + 1:]
                if not F.defined_on(tgt):
                    continue
                for f in W.base.hom(objs[i], b):
                    if W.base.is_identity(f):
                        continue
                    yield tuple(f if j == i else V.base.identity(o) for j, (V, o) in enumerate(zip(F.sources, objs)))


def table_differences(
    F: MultiFunctor, G: MultiFunctor, bound: int | None = None, limit: int = MAX_WITNESSES, every_tuple: bool = False
) -> list:
    """Object and morphism tuples on which ``F`` and ``G`` disagree.

    By default morphisms are compared on tuples with a single non-identity
    entry, which suffices for functors; ``every_tuple`` compares all tuples.
    """
    if F.arity != G.arity:
        return [("arity", F.arity, G.arity)]
    diffs = []
    for a in itertools.product(*_skeleta(F, bound)):
        if F.defined_on(a) != G.defined_on(a):
            diffs.append(("domain", a))
        elif F.defined_on(a) and F.obj(a) != G.obj(a):
            diffs.append(("object", a, F.obj(a), G.obj(a)))
        if len(diffs) >= limit:
            return diffs
    tuples = _morphism_tuples(F, bound) if every_tuple else _single_slot_tuples(F, bound)
    for m in tuples:
        if G.defined_on(_end_tuples(F, m)[0]) and F.mor(m) != G.mor(m):
            diffs.append(("morphism", m))
            if len(diffs) >= limit:
                break
    return diffs


# --- multicategory laws -----------------------------------------------------------


@dataclass
class MulticategoryReport:
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


def _tuples_for(slots: Sequence[WaldCat], pool: Sequence[MultiFunctor], max_total: int):
    """Tuples ``(G_1, ..., G_k)`` with ``G_i`` landing in ``slots[i]`` and total arity bounded."""
    options = [[G for G in pool if G.target is W] for W in slots]
    for combo in itertools.product(*options):
        if sum(G.arity for G in combo) <= max_total:
            yield combo


def check_multicategory_axioms(
    generators: Sequence[MultiFunctor],
    bound: int | None = None,
    max_arity: int = 3,
    compose: Callable = compose_multi,
) -> MulticategoryReport:
    """Unit, associativity and equivariance laws on the fragment spanned by ``generators``.

    ``compose`` can be replaced to test that corrupted composition is caught.
    """
    rep = MulticategoryReport({}, {law: 0 for law in ("unit", "associativity", "equivariance_outer", "equivariance_inner")})
    cats = []
    for G in generators:
        for W in G.sources + [G.target]:
            if all(W is not c for c in cats):
                cats.append(W)
    units = {id(W): identity_multi(W) for W in cats}
    pool = list(generators)

    def same(law, lhs, rhs, what):
        rep.checked[law] += 1
        diffs = table_differences(lhs, rhs, bound, limit=1)
        if diffs:
            rep._add(law, (what, diffs[0]))

    for F in pool:
        same("unit", compose(F, [units[id(W)] for W in F.sources]), F, (F.name, "right unit"))
        same("unit", compose(units[id(F.target)], [F]), F, (F.name, "left unit"))

    for F in pool:
        for Gs in _tuples_for(F.sources, pool, max_arity):
            inner_slots = [W for G in Gs for W in G.sources]
            for Hs in _tuples_for(inner_slots, pool, max_arity):
                cuts = list(itertools.accumulate([0] + [G.arity for G in Gs]))
                left = compose(F, [compose(G, Hs[cuts[i]:cuts[i + 1]]) for i, G in enumerate(Gs)])
                right = compose(compose(F, Gs), Hs)
                same("associativity", left, right, (F.name, [G.name for G in Gs], [H.name for H in Hs]))

            sizes = [G.arity for G in Gs]
            for sigma in itertools.permutations(range(F.arity)):
                inv = [0] * len(sigma)
                for j, s in enumerate(sigma):
                    inv[s] = j
                lhs = compose(sigma_action(F, sigma), Gs)
                rhs = sigma_action(compose(F, [Gs[inv[s]] for s in range(len(sigma))]), block_permutation(sigma, sizes))
                same("equivariance_outer", lhs, rhs, (F.name, sigma, [G.name for G in Gs]))
            for taus in itertools.product(*(itertools.permutations(range(G.arity)) for G in Gs)):
                lhs = compose(F, [sigma_action(G, t) for G, t in zip(Gs, taus)])
                rhs = sigma_action(compose(F, Gs), block_sum(taus))
                same("equivariance_inner", lhs, rhs, (F.name, taus))
    return rep


# --- single-variable southern arrows and composites ---------------------------------------


def codiag_one_variable(F: MultiFunctor, i: int, C: Cube, others: Sequence) -> str | None:
    """Compare ``F`` applied to the southern arrow of ``C`` (in slot ``i``) with the
    southern arrow of ``F`` applied to ``C``. Returns ``None`` when the comparison
    map is an isomorphism making the triangle commute."""
    T = F.target.base
    others = list(others)

    def at(o):
        return tuple(others[:i] + [o] + others[i:])

    L = punctured_colimit(C)
    sa = southern_arrow(C)
    applied_verts = {e: F.obj(at(v)) for e, v in C.vertices.items()}
    applied_edges = {(e, k): F.mor_in(i, f, at(C.vertices[e])) for (e, k), f in C.edges.items()}
    FC = Cube(C.n, F.target, applied_verts, applied_edges)
    LF = punctured_colimit(FC, strict=False)
    image = F.obj(at(L.obj))
    phi = LF.factor({e: F.mor_in(i, L.legs[e], at(C.vertices[e])) for e in LF.legs}, image)
    if not T.is_iso(phi):
        return f"comparison {phi!r} is not an isomorphism"
    if T.compose(F.mor_in(i, sa, at(L.obj)), phi) != southern_arrow(FC, strict=False):
        return "southern arrows do not correspond"
    return None


def composition_good_comparison(F: MultiFunctor, Gs: Sequence[MultiFunctor], fbar: Sequence) -> str | None:
    """For ``H = F o (G_1 x ... x G_k)``, compare the southern arrow of the box cube of
    ``fbar`` for ``H`` with that of the box products of the blocks for ``F``.

    Returns ``None`` when the canonical comparison is an isomorphism over the
    common terminal vertex.
    """
    Gs = list(Gs)
    H = compose_multi(F, Gs)
    T = F.target.base
    cuts = list(itertools.accumulate([0] + [G.arity for G in Gs]))
    blocks = [tuple(fbar[cuts[i]:cuts[i + 1]]) for i in range(len(Gs))]
    inner = [punctured_colimit(box_cube(b, G)) for b, G in zip(blocks, Gs)]
    gbar = [box_product(b, G) for b, G in zip(blocks, Gs)]
    CH = box_cube(fbar, H)
    CF = box_cube(gbar, F)
    LH = punctured_colimit(CH)
    LF = punctured_colimit(CF)
    tops = [G.obj([G.sources[j].base.cod(f) for j, f in enumerate(b)]) for G, b in zip(Gs, blocks)]
    cocone = {}
    for eps in LH.legs:
        parts = [eps[cuts[i]:cuts[i + 1]] for i in range(len(Gs))]
        delta = tuple(int(all(p)) for p in parts)
        hs = []
        for i, p in enumerate(parts):
            if all(p):
                hs.append(F.sources[i].base.identity(tops[i]))
            else:
                hs.append(inner[i].legs[p])
        cocone[eps] = T.compose(LF.legs[delta], F.mor(hs))
    phi = LH.factor(cocone, LF.obj)
    if not T.is_iso(phi):
        return f"comparison {phi!r} is not an isomorphism"
    if T.compose(southern_arrow(CF), phi) != southern_arrow(CH):
        return "southern arrows do not correspond"
    return None

"""Cubical diagrams in a Waldhausen category.

A cube of dimension ``n`` is stored as vertex and edge tables. Vertices are
keyed by 0/1 tuples of length ``n``; the edge ``(eps, k)`` (``k`` counted from
0, ``eps[k] == 0``) runs from ``eps`` to ``eps`` with coordinate ``k`` raised.
Axis arguments of the public functions count from 1, and the last axis is the
one the colimit recursion splits along.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Mapping

from .errors import CAPS, HypothesisError, NaturalityError, NoPushoutError, PostconditionError, check_cap
from .fincat import Colimit, Functor, NatTrans, build_index


def vertices_of(n: int) -> list[tuple]:
    return list(itertools.product((0, 1), repeat=n))


def _raise(eps: tuple, k: int) -> tuple:
    return eps[:k] + (1,) + eps[k + 1:]


class Cube:
    def __init__(self, n: int, target, vertices: Mapping, edges: Mapping):
        check_cap("cube dimension", n, CAPS.max_cube_dim)
        self.n = n
        self.target = target
        self.vertices = {tuple(e): vertices[tuple(e)] for e in vertices_of(n)}
        self.edges = {}
        self._maps: dict = {}
        for eps in self.vertices:
            for k in range(n):
                if eps[k] == 0:
                    self.edges[(eps, k)] = edges[(eps, k)]

    @property
    def base(self):
        return self.target.base

    def __repr__(self) -> str:
        return f"Cube(n={self.n}, {self.vertices})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Cube) and self.n == other.n and self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.vertices.items())))

    def top(self) -> tuple:
        return (1,) * self.n

    def map(self, src: tuple, dst: tuple):
        """The composite of edges from ``src`` up to ``dst``."""
        hit = self._maps.get((src, dst))
        if hit is not None:
            return hit
        if any(a > b for a, b in zip(src, dst)):
            raise ValueError(f"{dst} is not above {src}")
        base = self.base
        out = None
        cur = src
        for k in range(self.n):
            if cur[k] < dst[k]:
                e = self.edges[(cur, k)]
                out = e if out is None else base.compose(e, out)
                cur = _raise(cur, k)
        if out is None:
            out = base.identity(self.vertices[src])
        self._maps[(src, dst)] = out
        return out

    def commutation_failures(self) -> list:
        base = self.base
        bad = []
        for eps in self.vertices:
            for j, k in itertools.combinations(range(self.n), 2):
                if eps[j] == eps[k] == 0:
                    a = base.compose(self.edges[(_raise(eps, j), k)], self.edges[(eps, j)])
                    b = base.compose(self.edges[(_raise(eps, k), j)], self.edges[(eps, k)])
                    if a != b:
                        bad.append((eps, j, k))
        return bad

    def commutes(self) -> bool:
        return not self.commutation_failures()

    def subcube(self, fixed: Mapping[int, int]) -> "Cube":
        """Restrict by fixing 0-based axes; the free axes keep their order."""
        free = [k for k in range(self.n) if k not in fixed]

        def lift(e):
            full = [0] * self.n
            for k, v in fixed.items():
                full[k] = v
            for k, v in zip(free, e):
                full[k] = v
            return tuple(full)

        m = len(free)
        verts = {e: self.vertices[lift(e)] for e in vertices_of(m)}
        edges = {(e, i): self.edges[(lift(e), free[i])] for e in verts for i in range(m) if e[i] == 0}
        return Cube(m, self.target, verts, edges)

    def as_functor(self) -> Functor:
        index = build_index("cube", self.n)
        return Functor(index, self.base, self.vertices, {(a, b): self.map(a, b) for a, b in index.morphism_list})

    @classmethod
    def from_functor(cls, F: Functor, target) -> "Cube":
        n = len(F.source.object_list[0])
        verts = {e: F.obj(e) for e in vertices_of(n)}
        edges = {(e, k): F.mor((e, _raise(e, k))) for e in verts for k in range(n) if e[k] == 0}
        return cls(n, target, verts, edges)


def point_cube(target, obj) -> Cube:
    return Cube(0, target, {(): obj}, {})


def morphism_cube(target, f) -> Cube:
    base = target.base
    return Cube(1, target, {(0,): base.dom(f), (1,): base.cod(f)}, {((0,), 0): f})


def square(target, top, left, right, bottom) -> Cube:
    """The square ``A -top-> B``, ``A -left-> C``, ``B -right-> D``, ``C -bottom-> D``.

    Axis 1 is the ``top`` direction and axis 2 the ``left`` direction.
    """
    base = target.base
    verts = {(0, 0): base.dom(top), (1, 0): base.cod(top), (0, 1): base.cod(left), (1, 1): base.cod(right)}
    edges = {((0, 0), 0): top, ((0, 0), 1): left, ((1, 0), 1): right, ((0, 1), 0): bottom}
    return Cube(2, target, verts, edges)


def face(I: Cube, k: int, eps: int) -> Cube:
    """The face with axis ``k`` (counted from 1) fixed at ``eps``."""
    if not 1 <= k <= I.n:
        raise ValueError(f"axis {k} out of range for a {I.n}-cube")
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    return I.subcube({k - 1: eps})


def arrow_cube(I: Cube, J: Cube, alpha) -> Cube:
    """The cube ``[alpha]`` of one dimension more, with the transformation on the last axis.

    ``alpha`` maps vertices to components, or is a :class:`NatTrans`.
    """
    if I.n != J.n:
        raise ValueError("cubes of different dimensions")
    comp = alpha.component if isinstance(alpha, NatTrans) else (lambda e: alpha[e])
    base = I.base
    n = I.n
    for (eps, k), f in I.edges.items():
        up = _raise(eps, k)
        if base.compose(J.edges[(eps, k)], comp(eps)) != base.compose(comp(up), f):
            raise NaturalityError(f"components at {eps} and {up} do not commute with axis {k + 1}")
    verts = {}
    edges = {}
    for eps in vertices_of(n):
        verts[eps + (0,)] = I.vertices[eps]
        verts[eps + (1,)] = J.vertices[eps]
        edges[(eps + (0,), n)] = comp(eps)
        for k in range(n):
            if eps[k] == 0:
                edges[(eps + (0,), k)] = I.edges[(eps, k)]
                edges[(eps + (1,), k)] = J.edges[(eps, k)]
    return Cube(n + 1, I.target, verts, edges)


def split_arrow_cube(C: Cube) -> tuple[Cube, Cube, dict]:
    """Inverse of :func:`arrow_cube`: the two last-axis faces and the components."""
    n = C.n - 1
    I, J = face(C, C.n, 0), face(C, C.n, 1)
    return I, J, {eps: C.edges[(eps + (0,), n)] for eps in vertices_of(n)}


# --- punctured colimits --------------------------------------------------------


class _ColimitEngine:
    """Punctured colimits of all subcubes of one cube, memoized by fixed coordinates.

    A subcube is named by a tuple with entries ``None`` (free) or 0/1.
    """

    def __init__(self, I: Cube, strict: bool):
        self.I = I
        self.strict = strict
        self.memo: dict = {}
        self._vertex: dict = {}

    def vertex(self, key: tuple, e: tuple) -> tuple:
        table = self._vertex.get(key)
        if table is None:
            table = self._vertex[key] = {}
            m = sum(v is None for v in key)
            for sub in vertices_of(m):
                it = iter(sub)
                table[sub] = tuple(next(it) if v is None else v for v in key)
        return table[e]

    def free(self, key: tuple) -> list[int]:
        return [k for k, v in enumerate(key) if v is None]

    def punctured(self, key: tuple) -> Colimit:
        hit = self.memo.get(key)
        if hit is None:
            hit = self.memo[key] = self._punctured(key)
        return hit

    def _punctured(self, key: tuple) -> Colimit:
        I, W = self.I, self.I.target
        base = W.base
        free = self.free(key)
        m = len(free)
        if m == 0:
            z = W.zero

            def factor0(cocone, apex):
                return base.zero_map(z, apex)

            return Colimit(z, {}, factor0)
        if m == 1:
            v0 = self.vertex(key, (0,))

            def factor1(cocone, apex):
                return cocone[(0,)]

            return Colimit(I.vertices[v0], {(0,): base.identity(I.vertices[v0])}, factor1)

        last = free[-1]
        k0 = key[:last] + (0,) + key[last + 1:]
        k1 = key[:last] + (1,) + key[last + 1:]
        L0, L1 = self.punctured(k0), self.punctured(k1)
        ones = (1,) * (m - 1)
        corner = self.vertex(key, ones + (0,))
        corner_obj = I.vertices[corner]
        # the punctured colimit of the 0-face maps to its top vertex and to the 1-face's colimit
        to_corner = L0.factor({e: I.map(self.vertex(key, e + (0,)), corner) for e in L0.legs}, corner_obj)
        across = L0.factor(
            {e: base.compose(L1.legs[e], I.map(self.vertex(key, e + (0,)), self.vertex(key, e + (1,)))) for e in L0.legs},
            L1.obj,
        )
        po = W.pushout(across, to_corner, strict=self.strict)
        legs = {}
        for e in vertices_of(m):
            if e == (1,) * m:
                continue
            if e[-1] == 1:
                legs[e] = base.compose(po.leg_b, L1.legs[e[:-1]])
            else:
                legs[e] = base.compose(po.leg_c, I.map(self.vertex(key, e), corner))

        def factor(cocone, apex):
            hb = L1.factor({e: cocone[e + (1,)] for e in L1.legs}, apex)
            return po.factor(hb, cocone[ones + (0,)])

        return Colimit(po.obj, legs, factor)

    def southern(self, key: tuple):
        L = self.punctured(key)
        m = len(self.free(key))
        top = self.vertex(key, (1,) * m)
        return L.factor({e: self.I.map(self.vertex(key, e), top) for e in L.legs}, self.I.vertices[top])


def punctured_colimit(I: Cube, strict: bool = True) -> Colimit:
    """The colimit of the cube with its terminal vertex removed.

    Legs are keyed by the remaining vertices. With ``strict`` set, every
    pushout used must have a cofibration leg, otherwise
    :class:`~waldcat.errors.NoPushoutError` is raised.
    """
    return _ColimitEngine(I, strict).punctured((None,) * I.n)


def southern_arrow(I: Cube, strict: bool = True):
    """The comparison map from the punctured colimit to the terminal vertex."""
    return _ColimitEngine(I, strict).southern((None,) * I.n)


# --- goodness --------------------------------------------------------------------


@dataclass
class GoodReport:
    good: bool
    face: dict = field(default_factory=dict)
    reason: str = ""
    checked: int = 0

    def __bool__(self) -> bool:
        return self.good


def _subcube_keys(n: int):
    """All subcube keys, smallest dimension first."""
    keys = list(itertools.product((None, 0, 1), repeat=n))
    keys.sort(key=lambda k: sum(v is None for v in k))
    return keys


def is_good(I: Cube, strict: bool = True) -> GoodReport:
    """Check that every subcube (including ``I``) has a cofibration as southern arrow.

    Subcubes are visited from the smallest dimension up, so the reported
    face is a lowest-dimensional failure; ``face`` maps 1-based axes to the
    fixed values.
    """
    W = I.target
    eng = _ColimitEngine(I, strict)
    checked = 0
    for key in _subcube_keys(I.n):
        m = sum(v is None for v in key)
        if m == 0:
            continue
        checked += 1
        where = {k + 1: v for k, v in enumerate(key) if v is not None}
        try:
            arrow = eng.southern(key)
        except NoPushoutError as exc:
            return GoodReport(False, where, f"southern arrow does not exist: {exc}", checked)
        if not W.is_cofibration(arrow):
            return GoodReport(False, where, f"southern arrow {arrow!r} is not a cofibration", checked)
    return GoodReport(True, {}, "", checked)


# --- the pushout of good cubes ---------------------------------------------------------


@dataclass
class CubePushout:
    cube: Cube
    beta: dict
    leg_j: dict


def _require_good(label: str, C: Cube) -> None:
    rep = is_good(C)
    if not rep.good:
        raise HypothesisError(f"{label} is not good (face {rep.face}): {rep.reason}")


def good_pushout(I: Cube, J: Cube, K: Cube, alpha, gamma, verify: bool = True, check_hypotheses: bool = True) -> CubePushout:
    """Pushout of ``K <-gamma- I -alpha-> J`` computed vertexwise.

    Requires ``I``, ``J``, ``K`` and ``[alpha]`` good. The result carries the
    pushout cube and ``beta: K => J u_I K``; with ``verify`` the goodness of
    ``[beta]`` is checked and a failure raises
    :class:`~waldcat.errors.PostconditionError`. Callers that enumerate
    inputs already known to be good may skip the hypothesis checks.
    """
    if not (I.n == J.n == K.n):
        raise ValueError("cubes of different dimensions")
    if check_hypotheses:
        for label, C in (("I", I), ("J", J), ("K", K)):
            _require_good(label, C)
        _require_good("[alpha]", arrow_cube(I, J, alpha))
        arrow_cube(I, K, gamma)  # naturality of gamma
    a_of = alpha.component if isinstance(alpha, NatTrans) else (lambda e: alpha[e])
    g_of = gamma.component if isinstance(gamma, NatTrans) else (lambda e: gamma[e])
    W = I.target
    base = W.base
    pos = {e: W.pushout(a_of(e), g_of(e)) for e in I.vertices}
    verts = {e: pos[e].obj for e in pos}
    edges = {}
    for (e, k) in I.edges:
        up = _raise(e, k)
        edges[(e, k)] = pos[e].factor(
            base.compose(pos[up].leg_b, J.edges[(e, k)]),
            base.compose(pos[up].leg_c, K.edges[(e, k)]),
        )
    P = Cube(I.n, W, verts, edges)
    beta = {e: pos[e].leg_c for e in pos}
    leg_j = {e: pos[e].leg_b for e in pos}
    if verify:
        rep = is_good(arrow_cube(K, P, beta))
        if not rep.good:
            raise PostconditionError(f"[beta] is not good (face {rep.face}): {rep.reason}")
    return CubePushout(P, beta, leg_j)


def enumerate_cubes(W, n: int, bound: int | None = None, objects=None, cofibrant_edges: bool = False):
    """All commuting n-cubes with vertices in the skeleton (or ``objects``).

    With ``cofibrant_edges`` only cofibrations are used as edges, which is
    necessary for goodness and prunes the search a great deal.
    """
    objs = list(objects) if objects is not None else W.skeleton(bound)
    verts = vertices_of(n)
    edge_keys = [(e, k) for e in verts for k in range(n) if e[k] == 0]
    for assignment in itertools.product(objs, repeat=len(verts)):
        vmap = dict(zip(verts, assignment))
        yield from _edge_search(W, n, vmap, edge_keys, 0, {}, cofibrant_edges)


def _edge_search(W, n, vmap, edge_keys, i, edges, cofibrant):
    base = W.base
    if i == len(edge_keys):
        yield Cube(n, W, vmap, edges)
        return
    e, k = edge_keys[i]
    up = _raise(e, k)
    for f in base.hom(vmap[e], vmap[up]):
        if cofibrant and not W.is_cofibration(f):
            continue
        edges[(e, k)] = f
        ok = all(
            base.compose(edges[(_raise(b, j), k2)], edges[(b, j)]) == base.compose(edges[(_raise(b, k2), j)], edges[(b, k2)])
            for b, j, k2 in _squares_through(e, k, n)
            if all(x in edges for x in ((b, j), (b, k2), (_raise(b, j), k2), (_raise(b, k2), j)))
        )
        if ok:
            yield from _edge_search(W, n, vmap, edge_keys, i + 1, edges, cofibrant)
        del edges[(e, k)]


def _squares_through(e: tuple, k: int, n: int):
    """Squares ``(base, j, k2)`` with ``j < k2`` having the edge ``(e, k)`` on their boundary."""
    for j in range(n):
        if j == k:
            continue
        lo, hi = min(j, k), max(j, k)
        if e[j] == 0:
            yield e, lo, hi
        else:
            yield e[:j] + (0,) + e[j + 1:], lo, hi


def enumerate_good_cubes(W, n: int, bound: int | None = None):
    for C in enumerate_cubes(W, n, bound, cofibrant_edges=True):
        if is_good(C).good:
            yield C


def enumerate_transformations(I: Cube, J: Cube, cofibrant: bool = False):
    """All natural transformations ``I => J`` as vertex-to-component dicts."""
    W = I.target
    base = W.base
    verts = vertices_of(I.n)
    comps: dict = {}

    def search(i):
        if i == len(verts):
            yield dict(comps)
            return
        e = verts[i]
        for f in base.hom(I.vertices[e], J.vertices[e]):
            if cofibrant and not W.is_cofibration(f):
                continue
            # every edge into e starts at an earlier vertex in lexicographic order
            if all(
                base.compose(J.edges[(d, k)], comps[d]) == base.compose(f, I.edges[(d, k)])
                for k in range(I.n)
                if e[k] == 1
                for d in [e[:k] + (0,) + e[k + 1:]]
            ):
                comps[e] = f
                yield from search(i + 1)
                del comps[e]

    yield from search(0)


@dataclass
class GoodPushoutSweep:
    triples: int = 0
    failures: list = field(default_factory=list)


def good_pushout_sweep(W, n: int, bound: int | None = None, limit: int = 10) -> GoodPushoutSweep:
    """Every triple ``K <-gamma- I -alpha-> J`` of good n-cubes with ``[alpha]`` good, in the skeleton.

    For each, the pushout cube and ``[beta]`` must both be good.
    """
    good = list(enumerate_good_cubes(W, n, bound))
    out = GoodPushoutSweep()
    for I in good:
        cof_arrows = []
        for J in good:
            for alpha in enumerate_transformations(I, J, cofibrant=True):
                if is_good(arrow_cube(I, J, alpha)).good:
                    cof_arrows.append((J, alpha))
        any_arrows = [(K, gamma) for K in good for gamma in enumerate_transformations(I, K)]
        for J, alpha in cof_arrows:
            for K, gamma in any_arrows:
                out.triples += 1
                res = good_pushout(I, J, K, alpha, gamma, verify=False, check_hypotheses=False)
                for label, C in (("pushout", res.cube), ("[beta]", arrow_cube(K, res.cube, res.beta))):
                    rep = is_good(C)
                    if not rep.good and len(out.failures) < limit:
                        out.failures.append((label, I, J, K, alpha, gamma, rep.face, rep.reason))
    return out

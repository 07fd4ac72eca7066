"""The S-construction on bounded skeleta.

An object of the (iterated) construction with shape ``(n_1, ..., n_m)`` is a
functor on the product of the arrow categories ``Ar<n_c>``; the object
``(j, i)`` of ``Ar<n>`` (with ``j <= i``) stands for the quotient of the
``i``-th stage of a filtration by the ``j``-th. Shape ``()`` is the category
itself: such an object has a single entry.

Simplicial operators act by precomposition with the induced maps of arrow
categories. Level sets are enumerated exhaustively and operators are stored
as index maps between consecutive levels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .cubes import Cube, is_good
from .errors import CAPS, HypothesisError, PostconditionError, check_cap
from .fincat import FinCat, Functor, NatTrans, build_index, enumerate_functors, product
from .functorcat import FunctorCategory
from .multiexact import MultiFunctor, check_k_exact
from .wald import WaldCat


@lru_cache(maxsize=None)
def ar_index(shape: tuple) -> FinCat:
    """Product of the arrow categories ``Ar<n>`` for ``n`` in ``shape``."""
    for n in shape:
        check_cap("S level", n, CAPS.max_cube_dim)
    return product([build_index("arrow_ordinal", n) for n in shape], name="Ar" + str(list(shape)))


@dataclass(frozen=True)
class SObject:
    shape: tuple
    X: Functor

    @property
    def n(self) -> int:
        if len(self.shape) != 1:
            raise ValueError("n is only defined for single S-objects")
        return self.shape[0]

    def at(self, *coords):
        """Entry at ``((j1, i1), (j2, i2), ...)``; for one coordinate ``at(j, i)`` also works."""
        if len(self.shape) == 1 and len(coords) == 2 and isinstance(coords[0], int):
            coords = ((coords[0], coords[1]),)
        return self.X.obj(tuple(coords))

    def map(self, src: tuple, dst: tuple):
        return self.X.mor((tuple((a, b) for a, b in zip(src, dst))))

    def __repr__(self) -> str:
        live = {k: v for k, v in self.X.object_map.items() if v != 0}
        return f"SObject{list(self.shape)}({live})"


def constant_object(W: WaldCat, A) -> SObject:
    """An object of ``W`` as an object of shape ``()``."""
    idx = ar_index(())
    return SObject((), Functor(idx, W.base, {(): A}, {(): W.base.identity(A)}))


def zero_object(W: WaldCat, shape: tuple) -> SObject:
    idx = ar_index(tuple(shape))
    z = W.zero
    return SObject(tuple(shape), Functor(idx, W.base, {a: z for a in idx.object_list},
                                          {m: W.base.identity(z) for m in idx.morphism_list}))


def _diag(a) -> bool:
    return any(j == i for j, i in a)


# --- the defining conditions -----------------------------------------------------------------


def s_violations(W: WaldCat, obj: SObject, limit: int = 10) -> list:
    """Conditions failing for ``obj``: zeros on the diagonal, pushout squares in every
    coordinate, and goodness of every cube of rightward moves (one axis per coordinate)."""
    base = W.base
    X, shape = obj.X, obj.shape
    idx = X.source
    bad: list = []
    for a in idx.object_list:
        if _diag(a) and X.obj(a) != W.zero:
            bad.append(("diagonal not zero", a))
    for c, n in enumerate(shape):
        for a in idx.object_list:
            if a[c] != (0, 0):
                continue
            for i, j, k in itertools.combinations(range(n + 1), 3):
                def at(p, a=a, c=c):
                    return a[:c] + (p,) + a[c + 1:]

                top = X.mor(_mor(at((i, j)), at((i, k))))
                left = X.mor(_mor(at((i, j)), at((j, j))))
                right = X.mor(_mor(at((i, k)), at((j, k))))
                bottom = X.mor(_mor(at((j, j)), at((j, k))))
                po = base.pushout(top, left)
                if not base.is_iso(po.factor(right, bottom)):
                    bad.append(("not a pushout square", c, a, (i, j, k)))
        if len(bad) >= limit:
            return bad
    for C, where in right_move_cubes(W, obj):
        rep = is_good(C)
        if not rep.good:
            bad.append(("cube not good", where, rep.face, rep.reason))
            if len(bad) >= limit:
                break
    return bad


def _mor(a: tuple, b: tuple) -> tuple:
    """Morphism id ``a -> b`` in a product of posets."""
    return tuple((x, y) for x, y in zip(a, b))


def _right_moves(n: int) -> list:
    return [((j, i), (j, i2)) for j in range(n + 1) for i in range(j, n + 1) for i2 in range(i + 1, n + 1)]


def right_move_cubes(W: WaldCat, obj: SObject):
    """Cubes with one axis per chosen coordinate, each axis a move ``(j, i) -> (j, i')``."""
    X, shape = obj.X, obj.shape
    m = len(shape)
    for r in range(1, m + 1):
        for coords in itertools.combinations(range(m), r):
            others = [c for c in range(m) if c not in coords]
            other_objs = [ar_index((shape[c],)).object_list for c in others]
            for moves in itertools.product(*(_right_moves(shape[c]) for c in coords)):
                for fixed in itertools.product(*other_objs):
                    def vertex(eps, moves=moves, fixed=fixed, coords=coords, others=others):
                        a = [None] * m
                        for c, (x,) in zip(others, fixed):
                            a[c] = x
                        for c, mv, e in zip(coords, moves, eps):
                            a[c] = mv[e]
                        return tuple(a)

                    verts = {eps: X.obj(vertex(eps)) for eps in itertools.product((0, 1), repeat=r)}
                    edges = {}
                    for eps in verts:
                        for k in range(r):
                            if eps[k] == 0:
                                up = eps[:k] + (1,) + eps[k + 1:]
                                edges[(eps, k)] = X.mor(_mor(vertex(eps), vertex(up)))
                    yield Cube(r, W, verts, edges), (coords, moves, fixed)


def is_s_object(W: WaldCat, obj: SObject) -> bool:
    return not s_violations(W, obj, limit=1)


# --- enumeration -------------------------------------------------------------------------------


def iterated_S(W: WaldCat, shape: Sequence[int], bound: int | None = None) -> list[SObject]:
    """All objects of the given shape with entries in the bounded skeleton (exhaustive search)."""
    shape = tuple(shape)
    idx = ar_index(shape)
    objs = W.skeleton(bound)
    z = W.zero

    def cands(a):
        return [z] if _diag(a) else objs

    out = []
    for X in enumerate_functors(idx, W.base, cands):
        S = SObject(shape, X)
        if is_s_object(W, S):
            out.append(S)
    return _canonical(out)


def _canonical(objs: list[SObject]) -> list[SObject]:
    return sorted(set(objs), key=lambda S: repr(S.X.tables))


def enumerate_Sn(W: WaldCat, n: int, bound: int | None = None) -> list[SObject]:
    """All objects of ``S_n`` over the bounded skeleton.

    A filtration ``X(0,1) -> ... -> X(0,n)`` of cofibrations is chosen first;
    each quotient entry is then an object isomorphic to the canonical pushout,
    together with the identification, and the remaining maps are forced.
    """
    base = W.base
    objs = W.skeleton(bound)
    z = W.zero
    idx = ar_index((n,))
    out = []
    if n == 0:
        return [zero_object(W, (0,))]
    for chain in itertools.product(objs, repeat=n):
        steps = [[c for c in base.hom(chain[t], chain[t + 1]) if W.is_cofibration(c)] for t in range(n - 1)]
        for cofs in itertools.product(*steps):
            row = {0: z, **{k + 1: chain[k] for k in range(n)}}

            def along(k, k2, cofs=cofs, row=row):
                f = base.identity(row[k]) if k > 0 else base.zero_map(z, row[k])
                if k == 0:
                    return base.zero_map(z, row[k2])
                for t in range(k, k2):
                    f = base.compose(cofs[t - 1], f)
                return f

            quotients = {}
            options = []
            for j in range(1, n + 1):
                for k in range(j + 1, n + 1):
                    po = base.pushout(along(j, k), base.zero_map(row[j], z))
                    quotients[(j, k)] = po
                    opts = [(o, phi) for o in objs for phi in base.isos(po.obj, o)]
                    options.append(((j, k), opts))
            for choice in itertools.product(*(o for _, o in options)):
                chosen = {key: c for (key, _), c in zip(options, choice)}
                X = _assemble_sn(W, n, idx, row, along, quotients, chosen)
                if X is not None:
                    out.append(SObject((n,), X))
    return _canonical(out)


def _assemble_sn(W, n, idx, row, along, quotients, chosen):
    base = W.base
    z = W.zero

    def entry(j, k):
        if j == k:
            return z
        if j == 0:
            return row[k]
        return chosen[(j, k)][0]

    def from_row(j, k):
        """The map ``X(0,k) -> X(j,k)``."""
        if j == 0:
            return base.identity(row[k])
        if j == k:
            return base.zero_map(row[k], z)
        o, phi = chosen[(j, k)]
        return base.compose(phi, quotients[(j, k)].leg_b)

    omap = {((j, k),): entry(j, k) for j in range(n + 1) for k in range(j, n + 1)}
    mmap = {}
    for m in idx.morphism_list:
        ((a, b),) = m
        (j, k), (j2, k2) = a, b
        target_map = base.compose(from_row(j2, k2), along(k, k2))
        if j == 0:
            mmap[m] = target_map
        elif j == k:
            mmap[m] = base.zero_map(z, entry(j2, k2))
        else:
            o, phi = chosen[(j, k)]
            po = quotients[(j, k)]
            u = po.factor(target_map, base.zero_map(z, entry(j2, k2)))
            mmap[m] = base.compose(u, base.inverse(phi))
    return Functor(idx, base, omap, mmap)


# --- simplicial operators ------------------------------------------------------------------------


def coface(n: int, d: int) -> Callable[[int], int]:
    """``<n-1> -> <n>`` skipping ``d``."""
    if not 0 <= d <= n:
        raise ValueError(f"face index {d} out of range for level {n}")
    return lambda x: x if x < d else x + 1


def codegeneracy(n: int, d: int) -> Callable[[int], int]:
    """``<n+1> -> <n>`` hitting ``d`` twice."""
    if not 0 <= d <= n:
        raise ValueError(f"degeneracy index {d} out of range for level {n}")
    return lambda x: x if x <= d else x - 1


def reindex(obj: SObject, new_shape: Sequence[int], thetas: Sequence[Callable[[int], int]]) -> SObject:
    """Precompose with the arrow-category maps induced by ``thetas`` (one per coordinate)."""
    new_shape = tuple(new_shape)
    idx = ar_index(new_shape)
    X = obj.X

    def move(a):
        return tuple((th(j), th(i)) for th, (j, i) in zip(thetas, a))

    omap = {a: X.obj(move(a)) for a in idx.object_list}
    mmap = {m: X.mor(tuple(zip(move(tuple(x for x, _ in m)), move(tuple(y for _, y in m))))) for m in idx.morphism_list}
    return SObject(new_shape, Functor(idx, X.target, omap, mmap))


def face(obj: SObject, d: int, coord: int = 0) -> SObject:
    n = obj.shape[coord]
    if n == 0:
        raise ValueError("level 0 has no faces")
    shape = obj.shape[:coord] + (n - 1,) + obj.shape[coord + 1:]
    thetas = [lambda x: x] * len(obj.shape)
    thetas[coord] = coface(n, d)
    return reindex(obj, shape, thetas)


def degeneracy(obj: SObject, d: int, coord: int = 0) -> SObject:
    n = obj.shape[coord]
    shape = obj.shape[:coord] + (n + 1,) + obj.shape[coord + 1:]
    thetas = [lambda x: x] * len(obj.shape)
    thetas[coord] = codegeneracy(n, d)
    return reindex(obj, shape, thetas)


def reindex_transformation(alpha: NatTrans, new_shape, thetas) -> NatTrans:
    shape_src = SObject(_shape_of(alpha.source), alpha.source)
    shape_tgt = SObject(_shape_of(alpha.target), alpha.target)
    S, T = reindex(shape_src, new_shape, thetas), reindex(shape_tgt, new_shape, thetas)
    comps = {a: alpha.component(tuple((th(j), th(i)) for th, (j, i) in zip(thetas, a))) for a in S.X.source.object_list}
    return NatTrans(S.X, T.X, comps)


def _shape_of(X: Functor) -> tuple:
    last = X.source.object_list[-1]
    return tuple(i for _, i in last)


@dataclass
class SimplicialTruncation:
    """Levels ``0..N`` of ``S_*`` with faces and degeneracies as index maps.

    ``faces[n][d][x]`` is the index in level ``n-1`` of the ``d``-th face of
    object ``x`` of level ``n``; ``degeneracies[n][d][x]`` points into level ``n+1``.
    """

    levels: list
    faces: dict = field(default_factory=dict)
    degeneracies: dict = field(default_factory=dict)


def face_degeneracy(levels: Sequence[Sequence[SObject]], n: int, d: int, kind: str) -> list[int]:
    if kind == "face":
        if not 1 <= n < len(levels):
            raise ValueError("face needs level n and n-1")
        lookup = {S: i for i, S in enumerate(levels[n - 1])}
        return [lookup[face(S, d)] for S in levels[n]]
    if kind == "degeneracy":
        if not 0 <= n < len(levels) - 1:
            raise ValueError("degeneracy needs level n and n+1")
        lookup = {S: i for i, S in enumerate(levels[n + 1])}
        return [lookup[degeneracy(S, d)] for S in levels[n]]
    raise ValueError("kind must be 'face' or 'degeneracy'")


def build_truncation(W: WaldCat, top: int, bound: int | None = None) -> SimplicialTruncation:
    levels = [enumerate_Sn(W, n, bound) for n in range(top + 1)]
    T = SimplicialTruncation(levels)
    for n in range(top + 1):
        if n >= 1:
            T.faces[n] = {d: face_degeneracy(levels, n, d, "face") for d in range(n + 1)}
        if n < top:
            T.degeneracies[n] = {d: face_degeneracy(levels, n, d, "degeneracy") for d in range(n + 1)}
    return T


def simplicial_identity_failures(T: SimplicialTruncation) -> list:
    """Every simplicial identity that can be evaluated inside the truncation."""
    bad = []
    top = len(T.levels) - 1
    F, D = T.faces, T.degeneracies

    def comp(g, f):
        return [g[x] for x in f]

    for n in range(2, top + 1):
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                # d_i d_j = d_{j-1} d_i
                if comp(F[n - 1][i], F[n][j]) != comp(F[n - 1][j - 1], F[n][i]):
                    bad.append(("dd", n, i, j))
    for n in range(top - 1):
        for i in range(n + 1):
            for j in range(i, n + 1):
                # s_i s_j = s_{j+1} s_i
                if comp(D[n + 1][i], D[n][j]) != comp(D[n + 1][j + 1], D[n][i]):
                    bad.append(("ss", n, i, j))
    for n in range(top):
        ident = list(range(len(T.levels[n])))
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = comp(F[n + 1][i], D[n][j])
                if i < j:
                    rhs = comp(D[n - 1][j - 1], F[n][i]) if n >= 1 else None
                elif i in (j, j + 1):
                    rhs = ident
                else:
                    rhs = comp(D[n - 1][j], F[n][i - 1]) if n >= 1 else None
                if rhs is not None and lhs != rhs:
                    bad.append(("ds", n, i, j))
    return bad


# --- S_n as a Waldhausen category ---------------------------------------------------------------


def sn_waldcat(W: WaldCat, n: int, bound: int | None = None, objects: Sequence[SObject] | None = None) -> WaldCat:
    """``S_n`` with levelwise weak equivalences.

    A transformation is a cofibration when, for every move ``(j, i) -> (j, i')``,
    the square it forms with the two rows is good.
    """
    objs = list(objects) if objects is not None else enumerate_Sn(W, n, bound)
    idx = ar_index((n,))
    FC = FunctorCategory(idx, W.base, [S.X for S in objs], name=f"S_{n}({W.name})")
    moves = _right_moves(n)

    def is_cof(alpha: NatTrans) -> bool:
        for a, b in moves:
            m = _mor((a,), (b,))
            C = Cube(2, W, {(0, 0): alpha.source.obj((a,)), (1, 0): alpha.source.obj((b,)),
                            (0, 1): alpha.target.obj((a,)), (1, 1): alpha.target.obj((b,))},
                     {((0, 0), 0): alpha.source.mor(m), ((0, 1), 0): alpha.target.mor(m),
                      ((0, 0), 1): alpha.component((a,)), ((1, 0), 1): alpha.component((b,))})
            if not is_good(C).good:
                return False
        return True

    def is_weq(alpha: NatTrans) -> bool:
        return all(W.is_weq(alpha.component(a)) for a in idx.object_list)

    return WaldCat(FC, is_cof, is_weq, name=f"S_{n}({W.name})", tags={"kind": "S", "n": n, "of": W.tags})


# --- the staircase objects and the circle -------------------------------------------------------


def rho(W: WaldCat, n: int, i: int, A) -> SObject:
    """``A`` at every ``(j, k)`` with ``j <= n - i < k`` and zero elsewhere."""
    if not 0 <= i <= n:
        raise ValueError(f"index {i} out of range for level {n}")
    return staircase(W, n, A, lambda j, k: j <= n - i < k)


def staircase(W: WaldCat, n: int, A, live: Callable[[int, int], bool]) -> SObject:
    """The diagram with ``A`` where ``live(j, k)`` holds, zero elsewhere, identities and zero maps."""
    base = W.base
    z = W.zero
    idx = ar_index((n,))
    omap = {a: (A if live(*a[0]) else z) for a in idx.object_list}
    mmap = {}
    for m in idx.morphism_list:
        ((x, y),) = m
        s, t = omap[(x,)], omap[(y,)]
        mmap[m] = base.identity(A) if live(*x) and live(*y) else base.zero_map(s, t)
    return SObject((n,), Functor(idx, base, omap, mmap))


def rho_map(W: WaldCat, n: int, i: int, f) -> NatTrans:
    base = W.base
    S, T = rho(W, n, i, base.dom(f)), rho(W, n, i, base.cod(f))
    comps = {a: (f if j <= n - i < k else base.identity(W.zero)) for a in S.X.source.object_list for (j, k) in a}
    return NatTrans(S.X, T.X, comps)


def circle_face(n: int, m: int, i: int) -> int:
    """Face ``d_m: S^1_n -> S^1_{n-1}``; ``i`` counts the trailing ones of a map ``<n> -> <1>``,
    and the two constant maps are the basepoint 0."""
    if i == 0:
        return 0
    out = i if m <= n - i else i - 1
    return 0 if out == n else out


def circle_degeneracy(n: int, m: int, i: int) -> int:
    if i == 0:
        return 0
    return i if m <= n - i else i + 1


@dataclass
class ReportLines:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_p(W: WaldCat, top: int = 3, bound: int | None = None) -> ReportLines:
    """Check that ``(A, i) -> rho_{n,i}(A)`` lands in ``S_n`` and commutes with faces and degeneracies,
    on objects and on morphisms."""
    rep = ReportLines()
    base = W.base
    objs = W.skeleton(bound)
    maps = [f for a in objs for b in objs for f in base.hom(a, b)]
    for n in range(top + 1):
        for i in range(n + 1):
            for A in objs:
                R = rho(W, n, i, A)
                rep.checked += 1
                if not is_s_object(W, R):
                    rep.failures.append(("not an S_n object", n, i, A))
                if (i == 0 or base.is_zero_object(A)) and R != zero_object(W, (n,)):
                    rep.failures.append(("basepoint not sent to zero", n, i, A))
                for m in range(n + 1):
                    rep.checked += 1
                    if n >= 1 and face(R, m) != rho(W, n - 1, circle_face(n, m, i), A):
                        rep.failures.append(("face", n, i, m, A))
                    if degeneracy(R, m) != rho(W, n + 1, circle_degeneracy(n, m, i), A):
                        rep.failures.append(("degeneracy", n, i, m, A))
            for f in maps:
                alpha = rho_map(W, n, i, f)
                for m in range(n + 1):
                    rep.checked += 1
                    if n >= 1:
                        lhs = reindex_transformation(alpha, (n - 1,), [coface(n, m)])
                        if lhs != rho_map(W, n - 1, circle_face(n, m, i), f):
                            rep.failures.append(("face on maps", n, i, m, f))
                    lhs = reindex_transformation(alpha, (n + 1,), [codegeneracy(n, m)])
                    if lhs != rho_map(W, n + 1, circle_degeneracy(n, m, i), f):
                        rep.failures.append(("degeneracy on maps", n, i, m, f))
    return rep


# --- pairing ---------------------------------------------------------------------------------------


def pairing(F: MultiFunctor, X1: SObject, X2: SObject, verify: bool = True) -> SObject:
    """``(a, b) -> F(X1(a), X2(b))`` on the concatenated shape."""
    if F.arity != 2:
        raise HypothesisError("pairing needs a functor of two variables")
    shape = X1.shape + X2.shape
    idx = ar_index(shape)
    m1 = len(X1.shape)
    omap = {a: F.obj((X1.X.obj(a[:m1]), X2.X.obj(a[m1:]))) for a in idx.object_list}
    mmap = {m: F.mor((X1.X.mor(m[:m1]), X2.X.mor(m[m1:]))) for m in idx.morphism_list}
    out = SObject(shape, Functor(idx, F.target.base, omap, mmap))
    if verify:
        bad = s_violations(F.target, out, limit=1)
        if bad:
            raise PostconditionError(f"pairing left the S-construction: {bad[0]}")
    return out


def pairing_map(F: MultiFunctor, a1: NatTrans, a2: NatTrans) -> NatTrans:
    m1 = len(a1.source.source.object_list[0])
    S = pairing(F, SObject(_shape_of(a1.source), a1.source), SObject(_shape_of(a2.source), a2.source), verify=False)
    T = pairing(F, SObject(_shape_of(a1.target), a1.target), SObject(_shape_of(a2.target), a2.target), verify=False)
    comps = {a: F.mor((a1.component(a[:m1]), a2.component(a[m1:]))) for a in S.X.source.object_list}
    return NatTrans(S.X, T.X, comps)


def constant_map(W: WaldCat, f) -> NatTrans:
    base = W.base
    S, T = constant_object(W, base.dom(f)), constant_object(W, base.cod(f))
    return NatTrans(S.X, T.X, {(): f})


def check_pairing(F: MultiFunctor, top: int = 3, bound: int | None = None, check_exact: bool = True) -> ReportLines:
    """``rho(F(A1, A2)) == F(A1, rho(A2)) == F(rho(A1), A2)`` entrywise, on objects and maps."""
    rep = ReportLines()
    if check_exact:
        ex = check_k_exact(F, bound=bound)
        if not ex.ok:
            raise HypothesisError(f"{F.name} is not biexact: {ex.summary()}")
    W1, W2 = F.sources
    T = F.target
    for n in range(top + 1):
        for i in range(n + 1):
            for A1 in W1.skeleton(bound):
                for A2 in W2.skeleton(bound):
                    rep.checked += 1
                    lhs = rho(T, n, i, F.obj((A1, A2)))
                    mid = pairing(F, constant_object(W1, A1), rho(W2, n, i, A2))
                    rhs = pairing(F, rho(W1, n, i, A1), constant_object(W2, A2))
                    if not (lhs.X == mid.X == rhs.X):
                        rep.failures.append(("objects", n, i, A1, A2))
            maps1 = W1.morphisms(bound)
            maps2 = W2.morphisms(bound)
            for f1 in maps1:
                for f2 in maps2:
                    rep.checked += 1
                    lhs = rho_map(T, n, i, F.mor((f1, f2)))
                    mid = pairing_map(F, constant_map(W1, f1), rho_map(W2, n, i, f2))
                    rhs = pairing_map(F, rho_map(W1, n, i, f1), constant_map(W2, f2))
                    if not (lhs == mid == rhs):
                        rep.failures.append(("maps", n, i, f1, f2))
    return rep


# --- the Grothendieck group ------------------------------------------------------------------------


@dataclass
class K0Presentation:
    generators: list
    relations: list
    invariant_factors: list
    rank: int

    @property
    def torsion(self) -> list:
        return [d for d in self.invariant_factors if d > 1]

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.rank:
            parts.insert(0, "Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"

    def free_generator(self):
        """For a group isomorphic to ``Z``, a generator class mapped to ``+-1``; otherwise ``None``."""
        if self.rank != 1 or self.torsion:
            return None
        from sympy import Matrix, igcd, ilcm

        n = len(self.generators)
        rel = Matrix(self.relations) if self.relations else Matrix.zeros(1, n)
        (v,) = rel.nullspace()
        v = v * ilcm(*[x.q for x in v])
        v = v / igcd(*[int(x) for x in v])
        for k, x in enumerate(v):
            if abs(x) == 1:
                return self.generators[k]
        return None

    def to_dict(self) -> dict:
        gen = self.free_generator()
        return {
            "free_generator": None if gen is None else repr(gen),
            "generators": [repr(g) for g in self.generators],
            "relations": self.relations,
            "invariant_factors": self.invariant_factors,
            "rank": self.rank,
            "group": self.describe(),
        }


def iso_classes(W: WaldCat, bound: int | None = None) -> list:
    """Representatives of isomorphism classes in the bounded skeleton."""
    reps: list = []
    for a in W.skeleton(bound):
        if not any(W.base.isos(a, r) for r in reps):
            reps.append(a)
    return reps


def k0_presentation(W: WaldCat, bound: int | None = None) -> K0Presentation:
    """Generators are iso classes; each ``S_2`` object gives ``[X(0,2)] = [X(0,1)] + [X(1,2)]``.

    Duplicate relation rows are kept once; they do not change the group.
    """
    gens = iso_classes(W, bound)

    def cls(a):
        for k, r in enumerate(gens):
            if W.base.isos(a, r):
                return k
        raise HypothesisError(f"{a!r} is not isomorphic to a skeleton object")

    rows = set()
    for S in enumerate_Sn(W, 2, bound):
        row = [0] * len(gens)
        row[cls(S.at(0, 2))] += 1
        row[cls(S.at(0, 1))] -= 1
        row[cls(S.at(1, 2))] -= 1
        rows.add(tuple(row))
    from sympy import Matrix
    from sympy.matrices.normalforms import invariant_factors

    rels = sorted(rows, reverse=True)
    if rels:
        facs = [int(d) for d in invariant_factors(Matrix(rels)) if d != 0]
    else:
        facs = []
    rank = len(gens) - len(facs)
    return K0Presentation(gens, [list(r) for r in rels], facs, rank)

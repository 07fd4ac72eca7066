"""Finite pointed sets.

The object ``n`` stands for the pointed set ``{0, 1, ..., n}`` with basepoint
``0``. Every finite pointed set is isomorphic to exactly one of these, so the
category is skeletal and colimits can be returned in canonical form.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from .errors import CAPS, check_cap
from .fincat import TargetCategory


class PMap:
    """A basepoint-preserving map ``{0..dom} -> {0..cod}``; ``img[x]`` is the image of ``x``."""

    __slots__ = ("dom", "cod", "img", "_hash")

    def __init__(self, dom: int, cod: int, img: tuple):
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "img", tuple(img))
        object.__setattr__(self, "_hash", hash((dom, cod, self.img)))

    def __setattr__(self, name, value):
        raise AttributeError("PMap is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PMap)
            and self._hash == other._hash
            and self.dom == other.dom
            and self.cod == other.cod
            and self.img == other.img
        )

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (PMap, (self.dom, self.cod, self.img))

    def __call__(self, x: int) -> int:
        return self.img[x]

    def is_injective(self) -> bool:
        nonbase = [y for y in self.img[1:]]
        return 0 not in nonbase and len(set(nonbase)) == len(nonbase)

    def is_surjective(self) -> bool:
        return set(self.img) == set(range(self.cod + 1))

    def __repr__(self) -> str:
        return f"PMap({self.dom}->{self.cod}:{list(self.img[1:])})"


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # the smaller element stays the representative
            if rx < ry:
                self.parent[ry] = rx
            else:
                self.parent[rx] = ry


@lru_cache(maxsize=None)
def _all_maps(a: int, b: int) -> tuple:
    check_cap("pointed hom size", (b + 1) ** a, CAPS.max_enumeration)
    return tuple(PMap(a, b, (0,) + t) for t in itertools.product(range(b + 1), repeat=a))


@lru_cache(maxsize=None)
def _perms(a: int) -> tuple:
    return tuple(PMap(a, a, (0,) + p) for p in itertools.permutations(range(1, a + 1)))


class PointedSets(TargetCategory):
    """The category of finite pointed sets with canonical colimits."""

    name = "FinSet*"
    zero = 0

    def objects(self, bound=None):
        if bound is None:
            raise ValueError("pointed sets need an enumeration bound")
        return list(range(bound + 1))

    def hom(self, a, b):
        return _all_maps(a, b)

    def identity(self, a):
        return PMap(a, a, tuple(range(a + 1)))

    def compose(self, g: PMap, f: PMap) -> PMap:
        if f.cod != g.dom:
            raise ValueError(f"{g} o {f} not composable")
        gi = g.img
        return PMap(f.dom, g.cod, tuple(gi[y] for y in f.img))

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def is_identity(self, f):
        return f.dom == f.cod and f.img == tuple(range(f.dom + 1))

    def is_iso(self, f):
        return f.dom == f.cod and f.is_injective()

    def inverse(self, f):
        if not self.is_iso(f):
            return None
        inv = [0] * (f.dom + 1)
        for x, y in enumerate(f.img):
            inv[y] = x
        return PMap(f.cod, f.dom, tuple(inv))

    def isos(self, a, b):
        return list(_perms(a)) if a == b else []

    def iso_over(self, s1, s2):
        if s1.cod != s2.cod or s1.dom != s2.dom:
            return None
        pre: dict = {}
        for x, y in enumerate(s2.img):
            pre.setdefault(y, []).append(x)
        img = [0]
        used = {0}

        def search(x):
            if x > s1.dom:
                return True
            for c in pre.get(s1.img[x], []):
                if c not in used:
                    img.append(c)
                    used.add(c)
                    if search(x + 1):
                        return True
                    img.pop()
                    used.discard(c)
            return False

        if s1.img[0] != 0 or not search(1):
            return None
        return PMap(s1.dom, s2.dom, tuple(img))

    def zero_map(self, a, b):
        return PMap(a, b, (0,) * (a + 1))

    def is_zero_object(self, a):
        return a == 0

    def coproduct(self, objs: Sequence[int]):
        total = sum(objs)
        check_cap("pointed set size", total, CAPS.max_enumeration)
        injections = []
        offset = 0
        for n in objs:
            injections.append(PMap(n, total, (0,) + tuple(range(offset + 1, offset + n + 1))))
            offset += n
        return total, injections

    def copair(self, maps: Sequence[PMap], cod: int) -> PMap:
        img = [0]
        for m in maps:
            if m.cod != cod:
                raise ValueError("copair legs disagree on codomain")
            img.extend(m.img[1:])
        return PMap(len(img) - 1, cod, tuple(img))

    def coequalizer(self, f: PMap, g: PMap):
        if f.dom != g.dom or f.cod != g.cod:
            raise ValueError("coequalizer needs a parallel pair")
        uf = UnionFind(f.cod + 1)
        for x, y in zip(f.img, g.img):
            uf.union(x, y)
        labels: dict = {}
        img = []
        for y in range(f.cod + 1):
            r = uf.find(y)
            if r not in labels:
                labels[r] = len(labels)
            img.append(labels[r])
        n = len(labels) - 1
        return n, PMap(f.cod, n, tuple(img))

    def section(self, q: PMap) -> PMap:
        first: dict = {}
        for x, y in enumerate(q.img):
            first.setdefault(y, x)
        if len(first) != q.cod + 1:
            raise ValueError("section of a non-surjective map")
        return PMap(q.cod, q.dom, tuple(first[y] for y in range(q.cod + 1)))


FINSET = PointedSets()


def is_injective(f: PMap) -> bool:
    return f.is_injective()


# --- smash and wedge ---------------------------------------------------------


def smash_objects(*objs: int) -> int:
    out = 1
    for n in objs:
        out *= n
    return out


def _smash_index(xs: Sequence[int], sizes: Sequence[int]) -> int:
    """Position of ``(x_1, ..., x_k)`` in the lexicographic order of non-base tuples."""
    if any(x == 0 for x in xs):
        return 0
    idx = 0
    for x, n in zip(xs, sizes):
        idx = idx * n + (x - 1)
    return idx + 1


def smash_maps(*maps: PMap) -> PMap:
    doms = [m.dom for m in maps]
    cods = [m.cod for m in maps]
    img = [0]
    for xs in itertools.product(*(range(1, d + 1) for d in doms)):
        img.append(_smash_index([m.img[x] for m, x in zip(maps, xs)], cods))
    return PMap(smash_objects(*doms), smash_objects(*cods), tuple(img))


def wedge_maps(*maps: PMap) -> PMap:
    cod_total, inj = FINSET.coproduct([m.cod for m in maps])
    return FINSET.copair([FINSET.compose(i, m) for i, m in zip(inj, maps)], cod_total)

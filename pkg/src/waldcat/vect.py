"""Finite-dimensional vector spaces over a prime field.

The object ``d`` is the standard space ``F_p^d``. A morphism is stored in
column-major form: ``cols[j]`` is the image of the j-th basis vector.
Quotients use a fixed row-reduction pivot rule, so cokernels are canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import CAPS, check_cap
from .fincat import TargetCategory


@dataclass(frozen=True)
class LinMap:
    p: int
    dom: int
    cod: int
    cols: tuple

    @property
    def array(self) -> np.ndarray:
        if self.dom == 0 or self.cod == 0:
            return np.zeros((self.cod, self.dom), dtype=np.int64)
        return np.array(self.cols, dtype=np.int64).T

    @classmethod
    def from_array(cls, p: int, arr: np.ndarray) -> "LinMap":
        arr = np.asarray(arr, dtype=np.int64) % p
        cod, dom = arr.shape
        return cls(p, dom, cod, tuple(tuple(int(v) for v in arr[:, j]) for j in range(dom)))

    def __repr__(self) -> str:
        return f"LinMap({self.dom}->{self.cod}:{[list(c) for c in self.cols]})"


def rref(rows: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod ``p`` and its pivot columns (leftmost pivot rule)."""
    m = np.array(rows, dtype=np.int64) % p
    if m.size == 0:
        return m.reshape(0, m.shape[1] if m.ndim == 2 else 0), []
    pivots = []
    r = 0
    for c in range(m.shape[1]):
        nz = [i for i in range(r, m.shape[0]) if m[i, c] % p]
        if not nz:
            continue
        i = nz[0]
        m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        for k in range(m.shape[0]):
            if k != r and m[k, c]:
                m[k] = (m[k] - m[k, c] * m[r]) % p
        pivots.append(c)
        r += 1
        if r == m.shape[0]:
            break
    return m[:r], pivots


def rank(f: LinMap) -> int:
    if f.dom == 0 or f.cod == 0:
        return 0
    return len(rref(f.array.T, f.p)[1])


class VectFp(TargetCategory):
    def __init__(self, p: int):
        if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
            raise ValueError("p must be prime")
        self.p = p
        self.name = f"Vect(F_{p})"
        self.zero = 0
        self._hom_cache: dict = {}

    def objects(self, bound=None):
        if bound is None:
            raise ValueError("vector spaces need an enumeration bound")
        return list(range(bound + 1))

    def hom(self, a, b):
        key = (a, b)
        if key not in self._hom_cache:
            check_cap("linear hom size", self.p ** (a * b), CAPS.max_enumeration)
            vecs = list(itertools.product(range(self.p), repeat=b))
            self._hom_cache[key] = tuple(
                LinMap(self.p, a, b, cols) for cols in itertools.product(vecs, repeat=a)
            )
        return self._hom_cache[key]

    def identity(self, a):
        return LinMap(self.p, a, a, tuple(tuple(int(i == j) for i in range(a)) for j in range(a)))

    def compose(self, g: LinMap, f: LinMap) -> LinMap:
        if f.cod != g.dom:
            raise ValueError(f"{g} o {f} not composable")
        p, gc = self.p, g.cols
        cols = []
        for col in f.cols:
            acc = [0] * g.cod
            for k, x in enumerate(col):
                if x:
                    for i, y in enumerate(gc[k]):
                        acc[i] += x * y
            cols.append(tuple(v % p for v in acc))
        return LinMap(p, f.dom, g.cod, tuple(cols))

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def is_injective(self, f: LinMap) -> bool:
        return rank(f) == f.dom

    def is_iso(self, f):
        return f.dom == f.cod and rank(f) == f.dom

    def inverse(self, f):
        if not self.is_iso(f):
            return None
        n = f.dom
        if n == 0:
            return f
        aug = np.concatenate([f.array, np.eye(n, dtype=np.int64)], axis=1)
        red, _ = rref(aug, self.p)
        return LinMap.from_array(self.p, red[:, n:])

    @lru_cache(maxsize=None)
    def isos(self, a, b):
        if a != b:
            return []
        return [f for f in self.hom(a, a) if self.is_iso(f)]

    def iso_over(self, s1, s2):
        if s1.cod != s2.cod or s1.dom != s2.dom:
            return None
        for phi in self.isos(s1.dom, s2.dom):
            if self.compose(s2, phi) == s1:
                return phi
        return None

    def zero_map(self, a, b):
        return LinMap(self.p, a, b, tuple((0,) * b for _ in range(a)))

    def is_zero_object(self, a):
        return a == 0

    def coproduct(self, objs: Sequence[int]):
        total = sum(objs)
        injections = []
        offset = 0
        for n in objs:
            cols = tuple(tuple(int(i == offset + j) for i in range(total)) for j in range(n))
            injections.append(LinMap(self.p, n, total, cols))
            offset += n
        return total, injections

    def copair(self, maps: Sequence[LinMap], cod: int) -> LinMap:
        cols = []
        for m in maps:
            if m.cod != cod:
                raise ValueError("copair legs disagree on codomain")
            cols.extend(m.cols)
        return LinMap(self.p, len(cols), cod, tuple(cols))

    def coequalizer(self, f: LinMap, g: LinMap):
        """Cokernel of ``f - g`` with the non-pivot standard vectors as basis."""
        if f.dom != g.dom or f.cod != g.cod:
            raise ValueError("coequalizer needs a parallel pair")
        w = f.cod
        if f.dom == 0 or w == 0:
            return w, self.identity(w)
        diff = (f.array - g.array) % self.p
        basis, pivots = rref(diff.T, self.p)
        free = [c for c in range(w) if c not in pivots]
        q = np.zeros((len(free), w), dtype=np.int64)
        for k in range(w):
            v = np.zeros(w, dtype=np.int64)
            v[k] = 1
            for row, c in zip(basis, pivots):
                if v[c]:
                    v = (v - v[c] * row) % self.p
            q[:, k] = v[free]
        return len(free), LinMap.from_array(self.p, q) if len(free) else self.zero_map(w, 0)

    def section(self, q: LinMap) -> LinMap:
        """Right inverse sending the t-th basis vector to the t-th free coordinate."""
        free = []
        for t in range(q.cod):
            target = tuple(int(i == t) for i in range(q.cod))
            j = next((j for j, c in enumerate(q.cols) if c == target), None)
            if j is None:
                raise ValueError("map is not a canonical quotient")
            free.append(j)
        cols = tuple(tuple(int(i == j) for i in range(q.dom)) for j in free)
        return LinMap(self.p, q.cod, q.dom, cols)


def tensor_maps(*maps: LinMap) -> LinMap:
    p = maps[0].p
    arr = np.ones((1, 1), dtype=np.int64)
    for m in maps:
        arr = np.kron(arr, m.array) if m.dom and m.cod else np.zeros((arr.shape[0] * m.cod, arr.shape[1] * m.dom), dtype=np.int64)
    return LinMap.from_array(p, arr)

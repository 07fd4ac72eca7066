"""JSON and DOT encodings.

Values (objects and morphisms of the builtin bases, tuples, table functors)
are encoded structurally with a one-key tag so they decode exactly. Index
category objects are also written as strings for readability. Output is
key-sorted so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .cubes import Cube
from .fincat import FinCat, Functor, NatTrans
from .multiexact import MultiFunctor
from .pointed import PMap
from .vect import LinMap
from .wald import WaldCat, from_tags

FORMAT_VERSION = 1


class FormatError(ValueError):
    pass


def encode_value(v: Any) -> Any:
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, PMap):
        return {"pmap": [v.dom, v.cod, list(v.img)]}
    if isinstance(v, LinMap):
        return {"linmap": [v.p, v.dom, v.cod, [list(c) for c in v.cols]]}
    if isinstance(v, tuple):
        return {"tuple": [encode_value(x) for x in v]}
    if isinstance(v, list):
        return [encode_value(x) for x in v]
    if isinstance(v, Functor):
        return {"functor": functor_to_dict(v)}
    if isinstance(v, NatTrans):
        return {"nattrans": nattrans_to_dict(v)}
    if isinstance(v, dict):
        return {"dict": [[encode_value(k), encode_value(x)] for k, x in v.items()]}
    return {"repr": repr(v)}


def decode_value(d: Any) -> Any:
    if d is None or isinstance(d, (bool, int, str)):
        return d
    if isinstance(d, list):
        return [decode_value(x) for x in d]
    if not isinstance(d, dict) or len(d) != 1:
        raise FormatError(f"not an encoded value: {d!r}")
    (tag, body), = d.items()
    if tag == "pmap":
        return PMap(body[0], body[1], tuple(body[2]))
    if tag == "linmap":
        return LinMap(body[0], body[1], body[2], tuple(tuple(c) for c in body[3]))
    if tag == "tuple":
        return tuple(decode_value(x) for x in body)
    if tag == "dict":
        return {decode_value(k): decode_value(x) for k, x in body}
    if tag == "repr":
        return body
    if tag == "functor":
        return functor_from_dict(body)
    if tag == "nattrans":
        return nattrans_from_dict(body)
    raise FormatError(f"unknown value tag {tag!r}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


# --- finite categories, functors, transformations ----------------------------------------


def fincat_to_dict(C: FinCat) -> dict:
    """Objects as strings, morphisms as ``{id, dom, cod}``, composition as explicit pairs."""
    s = repr
    comp = [[s(g), s(f), s(C.compose(g, f))] for g, f in C.composable_pairs()]
    return {
        "kind": "fincat",
        "name": C.name,
        "objects": [s(a) for a in C.object_list],
        "morphisms": [{"id": s(m), "dom": s(C.dom(m)), "cod": s(C.cod(m))} for m in C.morphism_list],
        "identities": {s(a): s(C.identity(a)) for a in C.object_list},
        "composition": comp,
        "values": {"objects": [encode_value(a) for a in C.object_list],
                   "morphisms": [encode_value(m) for m in C.morphism_list]},
    }


def fincat_from_dict(d: dict) -> FinCat:
    """Inverse of :func:`fincat_to_dict`; uses the structural values when present."""
    _expect(d, "fincat")
    names_o, names_m = d["objects"], [m["id"] for m in d["morphisms"]]
    vals = d.get("values")
    if vals:
        objs = [decode_value(v) for v in vals["objects"]]
        mors = [decode_value(v) for v in vals["morphisms"]]
    else:
        objs, mors = list(names_o), list(names_m)
    o = dict(zip(names_o, objs))
    m = dict(zip(names_m, mors))
    triples = [(m[x["id"]], o[x["dom"]], o[x["cod"]]) for x in d["morphisms"]]
    comp = {(m[g], m[f]): m[h] for g, f, h in d["composition"]}
    return FinCat(objs, triples, {o[a]: m[i] for a, i in d["identities"].items()}, comp, name=d.get("name", ""))


def functor_to_dict(F: Functor, target: WaldCat | None = None) -> dict:
    out = {
        "kind": "functor",
        "name": F.name,
        "source": fincat_to_dict(F.source),
        "objects": [[repr(a), encode_value(F.obj(a))] for a in F.source.object_list],
        "morphisms": [[repr(m), encode_value(F.mor(m))] for m in F.source.morphism_list],
    }
    if target is not None:
        out["target"] = wald_to_dict(target)
    return out


def functor_from_dict(d: dict, target=None) -> Functor:
    _expect(d, "functor")
    src = fincat_from_dict(d["source"])
    if target is None and "target" in d:
        target = wald_from_dict(d["target"]).base
    objs = [decode_value(v) for _, v in d["objects"]]
    mors = [decode_value(v) for _, v in d["morphisms"]]
    return Functor(src, target, dict(zip(src.object_list, objs)), dict(zip(src.morphism_list, mors)),
                   name=d.get("name", ""))


def nattrans_to_dict(a: NatTrans) -> dict:
    return {
        "kind": "nattrans",
        "source": functor_to_dict(a.source),
        "target": functor_to_dict(a.target),
        "components": [[repr(x), encode_value(a.component(x))] for x in a.source.source.object_list],
    }


def nattrans_from_dict(d: dict) -> NatTrans:
    _expect(d, "nattrans")
    S, T = functor_from_dict(d["source"]), functor_from_dict(d["target"])
    comps = [decode_value(v) for _, v in d["components"]]
    return NatTrans(S, T, dict(zip(S.source.object_list, comps)))


# --- Waldhausen categories -------------------------------------------------------------------


def wald_to_dict(W: WaldCat, bound: int | None = None) -> dict:
    """Builtins by tags; anything else by explicit skeleton, cofibration and weq lists."""
    if W.tags.get("name"):
        return {"kind": "waldcat", "name": W.name, "builtin": dict(W.tags)}
    objs = W.skeleton(bound)
    mors = W.morphisms(bound)
    return {
        "kind": "waldcat",
        "name": W.name,
        "tags": {k: v for k, v in W.tags.items() if isinstance(v, (str, int, bool))},
        "objects": [encode_value(a) for a in objs],
        "zero": encode_value(W.zero),
        "morphisms": [{"value": encode_value(f), "dom": objs.index(W.base.dom(f)),
                       "cod": objs.index(W.base.cod(f))} for f in mors],
        "cofibrations": [i for i, f in enumerate(mors) if W.is_cofibration(f)],
        "weqs": [i for i, f in enumerate(mors) if W.is_weq(f)],
    }


def wald_from_dict(d: dict) -> WaldCat:
    """Builtins are rebuilt from their tags; explicit documents become finite categories."""
    _expect(d, "waldcat")
    if "builtin" in d:
        return from_tags(d["builtin"])
    raise FormatError("only builtin categories can be reloaded; explicit documents are for inspection")


# --- cubes -----------------------------------------------------------------------------------------


def _bits(eps: tuple) -> str:
    return "".join(map(str, eps))


def _unbits(s: str) -> tuple:
    return tuple(int(c) for c in s)


def cube_to_dict(C: Cube) -> dict:
    edges = sorted(C.edges.items(), key=lambda kv: (_bits(kv[0][0]), kv[0][1]))
    return {
        "kind": "cube",
        "dimension": C.n,
        "target": wald_to_dict(C.target),
        "vertices": {_bits(e): encode_value(v) for e, v in sorted(C.vertices.items())},
        "edges": [{"from": _bits(e), "axis": k + 1, "map": encode_value(f)} for (e, k), f in edges],
    }


def cube_from_dict(d: dict) -> Cube:
    _expect(d, "cube")
    W = wald_from_dict(d["target"])
    verts = {_unbits(k): decode_value(v) for k, v in d["vertices"].items()}
    edges = {(_unbits(e["from"]), e["axis"] - 1): decode_value(e["map"]) for e in d["edges"]}
    return Cube(d["dimension"], W, verts, edges)


def cube_to_dot(C: Cube, name: str = "cube") -> str:
    """Layered digraph: one rank per number of ones in the vertex label."""
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    by_rank: dict[int, list] = {}
    for e in sorted(C.vertices):
        by_rank.setdefault(sum(e), []).append(e)
    for r in sorted(by_rank):
        names = " ".join(f'"{_bits(e)}"' for e in by_rank[r])
        lines.append(f"  {{ rank=same; {names} }}")
    for e in sorted(C.vertices):
        lines.append(f'  "{_bits(e)}" [label="{_bits(e)}: {_esc(C.vertices[e])}"];')
    for (e, k), f in sorted(C.edges.items(), key=lambda kv: (_bits(kv[0][0]), kv[0][1])):
        up = e[:k] + (1,) + e[k + 1:]
        lines.append(f'  "{_bits(e)}" -> "{_bits(up)}" [label="{_esc(f)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def functor_to_dot(F: Functor, name: str = "diagram") -> str:
    """Draw a diagram: one node per index object, one edge per non-identity generating morphism."""
    C = F.source
    lines = [f"digraph {name} {{"]
    for a in C.object_list:
        lines.append(f'  "{_esc(a)}" [label="{_esc(a)}: {_esc(F.obj(a))}"];')
    for m in C.morphism_list:
        if C.is_identity(m) or not _indecomposable(C, m):
            continue
        lines.append(f'  "{_esc(C.dom(m))}" -> "{_esc(C.cod(m))}" [label="{_esc(F.mor(m))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _indecomposable(C: FinCat, m) -> bool:
    a, b = C.dom(m), C.cod(m)
    for x in C.object_list:
        if x in (a, b):
            continue
        for f in C.hom(a, x):
            for g in C.hom(x, b):
                if C.compose(g, f) == m:
                    return False
    return True


def _esc(v) -> str:
    return repr(v).replace("\\", "\\\\").replace('"', '\\"')


def parse_dot_edges(text: str) -> list[tuple[str, str, str]]:
    """``(tail, head, label)`` for each edge line written by the exporters above."""
    import re

    pat = re.compile(r'^\s*"([^"]*)" -> "([^"]*)" \[label="((?:[^"\\]|\\.)*)"\];$')
    out = []
    for line in text.splitlines():
        m = pat.match(line)
        if m:
            out.append((m.group(1), m.group(2), m.group(3).replace('\\"', '"').replace("\\\\", "\\")))
    return out


# --- multifunctors -----------------------------------------------------------------------------------


def multifunctor_to_dict(F: MultiFunctor, bound: int | None = None) -> dict:
    """Explicit tables over the bounded skeleta, keyed by tuples."""
    import itertools

    skel = [W.skeleton(bound) for W in F.sources]
    tuples = [t for t in itertools.product(*skel) if F.defined_on(t)]
    maps = [W.morphisms(bound) for W in F.sources]
    mtuples = []
    live = set(tuples)
    for ms in itertools.product(*maps):
        ends = (tuple(W.base.dom(f) for W, f in zip(F.sources, ms)), tuple(W.base.cod(f) for W, f in zip(F.sources, ms)))
        if ends[0] in live and ends[1] in live:
            mtuples.append(ms)
    return {
        "kind": "multifunctor",
        "name": F.name,
        "sources": [wald_to_dict(W) for W in F.sources],
        "target": wald_to_dict(F.target),
        "objects": [[encode_value(t), encode_value(F.obj(t))] for t in tuples],
        "morphisms": [[encode_value(ms), encode_value(F.mor(ms))] for ms in mtuples],
    }


def multifunctor_from_dict(d: dict) -> MultiFunctor:
    _expect(d, "multifunctor")
    sources = [wald_from_dict(x) for x in d["sources"]]
    target = wald_from_dict(d["target"])
    otab = {decode_value(k): decode_value(v) for k, v in d["objects"]}
    mtab = {decode_value(k): decode_value(v) for k, v in d["morphisms"]}

    def obj(a):
        try:
            return otab[tuple(a)]
        except KeyError:
            raise FormatError(f"{d.get('name')} has no entry for {a!r}") from None

    def mor(m):
        try:
            return mtab[tuple(m)]
        except KeyError:
            raise FormatError(f"{d.get('name')} has no entry for {m!r}") from None

    return MultiFunctor(sources, target, obj, mor, name=d.get("name", "F"), domain=lambda a: tuple(a) in otab)


# --- K0 ------------------------------------------------------------------------------------------


def k0_to_dict(P) -> dict:
    return {"kind": "k0", **P.to_dict()}


def k0_from_dict(d: dict) -> dict:
    _expect(d, "k0")
    return {k: d[k] for k in ("generators", "relations", "invariant_factors", "rank", "group")}


# --- dispatch --------------------------------------------------------------------------------------


def to_dict(value, **kw) -> dict:
    from .sdot import K0Presentation, SObject

    if isinstance(value, FinCat):
        return fincat_to_dict(value)
    if isinstance(value, Functor):
        return functor_to_dict(value, **kw)
    if isinstance(value, NatTrans):
        return nattrans_to_dict(value)
    if isinstance(value, Cube):
        return cube_to_dict(value)
    if isinstance(value, MultiFunctor):
        return multifunctor_to_dict(value, **kw)
    if isinstance(value, K0Presentation):
        return k0_to_dict(value)
    if isinstance(value, SObject):
        return {"kind": "sobject", "shape": list(value.shape), "table": functor_to_dict(value.X)}
    if isinstance(value, WaldCat):
        return wald_to_dict(value, **kw)
    raise FormatError(f"no JSON encoding for {type(value).__name__}")


def to_dot(value, name: str = "g") -> str:
    if isinstance(value, Cube):
        return cube_to_dot(value, name)
    if isinstance(value, Functor):
        return functor_to_dot(value, name)
    if isinstance(value, FinCat):
        from .fincat import identity_functor

        return functor_to_dot(identity_functor(value), name)
    raise FormatError(f"no DOT rendering for {type(value).__name__}")


def export(value, fmt: str = "json", **kw) -> str:
    if fmt == "json":
        return dumps(to_dict(value, **kw))
    if fmt == "dot":
        return to_dot(value)
    raise FormatError(f"unsupported format {fmt!r}")


def _expect(d: dict, kind: str) -> None:
    if not isinstance(d, dict) or d.get("kind") != kind:
        raise FormatError(f"expected a {kind!r} document, got {d.get('kind') if isinstance(d, dict) else type(d).__name__!r}")

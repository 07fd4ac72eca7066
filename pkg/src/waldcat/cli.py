"""Command-line front end.

Exit codes: 0 everything passed, 1 a check failed, 2 usage or input error,
3 a size cap was exceeded. All file reading and writing happens here.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import __version__
from .errors import SizeCapError, WaldError
from .serialize import FormatError, dumps, export, multifunctor_from_dict, multifunctor_to_dict, to_dict
from .suites import SUITES, SuiteConfig, exact_witness, generators, replay, run_suite, suite_witness

OK, FAIL, USAGE, CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _config(args) -> SuiteConfig:
    cfg = SuiteConfig(builtin=args.builtin, size=args.size, n=args.n, arity=args.arity, jobs=args.jobs)
    cfg.validate()
    return cfg


def _functor(args, cfg: SuiteConfig):
    """A builtin multifunctor by name, or one read from ``--file``."""
    from .multiexact import projection, smash, tensor

    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            return multifunctor_from_dict(json.load(fh))
    W = cfg.category()
    name = args.functor
    if name == "projection":
        return projection(W, W)
    if name == "smash":
        return smash(W, args.arity)
    if name == "tensor":
        return tensor(W, args.arity)
    for G in generators(W, max(args.arity, 1)):
        if G.name.split("[")[0] in (name, {"identity": "id"}.get(name)):
            return G
    raise UsageError(f"unknown functor {name!r}")


# --- verbs ---------------------------------------------------------------------------------------


def cmd_run(args) -> int:
    cfg = _config(args)
    report = run_suite(args.suite, cfg)
    if args.format == "json":
        _write(dumps(report.to_dict()), args.out)
    else:
        text = "\n".join(report.lines() + [f"{'PASS' if report.ok else 'FAIL'} {args.suite}"]) + "\n"
        _write(text, args.out)
    if args.witness:
        _write(dumps(suite_witness(report)), args.witness)
    return OK if report.ok else FAIL


def cmd_replay(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        doc = json.load(fh)
    same, fresh = replay(doc)
    print(f"recorded {doc['verdict']}, replayed {fresh['verdict']}: {'reproduced' if same else 'DIFFERENT'}")
    return OK if same else FAIL


def cmd_export(args) -> int:
    from .cubes import enumerate_good_cubes
    from .fincat import build_index
    from .sdot import enumerate_Sn, k0_presentation

    cfg = _config(args)
    W = cfg.category()
    what = args.what
    if what in ("interval", "cube-index", "ordinal", "arrow-ordinal"):
        shape = {"interval": "interval", "cube-index": "cube", "ordinal": "ordinal", "arrow-ordinal": "arrow_ordinal"}[what]
        value = build_index(shape, None if shape == "interval" else args.n)
    elif what == "cube":
        value = next(itertools.islice(enumerate_good_cubes(W, args.n), args.index, None), None)
        if value is None:
            raise UsageError(f"there are fewer than {args.index + 1} good {args.n}-cubes")
    elif what == "k0":
        value = k0_presentation(W)
    elif what == "category":
        value = W
    elif what == "functor":
        value = _functor(args, cfg)
    elif what == "s-object":
        objs = enumerate_Sn(W, args.n)
        if args.index >= len(objs):
            raise UsageError(f"S_{args.n} has only {len(objs)} objects")
        value = objs[args.index]
    else:
        raise UsageError(f"cannot export {what!r}")
    fmt = "json" if args.format == "text" else args.format
    try:
        _write(export(value, fmt), args.out)
    except FormatError as exc:
        raise UsageError(str(exc)) from None
    return OK


def cmd_check_exact(args) -> int:
    from .multiexact import check_k_exact

    cfg = _config(args)
    F = _functor(args, cfg)
    rep = check_k_exact(F, args.mode)
    print(rep.summary())
    for ax in rep.failed:
        for w in rep.witnesses[ax]:
            print(f"  {ax}: {w!r}")
    if args.out:
        _write(dumps(exact_witness(multifunctor_to_dict(F), args.mode, rep)), args.out)
    return OK if rep.ok else FAIL


def cmd_compose(args) -> int:
    from .multiexact import check_k_exact, compose_multi

    cfg = _config(args)
    outer = _functor(args, cfg)
    inner_names = [x for x in args.inner.split(",") if x]
    if len(inner_names) != outer.arity:
        raise UsageError(f"{outer.name} needs {outer.arity} inner functors, got {len(inner_names)}")
    inner = [_functor(replace_ns(args, functor=n, arity=2), cfg) for n in inner_names]
    C = compose_multi(outer, inner)
    rep = check_k_exact(C)
    print(f"{C.name}: arity {C.arity}; {rep.summary()}")
    if args.out:
        _write(dumps(multifunctor_to_dict(C)), args.out)
    return OK if rep.ok else FAIL


def replace_ns(ns, **kw):
    out = argparse.Namespace(**vars(ns))
    for k, v in kw.items():
        setattr(out, k, v)
    return out


def cmd_box(args) -> int:
    from .multiexact import box_cube
    from .cubes import is_good

    cfg = _config(args)
    F = _functor(args, cfg)
    bad = 0
    total = 0
    for fs in itertools.product(*(W.cofibrations() for W in F.sources)):
        total += 1
        rep = is_good(box_cube(fs, F))
        if not rep.good:
            bad += 1
            print(f"not good: {fs!r} at face {rep.face}: {rep.reason}")
    print(f"{F.name}: {total - bad}/{total} box cubes good")
    if args.out and total:
        first = next(iter(itertools.product(*(W.cofibrations() for W in F.sources))))
        _write(export(box_cube(first, F), "dot" if args.format == "dot" else "json"), args.out)
    return OK if bad == 0 else FAIL


def cmd_build_hom(args) -> int:
    from .homwald import build_hom
    from .multiexact import check_k_exact
    from .homwald import evaluation
    from .wald import check_wald_axioms

    cfg = _config(args)
    src = cfg.category(args.source_size)
    H = build_hom([src] * args.arity, cfg.category())
    rep = check_wald_axioms(H)
    ev = check_k_exact(evaluation(H))
    print(f"{H.name}: {len(H.functors)} functors; {rep.summary()}; evaluation {ev.summary()}")
    if args.out:
        doc = to_dict(H)
        doc["functors"] = [multifunctor_to_dict(F) for F in H.functors]
        _write(dumps(doc), args.out)
    return OK if rep.ok and ev.ok else FAIL


def cmd_curry(args) -> int:
    from .homwald import build_hom, curry, tabulate, uncurry

    cfg = _config(args)
    F = _functor(args, cfg)
    k = args.k if args.k is not None else F.arity - 1
    H = build_hom(F.sources[:k], F.target)
    G = curry(F, H, k)
    back = uncurry(G, H)
    same = tabulate(back) == tabulate(F)
    print(f"curry({F.name}) lands in {H.name} ({len(H.functors)} functors); round trip {'ok' if same else 'FAILED'}")
    return OK if same else FAIL


def cmd_check_closed(args) -> int:
    from .homwald import check_closed_axioms

    cfg = _config(args)
    src = cfg.category(args.source_size)
    rep = check_closed_axioms([src] * args.k, [src] * args.l, cfg.category())
    print(rep.summary())
    return OK if rep.ok else FAIL


def cmd_enumerate_s(args) -> int:
    from .sdot import enumerate_Sn

    cfg = _config(args)
    W = cfg.category()
    objs = enumerate_Sn(W, args.n)
    print(f"S_{args.n}({W.name}): {len(objs)} objects")
    if args.out:
        _write(dumps({"kind": "s-level", "n": args.n, "category": to_dict(W), "objects": [to_dict(S) for S in objs]}), args.out)
    return OK


def cmd_k0(args) -> int:
    from .sdot import k0_presentation

    cfg = _config(args)
    P = k0_presentation(cfg.category())
    print(f"K0 = {P.describe()} (invariant factors {P.invariant_factors})")
    if args.out:
        _write(export(P, "json"), args.out)
    return OK


def cmd_check_p(args) -> int:
    from .sdot import check_p

    cfg = _config(args)
    rep = check_p(cfg.category(), args.n)
    print(f"{rep.checked} equations, {len(rep.failures)} failures")
    for f in rep.failures[:5]:
        print(f"  {f!r}")
    return OK if rep.ok else FAIL


def cmd_check_pairing(args) -> int:
    from .multiexact import smash
    from .sdot import check_pairing

    cfg = _config(args)
    rep = check_pairing(smash(cfg.category(), 2), args.n)
    print(f"{rep.checked} equalities, {len(rep.failures)} failures")
    for f in rep.failures[:5]:
        print(f"  {f!r}")
    return OK if rep.ok else FAIL


# --- parser --------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--builtin", default="finset_pointed", choices=["finset_pointed", "nstar", "vect_fp", "zero"])
    common.add_argument("--size", type=int, default=2, help="skeleton size (elements, or dimension + 1)")
    common.add_argument("--n", type=int, default=2, help="cube dimension or S-level")
    common.add_argument("--arity", type=int, default=2)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--format", default="text", choices=["text", "json", "dot"])

    p = argparse.ArgumentParser(prog="waldcat", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="verb", required=True)

    r = sub.add_parser("run", parents=[common], help="run a verification suite")
    r.add_argument("suite", nargs="?", choices=list(SUITES) + ["all"])
    r.add_argument("--suite", dest="suite_flag", choices=list(SUITES) + ["all"])
    r.add_argument("--witness", help="write a replayable witness file")
    r.set_defaults(func=cmd_run)

    r = sub.add_parser("replay", help="re-run the check recorded in a witness file")
    r.add_argument("file")
    r.set_defaults(func=cmd_replay)

    r = sub.add_parser("export", parents=[common], help="export a value as JSON or DOT")
    r.add_argument("what", choices=["interval", "cube-index", "ordinal", "arrow-ordinal", "cube", "k0",
                                    "category", "functor", "s-object"])
    r.add_argument("--index", type=int, default=0, help="which enumerated cube or S-object")
    r.add_argument("--functor", default="smash")
    r.add_argument("--file")
    r.set_defaults(func=cmd_export)

    for verb, fn, hlp in (("check-exact", cmd_check_exact, "check exactness of a functor"),
                          ("compose", cmd_compose, "compose functors and check the result"),
                          ("box", cmd_box, "check every box cube of a functor"),
                          ("curry", cmd_curry, "curry a functor into a hom category and back")):
        r = sub.add_parser(verb, parents=[common], help=hlp)
        r.add_argument("--functor", default="smash", help="identity, double, smash, tensor, projection")
        r.add_argument("--file", help="functor JSON instead of a builtin")
        if verb == "check-exact":
            r.add_argument("--mode", default="full", choices=["full", "reduced"])
        if verb == "compose":
            r.add_argument("--inner", required=True, help="comma-separated inner functor names")
        if verb == "curry":
            r.add_argument("--k", type=int, default=None, help="number of inputs that become hom variables")
        r.set_defaults(func=fn)

    r = sub.add_parser("build-hom", parents=[common], help="enumerate a hom category and check it")
    r.add_argument("--source-size", type=int, default=2)
    r.set_defaults(func=cmd_build_hom)

    r = sub.add_parser("check-closed", parents=[common], help="check currying and equivariance")
    r.add_argument("--k", type=int, default=1)
    r.add_argument("--l", type=int, default=1)
    r.add_argument("--source-size", type=int, default=2)
    r.set_defaults(func=cmd_check_closed)

    for verb, fn, hlp in (("enumerate-s", cmd_enumerate_s, "enumerate one level of the S-construction"),
                          ("k0", cmd_k0, "compute the K0 presentation"),
                          ("check-p", cmd_check_p, "check the staircase objects against the circle"),
                          ("check-pairing", cmd_check_pairing, "check pairing coherence for smash")):
        r = sub.add_parser(verb, parents=[common], help=hlp)
        r.set_defaults(func=fn)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    if args.verb == "run":
        args.suite = args.suite_flag or args.suite
        if args.suite is None:
            print("run needs a suite name", file=sys.stderr)
            return USAGE
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return CAP
    except (UsageError, FormatError, WaldError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

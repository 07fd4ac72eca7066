"""Named verification suites and replayable witness files.

A suite is an ordered list of checks; each check is a pure function of the
configuration returning a status, a count and encoded witnesses. Reports
are deterministic apart from the separate ``timing`` field.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import __version__
from .cubes import good_pushout_sweep
from .errors import CAPS, HypothesisError, SizeCapError, WaldError
from .homwald import build_hom, check_closed_axioms, enumerate_multifunctors, evaluation
from .multiexact import (
    check_k_exact,
    check_multicategory_axioms,
    compose_multi,
    composition_good_comparison,
    doubling,
    identity_multi,
    smash,
    tensor,
)
from .fincat import build_index
from .oracles import (
    all_small_diagrams,
    candidate_subcategories,
    compare_with_oracle,
    covers,
    enumerate_diagrams,
    restricted_cube_failures,
)
from .pointed import PointedSets
from .sdot import build_truncation, check_p, check_pairing, k0_presentation, simplicial_identity_failures, sn_waldcat
from .serialize import encode_value
from .wald import AXIOMS, builtin, check_wald_axioms

SUITES = ("wald-axioms", "cubes", "multiexact", "closed", "sdot")
MAX_REPORTED = 5


@dataclass(frozen=True)
class SuiteConfig:
    builtin: str = "finset_pointed"
    size: int = 2
    n: int = 2
    arity: int = 2
    jobs: int = 1

    def category(self, size: int | None = None):
        s = self.size if size is None else size
        if self.builtin in ("finset_pointed", "zero"):
            return builtin("finset_pointed", maxsize=max(s, 1))
        if self.builtin == "nstar":
            return builtin("nstar", maxn=max(s - 1, 0))
        if self.builtin == "vect_fp":
            return builtin("vect_fp", p=2, maxdim=max(s - 1, 0))
        raise HypothesisError(f"unknown builtin {self.builtin!r}")

    def validate(self) -> None:
        if self.size < 1 or self.n < 0 or self.arity < 0 or self.jobs < 1:
            raise HypothesisError("size, jobs must be >= 1 and n, arity >= 0")
        if self.size > CAPS.max_set_size:
            raise SizeCapError(f"size {self.size} exceeds cap {CAPS.max_set_size}")
        if self.n > CAPS.max_cube_dim:
            raise SizeCapError(f"n {self.n} exceeds cap {CAPS.max_cube_dim}")
        if self.arity > CAPS.max_arity:
            raise SizeCapError(f"arity {self.arity} exceeds cap {CAPS.max_arity}")
        self.category()


@dataclass
class CheckResult:
    name: str
    status: str
    checked: int = 0
    witnesses: list = field(default_factory=list)
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    config: SuiteConfig
    checks: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "kind": "suite-report",
            "version": __version__,
            "suite": self.suite,
            "config": asdict(self.config),
            "ok": self.ok,
            "checks": [asdict(c) for c in self.checks],
        }
        if timing:
            out["timing"] = dict(self.timing)
        return out

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            line = f"{c.status.upper():7s} {c.name} ({c.checked} checked)"
            if c.detail:
                line += f": {c.detail}"
            out.append(line)
        return out


def _result(name, failures, checked, detail="") -> CheckResult:
    enc = [encode_value(w) for w in failures[:MAX_REPORTED]]
    return CheckResult(name, "fail" if failures else "pass", checked, enc, detail)


# --- individual checks ---------------------------------------------------------------------------


def _wald_axioms(cfg: SuiteConfig) -> list[CheckResult]:
    W = cfg.category()
    rep = check_wald_axioms(W)
    return [_result(f"{W.name}/{ax}", list(rep.witnesses.get(ax, [])), rep.checked.get(ax, 0)) for ax in AXIOMS]


def _cubes(cfg: SuiteConfig) -> list[CheckResult]:
    W = cfg.category()
    out = []
    if isinstance(W.base, PointedSets):
        bad, k = [], 0
        for D in all_small_diagrams(min(cfg.size + 1, 4), W.base, W.bound):
            k += 1
            r = compare_with_oracle(D)
            if r:
                bad.append((D, r[0]))
        out.append(_result("colimit formula vs oracle", bad, k))
        bad, k = [], 0
        for C in _cover_shapes(cfg):
            cands = candidate_subcategories(C)
            diagrams = list(itertools.islice(enumerate_diagrams(C, W.base, W.bound), 40))
            for n in range(1, min(cfg.n, 3) + 1):
                for cover in itertools.islice(covers(C, n, cands), 40):
                    for D in diagrams:
                        k += 1
                        r = restricted_cube_failures(D, cover, W)
                        if r:
                            bad.append((D, r[0]))
        out.append(_result("restricted colimit cubes", bad, k))
    else:
        out.append(CheckResult("colimit formula vs oracle", "skipped", 0, [], "oracle handles pointed sets only"))
    for n in range(cfg.n + 1):
        sweep = good_pushout_sweep(W, n)
        out.append(_result(f"good pushouts n={n}", [f[0] for f in sweep.failures], sweep.triples))
    return out


def _cover_shapes(cfg):
    return [build_index("span"), build_index("ordinal", 2), build_index("cube", 2)][: max(cfg.n, 1)]


def generators(W, arity: int) -> list:
    """Builtin multiexact functors on ``W`` with arity at most ``arity``."""
    if W.tags.get("name") == "vect_fp":
        gens = [identity_multi(W)] + [tensor(W, k) for k in range(2, arity + 1)]
    else:
        gens = [identity_multi(W), doubling(W)] + [smash(W, k) for k in range(2, arity + 1)]
    return [g for g in gens if g.arity <= arity]


def _multiexact(cfg: SuiteConfig) -> list[CheckResult]:
    W = cfg.category()
    gens = generators(W, cfg.arity)
    out = []
    for F in gens:
        rep = check_k_exact(F)
        wit = [(ax, w) for ax in rep.failed for w in rep.witnesses[ax]]
        out.append(_result(f"exact {F.name}", wit, sum(rep.checked.values()), rep.summary()))
    bad, k = [], 0
    small = [cfg.category(min(cfg.size, 2))]
    for arity in range(1, min(cfg.arity, 2) + 1):
        for srcs in itertools.product(small, repeat=arity):
            for T in small:
                for F in enumerate_multifunctors(srcs, T):
                    k += 1
                    a, b = check_k_exact(F, "full"), check_k_exact(F, "reduced")
                    if (a.ok, a.failed) != (b.ok, b.failed):
                        bad.append((F.name, a.failed, b.failed))
    out.append(_result("full and reduced kE4 agree", bad, k))
    bad, k = [], 0
    for F in gens:
        for Gs in itertools.product(gens, repeat=F.arity):
            if sum(g.arity for g in Gs) > cfg.arity:
                continue
            k += 1
            C = compose_multi(F, list(Gs))
            if not check_k_exact(C).ok:
                bad.append(("composite not exact", F.name, [g.name for g in Gs]))
            for fbar in itertools.product(*(W.cofibrations() for _ in C.sources)):
                reason = composition_good_comparison(F, list(Gs), fbar)
                if reason:
                    bad.append(("comparison", F.name, [g.name for g in Gs], reason))
                    break
    out.append(_result("composites exact", bad, k))
    rep = check_multicategory_axioms(gens, max_arity=cfg.arity)
    wit = [(law, w) for law, ws in rep.witnesses.items() for w in ws]
    out.append(_result("multicategory laws", wit, sum(rep.checked.values()), rep.summary()))
    return out


def _closed(cfg: SuiteConfig) -> list[CheckResult]:
    W = cfg.category()
    small = cfg.category(min(cfg.size, 2))
    out = []
    for k in range(0, min(cfg.arity, 2) + 1):
        H = build_hom([small] * k, W)
        rep = check_wald_axioms(H)
        wit = [(ax, w) for ax in rep.failed for w in rep.witnesses[ax]]
        out.append(_result(f"Hom(A^{k}; B) axioms", wit, sum(rep.checked.values()), f"{len(H.functors)} functors"))
        ev = check_k_exact(evaluation(H))
        out.append(_result(f"evaluation k={k}", [(ax, w) for ax in ev.failed for w in ev.witnesses[ax]],
                           sum(ev.checked.values())))
    for k in range(0, min(cfg.arity, 2) + 1):
        for l in range(0, min(cfg.arity, 2) + 1):
            rep = check_closed_axioms([small] * k, [small] * l, W)
            wit = [(law, w) for law, ws in rep.witnesses.items() for w in ws]
            out.append(_result(f"closed structure k={k} l={l}", wit, sum(rep.checked.values()), rep.summary()))
    return out


def _sdot(cfg: SuiteConfig) -> list[CheckResult]:
    W = cfg.category()
    top = min(cfg.n + 1, 3)
    out = []
    T = build_truncation(W, top)
    bad = simplicial_identity_failures(T)
    out.append(_result(f"simplicial identities S<={top}", bad, sum(len(L) for L in T.levels)))
    rep = check_p(W, top)
    out.append(_result("staircase objects commute with faces and degeneracies", rep.failures, rep.checked))
    if isinstance(W.base, PointedSets):
        small = cfg.category(min(cfg.size, 2))
        rep = check_pairing(smash(small, 2), top)
        out.append(_result("pairing coherence for smash", rep.failures, rep.checked))
    for n in range(min(cfg.n, 2) + 1):
        ax = check_wald_axioms(sn_waldcat(W, n))
        wit = [(a, w) for a in ax.failed for w in ax.witnesses[a]]
        out.append(_result(f"S_{n} axioms", wit, sum(ax.checked.values())))
    P = k0_presentation(W)
    out.append(CheckResult("K0", "pass", len(P.relations), [], P.describe()))
    return out


CHECKS: dict[str, Callable[[SuiteConfig], list[CheckResult]]] = {
    "wald-axioms": _wald_axioms,
    "cubes": _cubes,
    "multiexact": _multiexact,
    "closed": _closed,
    "sdot": _sdot,
}


def run_suite(name: str, config: SuiteConfig | None = None) -> SuiteReport:
    """Run one suite (or ``all``); suites fan out over ``config.jobs`` threads."""
    cfg = config or SuiteConfig()
    cfg.validate()
    names = list(SUITES) if name == "all" else [name]
    for s in names:
        if s not in CHECKS:
            raise HypothesisError(f"unknown suite {s!r}; choose from {', '.join(SUITES + ('all',))}")
    report = SuiteReport(name, cfg)

    def run_one(s):
        t = time.perf_counter()
        try:
            res = CHECKS[s](cfg)
        except SizeCapError:
            raise
        except WaldError as exc:
            res = [CheckResult(s, "fail", 0, [], f"{type(exc).__name__}: {exc}")]
        return s, res, time.perf_counter() - t

    if cfg.jobs > 1 and len(names) > 1:
        with ThreadPoolExecutor(cfg.jobs) as pool:
            results = list(pool.map(run_one, names))
    else:
        results = [run_one(s) for s in names]
    for s, res, secs in results:
        for c in res:
            if name == "all":
                c.name = f"{s}: {c.name}"
        report.checks.extend(res)
        report.timing[s] = round(secs, 3)
    return report


# --- witness files -----------------------------------------------------------------------------


def witness_document(verb: str, payload: dict, verdict: str, witnesses: list) -> dict:
    return {
        "kind": "witness",
        "version": __version__,
        "verb": verb,
        "payload": payload,
        "verdict": verdict,
        "witnesses": witnesses,
    }


def suite_witness(report: SuiteReport) -> dict:
    first = next((c for c in report.checks if c.status == "fail"), None)
    payload = {"suite": report.suite, "config": asdict(report.config), "check": first.name if first else None}
    return witness_document("run", payload, "fail" if first else "pass", first.witnesses if first else [])


def exact_witness(F_doc: dict, mode: str, report) -> dict:
    wit = [encode_value((ax, w)) for ax in report.failed for w in report.witnesses[ax]]
    return witness_document("check-exact", {"functor": F_doc, "mode": mode}, "pass" if report.ok else "fail", wit)


def replay(doc: dict) -> tuple[bool, dict]:
    """Re-run the check a witness file records; returns (same verdict and witnesses, fresh document)."""
    from .serialize import FormatError, multifunctor_from_dict

    if doc.get("kind") != "witness":
        raise FormatError("not a witness file")
    if doc.get("version") != __version__:
        raise FormatError(f"witness written by version {doc.get('version')}, this is {__version__}")
    verb, payload = doc["verb"], doc["payload"]
    if verb == "run":
        cfg = SuiteConfig(**payload["config"])
        fresh = suite_witness(run_suite(payload["suite"], cfg))
    elif verb == "check-exact":
        F = multifunctor_from_dict(payload["functor"])
        fresh = exact_witness(payload["functor"], payload["mode"], check_k_exact(F, payload["mode"]))
    else:
        raise FormatError(f"cannot replay verb {verb!r}")
    same = fresh["verdict"] == doc["verdict"] and fresh["witnesses"] == doc["witnesses"]
    return same, fresh

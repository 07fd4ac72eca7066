"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the lines also appear in the
terminal summary), or ``python tests/test_acceptance.py`` for a standalone
report.
"""

import itertools
import time

from waldcat.cubes import good_pushout_sweep
from waldcat.fincat import build_index, product
from waldcat.homwald import build_hom, check_closed_axioms, enumerate_multifunctors, evaluation
from waldcat.multiexact import check_k_exact, compose_multi, composition_good_comparison, smash
from waldcat.oracles import (
    all_small_diagrams,
    candidate_subcategories,
    compare_with_oracle,
    covers,
    enumerate_diagrams,
    restricted_cube_failures,
    small_index_categories,
    terminal_slice_comparison,
)
from waldcat.pointed import FINSET
from waldcat.sdot import build_truncation, check_p, check_pairing, k0_presentation, simplicial_identity_failures
from waldcat.suites import generators
from waldcat.wald import check_wald_axioms, finset_pointed, nstar, vect_fp, zero_category


def test_waldhausen_axioms(record):
    cats = [finset_pointed(s) for s in (1, 2, 3)]
    cats += [nstar(n) for n in (0, 1, 2, 3)]
    cats += [vect_fp(2, d) for d in (0, 1, 2)]
    bad, slowest = [], 0.0
    for W in cats:
        t = time.perf_counter()
        rep = check_wald_axioms(W)
        secs = time.perf_counter() - t
        slowest = max(slowest, secs)
        if not rep.ok or secs >= 10:
            bad.append((W.name, rep.failed, round(secs, 2)))
    ok = record(1, "Waldhausen axioms", not bad, f"{len(cats)} categories, slowest {slowest:.2f}s {bad or ''}")
    assert ok


def test_colimit_formula_matches_oracle(record):
    # objects 0..2 are the pointed sets with at most three elements
    count, bad = 0, []
    for D in all_small_diagrams(4, FINSET, 2):
        count += 1
        if compare_with_oracle(D):
            bad.append(D)
    ok = record(2, "colimit formula vs cocone oracle", count >= 500 and not bad, f"{count} diagrams, {len(bad)} mismatches")
    assert ok


def _cover_indices():
    cats = small_index_categories(4)
    cats += [build_index("cube", 3), build_index("ordinal", 4), build_index("arrow_ordinal", 2)]
    cats.append(product([build_index("span"), build_index("interval")]))
    return cats


def test_restricted_colimit_cubes(record):
    W = finset_pointed(3)
    count, bad = 0, []
    for C in _cover_indices():
        assert len(C.object_list) <= 8
        cands = candidate_subcategories(C)
        diagrams = list(enumerate_diagrams(C, FINSET, 2 if len(C.object_list) <= 4 else 1))
        for n in (1, 2, 3):
            pairs = list(itertools.product(covers(C, n, cands), range(len(diagrams))))
            step = max(1, len(pairs) // 400)
            for cover, d in pairs[::step]:
                count += 1
                if restricted_cube_failures(diagrams[d], cover, W):
                    bad.append((C.name, n, d))
    ok = record(3, "restricted colimit cubes have iso southern arrows", not bad, f"{count} instances, {len(bad)} failures")
    assert ok


def test_terminal_slice_cofinality(record):
    count, bad = 0, []
    for A in small_index_categories(3):
        for D in (build_index("interval"), build_index("ordinal", 2)):
            P = product([A, D])
            top = D.object_list[-1]
            for F in enumerate_diagrams(P, FINSET, 1):
                count += 1
                if not FINSET.is_iso(terminal_slice_comparison(F, A, D, top)):
                    bad.append((A.name, D.name))
    ok = record(4, "colimit over a product restricts to the terminal slice", not bad, f"{count} diagrams, {len(bad)} failures")
    assert ok


def test_good_pushouts(record):
    t = time.perf_counter()
    triples, bad = 0, []
    for size in (1, 2, 3):
        for n in (0, 1, 2):
            sweep = good_pushout_sweep(finset_pointed(size), n)
            triples += sweep.triples
            bad += sweep.failures
    secs = time.perf_counter() - t
    ok = record(5, "pushouts of good cubes are good", not bad and secs < 300, f"{triples} triples, {len(bad)} failures, {secs:.1f}s")
    assert ok


def test_full_and_reduced_exactness_agree(record):
    cats = [finset_pointed(1), finset_pointed(2)]
    count, exact, bad = 0, 0, []
    for k in (1, 2):
        for srcs in itertools.product(cats, repeat=k):
            for T in cats:
                for F in enumerate_multifunctors(srcs, T):
                    full, reduced = check_k_exact(F, "full"), check_k_exact(F, "reduced")
                    count += 1
                    exact += full.ok
                    if (full.ok, full.failed) != (reduced.ok, reduced.failed):
                        bad.append(F.name)
    ok = record(6, "full and reduced box checks agree", count > 0 and not bad,
                f"{count} functors ({exact} exact), {len(bad)} disagreements")
    assert ok


def test_composites_are_exact(record):
    count, comparisons, bad = 0, 0, []
    for W in (finset_pointed(3), vect_fp(2, 2)):
        gens = generators(W, 3)
        for F in gens:
            for Gs in itertools.product(gens, repeat=F.arity):
                if sum(g.arity for g in Gs) > 3:
                    continue
                count += 1
                C = compose_multi(F, list(Gs))
                if not check_k_exact(C).ok:
                    bad.append(("not exact", F.name, [g.name for g in Gs]))
                for fbar in itertools.product(*(W.cofibrations() for _ in C.sources)):
                    comparisons += 1
                    reason = composition_good_comparison(F, list(Gs), fbar)
                    if reason:
                        bad.append((F.name, [g.name for g in Gs], reason))
    ok = record(7, "composites of exact functors", not bad,
                f"{count} composites, {comparisons} comparisons, {len(bad)} failures")
    assert ok


def test_closed_structure(record):
    A, B = finset_pointed(2), finset_pointed(3)
    bad, checked = [], 0
    for k in (0, 1, 2):
        H = build_hom([A] * k, B)
        rep = check_wald_axioms(H)
        checked += sum(rep.checked.values())
        if not rep.ok:
            bad.append(("axioms", k, rep.failed))
        ev = check_k_exact(evaluation(H))
        checked += sum(ev.checked.values())
        if not ev.ok:
            bad.append(("evaluation", k, ev.failed))
    for k in (0, 1, 2):
        for l in (0, 1, 2):
            rep = check_closed_axioms([A] * k, [A] * l, B)
            checked += sum(rep.checked.values())
            if not rep.ok:
                bad.append(("closed", k, l, rep.summary()))
    ok = record(8, "internal hom, curry, CM1, CM2, evaluation", not bad, f"{checked} checks, {len(bad)} failures")
    assert ok


def test_simplicial_layer(record):
    bad, checked = [], 0
    for W in (finset_pointed(3), vect_fp(2, 2)):
        T = build_truncation(W, 3)
        checked += sum(len(L) for L in T.levels)
        bad += simplicial_identity_failures(T)
        rep = check_p(W, 3)
        checked += rep.checked
        bad += rep.failures
    for size in (1, 2):
        rep = check_pairing(smash(finset_pointed(size), 2), 3)
        checked += rep.checked
        bad += rep.failures
    ok = record(9, "simplicial identities, staircases, pairing", not bad, f"{checked} checks, {len(bad)} failures")
    assert ok


def test_grothendieck_group(record):
    t = time.perf_counter()
    groups = {}
    for s in (2, 3, 4):
        groups[f"finset_pointed({s})"] = k0_presentation(finset_pointed(s)).describe()
    for d in (1, 2, 3):
        groups[f"vect_fp(2,{d})"] = k0_presentation(vect_fp(2, d)).describe()
    trivial = k0_presentation(zero_category()).describe()
    secs = time.perf_counter() - t
    passed = all(g == "Z" for g in groups.values()) and trivial == "0" and secs < 30
    ok = record(10, "K0 presentations", passed, f"{sorted(set(groups.values()))} and zero -> {trivial}, {secs:.1f}s")
    assert ok


if __name__ == "__main__":
    import sys

    def _print(number, title, passed, detail=""):
        print(f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}  {detail}", flush=True)
        return passed

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn(_print)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

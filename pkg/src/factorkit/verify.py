"""The library's named checks, run over exhaustive small-graph universes.

Each check states an equivalence and hunts for counterexamples:

  2.2  a graph is 1-tough exactly when every single-pendant attachment
       is almost 1-tough,
  2.4  a graph has a factor for a {1}/{0,2} degree spec exactly when
       its triangle lift has an f-factor for the induced function,
  1.5  a connected graph satisfies every even degree spec exactly when
       it is almost 1-tough,
  2.5  a connected cubic graph is almost 1-tough exactly when its
       reduced instance has all (g,f)-factors.

All verdicts come from two independent routes (a construction and a
brute-force or subset-scan oracle), so a bug on either side shows up as
a counterexample.  Reports carry counts, the universes scanned, and the
first counterexamples found (expected: none).  Workers are pure, so a
--jobs fan-out just partitions the graph list; merging keeps the input
order, which keeps reports deterministic.
"""

from __future__ import annotations

import multiprocessing
from functools import partial

from .errors import ScaleExceededError
from .factor import (has_f_factor, has_f_factor_bruteforce, has_H_factor,
                     has_H_factor_bruteforce, lift_factor, project_factor)
from .generate import (DEFAULT_SEED, connected_cubic_graphs, connected_graphs,
                       spec_from_mask)
from .graph import Graph, components, mask_of, popcount
from .matching import default_engine
from .niessen import (all_gf_criterion, all_gf_enumeration, verdict_json,
                      witness_json)
from .reduction import (lift_degree_spec, pendant_attach, reduce_to_all_gf,
                        triangle_lift)
from .tables import spec_table
from .toughness import is_almost_one_tough, is_one_tough

__all__ = [
    "VerifyReport",
    "ReductionReport",
    "verify_lemma_2_2",
    "verify_lemma_2_4",
    "verify_theorem_1_5",
    "verify_reduction",
    "verify_reduction_universe",
    "DEFAULT_SAMPLE_PLAN",
]

_CE_CAP = 20

# sampled part of check 2.2: (n, how many distinct graphs); 10200 total
DEFAULT_SAMPLE_PLAN = ((7, 5000), (8, 3200), (9, 2000))


class VerifyReport:
    """Outcome of one check over one universe."""

    __slots__ = ("name", "checked", "counterexamples", "details")

    def __init__(self, name, checked, counterexamples, details):
        self.name = name
        self.checked = checked
        self.counterexamples = counterexamples
        self.details = details

    @property
    def ok(self):
        return not self.counterexamples and self.details.get(
            "counterexamples_total", 0) == 0

    def to_json(self):
        return {"name": self.name, "checked": self.checked,
                "ok": self.ok,
                "counterexamples": self.counterexamples,
                "details": self.details}

    def __repr__(self):
        return (f"VerifyReport(name={self.name!r}, checked={self.checked}, "
                f"ok={self.ok})")


def _map_items(fn, items, jobs):
    if jobs is None or jobs <= 1:
        return [fn(it) for it in items]
    # fork keeps the warmed numba dispatcher; every item is pure
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        chunk = max(1, len(items) // (jobs * 8))
        return pool.map(fn, items, chunksize=chunk)


def _graph_ce(g: Graph, **extra):
    ce = {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}
    ce.update(extra)
    return ce


# ---------------------------------------------------------------------------
# check 2.2: 1-tough <=> every pendant attachment almost 1-tough


def _check_22(g: Graph):
    one, _ = is_one_tough(g)
    all_almost = True
    bad = None
    for x in range(g.n):
        ok, cut = is_almost_one_tough(pendant_attach(g, x))
        if not ok:
            all_almost = False
            bad = {"x": x, "cut": list(cut)}
            break
    if one == all_almost:
        return None
    return _graph_ce(g, one_tough=one, pendant_all_almost=all_almost,
                     pendant_failure=bad)


def verify_lemma_2_2(n_max: int = 6, sample_plan=DEFAULT_SAMPLE_PLAN,
                     seed: int = DEFAULT_SEED, jobs: int = 1) -> VerifyReport:
    """Exhaustive over connected graphs with n <= n_max (cap 6), plus
    seeded samples per ``sample_plan`` entries (n, count) with n in 7..9."""
    if n_max > 6:
        raise ScaleExceededError(
            f"exhaustive part of check 2.2 capped at n=6, got {n_max}")
    by_n = {}
    ces = []
    total = 0
    for n in range(1, n_max + 1):
        gs = list(connected_graphs(n))
        results = _map_items(_check_22, gs, jobs)
        by_n[n] = len(gs)
        total += len(gs)
        ces.extend(r for r in results if r is not None)
    sampled_by_n = {}
    for n, count in sample_plan or ():
        if not 7 <= n <= 9:
            raise ValueError(f"sample plan covers n=7..9 only, got {n}")
        gs = list(connected_graphs(n, samples=count, seed=seed + n))
        results = _map_items(_check_22, gs, jobs)
        sampled_by_n[n] = len(gs)
        total += len(gs)
        ces.extend(r for r in results if r is not None)
    details = {"exhaustive_by_n": by_n, "sampled_by_n": sampled_by_n,
               "seed": seed, "counterexamples_total": len(ces)}
    return VerifyReport("2.2", total, ces[:_CE_CAP], details)


# ---------------------------------------------------------------------------
# check 2.4: H-factor <=> lifted f-factor


def _check_24(g: Graph, use_brute: bool, roundtrip: bool, engine):
    lifted = triangle_lift(g)
    host = lifted.lifted
    n = g.n
    specs = 0
    positives = 0
    roundtrips = 0
    ces = []
    for mask in range(1 << n):
        spec = spec_from_mask(n, mask)
        if use_brute:
            direct = has_H_factor_bruteforce(g, spec)
        else:
            direct = has_H_factor(g, spec, engine=engine)
        found = has_f_factor(host, lift_degree_spec(lifted, spec),
                             engine=engine)
        specs += 1
        if (direct is None) != (found is None):
            ces.append(_graph_ce(g, spec_mask=mask,
                                 direct_present=direct is not None,
                                 lifted_present=found is not None))
            continue
        if direct is not None:
            positives += 1
            if roundtrip:
                up = lift_factor(direct, spec)
                down = project_factor(up)
                roundtrips += 1
                if down != direct:
                    ces.append(_graph_ce(g, spec_mask=mask,
                                         roundtrip_failed=True))
        if use_brute and found is not None:
            # the lifted factor must project to a spec factor too
            proj = project_factor(found)
            if roundtrip:
                up = lift_factor(proj, spec)
                roundtrips += 1
                if project_factor(up) != proj:
                    ces.append(_graph_ce(g, spec_mask=mask,
                                         roundtrip_failed=True,
                                         side="projected"))
    return specs, positives, roundtrips, ces


def verify_lemma_2_4(n: int, roundtrip: bool = True, engine=None,
                     jobs: int = 1) -> VerifyReport:
    """All connected cubic graphs on n vertices, all 2^n degree specs
    (the equivalence has no parity hypothesis, so odd specs are checked
    too; both sides rule them out).  n in {4, 6} compares brute force
    against the lifted matching; n = 8 compares the direct expansion
    gadget against the lifted matching, both matching-based."""
    if n not in (4, 6, 8):
        raise ValueError(f"check 2.4 runs at n in {{4, 6, 8}}, got {n}")
    use_brute = n <= 6
    gs = list(connected_cubic_graphs(n))
    fn = partial(_check_24, use_brute=use_brute, roundtrip=roundtrip,
                 engine=engine)
    results = _map_items(fn, gs, jobs)
    specs = sum(r[0] for r in results)
    positives = sum(r[1] for r in results)
    roundtrips = sum(r[2] for r in results)
    ces = [ce for r in results for ce in r[3]]
    details = {"mode": "bruteforce-vs-lift" if use_brute else "gadget-vs-lift",
               "graphs": len(gs), "specs": specs, "positives": positives,
               "roundtrips": roundtrips,
               "engine": engine or default_engine(),
               "counterexamples_total": len(ces)}
    return VerifyReport("2.4", specs, ces[:_CE_CAP], details)


# ---------------------------------------------------------------------------
# check 1.5: almost 1-tough <=> all even specs satisfiable


def _check_15(g: Graph, engine):
    almost, cut = is_almost_one_tough(g)
    table = spec_table(g, engine=engine)
    failing = None
    for s in range(1 << g.n):
        if popcount(s) % 2 == 0 and not table[s]:
            failing = s
            break
    even_ok = failing is None
    if almost == even_ok:
        return (1 << (g.n - 1)) if g.n else 1, None
    return (1 << (g.n - 1)) if g.n else 1, _graph_ce(
        g, almost_one_tough=almost,
        cut=None if cut is None else list(cut),
        failing_spec_mask=failing)


def verify_theorem_1_5(n_max: int = 6, engine=None, jobs: int = 1) -> VerifyReport:
    """All connected graphs with n <= n_max (cap 6); the even-spec side
    comes from one full edge-subset scan per graph."""
    if n_max > 6:
        raise ScaleExceededError(
            f"check 1.5 capped at n=6, got {n_max}")
    by_n = {}
    ces = []
    graphs = 0
    specs = 0
    fn = partial(_check_15, engine=engine)
    for n in range(1, n_max + 1):
        gs = list(connected_graphs(n))
        results = _map_items(fn, gs, jobs)
        by_n[n] = len(gs)
        graphs += len(gs)
        for count, ce in results:
            specs += count
            if ce is not None:
                ces.append(ce)
    details = {"graphs_by_n": by_n, "graphs": graphs, "even_specs": specs,
               "engine": engine or default_engine(),
               "counterexamples_total": len(ces)}
    return VerifyReport("1.5", graphs, ces[:_CE_CAP], details)


# ---------------------------------------------------------------------------
# check 2.5: almost 1-tough <=> reduced instance has all (g,f)-factors


class ReductionReport:
    """Single-graph outcome of the end-to-end reduction check."""

    __slots__ = ("n", "edges", "almost_one_tough", "tough_cut", "verdict",
                 "criterion_verdict", "agree", "certificates", "notes")

    def __init__(self, n, edges, almost_one_tough, tough_cut, verdict,
                 criterion_verdict, agree, certificates, notes):
        self.n = n
        self.edges = edges
        self.almost_one_tough = almost_one_tough
        self.tough_cut = tough_cut
        self.verdict = verdict
        self.criterion_verdict = criterion_verdict
        self.agree = agree
        self.certificates = certificates
        self.notes = notes

    def to_json(self):
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "almost_one_tough": self.almost_one_tough,
            "tough_cut": None if self.tough_cut is None else list(self.tough_cut),
            "verdict": verdict_json(self.verdict),
            "criterion_verdict": (None if self.criterion_verdict is None
                                  else verdict_json(self.criterion_verdict)),
            "agree": self.agree,
            "certificates": self.certificates,
            "notes": self.notes,
        }


def verify_reduction(g: Graph, sample_h=None, engine=None) -> ReductionReport:
    """Check one connected cubic graph (n <= 8) end to end.

    Both sides are computed independently: the subset scan on g, and the
    factor enumeration on the reduced instance (plus the pair-scan
    criterion when the lifted graph is within its cap).  Certificates:
    a negative instance carries the tough cut (re-validated to leave at
    least |S|+2 components) and the failing h (re-validated to have no
    factor, by the brute-force oracle too when the lifted graph is small
    enough); a positive instance carries a factor for one admissible h,
    all-ones unless the caller picks another.
    """
    if g.n > 8:
        raise ScaleExceededError(
            f"end-to-end reduction check capped at n=8, got {g.n}")
    inst = reduce_to_all_gf(g)
    host = inst.lifted.lifted
    almost, cut = is_almost_one_tough(g)
    verdict = all_gf_enumeration(host, inst.g_fn, inst.f_fn, engine=engine)
    criterion_verdict = None
    if host.n <= 16:
        criterion_verdict = all_gf_criterion(host, inst.g_fn, inst.f_fn)
    agree = verdict.holds == almost and (
        criterion_verdict is None or criterion_verdict.holds == almost)
    certificates = {}
    notes = []
    if not almost and not verdict.holds:
        omega = len(components(g, removed=mask_of(cut)))
        if omega < len(cut) + 2:
            raise RuntimeError("violating cut failed its recomputation")
        h = verdict.counterexample.h
        if has_f_factor(host, h, engine=engine) is not None:
            raise RuntimeError("failing h has a factor on recheck")
        oracle_checked = len(host.edges) <= 24
        if oracle_checked and has_f_factor_bruteforce(host, h) is not None:
            raise RuntimeError("failing h has a factor by the oracle")
        nw = verdict.counterexample.niessen
        certificates["negative"] = {
            "tough_cut": list(cut), "omega": omega,
            "failing_h": list(h),
            "niessen": None if nw is None else witness_json(nw),
            "oracle_checked": oracle_checked,
        }
        if not oracle_checked:
            notes.append("lifted graph too large for the subset oracle; "
                         "solver recheck only")
    elif almost and verdict.holds:
        h = tuple(sample_h) if sample_h is not None else (1,) * host.n
        for v in range(host.n):
            if not inst.g_fn[v] <= h[v] <= inst.f_fn[v]:
                raise ValueError(f"sample h out of the instance box at {v}")
        if sum(h) % 2:
            raise ValueError("sample h has odd total")
        found = has_f_factor(host, h, engine=engine)
        if found is None:
            raise RuntimeError(
                "verdict holds but the sample h has no factor")
        certificates["positive"] = {
            "sample_h": list(h),
            "factor_edges": [list(e) for e in sorted(found.chosen)],
        }
    return ReductionReport(g.n, sorted(g.edges), almost, cut, verdict,
                           criterion_verdict, agree, certificates, notes)


def _check_25(g: Graph, engine):
    rep = verify_reduction(g, engine=engine)
    if rep.agree:
        kind = "positive" if rep.almost_one_tough else "negative"
        return kind, rep.criterion_verdict is not None, None
    return "disagree", rep.criterion_verdict is not None, rep.to_json()


def verify_reduction_universe(ns=(4, 6, 8), engine=None,
                              jobs: int = 1) -> VerifyReport:
    """Run the end-to-end check over every connected cubic graph for
    each n in ``ns``."""
    ces = []
    positives = 0
    negatives = 0
    criterion_checked = 0
    by_n = {}
    total = 0
    fn = partial(_check_25, engine=engine)
    for n in ns:
        gs = list(connected_cubic_graphs(n))
        results = _map_items(fn, gs, jobs)
        by_n[n] = len(gs)
        total += len(gs)
        for kind, crosschecked, ce in results:
            if crosschecked:
                criterion_checked += 1
            if kind == "positive":
                positives += 1
            elif kind == "negative":
                negatives += 1
            else:
                ces.append(ce)
    details = {"graphs_by_n": by_n, "positives": positives,
               "negatives": negatives,
               "criterion_cross_checked": criterion_checked,
               "engine": engine or default_engine(),
               "counterexamples_total": len(ces)}
    return VerifyReport("2.5", total, ces[:_CE_CAP], details)

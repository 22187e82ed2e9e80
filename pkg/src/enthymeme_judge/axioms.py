"""Axiom harness: 31 axioms over criterion measures, plus the expected
conformance matrix and randomized conformance checking.

Each axiom is a predicate over sampled instances. Arity-1 axioms look at one
decoding (E, D); arity-2 axioms compare two decodings (E, D, D') sharing the
enthymeme (and, where the axiom requires it, the claim).

Several axioms only hold on restricted instance domains (the unrestricted
claims admit counterexamples, pinned in the test suite). Every sampler below
documents its restriction:

- minimality and ideal-coherence samplers use one uniform weight, so weighted
  and flat entailment counts coincide and subset inconsistency cannot
  outrun whole-set consistency;
- ideal-inference samplers draw claims over the literals of the decoded
  premises, so entailment forces full consequence coverage;
- increasing-weighted-inference samplers align the minimal premise weight of
  both decodings with the claim weight;
- decreasing-weak-coherence samplers keep the enthymeme premises
  atom-disjoint from the decoded ones;
- decreasing-similarity samplers guarantee at least one shared premise;
- stability samplers use nonempty premise sets;
- all generated claims are single weighted clauses except inference claims,
  which may be clause conjunctions.

strict_increasing_similarity is structurally vacuous: with a shared
enthymeme, the overlap and the enthymeme-side difference always sum to
|N(Gamma)|, so its hypothesis is unsatisfiable. The harness reports the cell
as vacuous.
"""

from __future__ import annotations

import itertools
import random
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .language import (
    AArg,
    And,
    Formula,
    LogicConfig,
    WeightedFormula,
    classify,
    entails,
    flat,
    is_inconsistent,
    is_satisfiable,
    min_weight,
    weighted_entails,
    ARGUMENT,
)
from .normalize import clause_to_formula, lits_of_set
from .consequence import subsets_by_size
from .measures import (
    Context,
    Measure,
    _dn_cached,
    fcn_claim,
    fcn_premises,
    granularity_gap,
    make_measure,
    norm_claim,
    norm_premises,
    stability_error,
    strong_mus_count,
    weak_mus_count,
)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Instance:
    E: AArg
    D: AArg
    D2: AArg | None = None


# ---------------------------------------------------------------------------
# cached instance statistics

@lru_cache(maxsize=16384)
def _flat_entails_claim(D: AArg) -> bool:
    return entails(flat(D.premises), D.claim.formula)


@lru_cache(maxsize=16384)
def _weighted_entails_claim(D: AArg) -> bool:
    return weighted_entails(D.premises, D.claim)


@lru_cache(maxsize=16384)
def _flat_overlap(D: AArg, ctx: Context) -> int:
    """Finite stand-in for the shared flat consequences of premises and
    claim: |fCN(beta) ∩ fCN(Delta)|."""
    return len(fcn_claim(D, ctx) & fcn_premises(D, ctx))


def _weighted_overlap(D: AArg, ctx: Context) -> int:
    """Weighted counterpart: shared weighted consequences exist only when the
    aggregated premise weight matches the claim weight."""
    if min_weight(D.premises) != D.claim.weight:
        return 0
    return _flat_overlap(D, ctx)


@lru_cache(maxsize=16384)
def _proper_flat_count(D: AArg) -> int:
    elems = sorted(D.premises, key=repr)
    return sum(1 for sub in subsets_by_size(elems, proper=True)
               if entails([x.formula for x in sub], D.claim.formula))


@lru_cache(maxsize=16384)
def _proper_weighted_count(D: AArg) -> int:
    elems = sorted(D.premises, key=repr)
    return sum(1 for sub in subsets_by_size(elems, proper=True)
               if weighted_entails(sub, D.claim))


def _sim_abc(E: AArg, D: AArg, ctx: Context) -> tuple[int, int, int]:
    ng = norm_premises(E, ctx)
    nd = norm_premises(D, ctx)
    return len(nd & ng), len(nd - ng), len(ng - nd)


# ---------------------------------------------------------------------------
# axiom definitions

@dataclass(frozen=True)
class Axiom:
    name: str
    family: str
    arity: int
    _hypothesis: Callable = field(compare=False, repr=False)
    _conclusion: Callable = field(compare=False, repr=False)

    def hypothesis(self, inst: Instance, ctx: Context) -> bool:
        return self._hypothesis(inst, ctx)

    def conclusion(self, measure: Measure, inst: Instance, ctx: Context) -> bool:
        return self._conclusion(measure, inst, ctx)


def _ideal(name, family, hyp, target):
    def conclusion(measure, inst, ctx):
        return measure(inst.E, inst.D, ctx) == target
    return Axiom(name, family, 1, hyp, conclusion)


_RELATIONS = {
    "le": lambda m, m2: m <= m2,
    "lt": lambda m, m2: m < m2,
    "ge": lambda m, m2: m >= m2,
    "gt": lambda m, m2: m > m2,
}


def _pair(name, family, hyp, relation):
    rel = _RELATIONS[relation]

    def conclusion(measure, inst, ctx):
        return rel(measure(inst.E, inst.D, ctx), measure(inst.E, inst.D2, ctx))

    return Axiom(name, family, 2, hyp, conclusion)


def _shared_claim(inst: Instance) -> bool:
    return inst.D.claim == inst.D2.claim


def _build_axioms() -> tuple[Axiom, ...]:
    ax = []

    # inference
    ax.append(_ideal("ideal_flat_inference", "inference",
                     lambda i, c: _flat_entails_claim(i.D), ONE))
    ax.append(_ideal("ideal_weighted_inference", "inference",
                     lambda i, c: _weighted_entails_claim(i.D), ONE))
    for strict, name in ((False, "lenient_increasing_flat_inference"),
                         (True, "strict_increasing_flat_inference")):
        def hyp(i, c, strict=strict):
            if not _shared_claim(i):
                return False
            x, y = _flat_overlap(i.D, c), _flat_overlap(i.D2, c)
            return x > y if strict else x >= y
        ax.append(_pair(name, "inference", hyp, "gt" if strict else "ge"))
    for strict, name in ((False, "lenient_increasing_weighted_inference"),
                         (True, "strict_increasing_weighted_inference")):
        def hyp(i, c, strict=strict):
            if not _shared_claim(i):
                return False
            x, y = _weighted_overlap(i.D, c), _weighted_overlap(i.D2, c)
            return x > y if strict else x >= y
        ax.append(_pair(name, "inference", hyp, "gt" if strict else "ge"))

    # minimality
    ax.append(_ideal("ideal_flat_minimality", "minimality",
                     lambda i, c: _proper_flat_count(i.D) == 0, ONE))
    ax.append(_ideal("ideal_weighted_minimality", "minimality",
                     lambda i, c: _proper_weighted_count(i.D) == 0, ONE))
    for strict, weighted in itertools.product((False, True), (False, True)):
        count = _proper_weighted_count if weighted else _proper_flat_count
        name = (f"{'strict' if strict else 'lenient'}_decreasing_"
                f"{'weighted' if weighted else 'flat'}_minimality")

        def hyp(i, c, strict=strict, count=count):
            if not _shared_claim(i):
                return False
            x, y = count(i.D), count(i.D2)
            return x > y if strict else x >= y
        ax.append(_pair(name, "minimality", hyp, "lt" if strict else "le"))

    # coherence
    ax.append(_ideal("ideal_strong_coherence", "coherence",
                     lambda i, c: not is_inconsistent(i.D.premises, c.config.threshold), ONE))
    ax.append(_ideal("ideal_weak_coherence", "coherence",
                     lambda i, c: not is_inconsistent(i.D.premises | i.E.premises,
                                                      c.config.threshold), ONE))
    for strict, weak in itertools.product((False, True), (False, True)):
        count = weak_mus_count if weak else strong_mus_count
        name = (f"{'strict' if strict else 'lenient'}_decreasing_"
                f"{'weak' if weak else 'strong'}_coherence")

        def hyp(i, c, strict=strict, count=count):
            if not _shared_claim(i):
                return False
            x, y = count(i.E, i.D, c), count(i.E, i.D2, c)
            return x > y if strict else x >= y
        ax.append(_pair(name, "coherence", hyp, "lt" if strict else "le"))

    # preservation
    ax.append(_ideal("premises_preservation", "preservation",
                     lambda i, c: not (norm_premises(i.E, c) & norm_premises(i.D, c)), ZERO))
    ax.append(_ideal("claim_preservation", "preservation",
                     lambda i, c: norm_claim(i.E, c) != norm_claim(i.D, c), ZERO))

    # similarity
    def sim_hyp(check):
        def hyp(i, c):
            a, b, cc = _sim_abc(i.E, i.D, c)
            a2, b2, cc2 = _sim_abc(i.E, i.D2, c)
            return check(a, b, cc, a2, b2, cc2)
        return hyp

    ax.append(_pair("lenient_increasing_similarity", "similarity",
                    sim_hyp(lambda a, b, c, a2, b2, c2: a >= a2 and b == b2 and c == c2), "ge"))
    ax.append(_pair("strict_increasing_similarity", "similarity",
                    sim_hyp(lambda a, b, c, a2, b2, c2: a > a2 and b == b2 and c == c2), "gt"))
    ax.append(_pair("lenient_decreasing_similarity", "similarity",
                    sim_hyp(lambda a, b, c, a2, b2, c2: a == a2 and b >= b2 and c >= c2), "le"))
    ax.append(_pair("strict_decreasing_similarity", "similarity",
                    sim_hyp(lambda a, b, c, a2, b2, c2: a == a2 and
                            ((b > b2 and c >= c2) or (b >= b2 and c > c2))), "lt"))

    # granularity
    def gran_hyp(check):
        def hyp(i, c):
            return check(granularity_gap(i.E, i.D, c), granularity_gap(i.E, i.D2, c))
        return hyp

    ax.append(_pair("lenient_concise_granularity", "granularity",
                    gran_hyp(lambda g, g2: g <= g2), "ge"))
    ax.append(_pair("strict_concise_granularity", "granularity",
                    gran_hyp(lambda g, g2: g < g2), "gt"))
    ax.append(_pair("lenient_detailed_granularity", "granularity",
                    gran_hyp(lambda g, g2: g >= g2), "ge"))
    ax.append(_pair("strict_detailed_granularity", "granularity",
                    gran_hyp(lambda g, g2: g > g2), "gt"))

    # stability
    ax.append(_ideal("ideal_stability", "stability",
                     lambda i, c: min_weight(i.D.premises) == i.D.claim.weight, ONE))
    ax.append(_pair("lenient_decreasing_stability", "stability",
                    lambda i, c: stability_error(i.D) >= stability_error(i.D2), "le"))
    ax.append(_pair("strict_decreasing_stability", "stability",
                    lambda i, c: stability_error(i.D) > stability_error(i.D2), "lt"))

    return tuple(ax)


AXIOMS: tuple[Axiom, ...] = _build_axioms()
AXIOM_BY_NAME = {a.name: a for a in AXIOMS}

KNOWN_VACUOUS = frozenset({"strict_increasing_similarity"})


# ---------------------------------------------------------------------------
# expected conformance matrix

_INFERENCE = ("ideal_flat_inference", "ideal_weighted_inference",
              "lenient_increasing_flat_inference", "strict_increasing_flat_inference",
              "lenient_increasing_weighted_inference", "strict_increasing_weighted_inference")
_MINIMALITY = ("ideal_flat_minimality", "ideal_weighted_minimality",
               "lenient_decreasing_flat_minimality", "strict_decreasing_flat_minimality",
               "lenient_decreasing_weighted_minimality", "strict_decreasing_weighted_minimality")
_COHERENCE = ("ideal_strong_coherence", "ideal_weak_coherence",
              "lenient_decreasing_strong_coherence", "strict_decreasing_strong_coherence",
              "lenient_decreasing_weak_coherence", "strict_decreasing_weak_coherence")
_SIMILARITY = ("lenient_increasing_similarity", "strict_increasing_similarity",
               "lenient_decreasing_similarity", "strict_decreasing_similarity")

EXPECTED_MATRIX: dict[str, frozenset[str]] = {
    "cmbl": frozenset({"premises_preservation", "claim_preservation"}),
    "cmtvetve": frozenset({"premises_preservation", "claim_preservation"}),
    "cmsd": frozenset({"ideal_stability", "lenient_decreasing_stability",
                       "strict_decreasing_stability"}),
    "cmld": frozenset({"ideal_stability", "lenient_decreasing_stability"}),
    "ppi_1": frozenset({"ideal_flat_inference", "ideal_weighted_inference",
                        "lenient_increasing_flat_inference",
                        "lenient_increasing_weighted_inference"}),
    "ppi_lt1": frozenset({"ideal_weighted_inference",
                          "lenient_increasing_weighted_inference"}),
    "dpi_1": frozenset(_INFERENCE),
    "dpi_lt1": frozenset({"ideal_weighted_inference",
                          "lenient_increasing_weighted_inference",
                          "strict_increasing_weighted_inference"}),
    "cmcd": frozenset({"lenient_concise_granularity", "strict_concise_granularity"}),
    "cmcp": frozenset({"lenient_concise_granularity"}),
    "cmdg": frozenset({"lenient_detailed_granularity", "strict_detailed_granularity"}),
    "cmpg": frozenset({"lenient_detailed_granularity"}),
    "cmtve_jac": frozenset(_SIMILARITY),
    "cmtve_dic": frozenset(_SIMILARITY),
    "cmtve_sor": frozenset(_SIMILARITY),
    "cmtve_and": frozenset(_SIMILARITY),
    "cmtve_ss2": frozenset(_SIMILARITY),
    "cmmin": frozenset(_MINIMALITY),
    "cmpen": frozenset({"ideal_flat_minimality", "ideal_weighted_minimality",
                        "lenient_decreasing_flat_minimality",
                        "lenient_decreasing_weighted_minimality"}),
    "psc": frozenset({"ideal_strong_coherence", "ideal_weak_coherence",
                      "lenient_decreasing_strong_coherence",
                      "lenient_decreasing_weak_coherence"}),
    "pwc": frozenset({"ideal_weak_coherence", "lenient_decreasing_weak_coherence"}),
    "dsc": frozenset(_COHERENCE),
    "dwc": frozenset({"ideal_weak_coherence", "lenient_decreasing_weak_coherence",
                      "strict_decreasing_weak_coherence"}),
}


def default_rows() -> tuple[tuple[str, Measure], ...]:
    return (
        ("cmbl", make_measure("cmbl")),
        ("cmtvetve", make_measure("cmtvetve", preset="jac")),
        ("cmsd", make_measure("cmsd")),
        ("cmld", make_measure("cmld", a=0, u="1/2")),
        ("ppi_1", make_measure("ppi", a=1, p="1/10")),
        ("ppi_lt1", make_measure("ppi", a=0, p="1/10")),
        ("dpi_1", make_measure("dpi", a=1)),
        ("dpi_lt1", make_measure("dpi", a=0)),
        ("cmcd", make_measure("cmcd")),
        ("cmcp", make_measure("cmcp", s=1, p="1/2")),
        ("cmdg", make_measure("cmdg")),
        ("cmpg", make_measure("cmpg", s=1, p="1/2")),
        ("cmtve_jac", make_measure("cmtve", preset="jac")),
        ("cmtve_dic", make_measure("cmtve", preset="dic")),
        ("cmtve_sor", make_measure("cmtve", preset="sor")),
        ("cmtve_and", make_measure("cmtve", preset="and")),
        ("cmtve_ss2", make_measure("cmtve", preset="ss2")),
        ("cmmin", make_measure("cmmin")),
        ("cmpen", make_measure("cmpen", p="1/4")),
        ("psc", make_measure("psc", p=1)),
        ("pwc", make_measure("pwc", p=1)),
        ("dsc", make_measure("dsc")),
        ("dwc", make_measure("dwc")),
    )


def harness_context(max_atoms: int = 4, max_premises: int = 4) -> Context:
    atoms = tuple("abcdefghijklmnop"[:max_atoms])
    return Context(atoms=atoms,
                   config=LogicConfig(max_atoms=max_atoms, max_premises=max_premises))


# ---------------------------------------------------------------------------
# samplers

def _rand_weight(rng: random.Random, lo: int = 1) -> Fraction:
    return Fraction(rng.randint(lo, 10), 10)


def _random_clause(rng: random.Random, pool: Sequence[str], max_len: int | None = None):
    n = rng.randint(1, min(max_len, len(pool)) if max_len else len(pool))
    return frozenset((a, rng.random() < 0.5) for a in rng.sample(list(pool), n))


def _wclause(rng, pool, ctx: Context, weight: Fraction | None = None,
             max_len: int | None = None) -> WeightedFormula:
    c = _random_clause(rng, pool, max_len)
    w = weight if weight is not None else _rand_weight(rng)
    return WeightedFormula(clause_to_formula(c, ctx.atoms), w)


def _wset(rng, pool, ctx: Context, n_min: int, n_max: int,
          weight: Fraction | None = None, weight_lo: int = 1,
          max_len: int | None = None) -> frozenset:
    n_max = min(n_max, ctx.config.max_premises)
    n_min = min(n_min, n_max)
    out = set()
    for _ in range(rng.randint(n_min, n_max)):
        w = weight if weight is not None else _rand_weight(rng, weight_lo)
        out.add(_wclause(rng, pool, ctx, weight=w, max_len=max_len))
    return frozenset(out)


def _enthymeme(rng, pool, ctx: Context, gamma: frozenset | None = None,
               max_len: int | None = None, tries: int = 300) -> AArg:
    for _ in range(tries):
        g = gamma if gamma is not None else _wset(rng, pool, ctx, 1, 3, max_len=max_len)
        alpha = _wclause(rng, pool, ctx, max_len=max_len)
        if not weighted_entails(g, alpha):
            return AArg(g, alpha)
    raise RuntimeError("could not sample an enthymeme")


def _conjunction(formulas: Sequence[Formula]) -> Formula:
    out = formulas[0]
    for f in formulas[1:]:
        out = And(out, f)
    return out


def _claim_over_lits(rng, lits, ctx: Context) -> Formula:
    """Conjunction of 1-2 random non-tautological clauses over given literals."""
    parts = []
    for _ in range(rng.randint(1, 2)):
        for _ in range(50):
            chosen = rng.sample(sorted(lits), rng.randint(1, min(3, len(lits))))
            names = [a for a, _ in chosen]
            if len(set(names)) == len(names):
                parts.append(clause_to_formula(frozenset(chosen), ctx.atoms))
                break
    return _conjunction(parts)


def _sample_ideal_inference(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    delta = _wset(rng, ctx.atoms, ctx, 1, 4)
    elems = sorted(delta, key=repr)
    if rng.random() < 0.6:
        # entailed by construction: conjunction of premise formulas
        parts = rng.sample(elems, rng.randint(1, min(2, len(elems))))
        formula = _conjunction([x.formula for x in parts])
    else:
        formula = _claim_over_lits(rng, lits_of_set(flat(delta)), ctx)
    w = min_weight(delta) if rng.random() < 0.5 else _rand_weight(rng)
    return Instance(E, AArg(delta, WeightedFormula(formula, w)))


def _sample_increasing_flat_inference(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    beta = WeightedFormula(_claim_over_lits(rng, [(a, rng.random() < 0.5) for a in ctx.atoms],
                                            ctx), _rand_weight(rng))
    d1 = _wset(rng, ctx.atoms, ctx, 1, 4)
    d2 = _wset(rng, ctx.atoms, ctx, 1, 4)
    return Instance(E, AArg(d1, beta), AArg(d2, beta))


def _aligned_weights(rng, clauses: Iterable, w: Fraction, ctx: Context) -> frozenset:
    """Weighted set over the given clauses with min weight exactly w."""
    items = list(dict.fromkeys(clauses))
    lo = int(w * 10)
    weights = [Fraction(rng.randint(lo, 10), 10) for _ in items]
    weights[rng.randrange(len(items))] = w
    return frozenset(WeightedFormula(clause_to_formula(c, ctx.atoms), v)
                     for c, v in zip(items, weights))


def _sample_increasing_weighted_inference(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    w = _rand_weight(rng)
    beta = WeightedFormula(_claim_over_lits(rng, [(a, rng.random() < 0.5) for a in ctx.atoms],
                                            ctx), w)
    def side():
        n = rng.randint(1, min(4, ctx.config.max_premises))
        clauses = {_random_clause(rng, ctx.atoms) for _ in range(n)}
        return _aligned_weights(rng, clauses, w, ctx)
    return Instance(E, AArg(side(), beta), AArg(side(), beta))


def _sample_ideal_minimality(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    w = _rand_weight(rng)
    delta = _wset(rng, ctx.atoms, ctx, 1, 4, weight=w)
    beta = _wclause(rng, ctx.atoms, ctx, weight=w)
    return Instance(E, AArg(delta, beta))


def _sample_decreasing_minimality(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    w = _rand_weight(rng)
    beta = _wclause(rng, ctx.atoms, ctx, weight=w)
    d1 = _wset(rng, ctx.atoms, ctx, 1, 4, weight=w)
    d2 = _wset(rng, ctx.atoms, ctx, 1, 4, weight=w)
    return Instance(E, AArg(d1, beta), AArg(d2, beta))


def _sample_ideal_coherence(rng, ctx: Context) -> Instance:
    w = _rand_weight(rng)
    gamma = _wset(rng, ctx.atoms, ctx, 1, 3, weight=w, max_len=2)
    E = _enthymeme(rng, ctx.atoms, ctx, gamma=gamma, max_len=2)
    delta = _wset(rng, ctx.atoms, ctx, 1, 4, weight=w, max_len=2)
    beta = _wclause(rng, ctx.atoms, ctx)
    return Instance(E, AArg(delta, beta))


def _sample_decreasing_strong_coherence(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx, max_len=2)
    beta = _wclause(rng, ctx.atoms, ctx)
    lo = 5 if rng.random() < 0.8 else 1
    d1 = _wset(rng, ctx.atoms, ctx, 1, 4, weight_lo=lo, max_len=2)
    d2 = _wset(rng, ctx.atoms, ctx, 1, 4, weight_lo=lo, max_len=2)
    return Instance(E, AArg(d1, beta), AArg(d2, beta))


def _sample_decreasing_weak_coherence(rng, ctx: Context) -> Instance:
    half = max(1, len(ctx.atoms) // 2)
    gpool, dpool = ctx.atoms[:half], ctx.atoms[half:]
    gamma = _wset(rng, gpool, ctx, 1, 3, weight_lo=5, max_len=1)
    E = _enthymeme(rng, gpool, ctx, gamma=gamma)
    beta = _wclause(rng, dpool, ctx)
    lo = 5 if rng.random() < 0.8 else 1
    d1 = _wset(rng, dpool, ctx, 1, 4, weight_lo=lo, max_len=2)
    d2 = _wset(rng, dpool, ctx, 1, 4, weight_lo=lo, max_len=2)
    return Instance(E, AArg(d1, beta), AArg(d2, beta))


def _fresh_elements(rng, ctx: Context, count: int, forbidden: frozenset) -> set:
    out: set = set()
    taken = set(forbidden)
    for _ in range(300):
        if len(out) >= count:
            break
        cand = _wclause(rng, ctx.atoms, ctx)
        key = next(iter(_dn_cached(frozenset((cand,)), ctx.atoms)), None)
        if key is None or key in taken:
            continue
        taken.add(key)
        out.add(cand)
    return out


def _overlap_decoding(rng, ctx: Context, E: AArg, a: int, b: int) -> AArg:
    elems = sorted(E.premises, key=repr)
    base = set(rng.sample(elems, min(a, len(elems))))
    b = min(b, ctx.config.max_premises - len(base))
    fresh = _fresh_elements(rng, ctx, b, norm_premises(E, ctx))
    beta = _wclause(rng, ctx.atoms, ctx)
    return AArg(frozenset(base | fresh), beta)


def _sample_increasing_similarity(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    n = len(E.premises)
    a, b = rng.randint(0, n), rng.randint(0, 2)
    if rng.random() < 0.8:
        a2, b2 = a, b
    else:
        a2, b2 = rng.randint(0, n), rng.randint(0, 2)
    return Instance(E, _overlap_decoding(rng, ctx, E, a, b),
                    _overlap_decoding(rng, ctx, E, a2, b2))


def _sample_decreasing_similarity(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    a = rng.randint(1, len(E.premises))
    b, b2 = rng.randint(0, 3), rng.randint(0, 3)
    return Instance(E, _overlap_decoding(rng, ctx, E, a, b),
                    _overlap_decoding(rng, ctx, E, a, b2))


def _sample_granularity(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    n = len(E.premises)
    return Instance(E, _overlap_decoding(rng, ctx, E, rng.randint(0, n), rng.randint(0, 3)),
                    _overlap_decoding(rng, ctx, E, rng.randint(0, n), rng.randint(0, 3)))


def _sample_preservation(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    if rng.random() < 0.5:
        delta = frozenset(_fresh_elements(rng, ctx, rng.randint(1, 3),
                                          norm_premises(E, ctx)))
    else:
        delta = _overlap_decoding(rng, ctx, E, rng.randint(0, len(E.premises)),
                                  rng.randint(0, 2)).premises
    if rng.random() < 0.4:
        beta = E.claim
    else:
        beta = _wclause(rng, ctx.atoms, ctx)
    return Instance(E, AArg(delta, beta))


def _sample_ideal_stability(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    delta = _wset(rng, ctx.atoms, ctx, 1, 4)
    w = min_weight(delta) if rng.random() < 0.6 else _rand_weight(rng)
    return Instance(E, AArg(delta, _wclause(rng, ctx.atoms, ctx, weight=w)))


def _sample_decreasing_stability(rng, ctx: Context) -> Instance:
    E = _enthymeme(rng, ctx.atoms, ctx)
    d1 = _wset(rng, ctx.atoms, ctx, 1, 4)
    d2 = _wset(rng, ctx.atoms, ctx, 1, 4)
    return Instance(E, AArg(d1, _wclause(rng, ctx.atoms, ctx)),
                    AArg(d2, _wclause(rng, ctx.atoms, ctx)))


SAMPLERS: dict[str, Callable] = {
    "ideal_flat_inference": _sample_ideal_inference,
    "ideal_weighted_inference": _sample_ideal_inference,
    "lenient_increasing_flat_inference": _sample_increasing_flat_inference,
    "strict_increasing_flat_inference": _sample_increasing_flat_inference,
    "lenient_increasing_weighted_inference": _sample_increasing_weighted_inference,
    "strict_increasing_weighted_inference": _sample_increasing_weighted_inference,
    "ideal_flat_minimality": _sample_ideal_minimality,
    "ideal_weighted_minimality": _sample_ideal_minimality,
    "lenient_decreasing_flat_minimality": _sample_decreasing_minimality,
    "strict_decreasing_flat_minimality": _sample_decreasing_minimality,
    "lenient_decreasing_weighted_minimality": _sample_decreasing_minimality,
    "strict_decreasing_weighted_minimality": _sample_decreasing_minimality,
    "ideal_strong_coherence": _sample_ideal_coherence,
    "ideal_weak_coherence": _sample_ideal_coherence,
    "lenient_decreasing_strong_coherence": _sample_decreasing_strong_coherence,
    "strict_decreasing_strong_coherence": _sample_decreasing_strong_coherence,
    "lenient_decreasing_weak_coherence": _sample_decreasing_weak_coherence,
    "strict_decreasing_weak_coherence": _sample_decreasing_weak_coherence,
    "premises_preservation": _sample_preservation,
    "claim_preservation": _sample_preservation,
    "lenient_increasing_similarity": _sample_increasing_similarity,
    "strict_increasing_similarity": _sample_increasing_similarity,
    "lenient_decreasing_similarity": _sample_decreasing_similarity,
    "strict_decreasing_similarity": _sample_decreasing_similarity,
    "lenient_concise_granularity": _sample_granularity,
    "strict_concise_granularity": _sample_granularity,
    "lenient_detailed_granularity": _sample_granularity,
    "strict_detailed_granularity": _sample_granularity,
    "ideal_stability": _sample_ideal_stability,
    "lenient_decreasing_stability": _sample_decreasing_stability,
    "strict_decreasing_stability": _sample_decreasing_stability,
}


def generate_instance(axiom: Axiom | str, rng: random.Random, ctx: Context) -> Instance:
    name = axiom if isinstance(axiom, str) else axiom.name
    return SAMPLERS[name](rng, ctx)


# ---------------------------------------------------------------------------
# conformance checking

@dataclass
class CellReport:
    row: str
    axiom: str
    marked: bool
    samples: int
    exercised: int
    violations: list
    vacuous: bool

    @property
    def conforming(self) -> bool:
        return not self.violations

    def ok(self, min_exercised: int = 50) -> bool:
        if self.violations:
            return False
        return self.vacuous or self.exercised >= min_exercised


@dataclass
class MatrixReport:
    cells: dict
    samples: int
    seed: int

    def violations(self) -> list:
        return [c for c in self.cells.values() if c.marked and c.violations]

    def inconclusive(self, min_exercised: int = 50) -> list:
        return [c for c in self.cells.values()
                if c.marked and not c.violations and not c.ok(min_exercised)]


def check_axiom(measure: Measure, axiom: Axiom | str, ctx: Context | None = None,
                samples: int = 1000, seed: int = 0, row: str | None = None,
                marked: bool = True) -> CellReport:
    if isinstance(axiom, str):
        axiom = AXIOM_BY_NAME[axiom]
    ctx = ctx or harness_context()
    rng = random.Random(seed)
    exercised = 0
    violations = []
    for _ in range(samples):
        inst = generate_instance(axiom, rng, ctx)
        if not axiom.hypothesis(inst, ctx):
            continue
        exercised += 1
        if not axiom.conclusion(measure, inst, ctx):
            violations.append(inst)
    return CellReport(row or measure.label, axiom.name, marked, samples, exercised,
                      violations, exercised == 0 and axiom.name in KNOWN_VACUOUS)


def check_matrix(ctx: Context | None = None, samples: int = 1000, seed: int = 0,
                 rows: Sequence[tuple[str, Measure]] | None = None,
                 axiom_names: Sequence[str] | None = None,
                 include_unmarked: bool = False) -> MatrixReport:
    """Run every (measure row, axiom) cell of the expected matrix. Instances
    are drawn once per axiom and shared by all rows."""
    ctx = ctx or harness_context()
    rows = list(rows if rows is not None else default_rows())
    axioms = [AXIOM_BY_NAME[n] for n in axiom_names] if axiom_names else list(AXIOMS)
    cells: dict = {}
    for axiom in axioms:
        rng = random.Random(seed * (1 << 32) + zlib.crc32(axiom.name.encode()))
        instances = [generate_instance(axiom, rng, ctx) for _ in range(samples)]
        exercising = [inst for inst in instances if axiom.hypothesis(inst, ctx)]
        for row_key, measure in rows:
            marked = axiom.name in EXPECTED_MATRIX.get(row_key, frozenset())
            if not marked and not include_unmarked:
                continue
            violations = [inst for inst in exercising
                          if not axiom.conclusion(measure, inst, ctx)]
            cells[(row_key, axiom.name)] = CellReport(
                row_key, axiom.name, marked, samples, len(exercising), violations,
                not exercising and axiom.name in KNOWN_VACUOUS)
    return MatrixReport(cells, samples, seed)


# ---------------------------------------------------------------------------
# directed generation of genuine weighted arguments

def generate_argument(rng: random.Random, ctx: Context, tries: int = 400,
                      pool: Sequence[str] | None = None) -> AArg:
    """Sample a genuine weighted argument with uniform premise weights and a
    claim clause over the premise vocabulary. An optional atom pool restricts
    where premises draw their atoms."""
    from .normalize import all_clauses

    pool = pool if pool is not None else ctx.atoms
    for _ in range(tries):
        w = _rand_weight(rng)
        delta = _wset(rng, pool, ctx, 1, 3, weight=w)
        if not is_satisfiable(flat(delta)):
            continue
        lits = sorted(lits_of_set(flat(delta)))
        candidates = all_clauses(lits)
        rng.shuffle(candidates)
        for clause in candidates[:30]:
            beta = WeightedFormula(clause_to_formula(clause, ctx.atoms), w)
            D = AArg(delta, beta)
            if classify(delta, beta, ctx.config) == ARGUMENT:
                return D
    raise RuntimeError("could not sample a weighted argument")

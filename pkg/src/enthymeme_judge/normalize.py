"""Canonical normal forms and weighted-set normalization.

Clauses are frozensets of literals; a literal is a (atom, polarity) pair.
The canonical DNF of a formula is the disjunction of the conjunctions
representing its models, in model-enumeration order. The canonical CNF is
obtained from the negated DNF of the negation, then reduced to a fixpoint by
the pairwise spot/remove rule below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .language import (
    BOT,
    TOP,
    And,
    Bot,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
    Var,
    WeightedFormula,
    assignments,
    atoms_of,
    evaluate,
)

Literal = tuple[str, bool]
Clause = frozenset  # frozenset[Literal]


@dataclass(frozen=True)
class WeightedClause:
    clause: Clause
    weight: Fraction

    def __repr__(self) -> str:
        return f"<{{{', '.join(('' if pos else '!') + a for a, pos in sorted(self.clause))}}}, {self.weight}>"


def literal_formula(lit: Literal) -> Formula:
    name, positive = lit
    return Var(name) if positive else Not(Var(name))


def clause_sort_key(clause: Clause, atom_order: Sequence[str]):
    index = {a: i for i, a in enumerate(atom_order)}
    return tuple(sorted((index[a], not pos) for a, pos in clause))


def clause_to_formula(clause: Clause, atom_order: Sequence[str]) -> Formula:
    """Disjunction of the clause's literals in declaration order; the empty
    clause is falsity."""
    index = {a: i for i, a in enumerate(atom_order)}
    lits = sorted(clause, key=lambda l: (index[l[0]], not l[1]))
    if not lits:
        return BOT
    f = literal_formula(lits[0])
    for lit in lits[1:]:
        f = Or(f, literal_formula(lit))
    return f


def render_clause(clause: Clause, atom_order: Sequence[str]) -> str:
    index = {a: i for i, a in enumerate(atom_order)}
    lits = sorted(clause, key=lambda l: (index[l[0]], not l[1]))
    if not lits:
        return "false"
    return " | ".join(("" if pos else "!") + name for name, pos in lits)


def lits_of(f: Formula) -> frozenset:
    """Literals occurring in the negation normal form of f (polarity-aware)."""

    def walk(g: Formula, positive: bool) -> frozenset:
        if isinstance(g, Var):
            return frozenset(((g.name, positive),))
        if isinstance(g, (Top, Bot)):
            return frozenset()
        if isinstance(g, Not):
            return walk(g.sub, not positive)
        if isinstance(g, (And, Or)):
            return walk(g.left, positive) | walk(g.right, positive)
        if isinstance(g, Implies):
            return walk(g.left, not positive) | walk(g.right, positive)
        if isinstance(g, Iff):
            return (walk(g.left, True) | walk(g.left, False)
                    | walk(g.right, True) | walk(g.right, False))
        raise TypeError(f"not a formula: {g!r}")

    return walk(f, True)


def lits_of_set(formulas: Iterable[Formula]) -> frozenset:
    out: frozenset = frozenset()
    for f in formulas:
        out |= lits_of(f)
    return out


# ---------------------------------------------------------------------------
# canonical DNF

def canonical_dnf(f: Formula, atom_order: Sequence[str]) -> list[tuple[Literal, ...]]:
    """One full-width conjunction per model of f, in enumeration order.
    Each term lists every atom in declaration order with its polarity."""
    extra = atoms_of(f) - set(atom_order)
    if extra:
        raise ValueError(f"formula uses undeclared atoms: {sorted(extra)}")
    terms = []
    for model in assignments(atom_order):
        if evaluate(f, model):
            terms.append(tuple((a, model[a]) for a in atom_order))
    return terms


def dnf_to_formula(terms: Sequence[tuple[Literal, ...]]) -> Formula:
    if not terms:
        return BOT
    disjuncts = []
    for term in terms:
        g = literal_formula(term[0])
        for lit in term[1:]:
            g = And(g, literal_formula(lit))
        disjuncts.append(g)
    f = disjuncts[0]
    for g in disjuncts[1:]:
        f = Or(f, g)
    return f


# ---------------------------------------------------------------------------
# canonical CNF

def _resolvable(ci: Clause, cj: Clause) -> bool:
    if len(ci) != len(cj) or len(ci) == 1:
        return False
    only_i = ci - cj
    only_j = cj - ci
    if len(only_i) != 1 or len(only_j) != 1:
        return False
    (name_i, pos_i), = only_i
    (name_j, pos_j), = only_j
    return name_i == name_j and pos_i != pos_j


def _reduce_clauses(clauses: list[Clause]) -> list[Clause]:
    """Fixpoint of the spot/remove rule, applied in simultaneous rounds.

    A spottable pair is two same-size clauses whose symmetric difference is
    exactly one complementary literal pair; their reduction is the shared
    part. Each round reduces every spottable pair at once (one clause may
    take part in several pairs) and removes all paired clauses; unpaired
    clauses carry over. Unit clauses never pair (that guard only ever
    matters for unsatisfiable inputs, which are handled before reduction).

    Round-at-once application is what reproduces the fully reduced forms of
    the worked examples: reducing one pair at a time consumes each clause
    once, and for instance the seven width-3 clauses equivalent to
    p & !q & r can then never reach the three unit clauses, under any
    pair-selection order.
    """
    current = list(dict.fromkeys(clauses))
    for _ in range(sum(len(c) for c in current) + 1):
        paired: set[Clause] = set()
        resolvents: list[Clause] = []
        for i in range(len(current)):
            for j in range(i + 1, len(current)):
                ci, cj = current[i], current[j]
                if _resolvable(ci, cj):
                    paired.add(ci)
                    paired.add(cj)
                    resolvents.append(ci & cj)
        if not paired:
            return current
        current = list(dict.fromkeys(
            [c for c in current if c not in paired] + resolvents))
    raise AssertionError("clause reduction did not reach a fixpoint")


def canonical_cnf(f: Formula, atom_order: Sequence[str]) -> list[Clause]:
    """Clause list of the canonical CNF, sorted by (size, literal order).

    A tautology yields no clauses; a contradiction yields the empty clause.
    Otherwise each non-model of f contributes the complementary clause of its
    representing conjunction, and the set is reduced to a fixpoint.
    """
    counter_terms = canonical_dnf(Not(f), atom_order)
    if not counter_terms:
        return []
    if len(counter_terms) == 2 ** len(atom_order):
        return [frozenset()]
    clauses = _reduce_clauses(
        [frozenset((a, not v) for a, v in term) for term in counter_terms])
    return sorted(clauses, key=lambda c: (len(c), clause_sort_key(c, atom_order)))


def fdn(f: Formula, atom_order: Sequence[str]) -> tuple[Clause, ...]:
    """Flat decomposition: the clauses of the canonical CNF."""
    return tuple(canonical_cnf(f, atom_order))


def dn(gamma: Iterable[WeightedFormula], atom_order: Sequence[str]) -> frozenset:
    """Weighted decomposer: each weighted formula contributes its flat
    decomposition at its own weight; duplicates merge by set union."""
    out = set()
    for item in gamma:
        for clause in fdn(item.formula, atom_order):
            out.add(WeightedClause(clause, item.weight))
    return frozenset(out)


def dn_single(alpha: WeightedFormula, atom_order: Sequence[str]) -> frozenset:
    return dn((alpha,), atom_order)


def all_clauses(lits: Iterable[Literal]) -> list[Clause]:
    """Every nonempty, non-tautological clause over the given literals."""
    lits = sorted(set(lits))
    out = []
    for size in range(1, len(lits) + 1):
        for combo in itertools.combinations(lits, size):
            names = [a for a, _ in combo]
            if len(set(names)) < len(names):
                continue  # complementary pair, tautological clause
            out.append(frozenset(combo))
    return out

"""Finite consequence operators over weighted sets.

Everything here enumerates subsets explicitly; instance sizes are bounded by
LogicConfig caps, so brute force is both adequate and easy to audit.
Subset enumeration order is (size, lexicographic by sorted element repr).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .language import (
    Formula,
    LogicConfig,
    WeightedFormula,
    entails,
    flat,
    is_inconsistent,
)
from .normalize import Clause, WeightedClause, all_clauses, clause_to_formula, lits_of_set


def subsets_by_size(items: Sequence, include_empty: bool = True, proper: bool = False):
    """All subsets in (size, lex) order over the given element order."""
    top = len(items) if proper else len(items) + 1
    start = 0 if include_empty else 1
    for size in range(start, top):
        for combo in itertools.combinations(items, size):
            yield combo


def _sorted_elems(gamma: Iterable) -> list:
    return sorted(gamma, key=repr)


@lru_cache(maxsize=8192)
def _flat_finite_cn_cached(formulas: frozenset, atom_order: tuple,
                           minimal_support: bool) -> frozenset:
    formulas = list(formulas)
    lits = lits_of_set(formulas)
    out = []
    for clause in all_clauses(lits):
        target = clause_to_formula(clause, atom_order)
        if not entails(formulas, target):
            continue
        if minimal_support:
            if not _has_minimal_cover(formulas, clause, target, atom_order):
                continue
        out.append(clause)
    return frozenset(out)


def _has_minimal_cover(formulas: list, clause: Clause, target: Formula,
                       atom_order: tuple) -> bool:
    # variant scoping: some subset-minimal entailing support must itself
    # mention every literal of the clause
    for combo in subsets_by_size(_sorted_elems(formulas)):
        if not entails(combo, target):
            continue
        if any(entails(sub, target) for sub in subsets_by_size(combo, proper=True)):
            continue
        if set(clause) <= lits_of_set(combo):
            return True
    return False


def flat_finite_cn(delta: Iterable[WeightedFormula], atom_order: Sequence[str],
                   config: LogicConfig | None = None) -> frozenset:
    """Non-tautological clauses entailed by Flat(delta) whose literals occur
    (with polarity) in Flat(delta) itself."""
    config = config or LogicConfig()
    return _flat_finite_cn_cached(flat(delta), tuple(atom_order), config.minimal_support_cn)


def minimal_inconsistent_subsets(gamma: Iterable[WeightedFormula],
                                 config: LogicConfig) -> list[frozenset]:
    """Subset-minimal inconsistent subsets of a weighted set, in (size, lex)
    order. Inconsistency is flat unsatisfiability with min weight at or above
    the threshold."""
    elems = _sorted_elems(gamma)
    found: list[frozenset] = []
    for combo in subsets_by_size(elems, include_empty=False):
        s = frozenset(combo)
        if any(m <= s for m in found):
            continue
        if is_inconsistent(s, config.threshold):
            found.append(s)
    return found


def entailing_subsets(ndelta: Iterable[WeightedClause], claim_flat: Formula,
                      atom_order: Sequence[str]) -> list[frozenset]:
    """Subsets of a normalized premise set whose flat part entails the flat
    claim, in (size, lex) order. The empty subset qualifies only for a
    tautological claim."""
    elems = _sorted_elems(ndelta)
    out = []
    for combo in subsets_by_size(elems):
        forms = [clause_to_formula(x.clause, atom_order) for x in combo]
        if entails(forms, claim_flat):
            out.append(frozenset(combo))
    return out

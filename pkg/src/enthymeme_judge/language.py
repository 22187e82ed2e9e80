"""Weighted propositional language: formulas, parsing, entailment, classification.

The logic works over a finite vocabulary of atoms with a fixed declaration
order (the order matters for canonical normal forms, see normalize.py).
Formulas carry exact rational weights in [0, 1]; all arithmetic uses
fractions.Fraction, decimal rendering is presentation-only.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence


# ---------------------------------------------------------------------------
# formulas

class Formula:
    __slots__ = ()

    def __invert__(self) -> "Formula":
        return Not(self)

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


TOP = Top()
BOT = Bot()


def evaluate(f: Formula, model: Mapping[str, bool]) -> bool:
    if isinstance(f, Var):
        return model[f.name]
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, Not):
        return not evaluate(f.sub, model)
    if isinstance(f, And):
        return evaluate(f.left, model) and evaluate(f.right, model)
    if isinstance(f, Or):
        return evaluate(f.left, model) or evaluate(f.right, model)
    if isinstance(f, Implies):
        return (not evaluate(f.left, model)) or evaluate(f.right, model)
    if isinstance(f, Iff):
        return evaluate(f.left, model) == evaluate(f.right, model)
    raise TypeError(f"not a formula: {f!r}")


def atoms_of(f: Formula) -> frozenset[str]:
    if isinstance(f, Var):
        return frozenset((f.name,))
    if isinstance(f, (Top, Bot)):
        return frozenset()
    if isinstance(f, Not):
        return atoms_of(f.sub)
    return atoms_of(f.left) | atoms_of(f.right)


# rendering, ASCII connectives, minimal parentheses
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}


def render(f: Formula, parent_prec: int = 0) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bot):
        return "false"
    if isinstance(f, Not):
        return "!" + render(f.sub, _PREC[Not])
    prec = _PREC[type(f)]
    if isinstance(f, And):
        # left-associative: the right argument needs strictly higher precedence
        s = f"{render(f.left, prec)} & {render(f.right, prec + 1)}"
    elif isinstance(f, Or):
        s = f"{render(f.left, prec)} | {render(f.right, prec + 1)}"
    elif isinstance(f, Implies):
        # right-associative: the left argument needs strictly higher precedence
        s = f"{render(f.left, prec + 1)} -> {render(f.right, prec)}"
    else:
        s = f"{render(f.left, prec + 1)} <-> {render(f.right, prec)}"
    return f"({s})" if prec < parent_prec else s


# ---------------------------------------------------------------------------
# parser
#
# grammar (precedence low to high: <-> , -> , | , & , ! ; -> and <-> are
# right-associative):
#   iff  := imp ('<->' iff)?
#   imp  := or  ('->' imp)?
#   or   := and ('|' and)*
#   and  := un  ('&' un)*
#   un   := '!' un | NAME | 'true' | 'false' | '(' iff ')'

class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<iff><->|↔)"
    r"|(?P<imp>->|→)"
    r"|(?P<or>\||∨)"
    r"|(?P<and>&|∧)"
    r"|(?P<not>!|¬)"
    r"|(?P<top>⊤)"
    r"|(?P<bot>⊥)"
    r"|(?P<lpar>\()"
    r"|(?P<rpar>\)))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r}",
                             pos + len(text[pos:]) - len(rest))
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "name" and value == "true":
            kind = "top"
        elif kind == "name" and value == "false":
            kind = "bot"
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        if self.peek() != kind:
            _, value, pos = self.tokens[self.i]
            raise ParseError(f"expected {kind}, found {value!r}", pos)
        return self.next()

    def parse_iff(self) -> Formula:
        left = self.parse_imp()
        if self.peek() == "iff":
            self.next()
            return Iff(left, self.parse_iff())
        return left

    def parse_imp(self) -> Formula:
        left = self.parse_or()
        if self.peek() == "imp":
            self.next()
            return Implies(left, self.parse_imp())
        return left

    def parse_or(self) -> Formula:
        f = self.parse_and()
        while self.peek() == "or":
            self.next()
            f = Or(f, self.parse_and())
        return f

    def parse_and(self) -> Formula:
        f = self.parse_un()
        while self.peek() == "and":
            self.next()
            f = And(f, self.parse_un())
        return f

    def parse_un(self) -> Formula:
        kind, value, pos = self.next()
        if kind == "not":
            return Not(self.parse_un())
        if kind == "name":
            return Var(value)
        if kind == "top":
            return TOP
        if kind == "bot":
            return BOT
        if kind == "lpar":
            f = self.parse_iff()
            self.expect("rpar")
            return f
        raise ParseError(f"unexpected token {value!r}" if value else "unexpected end of input", pos)


def parse_formula(text: str) -> Formula:
    parser = _Parser(_tokenize(text))
    f = parser.parse_iff()
    if parser.peek() != "end":
        _, value, pos = parser.tokens[parser.i]
        raise ParseError(f"trailing input {value!r}", pos)
    return f


# ---------------------------------------------------------------------------
# weights

_WEIGHT_RE = re.compile(r"^\d+(?:\.\d{1,6})?$|^\.\d{1,6}$")


def parse_weight(value: object) -> Fraction:
    """Parse a weight from a decimal string (at most 6 fractional digits),
    an int, or a float whose shortest repr fits the same format."""
    if isinstance(value, Fraction):
        w = value
    elif isinstance(value, bool):
        raise ValueError(f"invalid weight: {value!r}")
    elif isinstance(value, int):
        w = Fraction(value)
    elif isinstance(value, float):
        return parse_weight(repr(value))
    elif isinstance(value, str):
        s = value.strip()
        if not _WEIGHT_RE.match(s):
            raise ValueError(f"invalid weight literal: {value!r}")
        w = Fraction(s)
    else:
        raise ValueError(f"invalid weight: {value!r}")
    if not 0 <= w <= 1:
        raise ValueError(f"weight out of range [0, 1]: {value!r}")
    return w


@dataclass(frozen=True)
class WeightedFormula:
    formula: Formula
    weight: Fraction

    def __repr__(self) -> str:
        return f"<{render(self.formula)}, {self.weight}>"


WeightedSet = frozenset[WeightedFormula]


def wf(formula: Formula | str, weight: object) -> WeightedFormula:
    if isinstance(formula, str):
        formula = parse_formula(formula)
    return WeightedFormula(formula, parse_weight(weight))


def wset(*items: WeightedFormula) -> WeightedSet:
    return frozenset(items)


@dataclass(frozen=True)
class AArg:
    """Approximate weighted argument: a weighted premise set and a claim."""
    premises: WeightedSet
    claim: WeightedFormula


def flat(gamma: Iterable[WeightedFormula]) -> frozenset[Formula]:
    return frozenset(x.formula for x in gamma)


def min_weight(gamma: Iterable[WeightedFormula]) -> Fraction:
    """Min aggregator over the weights; min of the empty set is 1."""
    weights = [x.weight for x in gamma]
    return min(weights) if weights else Fraction(1)


# ---------------------------------------------------------------------------
# configuration

ENV_MAX_ATOMS = "ENTHYMEME_JUDGE_MAX_ATOMS"


@dataclass(frozen=True)
class LogicConfig:
    threshold: Fraction = Fraction(1, 2)
    max_atoms: int = 16
    max_premises: int = 12
    # fCN candidate scoping: False = literals of the whole flat set,
    # True = literals of a minimal entailing subset (see consequence.py)
    minimal_support_cn: bool = False

    @classmethod
    def from_env(cls, **overrides) -> "LogicConfig":
        env = os.environ.get(ENV_MAX_ATOMS)
        if env is not None and "max_atoms" not in overrides:
            overrides["max_atoms"] = int(env)
        return cls(**overrides)


# ---------------------------------------------------------------------------
# model enumeration and entailment
#
# Interpretations are enumerated with the first declared atom most
# significant and True before False, so the all-true assignment comes first.

def assignments(atoms: Sequence[str]) -> Iterator[dict[str, bool]]:
    for bits in itertools.product((True, False), repeat=len(atoms)):
        yield dict(zip(atoms, bits))


def _support(formulas: Iterable[Formula]) -> tuple[str, ...]:
    names: set[str] = set()
    for f in formulas:
        names |= atoms_of(f)
    return tuple(sorted(names))


def models(formulas: Iterable[Formula], atoms: Sequence[str] | None = None) -> list[dict[str, bool]]:
    formulas = list(formulas)
    if atoms is None:
        atoms = _support(formulas)
    return [m for m in assignments(atoms) if all(evaluate(f, m) for f in formulas)]


def is_satisfiable(formulas: Iterable[Formula]) -> bool:
    formulas = list(formulas)
    for m in assignments(_support(formulas)):
        if all(evaluate(f, m) for f in formulas):
            return True
    return False


def entails(premises: Iterable[Formula], conclusion: Formula) -> bool:
    premises = list(premises)
    atoms = _support(premises + [conclusion])
    for m in assignments(atoms):
        if all(evaluate(f, m) for f in premises) and not evaluate(conclusion, m):
            return False
    return True


def is_tautology(f: Formula) -> bool:
    return entails((), f)


# ---------------------------------------------------------------------------
# weighted entailment, inconsistency, classification

def weighted_entails(gamma: Iterable[WeightedFormula], conclusion: WeightedFormula) -> bool:
    """Gamma weighted-entails <f, w> iff f is a tautology and w = 1, or f is
    not a tautology, Flat(Gamma) entails f, and w equals the minimal weight
    in Gamma (1 when Gamma is empty)."""
    gamma = list(gamma)
    if is_tautology(conclusion.formula):
        return conclusion.weight == 1
    return entails(flat(gamma), conclusion.formula) and conclusion.weight == min_weight(gamma)


def is_inconsistent(gamma: Iterable[WeightedFormula], threshold: Fraction) -> bool:
    """Gamma is inconsistent iff it weighted-entails falsity with weight at
    least the threshold, i.e. its flat part is unsatisfiable and its minimal
    weight reaches the threshold."""
    gamma = list(gamma)
    return not is_satisfiable(flat(gamma)) and min_weight(gamma) >= threshold


ARGUMENT = "argument"
ENTHYMEME = "enthymeme"
OTHER = "other-approximate"


def proper_subsets(items: Sequence) -> Iterator[frozenset]:
    items = list(items)
    for size in range(len(items)):
        for combo in itertools.combinations(items, size):
            yield frozenset(combo)


def classify(premises: WeightedSet, claim: WeightedFormula, config: LogicConfig) -> str:
    """Classify an approximate weighted argument.

    argument: consistent premises, premises weighted-entail the claim, and no
    proper premise subset does; enthymeme: the premises do not weighted-entail
    the claim; other-approximate: everything else.
    """
    if not weighted_entails(premises, claim):
        return ENTHYMEME
    if is_inconsistent(premises, config.threshold):
        return OTHER
    for sub in proper_subsets(sorted(premises, key=repr)):
        if weighted_entails(sub, claim):
            return OTHER
    return ARGUMENT

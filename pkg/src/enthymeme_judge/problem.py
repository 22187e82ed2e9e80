"""Problem files: a JSON description of one enthymeme and its candidate
decodings.

Schema::

    {
      "atoms": ["h", "w", "r"],
      "enthymeme": {
        "premises": [{"formula": "w", "weight": "0.7"}, ...],
        "claim": {"formula": "h", "weight": "0.7"}
      },
      "decodings": [
        {"id": "D1", "premises": [...], "claim": {...}},
        ...
      ]
    }

Weights are decimal strings (or numbers); formulas use the ASCII/Unicode
connective syntax of language.parse_formula. Every atom that occurs in a
formula must be declared in "atoms", whose order fixes the canonical normal
forms.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import IO

from .language import (
    AArg,
    LogicConfig,
    ParseError,
    WeightedFormula,
    atoms_of,
    parse_formula,
    parse_weight,
)
from .measures import Context

_ATOM_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED = {"true", "false"}


class ProblemError(ValueError):
    """Malformed problem input (bad JSON shape, syntax, or limits)."""


@dataclass(frozen=True)
class Problem:
    atoms: tuple[str, ...]
    enthymeme: AArg
    decodings: tuple[tuple[str, AArg], ...]

    def context(self, config: LogicConfig | None = None) -> Context:
        return Context(atoms=self.atoms, config=config or LogicConfig.from_env())


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ProblemError(message)


def _parse_weighted(obj, where: str) -> WeightedFormula:
    _require(isinstance(obj, dict), f"{where}: expected an object with formula and weight")
    _require("formula" in obj and "weight" in obj,
             f"{where}: missing 'formula' or 'weight'")
    try:
        formula = parse_formula(obj["formula"]) if isinstance(obj["formula"], str) else None
    except ParseError as exc:
        raise ProblemError(f"{where}: {exc}") from exc
    _require(formula is not None, f"{where}: 'formula' must be a string")
    try:
        weight = parse_weight(obj["weight"])
    except ValueError as exc:
        raise ProblemError(f"{where}: {exc}") from exc
    return WeightedFormula(formula, weight)


def _parse_side(obj, where: str, atoms: frozenset, config: LogicConfig) -> AArg:
    _require(isinstance(obj, dict), f"{where}: expected an object")
    _require(isinstance(obj.get("premises"), list),
             f"{where}: 'premises' must be a list")
    _require(len(obj["premises"]) <= config.max_premises,
             f"{where}: too many premises (limit {config.max_premises})")
    premises = frozenset(
        _parse_weighted(item, f"{where}.premises[{i}]")
        for i, item in enumerate(obj["premises"]))
    claim = _parse_weighted(obj.get("claim"), f"{where}.claim")
    for x in list(premises) + [claim]:
        extra = atoms_of(x.formula) - atoms
        _require(not extra, f"{where}: undeclared atoms {sorted(extra)}")
    return AArg(premises, claim)


def problem_from_dict(data, config: LogicConfig | None = None) -> Problem:
    config = config or LogicConfig.from_env()
    _require(isinstance(data, dict), "top level: expected a JSON object")
    atoms = data.get("atoms")
    _require(isinstance(atoms, list) and atoms, "'atoms' must be a nonempty list")
    for a in atoms:
        _require(isinstance(a, str) and _ATOM_RE.match(a) and a not in _RESERVED,
                 f"invalid atom name: {a!r}")
    _require(len(set(atoms)) == len(atoms), "duplicate atom names")
    _require(len(atoms) <= config.max_atoms,
             f"too many atoms (limit {config.max_atoms})")
    atom_tuple = tuple(atoms)
    atom_set = frozenset(atom_tuple)

    enthymeme = _parse_side(data.get("enthymeme"), "enthymeme", atom_set, config)

    decs = data.get("decodings")
    _require(isinstance(decs, list), "'decodings' must be a list")
    out = []
    seen = set()
    for i, obj in enumerate(decs):
        _require(isinstance(obj, dict), f"decodings[{i}]: expected an object")
        cid = obj.get("id", f"d{i + 1}")
        _require(isinstance(cid, str) and cid, f"decodings[{i}]: invalid id")
        _require(cid not in seen, f"duplicate decoding id: {cid!r}")
        seen.add(cid)
        out.append((cid, _parse_side(obj, f"decodings[{i}]", atom_set, config)))
    return Problem(atom_tuple, enthymeme, tuple(out))


def load_problem(source: str | IO, config: LogicConfig | None = None) -> Problem:
    """Load a problem from a file path or an open text stream."""
    try:
        if isinstance(source, str):
            with open(source, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        else:
            data = json.load(source)
    except OSError as exc:
        raise ProblemError(f"cannot read problem file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ProblemError(f"invalid JSON: {exc}") from exc
    return problem_from_dict(data, config)

"""enthymeme-judge: evaluate candidate decodings of enthymemes under
weighted propositional logic.

Public API highlights:

- language: formulas, parsing, weighted entailment, classification;
- normalize: canonical DNF/CNF and weighted clause normalization;
- consequence: finite consequence and minimal-inconsistency operators;
- measures: the seventeen criterion measures;
- quality: aggregation, presets, and ranking;
- axioms: the axiom harness and expected conformance matrix;
- problem/report/plotting/cli: the file-based pipeline.
"""

from .language import (
    AArg,
    ARGUMENT,
    ENTHYMEME,
    OTHER,
    Formula,
    LogicConfig,
    ParseError,
    WeightedFormula,
    classify,
    entails,
    flat,
    is_inconsistent,
    is_satisfiable,
    is_tautology,
    min_weight,
    parse_formula,
    parse_weight,
    render,
    weighted_entails,
    wf,
    wset,
)
from .normalize import canonical_cnf, canonical_dnf, dn, dn_single, fdn, render_clause
from .consequence import flat_finite_cn, minimal_inconsistent_subsets
from .measures import Context, FAMILIES, MEASURE_KINDS, Measure, TVERSKY_PRESETS, make_measure
from .quality import (
    AGGREGATORS,
    ScoredDecoding,
    aggregate_average,
    aggregate_product,
    preset_sequence,
    rank_decodings,
    score_decoding,
)
from .axioms import (
    AXIOMS,
    AXIOM_BY_NAME,
    EXPECTED_MATRIX,
    Axiom,
    CellReport,
    Instance,
    MatrixReport,
    check_axiom,
    check_matrix,
    default_rows,
    generate_argument,
    generate_instance,
    harness_context,
)
from .problem import Problem, ProblemError, load_problem, problem_from_dict
from .report import build_report, format_fraction, render_csv, render_json, render_table

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

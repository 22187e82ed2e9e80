"""End-to-end acceptance checks.

Eight criteria, each printed as a single pass/fail line with its runtime.
Oracles used here are written independently inside this module (direct
clause-semantics evaluation, full subset scans) rather than reusing the
package's own entailment helpers, so agreement is evidence, not tautology.
"""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from enthymeme_judge.axioms import (
    check_matrix,
    generate_argument,
    harness_context,
)
from enthymeme_judge.consequence import (
    flat_finite_cn,
    minimal_inconsistent_subsets,
)
from enthymeme_judge.language import (
    ARGUMENT,
    AArg,
    LogicConfig,
    classify,
    parse_formula,
    wf,
    wset,
)
from enthymeme_judge.measures import Context, make_measure
from enthymeme_judge.normalize import canonical_cnf, canonical_dnf, dn_single
from enthymeme_judge.quality import (
    aggregate_average,
    aggregate_product,
    preset_sequence,
    rank_decodings,
)
from enthymeme_judge.report import format_fraction

F = Fraction


@contextmanager
def criterion(capsys, num, desc, budget):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\ncriterion {num} ({desc}): FAIL")
        raise
    elapsed = time.monotonic() - start
    with capsys.disabled():
        print(f"\ncriterion {num} ({desc}): PASS [{elapsed:.1f}s]")
    assert elapsed < budget, f"criterion {num} exceeded {budget}s: {elapsed:.1f}s"


def m(kind, **params):
    return make_measure(kind, **params)


# ---------------------------------------------------------------- criterion 1

def test_criterion_1_exact_measure_values(running, ctx, capsys):
    with criterion(capsys, 1, "worked measure values, exact", budget=1.0):
        E = running["E"]
        D1, D2, D3, D4 = (running[k] for k in ("D1", "D2", "D3", "D4"))
        assert m("dwc")(E, D3, ctx) == F(1, 2)
        assert m("pwc", p=1)(E, D3, ctx) == 0
        assert m("dpi", a=0)(E, D4, ctx) == F(7, 11)
        assert m("ppi", a=0, p="0.1")(E, D4, ctx) == F(3, 5)
        assert m("cmmin")(E, D3, ctx) == F(1, 2)
        assert m("cmpen", p="0.25")(E, D3, ctx) == F(3, 4)
        assert m("cmtve", preset="and")(E, D1, ctx) == F(2, 3)
        assert m("cmtve", preset="and")(E, D2, ctx) == F(16, 19)
        assert m("cmtve", preset="ss2")(E, D2, ctx) == F(1, 4)
        assert m("cmtve", preset="and")(E, D3, ctx) == F(8, 13)
        assert m("cmtve", preset="ss2")(E, D3, ctx) == F(1, 11)
        for D in (D1, D2, D3):
            assert m("cmbl")(E, D, ctx) == 1
        assert m("cmcd")(E, D3, ctx) == F(1, 3)
        assert m("cmcp", s=1, p="0.5")(E, D3, ctx) == F(1, 2)
        assert m("cmdg")(E, D3, ctx) == F(2, 3)
        assert m("cmsd")(E, D2, ctx) == F(9, 10)
        assert m("cmld", a=0, u="0.3")(E, D2, ctx) == F(2, 3)
        assert m("cmld", a=0, u="0.5")(E, D2, ctx) == F(4, 5)


# ---------------------------------------------------------------- criterion 2

def test_criterion_2_quality_tables(running, ctx, capsys):
    with criterion(capsys, 2, "quality tables and rankings", budget=2.0):
        E = running["E"]
        cands = [(k, running[k]) for k in ("D1", "D2", "D3")]
        tables = {
            ("ld", "average"): (0.952, 0.949, 0.909),
            ("ld", "product"): (0.667, 0.674, 0.462),
            ("sd", "average"): (0.802, 0.664, 0.608),
            ("sd", "product"): (0.056, 0.0, 0.0),
        }
        for (preset, agg), expected in tables.items():
            ranked = rank_decodings(E, cands, preset_sequence(preset), agg, ctx)
            scores = {s.id: s.score for s in ranked}
            for key, target in zip(("D1", "D2", "D3"), expected):
                rendered = float(format_fraction(scores[key], places=6))
                assert abs(rendered - target) < 5e-4, (preset, agg, key)

        def order(preset, agg):
            return [s.id for s in rank_decodings(E, cands,
                                                 preset_sequence(preset), agg,
                                                 ctx)]

        assert order("ld", "average") == ["D1", "D2", "D3"]
        assert order("ld", "product") == ["D2", "D1", "D3"]
        assert order("sd", "average")[0] == "D1"
        assert order("sd", "product")[0] == "D1"
        assert rank_decodings(E, cands, preset_sequence("sd"), "product", ctx,
                              threshold=F(1, 2)) == []


# ---------------------------------------------------------------- criterion 3

def test_criterion_3_normalization_goldens(capsys):
    with criterion(capsys, 3, "normalization goldens", budget=5.0):
        atoms = ("p", "q", "r")

        def clause(text):
            return frozenset((name.lstrip("!"), not name.startswith("!"))
                             for name in text.split("|"))

        # disjunctive normal form of ~p, in model-enumeration order
        dnf = canonical_dnf(parse_formula("!p"), atoms)
        assert [frozenset(term) for term in dnf] == \
            [clause("!p|q|r"), clause("!p|q|!r"),
             clause("!p|!q|r"), clause("!p|!q|!r")]

        # the clause reduction collapses a full maxterm expansion of a single
        # literal back to that literal
        assert canonical_cnf(parse_formula("p"), atoms) == [clause("p")]

        # worked conjunction example
        assert canonical_cnf(parse_formula("!(p -> q | !r)"), atoms) == \
            [clause("p"), clause("!q"), clause("r")]

        # weighted decomposition carries the source weight to every clause
        nd = dn_single(wf("!(p -> q | !r)", "0.6"), atoms)
        assert {(c.clause, c.weight) for c in nd} == \
            {(clause("p"), F(3, 5)), (clause("!q"), F(3, 5)),
             (clause("r"), F(3, 5))}


# ---------------------------------------------------------------- criterion 4

def _clause_text(clause):
    return " | ".join(("" if pol else "!") + a
                      for a, pol in sorted(clause, key=lambda l: l[0]))


def _clause_sat(clause, assignment):
    return any(assignment[a] == pol for a, pol in clause)


def _oracle_fcn(clauses, atoms):
    """Brute-force closure: every non-tautological clause over the premise
    literals that is satisfied in all models of the premises."""
    vocab = sorted({lit for c in clauses for lit in c})
    models = [dict(zip(atoms, vals))
              for vals in itertools.product((True, False), repeat=len(atoms))
              if all(_clause_sat(c, dict(zip(atoms, vals))) for c in clauses)]
    out = set()
    for n in range(1, len(vocab) + 1):
        for combo in itertools.combinations(vocab, n):
            cand = frozenset(combo)
            if any((a, not pol) in cand for a, pol in cand):
                continue  # tautological
            if all(_clause_sat(cand, mdl) for mdl in models):
                out.add(cand)
    return frozenset(out)


def test_criterion_4_closure_oracle(capsys):
    with criterion(capsys, 4, "finite closure vs brute-force oracle",
                   budget=30.0):
        atoms = ("p", "q", "r")
        all_clauses = []
        for signs in itertools.product((1, 0, None), repeat=3):
            c = frozenset((a, bool(s)) for a, s in zip(atoms, signs)
                          if s is not None)
            if c:
                all_clauses.append(c)
        assert len(all_clauses) == 26

        checked = 0
        for n in range(0, 4):
            for combo in itertools.combinations(all_clauses, n):
                wfs = [wf(_clause_text(c), "0.5") for c in combo]
                assert flat_finite_cn(wfs, atoms) == _oracle_fcn(combo, atoms)
                checked += 1
        assert checked == 2952

        # worked closure sets
        big = ("h", "w", "r", "p", "l", "x")

        def cl(*texts):
            return frozenset(
                frozenset((name.lstrip("!"), not name.startswith("!"))
                          for name in t.split("|")) for t in texts)

        assert flat_finite_cn([wf("r", "0.7"), wf("!r | h", "0.8")], big) == \
            cl("r", "!r|h", "h", "r|h")
        assert flat_finite_cn([wf("h", "0.7")], big) == cl("h")
        assert flat_finite_cn([wf("r & h & x", "0.7")], big) == \
            cl("r", "h", "x", "r|h", "r|x", "h|x", "r|h|x")


# ---------------------------------------------------------------- criterion 5

def _oracle_mus(elements, atoms, threshold):
    """Full subset scan for minimal inconsistent subsets. elements is a list
    of (weighted formula, clause) pairs."""

    def inconsistent(subset):
        if not subset:
            return False
        if min(x.weight for x, _ in subset) < threshold:
            return False
        for vals in itertools.product((True, False), repeat=len(atoms)):
            mdl = dict(zip(atoms, vals))
            if all(_clause_sat(c, mdl) for _, c in subset):
                return False
        return True

    out = []
    for n in range(1, len(elements) + 1):
        for combo in itertools.combinations(elements, n):
            if inconsistent(combo) and \
                    not any(set(prev) < {x for x, _ in combo} for prev in out):
                out.append(frozenset(x for x, _ in combo))
    return {s for s in out}


def test_criterion_5_mus_oracle(capsys):
    with criterion(capsys, 5, "minimal inconsistent subsets vs subset scan",
                   budget=60.0):
        atoms = ("p", "q", "r", "s")
        config = LogicConfig(max_atoms=6, max_premises=8)
        rng = random.Random(42)
        for _ in range(500):
            elements = []
            seen = set()
            for _ in range(rng.randint(1, 6)):
                picked = rng.sample(atoms, rng.randint(1, 2))
                c = frozenset((a, rng.random() < 0.5) for a in picked)
                w = F(rng.randint(1, 10), 10)
                key = (c, w)
                if key in seen:
                    continue
                seen.add(key)
                elements.append((wf(_clause_text(c), str(float(w))), c))
            gamma = wset(*(x for x, _ in elements))
            got = {frozenset(s) for s in
                   minimal_inconsistent_subsets(gamma, config)}
            want = _oracle_mus(elements, atoms, config.threshold)
            assert got == want, elements


# ---------------------------------------------------------------- criterion 6

def test_criterion_6_axiom_conformance(capsys):
    with criterion(capsys, 6, "axiom conformance matrix + argument positivity",
                   budget=600.0):
        report = check_matrix(samples=1000, seed=0)
        assert not report.violations()
        for cell in report.cells.values():
            if cell.marked:
                assert cell.vacuous or cell.exercised >= 50, \
                    (cell.row, cell.axiom, cell.exercised)

        # every genuine uniform-weight argument scores 1 on the
        # inference / coherence / minimality measures
        ctx = harness_context()
        positivity = [m("dpi", a=0), m("dpi", a=1),
                      m("ppi", a=0, p="0.1"), m("ppi", a=1, p="0.1"),
                      m("dsc"), m("psc", p=1), m("dwc"), m("pwc", p=1),
                      m("cmmin"), m("cmpen")]
        E = AArg(wset(wf("a", "0.6")), wf("b", "0.6"))
        rng = random.Random(7)
        for _ in range(200):
            D = generate_argument(rng, ctx, pool=ctx.atoms[2:])
            assert classify(D.premises, D.claim, ctx.config) == ARGUMENT
            for measure in positivity:
                assert measure(E, D, ctx) == 1, (D, measure.label)


# ---------------------------------------------------------------- criterion 7

def test_criterion_7_structural_invariants(capsys):
    with criterion(capsys, 7, "structural invariant suites", budget=120.0):
        rng = random.Random(1234)
        atoms = ("p", "q", "r", "s")
        ctx = Context(atoms=atoms, config=LogicConfig(max_atoms=6,
                                                      max_premises=6))
        chain = [m("cmtve", preset=p)
                 for p in ("ss2", "jac", "dic", "sor", "and")]
        cmcd, cmdg = m("cmcd"), m("cmdg")

        def side():
            prems = []
            for _ in range(rng.randint(0, 3)):
                picked = rng.sample(atoms, rng.randint(1, 3))
                text = " | ".join(("" if rng.random() < 0.5 else "!") + a
                                  for a in picked)
                prems.append(wf(text, F(rng.randint(1, 10), 10)))
            picked = rng.sample(atoms, rng.randint(1, 2))
            text = " | ".join(("" if rng.random() < 0.5 else "!") + a
                              for a in picked)
            return AArg(wset(*prems), wf(text, F(rng.randint(1, 10), 10)))

        for _ in range(1000):
            E, D = side(), side()
            values = [meas(E, D, ctx) for meas in chain]
            assert all(a <= b for a, b in zip(values, values[1:]))
            assert cmcd(E, D, ctx) + cmdg(E, D, ctx) == 1

        for _ in range(1000):
            vec = [F(rng.randint(0, 12), 12) for _ in range(rng.randint(1, 7))]
            prod, avg = aggregate_product(vec), aggregate_average(vec)
            assert 0 <= prod <= min(vec) <= avg <= max(vec) <= 1
            perm = vec[:]
            rng.shuffle(perm)
            assert aggregate_average(perm) == avg
            assert aggregate_product(perm) == prod


# ---------------------------------------------------------------- criterion 8

def test_criterion_8_pinned_divergence(running, ctx, capsys):
    with criterion(capsys, 8, "two-sided Tversky divergence pinned",
                   budget=5.0):
        # With identical claims the claim-side factor is 1, so the two-sided
        # products equal the one-sided values below. Figures sometimes quoted
        # for the same example (1/1.375, 1/1.5, 3/3.25 under `and`; 1/7, 1/9,
        # 3/7 under `ss2`) match no composition of the definitions used here;
        # the definitional values are asserted so the discrepancy stays
        # visible instead of silently absorbed.
        E = running["E"]
        got = tuple(m("cmtvetve", preset="and")(E, running[k], ctx)
                    for k in ("D1", "D2", "D3"))
        assert got == (F(2, 3), F(16, 19), F(8, 13))
        for k in ("D1", "D2", "D3"):
            assert m("cmtvetve", preset="and")(E, running[k], ctx) == \
                m("cmtve", preset="and")(E, running[k], ctx)

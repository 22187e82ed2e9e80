"""Quality aggregation and ranking of candidate decodings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .language import AArg
from .measures import Context, Measure, make_measure

ZERO = Fraction(0)


def aggregate_average(values: Sequence[Fraction]) -> Fraction:
    if not values:
        return ZERO
    return Fraction(sum(values), len(values))


def aggregate_product(values: Sequence[Fraction]) -> Fraction:
    if not values:
        return ZERO
    out = Fraction(1)
    for v in values:
        out *= v
    return out


AGGREGATORS = {
    "average": aggregate_average,
    "product": aggregate_product,
}


def preset_sequence(name: str) -> tuple[Measure, ...]:
    """Two shipped measure sequences: 'ld' is the lenient/demanding profile,
    'sd' the strict/divided one."""
    if name == "ld":
        return (
            make_measure("psc", p=1),
            make_measure("ppi", a=1, p="1/10"),
            make_measure("cmpen", p="1/4"),
            make_measure("cmbl"),
            make_measure("cmtve", preset="and"),
            make_measure("cmld", a=0, u="1/2"),
            make_measure("cmpg", s=1, p="1/2"),
        )
    if name == "sd":
        return (
            make_measure("pwc", p=1),
            make_measure("dpi", a=0),
            make_measure("cmmin"),
            make_measure("cmbl"),
            make_measure("cmtve", preset="ss2"),
            make_measure("cmsd"),
            make_measure("cmdg"),
        )
    raise ValueError(f"unknown preset: {name!r} (expected 'ld' or 'sd')")


@dataclass(frozen=True)
class ScoredDecoding:
    id: str
    decoding: AArg
    values: tuple[Fraction, ...]
    score: Fraction


def score_decoding(E: AArg, D: AArg, measures: Sequence[Measure],
                   aggregator: str, ctx: Context) -> tuple[tuple[Fraction, ...], Fraction]:
    values = tuple(m(E, D, ctx) for m in measures)
    return values, AGGREGATORS[aggregator](values)


def rank_decodings(E: AArg, candidates: Iterable[tuple[str, AArg]],
                   measures: Sequence[Measure], aggregator: str, ctx: Context,
                   threshold: Fraction | None = None,
                   top_k: int | None = None) -> list[ScoredDecoding]:
    """Score every candidate and sort by descending aggregate; ties keep
    input order. Candidates below the threshold are dropped, then the list is
    cut to the top k if requested."""
    scored = []
    for cid, D in candidates:
        values, score = score_decoding(E, D, measures, aggregator, ctx)
        scored.append(ScoredDecoding(cid, D, values, score))
    scored.sort(key=lambda s: s.score, reverse=True)
    if threshold is not None:
        scored = [s for s in scored if s.score >= threshold]
    if top_k is not None:
        scored = scored[:top_k]
    return scored

"""Report construction and rendering (json, table, csv).

All scores are exact rationals internally; the decimal columns are
presentation-only roundings to six places.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Sequence

from .language import LogicConfig, classify, render
from .measures import Measure
from .problem import Problem
from .quality import ScoredDecoding


def format_fraction(v: Fraction, places: int = 6) -> str:
    """Round-half-up decimal rendering with a fixed number of places."""
    scale = 10 ** places
    scaled, rem = divmod(v.numerator * scale, v.denominator)
    if 2 * rem >= v.denominator:
        scaled += 1
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // scale}.{scaled % scale:0{places}d}"


def _side_dict(side) -> dict:
    return {
        "premises": [{"formula": render(x.formula), "weight": str(x.weight)}
                     for x in sorted(side.premises, key=repr)],
        "claim": {"formula": render(side.claim.formula),
                  "weight": str(side.claim.weight)},
    }


def build_report(problem: Problem, ranked: Sequence[ScoredDecoding],
                 measures: Sequence[Measure], aggregator: str,
                 config: LogicConfig, preset: str | None = None,
                 threshold: Fraction | None = None,
                 top_k: int | None = None) -> dict:
    results = []
    for rank, s in enumerate(ranked, start=1):
        results.append({
            "rank": rank,
            "id": s.id,
            "class": classify(s.decoding.premises, s.decoding.claim, config),
            "score": str(s.score),
            "score_decimal": format_fraction(s.score),
            "values": [{"measure": m.label, "value": str(v),
                        "value_decimal": format_fraction(v)}
                       for m, v in zip(measures, s.values)],
        })
    return {
        "atoms": list(problem.atoms),
        "preset": preset,
        "aggregator": aggregator,
        "threshold": None if threshold is None else str(threshold),
        "top_k": top_k,
        "measures": [m.label for m in measures],
        "enthymeme": _side_dict(problem.enthymeme),
        "results": results,
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2)


def render_table(report: dict) -> str:
    headers = ["rank", "id", "class", "score"] + report["measures"]
    rows = []
    for r in report["results"]:
        rows.append([str(r["rank"]), r["id"], r["class"], r["score_decimal"]]
                    + [v["value_decimal"] for v in r["values"]])
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["rank", "id", "class", "score"] + report["measures"])
    for r in report["results"]:
        writer.writerow([r["rank"], r["id"], r["class"], r["score_decimal"]]
                        + [v["value_decimal"] for v in r["values"]])
    return buf.getvalue()


RENDERERS = {
    "json": render_json,
    "table": render_table,
    "csv": render_csv,
}

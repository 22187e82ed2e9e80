"""The seventeen criterion measures over enthymeme decodings.

A measure maps (enthymeme E, candidate decoding D) to an exact rational in
[0, 1]. Measures are grouped in seven families: coherence (dsc, dwc, psc,
pwc), inference (dpi, ppi), minimality (cmmin, cmpen), preservation (cmbl,
cmtvetve), similarity (cmtve), granularity (cmcd, cmdg, cmcp, cmpg), and
stability (cmsd, cmld).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .language import AArg, Formula, LogicConfig, WeightedFormula, min_weight
from .normalize import dn
from .consequence import (
    entailing_subsets,
    flat_finite_cn,
    minimal_inconsistent_subsets,
)

ZERO = Fraction(0)
ONE = Fraction(1)

TVERSKY_PRESETS = {
    "jac": Fraction(1),
    "dic": Fraction(1, 2),
    "sor": Fraction(1, 4),
    "and": Fraction(1, 8),
    "ss2": Fraction(2),
}


@dataclass(frozen=True)
class Context:
    """Shared evaluation context: atom declaration order and logic config."""
    atoms: tuple[str, ...]
    config: LogicConfig = field(default_factory=LogicConfig)


# ---------------------------------------------------------------------------
# cached primitives

@lru_cache(maxsize=8192)
def _dn_cached(ws: frozenset, atoms: tuple) -> frozenset:
    return dn(ws, atoms)


@lru_cache(maxsize=8192)
def _mus_count(ws: frozenset, config: LogicConfig) -> int:
    return len(minimal_inconsistent_subsets(ws, config))


@lru_cache(maxsize=8192)
def _fcn_cached(ws: frozenset, atoms: tuple, config: LogicConfig) -> frozenset:
    return flat_finite_cn(ws, atoms, config)


@lru_cache(maxsize=8192)
def _inf_cached(ws: frozenset, claim: Formula, atoms: tuple) -> tuple:
    nd = _dn_cached(ws, atoms)
    return tuple(entailing_subsets(nd, claim, atoms))


# ---------------------------------------------------------------------------
# shared statistics (also used by the axiom harness)

def norm_premises(side: AArg, ctx: Context) -> frozenset:
    return _dn_cached(side.premises, ctx.atoms)


def norm_claim(side: AArg, ctx: Context) -> frozenset:
    return _dn_cached(frozenset((side.claim,)), ctx.atoms)


def strong_mus_count(E: AArg, D: AArg, ctx: Context) -> int:
    return _mus_count(D.premises, ctx.config)


def weak_mus_count(E: AArg, D: AArg, ctx: Context) -> int:
    return _mus_count(D.premises | E.premises, ctx.config)


def fcn_premises(D: AArg, ctx: Context) -> frozenset:
    return _fcn_cached(D.premises, ctx.atoms, ctx.config)


def fcn_claim(D: AArg, ctx: Context) -> frozenset:
    return _fcn_cached(frozenset((D.claim,)), ctx.atoms, ctx.config)


def inference_sets(D: AArg, ctx: Context) -> tuple:
    """Inf(Delta, beta): subsets of the normalized premises whose flat part
    entails the claim."""
    return _inf_cached(D.premises, D.claim.formula, ctx.atoms)


def stability_error(D: AArg) -> Fraction:
    return abs(min_weight(D.premises) - D.claim.weight)


def granularity_gap(E: AArg, D: AArg, ctx: Context) -> int:
    return len(norm_premises(D, ctx) - norm_premises(E, ctx))


def tversky(left: frozenset, right: frozenset, x: Fraction, y: Fraction,
            both_empty_raw: bool) -> Fraction:
    if both_empty_raw:
        return ONE
    a = len(left & right)
    b = len(left - right)
    c = len(right - left)
    denom = a + x * b + y * c
    if denom == 0:
        return ONE
    return Fraction(a) / denom


# ---------------------------------------------------------------------------
# measure implementations

def _m_dsc(E, D, ctx, p):
    return Fraction(1, 1 + strong_mus_count(E, D, ctx))


def _m_dwc(E, D, ctx, p):
    return Fraction(1, 1 + weak_mus_count(E, D, ctx))


def _m_psc(E, D, ctx, p):
    return max(ZERO, 1 - p["p"] * strong_mus_count(E, D, ctx))


def _m_pwc(E, D, ctx, p):
    return max(ZERO, 1 - p["p"] * weak_mus_count(E, D, ctx))


def _gate(D: AArg, a: Fraction) -> bool:
    return stability_error(D) <= a


def _m_dpi(E, D, ctx, p):
    if not _gate(D, p["a"]):
        return ZERO
    cb = fcn_claim(D, ctx)
    if not cb:
        return ONE
    missing = len(cb - fcn_premises(D, ctx))
    return Fraction(len(cb), len(cb) + missing)


def _m_ppi(E, D, ctx, p):
    if not _gate(D, p["a"]):
        return ZERO
    missing = len(fcn_claim(D, ctx) - fcn_premises(D, ctx))
    return max(ZERO, 1 - p["p"] * missing)


def _m_cmmin(E, D, ctx, p):
    inf = inference_sets(D, ctx)
    return ONE if not inf else Fraction(1, len(inf))


def _m_cmpen(E, D, ctx, p):
    inf = inference_sets(D, ctx)
    if not inf:
        return ONE
    excess = len(norm_premises(D, ctx)) - min(len(g) for g in inf)
    return max(ZERO, 1 - p["p"] * excess)


def _m_cmtve(E, D, ctx, p):
    return tversky(norm_premises(E, ctx), norm_premises(D, ctx), p["x"], p["y"],
                   not E.premises and not D.premises)


def _m_cmtvetve(E, D, ctx, p):
    first = _m_cmtve(E, D, ctx, p)
    second = tversky(norm_claim(E, ctx), norm_claim(D, ctx), p["x"], p["y"], False)
    return first * second


def _m_cmbl(E, D, ctx, p):
    shared_premises = norm_premises(E, ctx) & norm_premises(D, ctx)
    shared_claims = norm_claim(E, ctx) & norm_claim(D, ctx)
    return ONE if shared_premises and shared_claims else ZERO


def _m_cmcd(E, D, ctx, p):
    return Fraction(1, granularity_gap(E, D, ctx) + 1)


def _m_cmdg(E, D, ctx, p):
    return 1 - Fraction(1, granularity_gap(E, D, ctx) + 1)


def _m_cmcp(E, D, ctx, p):
    g = granularity_gap(E, D, ctx)
    if g <= p["s"]:
        return ONE
    return max(ZERO, 1 - p["p"] * (g - p["s"]))


def _m_cmpg(E, D, ctx, p):
    g = granularity_gap(E, D, ctx)
    if g >= p["s"]:
        return ONE
    return max(ZERO, 1 - p["p"] * (p["s"] - g))


def _m_cmsd(E, D, ctx, p):
    if not D.premises:
        return ONE
    return 1 - stability_error(D)


def _m_cmld(E, D, ctx, p):
    if not D.premises:
        return ONE
    err = stability_error(D)
    a, u = p["a"], p["u"]
    if err <= a:
        return ONE
    if err >= u:
        return ZERO
    return 1 - (err - a) / (u - a)


# ---------------------------------------------------------------------------
# registry

def _frac(v) -> Fraction:
    if isinstance(v, float):
        return Fraction(repr(v))
    return Fraction(v)


# kind -> (function, {param: (converter, default or None meaning required)})
_REGISTRY = {
    "dsc": (_m_dsc, {}),
    "dwc": (_m_dwc, {}),
    "psc": (_m_psc, {"p": (_frac, Fraction(1))}),
    "pwc": (_m_pwc, {"p": (_frac, Fraction(1))}),
    "dpi": (_m_dpi, {"a": (_frac, Fraction(0))}),
    "ppi": (_m_ppi, {"a": (_frac, Fraction(1)), "p": (_frac, Fraction(1, 10))}),
    "cmmin": (_m_cmmin, {}),
    "cmpen": (_m_cmpen, {"p": (_frac, Fraction(1, 4))}),
    "cmtve": (_m_cmtve, {"x": (_frac, None), "y": (_frac, None)}),
    "cmtvetve": (_m_cmtvetve, {"x": (_frac, None), "y": (_frac, None)}),
    "cmbl": (_m_cmbl, {}),
    "cmcd": (_m_cmcd, {}),
    "cmdg": (_m_cmdg, {}),
    "cmcp": (_m_cmcp, {"s": (int, 1), "p": (_frac, Fraction(1, 2))}),
    "cmpg": (_m_cmpg, {"s": (int, 1), "p": (_frac, Fraction(1, 2))}),
    "cmsd": (_m_cmsd, {}),
    "cmld": (_m_cmld, {"a": (_frac, Fraction(0)), "u": (_frac, Fraction(1, 2))}),
}

MEASURE_KINDS = tuple(_REGISTRY)

FAMILIES = {
    "coherence": ("dsc", "dwc", "psc", "pwc"),
    "inference": ("dpi", "ppi"),
    "minimality": ("cmmin", "cmpen"),
    "preservation": ("cmbl", "cmtvetve"),
    "similarity": ("cmtve",),
    "granularity": ("cmcd", "cmdg", "cmcp", "cmpg"),
    "stability": ("cmsd", "cmld"),
}


@dataclass(frozen=True)
class Measure:
    kind: str
    params: tuple = ()

    def __call__(self, E: AArg, D: AArg, ctx: Context) -> Fraction:
        fn, _ = _REGISTRY[self.kind]
        return fn(E, D, ctx, dict(self.params))

    @property
    def label(self) -> str:
        if not self.params:
            return self.kind
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({inner})"


def make_measure(kind: str, **params) -> Measure:
    """Build a measure; Tversky measures accept preset=jac|dic|sor|and|ss2
    in place of explicit x and y."""
    if kind not in _REGISTRY:
        raise ValueError(f"unknown measure kind: {kind!r}")
    _, spec = _REGISTRY[kind]
    if kind in ("cmtve", "cmtvetve"):
        preset = params.pop("preset", None)
        if preset is not None:
            if preset not in TVERSKY_PRESETS:
                raise ValueError(f"unknown Tversky preset: {preset!r}")
            params.setdefault("x", TVERSKY_PRESETS[preset])
            params.setdefault("y", TVERSKY_PRESETS[preset])
        elif "x" not in params and "y" not in params:
            params["x"] = params["y"] = TVERSKY_PRESETS["jac"]
    unknown = set(params) - set(spec)
    if unknown:
        raise ValueError(f"unknown parameters for {kind}: {sorted(unknown)}")
    resolved = []
    for name, (convert, default) in spec.items():
        if name in params:
            resolved.append((name, convert(params[name])))
        elif default is not None:
            resolved.append((name, default))
        else:
            raise ValueError(f"measure {kind} requires parameter {name!r}")
    _validate_params(kind, dict(resolved))
    return Measure(kind, tuple(resolved))


def _validate_params(kind: str, p: dict) -> None:
    if "p" in p and not 0 < p["p"] <= 1:
        raise ValueError(f"{kind}: penalty p must be in (0, 1]")
    if "a" in p and not 0 <= p["a"] <= 1:
        raise ValueError(f"{kind}: acceptable error a must be in [0, 1]")
    if "u" in p and not (0 < p["u"] <= 1 and p["a"] < p["u"]):
        raise ValueError(f"{kind}: unacceptable error u must be in (0, 1] with a < u")
    if "s" in p and p["s"] < 1:
        raise ValueError(f"{kind}: size s must be a positive integer")
    for key in ("x", "y"):
        if key in p and p[key] <= 0:
            raise ValueError(f"{kind}: Tversky weight {key} must be positive")

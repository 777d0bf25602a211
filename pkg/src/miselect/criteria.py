"""The eleven candidate-scoring criteria for greedy feature selection.

Each criterion scores a candidate feature against the class given the
ordered set of already-selected features.  All scores come from plug-in
empirical distributions; pairwise statistics are memoized per dataset.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from . import data as _d

KINDS = ("mim", "mifs", "mrmr", "jmi", "cife", "cmifs",
         "cmim", "cmim2", "icap", "md", "mmd")


@dataclass(frozen=True)
class CriterionSpec:
    """One of the scoring criteria plus its parameters.

    `beta` is the redundancy weight and applies to MIFS only.
    """

    kind: str
    beta: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", self.kind.lower())
        if self.kind not in KINDS:
            raise ValueError(f"unknown criterion {self.kind!r}; choose from {KINDS}")
        if self.kind == "mifs":
            if self.beta is None or self.beta < 0:
                raise ValueError("MIFS requires beta >= 0")
        elif self.beta is not None:
            raise ValueError("beta is only meaningful for MIFS")


@dataclass
class ScoreBoard:
    """Per-candidate scores, with a term breakdown for linear criteria."""

    scores: dict[str, float] = field(default_factory=dict)
    breakdown: dict[str, dict[str, float]] = field(default_factory=dict)

    def best(self) -> float:
        return max(self.scores.values())


class PairCache:
    """Memoized pairwise statistics against one dataset and target."""

    def __init__(self, ds: _d.Dataset):
        self.ds = ds
        self.target = ds.target_name
        self._mi_c: dict[str, float] = {}          # I(f;C)
        self._mi: dict[tuple, float] = {}          # I(f;s)
        self._mi_given_c: dict[tuple, float] = {}  # I(f;s|C)
        self._cmi_c: dict[tuple, float] = {}       # I(f;C|s)

    def relevance(self, f: str) -> float:
        if f not in self._mi_c:
            self._mi_c[f] = _d.mutual_information(self.ds, [f], [self.target])
        return self._mi_c[f]

    def pair_mi(self, f: str, s: str) -> float:
        key = (f, s) if f < s else (s, f)
        if key not in self._mi:
            self._mi[key] = _d.mutual_information(self.ds, [f], [s])
        return self._mi[key]

    def pair_mi_given_class(self, f: str, s: str) -> float:
        key = (f, s) if f < s else (s, f)
        if key not in self._mi_given_c:
            self._mi_given_c[key] = _d.conditional_mutual_information(
                self.ds, [f], [s], [self.target])
        return self._mi_given_c[key]

    def class_mi_given(self, f: str, s: str) -> float:
        if (f, s) not in self._cmi_c:
            self._cmi_c[(f, s)] = _d.conditional_mutual_information(
                self.ds, [f], [self.target], [s])
        return self._cmi_c[(f, s)]

    def interaction(self, f: str, s: str) -> float:
        # I(f;s;C) = I(f;s|C) - I(f;s)
        return self.pair_mi_given_class(f, s) - self.pair_mi(f, s)


# Composite-view supports larger than n / SPARSE_SUPPORT_FRACTION samples
# make the plug-in joint MI unreliable (MMD estimates MI in high dimension).
SPARSE_SUPPORT_FRACTION = 5


def _score_with_terms(spec: CriterionSpec, f: str, S: tuple[str, ...],
                      cache: PairCache) -> tuple[float, dict[str, float]]:
    ds = cache.ds
    target = cache.target
    kind = spec.kind

    if kind == "md":
        return _d.mutual_information(ds, list(S) + [f], [target]), {}
    if kind == "mmd":
        chosen = list(S) + [f]
        rest = [v for v in ds.feature_names if v not in chosen]
        joint = _d.mutual_information(ds, chosen, [target])
        if rest:
            _, support = _d.composite_view(ds, rest)
            if support > ds.n / SPARSE_SUPPORT_FRACTION:
                warnings.warn(
                    f"MMD complement set {rest} has sparse support "
                    f"({support} distinct tuples over {ds.n} samples); "
                    "its plug-in MI estimate may be unreliable")
            return joint - _d.mutual_information(ds, rest, [target]), {}
        return joint, {}

    rel = cache.relevance(f)
    if not S:
        return rel, {"relevance": rel}
    p = len(S)

    if kind == "mim":
        return rel, {"relevance": rel}
    if kind in ("mifs", "mrmr"):
        beta = spec.beta if kind == "mifs" else 1.0 / p
        red = -beta * sum(cache.pair_mi(f, s) for s in S)
        return rel + red, {"relevance": rel, "redundancy": red}
    if kind in ("jmi", "cife"):
        coeff = 1.0 / p if kind == "jmi" else 1.0
        red = -coeff * sum(cache.pair_mi(f, s) for s in S)
        comp = coeff * sum(cache.pair_mi_given_class(f, s) for s in S)
        return rel + red + comp, {"relevance": rel, "redundancy": red,
                                  "complementarity": comp}
    if kind == "cmifs":
        # below two selected features the full form degrades to its
        # natural truncations
        if p == 1:
            red = -cache.pair_mi(f, S[0])
            comp = cache.pair_mi_given_class(f, S[0])
            return rel + red + comp, {"relevance": rel, "redundancy": red,
                                      "complementarity": comp}
        s1, st = S[0], S[-1]
        red = -cache.pair_mi(f, st)
        comp = cache.pair_mi_given_class(f, s1) + cache.pair_mi_given_class(f, st)
        chain = -_d.conditional_mutual_information(ds, [f], [st], [s1])
        score = rel + red + comp + chain
        return score, {"relevance": rel, "redundancy": red,
                       "complementarity": comp, "chain_correction": chain}
    if kind == "cmim":
        return min(cache.class_mi_given(f, s) for s in S), {}
    if kind == "cmim2":
        return sum(cache.class_mi_given(f, s) for s in S) / p, {}
    if kind == "icap":
        pen = sum(min(0.0, cache.interaction(f, s)) for s in S)
        return rel + pen, {"relevance": rel, "interaction_penalty": pen}
    raise AssertionError(f"unhandled criterion {kind}")


def score(spec: CriterionSpec, f: str, S, ds: _d.Dataset,
          cache: PairCache | None = None) -> float:
    """Score candidate `f` against the class given ordered selected set `S`."""
    S = tuple(S)
    if f in S:
        raise ValueError(f"candidate {f!r} is already selected")
    if cache is None:
        cache = PairCache(ds)
    value, _ = _score_with_terms(spec, f, S, cache)
    return value


def score_all(spec: CriterionSpec, candidates, S, ds: _d.Dataset,
              cache: PairCache | None = None) -> ScoreBoard:
    """Score every candidate; evaluation order never affects the values."""
    S = tuple(S)
    cand = list(candidates)
    if set(cand) & set(S):
        raise ValueError("candidates and selected set overlap")
    if cache is None:
        cache = PairCache(ds)
    board = ScoreBoard()
    for f in cand:
        value, terms = _score_with_terms(spec, f, S, cache)
        board.scores[f] = value
        board.breakdown[f] = terms
    return board

"""Reference-set evaluation and method-to-method rank correlation."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .corpus import AuthorKey
from .errors import InvalidInput, UndefinedCorrelation
from .methods import MethodId
from .rank.ranking import spearman_rho
from .rank.types import Ranking


@dataclass(frozen=True)
class ReferenceSet:
    """A labelled list of authors expected to rank highly."""

    label: str
    members: tuple[AuthorKey, ...]

    def __post_init__(self):
        if not self.members:
            raise InvalidInput(f"reference set {self.label!r} is empty")
        if len(set(self.members)) != len(self.members):
            raise InvalidInput(f"reference set {self.label!r} has duplicate members")


def parse_refset(label: str, lines: Iterable[str]) -> ReferenceSet:
    """One ``SURNAME, INITIALS`` per line; ``#`` comments and repeats are skipped."""
    members = []
    for line in lines:
        text = line.strip()
        if text and not text.startswith("#"):
            members.append(AuthorKey.parse(text))
    return ReferenceSet(label, tuple(dict.fromkeys(members)))


def read_refset(path) -> ReferenceSet:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        return parse_refset(path.stem, fh)


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    median: float
    min: float
    max: float
    std: float
    p25: float
    p75: float
    n_found: int
    n_missing: int = 0


def summary_stats(values: Sequence[float], n_missing: int = 0) -> SummaryStats:
    """Boxplot-style summary: quartiles by linear interpolation, population std."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise InvalidInput("summary_stats needs at least one value")
    p25, median, p75 = np.percentile(arr, [25, 50, 75])
    return SummaryStats(
        mean=float(arr.mean()),
        median=float(median),
        min=float(arr.min()),
        max=float(arr.max()),
        std=float(arr.std()),
        p25=float(p25),
        p75=float(p75),
        n_found=int(arr.size),
        n_missing=n_missing,
    )


def missing_members(refset: ReferenceSet, ranking: Ranking) -> list[AuthorKey]:
    ranked = set(ranking.authors)
    return [m for m in refset.members if m not in ranked]


def member_ranks(ranking: Ranking, refset: ReferenceSet) -> list[tuple[AuthorKey, float]]:
    """Absolute ranks of the members present in ``ranking``, in refset order."""
    pos = {a: i for i, a in enumerate(ranking.authors)}
    return [(m, ranking.ranks[pos[m]].item()) for m in refset.members if m in pos]


def relative_ranks(ranking: Ranking, refset: ReferenceSet) -> list[tuple[AuthorKey, float]]:
    """Member ranks divided by the number of ranked authors; absent members are omitted."""
    if len(ranking) == 0:
        raise InvalidInput("ranking is empty")
    n = len(ranking)
    return [(m, r / n) for m, r in member_ranks(ranking, refset)]


def correlation_matrix(rankings: Sequence[Ranking]) -> np.ndarray:
    """Pairwise Spearman's rho between rankings over one author set.

    The diagonal is exactly 1. Pairs where a ranking has no rank variance
    (every author tied) are undefined and reported as NaN.
    """
    k = len(rankings)
    if k:
        first = set(rankings[0].authors)
        for r in rankings[1:]:
            if len(r.authors) != len(rankings[0].authors) or set(r.authors) != first:
                raise InvalidInput("rankings cover different author sets")
    mat = np.eye(k)
    for i in range(k):
        for j in range(i + 1, k):
            try:
                rho = spearman_rho(rankings[i], rankings[j])
            except UndefinedCorrelation:
                rho = float("nan")
            mat[i, j] = mat[j, i] = rho
    return mat


@dataclass
class MethodEvaluation:
    method: MethodId
    members: list[tuple[AuthorKey, float, float]]
    absolute: SummaryStats | None
    relative: SummaryStats | None
    missing: list[AuthorKey]


@dataclass
class EvalReport:
    """Per (method, reference set) statistics plus the method correlation matrix."""

    methods: list[MethodId]
    by_refset: dict[str, list[MethodEvaluation]] = field(default_factory=dict)
    correlations: np.ndarray | None = None


def evaluate_method(ranking: Ranking, refset: ReferenceSet) -> MethodEvaluation:
    n = len(ranking)
    found = member_ranks(ranking, refset)
    missing = missing_members(refset, ranking)
    rows = [(m, r, r / n) for m, r in found]
    absolute = summary_stats([r for _, r, _ in rows], len(missing)) if rows else None
    relative = summary_stats([x for _, _, x in rows], len(missing)) if rows else None
    return MethodEvaluation(ranking.method, rows, absolute, relative, missing)


def evaluate(rankings: Sequence[Ranking], refsets: Iterable[ReferenceSet],
             with_correlations: bool = True) -> EvalReport:
    report = EvalReport([r.method for r in rankings])
    for refset in refsets:
        report.by_refset[refset.label] = [evaluate_method(r, refset) for r in rankings]
    if with_correlations:
        report.correlations = correlation_matrix(rankings)
    return report

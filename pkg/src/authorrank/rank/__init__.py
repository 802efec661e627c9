"""The twelve author ranking methods."""

from __future__ import annotations

from typing import Iterable

from ..graph import AuthorGraph, CollabStats
from ..methods import ALL_METHODS, MethodId
from .first_order import rank_citations, rank_indegree
from .hits import hits
from .pagerank import (
    bibliographic_pagerank,
    omega,
    omega_proportional,
    pagerank,
    sigma_omega,
    standard_pagerank,
)
from .ranking import scores_to_ranks, spearman, spearman_rho
from .types import RankOptions, Ranking, ScoreVector

__all__ = [
    "RankOptions", "Ranking", "ScoreVector", "rank_citations", "rank_indegree", "hits",
    "pagerank", "standard_pagerank", "bibliographic_pagerank", "omega", "omega_proportional",
    "sigma_omega", "scores_to_ranks", "spearman", "spearman_rho", "score_method", "score_all",
    "run_all",
]


def score_method(method: MethodId, graph: AuthorGraph, collab: CollabStats,
                 opts: RankOptions) -> ScoreVector:
    method = MethodId(method)
    if method is MethodId.CITATIONS:
        return rank_citations(graph)
    if method is MethodId.IN_DEGREE:
        return rank_indegree(graph)
    if method is MethodId.HITS:
        return hits(graph, opts)[0]
    return pagerank(graph, collab, method, opts)


def score_all(graph: AuthorGraph, collab: CollabStats, opts: RankOptions | None = None,
              methods: Iterable[MethodId] = ALL_METHODS) -> list[ScoreVector]:
    opts = opts or RankOptions()
    return [score_method(m, graph, collab, opts) for m in methods]


def run_all(graph: AuthorGraph, collab: CollabStats, opts: RankOptions | None = None,
            methods: Iterable[MethodId] = ALL_METHODS) -> list[Ranking]:
    """Rank ``graph``'s authors by every method (HITS contributes its authorities)."""
    opts = opts or RankOptions()
    return [scores_to_ranks(sv, opts.ties) for sv in score_all(graph, collab, opts, methods)]

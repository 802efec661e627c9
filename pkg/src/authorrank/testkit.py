"""Reference solvers and a reproducible synthetic corpus generator.

The dense solvers do not share code with the power-iteration engines: they
assemble the full transition (or co-citation) matrix from the graph and edge
coefficients and hand it to LAPACK. They are meant for graphs of a few
hundred authors at most.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import AuthorKey, PaperSet, make_paper
from .errors import InvalidInput, OracleRefused
from .graph import AuthorGraph, CollabStats, edge_coefficients
from .methods import MethodId
from .rank.types import ScoreVector

DEFAULT_CAP = 200

RNG_ALGORITHM = "splitmix64"
_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood 2014).

    Chosen over :mod:`random` / numpy generators because its output sequence
    is fixed by a dozen lines of integer arithmetic and can be reproduced
    bit-for-bit anywhere.
    """

    algorithm = RNG_ALGORITHM

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection (no modulo bias)."""
        if n <= 0:
            raise InvalidInput("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def sample(self, n: int, k: int) -> list[int]:
        """``k`` distinct values from ``range(n)`` via a partial Fisher-Yates shuffle."""
        k = min(k, n)
        pool = list(range(n))
        for i in range(k):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


@dataclass(frozen=True)
class SynthParams:
    n_papers: int = 40
    max_authors_per_paper: int = 3
    max_refs_per_paper: int = 3
    author_pool: int = 50
    seed: int = 0

    def __post_init__(self):
        if self.n_papers < 0 or self.max_refs_per_paper < 0:
            raise InvalidInput("counts must be non-negative")
        if self.max_authors_per_paper < 1 or self.author_pool < 1:
            raise InvalidInput("max_authors_per_paper and author_pool must be >= 1")


_LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def synth_author(i: int) -> AuthorKey:
    return AuthorKey(f"AUTHOR{i:05d}", _LETTERS[i % 26])


def gen_synthetic_corpus(params: SynthParams) -> PaperSet:
    """Deterministic random corpus.

    Paper ``i`` gets 1..max authors drawn without replacement from the pool
    and 0..max refs drawn without replacement from papers ``0..i-1``.
    """
    rng = SplitMix64(params.seed)
    papers = PaperSet()
    for i in range(params.n_papers):
        n_auth = 1 + rng.below(params.max_authors_per_paper)
        authors = [synth_author(a) for a in rng.sample(params.author_pool, n_auth)]
        n_refs = rng.below(params.max_refs_per_paper + 1)
        refs = [f"P{j:06d}" for j in sorted(rng.sample(i, n_refs))] if i else []
        papers.add(make_paper(f"P{i:06d}", authors, 1990 + i % 30, refs))
    return papers


def _check_cap(graph: AuthorGraph, cap: int) -> None:
    if len(graph) > cap:
        raise OracleRefused(f"{len(graph)} authors exceeds the dense solver cap of {cap}")


def transition_matrix(graph: AuthorGraph, collab: CollabStats | None, variant: MethodId,
                      dangling_policy: str = "literal") -> np.ndarray:
    """Row-stochastic (except literal dangling rows) matrix ``M[v, u] = omega(v, u)``."""
    variant = MethodId(variant)
    n = len(graph)
    idx = graph.index
    m = np.zeros((n, n))
    for (v, u), w in graph.edges.items():
        if variant is MethodId.PR:
            m[idx[v], idx[u]] = 1.0
        else:
            w, b, c = edge_coefficients(variant, v, u, graph, collab)
            m[idx[v], idx[u]] = w * (b + 1) / (c + 1)
    sums = m.sum(axis=1)
    live = sums > 0
    m[live] /= sums[live, None]
    if dangling_policy == "redistribute":
        m[~live] = 1.0 / n
    elif dangling_policy != "literal":
        raise InvalidInput(f"unknown dangling policy {dangling_policy!r}")
    return m


def dense_pagerank_solve(graph: AuthorGraph, collab: CollabStats | None, variant: MethodId,
                         d: float = 0.9, dangling_policy: str = "literal",
                         cap: int = DEFAULT_CAP) -> ScoreVector:
    """Exact fixed point of the PageRank recursion from ``(I - d M^T) p = (1-d)/n``."""
    _check_cap(graph, cap)
    n = len(graph)
    if n == 0:
        return ScoreVector(MethodId(variant), (), np.zeros(0))
    m = transition_matrix(graph, collab, variant, dangling_policy)
    a = np.eye(n) - d * m.T
    p = np.linalg.solve(a, np.full(n, (1.0 - d) / n))
    return ScoreVector(MethodId(variant), tuple(graph.vertices), p)


def dense_hits_solve(graph: AuthorGraph, cap: int = DEFAULT_CAP, rtol: float = 1e-9) -> ScoreVector:
    """HITS authorities from the eigen-decomposition of the co-citation matrix ``A^T A``.

    When the top eigenvalue is repeated, the answer is the projection of the
    first authority update ``A^T 1`` onto the top eigenspace, which is the
    limit power iteration from all-ones hubs converges to.
    """
    _check_cap(graph, cap)
    n = len(graph)
    authors = tuple(graph.vertices)
    adj = np.zeros((n, n))
    for v, u in graph.edges:
        adj[graph.index[v], graph.index[u]] = 1.0
    if n == 0 or not adj.any():
        return ScoreVector(MethodId.HITS, authors, np.zeros(n))
    vals, vecs = np.linalg.eigh(adj.T @ adj)
    top = vecs[:, vals >= vals[-1] * (1.0 - rtol)]
    start = adj.T @ np.ones(n)
    a = top @ (top.T @ start)
    norm = np.linalg.norm(a)
    if norm == 0.0:
        a = np.abs(vecs[:, -1])
    else:
        a = a / norm
    a[np.abs(a) < 1e-15] = 0.0
    return ScoreVector(MethodId.HITS, authors, np.abs(a))

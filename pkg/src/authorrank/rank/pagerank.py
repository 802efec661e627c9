"""Standard and bibliographic PageRank over the author citation graph.

For a citing author ``v`` the bibliographic transition to a cited author
``u`` is

    sigma(v, k) = w(v, k) / ((c(v, k) + 1) / (b(v, k) + 1) * W(v))
    omega(v, u) = sigma(v, u) / sum_k sigma(v, k)

where ``W(v)`` is the total multiplicity of ``v``'s out-edges, ``w`` the
citation multiplicity, ``c`` the collaboration count and ``b`` the
variant-specific mitigation term (see :func:`~authorrank.graph.edge_coefficients`).
``W(v)`` cancels in the ratio, so ``omega`` is proportional to
``w * (b + 1) / (c + 1)``.
"""

from __future__ import annotations

from functools import partial
from typing import Callable

import numpy as np

from ..corpus import AuthorKey
from ..errors import InvalidInput
from ..graph import AuthorGraph, CollabStats, edge_coefficients
from ..methods import MethodId
from .ranking import ranks_agree
from .types import RankOptions, ScoreVector

Coefficients = Callable[[AuthorKey, AuthorKey], tuple[int, int, int]]


def _require_out_edges(v: AuthorKey, graph: AuthorGraph) -> dict:
    out = graph.out_edges(v)
    if not out:
        raise InvalidInput(f"{v} has no out-edges")
    return out


def sigma_omega(v: AuthorKey, graph: AuthorGraph, coefficients: Coefficients) -> dict[AuthorKey, float]:
    """Out-distribution of ``v`` evaluated through the full sigma ratio."""
    out = _require_out_edges(v, graph)
    triples = {k: coefficients(v, k) for k in out}
    total_w = sum(w for w, _, _ in triples.values())
    sigma = {k: w / (((c + 1) / (b + 1)) * total_w) for k, (w, b, c) in triples.items()}
    norm = sum(sigma.values())
    return {k: s / norm for k, s in sigma.items()}


def omega(variant: MethodId, v: AuthorKey, graph: AuthorGraph, collab: CollabStats) -> dict[AuthorKey, float]:
    """Transition probabilities from citing author ``v`` under ``variant``."""
    variant = MethodId(variant)
    if not variant.is_pagerank:
        raise InvalidInput(f"{variant.value} is not a PageRank variant")
    return sigma_omega(v, graph, partial(edge_coefficients, variant, graph=graph, collab=collab))


def omega_proportional(variant: MethodId, v: AuthorKey, graph: AuthorGraph,
                       collab: CollabStats) -> dict[AuthorKey, float]:
    """Same distribution as :func:`omega`, from the cancelled form ``w (b+1) / (c+1)``."""
    out = _require_out_edges(v, graph)
    eff = {}
    for k in out:
        w, b, c = edge_coefficients(variant, v, k, graph, collab)
        eff[k] = w * (b + 1) / (c + 1)
    norm = sum(eff.values())
    return {k: x / norm for k, x in eff.items()}


def _iterate(graph: AuthorGraph, transitions, method: MethodId, opts: RankOptions) -> ScoreVector:
    """Power iteration given per-edge transition probabilities.

    ``transitions`` yields ``(v, u, p)`` for every edge; contributions to each
    target are summed in source-vertex order so results are bit-reproducible.
    """
    n = len(graph)
    authors = tuple(graph.vertices)
    if n == 0:
        return ScoreVector(method, authors, np.zeros(0), 0, True)
    idx = graph.index
    src, dst, prob = [], [], []
    for v, u, p in transitions:
        src.append(idx[v])
        dst.append(idx[u])
        prob.append(p)
    src = np.array(src, dtype=np.int64)
    dst = np.array(dst, dtype=np.int64)
    prob = np.array(prob, dtype=float)
    order = np.lexsort((src, dst))
    src, dst, prob = src[order], dst[order], prob[order]
    dangling = np.ones(n, dtype=bool)
    dangling[src] = False
    redistribute = opts.dangling == "redistribute" and dangling.any()

    d = opts.damping
    base = (1.0 - d) / n
    pr = np.full(n, 1.0 / n)
    it, converged = 0, False
    while it < opts.max_iters:
        it += 1
        acc = np.bincount(dst, weights=pr[src] * prob, minlength=n)
        if redistribute:
            acc += pr[dangling].sum() / n
        new = base + d * acc
        if opts.convergence == "l1":
            converged = float(np.abs(new - pr).sum()) < opts.epsilon
        elif it >= 2:
            converged = ranks_agree(pr, new, opts.epsilon)
        pr = new
        if converged:
            break
    return ScoreVector(method, authors, pr, it, converged)


def standard_pagerank(graph: AuthorGraph, opts: RankOptions | None = None) -> ScoreVector:
    """PageRank with each citing author splitting its score evenly over distinct cited authors."""
    def transitions():
        for v in graph.vertices:
            out = graph.out_edges(v)
            if out:
                p = 1.0 / len(out)
                for u in out:
                    yield v, u, p
    return _iterate(graph, transitions(), MethodId.PR, opts or RankOptions())


def bibliographic_pagerank(graph: AuthorGraph, coefficients: Coefficients,
                           opts: RankOptions | None = None,
                           method: MethodId = MethodId.PR) -> ScoreVector:
    """PageRank whose transitions come from arbitrary ``(w, b, c)`` edge coefficients."""
    def transitions():
        for v in graph.vertices:
            if graph.out_edges(v):
                for u, p in sigma_omega(v, graph, coefficients).items():
                    yield v, u, p
    return _iterate(graph, transitions(), method, opts or RankOptions())


def pagerank(graph: AuthorGraph, collab: CollabStats, variant: MethodId = MethodId.PR,
             opts: RankOptions | None = None) -> ScoreVector:
    """One of the eight PageRank-family rankings.

    ``PR`` uses the plain 1/out-degree transition; the others use the
    bibliographic transition with coefficients chosen by ``variant``.
    """
    variant = MethodId(variant)
    if not variant.is_pagerank:
        raise InvalidInput(f"{variant.value} is not a PageRank variant")
    if variant is MethodId.PR:
        return standard_pagerank(graph, opts)
    coeffs = partial(edge_coefficients, variant, graph=graph, collab=collab)
    return bibliographic_pagerank(graph, coeffs, opts, method=variant)

from __future__ import annotations

import numpy as np

from ..graph import AuthorGraph
from ..methods import MethodId
from .ranking import ranks_agree
from .types import RankOptions, ScoreVector


def _edge_arrays(graph: AuthorGraph):
    idx = graph.index
    pairs = np.array([(idx[u], idx[v]) for u, v in graph.edges], dtype=np.int64).reshape(-1, 2)
    return pairs[:, 0], pairs[:, 1]


def _normalize(x: np.ndarray) -> np.ndarray | None:
    norm = np.sqrt(np.dot(x, x))
    if norm == 0.0:
        return None
    return x / norm


def hits(graph: AuthorGraph, opts: RankOptions | None = None) -> tuple[ScoreVector, ScoreVector]:
    """Kleinberg's HITS on the unweighted author graph.

    Starting from all-ones hubs, each iteration sets every authority to the
    sum of its citing hubs and every hub to the sum of the authorities it
    cites, scaling both to unit Euclidean length. Only the authority vector is
    used for ranking. If an update produces a zero vector (no edges) the
    iteration stops and zeros are reported.

    Returns:
        (authority, hub) score vectors.
    """
    opts = opts or RankOptions()
    n = len(graph)
    authors = tuple(graph.vertices)
    src, dst = _edge_arrays(graph)
    # serial accumulation order per target: authorities by cited, hubs by citing
    a_order = np.lexsort((src, dst))
    h_order = np.lexsort((dst, src))
    a_src, a_dst = src[a_order], dst[a_order]
    h_src, h_dst = src[h_order], dst[h_order]

    hub = np.ones(n)
    auth = np.zeros(n)
    it, converged = 0, False
    while it < opts.max_iters:
        it += 1
        new_auth = _normalize(np.bincount(a_dst, weights=hub[a_src], minlength=n))
        if new_auth is None:
            auth, hub = np.zeros(n), np.zeros(n)
            converged = True
            break
        hub = _normalize(np.bincount(h_src, weights=new_auth[h_dst], minlength=n))
        if it >= 2:
            if opts.convergence == "l1":
                converged = float(np.abs(new_auth - auth).sum()) < opts.epsilon
            else:
                converged = ranks_agree(auth, new_auth, opts.epsilon)
        auth = new_auth
        if converged:
            break
    return (ScoreVector(MethodId.HITS, authors, auth, it, converged),
            ScoreVector(MethodId.HITS, authors, hub, it, converged))

"""Score-to-rank conversion and Spearman's rank correlation."""

from __future__ import annotations

import math

import numpy as np
from scipy.stats import rankdata

from ..errors import InvalidInput, UndefinedCorrelation
from .types import Ranking, ScoreVector, TiePolicy


def scores_to_ranks(scores: ScoreVector, tie_policy: TiePolicy = "competition") -> Ranking:
    """Rank authors by descending score.

    ``competition`` gives tied authors 1 + the number of strictly better
    scores; ``average`` gives them the mean of the positions they occupy.
    """
    values = -np.asarray(scores.scores, dtype=float)
    if tie_policy == "competition":
        ranks = rankdata(values, method="min").astype(np.int64)
    elif tie_policy == "average":
        ranks = rankdata(values, method="average")
    else:
        raise InvalidInput(f"unknown tie policy {tie_policy!r}")
    return Ranking(scores.method, scores.authors, ranks)


def spearman(x, y) -> float:
    """Spearman's rho of two equal-length value sequences.

    Pearson correlation of average (fractional) ranks, which handles ties and
    reduces to ``1 - 6 sum(d^2) / (n (n^2 - 1))`` when there are none.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise InvalidInput("spearman needs two 1-D sequences of equal length")
    if len(x) < 2:
        raise InvalidInput("spearman needs at least two items")
    dx = rankdata(x)
    dy = rankdata(y)
    dx -= dx.mean()
    dy -= dy.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    if sxx == 0.0 or syy == 0.0:
        raise UndefinedCorrelation("zero rank variance")
    rho = float(np.dot(dx, dy)) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, rho))


def _aligned(x, y):
    if x.authors == y.authors:
        return x, y
    if len(x.authors) != len(y.authors) or set(x.authors) != set(y.authors):
        raise InvalidInput("rankings cover different author sets")
    pos = {a: i for i, a in enumerate(y.authors)}
    order = np.array([pos[a] for a in x.authors], dtype=np.int64)
    return x, type(y)(y.method, x.authors, _values(y)[order])


def _values(r):
    return r.ranks if isinstance(r, Ranking) else r.scores


def spearman_rho(x: Ranking | ScoreVector, y: Ranking | ScoreVector) -> float:
    """Spearman's rho between two rankings (or two score vectors) over the same authors."""
    if isinstance(x, Ranking) != isinstance(y, Ranking):
        raise InvalidInput("compare a Ranking with a Ranking or a ScoreVector with a ScoreVector")
    x, y = _aligned(x, y)
    return spearman(_values(x), _values(y))


def ranks_agree(prev: np.ndarray, cur: np.ndarray, epsilon: float) -> bool:
    """Spearman convergence test between successive score vectors.

    Two constant vectors rank identically and count as converged.
    """
    if len(cur) < 2:
        return True
    try:
        return spearman(prev, cur) >= 1.0 - epsilon
    except UndefinedCorrelation:
        return bool(np.all(prev == prev[0]) and np.all(cur == cur[0]))

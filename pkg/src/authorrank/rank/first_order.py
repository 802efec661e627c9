import numpy as np

from ..graph import AuthorGraph
from ..methods import MethodId
from .types import ScoreVector


def rank_citations(graph: AuthorGraph) -> ScoreVector:
    """Citation count: sum of in-edge multiplicities."""
    scores = np.array([sum(graph.in_edges(a).values()) for a in graph.vertices], dtype=np.int64)
    return ScoreVector(MethodId.CITATIONS, tuple(graph.vertices), scores)


def rank_indegree(graph: AuthorGraph) -> ScoreVector:
    """Number of distinct citing authors."""
    scores = np.array([graph.in_degree(a) for a in graph.vertices], dtype=np.int64)
    return ScoreVector(MethodId.IN_DEGREE, tuple(graph.vertices), scores)

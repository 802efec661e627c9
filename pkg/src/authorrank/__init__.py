"""Author citation graphs and citation / HITS / PageRank-family author rankings."""

from .corpus import AuthorKey, PaperRecord, PaperSet, author_key, parse_corpus, read_corpus
from .errors import CorpusError, InvalidInput, OracleRefused, UndefinedCorrelation
from .graph import AuthorGraph, CollabStats, build_author_graph, build_collab_stats, edge_coefficients
from .methods import ALL_METHODS, PAGERANK_VARIANTS, MethodId
from .rank import RankOptions, Ranking, ScoreVector, run_all, score_all

__version__ = "0.1.0"

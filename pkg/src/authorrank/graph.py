"""Author citation graph and collaboration statistics built from a PaperSet."""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import IO, Iterator

from .corpus import AuthorKey, PaperSet
from .errors import InvalidInput
from .methods import MethodId


@dataclass
class AuthorGraph:
    """Directed author citation graph.

    ``edges[(u, v)]`` is the number of times an author ``u`` cited an author
    ``v`` (the multiplicity ``w``). Self-loops are never stored.
    """

    vertices: list[AuthorKey] = field(default_factory=list)
    edges: dict[tuple[AuthorKey, AuthorKey], int] = field(default_factory=dict)
    dropped_refs: int = 0

    def __post_init__(self):
        self.index = {a: i for i, a in enumerate(self.vertices)}
        self._out: dict[AuthorKey, dict[AuthorKey, int]] = {a: {} for a in self.vertices}
        self._in: dict[AuthorKey, dict[AuthorKey, int]] = {a: {} for a in self.vertices}
        for (u, v), w in self.edges.items():
            self._link(u, v, w)

    def _link(self, u, v, w):
        if u == v:
            raise InvalidInput(f"self-loop on {u}")
        if w < 1:
            raise InvalidInput(f"edge {u} -> {v} has multiplicity {w}")
        self._out[u][v] = w
        self._in[v][u] = w

    def add_vertex(self, a: AuthorKey) -> None:
        if a not in self.index:
            self.index[a] = len(self.vertices)
            self.vertices.append(a)
            self._out[a] = {}
            self._in[a] = {}

    def add_citation(self, u: AuthorKey, v: AuthorKey, count: int = 1) -> None:
        """Add ``count`` to the multiplicity of ``u -> v``; self-citations are ignored."""
        if u == v:
            return
        self.add_vertex(u)
        self.add_vertex(v)
        w = self.edges.get((u, v), 0) + count
        self.edges[(u, v)] = w
        self._link(u, v, w)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> int:
        return sum(self.edges.values())

    def weight(self, u: AuthorKey, v: AuthorKey) -> int:
        return self.edges.get((u, v), 0)

    def out_edges(self, u: AuthorKey) -> dict[AuthorKey, int]:
        return self._out[u]

    def in_edges(self, u: AuthorKey) -> dict[AuthorKey, int]:
        return self._in[u]

    def out_degree(self, u: AuthorKey) -> int:
        return len(self._out[u])

    def in_degree(self, u: AuthorKey) -> int:
        return len(self._in[u])

    def out_weight(self, u: AuthorKey) -> int:
        return sum(self._out[u].values())

    def dangling(self) -> list[AuthorKey]:
        return [a for a in self.vertices if not self._out[a]]


def build_author_graph(papers: PaperSet) -> AuthorGraph:
    """Link every author of a citing paper to every author of each cited paper.

    Every author of every paper becomes a vertex, in first-seen order.
    References to ids missing from ``papers`` are counted in ``dropped_refs``.
    """
    g = AuthorGraph()
    for p in papers:
        for a in p.authors:
            g.add_vertex(a)
    for p in papers:
        for ref in p.refs:
            if ref not in papers:
                g.dropped_refs += 1
                continue
            cited = papers[ref].authors
            for a in p.authors:
                for b in cited:
                    g.add_citation(a, b)
    return g


def _pair(u: AuthorKey, v: AuthorKey) -> tuple[AuthorKey, AuthorKey]:
    return (u, v) if u <= v else (v, u)


@dataclass
class PairStats:
    common_pubs: int = 0
    joint_coauthor_slots: int = 0
    joint_dist_coauthors: int = 0


@dataclass
class CollabStats:
    """Per-author and per-pair collaboration counts.

    Per author: ``pubs``, ``all_coauthors`` (other authors summed over papers),
    ``all_dist_coauthors`` (distinct others) and ``all_collaborations``
    (papers with at least two authors). Per unordered pair: number of common
    papers, total author slots on those papers, and the distinct authors on
    them. Pair counts include the pair members themselves.
    """

    pubs: Counter = field(default_factory=Counter)
    all_coauthors: Counter = field(default_factory=Counter)
    all_dist_coauthors: Counter = field(default_factory=Counter)
    all_collaborations: Counter = field(default_factory=Counter)
    pairs: dict[tuple[AuthorKey, AuthorKey], PairStats] = field(default_factory=dict)

    def pair(self, u: AuthorKey, v: AuthorKey) -> PairStats:
        return self.pairs.get(_pair(u, v)) or PairStats()

    def common_pubs(self, u, v) -> int:
        return self.pair(u, v).common_pubs

    def joint_coauthor_slots(self, u, v) -> int:
        return self.pair(u, v).joint_coauthor_slots

    def joint_dist_coauthors(self, u, v) -> int:
        return self.pair(u, v).joint_dist_coauthors

    def authors(self) -> Iterator[AuthorKey]:
        return iter(self.pubs)


def build_collab_stats(papers: PaperSet) -> CollabStats:
    stats = CollabStats()
    dist: dict[AuthorKey, set] = {}
    joint: dict[tuple, set] = {}
    for p in papers:
        authors = p.authors
        n = len(authors)
        for a in authors:
            stats.pubs[a] += 1
            stats.all_coauthors[a] += n - 1
            stats.all_collaborations[a] += n >= 2
            dist.setdefault(a, set()).update(b for b in authors if b != a)
        for u, v in combinations(authors, 2):
            key = _pair(u, v)
            ps = stats.pairs.setdefault(key, PairStats())
            ps.common_pubs += 1
            ps.joint_coauthor_slots += n
            joint.setdefault(key, set()).update(authors)
    for a, others in dist.items():
        stats.all_dist_coauthors[a] = len(others)
    for key, members in joint.items():
        stats.pairs[key].joint_dist_coauthors = len(members)
    return stats


def edge_coefficients(variant: MethodId, u: AuthorKey, v: AuthorKey, graph: AuthorGraph,
                      collab: CollabStats) -> tuple[int, int, int]:
    """The ``(w, b, c)`` triple weighting the citation edge ``u -> v`` for ``variant``."""
    w = graph.weight(u, v)
    if w == 0:
        raise InvalidInput(f"no edge {u} -> {v}")
    variant = MethodId(variant)
    if variant is MethodId.PR:
        return 1, 0, 0
    if variant is MethodId.PR_WEIGHTED:
        return w, 0, 0
    c = collab.common_pubs(u, v)
    if variant is MethodId.PR_COLLABORATION:
        return w, 0, c
    if variant is MethodId.PR_PUBLICATIONS:
        b = collab.pubs[u] + collab.pubs[v]
    elif variant is MethodId.PR_ALL_COAUTHORS:
        b = collab.all_coauthors[u] + collab.all_coauthors[v]
    elif variant is MethodId.PR_ALL_DIST_COAUTHORS:
        b = collab.all_dist_coauthors[u] + collab.all_dist_coauthors[v]
    elif variant is MethodId.PR_ALL_COLLABORATIONS:
        b = collab.all_collaborations[u] + collab.all_collaborations[v]
    elif variant is MethodId.PR_COAUTHORS:
        b = collab.joint_coauthor_slots(u, v)
    elif variant is MethodId.PR_DIST_COAUTHORS:
        b = collab.joint_dist_coauthors(u, v)
    else:
        raise InvalidInput(f"{variant.value} is not a PageRank variant")
    return w, b, c


def write_edges_csv(graph: AuthorGraph, fh: IO[str]) -> None:
    out = csv.writer(fh, lineterminator="\n")
    out.writerow(["citing", "cited", "w"])
    for (u, v), w in graph.edges.items():
        out.writerow([str(u), str(v), w])


def write_collab_csv(collab: CollabStats, authors_fh: IO[str], pairs_fh: IO[str]) -> None:
    out = csv.writer(authors_fh, lineterminator="\n")
    out.writerow(["author", "pubs", "all_coauthors", "all_dist_coauthors", "all_collaborations"])
    for a in collab.authors():
        out.writerow([str(a), collab.pubs[a], collab.all_coauthors[a],
                      collab.all_dist_coauthors[a], collab.all_collaborations[a]])
    out = csv.writer(pairs_fh, lineterminator="\n")
    out.writerow(["a", "b", "common_pubs", "joint_slots", "joint_distinct"])
    for (a, b), ps in collab.pairs.items():
        out.writerow([str(a), str(b), ps.common_pubs, ps.joint_coauthor_slots,
                      ps.joint_dist_coauthors])

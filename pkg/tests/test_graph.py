import itertools
import random
from collections import Counter

import pytest

from authorrank.errors import InvalidInput
from authorrank.graph import (
    AuthorGraph,
    build_author_graph,
    build_collab_stats,
    edge_coefficients,
    write_collab_csv,
    write_edges_csv,
)
from authorrank.methods import MethodId, PAGERANK_VARIANTS
from authorrank.testkit import SynthParams, gen_synthetic_corpus

from conftest import K, papers


def test_abc_example(abc_papers):
    g = build_author_graph(abc_papers)
    assert g.vertices == [K("A"), K("B"), K("C")]
    assert g.edges == {(K("A"), K("B")): 1, (K("A"), K("C")): 1, (K("B"), K("C")): 1}
    assert (K("B"), K("B")) not in g.edges
    assert g.dropped_refs == 0


def test_multiplicity_accumulates():
    ps = papers(("p1", "A", ["q"]), ("p2", "A", ["q"]), ("q", "C", []))
    g = build_author_graph(ps)
    assert g.edges == {(K("A"), K("C")): 2}
    assert g.out_degree(K("A")) == 1 and g.out_weight(K("A")) == 2


def test_no_refs_gives_vertices_only():
    g = build_author_graph(papers(("p1", "A B", []), ("p2", "C", [])))
    assert len(g) == 3 and g.n_edges == 0


def test_unresolvable_refs_are_counted():
    g = build_author_graph(papers(("p1", "A", ["missing", "p2", "gone"]), ("p2", "B", [])))
    assert g.dropped_refs == 2
    assert g.edges == {(K("A"), K("B")): 1}


def test_authorless_paper_is_kept_but_adds_nothing():
    g = build_author_graph(papers(("p1", "", ["p2"]), ("p2", "B", ["p1"])))
    assert g.vertices == [K("B")] and g.n_edges == 0


def test_graph_rejects_self_loop_and_bad_weight():
    with pytest.raises(InvalidInput):
        AuthorGraph([K("A")], {(K("A"), K("A")): 1})
    with pytest.raises(InvalidInput):
        AuthorGraph([K("A"), K("B")], {(K("A"), K("B")): 0})


def _random_corpus(rng, n_papers=10, pool="ABCDEFG"):
    specs = []
    for i in range(n_papers):
        authors = " ".join(rng.sample(pool, rng.randint(0, 3)))
        refs = [f"p{j}" for j in rng.sample(range(n_papers + 2), rng.randint(0, 4)) if j != i]
        specs.append((f"p{i}", authors, refs))
    return specs


@pytest.mark.parametrize("seed", range(30))
def test_weights_match_brute_force_recount(seed):
    rng = random.Random(seed)
    specs = _random_corpus(rng)
    g = build_author_graph(papers(*specs))
    by_id = {pid: set(a.split()) for pid, a, _ in specs}
    expected = Counter()
    for pid, authors, refs in specs:
        for ref in refs:
            if ref in by_id:
                for a in set(authors.split()):
                    for b in by_id[ref]:
                        if a != b:
                            expected[(K(a), K(b))] += 1
    assert dict(g.edges) == dict(expected)
    assert g.total_weight == sum(expected.values())
    for v in g.vertices:
        assert (v, v) not in g.edges
        assert g.in_degree(v) <= sum(g.in_edges(v).values())


@pytest.mark.parametrize("seed", range(10))
def test_permuting_papers_and_relabelling_ids(seed):
    rng = random.Random(seed)
    specs = _random_corpus(rng)
    g = build_author_graph(papers(*specs))
    shuffled = specs[:]
    rng.shuffle(shuffled)
    rename = {pid: f"x{pid}" for pid, _, _ in specs}
    relabelled = [(rename[p], a, [rename.get(r, "nowhere" + r) for r in refs]) for p, a, refs in shuffled]
    h = build_author_graph(papers(*relabelled))
    assert dict(g.edges) == dict(h.edges)
    assert set(g.vertices) == set(h.vertices)


def test_collab_stats_example():
    c = build_collab_stats(papers(("P1", "A B C", []), ("P2", "A B", [])))
    A, B, C = K("A"), K("B"), K("C")
    assert c.common_pubs(A, B) == c.common_pubs(B, A) == 2
    assert c.joint_coauthor_slots(A, B) == 5
    assert c.joint_dist_coauthors(A, B) == 3
    assert c.all_coauthors[A] == 3
    assert c.all_dist_coauthors[A] == 2
    assert c.pubs[A] == 2
    assert c.all_collaborations[A] == 2
    assert c.pubs[C] == 1 and c.all_coauthors[C] == 2 and c.common_pubs(A, C) == 1


def test_single_author_corpus():
    c = build_collab_stats(papers(("p1", "A", []), ("p2", "B", []), ("p3", "A", [])))
    assert not c.pairs
    assert all(c.all_collaborations[a] == 0 for a in (K("A"), K("B")))
    assert c.common_pubs(K("A"), K("B")) == 0
    assert c.pubs[K("A")] == 2


@pytest.mark.parametrize("seed", range(10))
def test_collab_invariants(seed):
    ps = gen_synthetic_corpus(SynthParams(seed=seed, max_authors_per_paper=5))
    c = build_collab_stats(ps)
    for a in c.authors():
        assert c.all_dist_coauthors[a] <= c.all_coauthors[a]
        assert c.all_collaborations[a] <= c.pubs[a]
    for (u, v), ps_ in c.pairs.items():
        assert c.pair(v, u) is ps_
        assert ps_.joint_dist_coauthors >= 2
        assert ps_.joint_dist_coauthors <= ps_.joint_coauthor_slots
    # brute force pair counts
    for u, v in itertools.combinations(sorted(c.authors()), 2):
        common = [p for p in ps if u in p.authors and v in p.authors]
        assert c.common_pubs(u, v) == len(common)
        assert c.joint_coauthor_slots(u, v) == sum(len(p.authors) for p in common)
        assert c.joint_dist_coauthors(u, v) == len({a for p in common for a in p.authors})


def _coef_fixture():
    # u has 3 papers, v has 4; one joint paper with a third author
    ps = papers(("j", "U V X", []), ("u1", "U", ["v1"]), ("u2", "U Y", ["v1"]),
                ("v1", "V", []), ("v2", "V", []), ("v3", "V Z", []))
    return build_author_graph(ps), build_collab_stats(ps)


def test_edge_coefficients_per_variant():
    g, c = _coef_fixture()
    U, V = K("U"), K("V")
    assert g.weight(U, V) == 2
    expected = {
        MethodId.PR: (1, 0, 0),
        MethodId.PR_WEIGHTED: (2, 0, 0),
        MethodId.PR_COLLABORATION: (2, 0, 1),
        MethodId.PR_PUBLICATIONS: (2, 3 + 4, 1),
        MethodId.PR_ALL_COAUTHORS: (2, (2 + 0 + 1) + (2 + 0 + 0 + 1), 1),
        MethodId.PR_ALL_DIST_COAUTHORS: (2, 3 + 3, 1),
        MethodId.PR_ALL_COLLABORATIONS: (2, 2 + 2, 1),
        MethodId.PR_COAUTHORS: (2, 3, 1),
        MethodId.PR_DIST_COAUTHORS: (2, 3, 1),
    }
    assert set(expected) == set(PAGERANK_VARIANTS)
    for variant, triple in expected.items():
        assert edge_coefficients(variant, U, V, g, c) == triple


def test_publications_example():
    ps = papers(("u1", "U", ["v1"]), ("u2", "U", []), ("u3", "U", []),
                ("v1", "V", []), ("v2", "V", []), ("v3", "V", []), ("v4", "V", []))
    g, c = build_author_graph(ps), build_collab_stats(ps)
    assert edge_coefficients(MethodId.PR_PUBLICATIONS, K("U"), K("V"), g, c) == (1, 7, 0)


def test_edge_coefficients_errors():
    g, c = _coef_fixture()
    with pytest.raises(InvalidInput):
        edge_coefficients(MethodId.PR, K("V"), K("U"), g, c)
    with pytest.raises(InvalidInput):
        edge_coefficients(MethodId.CITATIONS, K("U"), K("V"), g, c)


def test_csv_exports(abc_papers, tmp_path):
    import io
    g, c = build_author_graph(abc_papers), build_collab_stats(abc_papers)
    buf = io.StringIO()
    write_edges_csv(g, buf)
    assert buf.getvalue().splitlines() == ["citing,cited,w", '"A, ","B, ",1', '"A, ","C, ",1', '"B, ","C, ",1']
    a, p = io.StringIO(), io.StringIO()
    write_collab_csv(c, a, p)
    assert a.getvalue().splitlines()[0] == "author,pubs,all_coauthors,all_dist_coauthors,all_collaborations"
    assert '"B, ",2,2,2,2' in a.getvalue().splitlines()
    assert p.getvalue().splitlines()[0] == "a,b,common_pubs,joint_slots,joint_distinct"

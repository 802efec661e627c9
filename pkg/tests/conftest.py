import pytest

from authorrank.corpus import AuthorKey, PaperSet, make_paper
from authorrank.graph import AuthorGraph, build_author_graph, build_collab_stats
from authorrank.testkit import SynthParams, gen_synthetic_corpus


def K(name: str) -> AuthorKey:
    return AuthorKey(name.upper())


def graph_from_edges(edges, vertices=()):
    """Graph from ``(citing, cited[, w])`` tuples of plain names."""
    g = AuthorGraph()
    for v in vertices:
        g.add_vertex(K(v))
    for e in edges:
        u, v, w = (*e, 1) if len(e) == 2 else e
        g.add_citation(K(u), K(v), w)
    return g


def papers(*specs):
    """PaperSet from ``(id, "A B", ["ref", ...])`` specs."""
    return PaperSet.from_records(
        make_paper(pid, [K(a) for a in authors.split()], None, refs) for pid, authors, refs in specs
    )


SYNTH = SynthParams(n_papers=40, max_authors_per_paper=3, max_refs_per_paper=3, author_pool=50)


def synthetic_graphs(count=100, params=SYNTH):
    for seed in range(count):
        ps = gen_synthetic_corpus(SynthParams(**{**params.__dict__, "seed": seed}))
        yield seed, build_author_graph(ps), build_collab_stats(ps)


@pytest.fixture
def abc_papers():
    # P1 by {A, B} cites P2 by {B, C}
    return papers(("P1", "A B", ["P2"]), ("P2", "B C", []))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion covered by a test")


_criteria: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    number, text = mark.args
    ok = rep.passed and _criteria.get(number, (True,))[0]
    _criteria[number] = (ok, text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        ok, text = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}")

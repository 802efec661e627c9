"""Command-line entry point: ``authorrank {build,rank,eval,correlate,synth}``."""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path

import numpy as np

from .corpus import AuthorKey, read_corpus, write_corpus
from .errors import CorpusError, InvalidInput
from .evaluate import correlation_matrix, evaluate, read_refset
from .graph import build_author_graph, build_collab_stats, write_collab_csv, write_edges_csv
from .methods import MethodId, parse_methods
from .rank import RankOptions, Ranking, score_all, scores_to_ranks
from .testkit import SynthParams, gen_synthetic_corpus

log = logging.getLogger("authorrank")

RANKS_FILE = "ranks.csv"


def fmt(x) -> str:
    """Shortest round-trip text for a number; integral ranks/counts print as integers."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if np.isnan(x):
        return "nan"
    return repr(x)


def _fmt_rank(x) -> str:
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def _writer(path: Path):
    fh = open(path, "w", encoding="utf-8", newline="")
    return fh, csv.writer(fh, lineterminator="\n")


def _rank_options(args) -> RankOptions:
    return RankOptions(damping=args.damping, max_iters=args.max_iters, epsilon=args.epsilon,
                       convergence=args.convergence, dangling=args.dangling, ties=args.ties)


def cmd_build(args) -> int:
    papers = read_corpus(args.input)
    graph = build_author_graph(papers)
    collab = build_collab_stats(papers)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "edges.csv", "w", encoding="utf-8", newline="") as fh:
        write_edges_csv(graph, fh)
    with open(out / "collab_authors.csv", "w", encoding="utf-8", newline="") as a, \
            open(out / "collab_pairs.csv", "w", encoding="utf-8", newline="") as p:
        write_collab_csv(collab, a, p)
    print(f"papers={len(papers)} authors={len(graph)} edges={graph.n_edges} "
          f"weight={graph.total_weight} dropped_refs={graph.dropped_refs}")
    return 0


def cmd_rank(args) -> int:
    methods = parse_methods(args.methods)
    opts = _rank_options(args)
    papers = read_corpus(args.input)
    graph = build_author_graph(papers)
    collab = build_collab_stats(papers)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    rankings = []
    for sv in score_all(graph, collab, opts, methods):
        r = scores_to_ranks(sv, opts.ties)
        rankings.append(r)
        fh, w = _writer(out / f"scores_{sv.method.value}.csv")
        with fh:
            w.writerow(["author", "score", "rank"])
            for a, s, k in zip(sv.authors, sv.scores, r.ranks):
                w.writerow([str(a), fmt(s), _fmt_rank(k)])
        print(f"{sv.method.value}: iterations={sv.iterations_run} converged={sv.converged}")

    fh, w = _writer(out / RANKS_FILE)
    with fh:
        w.writerow(["author"] + [r.method.value for r in rankings])
        for i, a in enumerate(graph.vertices):
            w.writerow([str(a)] + [_fmt_rank(r.ranks[i]) for r in rankings])
    return 0


def read_rank_matrix(path) -> list[Ranking]:
    """Load the combined ``author,<method>...`` rank matrix written by ``rank``."""
    path = Path(path)
    if path.is_dir():
        path = path / RANKS_FILE
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0][:1] != ["author"]:
        raise InvalidInput(f"{path}: expected a header row starting with 'author'")
    header = rows[0][1:]
    authors = tuple(AuthorKey.parse(r[0]) for r in rows[1:])
    cols = np.array([[float(x) for x in r[1:]] for r in rows[1:]], dtype=float).reshape(len(authors), len(header))
    out = []
    for j, name in enumerate(header):
        col = cols[:, j]
        if np.all(col == np.round(col)):
            col = col.astype(np.int64)
        out.append(Ranking(MethodId(name), authors, col))
    return out


def _write_correlations(rankings, path: Path) -> None:
    mat = correlation_matrix(rankings)
    names = [r.method.value for r in rankings]
    fh, w = _writer(path)
    with fh:
        w.writerow(["method"] + names)
        for name, row in zip(names, mat):
            w.writerow([name] + [fmt(x) for x in row])


def _filter(rankings, spec: str | None):
    if not spec:
        return rankings
    wanted = parse_methods(spec)
    return [r for r in rankings if r.method in wanted]


_STAT_FIELDS = ("mean", "median", "min", "max", "std", "p25", "p75")


def _stats_row(name, stats, n_found, n_missing):
    if stats is None:
        return [name] + [""] * len(_STAT_FIELDS) + [n_found, n_missing]
    return [name] + [fmt(getattr(stats, f)) for f in _STAT_FIELDS] + [n_found, n_missing]


def cmd_eval(args) -> int:
    if not args.refset:
        raise InvalidInput("eval needs at least one --refset")
    rankings = _filter(read_rank_matrix(args.input), args.methods)
    refsets = [read_refset(p) for p in args.refset]
    report = evaluate(rankings, refsets, with_correlations=False)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for refset in refsets:
        label = refset.label
        evals = report.by_refset[label]
        agg_fh, agg = _writer(out / f"aggregate_{label}.csv")
        rel_fh, rel = _writer(out / f"aggregate_{label}_relative.csv")
        with agg_fh, rel_fh:
            header = ["method", *_STAT_FIELDS, "n_found", "n_missing"]
            agg.writerow(header)
            rel.writerow(header)
            for ev in evals:
                name = ev.method.value
                agg.writerow(_stats_row(name, ev.absolute, len(ev.members), len(ev.missing)))
                rel.writerow(_stats_row(name, ev.relative, len(ev.members), len(ev.missing)))
                fh, w = _writer(out / f"members_{label}_{name}.csv")
                with fh:
                    w.writerow(["member", "rank", "relative_rank"])
                    for m, r, x in ev.members:
                        w.writerow([str(m), _fmt_rank(r), fmt(x)])
                if not ev.members:
                    log.warning("%s: no member of %s is ranked", name, label)
        missing = evals[0].missing if evals else []
        with open(out / f"missing_{label}.txt", "w", encoding="utf-8") as fh:
            fh.writelines(f"{m}\n" for m in missing)
        print(f"{label}: members={len(refset.members)} missing={len(missing)}")
    _write_correlations(rankings, out / "correlation.csv")
    return 0


def cmd_correlate(args) -> int:
    rankings = _filter(read_rank_matrix(args.input), args.methods)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_correlations(rankings, out / "correlation.csv")
    return 0


def cmd_synth(args) -> int:
    params = SynthParams(n_papers=args.papers, max_authors_per_paper=args.authors_per_paper,
                         max_refs_per_paper=args.refs_per_paper, author_pool=args.author_pool,
                         seed=args.seed)
    papers = gen_synthetic_corpus(params)
    if args.out in (None, "-"):
        write_corpus(papers, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            write_corpus(papers, fh)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="authorrank", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def ranking_flags(p):
        p.add_argument("--methods", default="all",
                       help="comma-separated method names, or 'all' (default)")
        p.add_argument("--damping", type=float, default=0.9,
                       help="damping factor (default 0.9; 0.85 and 0.5 are common alternatives)")
        p.add_argument("--max-iters", type=int, default=50)
        p.add_argument("--epsilon", type=float, default=1e-6)
        p.add_argument("--convergence", choices=["spearman", "l1"], default="spearman")
        p.add_argument("--dangling", choices=["literal", "redistribute"], default="literal")
        p.add_argument("--ties", choices=["competition", "average"], default="competition")

    p = sub.add_parser("build", help="build the author graph and collaboration tables")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("rank", help="score and rank authors")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    ranking_flags(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("eval", help="evaluate rankings against reference sets")
    p.add_argument("--input", required=True, help="rank matrix CSV or the 'rank' output directory")
    p.add_argument("--out", required=True)
    p.add_argument("--refset", action="append", default=[])
    p.add_argument("--methods", default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("correlate", help="pairwise Spearman correlation of rankings")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--methods", default=None)
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("synth", help="write a deterministic synthetic corpus")
    p.add_argument("--out", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--papers", type=int, default=SynthParams.n_papers)
    p.add_argument("--authors-per-paper", type=int, default=SynthParams.max_authors_per_paper)
    p.add_argument("--refs-per-paper", type=int, default=SynthParams.max_refs_per_paper)
    p.add_argument("--author-pool", type=int, default=SynthParams.author_pool)
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except CorpusError as exc:
        log.error("%s: %s", getattr(args, "input", ""), exc)
    except (InvalidInput, ValueError, OSError) as exc:
        log.error("%s", exc)
    return 1


if __name__ == "__main__":
    sys.exit(main())

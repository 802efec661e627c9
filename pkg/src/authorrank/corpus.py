"""Paper-level records and author identities.

Input is line-delimited JSON, one paper per line::

    {"id": "p1", "authors": [{"surname": "Novak", "given": "Jana"}], "year": 2015, "refs": ["p0"]}

Blank lines and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from .errors import CorpusError, InvalidInput

_GIVEN_SPLIT = re.compile(r"[\s\-]+")


@dataclass(frozen=True, order=True)
class AuthorKey:
    """Canonical author identity: uppercased surname plus given-name initials."""

    surname: str
    initials: str = ""

    def __post_init__(self):
        if not self.surname or self.surname != self.surname.strip():
            raise InvalidInput(f"invalid surname {self.surname!r}")
        if not all(ch.isalpha() for ch in self.initials):
            raise InvalidInput(f"initials must be letters, got {self.initials!r}")

    def __str__(self) -> str:
        return f"{self.surname}, {self.initials}"

    @classmethod
    def parse(cls, text: str) -> "AuthorKey":
        """Inverse of ``str(key)``; also accepts mixed case such as ``"Ong, YS"``."""
        surname, sep, initials = text.rpartition(",")
        if not sep:
            surname, initials = text, ""
        surname = " ".join(surname.split()).upper()
        if not surname:
            raise InvalidInput(f"empty surname in {text!r}")
        return cls(surname, initials.strip().upper())


def author_key(surname: str, given_names: str = "") -> AuthorKey:
    """Build the canonical key from a surname and a free-text given-names field.

    Given names are split on whitespace and hyphens and the first letter of
    each part becomes one initial, so ``("Ong", "Yew Soon")`` gives ``ONG, YS``.
    """
    name = " ".join((surname or "").split()).upper()
    if not name:
        raise InvalidInput("surname is empty")
    initials = []
    for part in _GIVEN_SPLIT.split(given_names or ""):
        letter = next((ch for ch in part if ch.isalpha()), None)
        if letter is not None:
            initials.append(letter.upper())
    return AuthorKey(name, "".join(initials))


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    authors: tuple[AuthorKey, ...]
    year: int | None = None
    refs: tuple[str, ...] = ()


@dataclass
class PaperSet:
    """Papers indexed by id, iterated in insertion order."""

    papers: dict[str, PaperRecord] = field(default_factory=dict)

    def add(self, paper: PaperRecord) -> None:
        if paper.paper_id in self.papers:
            raise InvalidInput(f"duplicate paper id {paper.paper_id!r}")
        self.papers[paper.paper_id] = paper

    def __len__(self) -> int:
        return len(self.papers)

    def __iter__(self) -> Iterator[PaperRecord]:
        return iter(self.papers.values())

    def __contains__(self, paper_id: object) -> bool:
        return paper_id in self.papers

    def __getitem__(self, paper_id: str) -> PaperRecord:
        return self.papers[paper_id]

    @property
    def n_refs(self) -> int:
        return sum(len(p.refs) for p in self)

    @classmethod
    def from_records(cls, records: Iterable[PaperRecord]) -> "PaperSet":
        ps = cls()
        for rec in records:
            ps.add(rec)
        return ps


def make_paper(paper_id: str, authors: Iterable[AuthorKey], year: int | None = None,
               refs: Iterable[str] = ()) -> PaperRecord:
    """Create a record, collapsing repeated authors to their first occurrence."""
    return PaperRecord(paper_id, tuple(dict.fromkeys(authors)), year, tuple(refs))


def _record_from_json(obj, lineno: int) -> PaperRecord:
    def fail(msg):
        raise CorpusError(f"line {lineno}: {msg}", lineno=lineno)

    if not isinstance(obj, dict):
        fail("record is not an object")
    pid = obj.get("id")
    if not isinstance(pid, str) or not pid:
        fail("missing or empty 'id'")
    raw_authors = obj.get("authors", [])
    if not isinstance(raw_authors, list):
        fail("'authors' must be a list")
    authors = []
    for a in raw_authors:
        if not isinstance(a, dict) or not isinstance(a.get("surname"), str):
            fail("author entries need a text 'surname'")
        given = a.get("given", "")
        if given is None:
            given = ""
        if not isinstance(given, str):
            fail("author 'given' must be text")
        try:
            authors.append(author_key(a["surname"], given))
        except InvalidInput as exc:
            fail(str(exc))
    year = obj.get("year")
    if year is not None and (isinstance(year, bool) or not isinstance(year, int)):
        fail("'year' must be an integer")
    refs = obj.get("refs", [])
    if not isinstance(refs, list) or not all(isinstance(r, str) for r in refs):
        fail("'refs' must be a list of ids")
    return make_paper(pid, authors, year, refs)


def parse_corpus(lines: Iterable[str]) -> PaperSet:
    """Parse line-delimited JSON records into a :class:`PaperSet`.

    Raises :class:`CorpusError` carrying the 1-based line number on malformed
    input or a repeated paper id.
    """
    papers = PaperSet()
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"line {lineno}: invalid JSON ({exc.msg})", lineno=lineno) from exc
        rec = _record_from_json(obj, lineno)
        if rec.paper_id in papers:
            raise CorpusError(f"line {lineno}: duplicate paper id {rec.paper_id!r}", lineno=lineno)
        papers.add(rec)
    return papers


def read_corpus(path) -> PaperSet:
    with open(path, encoding="utf-8") as fh:
        return parse_corpus(fh)


def _author_json(key: AuthorKey) -> dict:
    # initials re-split one letter per token so author_key() reproduces them
    return {"surname": key.surname, "given": " ".join(key.initials)}


def write_corpus(papers: PaperSet, fh: IO[str]) -> None:
    """Write ``papers`` in the line-delimited input format."""
    for p in papers:
        obj = {"id": p.paper_id, "authors": [_author_json(a) for a in p.authors]}
        if p.year is not None:
            obj["year"] = p.year
        obj["refs"] = list(p.refs)
        fh.write(json.dumps(obj, ensure_ascii=False, sort_keys=False) + "\n")

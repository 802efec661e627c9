from enum import Enum


class MethodId(str, Enum):
    """The twelve author ranking methods, valued by their canonical output names."""

    CITATIONS = "Citations"
    IN_DEGREE = "InDegree"
    HITS = "Hits"
    PR = "PR"
    PR_WEIGHTED = "PRWeighted"
    PR_COLLABORATION = "PRCollaboration"
    PR_PUBLICATIONS = "PRPublications"
    PR_ALL_COAUTHORS = "PRAllCoauthors"
    PR_ALL_DIST_COAUTHORS = "PRAllDistCoauthors"
    PR_ALL_COLLABORATIONS = "PRAllCollaborations"
    PR_COAUTHORS = "PRCoauthors"
    PR_DIST_COAUTHORS = "PRDistCoauthors"

    def __str__(self) -> str:
        return self.value

    @property
    def is_pagerank(self) -> bool:
        return self in PAGERANK_VARIANTS


ALL_METHODS = tuple(MethodId)
PAGERANK_VARIANTS = ALL_METHODS[3:]


def parse_methods(spec: str) -> list[MethodId]:
    """Parse a comma-separated method list, or ``all``."""
    if spec.strip().lower() == "all":
        return list(ALL_METHODS)
    names = [s.strip() for s in spec.split(",") if s.strip()]
    if not names:
        raise ValueError("empty method list")
    out = []
    for name in names:
        try:
            out.append(MethodId(name))
        except ValueError:
            valid = ", ".join(m.value for m in ALL_METHODS)
            raise ValueError(f"unknown method {name!r}; valid names: {valid}") from None
    return out

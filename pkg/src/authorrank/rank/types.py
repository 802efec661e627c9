from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from ..corpus import AuthorKey
from ..errors import InvalidInput
from ..methods import MethodId

ConvergenceMode = Literal["spearman", "l1"]
DanglingPolicy = Literal["literal", "redistribute"]
TiePolicy = Literal["competition", "average"]


@dataclass(frozen=True)
class RankOptions:
    """Iteration controls shared by HITS and the PageRank family.

    ``epsilon`` is read as ``1 - rho`` in spearman mode (successive rankings
    must correlate at least ``1 - epsilon``) and as an L1 bound on the score
    change in l1 mode.
    """

    damping: float = 0.9
    max_iters: int = 50
    epsilon: float = 1e-6
    convergence: ConvergenceMode = "spearman"
    dangling: DanglingPolicy = "literal"
    ties: TiePolicy = "competition"

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise InvalidInput(f"damping must lie in (0, 1), got {self.damping}")
        if self.max_iters < 1:
            raise InvalidInput(f"max_iters must be >= 1, got {self.max_iters}")
        if not self.epsilon > 0:
            raise InvalidInput(f"epsilon must be positive, got {self.epsilon}")
        if self.convergence not in ("spearman", "l1"):
            raise InvalidInput(f"unknown convergence mode {self.convergence!r}")
        if self.dangling not in ("literal", "redistribute"):
            raise InvalidInput(f"unknown dangling policy {self.dangling!r}")
        if self.ties not in ("competition", "average"):
            raise InvalidInput(f"unknown tie policy {self.ties!r}")


@dataclass
class ScoreVector:
    method: MethodId
    authors: tuple[AuthorKey, ...]
    scores: np.ndarray
    iterations_run: int = 0
    converged: bool = True

    def __post_init__(self):
        if len(self.authors) != len(self.scores):
            raise InvalidInput("one score per author required")

    def __len__(self) -> int:
        return len(self.authors)

    def __getitem__(self, author: AuthorKey):
        return self.scores[self.authors.index(author)]

    def as_dict(self) -> dict[AuthorKey, float]:
        return dict(zip(self.authors, self.scores.tolist()))


@dataclass
class Ranking:
    """Rank per author; 1 is best."""

    method: MethodId
    authors: tuple[AuthorKey, ...]
    ranks: np.ndarray

    def __len__(self) -> int:
        return len(self.authors)

    def __getitem__(self, author: AuthorKey):
        return self.ranks[self.authors.index(author)]

    def as_dict(self) -> dict[AuthorKey, float]:
        return dict(zip(self.authors, self.ranks.tolist()))

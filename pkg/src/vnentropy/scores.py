"""Centrality score containers with deterministic ranking."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .graph import label_sort_key

__all__ = ["Method", "CentralityScores"]


class Method(str, Enum):
    """Node-importance measures usable as scoring and dismantling strategies."""

    DC = "dc"                  # degree
    BC = "bc"                  # shortest-path betweenness
    CC = "cc"                  # closeness
    EC = "ec"                  # eigenvector
    PR = "pr"                  # PageRank
    KC = "kc"                  # k-core number
    CLC = "clc"                # local clustering coefficient
    CI = "ci"                  # collective influence
    CE_EXACT = "ce_exact"      # spectral entropy variation, full eigendecomposition
    CE_APPROX = "ce_approx"    # spectral entropy variation, degree-local approximation

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CentralityScores:
    """One real-valued score per node of the source graph.

    Every ranking accessor breaks score ties by ascending node label
    (numeric labels ordered numerically), so downstream dismantling
    traces replay identically.
    """

    method: Method
    scores: Mapping[str, float]

    def ranked(self) -> list[tuple[str, float]]:
        """(label, score) pairs, best first, deterministic tie-break."""
        return sorted(
            self.scores.items(),
            key=lambda item: (-item[1], label_sort_key(item[0])),
        )

    def top(self, count: int = 1) -> list[str]:
        return [label for label, _ in self.ranked()[:count]]

    def dense_ranks(self) -> dict[str, int]:
        """Dense 1-based ranks: tied scores share a rank, the next
        distinct score gets the following rank."""
        ranks: dict[str, int] = {}
        rank = 0
        previous: float | None = None
        for label, score in self.ranked():
            if previous is None or score != previous:
                rank += 1
                previous = score
            ranks[label] = rank
        return ranks

    def __len__(self) -> int:
        return len(self.scores)

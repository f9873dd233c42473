from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .graph_core import LabeledGraph

Coord = Union[int, Fraction]


@dataclass(frozen=True)
class Drawing:
    """A point per vertex of ``graph``; coordinates are exact."""

    graph: LabeledGraph
    points: tuple[tuple[Coord, Coord], ...]

    def __getitem__(self, v: int) -> tuple[Coord, Coord]:
        return self.points[v]

    def normalized(self) -> "Drawing":
        return Drawing(self.graph, normalize_points(self.points))

    def mirrored(self) -> "Drawing":
        return Drawing(self.graph, tuple((-x, y) for x, y in self.points)).normalized()


def normalize_points(points: Sequence[tuple[Coord, Coord]]) -> tuple[tuple[int, int], ...]:
    """Order-preserving renumbering of the distinct x and y values to 0, 1, 2, ..."""
    xs = {x: i for i, x in enumerate(sorted({p[0] for p in points}))}
    ys = {y: i for i, y in enumerate(sorted({p[1] for p in points}))}
    return tuple((xs[x], ys[y]) for x, y in points)

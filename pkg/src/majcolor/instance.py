"""Graphs decorated with color lists and per-color ranks."""

from dataclasses import dataclass

from .exceptions import InstanceFormatError
from .rational import check_rational


def _normalize_lists(n, lists):
    if len(lists) != n:
        raise InstanceFormatError(f"expected {n} color lists, got {len(lists)}")
    out = []
    for v, colors in enumerate(lists):
        colors = tuple(int(c) for c in colors)
        if not colors:
            raise InstanceFormatError(f"empty color list at vertex {v}")
        if any(c < 0 for c in colors):
            raise InstanceFormatError(f"negative color id in list of vertex {v}")
        if len(set(colors)) != len(colors):
            raise InstanceFormatError(f"repeated color in list of vertex {v}")
        out.append(colors)
    return tuple(out)


@dataclass(frozen=True)
class ListInstance:
    """A graph with a color list per vertex and no ranks."""

    graph: object
    lists: tuple

    def __post_init__(self):
        object.__setattr__(self, "lists", _normalize_lists(self.graph.n, self.lists))

    @property
    def n(self):
        return self.graph.n


@dataclass(frozen=True)
class RankedInstance:
    """A graph, a color list ``lists[v]`` per vertex and aligned ranks.

    ``ranks[v][i]`` is the rank of color ``lists[v][i]`` at ``v``. Ranks are
    Fractions in the 64-bit range; negative and zero values are allowed.
    """

    graph: object
    lists: tuple
    ranks: tuple

    def __post_init__(self):
        lists = _normalize_lists(self.graph.n, self.lists)
        if len(self.ranks) != len(lists):
            raise InstanceFormatError(f"expected {len(lists)} rank rows, got {len(self.ranks)}")
        ranks = []
        for v, (colors, row) in enumerate(zip(lists, self.ranks)):
            row = tuple(check_rational(r) for r in row)
            if len(row) != len(colors):
                raise InstanceFormatError(f"vertex {v}: {len(colors)} colors but {len(row)} ranks")
            ranks.append(row)
        object.__setattr__(self, "lists", lists)
        object.__setattr__(self, "ranks", tuple(ranks))

    @classmethod
    def from_maps(cls, graph, lists, rank_maps):
        """Build from ``rank_maps[v] = {color: rank}`` keyed by list colors."""
        rows = []
        for v, colors in enumerate(lists):
            rmap = rank_maps[v]
            extra = set(rmap) - set(colors)
            if extra:
                raise InstanceFormatError(f"vertex {v}: rank for color {min(extra)} not in its list")
            missing = [c for c in colors if c not in rmap]
            if missing:
                raise InstanceFormatError(f"vertex {v}: no rank for color {missing[0]}")
            rows.append(tuple(rmap[c] for c in colors))
        return cls(graph, lists, tuple(rows))

    @property
    def digraph(self):
        return self.graph

    @property
    def n(self):
        return self.graph.n

    def rank(self, v, color):
        return self.ranks[v][self.lists[v].index(color)]

    def rank_map(self, v):
        return dict(zip(self.lists[v], self.ranks[v]))

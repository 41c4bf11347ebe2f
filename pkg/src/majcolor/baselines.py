"""Non-list coloring procedures used as baselines.

* ``greedy_acyclic_2color``: majority 2-coloring of an acyclic digraph.
* ``split_product_4color``: majority 4-coloring of any digraph by splitting
  its edges into forward and backward parts of a vertex order.
* ``lovasz_kcolor``: local search for an undirected k-coloring in which each
  vertex shares its color with at most ``deg/k`` neighbors.
* ``lovasz_list_best_effort``: the same search driven by list ranks, capped.
"""

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import CyclicGraphError
from .graph import Digraph, topological_order
from .rational import check_rational


def greedy_acyclic_2color(D, return_order=False):
    """Color an acyclic digraph with {0, 1}, sinks first.

    Each vertex takes the color held by fewer of its out-neighbors (0 on a
    tie), so at most half of its out-neighbors share its color.
    """
    order = topological_order(D)
    if order is None:
        raise CyclicGraphError("greedy 2-coloring requires an acyclic digraph")
    coloring = [0] * D.n
    processed = order[::-1]
    for v in processed:
        ones = sum(coloring[w] for w in D.out_adj[v])
        zeros = len(D.out_adj[v]) - ones
        coloring[v] = 1 if ones < zeros else 0
    if return_order:
        return coloring, processed
    return coloring


def split_edges(D, order):
    """Split ``D`` into the edges going forward and backward along ``order``."""
    if sorted(order) != list(range(D.n)):
        raise ValueError("order must be a permutation of the vertices")
    position = [0] * D.n
    for i, v in enumerate(order):
        position[v] = i
    forward, backward = [], []
    for u, w in D.edge_list():
        (forward if position[u] < position[w] else backward).append((u, w))
    return Digraph(D.n, forward), Digraph(D.n, backward)


def split_product_4color(D, order=None):
    """Product of greedy 2-colorings of the two halves of an edge split; colors 0..3."""
    if order is None:
        order = range(D.n)
    forward, backward = split_edges(D, list(order))
    c1 = greedy_acyclic_2color(forward)
    c2 = greedy_acyclic_2color(backward)
    return [2 * a + b for a, b in zip(c1, c2)]


@dataclass
class LocalSearchResult:
    coloring: list
    moves: int
    # monochromatic-edge count before the first move and after each move
    potentials: list = field(default_factory=list)
    converged: bool = True
    # (vertex, old color, new color) per move
    steps: list = field(default_factory=list)


def _monochromatic_edges(G, coloring):
    return sum(1 for a, b in G.edge_list() if coloring[a] == coloring[b])


def lovasz_kcolor(G, k):
    """Recolor violating vertices until every vertex has ``k * same <= deg``.

    Starts from the all-zero coloring; the violating vertex with the smallest
    id moves to its least-used neighbor color (lowest id on ties). Each move
    strictly lowers the number of monochromatic edges, so there are at most
    ``|E|`` moves.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    n = G.n
    coloring = [0] * n
    counts = [[0] * k for _ in range(n)]
    for v in range(n):
        counts[v][0] = len(G.adj[v])
    potential = G.m
    potentials = [potential]

    def violating(v):
        return k * counts[v][coloring[v]] > len(G.adj[v])

    heap = [v for v in range(n) if violating(v)]
    heapq.heapify(heap)
    moves = 0
    steps = []
    while heap:
        v = heapq.heappop(heap)
        if not violating(v):
            continue
        cv = counts[v]
        old = coloring[v]
        new = min(range(k), key=cv.__getitem__)
        gain = cv[old] - cv[new]
        assert gain > 0, "recoloring must lower the monochromatic edge count"
        coloring[v] = new
        for w in G.adj[v]:
            counts[w][old] -= 1
            counts[w][new] += 1
            if violating(w):
                heapq.heappush(heap, w)
        potential -= gain
        potentials.append(potential)
        steps.append((v, old, new))
        moves += 1
    return LocalSearchResult(coloring, moves, potentials, steps=steps)


def lovasz_list_best_effort(G, lists, ranks, max_iters=None):
    """Local search for ``same-color neighbors <= rank_v(color)`` from lists.

    Requires each vertex's ranks to sum to at least its degree. Each vertex
    starts on its first list color. A violating vertex (smallest id first)
    moves to the list color with the fewest neighbors among those whose count
    is below their rank. Termination is not guaranteed; after ``max_iters``
    moves (default ``10 * |E| + n``) the current coloring is returned with
    ``converged=False``.
    """
    n = G.n
    lists = [tuple(c) for c in lists]
    ranks = [tuple(check_rational(r) for r in row) for row in ranks]
    for v in range(n):
        if len(lists[v]) != len(ranks[v]) or not lists[v]:
            raise ValueError(f"vertex {v}: list and rank lengths differ or list is empty")
        if sum(ranks[v], Fraction(0)) < len(G.adj[v]):
            raise ValueError(f"vertex {v}: ranks sum below the degree")
    if max_iters is None:
        max_iters = 10 * G.m + n
    coloring = [colors[0] for colors in lists]
    rank_of = [dict(zip(c, r)) for c, r in zip(lists, ranks)]

    def neighbor_counts(v):
        tally = dict.fromkeys(lists[v], 0)
        for w in G.adj[v]:
            if coloring[w] in tally:
                tally[coloring[w]] += 1
        return tally

    potentials = [_monochromatic_edges(G, coloring)]
    steps = []
    moves = 0
    while True:
        for v in range(n):
            tally = neighbor_counts(v)
            if tally[coloring[v]] > rank_of[v][coloring[v]]:
                break
        else:
            return LocalSearchResult(coloring, moves, potentials, True, steps)
        if moves >= max_iters:
            return LocalSearchResult(coloring, moves, potentials, False, steps)
        options = [c for c in lists[v] if tally[c] < rank_of[v][c]]
        old = coloring[v]
        coloring[v] = min(options, key=lambda c: (tally[c], c))
        potentials.append(_monochromatic_edges(G, coloring))
        steps.append((v, old, coloring[v]))
        moves += 1

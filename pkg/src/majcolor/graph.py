"""Simple directed and undirected graphs on vertex ids ``0..n-1``."""

import heapq

from .exceptions import InstanceFormatError


class Digraph:
    """Loop-free directed graph without parallel edges.

    Adjacency is stored as tuples sorted by vertex id, so an instance is
    immutable once built and two digraphs with the same edge set compare equal.
    """

    __slots__ = ("n", "out_adj", "in_adj", "_edges")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        out = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise InstanceFormatError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise InstanceFormatError(f"duplicate edge {u} -> {v}")
            seen.add((u, v))
            out[u].append(v)
        self._init_from_out(n, out)
        self._edges = frozenset(seen)

    @classmethod
    def _trusted(cls, n, out):
        """Build from per-vertex out-lists already known to be simple."""
        self = cls.__new__(cls)
        self._init_from_out(n, out)
        self._edges = None
        return self

    def _init_from_out(self, n, out):
        self.n = n
        self.out_adj = tuple(tuple(sorted(ws)) for ws in out)
        inn = [[] for _ in range(n)]
        for u, ws in enumerate(self.out_adj):
            for w in ws:
                inn[w].append(u)
        self.in_adj = tuple(tuple(us) for us in inn)

    @property
    def edges(self):
        if self._edges is None:
            self._edges = frozenset((u, w) for u, ws in enumerate(self.out_adj) for w in ws)
        return self._edges

    @property
    def m(self):
        return sum(len(ws) for ws in self.out_adj)

    def out_degree(self, v):
        return len(self.out_adj[v])

    def in_degree(self, v):
        return len(self.in_adj[v])

    def edge_list(self):
        """Edges in (source, target) lexicographic order."""
        return [(u, w) for u, ws in enumerate(self.out_adj) for w in ws]

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_adj == other.out_adj

    def __hash__(self):
        return hash((self.n, self.out_adj))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


class UndirectedGraph:
    """Loop-free undirected graph without parallel edges."""

    __slots__ = ("n", "adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [[] for _ in range(n)]
        seen = set()
        for a, b in edges:
            _check_vertex(a, n)
            _check_vertex(b, n)
            if a == b:
                raise InstanceFormatError(f"self-loop at vertex {a}")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise InstanceFormatError(f"duplicate edge {a} -- {b}")
            seen.add(key)
            adj[a].append(b)
            adj[b].append(a)
        self.n = n
        self.adj = tuple(tuple(sorted(ns)) for ns in adj)

    @property
    def edges(self):
        return frozenset((a, b) for a, ns in enumerate(self.adj) for b in ns if a < b)

    @property
    def m(self):
        return sum(len(ns) for ns in self.adj) // 2

    def degree(self, v):
        return len(self.adj[v])

    def edge_list(self):
        return [(a, b) for a, ns in enumerate(self.adj) for b in ns if a < b]

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={self.m})"


def _check_vertex(v, n):
    if not isinstance(v, int) or not 0 <= v < n:
        raise InstanceFormatError(f"vertex id {v!r} out of range for n={n}")


def topological_order(D):
    """Return a topological order of ``D`` or ``None`` if it has a directed cycle.

    Kahn's algorithm; among vertices of in-degree zero the smallest id goes first.
    """
    indeg = [len(us) for us in D.in_adj]
    heap = [v for v in range(D.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in D.out_adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) < D.n:
        return None
    return order


def is_acyclic(D):
    return topological_order(D) is not None

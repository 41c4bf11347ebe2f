"""List coloring of digraphs under per-color rank budgets.

Given color lists with ranks such that, at every vertex ``v``, the ranks sum
to at least ``t * outdeg(v)`` and the list has at most ``t**2`` colors, the
engine returns a coloring from the lists in which every vertex ``v`` colored
``x`` has at most ``rank_v(x)`` out-neighbors colored ``x``.

The construction eliminates vertices one at a time. When ``v`` is removed,
its ``t`` highest-ranked colors form its *top set*, and each surviving
in-neighbor loses one unit of rank on every top-set color it also lists.
The colors are then assigned in reverse elimination order, each vertex taking
a top-set color whose rank at elimination time covers the number of
already-colored out-neighbors with that color.
"""

import gc
import heapq
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .exceptions import EngineInvariantError, InfeasibleInstanceError, RankOverflowError
from .graph import Digraph
from .instance import RankedInstance
from .rational import check_rational, fits_int64

STRATEGIES = ("ascending", "descending", "max-out-degree")
DEFAULT_EPSILON = Fraction(1, 4)


@contextmanager
def _gc_paused():
    # The passes allocate millions of acyclic objects; generational collection
    # rescanning them makes large runs superlinear.
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


@dataclass
class FeasibilityReport:
    t: int
    violations: list = field(default_factory=list)

    @property
    def feasible(self):
        return not self.violations

    def __bool__(self):
        return self.feasible


def check_feasibility(inst, t=2):
    """Report every vertex whose rank sum is below ``t * outdeg`` or whose list exceeds ``t**2``.

    Violations are ``(vertex, reason, observed, required)`` tuples.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    report = FeasibilityReport(t)
    graph = inst.graph
    for v in range(graph.n):
        row = inst.ranks[v]
        need = t * len(graph.out_adj[v])
        scale = lcm(*(r.denominator for r in row))
        if sum(r.numerator * (scale // r.denominator) for r in row) < need * scale:
            report.violations.append((v, "rank sum", sum(row, Fraction(0)), need))
        if len(inst.lists[v]) > t * t:
            report.violations.append((v, "list size", len(inst.lists[v]), t * t))
    return report


def build_majority4_instance(D, lists):
    """Ranks ``outdeg(v)/2`` on 4-lists; a valid coloring is a majority coloring."""
    with _gc_paused():
        return _build_majority4(D, lists)


def _build_majority4(D, lists):
    half = {}
    rows = []
    for v, colors in enumerate(lists):
        if len(colors) != 4 or len(set(colors)) != 4:
            raise ValueError(f"vertex {v}: expected 4 distinct colors, got {list(colors)}")
        d = len(D.out_adj[v])
        r = half.get(d)
        if r is None:
            r = half[d] = Fraction(d, 2)
        rows.append((r,) * 4)
    return RankedInstance(D, lists, rows)


def fictitious_color(lists):
    return max((max(colors) for colors in lists), default=-1) + 1


def build_twothirds3_instance(D, lists, epsilon=DEFAULT_EPSILON):
    """Ranks ``2/3 outdeg(v) + epsilon`` on 3-lists, padded with a shared color of rank ``-3 epsilon``.

    The padding color is one above the largest color id in ``lists``; its
    negative rank keeps it out of every valid coloring.
    """
    epsilon = check_rational(epsilon)
    if not 0 < epsilon < Fraction(1, 3):
        raise ValueError(f"epsilon must lie strictly between 0 and 1/3, got {epsilon}")
    for v, colors in enumerate(lists):
        if len(colors) != 3 or len(set(colors)) != 3:
            raise ValueError(f"vertex {v}: expected 3 distinct colors, got {list(colors)}")
    f = fictitious_color(lists)
    padded = []
    rows = []
    for v, colors in enumerate(lists):
        r = Fraction(2 * len(D.out_adj[v]), 3) + epsilon
        padded.append(tuple(colors) + (f,))
        rows.append((r, r, r, -3 * epsilon))
    return RankedInstance(D, padded, rows)


@dataclass(frozen=True)
class EliminationStep:
    vertex: int
    top: tuple
    top_ranks: tuple
    out_degree: int
    # in-neighbor -> (rank-sum drop, t * out-degree drop)
    deltas: dict
    # surviving vertex -> (rank sum, t * current out-degree)
    snapshot: dict


@dataclass(frozen=True)
class ExtensionStep:
    vertex: int
    color: int
    counts: tuple


@dataclass
class EliminationTrace:
    t: int
    initial: dict = field(default_factory=dict)
    steps: list = field(default_factory=list)
    extensions: list = field(default_factory=list)

    def lines(self):
        out = [f"elim {s.vertex} top " + " ".join(map(str, s.top)) for s in self.steps]
        out.extend(f"ext {e.vertex} color {e.color}" for e in self.extensions)
        return out

    def to_text(self):
        return "".join(line + "\n" for line in self.lines())


def _elimination_order(D, strategy, alive):
    n = D.n
    if strategy == "ascending":
        yield from range(n)
    elif strategy == "descending":
        yield from range(n - 1, -1, -1)
    elif strategy == "max-out-degree":
        outdeg = [len(ws) for ws in D.out_adj]
        heap = [(-outdeg[v], v) for v in range(n)]
        heapq.heapify(heap)
        while heap:
            negd, v = heapq.heappop(heap)
            if not alive[v] or -negd != outdeg[v]:
                continue
            yield v
            for u in D.in_adj[v]:
                if alive[u]:
                    outdeg[u] -= 1
                    heapq.heappush(heap, (-outdeg[u], u))
    else:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")


def _snapshot(D, t, work, scale, alive):
    snap = {}
    for u in range(D.n):
        if alive[u]:
            lhs = Fraction(sum(work[u]), scale[u])
            rhs = t * sum(1 for w in D.out_adj[u] if alive[w])
            snap[u] = (lhs, rhs)
    return snap


def color_with_ranks(inst, t=2, strategy="ascending", trace=False):
    """Color a feasible ranked instance; returns ``(coloring, trace_or_None)``.

    Raises :class:`InfeasibleInstanceError` when :func:`check_feasibility`
    fails. With ``trace=True`` every elimination records a full recheck of the
    rank condition on the surviving vertices, which costs ``O(n * (n + m))``.
    """
    with _gc_paused():
        return _color(inst, t, strategy, trace)


def _color(inst, t, strategy, trace):
    D = inst.graph
    if not isinstance(D, Digraph):
        raise TypeError("color_with_ranks needs a directed graph")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    report = check_feasibility(inst, t)
    if not report.feasible:
        raise InfeasibleInstanceError(report)

    n = D.n
    out_adj, in_adj = D.out_adj, D.in_adj
    lists = inst.lists

    # Ranks become integers over a per-vertex common denominator; decrements
    # subtract whole units, so the denominator never changes.
    scale = []
    work = []
    pos = []
    for v in range(n):
        row = inst.ranks[v]
        s = lcm(*(r.denominator for r in row))
        nums = [r.numerator * (s // r.denominator) for r in row]
        if not (fits_int64(s) and fits_int64(max(nums)) and fits_int64(min(nums) - len(out_adj[v]) * s)):
            raise RankOverflowError(f"ranks at vertex {v} leave the 64-bit range")
        scale.append(s)
        work.append(nums)
        pos.append({c: i for i, c in enumerate(lists[v])})

    alive = [True] * n
    tr = EliminationTrace(t) if trace else None
    if trace:
        tr.initial = _snapshot(D, t, work, scale, alive)

    stack = []
    for v in _elimination_order(D, strategy, alive):
        row = work[v]
        colors = lists[v]
        idxs = sorted(range(len(row)), key=lambda i: (-row[i], colors[i]))[:t]
        top = tuple(colors[i] for i in idxs)
        top_nums = tuple(row[i] for i in idxs)
        stack.append((v, top, top_nums))
        if trace:
            before = {u: (sum(work[u]), t * sum(1 for w in out_adj[u] if alive[w]))
                      for u in in_adj[v] if alive[u]}
            outdeg_now = sum(1 for w in out_adj[v] if alive[w])
        alive[v] = False
        for u in in_adj[v]:
            if alive[u]:
                p = pos[u]
                wu = work[u]
                su = scale[u]
                for x in top:
                    i = p.get(x)
                    if i is not None:
                        wu[i] -= su
        if trace:
            deltas = {}
            for u, (lhs0, rhs0) in before.items():
                rhs1 = t * sum(1 for w in out_adj[u] if alive[w])
                deltas[u] = (Fraction(lhs0 - sum(work[u]), scale[u]), rhs0 - rhs1)
            tr.steps.append(EliminationStep(
                v, top, tuple(Fraction(x, scale[v]) for x in top_nums), outdeg_now,
                deltas, _snapshot(D, t, work, scale, alive),
            ))
    if len(stack) != n:
        raise EngineInvariantError("elimination order did not visit every vertex once")

    coloring = [None] * n
    while stack:
        v, top, top_nums = stack.pop()
        counts = dict.fromkeys(top, 0)
        for w in out_adj[v]:
            cw = coloring[w]
            if cw in counts:
                counts[cw] += 1
        s = scale[v]
        for x, num in zip(top, top_nums):
            if num >= counts[x] * s:
                break
        else:
            raise EngineInvariantError(
                f"vertex {v}: no top color {top} meets its rank bound (counts {counts})")
        coloring[v] = x
        if trace:
            tr.extensions.append(ExtensionStep(v, x, tuple(counts[c] for c in top)))
    return coloring, tr


def assert_star_preserved(trace):
    """True iff the rank condition held before and after every elimination step.

    Also checks the per-step accounting: each affected in-neighbor loses at
    most ``t`` rank units while its ``t * outdeg`` side drops by exactly ``t``.
    """
    if trace is None:
        raise ValueError("a trace recorded with trace=True is required")
    t = trace.t
    for lhs, rhs in trace.initial.values():
        if lhs < rhs:
            return False
    for step in trace.steps:
        for lhs, rhs in step.snapshot.values():
            if lhs < rhs:
                return False
        for lhs_drop, rhs_drop in step.deltas.values():
            if lhs_drop > t or rhs_drop != t:
                return False
    return True

"""Plain counting checks for colorings.

These functions deliberately share no code with the coloring procedures they
are used to check.
"""

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class Violation:
    vertex: int
    bound: str
    observed: object
    allowed: object


@dataclass
class VerifyReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def lines(self):
        if self.ok:
            return ["OK"]
        return [f"vertex {x.vertex}: {x.bound}: observed {x.observed}, allowed {x.allowed}"
                for x in self.violations]


def _covers(report, n, coloring):
    if len(coloring) != n:
        report.violations.append(Violation(-1, "coloring size", len(coloring), n))
        return False
    return True


def _same_color_out(graph_adj, coloring, v):
    c = coloring[v]
    return sum(1 for w in graph_adj[v] if coloring[w] == c)


def verify_rank_coloring(inst, coloring):
    """Check ``c(v)`` is in ``L(v)`` and same-colored out-neighbors stay within ``r_v(c(v))``."""
    report = VerifyReport()
    graph = inst.graph
    if not _covers(report, graph.n, coloring):
        return report
    for v in range(graph.n):
        c = coloring[v]
        if c not in inst.lists[v]:
            report.violations.append(Violation(v, "not in list", c, inst.lists[v]))
            continue
        allowed = inst.ranks[v][inst.lists[v].index(c)]
        count = _same_color_out(graph.out_adj, coloring, v)
        if Fraction(count) > allowed:
            report.violations.append(Violation(v, f"rank of color {c}", count, allowed))
    return report


def verify_majority_fraction(D, coloring, p, q):
    """Check ``q * (same-colored out-neighbors) <= p * outdeg(v)`` at every vertex."""
    if q <= 0 or not 0 <= p <= q:
        raise ValueError(f"fraction {p}/{q} must lie in [0, 1]")
    report = VerifyReport()
    if not _covers(report, D.n, coloring):
        return report
    for v in range(D.n):
        count = _same_color_out(D.out_adj, coloring, v)
        if q * count > p * len(D.out_adj[v]):
            report.violations.append(
                Violation(v, f"{p}/{q} of out-degree", count, Fraction(p * len(D.out_adj[v]), q)))
    return report


def verify_undirected_fraction(G, coloring, k):
    """Check ``k * (same-colored neighbors) <= deg(v)`` at every vertex."""
    if k < 1:
        raise ValueError("k must be positive")
    report = VerifyReport()
    if not _covers(report, G.n, coloring):
        return report
    for v in range(G.n):
        count = _same_color_out(G.adj, coloring, v)
        if k * count > len(G.adj[v]):
            report.violations.append(Violation(v, f"1/{k} of degree", count, Fraction(len(G.adj[v]), k)))
    return report

"""Exhaustive enumeration of list colorings for small instances."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np

from .exceptions import OracleBudgetExceeded
from .generators import gen_random_digraph, gen_random_lists, gen_random_tournament
from .instance import ListInstance
from .io import format_instance

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class FractionConstraint:
    """At most ``p/q`` of a vertex's out-neighbors share its color."""

    p: int
    q: int

    def allows(self, v, color, count, outdeg):
        return self.q * count <= self.p * outdeg


@dataclass(frozen=True)
class RankConstraint:
    """At most ``rank_v(color)`` out-neighbors share the color of ``v``."""

    rank_maps: tuple

    @classmethod
    def from_instance(cls, inst):
        return cls(tuple(inst.rank_map(v) for v in range(inst.n)))

    def allows(self, v, color, count, outdeg):
        r = self.rank_maps[v].get(color)
        return r is not None and Fraction(count) <= r


MAJORITY = FractionConstraint(1, 2)


@dataclass
class OracleResult:
    coloring: list
    count: int
    candidates: int


def _enumerate(D, lists, constraint, budget, count_all):
    n = D.n
    lists = [tuple(c) for c in lists]
    if len(lists) != n:
        raise ValueError(f"expected {n} lists, got {len(lists)}")
    size = prod(len(c) for c in lists)
    if size > budget:
        raise OracleBudgetExceeded(size, budget)
    out_adj = D.out_adj
    # A vertex can be checked once it and all its out-neighbors are assigned.
    ready = [[] for _ in range(n)]
    for v in range(n):
        ready[max((v,) + out_adj[v])].append(v)
    coloring = [None] * n
    state = OracleResult(None, 0, 0)

    def holds(u):
        c = coloring[u]
        count = sum(1 for w in out_adj[u] if coloring[w] == c)
        return constraint.allows(u, c, count, len(out_adj[u]))

    def extend(k):
        if k == n:
            state.count += 1
            if state.coloring is None:
                state.coloring = list(coloring)
            return not count_all
        for c in lists[k]:
            state.candidates += 1
            coloring[k] = c
            if all(holds(u) for u in ready[k]) and extend(k + 1):
                return True
        coloring[k] = None
        return False

    extend(0)
    return state


def search_list_coloring(D, lists, constraint=MAJORITY, budget=DEFAULT_BUDGET):
    """First valid coloring in lexicographic order, with the number of candidates tried."""
    return _enumerate(D, lists, constraint, budget, count_all=False)


def exhaustive_list_coloring(D, lists, constraint=MAJORITY, budget=DEFAULT_BUDGET):
    """Return the lexicographically first valid coloring, or ``None`` if none exists.

    Colorings are ordered vertex-major with each vertex running through its
    list in the given order. Raises :class:`OracleBudgetExceeded` when the
    product of list sizes exceeds ``budget``.
    """
    return _enumerate(D, lists, constraint, budget, count_all=False).coloring


def count_valid_colorings(D, lists, constraint=MAJORITY, budget=DEFAULT_BUDGET):
    return _enumerate(D, lists, constraint, budget, count_all=True).count


@dataclass
class Counterexample:
    trial: int
    instance: ListInstance
    candidates: int

    def certificate(self):
        return format_instance(self.instance) + f"UNSAT after {self.candidates} candidates\n"


@dataclass
class SearchResult:
    trials: int
    counterexample: Counterexample = None
    skipped: tuple = ()

    @property
    def found(self):
        return self.counterexample is not None


FAMILIES = ("mixed", "tournament", "digraph")


def trial_instance(trial, seed, n_max, family="mixed", p=0.5, palette=5, n_min=2):
    """The random digraph with random 3-lists used by trial ``trial``."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))
    n = int(rng.integers(n_min, n_max + 1))
    graph_seed, lists_seed = (int(x) for x in rng.integers(0, 2**63, size=2))
    if family == "mixed":
        family = "tournament" if trial % 2 == 0 else "digraph"
    if family == "tournament":
        D = gen_random_tournament(n, graph_seed)
    elif family == "digraph":
        D = gen_random_digraph(n, p, graph_seed)
    else:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    return ListInstance(D, gen_random_lists(n, palette, 3, lists_seed))


def _run_trial(args):
    trial, seed, n_max, family, p, palette, budget = args
    inst = trial_instance(trial, seed, n_max, family, p, palette)
    try:
        res = search_list_coloring(inst.graph, inst.lists, MAJORITY, budget)
    except OracleBudgetExceeded as exc:
        return trial, inst, None, str(exc)
    return trial, inst, res, None


def search_majority3_counterexample(trials, n_max, seed, family="mixed", p=0.5, palette=5,
                                    budget=DEFAULT_BUDGET, workers=1):
    """Look for a digraph with 3-lists admitting no majority coloring.

    Each trial is a pure function of ``(seed, trial)``. The lowest-indexed
    counterexample is returned; finding none is evidence, not proof.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    jobs = [(i, seed, n_max, family, p, palette, budget) for i in range(trials)]
    skipped = []
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            outcomes = list(pool.map(_run_trial, jobs, chunksize=16))
    else:
        outcomes = map(_run_trial, jobs)
    for trial, inst, res, err in outcomes:
        if err is not None:
            log.warning("trial %d skipped: %s", trial, err)
            skipped.append(trial)
            continue
        if res.coloring is None:
            return SearchResult(trial + 1, Counterexample(trial, inst, res.candidates), tuple(skipped))
    return SearchResult(trials, None, tuple(skipped))

"""Seeded random instances.

Every generator draws from ``numpy.random.Generator(PCG64(seed))`` and is a
pure function of its arguments. Edge sets are sampled by geometric skipping
over the ``n*n`` grid of pairs, which includes each admissible pair
independently with probability ``p`` in time proportional to the output.
"""

import numpy as np

from .graph import Digraph, UndirectedGraph


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def _grid_sample(rng, n, p):
    """Indices into the ``n*n`` grid, each kept independently with probability p."""
    total = n * n
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if total == 0 or p == 0.0:
        return np.empty(0, dtype=np.int64)
    if p == 1.0:
        return np.arange(total, dtype=np.int64)
    chunks = []
    pos = -1
    chunk = int(total * p * 1.05) + 64
    while True:
        gaps = rng.geometric(p, size=chunk)
        idx = pos + np.cumsum(gaps, dtype=np.int64)
        if idx[-1] >= total:
            chunks.append(idx[idx < total])
            break
        chunks.append(idx)
        pos = int(idx[-1])
        chunk = max(64, int((total - pos) * p * 1.05) + 64)
    return np.concatenate(chunks)


def _out_lists(n, src, dst):
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    bounds = np.searchsorted(src, np.arange(n + 1))
    dst = dst.tolist()
    return [dst[bounds[v]:bounds[v + 1]] for v in range(n)]


def gen_random_digraph(n, p, seed):
    """Each ordered pair ``(u, v)``, ``u != v``, becomes an edge with probability ``p``."""
    rng = make_rng(seed)
    idx = _grid_sample(rng, n, p)
    src, dst = np.divmod(idx, n) if n else (idx, idx)
    keep = src != dst
    return Digraph._trusted(n, _out_lists(n, src[keep], dst[keep]))


def gen_random_dag(n, p, seed):
    """Random acyclic digraph: pairs ordered by a random permutation, kept with probability ``p``."""
    rng = make_rng(seed)
    perm = rng.permutation(n)
    idx = _grid_sample(rng, n, p)
    a, b = np.divmod(idx, n) if n else (idx, idx)
    keep = a < b
    return Digraph._trusted(n, _out_lists(n, perm[a[keep]], perm[b[keep]]))


def gen_random_tournament(n, seed):
    """Exactly one of ``(u, v)``, ``(v, u)`` per pair, each orientation with probability 1/2."""
    rng = make_rng(seed)
    a, b = np.triu_indices(n, k=1)
    flip = rng.random(a.size) < 0.5
    src = np.where(flip, b, a).astype(np.int64)
    dst = np.where(flip, a, b).astype(np.int64)
    return Digraph._trusted(n, _out_lists(n, src, dst))


def gen_random_graph(n, p, seed):
    """Undirected G(n, p)."""
    rng = make_rng(seed)
    idx = _grid_sample(rng, n, p)
    a, b = np.divmod(idx, n) if n else (idx, idx)
    keep = a < b
    return UndirectedGraph(n, zip(a[keep].tolist(), b[keep].tolist()))


def gen_random_lists(n, palette, list_size, seed):
    """Uniform ``list_size``-subsets of ``range(palette)``, each returned sorted."""
    if list_size > palette:
        raise ValueError(f"list size {list_size} exceeds palette {palette}")
    if list_size < 1:
        raise ValueError("list size must be positive")
    rng = make_rng(seed)
    keys = rng.random((n, palette))
    chosen = np.sort(np.argsort(keys, axis=1, kind="stable")[:, :list_size], axis=1)
    return [tuple(row) for row in chosen.tolist()]

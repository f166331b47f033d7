"""Exact canonical forms for small graphs.

Individualization-refinement: colour refinement to the coarsest equitable
partition, then branch on the vertices of the first smallest non-singleton
cell. Branches that differ only by swapping twin vertices (equal open or
closed neighbourhoods) are pruned, since the transposition is an
automorphism fixing everything already individualized. The key is the
lexicographically smallest upper-triangle adjacency bit string over all
surviving leaves.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .errors import CapacityError
from .graph import Graph

CanonicalForm = bytes

DEFAULT_CEILING = 12


def canon_ceiling() -> int:
    return int(os.environ.get("C4SPECTRA_CANON_CEILING", DEFAULT_CEILING))


def refine(adj, colors) -> list[int]:
    """Refine ``colors`` to the coarsest equitable partition below it.

    Returned colours are ranks of label-independent signatures, so they are
    preserved by isomorphisms.
    """
    ncls = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted([colors[w] for w in adj[v]]))) for v in range(len(adj))]
        uniq = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(uniq)}
        colors = [rank[s] for s in sigs]
        if len(uniq) == ncls:
            return colors
        ncls = len(uniq)


def equitable_coloring(g: Graph) -> list[int]:
    return refine(g.adj, [0] * g.n)


def equitable_partition(g: Graph) -> list[list[int]]:
    """Coarsest equitable partition, classes ordered by colour."""
    colors = equitable_coloring(g)
    classes: list[list[int]] = [[] for _ in range(max(colors, default=-1) + 1)]
    for v, c in enumerate(colors):
        classes[c].append(v)
    return classes


@lru_cache(maxsize=None)
def _pair_weights(n: int) -> tuple[tuple[int, ...], ...]:
    total = n * (n - 1) // 2
    w = [[0] * n for _ in range(n)]
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            w[i][j] = w[j][i] = 1 << (total - 1 - idx)
            idx += 1
    return tuple(tuple(row) for row in w)


@lru_cache(maxsize=1 << 18)
def canonical_labeling(g: Graph) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Return ``(key, perm)``; relabelling by ``perm`` yields the canonical graph."""
    if g.n > canon_ceiling():
        raise CapacityError(f"canonical form limited to n <= {canon_ceiling()}, got n={g.n}")
    n = g.n
    adj = g.adj
    edges = g.edges()
    weights = _pair_weights(n)
    masks = g.masks
    best_key = None
    best_perm = None

    def leaf(colors):
        nonlocal best_key, best_perm
        key = 0
        for u, v in edges:
            key |= weights[colors[u]][colors[v]]
        if best_key is None or key < best_key:
            best_key = key
            best_perm = tuple(colors)

    def search(colors):
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        if len(counts) == n:
            leaf(colors)
            return
        target = min((size, c) for c, size in counts.items() if size > 1)[1]
        seen_open = set()
        seen_closed = set()
        for v in range(n):
            if colors[v] != target:
                continue
            closed = masks[v] | (1 << v)
            if masks[v] in seen_open or closed in seen_closed:
                continue
            seen_open.add(masks[v])
            seen_closed.add(closed)
            nxt = [2 * c + (1 if c == target and w != v else 0) for w, c in enumerate(colors)]
            search(refine(adj, nxt))

    search(refine(adj, [0] * n))
    nbytes = (n * (n - 1) // 2 + 7) // 8
    key = n.to_bytes(2, "big") + (best_key or 0).to_bytes(nbytes, "big")
    return key, best_perm


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g)[1])


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1) == canonical_form(g2)

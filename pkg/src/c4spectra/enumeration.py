"""Isomorph-free generation of connected k-cyclic graphs.

Generation is by canonical augmentation. Trees grow one leaf at a time from
K1; a ``j``-cyclic graph grows into a ``(j+1)``-cyclic one by adding a
non-edge. A child is kept only if the piece just added is, up to
isomorphism, the child's canonical removable piece (its canonical leaf, or
its canonical cycle edge). Every isomorphism class then has exactly one
parent class, so parents can be processed independently and the results
merged. Duplicate children of the same parent are folded by canonical form.

C4-freeness and a maximum-degree cap are inherited by subgraphs, so both
prune during generation.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .canon import CanonicalForm, canonical_form, canonical_labeling, refine
from .errors import CapacityError, InvalidParameterError
from .graph import Graph, _reaches, creates_c4, is_c4_free, is_k_cyclic

DEFAULT_CEILING = 10
NAIVE_CEILING = 7
TIE_TOL = 1e-10


def enum_ceiling() -> int:
    return int(os.environ.get("C4SPECTRA_ENUM_CEILING", DEFAULT_CEILING))


@dataclass(frozen=True)
class EnumSpec:
    n: int
    k: int
    c4_free: bool = False
    max_degree: int | None = None
    min_degree: int | None = None
    ceiling: int | None = None

    def __post_init__(self):
        if self.n < 1 or self.k < 0:
            raise InvalidParameterError(f"need n >= 1 and k >= 0, got n={self.n}, k={self.k}")

    @property
    def m(self) -> int:
        return self.n + self.k - 1

    def accepts(self, g: Graph) -> bool:
        return (
            is_k_cyclic(g, self.k)
            and g.n == self.n
            and (not self.c4_free or is_c4_free(g))
            and (self.max_degree is None or g.max_degree <= self.max_degree)
            and (self.min_degree is None or g.min_degree >= self.min_degree)
        )


@dataclass
class EnumResult:
    spec: EnumSpec
    graphs: list[Graph]
    keys: list[CanonicalForm] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.graphs)


# -- augmentation steps -------------------------------------------------------

def _leaf_children(parent: Graph, max_degree: int | None) -> dict[CanonicalForm, Graph]:
    pkey = canonical_form(parent)
    new = parent.n
    out = {}
    for v in range(parent.n):
        if max_degree is not None and parent.degrees[v] + 1 > max_degree:
            continue
        masks = list(parent.masks) + [1 << v]
        masks[v] |= 1 << new
        child = Graph.from_masks(masks)
        leaves = [x for x in range(child.n) if child.degrees[x] == 1]
        colors = refine(child.adj, [0] * child.n)
        top = max(colors[x] for x in leaves)
        if colors[new] != top:
            continue
        key, perm = canonical_labeling(child)
        star = max((x for x in leaves if colors[x] == top), key=lambda x: perm[x])
        if star != new and canonical_form(_delete_vertex(child, star)) != pkey:
            continue
        out.setdefault(key, child)
    return out


def _edge_children(parent: Graph, c4_free: bool, max_degree: int | None) -> dict[CanonicalForm, Graph]:
    pkey = canonical_form(parent)
    degs = parent.degrees
    out = {}
    for u, v in combinations(range(parent.n), 2):
        if parent.has_edge(u, v):
            continue
        if max_degree is not None and max(degs[u], degs[v]) + 1 > max_degree:
            continue
        if c4_free and creates_c4(parent, u, v):
            continue
        masks = list(parent.masks)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        child = Graph.from_masks(masks)
        colors = refine(child.adj, [0] * child.n)
        cands = _top_cycle_edges(child, masks, colors)
        pair = (max(colors[u], colors[v]), min(colors[u], colors[v]))
        if pair != cands[0]:
            continue
        key, perm = canonical_labeling(child)
        star = max(cands[1], key=lambda e: (max(perm[e[0]], perm[e[1]]), min(perm[e[0]], perm[e[1]])))
        if star != (u, v) and canonical_form(child.remove_edge(*star)) != pkey:
            continue
        out.setdefault(key, child)
    return out


def _top_cycle_edges(g: Graph, masks: Sequence[int], colors: Sequence[int]):
    """Highest colour pair carried by a non-bridge edge, and all such edges."""
    by_pair: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for a, b in g.edges():
        by_pair.setdefault((max(colors[a], colors[b]), min(colors[a], colors[b])), []).append((a, b))
    for pair in sorted(by_pair, reverse=True):
        cyc = [e for e in by_pair[pair] if _on_cycle(masks, *e)]
        if cyc:
            return pair, cyc
    raise AssertionError("augmented graph has no cycle edge")


def _on_cycle(masks: Sequence[int], a: int, b: int) -> bool:
    m = list(masks)
    m[a] &= ~(1 << b)
    m[b] &= ~(1 << a)
    return _reaches(m, a, b)


def _delete_vertex(g: Graph, x: int) -> Graph:
    keep = [v for v in range(g.n) if v != x]
    index = {v: i for i, v in enumerate(keep)}
    return Graph.from_edges(g.n - 1, [(index[a], index[b]) for a, b in g.edges() if x not in (a, b)])


def _expand(parents: Sequence[Graph], step, workers: int) -> list[Graph]:
    merged: dict[CanonicalForm, Graph] = {}
    if workers > 1 and len(parents) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(step, parents, chunksize=max(1, len(parents) // (4 * workers))):
                merged.update(part)
    else:
        for p in parents:
            merged.update(step(p))
    return [_canonical_rep(merged[k]) for k in sorted(merged)]


def _canonical_rep(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g)[1])


class _LeafStep:
    def __init__(self, max_degree):
        self.max_degree = max_degree

    def __call__(self, parent):
        return _leaf_children(parent, self.max_degree)


class _EdgeStep:
    def __init__(self, c4_free, max_degree):
        self.c4_free = c4_free
        self.max_degree = max_degree

    def __call__(self, parent):
        return _edge_children(parent, self.c4_free, self.max_degree)


@lru_cache(maxsize=None)
def trees(n: int, max_degree: int | None = None, workers: int = 1) -> tuple[Graph, ...]:
    """All trees on ``n`` vertices, canonical representatives in key order."""
    level = [Graph.from_edges(1, [])]
    for _ in range(n - 1):
        level = _expand(level, _LeafStep(max_degree), workers)
    return tuple(level)


@lru_cache(maxsize=None)
def levels(n: int, k_max: int, c4_free: bool = False, max_degree: int | None = None,
           workers: int = 1) -> tuple[tuple[Graph, ...], ...]:
    """Connected ``j``-cyclic graphs on ``n`` vertices for ``j = 0..k_max``."""
    out = [trees(n, max_degree, workers)]
    step = _EdgeStep(c4_free, max_degree)
    for _ in range(k_max):
        out.append(tuple(_expand(out[-1], step, workers)))
    return tuple(out)


# -- public API -----------------------------------------------------------------

def enumerate_graphs(spec: EnumSpec, workers: int = 1) -> EnumResult:
    """One canonical representative per isomorphism class matching ``spec``."""
    ceiling = spec.ceiling if spec.ceiling is not None else enum_ceiling()
    if spec.n > ceiling:
        raise CapacityError(f"enumeration limited to n <= {ceiling}, got n={spec.n}")
    if spec.m > spec.n * (spec.n - 1) // 2 or spec.m < spec.n - 1:
        return EnumResult(spec, [], [])
    graphs = [g for g in levels(spec.n, spec.k, spec.c4_free, spec.max_degree, workers)[spec.k]
              if spec.min_degree is None or g.min_degree >= spec.min_degree]
    for g in graphs:
        if not spec.accepts(g):
            raise AssertionError(f"generator produced a graph outside the request: {g}")
    return EnumResult(spec, graphs, [canonical_form(g) for g in graphs])


def enumerate_unicyclic_c4free(n: int, workers: int = 1) -> EnumResult:
    return enumerate_graphs(EnumSpec(n, 1, c4_free=True), workers)


def enumerate_bicyclic_c4free(n: int, workers: int = 1) -> EnumResult:
    return enumerate_graphs(EnumSpec(n, 2, c4_free=True), workers)


def connected_graphs(n: int, c4_free: bool = False) -> list[Graph]:
    """Every connected graph on exactly ``n`` vertices, all edge counts."""
    if n == 1:
        return [Graph.from_edges(1, [])]
    k_max = n * (n - 1) // 2 - n + 1
    return [g for level in levels(n, k_max, c4_free) for g in level]


def corpus(n_max: int, c4_free: bool = False, n_min: int = 2) -> list[Graph]:
    return [g for n in range(n_min, n_max + 1) for g in connected_graphs(n, c4_free)]


def naive_enumerate(spec: EnumSpec) -> EnumResult:
    """Oracle: test every ``m``-subset of the complete graph's edges, then dedup."""
    if spec.n > NAIVE_CEILING:
        raise CapacityError(f"naive enumeration limited to n <= {NAIVE_CEILING}")
    pairs = list(combinations(range(spec.n), 2))
    found: dict[CanonicalForm, Graph] = {}
    if spec.m <= len(pairs):
        for subset in combinations(pairs, spec.m):
            g = Graph.from_edges(spec.n, subset)
            if spec.accepts(g):
                found.setdefault(canonical_form(g), g)
    keys = sorted(found)
    return EnumResult(spec, [found[k] for k in keys], keys)


# -- ranking ------------------------------------------------------------------

@dataclass
class Ranking:
    which: str
    entries: list[tuple[Graph, float]]
    keys: list[CanonicalForm]
    ties: list[tuple[int, int]]
    failures: list[tuple[CanonicalForm, str]]


def rank_by_index(result: EnumResult | Iterable[Graph], which: str = "q", top: int | None = None) -> Ranking:
    """Sort graphs by spectral index, descending; near-ties ordered by canonical form."""
    from .spectral import index

    if top is not None and top < 1:
        raise InvalidParameterError("top must be >= 1")
    graphs = result.graphs if isinstance(result, EnumResult) else list(result)
    rows = []
    failures = []
    for g in graphs:
        key = canonical_form(g)
        try:
            rows.append((index(g, which), key, g))
        except ArithmeticError as exc:
            failures.append((key, str(exc)))
    rows.sort(key=lambda r: (-r[0], r[1]))
    # group chains of near-equal values and order each group by key
    ordered, ties = [], []
    i = 0
    while i < len(rows):
        j = i + 1
        while j < len(rows) and rows[j - 1][0] - rows[j][0] <= TIE_TOL:
            j += 1
        group = sorted(rows[i:j], key=lambda r: r[1])
        if len(group) > 1:
            ties.append((i, j))
        ordered.extend(group)
        i = j
    ordered = ordered[:top] if top is not None else ordered
    ties = [(a, min(b, len(ordered))) for a, b in ties if a < len(ordered)]
    return Ranking(which, [(g, v) for v, _, g in ordered], [k for _, k, _ in ordered], ties, failures)


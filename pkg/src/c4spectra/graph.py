"""Simple undirected graphs, named families and structural predicates.

Vertices are ``0..n-1``. Every constructor in this module puts the hub
(the vertex of maximum degree) at index 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidParameterError, InvalidInputError


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InvalidInputError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise InvalidInputError(f"neighbors of {u} must be sorted and distinct")
            for v in nbrs:
                if v == u:
                    raise InvalidInputError(f"self-loop at {u}")
                if not 0 <= v < self.n or u not in self.adj[v]:
                    raise InvalidInputError(f"asymmetric adjacency at {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise InvalidInputError("n must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InvalidInputError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge {u}-{v} out of range for n={n}")
            if v in nbrs[u]:
                raise InvalidInputError(f"parallel edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        n = len(masks)
        return cls(n, tuple(tuple(v for v in range(n) if m >> v & 1) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbor sets as bitmasks."""
        return tuple(sum(1 << v for v in nbrs) for nbrs in self.adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree_sequence(self) -> list[int]:
        return sorted(self.degrees, reverse=True)

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + [(u, v)])

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = (min(u, v), max(u, v))
        edges = self.edges()
        if e not in edges:
            raise InvalidInputError(f"no edge {u}-{v}")
        edges.remove(e)
        return Graph.from_edges(self.n, edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidInputError("relabeling must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self.masks[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append([v for v in range(self.n) if comp >> v & 1])
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def bipartition(self) -> list[int] | None:
        """Side (0/1) of each vertex, or None when an odd cycle exists."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for v in self.adj[u]:
                    if side[v] < 0:
                        side[v] = 1 - side[u]
                        stack.append(v)
                    elif side[v] == side[u]:
                        return None
        return side

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- named families ---------------------------------------------------------

def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    _require(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


NAMED_FAMILIES = {"path": path, "star": star, "cycle": cycle, "complete": complete}


def build_named(family: str, n: int) -> Graph:
    try:
        ctor = NAMED_FAMILIES[family]
    except KeyError:
        raise InvalidParameterError(f"unknown family {family!r}") from None
    return ctor(n)


# -- graph algebra ----------------------------------------------------------

def union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    return Graph.from_edges(g1.n + g2.n, g1.edges() + [(u + off, v + off) for u, v in g2.edges()])


def join(g1: Graph, g2: Graph) -> Graph:
    cross = [(u, g1.n + v) for u in range(g1.n) for v in range(g2.n)]
    return Graph.from_edges(g1.n + g2.n, union(g1, g2).edges() + cross)


def copies(g: Graph, k: int) -> Graph:
    _require(k >= 1, "copies needs k >= 1")
    out = g
    for _ in range(k - 1):
        out = union(out, g)
    return out


# -- the extremal families --------------------------------------------------

def build_extremal(n: int, k: int) -> Graph:
    """Hub joined to ``k`` disjoint edges and ``n - 2k - 1`` isolated vertices.

    Vertex 0 is the hub, ``1..2k`` are the matched pairs ``(1,2), (3,4), ...``
    and the remaining vertices are pendants.
    """
    _require(k >= 1 and n >= 2 * k + 1, f"need k >= 1 and n >= 2k+1, got n={n}, k={k}")
    rest = copies(complete(2), k)
    if n - 2 * k - 1 > 0:
        rest = union(rest, copies(complete(1), n - 2 * k - 1))
    return join(complete(1), rest)


def build_delta_n2_unicyclic(n: int, variant: str) -> Graph:
    """Triangle ``{0,1,2}`` plus ``n-4`` pendants on the hub and one extra vertex.

    Variant ``A`` hangs the extra vertex ``n-1`` on the hub's pendant 3;
    variant ``B`` hangs it on the triangle vertex 1.
    """
    _require(n >= 6, f"need n >= 6, got {n}")
    edges = [(0, 1), (0, 2), (1, 2)] + [(0, i) for i in range(3, n - 1)]
    return Graph.from_edges(n, edges + [(_anchor(variant, 3, 1), n - 1)])


def build_delta_n2_bicyclic(n: int, variant: str) -> Graph:
    """Hub triangles ``{0,1,2}`` and ``{0,3,4}``, ``n-6`` hub pendants, one extra vertex.

    Variant ``A`` hangs the extra vertex on the pendant 5, variant ``B`` on
    the triangle vertex 1.
    """
    _require(n >= 8, f"need n >= 8, got {n}")
    return _delta_n2_bicyclic(n, variant)


def _delta_n2_bicyclic(n: int, variant: str) -> Graph:
    # also well defined at n = 7, used only for the small-order probe
    _require(n >= 7, f"need n >= 7, got {n}")
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)] + [(0, i) for i in range(5, n - 1)]
    return Graph.from_edges(n, edges + [(_anchor(variant, 5, 1), n - 1)])


def _anchor(variant: str, pendant: int, triangle: int) -> int:
    if variant == "A":
        return pendant
    if variant == "B":
        return triangle
    raise InvalidParameterError(f"variant must be 'A' or 'B', got {variant!r}")


# -- predicates -------------------------------------------------------------

def is_c4_free(g: Graph) -> bool:
    """True iff no two vertices share two or more neighbors."""
    masks = g.masks
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = masks[u] & masks[v]
            if common & (common - 1):
                return False
    return True


def creates_c4(g: Graph, u: int, v: int) -> bool:
    """Whether adding the non-edge ``uv`` to a C4-free graph creates a 4-cycle.

    Every new 4-cycle runs through ``uv``, i.e. ``u - a - b - v`` with ``a ~ b``.
    """
    masks = g.masks
    far = masks[v] & ~(1 << u)
    for a in g.adj[u]:
        if masks[a] & far:
            return True
    return False


def cyclomatic_number(g: Graph) -> int:
    return g.m - g.n + len(g.components())


def is_k_cyclic(g: Graph, k: int) -> bool:
    return g.is_connected() and g.m == g.n + k - 1


def bridges(g: Graph) -> set[tuple[int, int]]:
    """Edges ``(u, v)``, ``u < v``, whose removal disconnects their component."""
    out = set()
    for u, v in g.edges():
        masks = list(g.masks)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        if not _reaches(masks, u, v):
            out.add((u, v))
    return out


def _reaches(masks: Sequence[int], s: int, t: int) -> bool:
    comp = frontier = 1 << s
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        if nxt >> t & 1:
            return True
        frontier = nxt & ~comp
        comp |= nxt
    return s == t


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise InvalidParameterError(message)

"""Graph matrices, dominant eigenpairs, Perron vectors, quotients and edge shifts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ConvergenceError,
    EquitabilityError,
    InvalidInputError,
    InvalidShiftError,
    NumericalError,
    PreconditionError,
)
from .graph import Graph

# Full diagonalization up to this dimension, power iteration above it.
DENSE_LIMIT = 64
MAX_ITER = 100_000


@dataclass(frozen=True)
class EigenResult:
    value: float
    vector: np.ndarray
    residual: float


def default_tol(dim: int) -> float:
    return 1e-10 * max(dim, 1)


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def laplacian(g: Graph) -> np.ndarray:
    return np.diag(np.asarray(g.degrees, dtype=float)) - adjacency(g)


def signless_laplacian(g: Graph) -> np.ndarray:
    return np.diag(np.asarray(g.degrees, dtype=float)) + adjacency(g)


def jacobi_eigh(m: np.ndarray, tol: float = 1e-14, max_sweeps: int = 100):
    """Cyclic Jacobi diagonalization of a symmetric matrix.

    Returns ascending eigenvalues and the matching orthonormal eigenvectors
    as columns.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    scale = max(np.abs(a).max(), 1.0)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta == 0:
                    t = 1.0
                elif abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise ConvergenceError("Jacobi sweeps did not converge", best=np.diag(a).copy())
    order = np.argsort(np.diag(a))
    return np.diag(a)[order], v[:, order]


def spectrum(m: np.ndarray, method: str = "eigh") -> np.ndarray:
    """All eigenvalues, ascending."""
    if method == "jacobi":
        return jacobi_eigh(m)[0]
    return np.linalg.eigvalsh(m)


def power_iteration(m: np.ndarray, tol: float, max_iter: int = MAX_ITER, x0=None) -> EigenResult:
    """Largest eigenpair via power iteration on ``m - shift*I``.

    ``shift`` is the Gershgorin lower bound when that is negative, else 0, so
    the iterated matrix is positive semidefinite and its dominant eigenvalue is
    the largest one of ``m``.
    """
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    radii = np.abs(m).sum(axis=1) - np.abs(np.diag(m))
    shift = min(0.0, float(np.min(np.diag(m) - radii)))
    x = np.ones(n) / np.sqrt(n) if x0 is None else np.asarray(x0, dtype=float) / np.linalg.norm(x0)
    best = None
    for _ in range(max_iter):
        y = m @ x
        lam = float(x @ y)
        residual = float(np.linalg.norm(y - lam * x))
        best = EigenResult(lam, x, residual)
        if residual <= tol:
            return best
        y = y - shift * x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return best
        x = y / norm
    raise ConvergenceError(f"power iteration stalled at residual {best.residual:.3e}", best=best)


def dominant_eigenpair(m: np.ndarray, tol: float | None = None, method: str = "auto") -> EigenResult:
    """Largest eigenvalue of a symmetric matrix with a unit eigenvector.

    ``method`` is ``"eigh"`` (LAPACK), ``"jacobi"``, ``"power"`` or ``"auto"``
    (dense up to ``DENSE_LIMIT``, power iteration above). The residual
    ``||Mx - lambda x||`` is checked against ``tol`` whatever the method.
    """
    m = np.asarray(m, dtype=float)
    dim = m.shape[0]
    if dim < 1 or m.shape != (dim, dim):
        raise InvalidInputError("need a nonempty square matrix")
    tol = default_tol(dim) if tol is None else tol
    if tol <= 0:
        raise InvalidInputError("tol must be positive")
    if method == "auto":
        method = "eigh" if dim <= DENSE_LIMIT else "power"
    if method == "power":
        return power_iteration(m, tol)
    if method == "jacobi":
        vals, vecs = jacobi_eigh(m)
    elif method == "eigh":
        vals, vecs = np.linalg.eigh(m)
    else:
        raise InvalidInputError(f"unknown method {method!r}")
    lam = float(vals[-1])
    x = vecs[:, -1]
    residual = float(np.linalg.norm(m @ x - lam * x))
    if residual > tol:
        raise ConvergenceError(f"residual {residual:.3e} exceeds tol {tol:.3e}", best=EigenResult(lam, x, residual))
    return EigenResult(lam, x, residual)


def q_index(g: Graph, tol: float | None = None) -> float:
    _nonempty(g)
    return dominant_eigenpair(signless_laplacian(g), tol).value


def mu_index(g: Graph, tol: float | None = None) -> float:
    _nonempty(g)
    return dominant_eigenpair(laplacian(g), tol).value


def index(g: Graph, which: str = "q", tol: float | None = None) -> float:
    if which == "q":
        return q_index(g, tol)
    if which == "mu":
        return mu_index(g, tol)
    raise InvalidInputError(f"index must be 'q' or 'mu', got {which!r}")


def perron_vector(g: Graph, tol: float | None = None) -> EigenResult:
    """Dominant eigenpair of Q(g) with the eigenvector made strictly positive."""
    if not g.is_connected():
        raise PreconditionError("Perron vector needs a connected graph")
    res = dominant_eigenpair(signless_laplacian(g), tol)
    x = res.vector
    if x[np.argmax(np.abs(x))] < 0:
        x = -x
    if np.any(x <= 0):
        raise NumericalError(f"nonpositive Perron entry {x.min():.3e}")
    return EigenResult(res.value, x, res.residual)


def edge_shift(g: Graph, u: int, v: int, targets: Iterable[int]) -> Graph:
    """Move the edges ``v t`` (``t`` in targets) over to ``u t``."""
    targets = sorted(set(targets))
    if u == v:
        raise InvalidShiftError("u and v must differ")
    if not 1 <= len(targets) <= g.degrees[v]:
        raise InvalidShiftError(f"need 1 <= |targets| <= d(v) = {g.degrees[v]}")
    for t in targets:
        if t in (u, v):
            raise InvalidShiftError(f"target {t} is one of the shift endpoints", target=t)
        if not g.has_edge(v, t):
            raise InvalidShiftError(f"target {t} is not a neighbor of v={v}", target=t)
        if g.has_edge(u, t):
            raise InvalidShiftError(f"target {t} is already a neighbor of u={u}", target=t)
    moved = {(min(v, t), max(v, t)) for t in targets}
    edges = [e for e in g.edges() if e not in moved] + [(u, t) for t in targets]
    return Graph.from_edges(g.n, edges)


def quotient_matrix(g: Graph, partition: Sequence[Sequence[int]]) -> np.ndarray:
    """Quotient of Q(g) over an equitable partition (integer matrix).

    Entry ``(i, j)`` counts the neighbours a class-``i`` vertex has in class
    ``j``; the diagonal also carries the class degree.
    """
    cls = {}
    for i, block in enumerate(partition):
        for v in block:
            if v in cls:
                raise EquitabilityError(f"vertex {v} appears in two classes")
            cls[v] = i
    if sorted(cls) != list(range(g.n)) or any(len(b) == 0 for b in partition):
        raise EquitabilityError("partition must cover every vertex with nonempty classes")
    k = len(partition)
    b = np.zeros((k, k), dtype=np.int64)
    for i, block in enumerate(partition):
        rows = []
        for v in block:
            row = [0] * k
            for w in g.adj[v]:
                row[cls[w]] += 1
            rows.append((v, row))
        v0, row0 = rows[0]
        for v, row in rows[1:]:
            if row != row0:
                raise EquitabilityError(f"vertices {v0} and {v} in class {i} see classes differently", pair=(v0, v))
        b[i] = row0
        b[i, i] += g.degrees[v0]
    return b


def quotient_index(b: np.ndarray, sizes: Sequence[int], tol: float | None = None) -> float:
    """Largest eigenvalue of a quotient via its symmetrization ``S^1/2 B S^-1/2``."""
    s = np.sqrt(np.asarray(sizes, dtype=float))
    sym = (s[:, None] * np.asarray(b, dtype=float)) / s[None, :]
    sym = (sym + sym.T) / 2.0
    return dominant_eigenpair(sym, tol).value


def _nonempty(g: Graph) -> None:
    if g.n < 1:
        raise InvalidInputError("graph has no vertices")

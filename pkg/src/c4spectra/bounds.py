"""Characteristic-polynomial families, largest-root isolation and degree bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInputError, InvalidParameterError, NoRootError, PreconditionError
from .graph import Graph
from .spectral import mu_index, q_index

STRICT_TOL = 1e-9


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with exact coefficients, lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) if c else (0,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs != (0,) else -1

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return Polynomial(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:] or (0,))

    def shift(self, a) -> "Polynomial":
        """``p(y + a)`` as a polynomial in ``y``."""
        out = Polynomial((0,))
        base = Polynomial((a, 1))
        for c in reversed(self.coeffs):
            out = out * base + Polynomial((c,))
        return out

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            body = {0: f"{mag}", 1: "x" if mag == 1 else f"{mag}x"}.get(i, f"x^{i}" if mag == 1 else f"{mag}x^{i}")
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def poly_fk(n: int, k: int) -> Polynomial:
    if k < 1 or n < 2 * k + 1:
        raise InvalidParameterError(f"need k >= 1 and n >= 2k+1, got n={n}, k={k}")
    return Polynomial((-4 * k, 3 * n, -(n + 3), 1))


def poly_f2(n: int) -> Polynomial:
    if n < 6:
        raise InvalidParameterError(f"need n >= 6, got {n}")
    return Polynomial((-4, 3 * n + 8, -(9 * n - 1), 6 * n + 3, -(n + 5), 1))


def poly_f3(n: int) -> Polynomial:
    if n < 6:
        raise InvalidParameterError(f"need n >= 6, got {n}")
    return Polynomial((-4, 3 * n + 12, -(10 * n - 2), 6 * n + 4, -(n + 5), 1))


def poly_F(n: int) -> Polynomial:
    """``x^3 - (n-1)x^2 + 4x``, the difference of the two quintics."""
    return Polynomial((0, 4, -(n - 1), 1))


def charpoly(matrix: Sequence[Sequence[int]]) -> Polynomial:
    """Exact characteristic polynomial ``det(xI - M)`` (Faddeev-LeVerrier)."""
    a = [[Fraction(int(x)) for x in row] for row in matrix]
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prev = mk
        mk = [[sum(a[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise InvalidInputError("integer matrix produced a non-integral coefficient")
        out.append(int(c))
    return Polynomial(tuple(out))


def largest_real_root(p: Polynomial, lo: float, hi: float, tol: float = 1e-12, steps: int = 1024) -> float:
    """Largest root of ``p`` in ``(lo, hi]``.

    Scans downward from ``hi`` on a grid of ``steps`` cells for the first sign
    change, bisects it to ``tol`` and finishes with two guarded Newton steps.
    """
    if not hi > lo:
        raise InvalidInputError(f"need lo < hi, got ({lo}, {hi})")
    f = lambda x: float(p(x))  # noqa: E731
    h = (hi - lo) / steps
    b, fb = hi, f(hi)
    if fb == 0.0:
        return hi
    for i in range(1, steps + 1):
        a = hi - i * h if i < steps else lo
        fa = f(a)
        if fa == 0.0:
            if a > lo:
                return a
            break
        if (fa < 0) != (fb < 0):
            break
        b, fb = a, fa
    else:
        raise NoRootError(f"no sign change of {p} in ({lo}, {hi}]")
    if fa == 0.0 or (fa < 0) == (fb < 0):
        raise NoRootError(f"no sign change of {p} in ({lo}, {hi}]")
    while b - a > tol:
        mid = 0.5 * (a + b)
        fm = f(mid)
        if fm == 0.0:
            a = b = mid
            break
        if (fm < 0) == (fa < 0):
            a, fa = mid, fm
        else:
            b = mid
    x = 0.5 * (a + b)
    dp = p.derivative()
    for _ in range(2):
        d = float(dp(x))
        if d == 0.0:
            break
        nx = x - f(x) / d
        if a - tol <= nx <= b + tol and abs(f(nx)) <= abs(f(x)):
            x = nx
    return x


def thm31_bound(n: int, k: int) -> float:
    """q of the extremal C4-free k-cyclic graph, as the largest root of f_k."""
    if k < 1 or n < 2 * k + 2:
        raise InvalidParameterError(f"need k >= 1 and n >= 2k+2, got n={n}, k={k}")
    return largest_real_root(poly_fk(n, k), n, 2 * (n - 1), 1e-12)


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    value: float
    achieving_vertex: int | None = None
    equality_class: str | None = None


def equality_class(g: Graph) -> str:
    """``regular``, ``semiregular-bipartite`` or ``none``, decided structurally."""
    degs = g.degrees
    if len(set(degs)) <= 1:
        return "regular"
    side = g.bipartition()
    if side is None:
        return "none"
    pairs = set()
    for comp in g.components():
        left = {degs[v] for v in comp if side[v] == 0}
        right = {degs[v] for v in comp if side[v] == 1}
        if len(left) != 1 or len(right) != 1:
            return "none"
        pairs.add(frozenset((left.pop(), right.pop())))
    return "semiregular-bipartite" if len(pairs) == 1 else "none"


def merris_bound(g: Graph) -> BoundReport:
    """``max_u d(u) + (1/d(u)) sum_{v ~ u} d(v)`` with its maximizing vertex."""
    degs = g.degrees
    if g.n == 0 or min(degs) == 0:
        raise InvalidInputError("bound needs a graph without isolated vertices")
    vals = [degs[u] + Fraction(sum(degs[v] for v in g.adj[u]), degs[u]) for u in range(g.n)]
    best = max(vals)
    return BoundReport("merris", float(best), vals.index(best), equality_class(g))


@dataclass(frozen=True)
class DeltaCheck:
    delta: int
    q: float
    mu: float
    q_lower_ok: bool
    mu_lower_ok: bool
    q_equality: bool
    mu_equality: bool
    q_equality_observed: bool
    mu_equality_observed: bool


def is_star(g: Graph) -> bool:
    return g.n >= 2 and g.m == g.n - 1 and g.max_degree == g.n - 1


def delta_plus_one_check(g: Graph, tol: float = STRICT_TOL) -> DeltaCheck:
    """Both ``Delta + 1`` lower bounds, with structural and numerical equality flags."""
    if g.m == 0 or not g.is_connected():
        raise PreconditionError("need a connected graph with at least one edge")
    delta = g.max_degree
    q, mu = q_index(g), mu_index(g)
    return DeltaCheck(
        delta=delta,
        q=q,
        mu=mu,
        q_lower_ok=q >= delta + 1 - tol,
        mu_lower_ok=mu >= delta + 1 - tol,
        q_equality=is_star(g),
        mu_equality=delta == g.n - 1,
        q_equality_observed=math.isclose(q, delta + 1, rel_tol=0, abs_tol=tol),
        mu_equality_observed=math.isclose(mu, delta + 1, rel_tol=0, abs_tol=tol),
    )

"""Graph interchange: graph6, the ``n m`` edge-list text format, constructor DSL."""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .graph import (
    Graph,
    build_delta_n2_bicyclic,
    build_delta_n2_unicyclic,
    build_extremal,
    build_named,
)


# -- graph6 -----------------------------------------------------------------

def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126]) + bytes(((n >> s) & 63) + 63 for s in (12, 6, 0))
    raise ParseError(f"graph6 supports n < 258048 here, got {n}")


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = bytes(63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6))
    return (_encode_size(g.n) + body).decode("ascii")


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("utf-8")
    if not data or any(not 63 <= b <= 126 for b in data):
        raise ParseError(f"invalid graph6 string {s!r}")
    if data[0] != 126:
        n, rest = data[0] - 63, data[1:]
    elif len(data) >= 4 and data[1] != 126:
        n = sum((data[1 + i] - 63) << shift for i, shift in enumerate((12, 6, 0)))
        rest = data[4:]
    else:
        raise ParseError(f"unsupported graph6 size header in {s!r}")
    npairs = n * (n - 1) // 2
    if len(rest) != (npairs + 5) // 6:
        raise ParseError(f"graph6 body has {len(rest)} bytes, expected {(npairs + 5) // 6} for n={n}")
    bits = []
    for b in rest:
        v = b - 63
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    if any(bits[npairs:]):
        raise ParseError("graph6 padding bits must be zero")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


# -- "n m" edge list -----------------------------------------------------------

def to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    try:
        n, m = map(int, rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except (IndexError, ValueError):
        raise ParseError("expected 'n m' header followed by 'u v' lines") from None
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def read_graph_file(path: str | Path) -> Graph:
    return from_text(Path(path).read_text())


# -- constructor DSL ----------------------------------------------------------

_DSL = re.compile(r"^(path|star|cycle|complete|gnk|u2|b2):(\d+)(?:,(\d+|[AB]))?$")

DSL_TAGS = ("path", "star", "cycle", "complete", "gnk", "u2", "b2", "g6")


def parse_graph(spec: str) -> Graph:
    """Build a graph from ``"star:5"``, ``"gnk:7,2"``, ``"u2:6,A"``, ``"g6:D?{"`` ..."""
    spec = spec.strip()
    if spec.startswith("g6:"):
        return from_graph6(spec[3:])
    match = _DSL.match(spec)
    if not match:
        raise ParseError(f"unrecognised graph spec {spec!r}; tags: {', '.join(DSL_TAGS)}")
    tag, n, arg = match.group(1), int(match.group(2)), match.group(3)
    if tag in ("path", "star", "cycle", "complete"):
        if arg is not None:
            raise ParseError(f"{tag} takes a single argument")
        return build_named(tag, n)
    if tag == "gnk":
        if arg is None or not arg.isdigit():
            raise ParseError("gnk needs 'gnk:n,k'")
        return build_extremal(n, int(arg))
    if arg not in ("A", "B"):
        raise ParseError(f"{tag} needs a variant A or B")
    build = build_delta_n2_unicyclic if tag == "u2" else build_delta_n2_bicyclic
    return build(n, arg)

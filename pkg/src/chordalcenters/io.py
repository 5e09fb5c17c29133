"""Graph ingestion and serialization: graph6 and labeled edge lists.

graph6 follows the standard small-graph encoding (n <= 62: one byte n+63,
then the column-major upper-triangle bits packed six per byte, each +63).
Edge lists are one "u v" pair per line; blank lines and '#' comments are
ignored and labels map to dense indices in first-seen order.
"""

from __future__ import annotations

from .graph import Graph, GraphError

_G6_MAX = 62
_HEADER = ">>graph6<<"


class FormatError(GraphError):
    """Malformed serialized graph."""


def _g6_slots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 1 <= n <= _G6_MAX:
        raise FormatError(f"unsupported graph6 order byte {s[0]!r} (n={n})")
    slots = _g6_slots(n)
    need = (len(slots) + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise FormatError(f"invalid graph6 byte {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[len(slots):]):
        raise FormatError("nonzero padding bits in graph6 body")
    edges = [slots[i] for i, b in enumerate(bits[: len(slots)]) if b]
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > _G6_MAX:
        raise FormatError(f"graph6 supports up to {_G6_MAX} vertices, got {g.n}")
    slots = _g6_slots(g.n)
    bits = [1 if g.has_edge(i, j) else 0 for (i, j) in slots]
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


def parse_edge_list(text: str) -> tuple[Graph, tuple[str, ...]]:
    """Parse a labeled edge list; returns the graph and its external labels."""
    labels: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        idx = []
        for token in parts:
            if token not in labels:
                labels[token] = len(labels)
                if len(labels) > _G6_MAX:
                    raise FormatError(f"line {lineno}: more than {_G6_MAX} labels")
            idx.append(labels[token])
        u, v = idx
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {parts[0]!r}")
        key = frozenset((u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {raw!r}")
        seen.add(key)
        edges.append((u, v))
    if not labels:
        raise FormatError("edge list is empty")
    ordered = tuple(sorted(labels, key=labels.get))
    return Graph(len(labels), edges), ordered


def to_edge_list(g: Graph, labels: tuple[str, ...] | None = None) -> str:
    if labels is None:
        labels = tuple(str(v) for v in range(g.n))
    return "\n".join(f"{labels[u]} {labels[v]}" for u, v in g.edges()) + "\n"


def parse_graph(text: str, format: str) -> tuple[Graph, tuple[str, ...]]:
    """Parse either format; returns the graph plus external vertex labels."""
    if format in ("g6", "graph6"):
        g = parse_graph6(text)
        return g, tuple(str(v) for v in range(g.n))
    if format == "edge-list":
        return parse_edge_list(text)
    raise FormatError(f"unknown format {format!r}; expected g6 or edge-list")


# A 9-vertex 2-connected chordal example whose center induces K4 but which is
# not the center of any chordal graph.  Ships as the built-in fixture "fig1";
# external labels are "1".."9" with label i mapping to index i-1.
_FIG1_EDGES_1BASED = [
    (7, 6), (7, 8), (6, 8), (5, 9), (5, 8), (5, 6), (5, 3), (5, 2),
    (5, 1), (1, 2), (2, 3), (3, 9), (3, 8), (3, 4), (4, 9), (9, 8),
]


def fixture_fig1() -> tuple[Graph, tuple[str, ...]]:
    g = Graph(9, [(a - 1, b - 1) for a, b in _FIG1_EDGES_1BASED])
    return g, tuple(str(i) for i in range(1, 10))


FIXTURES = {"fig1": fixture_fig1}

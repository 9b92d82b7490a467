"""Text formats for graphs: graph6 and the plain edge list.

graph6 packing is delegated to networkx; this module owns validation so that
malformed input surfaces as :class:`Graph6Error` rather than whatever the
underlying parser happens to raise.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

import networkx as nx

from hlindex.core.graph import Graph
from hlindex.errors import Graph6Error, GraphError

GRAPH6_HEADER = ">>graph6<<"


def _header_length(n: int) -> int:
    if n <= 62:
        return 1
    if n <= 258047:
        return 4
    return 8


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, header byte count) from the leading N(n) field."""
    if not data:
        raise Graph6Error("truncated graph6 string: empty input")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated graph6 header")
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated graph6 header")
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - 63)
    return n, 4


def graph6_encode(g: Graph) -> str:
    raw = nx.to_graph6_bytes(g.to_networkx(), nodes=list(range(g.n)), header=False)
    return raw.decode("ascii").strip()


def graph6_decode(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error(f"non-ASCII character in graph6 string {line!r}") from exc
    bad = [chr(c) for c in data if not 63 <= c <= 126]
    if bad:
        raise Graph6Error(f"malformed graph6 character {bad[0]!r} (outside 63..126)")
    n, offset = _decode_n(data)
    needed = -(-(n * (n - 1) // 2) // 6)
    body = len(data) - offset
    if body < needed:
        raise Graph6Error(f"truncated graph6 bit vector: need {needed} bytes, got {body}")
    if body > needed:
        raise Graph6Error(f"graph6 string has {body - needed} trailing bytes")
    try:
        g = nx.from_graph6_bytes(data)
    except nx.NetworkXError as exc:
        raise Graph6Error(str(exc)) from exc
    return Graph.from_edge_list(n, g.edges())


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line."""
    for line in lines:
        if line.strip():
            yield graph6_decode(line)


def edge_list_encode(g: Graph) -> str:
    rows = [f"{g.n} {g.edge_count}"]
    rows.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(rows) + "\n"


def edge_list_decode(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise GraphError("empty edge list")
    try:
        n, m = (int(tok) for tok in rows[0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise GraphError(f"edge list declares {m} edges but has {len(edges)}")
    return Graph.from_edge_list(n, edges)


def detect_format(text: str) -> str:
    """'edgelist' when the first non-blank line has whitespace, else 'graph6'."""
    for line in text.splitlines():
        if line.strip():
            return "edgelist" if len(line.split()) > 1 else "graph6"
    raise GraphError("empty graph input")


def parse_graphs(text: str, fmt: str | None = None) -> list[Graph]:
    fmt = fmt or detect_format(text)
    if fmt == "graph6":
        return list(iter_graph6_lines(text.splitlines()))
    if fmt == "edgelist":
        return [edge_list_decode(text)]
    raise GraphError(f"unknown graph format {fmt!r}")

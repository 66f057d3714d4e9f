"""graph6 and plain edge-list text formats.

graph6 layout: a size header ``N(n)`` followed by the upper triangle of
the adjacency matrix read column by column (``(0,1), (0,2), (1,2), (0,3),
...``), packed big-endian into 6-bit groups, each group offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import (
    EdgeListError,
    Graph6Error,
    LoopEdge,
    MalformedHeader,
    TrailingGarbage,
    TruncatedBits,
    VertexOutOfRange,
)
from .graph import Graph

_HEADER = ">>graph6<<"
_MAX_N = 68719476735  # 2**36 - 1


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= _MAX_N:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n={n}")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise MalformedHeader("empty graph6 string")
    if data[0] != 126:
        if not 63 <= data[0] < 126:
            raise MalformedHeader(f"bad size byte {data[0]!r}")
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        groups, start = data[2:8], 2
    else:
        groups, start = data[1:4], 1
    want = 6 if start == 2 else 3
    if len(groups) < want or any(not 63 <= b <= 126 for b in groups):
        raise MalformedHeader("truncated or invalid extended size header")
    n = 0
    for b in groups:
        n = (n << 6) | (b - 63)
    return n, start + want


def upper_triangle_bits(graph: Graph) -> list[int]:
    """Column-major upper-triangle adjacency bits, the graph6 payload order."""
    masks = graph.adjacency_masks()
    return [(masks[i] >> j) & 1 for j in range(1, graph.n) for i in range(j)]


def to_graph6_bytes(graph: Graph) -> bytes:
    bits = upper_triangle_bits(graph)
    bits += [0] * (-len(bits) % 6)
    body = bytearray()
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        body.append(value + 63)
    return _encode_size(graph.n) + bytes(body)


def to_graph6(graph: Graph) -> str:
    """Encode ``graph`` as a graph6 line (no header, no newline)."""
    return to_graph6_bytes(graph).decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    """Decode a single graph6 line.

    A leading ``>>graph6<<`` header and one trailing newline are accepted.
    Non-zero padding bits or extra characters raise :class:`TrailingGarbage`.
    """
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    if data.startswith(_HEADER.encode()):
        data = data[len(_HEADER):]
    n, offset = _decode_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[offset:]
    if len(body) < nbytes:
        raise TruncatedBits(f"need {nbytes} data bytes for n={n}, got {len(body)}")
    if len(body) > nbytes:
        raise TrailingGarbage(f"{len(body) - nbytes} unexpected trailing bytes")
    for b in body:
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid graph6 data byte {b!r}")
    edges = []
    k = 0
    i, j = 0, 1
    for b in body:
        value = b - 63
        for shift in range(5, -1, -1):
            bit = (value >> shift) & 1
            if k < nbits:
                if bit:
                    edges.append((i, j))
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise TrailingGarbage("non-zero padding bits")
            k += 1
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def to_edgelist(graph: Graph) -> str:
    """``"n m"`` on the first line, then one ``"u v"`` line per edge."""
    out = [f"{graph.n} {graph.m}"]
    out.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(out) + "\n"


def parse_edgelist(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise EdgeListError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise EdgeListError(f"bad header line {lines[0]!r}, expected 'n m'") from None
    if n < 0 or m < 0:
        raise EdgeListError("negative counts in header")
    if len(lines) - 1 != m:
        raise EdgeListError(f"header declares {m} edges, found {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListError(f"bad edge line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise EdgeListError(f"bad edge line {ln!r}") from None
    try:
        graph = Graph(n, pairs)
    except (LoopEdge, VertexOutOfRange) as exc:
        raise EdgeListError(str(exc)) from exc
    if graph.m != m:
        raise EdgeListError(f"{m - graph.m} duplicate edge line(s)")
    return graph


def read_graphs(stream: TextIO, fmt: str = "graph6") -> list[Graph]:
    """Read every graph from ``stream``: one per line for graph6, one per file for edge lists."""
    if fmt == "graph6":
        return list(read_graph6_lines(stream))
    if fmt == "edgelist":
        return [parse_edgelist(stream.read())]
    raise ValueError(f"unknown format {fmt!r}")


def schema_path(name: str):
    """Path of a JSON schema shipped with the package (``"report"`` or ``"catalog_entry"``)."""
    from importlib.resources import files

    return files("edgebalance") / "schemas" / f"{name}.schema.json"

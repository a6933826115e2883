"""graph6 / digraph6 text encodings, a JSON edge-list format and networkx interop.

graph6: N(n) followed by the upper-triangle bits x(0,1), x(0,2), x(1,2),
x(0,3), ... packed six per byte, most significant bit first, each byte offset
by 63 and zero-padded. digraph6: '&', N(n), then all n*n adjacency bits in
row-major order, packed the same way.

Encodings depend on the vertex labelling; use canonical.canonical_form for a
label-invariant key.
"""
import json
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple, Union

import networkx as nx

from graph_types import AnyGraph, CodecError, Digraph, Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"
DIGRAPH6_HEADER = ">>digraph6<<"
JSON_SCHEMA_VERSION = 1

_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047
_LONG_LIMIT = 68719476735


def _encode_order(n: int) -> str:
    if n <= _SHORT_LIMIT:
        return chr(n + 63)
    if n <= _MEDIUM_LIMIT:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    if n <= _LONG_LIMIT:
        return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))
    raise CodecError(f"order {n} cannot be encoded")


def _decode_order(data: str) -> Tuple[int, int]:
    """Returns (n, characters consumed)."""
    if not data:
        raise CodecError("empty encoding")
    if data[0] != "~":
        return ord(data[0]) - 63, 1
    if len(data) >= 2 and data[1] == "~":
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise CodecError("truncated order field")
    n = 0
    for ch in data[start:start + width]:
        n = (n << 6) | (ord(ch) - 63)
    return n, start + width


def _pack_bits(bits: Sequence[int]) -> str:
    chars = []
    for start in range(0, len(bits), 6):
        chunk = list(bits[start:start + 6])
        chunk += [0] * (6 - len(chunk))
        value = 0
        for bit in chunk:
            value = (value << 1) | bit
        chars.append(chr(value + 63))
    return "".join(chars)


def _unpack_bits(data: str, count: int) -> List[int]:
    expected = (count + 5) // 6
    if len(data) != expected:
        raise CodecError(f"expected {expected} data bytes, got {len(data)}")
    bits: List[int] = []
    for ch in data:
        value = ord(ch) - 63
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    if any(bits[count:]):
        raise CodecError("nonzero padding bits")
    return bits[:count]


def _check_charset(text: str) -> None:
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise CodecError(f"byte {ord(ch)} outside the printable range 63-126")


def encode_graph6(g: Graph) -> str:
    if g.directed:
        raise CodecError("graph6 encodes undirected graphs; use digraph6")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.order) for i in range(j)]
    return _encode_order(g.order) + _pack_bits(bits)


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    _check_charset(data)
    n, used = _decode_order(data)
    if n < 1:
        raise CodecError("graph6 order must be at least 1")
    bits = _unpack_bits(data[used:], n * (n - 1) // 2)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def encode_digraph6(d: Digraph) -> str:
    bits = [1 if d.has_arc(i, j) else 0 for i in range(d.order) for j in range(d.order)]
    return "&" + _encode_order(d.order) + _pack_bits(bits)


def parse_digraph6(text: str) -> Digraph:
    data = text.strip()
    if data.startswith(DIGRAPH6_HEADER):
        data = data[len(DIGRAPH6_HEADER):]
    if not data.startswith("&"):
        raise CodecError("digraph6 text must start with '&'")
    data = data[1:]
    _check_charset(data)
    n, used = _decode_order(data)
    if n < 1:
        raise CodecError("digraph6 order must be at least 1")
    bits = _unpack_bits(data[used:], n * n)
    for v in range(n):
        if bits[v * n + v]:
            raise CodecError(f"self-loop at vertex {v}")
    arcs = [(i // n, i % n) for i, bit in enumerate(bits) if bit]
    return Digraph.from_arcs(n, arcs)


def encode(g: AnyGraph) -> str:
    return encode_digraph6(g) if g.directed else encode_graph6(g)


def parse(text: str) -> AnyGraph:
    stripped = text.strip()
    if stripped.startswith("&") or stripped.startswith(DIGRAPH6_HEADER):
        return parse_digraph6(stripped)
    return parse_graph6(stripped)


def read_lines(stream: TextIO) -> Iterator[AnyGraph]:
    for line in stream:
        if line.strip():
            yield parse(line)


def write_lines(graphs: Iterable[AnyGraph], stream: TextIO) -> int:
    count = 0
    for g in graphs:
        stream.write(encode(g) + "\n")
        count += 1
    return count


def write_json_edges(
    g: AnyGraph,
    family: Optional[str] = None,
    params: Optional[Dict[str, object]] = None,
) -> str:
    pairs = g.arcs() if g.directed else g.edges()
    payload: Dict[str, object] = {
        "schema": JSON_SCHEMA_VERSION,
        "order": g.order,
        "directed": g.directed,
        "edges": [list(p) for p in sorted(pairs)],
    }
    if family is not None:
        payload["family"] = family
    if params is not None:
        payload["params"] = params
    return json.dumps(payload)


def read_json_edges(text: str) -> AnyGraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodecError(f"invalid JSON: {exc}") from exc
    try:
        order = int(payload["order"])
        directed = bool(payload["directed"])
        raw_edges = payload["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CodecError(f"missing or invalid field: {exc}") from exc

    seen = set()
    edges: List[Tuple[int, int]] = []
    for item in raw_edges:
        if len(item) != 2:
            raise CodecError(f"edge {item!r} is not a pair")
        u, v = int(item[0]), int(item[1])
        if u == v:
            raise CodecError(f"self-loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise CodecError(f"edge ({u}, {v}) references a vertex >= order {order}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise CodecError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    try:
        if directed:
            return Digraph.from_arcs(order, edges)
        return Graph.from_edges(order, edges)
    except GraphError as exc:
        raise CodecError(str(exc)) from exc


def to_networkx(g: AnyGraph) -> Union[nx.Graph, nx.DiGraph]:
    result = nx.DiGraph() if g.directed else nx.Graph()
    result.add_nodes_from(range(g.order))
    result.add_edges_from(g.arcs() if g.directed else g.edges())
    return result


def from_networkx(nxg: Union[nx.Graph, nx.DiGraph]) -> AnyGraph:
    """Nodes are relabelled 0..n-1 in sorted order."""
    nodes = sorted(nxg.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    pairs = [(index[u], index[v]) for u, v in nxg.edges() if u != v]
    if nxg.is_directed():
        return Digraph.from_arcs(len(nodes), pairs)
    return Graph.from_edges(len(nodes), pairs)

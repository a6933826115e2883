from typing import Dict, List, Mapping, Tuple

from graph_types import AnyGraph, Digraph, Graph, GraphError


def _blocks(order: int, blown: Mapping[int, AnyGraph]) -> Tuple[List[List[int]], int]:
    # Untouched vertices keep their relative order; copies follow, grouped per blown vertex.
    blocks: List[List[int]] = [[] for _ in range(order)]
    next_index = 0
    for v in range(order):
        if v not in blown:
            blocks[v] = [next_index]
            next_index += 1
    for v in sorted(blown):
        size = blown[v].order
        blocks[v] = list(range(next_index, next_index + size))
        next_index += size
    return blocks, next_index


def _blow_up_pairs(g: AnyGraph, blown: Mapping[int, AnyGraph]) -> Tuple[int, List[Tuple[int, int]]]:
    for v, h in blown.items():
        g.check_vertex(v)
        if h.directed != g.directed:
            raise GraphError("blow-up needs host and replacement of the same kind")
    blocks, order = _blocks(g.order, blown)
    pairs: List[Tuple[int, int]] = []
    base = g.arcs() if g.directed else g.edges()
    for a, b in base:
        pairs.extend((x, y) for x in blocks[a] for y in blocks[b])
    for v, h in blown.items():
        inner = h.arcs() if h.directed else h.edges()
        pairs.extend((blocks[v][x], blocks[v][y]) for x, y in inner)
    return order, pairs


def blow_up_many(g: AnyGraph, blown: Dict[int, AnyGraph]) -> AnyGraph:
    """Replace every key vertex by its graph; former neighbours join all copies."""
    order, pairs = _blow_up_pairs(g, blown)
    if g.directed:
        return Digraph.from_arcs(order, pairs)
    return Graph.from_edges(order, pairs)


def blow_up(g: Graph, v: int, h: Graph) -> Graph:
    return blow_up_many(g, {v: h})


def blow_up_digraph(d: Digraph, v: int, h: Digraph) -> Digraph:
    # Arcs keep their direction: u->v becomes u->x for every copy x.
    return blow_up_many(d, {v: h})

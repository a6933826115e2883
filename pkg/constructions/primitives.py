from itertools import combinations

from constructions.base import require
from graph_types import Digraph, Graph


def clique(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(k: int) -> Graph:
    require(k >= 3, "cycle", f"a cycle needs at least 3 vertices, got {k}")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def hypercube(dim: int = 3) -> Graph:
    n = 1 << dim
    return Graph.from_edges(n, ((v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def bidirected_clique(n: int) -> Digraph:
    return Digraph.from_graph(clique(n))


def empty_digraph(n: int) -> Digraph:
    return Digraph(n, (0,) * n)


def directed_cycle(k: int) -> Digraph:
    require(k >= 2, "directed_cycle", f"a directed cycle needs at least 2 vertices, got {k}")
    return Digraph.from_arcs(k, ((i, (i + 1) % k) for i in range(k)))


def directed_path(n: int) -> Digraph:
    return Digraph.from_arcs(n, ((i, i + 1) for i in range(n - 1)))

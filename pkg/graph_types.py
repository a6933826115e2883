from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

MAX_ORDER = 4096
UNREACHABLE = int(np.iinfo(np.uint32).max)


class GraphError(Exception):
    pass


class VertexError(GraphError, IndexError):
    pass


class OrderTooLargeError(GraphError):
    pass


class ParameterDomainError(GraphError, ValueError):
    pass


class CodecError(GraphError, ValueError):
    pass


class DivisibilityError(GraphError, ArithmeticError):
    pass


class Infinity(Enum):
    INFINITE = "infinite"

    def __str__(self) -> str:
        return self.value


INFINITE = Infinity.INFINITE

# Exact integer, or INFINITE for disconnected inputs.
Extended = Union[int, Infinity]


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def check_order(order: int, limit: int = MAX_ORDER) -> None:
    if order < 1:
        raise ParameterDomainError(f"order must be >= 1, got {order}")
    if order > limit:
        raise OrderTooLargeError(f"order {order} exceeds the supported maximum {limit}")


@dataclass(frozen=True)
class _AdjacencyRows:
    order: int
    rows: Tuple[int, ...]

    directed = False

    def __post_init__(self) -> None:
        check_order(self.order)
        if len(self.rows) != self.order:
            raise GraphError(f"expected {self.order} adjacency rows, got {len(self.rows)}")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise VertexError(f"row {v} references a vertex outside 0..{self.order - 1}")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise VertexError(f"vertex {v} out of range for order {self.order}")

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def out_neighbors(self, v: int) -> List[int]:
        self.check_vertex(v)
        return list(iter_bits(self.rows[v]))

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.order, self.order), dtype=np.uint8)
        for u, row in enumerate(self.rows):
            for v in iter_bits(row):
                matrix[u, v] = 1
        return matrix


@dataclass(frozen=True)
class Graph(_AdjacencyRows):
    """Undirected simple graph: symmetric bit-rows, bit v of rows[u] is the edge uv."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for u, row in enumerate(self.rows):
            for v in iter_bits(row):
                if not (self.rows[v] >> u) & 1:
                    raise GraphError(f"adjacency is not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        check_order(order)
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise VertexError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return self.has_arc(u, v)

    def neighbors(self, v: int) -> List[int]:
        return self.out_neighbors(v)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return popcount(self.rows[v])

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.rows) for v in iter_bits(row >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.rows) // 2


@dataclass(frozen=True)
class Digraph(_AdjacencyRows):
    """Directed graph: bit v of rows[u] is the arc u->v."""

    directed = True

    @classmethod
    def from_arcs(cls, order: int, arcs: Iterable[Tuple[int, int]]) -> "Digraph":
        check_order(order)
        rows = [0] * order
        for u, v in arcs:
            if not (0 <= u < order and 0 <= v < order):
                raise VertexError(f"arc ({u}, {v}) out of range for order {order}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
        return cls(order, tuple(rows))

    @classmethod
    def from_graph(cls, g: Graph) -> "Digraph":
        # Each edge becomes a pair of opposite arcs.
        return cls(g.order, g.rows)

    @cached_property
    def in_rows(self) -> Tuple[int, ...]:
        rows = [0] * self.order
        for u, row in enumerate(self.rows):
            for v in iter_bits(row):
                rows[v] |= 1 << u
        return tuple(rows)

    def in_neighbors(self, v: int) -> List[int]:
        self.check_vertex(v)
        return list(iter_bits(self.in_rows[v]))

    def out_degree(self, v: int) -> int:
        self.check_vertex(v)
        return popcount(self.rows[v])

    def in_degree(self, v: int) -> int:
        self.check_vertex(v)
        return popcount(self.in_rows[v])

    def arcs(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.rows) for v in iter_bits(row)]

    def arc_count(self) -> int:
        return sum(popcount(row) for row in self.rows)

    def reverse(self) -> "Digraph":
        return Digraph(self.order, self.in_rows)


AnyGraph = Union[Graph, Digraph]


@dataclass
class DistanceMatrix:
    order: int
    dist: np.ndarray
    directed: bool

    def __post_init__(self) -> None:
        if self.dist.shape != (self.order, self.order):
            raise GraphError(f"distance matrix shape {self.dist.shape} does not match order {self.order}")

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return int(self.dist[key])

    def is_finite(self) -> bool:
        return not bool((self.dist == UNREACHABLE).any())

    def total(self) -> Extended:
        """Sum over ordered pairs, INFINITE if any pair is unreachable."""
        if not self.is_finite():
            return INFINITE
        return int(self.dist.sum(dtype=np.int64))

    def out_sums(self) -> List[Extended]:
        return _row_sums(self.dist)

    def in_sums(self) -> List[Extended]:
        return _row_sums(self.dist.T)

    def to_lists(self) -> List[List[Optional[int]]]:
        return [[None if int(x) == UNREACHABLE else int(x) for x in row] for row in self.dist]


def _row_sums(dist: np.ndarray) -> List[Extended]:
    sums: List[Extended] = []
    for row in dist:
        if (row == UNREACHABLE).any():
            sums.append(INFINITE)
        else:
            sums.append(int(row.sum(dtype=np.int64)))
    return sums


def extended_to_json(value: Optional[Extended]) -> Union[int, str, None]:
    if value is None:
        return None
    if value is INFINITE:
        return str(INFINITE)
    return int(value)


@dataclass
class MetricSummary:
    order: int
    directed: bool
    wiener: Extended
    size: int
    radius: Optional[Extended] = None
    diameter: Optional[Extended] = None
    out_radius: Optional[Extended] = None
    in_radius: Optional[Extended] = None
    doubled_radius: Optional[Extended] = None
    eccentricities: List[Extended] = field(default_factory=list)
    out_eccentricities: List[Extended] = field(default_factory=list)
    in_eccentricities: List[Extended] = field(default_factory=list)

    def to_json_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            "order": self.order,
            "directed": self.directed,
            "size": self.size,
            "wiener": extended_to_json(self.wiener),
        }
        if self.directed:
            data["out_radius"] = extended_to_json(self.out_radius)
            data["in_radius"] = extended_to_json(self.in_radius)
            data["doubled_radius"] = extended_to_json(self.doubled_radius)
            data["out_eccentricities"] = [extended_to_json(e) for e in self.out_eccentricities]
            data["in_eccentricities"] = [extended_to_json(e) for e in self.in_eccentricities]
        else:
            data["radius"] = extended_to_json(self.radius)
            data["diameter"] = extended_to_json(self.diameter)
            data["eccentricities"] = [extended_to_json(e) for e in self.eccentricities]
        return data


def extended_min(values: Sequence[Extended]) -> Extended:
    finite = [v for v in values if v is not INFINITE]
    return min(finite) if finite else INFINITE


def extended_max(values: Sequence[Extended]) -> Extended:
    if any(v is INFINITE for v in values):
        return INFINITE
    return max(values)

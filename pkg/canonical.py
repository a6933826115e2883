"""Canonical certificates for graphs and digraphs up to 16 vertices.

The search refines an ordered partition to an equitable one (cells split by
the number of out- and in-neighbours in every cell), individualises a vertex
of the first non-singleton cell and recurses. Each discrete partition is a
labelling; the certificate is the smallest row-major adjacency encoding over
all leaves. Leaves with equal encodings yield automorphisms, which prune
sibling branches whose first vertex lies in an already explored orbit of the
path stabiliser.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from graph_types import AnyGraph, OrderTooLargeError, iter_bits, popcount

CANONICAL_ORDER_LIMIT = 16

Cells = List[List[int]]


@dataclass(frozen=True, order=True)
class CanonicalCertificate:
    order: int
    directed: bool
    data: bytes

    def hex(self) -> str:
        return self.data.hex()


@dataclass
class CanonicalResult:
    certificate: CanonicalCertificate
    labeling: List[int]
    generators: List[List[int]] = field(default_factory=list)
    orbits: List[int] = field(default_factory=list)


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(cells: Cells, out_rows: Sequence[int], in_rows: Sequence[int]) -> Cells:
    """Coarsest equitable refinement of an ordered partition."""
    cells = [list(c) for c in cells]
    while True:
        masks = [_mask(c) for c in cells]
        refined: Cells = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                key = tuple(popcount(out_rows[v] & m) for m in masks)
                if in_rows is not out_rows:
                    key += tuple(popcount(in_rows[v] & m) for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                split = True
                refined.extend(groups[key] for key in sorted(groups))
            else:
                refined.append(cell)
        cells = refined
        if not split:
            return cells


def _individualize(cells: Cells, index: int, v: int) -> Cells:
    cell = cells[index]
    rest = [w for w in cell if w != v]
    return cells[:index] + [[v], rest] + cells[index + 1:]


def _leaf_code(order_list: Sequence[int], out_rows: Sequence[int]) -> Tuple[int, ...]:
    n = len(order_list)
    position = [0] * n
    for pos, v in enumerate(order_list):
        position[v] = pos
    code = []
    for v in order_list:
        row = 0
        for w in iter_bits(out_rows[v]):
            # Column 0 is the most significant bit, so tuple order is row-major bit order.
            row |= 1 << (n - 1 - position[w])
        code.append(row)
    return tuple(code)


class _UnionFind:
    def __init__(self, n: int):
        self._parent = list(range(n))

    def find(self, v: int) -> int:
        while self._parent[v] != v:
            self._parent[v] = self._parent[self._parent[v]]
            v = self._parent[v]
        return v

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self._parent[rb] = ra
            else:
                self._parent[ra] = rb


def orbits_of(n: int, generators: Sequence[Sequence[int]]) -> List[int]:
    """Smallest vertex of each vertex's orbit under the group the generators span."""
    uf = _UnionFind(n)
    for gen in generators:
        for v, w in enumerate(gen):
            uf.union(v, w)
    return [uf.find(v) for v in range(n)]


class _Search:
    def __init__(self, out_rows: Sequence[int], in_rows: Sequence[int]):
        self.out_rows = out_rows
        self.in_rows = in_rows
        self.n = len(out_rows)
        self.first: Optional[Tuple[Tuple[int, ...], List[int]]] = None
        self.best: Optional[Tuple[Tuple[int, ...], List[int]]] = None
        self.generators: List[List[int]] = []

    def run(self, cells: Cells) -> None:
        self._visit(refine(cells, self.out_rows, self.in_rows), [])

    def _record_automorphism(self, source: Sequence[int], target: Sequence[int]) -> None:
        gen = [0] * self.n
        for a, b in zip(source, target):
            gen[a] = b
        if gen != list(range(self.n)) and gen not in self.generators:
            self.generators.append(gen)

    def _leaf(self, cells: Cells) -> None:
        order_list = [c[0] for c in cells]
        code = _leaf_code(order_list, self.out_rows)
        if self.first is None:
            self.first = (code, order_list)
            self.best = (code, order_list)
            return
        if code == self.first[0]:
            self._record_automorphism(self.first[1], order_list)
        elif code == self.best[0]:
            self._record_automorphism(self.best[1], order_list)
        elif code < self.best[0]:
            self.best = (code, order_list)

    def _visit(self, cells: Cells, path: List[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self._leaf(cells)
            return
        tried: List[int] = []
        for v in sorted(cells[target]):
            if tried:
                fixing = [g for g in self.generators if all(g[p] == p for p in path)]
                if fixing:
                    orbit = orbits_of(self.n, fixing)
                    if any(orbit[v] == orbit[u] for u in tried):
                        continue
            tried.append(v)
            child = refine(_individualize(cells, target, v), self.out_rows, self.in_rows)
            self._visit(child, path + [v])


def _initial_cells(n: int, colors: Optional[Sequence[int]]) -> Cells:
    if colors is None:
        return [list(range(n))]
    by_color: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def canonical_labeling(g: AnyGraph, colors: Optional[Sequence[int]] = None) -> CanonicalResult:
    """Full search result; labeling[v] is the canonical position of vertex v.

    colors, when given, restricts the search to colour-preserving relabellings.
    """
    if g.order > CANONICAL_ORDER_LIMIT:
        raise OrderTooLargeError(f"canonical form supports order <= {CANONICAL_ORDER_LIMIT}, got {g.order}")
    in_rows = g.in_rows if g.directed else g.rows
    search = _Search(g.rows, in_rows)
    search.run(_initial_cells(g.order, colors))
    code, order_list = search.best
    labeling = [0] * g.order
    for pos, v in enumerate(order_list):
        labeling[v] = pos
    width = (g.order + 7) // 8
    data = b"".join(row.to_bytes(width, "big") for row in code)
    certificate = CanonicalCertificate(order=g.order, directed=g.directed, data=data)
    return CanonicalResult(
        certificate=certificate,
        labeling=labeling,
        generators=search.generators,
        orbits=orbits_of(g.order, search.generators),
    )


def canonical_form(g: AnyGraph) -> CanonicalCertificate:
    return canonical_labeling(g).certificate


def canonical_graph(g: AnyGraph) -> AnyGraph:
    """The representative of g's class whose labelling realises the certificate."""
    labeling = canonical_labeling(g).labeling
    rows = [0] * g.order
    for u, row in enumerate(g.rows):
        for v in iter_bits(row):
            rows[labeling[u]] |= 1 << labeling[v]
    return type(g)(g.order, tuple(rows))


def automorphism_orbits(g: AnyGraph) -> List[int]:
    return canonical_labeling(g).orbits

"""Weighted resolution dual graphs and the exact linear algebra on them.

Vertices are the exceptional curves of a resolution, weighted by
``w_i = -Delta_i^2``; edges are transversal intersections (multiplicity one).
Everything here is exact: scalars are ``Fraction`` and matrices hold Python
integers in object-dtype numpy arrays.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Mapping, Sequence

import networkx as nx
import numpy as np

from singularity_app.core.errors import InvalidGraph, SingularMatrix

logger = logging.getLogger(__name__)

Rat = Fraction
VertexId = str


@dataclass(frozen=True)
class Cycle:
    """Rational divisor supported on the exceptional curves, in vertex order."""

    ids: tuple[VertexId, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.ids) != len(self.values):
            raise ValueError("cycle needs one coefficient per vertex")
        object.__setattr__(self, "ids", tuple(str(v) for v in self.ids))
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @classmethod
    def from_mapping(cls, ids: Sequence[VertexId], coefficients: Mapping[VertexId, Fraction | int]) -> Cycle:
        ids = tuple(str(v) for v in ids)
        unknown = set(map(str, coefficients)) - set(ids)
        if unknown:
            raise ValueError(f"cycle support {sorted(unknown)} is not in the vertex set")
        lookup = {str(k): v for k, v in coefficients.items()}
        return cls(ids, tuple(Fraction(lookup.get(v, 0)) for v in ids))

    @classmethod
    def constant(cls, ids: Sequence[VertexId], value: Fraction | int) -> Cycle:
        return cls(tuple(ids), tuple(Fraction(value) for _ in ids))

    @classmethod
    def zero(cls, ids: Sequence[VertexId]) -> Cycle:
        return cls.constant(ids, 0)

    def __getitem__(self, vertex: VertexId) -> Fraction:
        return self.values[self.ids.index(str(vertex))]

    def __len__(self) -> int:
        return len(self.ids)

    def items(self):
        return zip(self.ids, self.values)

    def as_dict(self) -> dict[VertexId, Fraction]:
        return dict(self.items())

    def _aligned(self, other: Cycle) -> tuple[Fraction, ...]:
        if other.ids == self.ids:
            return other.values
        return Cycle.from_mapping(self.ids, other.as_dict()).values

    def __add__(self, other: Cycle) -> Cycle:
        return Cycle(self.ids, tuple(a + b for a, b in zip(self.values, self._aligned(other))))

    def __sub__(self, other: Cycle) -> Cycle:
        return Cycle(self.ids, tuple(a - b for a, b in zip(self.values, self._aligned(other))))

    def __neg__(self) -> Cycle:
        return Cycle(self.ids, tuple(-a for a in self.values))

    def __mul__(self, scalar: Fraction | int) -> Cycle:
        return Cycle(self.ids, tuple(a * scalar for a in self.values))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def is_effective(self) -> bool:
        return all(v >= 0 for v in self.values)


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[tuple[VertexId, int], ...]
    edges: frozenset[frozenset[VertexId]] = field(default_factory=frozenset)

    def __post_init__(self):
        vertices = tuple((str(v), w) for v, w in self.vertices)
        object.__setattr__(self, "vertices", vertices)
        if not vertices:
            raise InvalidGraph("a dual graph needs at least one vertex")
        ids = [v for v, _ in vertices]
        if len(set(ids)) != len(ids):
            raise InvalidGraph("vertex ids must be unique")
        for vid, weight in vertices:
            if isinstance(weight, bool) or not isinstance(weight, (int, np.integer)) or weight < 1:
                raise InvalidGraph(f"weight {weight!r} must be an integer >= 1", location=f"vertex {vid}")
        object.__setattr__(self, "vertices", tuple((v, int(w)) for v, w in vertices))
        known = set(ids)
        for edge in self.edges:
            if len(edge) != 2:
                raise InvalidGraph(f"loop at vertex {next(iter(edge))}")
            missing = set(edge) - known
            if missing:
                raise InvalidGraph(f"edge refers to unknown vertex {sorted(missing)[0]}")
        if not nx.is_connected(self.nx_graph):
            raise InvalidGraph("dual graph must be connected")

    @classmethod
    def from_lists(cls, vertices: Iterable[tuple[VertexId, int]],
                   edges: Iterable[tuple[VertexId, VertexId]] = ()) -> DualGraph:
        """Build a graph, rejecting loops and repeated edges before they collapse."""
        seen: set[frozenset[str]] = set()
        for a, b in edges:
            a, b = str(a), str(b)
            if a == b:
                raise InvalidGraph(f"loop at vertex {a}")
            pair = frozenset((a, b))
            if pair in seen:
                raise InvalidGraph(f"repeated edge {a}-{b}: intersection multiplicities above 1 are not supported")
            seen.add(pair)
        return cls(tuple(vertices), frozenset(seen))

    @classmethod
    def chain(cls, weights: Sequence[int]) -> DualGraph:
        """Type A_n chain with ids "1".."n" in the given order."""
        ids = [str(i) for i in range(1, len(weights) + 1)]
        return cls.from_lists(zip(ids, weights), zip(ids, ids[1:]))

    @classmethod
    def d_shape(cls, chain_weights: Sequence[int]) -> DualGraph:
        """Type D_n graph: chain 1..n-2 (far end first) and weight-2 forks n-1, n on vertex n-2."""
        k = len(chain_weights)
        if k < 1:
            raise InvalidGraph("a D-shaped graph needs at least one chain vertex")
        ids = [str(i) for i in range(1, k + 3)]
        vertices = list(zip(ids, list(chain_weights) + [2, 2]))
        edges = list(zip(ids[:k - 1], ids[1:k])) + [(ids[k - 1], ids[k]), (ids[k - 1], ids[k + 1])]
        return cls.from_lists(vertices, edges)

    @classmethod
    def smooth_point(cls) -> DualGraph:
        """Blow-up of a smooth point: a single (-1)-curve."""
        return cls((("E", 1),))

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Undirected networkx view; nodes in input order, each carrying its ``weight``."""
        graph = nx.Graph()
        graph.add_nodes_from((vid, {"weight": weight}) for vid, weight in self.vertices)
        graph.add_edges_from(tuple(edge) for edge in self.edges)
        return graph

    @property
    def ids(self) -> tuple[VertexId, ...]:
        return tuple(v for v, _ in self.vertices)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, vertex: VertexId) -> int:
        return self.ids.index(str(vertex))

    def weight(self, vertex: VertexId) -> int:
        return self.vertices[self.index(vertex)][1]

    def neighbours(self, vertex: VertexId) -> list[VertexId]:
        return sorted(self.nx_graph.neighbors(str(vertex)), key=self.index)

    def degree(self, vertex: VertexId) -> int:
        return self.nx_graph.degree[str(vertex)]

    @property
    def is_smooth(self) -> bool:
        return len(self.vertices) == 1 and self.vertices[0][1] == 1

    @property
    def is_minimal(self) -> bool:
        return all(w >= 2 for w in self.weights)

    @property
    def is_tree(self) -> bool:
        return nx.is_tree(self.nx_graph)


@dataclass(frozen=True, eq=False)
class IntersectionMatrix:
    ids: tuple[VertexId, ...]
    entries: np.ndarray

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntersectionMatrix):
            return NotImplemented
        return self.ids == other.ids and self.rows() == other.rows()

    @property
    def size(self) -> int:
        return len(self.ids)

    def rows(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries.tolist()]

    def index(self, vertex: VertexId) -> int:
        return self.ids.index(str(vertex))

    def entry(self, i: VertexId, j: VertexId) -> int:
        return int(self.entries[self.index(i), self.index(j)])

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries.T))

    @cached_property
    def _determinant(self) -> int:
        return _bareiss_determinant(self.rows())

    def determinant(self) -> int:
        return self._determinant

    def leading_principal_minors(self) -> list[int]:
        """Leading minors from Bareiss elimination without pivoting; stops at the first zero."""
        a = self.rows()
        n = len(a)
        minors = []
        prev = 1
        for k in range(n):
            pivot = a[k][k]
            minors.append(pivot)
            if pivot == 0:
                break
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            prev = pivot
        return minors

    def minor(self, drop_row: int, drop_col: int) -> list[list[int]]:
        return [[x for c, x in enumerate(row) if c != drop_col]
                for r, row in enumerate(self.rows()) if r != drop_row]

    def apply(self, cycle: Cycle) -> Cycle:
        """Matrix times cycle; component i is the intersection number cycle . Delta_i."""
        values = Cycle.from_mapping(self.ids, cycle.as_dict()).values
        product = self.entries.dot(np.array(values, dtype=object))
        return Cycle(self.ids, tuple(product.tolist()))

    def pair(self, x: Cycle, y: Cycle) -> Fraction:
        x_values = Cycle.from_mapping(self.ids, x.as_dict()).values
        return sum((a * b for a, b in zip(x_values, self.apply(y).values)), Fraction(0))


def _bareiss_determinant(rows: list[list[int]]) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def build_intersection_matrix(g: DualGraph) -> IntersectionMatrix:
    ids = g.ids
    n = len(ids)
    entries = np.zeros((n, n), dtype=object)
    for i, (_, weight) in enumerate(g.vertices):
        entries[i, i] = -weight
    for edge in g.edges:
        a, b = (ids.index(v) for v in edge)
        entries[a, b] = 1
        entries[b, a] = 1
    return IntersectionMatrix(ids, entries)


def is_negative_definite(m: IntersectionMatrix) -> bool:
    """Sylvester: the k-th leading minor must have sign (-1)^k for every k."""
    minors = m.leading_principal_minors()
    if len(minors) < m.size:
        return False
    return all(minor * (-1) ** k > 0 for k, minor in enumerate(minors, start=1))


def solve_linear(m: IntersectionMatrix, rhs: Cycle) -> Cycle:
    """Exact solution of m.x = rhs by fraction-free (Bareiss) elimination."""
    n = m.size
    values = Cycle.from_mapping(m.ids, rhs.as_dict()).values
    scale = lcm(*(v.denominator for v in values))
    aug = [row + [int(v * scale)] for row, v in zip(m.rows(), values)]
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if aug[r][k] != 0), None)
            if swap is None:
                raise SingularMatrix("intersection matrix is singular")
            aug[k], aug[swap] = aug[swap], aug[k]
        pivot = aug[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                aug[i][j] = (aug[i][j] * pivot - aug[i][k] * aug[k][j]) // prev
            aug[i][k] = 0
        prev = pivot

    solution = [Fraction(0)] * n
    for i in reversed(range(n)):
        acc = Fraction(aug[i][n]) - sum((aug[i][j] * solution[j] for j in range(i + 1, n)), Fraction(0))
        solution[i] = acc / aug[i][i]
    return Cycle(m.ids, tuple(x / scale for x in solution))


def inverse_entry(m: IntersectionMatrix, i: VertexId, j: VertexId) -> Fraction:
    """(m^-1)_{ij} as cofactor C_{ji} over the determinant."""
    det = m.determinant()
    if det == 0:
        raise SingularMatrix("intersection matrix is singular")
    r, c = m.index(j), m.index(i)
    cofactor = (-1) ** (r + c) * _bareiss_determinant(m.minor(r, c))
    return Fraction(cofactor, det)

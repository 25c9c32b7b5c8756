"""Simple undirected graphs, generators and hop distances.

Vertices are flat integer ids ``0..n-1``.  Multilayered graphs keep a
:class:`Layering` that maps flat ids to ``(base, layer)`` labels, with
``flat = (layer - 1) * base_count + base``.  Layers are numbered from 1,
base vertices from 0.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import DisconnectedGraphError, GraphParseError, GraphPreconditionError, UnreachableError

_UNREACHABLE = -1


class LayeredVertexId(NamedTuple):
    base: int
    layer: int

    def __str__(self) -> str:
        return f"{self.base},{self.layer}"

    @classmethod
    def parse(cls, text: str) -> LayeredVertexId:
        try:
            base, layer = (int(part) for part in text.split(","))
        except ValueError as exc:
            raise GraphParseError(f"bad layered label {text!r}, expected 'i,j'") from exc
        return cls(base, layer)


@dataclass(frozen=True)
class Layering:
    """Labeling of a multilayered graph with ``layers`` copies of a base graph on ``base_count`` vertices."""

    base_count: int
    layers: int

    def to_flat(self, vid: LayeredVertexId | tuple[int, int]) -> int:
        base, layer = vid
        if not (0 <= base < self.base_count and 1 <= layer <= self.layers):
            raise ValueError(f"({base},{layer}) outside {self.base_count} x {self.layers} layering")
        return (layer - 1) * self.base_count + base

    def from_flat(self, index: int) -> LayeredVertexId:
        if not 0 <= index < self.base_count * self.layers:
            raise ValueError(f"flat id {index} outside layering")
        layer, base = divmod(index, self.base_count)
        return LayeredVertexId(base, layer + 1)

    def layer_of(self, index: int) -> int:
        return index // self.base_count + 1

    def label(self, index: int) -> str:
        return str(self.from_flat(index))


class Graph:
    """Immutable simple undirected graph with cached all-pairs hop distances."""

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[tuple[int, int]] = (),
        *,
        layering: Layering | None = None,
        name: str | None = None,
    ):
        if vertex_count < 0:
            raise GraphPreconditionError("vertex count must be nonnegative")
        neighbours: list[set[int]] = [set() for _ in range(vertex_count)]
        normalized = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphPreconditionError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
            if u == v:
                raise GraphPreconditionError(f"self-loop at vertex {u}")
            edge = (min(u, v), max(u, v))
            if edge in normalized:
                raise GraphPreconditionError(f"duplicate edge {edge}")
            normalized.add(edge)
            neighbours[u].add(v)
            neighbours[v].add(u)
        if layering is not None and layering.base_count * layering.layers != vertex_count:
            raise GraphPreconditionError("layering does not match vertex count")
        self._n = vertex_count
        self._edges = tuple(sorted(normalized))
        self._adj = tuple(tuple(sorted(s)) for s in neighbours)
        self._adj_sets = tuple(frozenset(s) for s in neighbours)
        self.layering = layering
        self.name = name

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Graph{label} n={self._n} m={self.edge_count}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    @cached_property
    def dist(self) -> tuple[tuple[int, ...], ...]:
        """BFS hop counts from every vertex; ``-1`` marks unreachable pairs (internal only)."""
        rows = []
        for source in range(self._n):
            row = [_UNREACHABLE] * self._n
            row[source] = 0
            queue = deque([source])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if row[w] == _UNREACHABLE:
                        row[w] = row[u] + 1
                        queue.append(w)
            rows.append(tuple(row))
        return tuple(rows)

    def is_connected(self) -> bool:
        return self._n == 0 or _UNREACHABLE not in self.dist[0]

    def require_connected(self) -> None:
        if self._n == 0:
            raise GraphPreconditionError("graph has no vertices")
        if not self.is_connected():
            raise DisconnectedGraphError(f"{self!r} is not connected")

    def to_dict(self) -> dict:
        data: dict = {"n": self._n, "edges": [list(e) for e in self._edges]}
        if self.name:
            data["name"] = self.name
        if self.layering is not None:
            data["layering"] = {"base_count": self.layering.base_count, "layers": self.layering.layers}
        return data

    @classmethod
    def from_dict(cls, data: dict) -> Graph:
        try:
            layering = data.get("layering")
            return cls(
                int(data["n"]),
                [(int(u), int(v)) for u, v in data["edges"]],
                layering=Layering(int(layering["base_count"]), int(layering["layers"])) if layering else None,
                name=data.get("name"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphPreconditionError):
                raise
            raise GraphParseError(f"bad graph object: {exc}") from exc


def distance(graph: Graph, u: int, v: int) -> int:
    """Shortest-path hop count between ``u`` and ``v``.

    Raises :class:`UnreachableError` when no path exists.
    """
    d = graph.dist[u][v]
    if d == _UNREACHABLE:
        raise UnreachableError(u, v)
    return d


def diameter(graph: Graph) -> int:
    graph.require_connected()
    return max(max(row) for row in graph.dist)


# generators ---------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphPreconditionError(f"cycle needs n >= 3, got {n}")
    return Graph(n, ((v, (v + 1) % n) for v in range(n)), name=f"C{n}")


def path(n: int) -> Graph:
    if n < 1:
        raise GraphPreconditionError(f"path needs n >= 1, got {n}")
    return Graph(n, ((v, v + 1) for v in range(n - 1)), name=f"P{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphPreconditionError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)), name=f"K{n}")


def multilayer(base: Graph, k: int, *, name: str | None = None) -> Graph:
    """Stack ``k`` copies of ``base`` and join copies of the same vertex in consecutive layers."""
    if k < 2:
        raise GraphPreconditionError(f"multilayer needs k >= 2, got {k}")
    n = base.vertex_count
    layering = Layering(n, k)
    edges = []
    for layer in range(1, k + 1):
        offset = (layer - 1) * n
        edges.extend((u + offset, v + offset) for u, v in base.edges)
        if layer < k:
            edges.extend((v + offset, v + offset + n) for v in range(n))
    if name is None and base.name:
        name = f"M{base.name}^{k}"
    return Graph(n * k, edges, layering=layering, name=name)


def multilayered_cycle(n: int, k: int) -> Graph:
    if n < 3 or k < 2:
        raise GraphPreconditionError(f"multilayered cycle needs n >= 3 and k >= 2, got n={n}, k={k}")
    return multilayer(cycle(n), k, name=f"MC_{n}^{k}")


# edge-list text -----------------------------------------------------------


def from_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"`` (0-indexed). ``#`` starts a comment."""
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise GraphParseError("empty edge list")
    try:
        n, m = (int(tok) for tok in lines[0].split())
        edges = []
        for line in lines[1:]:
            u, v = (int(tok) for tok in line.split())
            edges.append((u, v))
    except ValueError as exc:
        raise GraphParseError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise GraphParseError(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except GraphPreconditionError as exc:
        raise GraphParseError(str(exc)) from exc


def to_edge_list(graph: Graph) -> str:
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"

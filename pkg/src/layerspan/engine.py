"""Exact vertex spans.

Two players at positions ``(a, b)`` form a product state.  Keeping their
distance at least ``k`` for a whole run is the same thing as walking inside
the *k-filtered product graph*: states ``(a, b)`` with ``d(a, b) >= k``,
joined whenever the movement rule allows one joint move between them.
A walk can stay inside one connected component and visit every state of it,
so the two players can both cover ``V(G)`` while staying ``k`` apart exactly
when some component projects onto all of ``V(G)`` in both coordinates.
That component test is the main algorithm (:func:`span_by_components`).

:func:`span_oracle` answers the same question by brute force over
``(a, b, visited_by_a, visited_by_b)`` and is kept deliberately separate
so the two can be cross-checked.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Union

from .errors import GraphPreconditionError, NoWitnessError, OracleCapExceeded
from .graph import Graph, diameter
from .tracks import MovementRule, track_distance, validate_for_rule

ORACLE_CAP = 10

ProductState = tuple[int, int]


def joint_moves(graph: Graph, rule: MovementRule, a: int, b: int) -> Iterator[ProductState]:
    """Positions reachable from ``(a, b)`` in one step; the both-stay move is never produced."""
    adj = graph.adjacency
    if rule is MovementRule.LAZY:
        for a2 in adj[a]:
            yield a2, b
        for b2 in adj[b]:
            yield a, b2
    elif rule is MovementRule.ACTIVE:
        for a2 in adj[a]:
            for b2 in adj[b]:
                yield a2, b2
    else:
        for a2 in (a, *adj[a]):
            for b2 in (b, *adj[b]):
                if a2 != a or b2 != b:
                    yield a2, b2


@dataclass(frozen=True)
class ProductGraph:
    """k-filtered product graph; vertex ``i`` of :attr:`graph` is the pair ``states[i]``."""

    base: Graph
    rule: MovementRule
    threshold: int
    states: tuple[ProductState, ...]
    graph: Graph
    lookup: dict[ProductState, int] = field(repr=False, compare=False)

    def index(self, state: ProductState) -> int:
        return self.lookup[state]

    def components(self) -> list[list[int]]:
        """Connected components as sorted lists of state indices, ordered by smallest member."""
        seen = [False] * len(self.states)
        comps = []
        for root in range(len(self.states)):
            if seen[root]:
                continue
            seen[root] = True
            comp = [root]
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self.graph.neighbors(u):
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def covers(self, component: list[int]) -> bool:
        n = self.base.vertex_count
        firsts = {self.states[i][0] for i in component}
        seconds = {self.states[i][1] for i in component}
        return len(firsts) == n and len(seconds) == n


def product_graph(graph: Graph, k: int, rule: MovementRule) -> ProductGraph:
    graph.require_connected()
    dist = graph.dist
    n = graph.vertex_count
    states = tuple((a, b) for a in range(n) for b in range(n) if dist[a][b] >= k)
    index = {s: i for i, s in enumerate(states)}
    edges = set()
    for i, (a, b) in enumerate(states):
        for t in joint_moves(graph, rule, a, b):
            j = index.get(t)
            if j is not None and i < j:
                edges.add((i, j))
    return ProductGraph(graph, rule, k, states, Graph(len(states), edges), index)


@dataclass(frozen=True)
class ComponentWitness:
    component_id: int
    states: tuple[ProductState, ...]

    def to_json(self) -> dict:
        return {"component": self.component_id, "size": len(self.states), "states": [list(s) for s in self.states]}


@dataclass(frozen=True)
class TrackWitness:
    f: tuple[int, ...]
    g: tuple[int, ...]

    def to_json(self) -> dict:
        return {"length": len(self.f), "tracks": [list(self.f), list(self.g)]}


@dataclass(frozen=True)
class SpanReport:
    rule: MovementRule
    value: int
    method: str
    witness: Union[ComponentWitness, TrackWitness, None] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "rule": self.rule.value,
            "span": self.rule.span_name,
            "value": self.value,
            "method": self.method,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


class _Components:
    """Union-find over product states ``a * n + b`` carrying coordinate projections as bitmasks."""

    def __init__(self, n: int):
        size = n * n
        self.parent = list(range(size))
        self.first = [1 << (s // n) for s in range(size)]
        self.second = [1 << (s % n) for s in range(size)]

    def find(self, s: int) -> int:
        parent = self.parent
        root = s
        while parent[root] != root:
            root = parent[root]
        while parent[s] != root:
            parent[s], s = root, parent[s]
        return root

    def union(self, s: int, t: int) -> int:
        rs, rt = self.find(s), self.find(t)
        if rs == rt:
            return rs
        if rs > rt:
            rs, rt = rt, rs
        self.parent[rt] = rs
        self.first[rs] |= self.first[rt]
        self.second[rs] |= self.second[rt]
        return rs


def span_by_components(graph: Graph, rule: MovementRule) -> SpanReport:
    """Largest ``k`` whose filtered product graph has a component covering both coordinates.

    Thresholds are tried from the diameter downwards; the state set only grows
    as ``k`` drops, so one union-find is extended level by level.
    """
    graph.require_connected()
    n = graph.vertex_count
    full = (1 << n) - 1
    dist = graph.dist
    top = diameter(graph)
    levels: list[list[int]] = [[] for _ in range(top + 1)]
    for a in range(n):
        for b in range(n):
            levels[dist[a][b]].append(a * n + b)

    uf = _Components(n)
    present = bytearray(n * n)
    for k in range(top, -1, -1):
        for s in levels[k]:
            present[s] = 1
        # components only change through the states added at this level, so checking
        # each new state's root right after its unions catches every qualifying merge
        winner = None
        for s in levels[k]:
            a, b = divmod(s, n)
            root = uf.find(s)
            for a2, b2 in joint_moves(graph, rule, a, b):
                t = a2 * n + b2
                if present[t]:
                    root = uf.union(root, t)
            if uf.first[root] == full and uf.second[root] == full:
                winner = root
        if winner is not None:
            root = uf.find(winner)
            members = tuple(divmod(s, n) for s in range(n * n) if present[s] and uf.find(s) == root)
            return SpanReport(rule, k, "components", ComponentWitness(min(a * n + b for a, b in members), members))
    raise AssertionError("k = 0 must always qualify on a connected graph")


def spans_by_components(graph: Graph) -> dict[MovementRule, SpanReport]:
    return {rule: span_by_components(graph, rule) for rule in MovementRule}


def witness_tracks(graph: Graph, rule: MovementRule, k: int) -> tuple[list[int], list[int]]:
    """Concrete track pair keeping distance at least ``k``.

    Walks an Euler tour of a DFS tree of the first qualifying component,
    stopping as soon as both players have seen every vertex.  No attempt is
    made to keep the tracks short.
    """
    pg = product_graph(graph, k, rule)
    target = next((c for c in pg.components() if pg.covers(c)), None)
    if target is None:
        raise NoWitnessError(f"no component of the {rule.value} product at distance {k} covers both coordinates")

    n = graph.vertex_count
    start = target[0]
    a, b = pg.states[start]
    f, g = [a], [b]
    seen_f, seen_g = {a}, {b}

    def done() -> bool:
        return len(seen_f) == n and len(seen_g) == n

    def step(i: int) -> None:
        x, y = pg.states[i]
        f.append(x)
        g.append(y)
        seen_f.add(x)
        seen_g.add(y)

    visited = {start}
    stack = [(start, iter(pg.graph.neighbors(start)))]
    while stack and not done():
        node, children = stack[-1]
        child = next((c for c in children if c not in visited), None)
        if child is None:
            stack.pop()
            if stack:
                step(stack[-1][0])
            continue
        visited.add(child)
        step(child)
        stack.append((child, iter(pg.graph.neighbors(child))))

    verdict = validate_for_rule(graph, rule, f, g)
    if not verdict or track_distance(graph, f, g) < k:
        raise AssertionError(f"witness construction produced an invalid pair: {verdict}")
    return f, g


# exhaustive oracle -----------------------------------------------------------


def _oracle_search(graph: Graph, rule: MovementRule, k: int, cap: int) -> tuple[list[int], list[int]] | None:
    n = graph.vertex_count
    if n > cap:
        raise OracleCapExceeded(f"oracle is capped at {cap} vertices, graph has {n}")
    if n == 0 or not graph.is_connected():
        return None
    dist = graph.dist
    full = (1 << n) - 1
    shift = 2 * n
    moves = {}
    for a in range(n):
        for b in range(n):
            if dist[a][b] >= k:
                moves[a * n + b] = [
                    (a2 * n + b2, 1 << a2, 1 << b2)
                    for a2, b2 in joint_moves(graph, rule, a, b)
                    if dist[a2][b2] >= k
                ]

    parent: dict[int, int | None] = {}
    queue = deque()
    goal = None
    for pair in moves:
        a, b = divmod(pair, n)
        state = (pair << shift) | (1 << (a + n)) | (1 << b)
        parent[state] = None
        queue.append(state)
    while queue and goal is None:
        state = queue.popleft()
        pair = state >> shift
        seen_a = (state >> n) & full
        seen_b = state & full
        if seen_a == full and seen_b == full:
            goal = state
            break
        for nxt, bit_a, bit_b in moves[pair]:
            child = (nxt << shift) | ((seen_a | bit_a) << n) | (seen_b | bit_b)
            if child not in parent:
                parent[child] = state
                queue.append(child)
    if goal is None:
        return None

    chain = []
    state = goal
    while state is not None:
        chain.append(divmod(state >> shift, n))
        state = parent[state]
    chain.reverse()
    return [a for a, _ in chain], [b for _, b in chain]


def span_oracle(graph: Graph, rule: MovementRule, k: int, *, cap: int = ORACLE_CAP) -> bool:
    """Brute force: do two tracks of the rule's kind exist that both cover the graph and stay ``k`` apart?"""
    return _oracle_search(graph, rule, k, cap) is not None


def span_oracle_value(graph: Graph, rule: MovementRule, *, cap: int = ORACLE_CAP) -> SpanReport:
    if graph.vertex_count > cap:
        raise OracleCapExceeded(f"oracle is capped at {cap} vertices, graph has {graph.vertex_count}")
    graph.require_connected()
    for k in range(diameter(graph), -1, -1):
        found = _oracle_search(graph, rule, k, cap)
        if found is not None:
            f, g = found
            return SpanReport(rule, k, "oracle", TrackWitness(tuple(f), tuple(g)))
    raise GraphPreconditionError("no track pair exists at distance 0")

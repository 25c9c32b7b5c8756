from __future__ import annotations

import itertools
from collections import deque

import pytest

from layerspan.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def bfs_distances(n: int, edges) -> list[list[int | None]]:
    """Plain BFS over an edge list, independent of Graph.dist."""
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    out = []
    for s in range(n):
        row: list[int | None] = [None] * n
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if row[w] is None:
                    row[w] = row[u] + 1
                    q.append(w)
        out.append(row)
    return out


def connected_graphs_up_to(max_n: int) -> list[Graph]:
    """All connected graphs on 1..max_n vertices, one per isomorphism class."""
    graphs = []
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        perms = list(itertools.permutations(range(n)))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            dist = bfs_distances(n, edges)
            if any(d is None for d in dist[0]):
                continue
            canon = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms)
            if canon in seen:
                continue
            seen.add(canon)
            graphs.append(Graph(n, edges, name=f"g{n}_{mask}"))
    return graphs


@pytest.fixture(scope="session")
def small_connected_graphs() -> list[Graph]:
    return connected_graphs_up_to(5)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

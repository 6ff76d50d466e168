"""Small graph builders shared across test modules."""

from oddspan.graph_core import Graph, edge


def cycle(n: int) -> Graph:
    return Graph(n, (edge(v, (v + 1) % n) for v in range(n)))


def path(n: int) -> Graph:
    return Graph(n, ((v, v + 1) for v in range(n - 1)))


def complete(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def es(*pairs) -> frozenset:
    return frozenset(edge(u, v) for u, v in pairs)

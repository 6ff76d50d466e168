"""Two edge-disjoint spanning trees, or a partition certificate.

The k = 2 case of the Nash-Williams/Tutte packing theorem.  The
augmenting scheme is matroid-union style: edges are offered to either
forest in canonical order; when an edge fits neither forest directly, a
breadth-first search over swap moves (relocate an edge of one forest
into the other to make room) either finds an augmenting chain or labels
a closed edge set whose vertex spans collapse into certificate parts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import Disconnected, EmptyGraph
from .graph_core import Edge, EdgeSet, Graph, is_connected

_ROOT = ("root", -1)


@dataclass(frozen=True)
class PartitionCertificate:
    """Vertex partition with fewer than 2(|parts|-1) crossing edges."""

    parts: tuple[frozenset[int], ...]
    cross_edges: int


@dataclass(frozen=True)
class PackingOutcome:
    trees: tuple[EdgeSet, EdgeSet] | None = None
    cert: PartitionCertificate | None = None

    def __post_init__(self) -> None:
        assert (self.trees is None) != (self.cert is None)


def _forest_components(forest: dict[int, set[int]], n: int) -> list[int]:
    comp = [-1] * n
    c = 0
    for start in range(n):
        if comp[start] != -1:
            continue
        comp[start] = c
        stack = [start]
        while stack:
            x = stack.pop()
            for w in forest[x]:
                if comp[w] == -1:
                    comp[w] = c
                    stack.append(w)
        c += 1
    return comp


def _forest_path(forest: dict[int, set[int]], u: int, v: int) -> list[Edge]:
    """Edges of the unique forest path from u to v (must be connected)."""
    prev: dict[int, int] = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w in sorted(forest[x]):
            if w not in prev:
                prev[w] = x
                queue.append(w)
    path = []
    x = v
    while x != u:
        p = prev[x]
        path.append((p, x) if p < x else (x, p))
        x = p
    path.reverse()
    return path


def two_edge_disjoint_spanning_trees(g: Graph) -> PackingOutcome:
    """Pack two edge-disjoint spanning trees or certify impossibility.

    Returns:
        PackingOutcome carrying either the two trees or a
        PartitionCertificate violating the k = 2 packing inequality.
    """
    if g.n < 2:
        raise EmptyGraph("packing needs n >= 2")
    if not is_connected(g):
        raise Disconnected("packing certificates are defined for connected inputs")
    n = g.n
    forests: tuple[dict[int, set[int]], dict[int, set[int]]] = (
        {v: set() for v in range(n)},
        {v: set() for v in range(n)},
    )
    in_forest: dict[Edge, int] = {}
    failed: list[tuple[Edge, set[Edge]]] = []

    for e0 in sorted(g.edge_set()):
        comp = [_forest_components(forests[0], n), _forest_components(forests[1], n)]
        label: dict[Edge, tuple[Edge, int]] = {e0: _ROOT}
        queue: deque[tuple[Edge, int]] = deque([(e0, 0), (e0, 1)])
        chain: tuple[Edge, int] | None = None
        while queue:
            f, i = queue.popleft()
            fu, fv = f
            if comp[i][fu] != comp[i][fv]:
                chain = (f, i)
                break
            for h in _forest_path(forests[i], fu, fv):
                if h not in label:
                    label[h] = (f, i)
                    queue.append((h, 1 - i))
        if chain is None:
            failed.append((e0, set(label)))
            continue
        # Apply the swap chain: insert at the success node, then walk up
        # replacing each forest edge by the edge that wanted its slot.
        h, j = chain
        forests[j][h[0]].add(h[1])
        forests[j][h[1]].add(h[0])
        in_forest[h] = j
        parent = label[h]
        while parent != _ROOT:
            f, i = parent
            forests[i][h[0]].discard(h[1])
            forests[i][h[1]].discard(h[0])
            forests[i][f[0]].add(f[1])
            forests[i][f[1]].add(f[0])
            in_forest[f] = i
            h = f
            parent = label[h]

    t0 = frozenset(e for e, i in in_forest.items() if i == 0)
    t1 = frozenset(e for e, i in in_forest.items() if i == 1)
    if len(t0) == n - 1 and len(t1) == n - 1:
        return PackingOutcome(trees=(t0, t1))
    return PackingOutcome(cert=_extract_certificate(g, failed))


def _extract_certificate(g: Graph, failed: list[tuple[Edge, set[Edge]]]) -> PartitionCertificate:
    # Each failed edge's labeled set spans a vertex class that is doubly
    # spanned by both forests; overlapping classes merge, untouched
    # vertices become singletons.
    n = g.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if not failed:
        # All edges placed yet a forest is short: the graph itself has
        # too few edges, so the all-singletons partition certifies.
        pass
    for e0, labeled in failed:
        verts = {e0[0], e0[1]}
        for u, v in labeled:
            verts.add(u)
            verts.add(v)
        anchor = min(verts)
        for v in verts:
            ra, rv = find(anchor), find(v)
            if ra != rv:
                parent[rv] = ra
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    parts = tuple(
        frozenset(vs) for _, vs in sorted(groups.items(), key=lambda kv: min(kv[1]))
    )
    index = {}
    for k, part in enumerate(parts):
        for v in part:
            index[v] = k
    cross = sum(1 for u, v in g.edge_set() if index[u] != index[v])
    assert cross < 2 * (len(parts) - 1), (cross, len(parts))
    return PartitionCertificate(parts=parts, cross_edges=cross)


def verify_packing(g: Graph, outcome: PackingOutcome) -> bool:
    """Re-check whichever side the outcome carries against g."""
    if outcome.trees is not None:
        t0, t1 = outcome.trees
        if t0 & t1:
            return False
        return _is_spanning_tree_of(g, t0) and _is_spanning_tree_of(g, t1)
    cert = outcome.cert
    assert cert is not None
    seen: set[int] = set()
    for part in cert.parts:
        if not part or part & seen:
            return False
        seen |= part
    if seen != set(range(g.n)):
        return False
    index = {}
    for k, part in enumerate(cert.parts):
        for v in part:
            index[v] = k
    cross = sum(1 for u, v in g.edge_set() if index[u] != index[v])
    return cross == cert.cross_edges and cross < 2 * (len(cert.parts) - 1)


def _is_spanning_tree_of(g: Graph, t: EdgeSet) -> bool:
    if not t <= g.edge_set() or len(t) != g.n - 1:
        return False
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in t:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def exhaustive_pair_search(g: Graph) -> tuple[EdgeSet, EdgeSet] | None:
    """Test-support fallback: find two edge-disjoint spanning trees by
    enumerating first trees and checking the leftover edges stay
    connected.  Exponential; intended for n <= 8 cross-checks only.
    """
    from .oracle import enumerate_spanning_trees

    if not is_connected(g):
        raise Disconnected("pair search expects a connected graph")
    result: list[tuple[EdgeSet, EdgeSet]] = []

    def try_first(t1: EdgeSet) -> bool:
        rest = Graph(g.n, g.edge_set() - t1)
        if g.n == 1 or is_connected(rest):
            # A connected leftover contains a spanning tree disjoint
            # from t1; take any one of them.
            t2: list[EdgeSet] = []

            def grab(t: EdgeSet) -> bool:
                t2.append(t)
                return False

            enumerate_spanning_trees(rest, grab)
            result.append((t1, t2[0]))
            return False
        return True

    enumerate_spanning_trees(g, try_first)
    return result[0] if result else None

"""Exhaustive ground truth at desk scale.

Spanning-tree enumeration, brute-force searches for odd spanning trees and
connected odd factors, and the verifiers that every constructive module's
output must pass.  Everything here is intentionally brute force; the caps
are errors rather than silent truncation because an oracle must never lie.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import Disconnected, SizeCap
from .graph_core import EdgeSet, Graph, degrees, is_connected

NOT_SUBGRAPH = "not-subgraph"
WRONG_EDGE_COUNT = "wrong-edge-count"
HAS_CYCLE = "has-cycle"
NOT_CONNECTED = "not-connected"
NOT_SPANNING = "not-spanning"
EVEN_DEGREE_VERTEX = "even-degree-vertex"

ODD_TREE_VERTEX_CAP = 10
ODD_FACTOR_EDGE_CAP = 22


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a verifier; ``vertex`` pinpoints degree/coverage failures."""

    ok: bool
    failure: str | None = None
    vertex: int | None = None


_OK = VerifyReport(True)


def verify_odd_spanning_tree(g: Graph, t: EdgeSet) -> VerifyReport:
    """Check that t is a spanning tree of g with every degree odd.

    Checks run in a fixed order (subgraph, edge count, acyclicity, parity)
    so the reported failure is deterministic.  n-1 acyclic edges form a
    spanning tree, so no separate connectivity test is needed.
    """
    if not t <= g.edge_set():
        return VerifyReport(False, NOT_SUBGRAPH)
    if len(t) != g.n - 1:
        return VerifyReport(False, WRONG_EDGE_COUNT)
    parent = list(range(g.n))
    for u, v in sorted(t):
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            return VerifyReport(False, HAS_CYCLE)
        parent[ru] = rv
    for v, d in enumerate(degrees(t, g.n)):
        if d % 2 == 0:
            return VerifyReport(False, EVEN_DEGREE_VERTEX, v)
    return _OK


def verify_connected_odd_factor(g: Graph, f: EdgeSet) -> VerifyReport:
    if not f <= g.edge_set():
        return VerifyReport(False, NOT_SUBGRAPH)
    deg = degrees(f, g.n)
    for v, d in enumerate(deg):
        if d == 0:
            return VerifyReport(False, NOT_SPANNING, v)
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in f:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    if not all(seen):
        return VerifyReport(False, NOT_CONNECTED)
    for v, d in enumerate(deg):
        if d % 2 == 0:
            return VerifyReport(False, EVEN_DEGREE_VERTEX, v)
    return _OK


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _reconnectable(parent: list[int], ncomp: int, edges: list[tuple[int, int]], start: int) -> bool:
    # Can the components of `parent` still be merged using edges[start:]?
    scratch = parent.copy()
    left = ncomp
    for k in range(start, len(edges)):
        u, v = edges[k]
        ru, rv = _find(scratch, u), _find(scratch, v)
        if ru != rv:
            scratch[ru] = rv
            left -= 1
            if left == 1:
                return True
    return left == 1


def enumerate_spanning_trees(
    g: Graph, visit: Callable[[EdgeSet], object] | None = None
) -> int:
    """Visit every spanning tree of g once; return how many were visited.

    Deletion/contraction over edges in canonical order: including an edge
    contracts it (union-find), excluding it is allowed only when the
    remaining edges can still reconnect the current components (the bridge
    shortcut: bridges are never excluded).  A callback returning False
    stops the enumeration early; the count so far is returned.

    The recursion is exponential; callers are expected to stay at desk
    scale (soft cap n <= 10, not enforced).
    """
    if not is_connected(g):
        raise Disconnected(f"graph with {g.n} vertices is not connected")
    n = g.n
    if n == 1:
        if visit is not None:
            visit(frozenset())
        return 1
    edges = sorted(g.edge_set())
    m = len(edges)
    chosen: list[tuple[int, int]] = []
    count = 0
    stopped = False

    def rec(i: int, parent: list[int], ncomp: int) -> None:
        nonlocal count, stopped
        if stopped:
            return
        if ncomp == 1:
            count += 1
            if visit is not None and visit(frozenset(chosen)) is False:
                stopped = True
            return
        if i == m or m - i < ncomp - 1:
            return
        u, v = edges[i]
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            child = parent.copy()
            child[ru] = rv
            chosen.append(edges[i])
            rec(i + 1, child, ncomp - 1)
            chosen.pop()
            if _reconnectable(parent, ncomp, edges, i + 1):
                rec(i + 1, parent, ncomp)
        else:
            # Internal edge: never helps, exclusion cannot hurt feasibility.
            rec(i + 1, parent, ncomp)

    rec(0, list(range(n)), n)
    return count


def find_odd_spanning_tree_bruteforce(g: Graph) -> EdgeSet | None:
    """Exhaustive search for an odd spanning tree, include-first.

    Prunes on degree parity: once a vertex has no undecided incident
    edges left, its parity is final and must already be odd.
    """
    if g.n > ODD_TREE_VERTEX_CAP:
        raise SizeCap(f"odd-spanning-tree search capped at n <= {ODD_TREE_VERTEX_CAP}, got {g.n}")
    if not is_connected(g):
        raise Disconnected(f"graph with {g.n} vertices is not connected")
    n = g.n
    if n == 1:
        return None
    edges = sorted(g.edge_set())
    m = len(edges)
    deg = [0] * n
    undecided = degrees(edges, n)
    chosen: list[tuple[int, int]] = []
    found: EdgeSet | None = None

    def parity_ok(w: int) -> bool:
        return undecided[w] > 0 or deg[w] % 2 == 1

    def rec(i: int, parent: list[int], ncomp: int) -> bool:
        nonlocal found
        if ncomp == 1:
            if all(d % 2 == 1 for d in deg):
                found = frozenset(chosen)
                return True
            return False
        if i == m or m - i < ncomp - 1:
            return False
        u, v = edges[i]
        undecided[u] -= 1
        undecided[v] -= 1
        try:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                deg[u] += 1
                deg[v] += 1
                if parity_ok(u) and parity_ok(v):
                    child = parent.copy()
                    child[ru] = rv
                    chosen.append(edges[i])
                    if rec(i + 1, child, ncomp - 1):
                        return True
                    chosen.pop()
                deg[u] -= 1
                deg[v] -= 1
            if parity_ok(u) and parity_ok(v) and _reconnectable(parent, ncomp, edges, i + 1):
                return rec(i + 1, parent, ncomp)
            return False
        finally:
            undecided[u] += 1
            undecided[v] += 1

    rec(0, list(range(n)), n)
    return found


def find_connected_odd_factor_bruteforce(g: Graph) -> EdgeSet | None:
    """Exhaustive search over edge subsets for a connected odd factor."""
    if g.m > ODD_FACTOR_EDGE_CAP:
        raise SizeCap(f"odd-factor search capped at m <= {ODD_FACTOR_EDGE_CAP}, got {g.m}")
    if not is_connected(g):
        raise Disconnected(f"graph with {g.n} vertices is not connected")
    n = g.n
    edges = sorted(g.edge_set())
    m = len(edges)
    deg = [0] * n
    undecided = degrees(edges, n)
    chosen: list[tuple[int, int]] = []
    found: EdgeSet | None = None

    def parity_ok(w: int) -> bool:
        return undecided[w] > 0 or deg[w] % 2 == 1

    def connectable(parent: list[int], ncomp: int, start: int) -> bool:
        return ncomp == 1 or _reconnectable(parent, ncomp, edges, start)

    def rec(i: int, parent: list[int], ncomp: int) -> bool:
        nonlocal found
        if i == m:
            if ncomp == 1 and all(d % 2 == 1 for d in deg):
                found = frozenset(chosen)
                return True
            return False
        u, v = edges[i]
        undecided[u] -= 1
        undecided[v] -= 1
        try:
            deg[u] += 1
            deg[v] += 1
            if parity_ok(u) and parity_ok(v):
                ru, rv = _find(parent, u), _find(parent, v)
                child = parent
                nc = ncomp
                if ru != rv:
                    child = parent.copy()
                    child[ru] = rv
                    nc = ncomp - 1
                chosen.append(edges[i])
                if rec(i + 1, child, nc):
                    return True
                chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
            if parity_ok(u) and parity_ok(v) and connectable(parent, ncomp, i + 1):
                return rec(i + 1, parent, ncomp)
            return False
        finally:
            undecided[u] += 1
            undecided[v] += 1

    rec(0, list(range(n)), n)
    return found

"""Odd spanning trees in split graphs, and double stars in complements.

A split graph partitions into an independent set X and a clique Y.  For
even order there is a clean obstruction: no odd spanning tree exists
exactly when every clique vertex has an odd number of independent-set
neighbors and those neighborhoods are pairwise disjoint.  Whenever the
obstruction fails, a tree assembles from a star forest centered on Y
plus a chain-and-spokes pattern inside the clique.

The same machinery yields a spanning double star in the complement of
any even-order graph of diameter at least four.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    BadWitness,
    ConditionHolds,
    DegenerateClique,
    DiameterTooSmall,
    Disconnected,
    EmptyGraph,
    OddOrder,
)
from .graph_core import (
    EdgeSet,
    Graph,
    complement,
    degrees,
    diameter,
    edge,
    is_connected,
)
from .oracle import verify_odd_spanning_tree


@dataclass(frozen=True)
class SplitPartition:
    """Split witness: X independent, Y a clique.  Y's order matters."""

    x: frozenset[int]
    y: tuple[int, ...]


@dataclass(frozen=True)
class YStarForest:
    """Spanning star forest: each independent vertex picks one center."""

    assignment: dict[int, int]


def validate_partition(g: Graph, sp: SplitPartition) -> None:
    """Raise BadWitness unless sp is a genuine split partition of g."""
    xs = set(sp.x)
    ys = set(sp.y)
    if len(sp.y) != len(ys):
        raise BadWitness("duplicate vertices in the clique list")
    if xs & ys or xs | ys != set(range(g.n)):
        raise BadWitness("x and y must partition the vertex set")
    for u in xs:
        if g.adj[u] & xs:
            raise BadWitness(f"x side is not independent at vertex {u}")
    for v in ys:
        if not ys - {v} <= g.adj[v]:
            raise BadWitness(f"y side is not a clique at vertex {v}")


def find_split_partition(g: Graph) -> SplitPartition | None:
    """Recognize a split graph from its degree sequence.

    With degrees d_1 >= ... >= d_n and m the largest index with
    d_m >= m - 1, the graph is split iff
    sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i,
    in which case the top m vertices form a clique and the rest are
    independent.  Ties break by vertex id, so the output is canonical.
    """
    if g.n == 0:
        return SplitPartition(x=frozenset(), y=())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    d = [g.degree(v) for v in order]
    m = max(i for i in range(1, g.n + 1) if d[i - 1] >= i - 1)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    sp = SplitPartition(x=frozenset(order[m:]), y=tuple(sorted(order[:m])))
    validate_partition(g, sp)
    return sp


def _x_degrees_odd(g: Graph, sp: SplitPartition) -> bool:
    ys = set(sp.y)
    return all(len(g.adj[y] - ys) % 2 == 1 for y in sp.y)


def _neighborhoods_disjoint(g: Graph, sp: SplitPartition) -> bool:
    ys = set(sp.y)
    return all(len(g.adj[x] & ys) <= 1 for x in sp.x)


def split_no_tree_condition(g: Graph, sp: SplitPartition) -> bool:
    """True iff g has no odd spanning tree (even order, |Y| >= 2).

    Raises:
        DegenerateClique: |Y| = 1; the graph is a star, handled apart.
        OddOrder: the criterion only characterizes even order.
    """
    validate_partition(g, sp)
    if len(sp.y) == 1:
        raise DegenerateClique("singleton clique side")
    if g.n % 2:
        raise OddOrder(f"order {g.n} is odd")
    return _x_degrees_odd(g, sp) and _neighborhoods_disjoint(g, sp)


def build_y_star_forest(g: Graph, sp: SplitPartition) -> YStarForest:
    """Spanning star forest with at least one even-size star.

    Star size means leaf count.  If some center y0 has an even number
    of X-neighbors, give y0 all of them and send every other x to its
    lowest adjacent center.  Otherwise all X-degrees are odd and some x
    has two centers available; assigning everyone else lowest-first and
    then steering that x makes one star even.

    Raises:
        ConditionHolds: no even star is achievable, so no tree exists.
    """
    validate_partition(g, sp)
    ys = set(sp.y)
    assignment: dict[int, int] = {}
    even_centers = [y for y in sorted(sp.y) if len(g.adj[y] - ys) % 2 == 0]
    if even_centers:
        y0 = even_centers[0]
        for x in sorted(sp.x):
            assignment[x] = y0 if y0 in g.adj[x] else min(g.adj[x] & ys)
        return YStarForest(assignment)
    shared = [x for x in sorted(sp.x) if len(g.adj[x] & ys) >= 2]
    if not shared:
        raise ConditionHolds("all X-degrees odd with disjoint neighborhoods")
    xstar = shared[0]
    yj, yk = sorted(g.adj[xstar] & ys)[:2]
    for x in sorted(sp.x):
        if x != xstar:
            assignment[x] = min(g.adj[x] & ys)
    load = sum(1 for c in assignment.values() if c == yj)
    assignment[xstar] = yj if load % 2 == 1 else yk
    return YStarForest(assignment)


def split_odd_spanning_tree(g: Graph, sp: SplitPartition) -> EdgeSet:
    """Odd spanning tree of a connected split graph of even order.

    Reorders the clique so even stars come first, then connects the
    star forest with a chain through the odd stars and spokes from the
    remaining even centers into the chain's end.  A singleton clique
    means g is a star, which is its own odd spanning tree.

    Raises:
        OddOrder, ConditionHolds, Disconnected, EmptyGraph.
    """
    validate_partition(g, sp)
    if g.n == 0:
        raise EmptyGraph("no spanning tree in the empty graph")
    if g.n % 2:
        raise OddOrder(f"order {g.n} is odd")
    if not is_connected(g):
        raise Disconnected("split construction needs a connected graph")
    t = len(sp.y)
    if t == 1:
        return g.edge_set()
    if _x_degrees_odd(g, sp) and _neighborhoods_disjoint(g, sp):
        raise ConditionHolds("the nonexistence criterion is satisfied")
    forest = build_y_star_forest(g, sp)
    sizes = {y: 0 for y in sp.y}
    for c in forest.assignment.values():
        sizes[c] += 1
    ynew = [sp.y[i] for i in sorted(range(t), key=lambda i: (sizes[sp.y[i]] % 2, i))]
    ec = sum(1 for y in sp.y if sizes[y] % 2 == 0)
    assert ec >= 2 and ec % 2 == 0, "even-star count must be a positive even number"
    edges = {edge(x, c) for x, c in forest.assignment.items()}
    for i in range(ec - 1, t - 1):
        edges.add(edge(ynew[i], ynew[i + 1]))
    for j in range(ec - 1):
        edges.add(edge(ynew[j], ynew[t - 1]))
    tree = frozenset(edges)
    rep = verify_odd_spanning_tree(g, tree)
    assert rep.ok, rep
    return tree


def _bfs_distances(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def double_star_in_complement(g: Graph) -> EdgeSet:
    """Spanning double star in the complement of g.

    Needs even order and diameter at least 4.  Takes the least pair
    (v0, v4) at distance exactly 4 and builds an auxiliary split graph
    on clique {v0, v4}: each neighbor of v0 can only attach to v4 in
    the complement and vice versa, while vertices far from both may
    attach to either.  The split construction then returns a spanning
    tree with exactly two internal vertices.

    Raises:
        OddOrder, DiameterTooSmall, Disconnected.
    """
    if g.n % 2:
        raise OddOrder(f"order {g.n} is odd")
    diam = diameter(g)
    if diam < 4:
        raise DiameterTooSmall(diam, 4)
    v0 = v4 = -1
    for v in range(g.n):
        dist = _bfs_distances(g, v)
        far = [w for w in range(g.n) if dist[w] == 4]
        if far:
            v0, v4 = v, min(far)
            break
    assert v0 >= 0, "diameter >= 4 guarantees a distance-4 pair"
    edges = {edge(v0, v4)}
    for p in g.adj[v0]:
        edges.add(edge(p, v4))
    for q in g.adj[v4]:
        edges.add(edge(q, v0))
    near = g.adj[v0] | g.adj[v4] | {v0, v4}
    for w in range(g.n):
        if w not in near:
            edges.add(edge(w, v0))
            edges.add(edge(w, v4))
    gprime = Graph(g.n, edges)
    sp = SplitPartition(x=frozenset(range(g.n)) - {v0, v4}, y=(v0, v4))
    tree = split_odd_spanning_tree(gprime, sp)
    rep = verify_odd_spanning_tree(complement(g), tree)
    assert rep.ok, rep
    assert sum(1 for d in degrees(tree, g.n) if d >= 2) == 2
    return tree

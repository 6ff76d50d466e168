"""Graph family generators and checkable nonexistence certificates.

Seeded generators use a fixed splitmix-style 64-bit mixer (documented in
the README) so that identical parameters produce identical graphs on
every platform; golden files depend on this.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadWitness, Disconnected, EmptyGraph, OddOrder, ParityArgument
from .graph_core import (
    Bipartition,
    Graph,
    bipartition,
    complement,
    edge,
    is_connected,
    is_triangle_free,
)
from .split import SplitPartition

BIPARTITE_EVEN_PARTS = "bipartite-even-parts"
BRIDGE_EVEN_SIDES = "bridge-even-sides"
DISCONNECTED = "disconnected"
SPLIT_CONDITION = "split-condition"
EXCLUDED_FAMILY = "excluded-family"

_MASK64 = (1 << 64) - 1


class _SplitMix:
    """splitmix64: golden-ratio increment plus two xor-multiply rounds."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise EmptyGraph("complete graph needs n >= 1")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def gen_complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise EmptyGraph("complete bipartite graph needs both parts nonempty")
    return Graph(m + n, ((u, v) for u in range(m) for v in range(m, m + n)))


def gen_complete_bipartite_minus_edge(s2: int, t2: int) -> Graph:
    if s2 < 2 or t2 < 2 or s2 % 2 or t2 % 2:
        raise ParityArgument(f"part sizes must be even and >= 2, got ({s2}, {t2})")
    es = [(u, v) for u in range(s2) for v in range(s2, s2 + t2)]
    es.remove((0, s2))
    return Graph(s2 + t2, es)


def gen_c5k(k: int) -> Graph:
    """C5 with one vertex blown up into an independent set of size k.

    Vertices 0..k-1 are the independent set, each adjacent to k and k+3;
    vertices k..k+3 carry the remaining path of the 5-cycle.
    """
    if k < 1:
        raise EmptyGraph("blowup size must be >= 1")
    es = [(i, k) for i in range(k)] + [(i, k + 3) for i in range(k)]
    es += [(k, k + 1), (k + 1, k + 2), (k + 2, k + 3)]
    return Graph(k + 4, es)


def gen_bridge_join(g1: Graph, g2: Graph, u: int, v: int) -> Graph:
    """Disjoint union of g1 and g2 plus the single edge u..(v shifted)."""
    off = g1.n
    es = list(g1.edge_set())
    es += [(a + off, b + off) for a, b in g2.edge_set()]
    es.append(edge(u, v + off))
    return Graph(g1.n + g2.n, es)


def gen_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p) under the documented splitmix stream, one draw per pair.

    Pairs are drawn in lexicographic order, so the graph is a pure
    function of (n, p, seed).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = _SplitMix(seed)
    threshold = int(p * (1 << 64))
    es = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next() < threshold:
                es.append((u, v))
    return Graph(n, es)


def gen_random_split(s: int, t: int, p: float, seed: int) -> tuple[Graph, SplitPartition]:
    """Random split graph: clique on Y, independent X, seeded X-Y edges.

    X = 0..s-1, Y = s..s+t-1.  Connectivity is not guaranteed; callers
    filter.
    """
    if s < 0 or t < 1:
        raise ValueError(f"need s >= 0 and t >= 1, got ({s}, {t})")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = _SplitMix(seed)
    threshold = int(p * (1 << 64))
    es = [(u, v) for u in range(s, s + t) for v in range(u + 1, s + t)]
    for x in range(s):
        for y in range(s, s + t):
            if rng.next() < threshold:
                es.append((x, y))
    sp = SplitPartition(x=frozenset(range(s)), y=tuple(range(s, s + t)))
    return Graph(s + t, es), sp


@dataclass(frozen=True)
class NonexistenceReason:
    """A reason g has no odd spanning tree, with a re-checkable witness.

    kind is one of the module constants; the witness shape depends on it:
    a Bipartition, a bridge edge, a component vertex set, a
    SplitPartition, or an excluded-family name.
    """

    kind: str
    witness: object


def _components_without(g: Graph, cut: tuple[int, int]) -> list[frozenset[int]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = [start]
        while stack:
            x = stack.pop()
            for w in g.adj[x]:
                if edge(x, w) == cut or seen[w]:
                    continue
                seen[w] = True
                comp.append(w)
                stack.append(w)
        comps.append(frozenset(comp))
    return comps


def check_nonexistence(g: Graph, r: NonexistenceReason) -> bool:
    """Re-verify that r genuinely proves g has no odd spanning tree.

    Malformed witnesses (not a partition of V, a non-edge bridge, an
    unknown family name) raise BadWitness; well-formed witnesses that
    simply fail to prove anything return False.
    """
    if r.kind == BIPARTITE_EVEN_PARTS:
        w = r.witness
        if not isinstance(w, Bipartition):
            raise BadWitness("expected a Bipartition witness")
        if sorted(w.left | w.right) != list(range(g.n)) or (w.left & w.right):
            raise BadWitness("witness parts do not partition the vertex set")
        if not is_connected(g):
            return False
        if len(w.left) % 2 or len(w.right) % 2:
            return False
        return all((u in w.left) != (v in w.left) for u, v in g.edge_set())
    if r.kind == BRIDGE_EVEN_SIDES:
        w = r.witness
        if not (isinstance(w, tuple) and len(w) == 2 and g.has_edge(*w)):
            raise BadWitness("witness is not an edge of the graph")
        if not is_connected(g):
            return False
        comps = _components_without(g, edge(*w))
        return len(comps) == 2 and all(len(c) % 2 == 0 for c in comps)
    if r.kind == DISCONNECTED:
        w = r.witness
        if not isinstance(w, frozenset) or not w or len(w) >= g.n:
            raise BadWitness("witness must be a proper nonempty vertex subset")
        if any(not 0 <= v < g.n for v in w):
            raise BadWitness("witness vertex out of range")
        return all((u in w) == (v in w) for u, v in g.edge_set())
    if r.kind == SPLIT_CONDITION:
        from .split import split_no_tree_condition, validate_partition

        w = r.witness
        if not isinstance(w, SplitPartition):
            raise BadWitness("expected a SplitPartition witness")
        validate_partition(g, w)
        if not is_connected(g) or len(w.y) < 2 or g.n % 2:
            return False
        return split_no_tree_condition(g, w)
    if r.kind == EXCLUDED_FAMILY:
        from . import trifree

        w = r.witness
        families = {
            trifree.COMPLETE_BIPARTITE,
            trifree.TWO_K2,
            trifree.C5_OF_2,
            trifree.K2S2T,
            trifree.K2S2T_MINUS_E,
        }
        if w not in families:
            raise BadWitness(f"unknown excluded family {w!r}")
        h = complement(g)
        if not is_triangle_free(h):
            return False
        return trifree.recognize_excluded(h) == w
    raise BadWitness(f"unknown reason kind {r.kind!r}")


def find_nonexistence(g: Graph) -> NonexistenceReason | None:
    """Search for a parity-based nonexistence witness.

    Bipartite with both classes even wins first; otherwise the first
    bridge (canonical edge order) with two even sides.  Absence proves
    nothing.
    """
    if not is_connected(g):
        raise Disconnected("nonexistence search expects a connected graph")
    if g.n % 2:
        raise OddOrder(f"order {g.n} is odd; no odd graph of odd order exists")
    bp = bipartition(g)
    if bp is not None and len(bp.left) % 2 == 0 and len(bp.right) % 2 == 0:
        return NonexistenceReason(BIPARTITE_EVEN_PARTS, bp)
    for e in sorted(g.edge_set()):
        comps = _components_without(g, e)
        if len(comps) == 2 and all(len(c) % 2 == 0 for c in comps):
            return NonexistenceReason(BRIDGE_EVEN_SIDES, e)
    return None

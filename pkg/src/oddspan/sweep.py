"""Exhaustive and seeded verification universes.

Each sweep pits a constructive module against the brute-force oracle
over a full labeled universe at small n plus a deterministic seeded
sample at larger n, and returns a report whose disagreement list must
stay empty.  Workers > 1 distributes cases over a process pool; the
merge is by case order, so reports are identical at any worker count.
"""

from __future__ import annotations

import multiprocessing
from collections.abc import Iterator
from dataclasses import dataclass, field

from .dense_tree import odd_spanning_tree_dense
from .errors import GreedyStalled, NoTreePacking, OddOrder
from .families import (
    gen_complete_bipartite,
    gen_complete_bipartite_minus_edge,
    gen_c5k,
    gen_random,
    gen_random_split,
)
from .graph_core import (
    Edge,
    Graph,
    bipartition,
    complement,
    edge,
    edge_connectivity,
    is_connected,
    is_triangle_free,
    tree_bipartition,
)
from .odd_factor import connected_odd_factor
from .oracle import (
    ODD_FACTOR_EDGE_CAP,
    ODD_TREE_VERTEX_CAP,
    enumerate_spanning_trees,
    find_connected_odd_factor_bruteforce,
    find_odd_spanning_tree_bruteforce,
    verify_connected_odd_factor,
    verify_odd_spanning_tree,
)
from .split import find_split_partition, split_no_tree_condition, split_odd_spanning_tree
from .tree_packing import exhaustive_pair_search, two_edge_disjoint_spanning_trees, verify_packing
from .trifree import trifree_complement_tree

Case = tuple[int, tuple[Edge, ...]]


@dataclass
class SweepReport:
    """Outcome tallies plus a must-stay-empty disagreement list."""

    universe: str
    checked: int = 0
    verdicts: dict[str, int] = field(default_factory=dict)
    disagreements: list[str] = field(default_factory=list)
    coverage: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def lines(self) -> list[str]:
        out = [f"universe {self.universe}", f"checked {self.checked}"]
        for k in sorted(self.verdicts):
            out.append(f"verdict {k} {self.verdicts[k]}")
        for k in sorted(self.coverage):
            out.append(f"coverage {k} {self.coverage[k]}")
        out.append(f"disagreements {len(self.disagreements)}")
        out.extend(self.disagreements)
        return out


def _pairs(n: int) -> list[Edge]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on vertex set 0..n-1, by edge bitmask."""
    ps = _pairs(n)
    for mask in range(1 << len(ps)):
        yield Graph(n, (p for i, p in enumerate(ps) if mask >> i & 1))


def all_connected_graphs(n: int) -> Iterator[Graph]:
    return (g for g in all_graphs(n) if is_connected(g))


def circulant(n: int, steps: tuple[int, ...]) -> Graph:
    return Graph(n, (edge(v, (v + s) % n) for v in range(n) for s in steps))


def build_theta(alpha: int, beta: int, gamma: int) -> Graph:
    """Triangle-free graph whose complement is a two-clique theta shape.

    Labels: 0..gamma-1 shared, then the two attachment vertices, then
    alpha and beta clique-side vertices.  The returned graph joins the
    first attachment to the beta and shared sides, the second to the
    alpha and shared sides, and the alpha side completely to the beta
    side.
    """
    assert alpha >= 1 and beta >= 1 and gamma >= 1
    cs = list(range(gamma))
    x1, x2 = gamma, gamma + 1
    a_side = list(range(gamma + 2, gamma + 2 + alpha))
    b_side = list(range(gamma + 2 + alpha, gamma + 2 + alpha + beta))
    edges = [edge(x1, w) for w in b_side + cs]
    edges += [edge(x2, w) for w in a_side + cs]
    edges += [edge(a, b) for a in a_side for b in b_side]
    return Graph(gamma + 2 + alpha + beta, edges)


def crafted_trifree_instances() -> list[tuple[str, Graph, str]]:
    """Named instances steering each construction branch or family."""
    k44_at_one = [
        (p, q)
        for p in (1, 2, 3, 4)
        for q in (0, 5, 6, 7)
        if (p, q) not in ((1, 5), (1, 6))
    ]
    k44_matching = [
        (p, q)
        for p in (0, 1, 2, 3)
        for q in (4, 5, 6, 7)
        if (p, q) not in ((0, 4), (1, 5))
    ]
    k24_matching = [
        (p, q) for p in (0, 1) for q in (2, 3, 4, 5) if (p, q) not in ((0, 2), (1, 3))
    ]
    theta_gap = build_theta(1, 2, 3)
    theta_gap = Graph(theta_gap.n, theta_gap.edge_set() - {(5, 6)})
    return [
        ("three-matchings", Graph(6, [(0, 1), (2, 3), (4, 5)]), "T1"),
        ("edge-plus-star", Graph(8, [(0, 1)] + [(2, y) for y in range(3, 8)]), "T1"),
        (
            "cube-like",
            Graph(
                8,
                [
                    (0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7),
                    (1, 5), (1, 6), (2, 5), (2, 7), (3, 6), (3, 7),
                ],
            ),
            "T2",
        ),
        ("hexagon", circulant(6, (1,)), "T3"),
        ("k44-minus-two-at-one", Graph(8, k44_at_one), "T4"),
        ("k44-minus-matching", Graph(8, k44_matching), "T5"),
        ("k24-minus-matching", Graph(6, k24_matching), "T6"),
        ("theta-with-gap", theta_gap, "T7"),
        ("theta-2-1-3", build_theta(2, 1, 3), "T9"),
        ("theta-3-3-2", build_theta(3, 3, 2), "T10"),
        ("blown-cycle-4", gen_c5k(4), "T11"),
        ("theta-1-4-1", build_theta(1, 4, 1), "T11"),
        ("theta-4-1-1", build_theta(4, 1, 1), "T11"),
        ("theta-2-3-1", build_theta(2, 3, 1), "T12"),
        ("theta-3-2-1", build_theta(3, 2, 1), "T12"),
        ("isolated-anchor", Graph(4, [(1, 2)]), "STAR"),
        ("empty-pair", Graph(2, []), "STAR"),
        ("two-k2", Graph(4, [(0, 1), (2, 3)]), "two-k2"),
        ("c5-of-2", gen_c5k(2), "c5-of-2"),
        ("k22", gen_complete_bipartite(2, 2), "k2s2t"),
        ("k24-minus-edge", gen_complete_bipartite_minus_edge(2, 4), "k2s2t-minus-e"),
        ("k13", gen_complete_bipartite(1, 3), "complete-bipartite"),
    ]


def _case(g: Graph) -> Case:
    return (g.n, tuple(sorted(g.edge_set())))


def _run(worker, cases: list, workers: int) -> list:
    if workers <= 1 or len(cases) < 64:
        return [worker(c) for c in cases]
    with multiprocessing.Pool(workers) as pool:
        return list(pool.imap(worker, cases, chunksize=64))


def _seeded(make, want: int, limit: int = 500000) -> list:
    """Deterministic stream: make(i) returns an item or None to skip."""
    out = []
    i = 0
    while len(out) < want:
        assert i < limit, "seeded universe failed to fill; filters too tight"
        item = make(i)
        i += 1
        if item is not None:
            out.append(item)
    return out


def _dense_case(case: Case) -> str | None:
    n, edges = case
    g = Graph(n, edges)
    try:
        tree = odd_spanning_tree_dense(g)
    except GreedyStalled:
        return f"greedy stalled on n={n} edges={edges}"
    rep = verify_odd_spanning_tree(g, tree)
    if not rep.ok:
        return f"bad dense tree on n={n} edges={edges}: {rep}"
    return None


def sweep_dense(seeded: int = 500, workers: int = 1, max_n: int = 6) -> SweepReport:
    """Greedy tree on every dense-enough graph: small-n exhaustive plus
    a seeded slice at n in 8..12."""
    cases: list[Case] = []
    for n in (2, 4, 6):
        if n > max_n:
            continue
        bound = n // 2 + 1
        for g in all_connected_graphs(n):
            if g.min_degree() >= bound:
                cases.append(_case(g))

    def make(i: int) -> Case | None:
        n = (8, 10, 12)[i % 3]
        g = gen_random(n, 0.85, i)
        if is_connected(g) and g.min_degree() >= n // 2 + 1:
            return _case(g)
        return None

    cases.extend(_seeded(make, seeded))
    rep = SweepReport(universe=f"dense min-degree graphs, exhaustive n<={max_n} plus {seeded} seeded")
    for failure in _run(_dense_case, cases, workers):
        rep.checked += 1
        if failure:
            rep.disagreements.append(failure)
        else:
            rep.verdicts["tree"] = rep.verdicts.get("tree", 0) + 1
    return rep


def _split_case(case: Case) -> tuple[str | None, str]:
    n, edges = case
    g = Graph(n, edges)
    sp = find_split_partition(g)
    assert sp is not None and len(sp.y) >= 2
    if n % 2:
        try:
            split_no_tree_condition(g, sp)
            return (f"odd order accepted by condition: n={n} edges={edges}", "odd-order")
        except OddOrder:
            pass
        if find_odd_spanning_tree_bruteforce(g) is not None:
            return (f"odd-order graph has a tree?! n={n} edges={edges}", "odd-order")
        return (None, "odd-order")
    cond = split_no_tree_condition(g, sp)
    oracle_none = find_odd_spanning_tree_bruteforce(g) is None
    if cond != oracle_none:
        return (f"criterion {cond} vs oracle none={oracle_none} on n={n} edges={edges}", "mismatch")
    if cond:
        return (None, "nonexistent")
    tree = split_odd_spanning_tree(g, sp)
    rep = verify_odd_spanning_tree(g, tree)
    if not rep.ok:
        return (f"bad split tree on n={n} edges={edges}: {rep}", "tree")
    leafy = all(sum(1 for e in tree if x in e) == 1 for x in sp.x)
    if not leafy:
        return (f"independent-side vertex is not a leaf on n={n} edges={edges}", "tree")
    return (None, "tree")


def sweep_split(seeded: int = 500, workers: int = 1, max_n: int = 6) -> SweepReport:
    """Criterion-vs-oracle equivalence on split graphs with |Y| >= 2."""
    cases: list[Case] = []
    for n in range(2, max_n + 1):
        for g in all_connected_graphs(n):
            sp = find_split_partition(g)
            if sp is not None and len(sp.y) >= 2:
                cases.append(_case(g))
    grid = [(s, t) for s in range(1, 7) for t in range(2, 6) if (s + t) % 2 == 0]
    ps = (0.3, 0.6, 0.9)

    def make(i: int) -> Case | None:
        s, t = grid[i % len(grid)]
        p = ps[(i // len(grid)) % len(ps)]
        g, sp = gen_random_split(s, t, p, i)
        if is_connected(g):
            return _case(g)
        return None

    cases.extend(_seeded(make, seeded))
    rep = SweepReport(universe=f"connected split graphs, exhaustive n<={max_n} plus {seeded} seeded")
    for failure, tag in _run(_split_case, cases, workers):
        rep.checked += 1
        rep.verdicts[tag] = rep.verdicts.get(tag, 0) + 1
        if failure:
            rep.disagreements.append(failure)
    return rep


def _trifree_case(case: Case) -> tuple[str | None, str]:
    n, edges = case
    g = Graph(n, edges)
    decision = trifree_complement_tree(g)
    gbar = complement(g)
    if n <= ODD_TREE_VERTEX_CAP:
        if not is_connected(gbar):
            oracle_exists = False
        else:
            oracle_exists = find_odd_spanning_tree_bruteforce(gbar) is not None
        if decision.exists != oracle_exists:
            return (
                f"decision {decision.exists} vs oracle {oracle_exists} on n={n} edges={edges}",
                "mismatch",
            )
    if not decision.exists:
        return (None, f"excluded:{decision.family}")
    rep = verify_odd_spanning_tree(gbar, decision.tree)
    if not rep.ok:
        return (f"bad tree on n={n} edges={edges}: {rep}", "exists")
    return (None, f"tree:{decision.tree_id}")


def sweep_trifree(seeded: int = 300, workers: int = 1, max_n: int = 6) -> SweepReport:
    """Triangle-free decision vs oracle on the complement.

    Universe: every labeled triangle-free graph of even order up to
    max_n, the crafted per-branch instances, and seeded triangle-free
    samples at n = 8.
    """
    cases: list[Case] = []
    for n in (2, 4, 6):
        if n > max_n:
            continue
        for g in all_graphs(n):
            if is_triangle_free(g):
                cases.append(_case(g))
    for _, g, _ in crafted_trifree_instances():
        cases.append(_case(g))

    def make(i: int) -> Case | None:
        g = gen_random(8, 0.3, i)
        return _case(g) if is_triangle_free(g) else None

    cases.extend(_seeded(make, seeded))
    rep = SweepReport(universe=f"triangle-free graphs, exhaustive even n<={max_n} plus crafted plus {seeded} seeded")
    for failure, tag in _run(_trifree_case, cases, workers):
        rep.checked += 1
        if failure:
            rep.disagreements.append(failure)
        elif tag.startswith("tree:"):
            tid = tag.split(":", 1)[1]
            rep.verdicts["exists"] = rep.verdicts.get("exists", 0) + 1
            rep.coverage[tid] = rep.coverage.get(tid, 0) + 1
        else:
            rep.verdicts["excluded"] = rep.verdicts.get("excluded", 0) + 1
    return rep


def _packing_case(case: Case) -> tuple[str | None, str]:
    n, edges = case
    g = Graph(n, edges)
    outcome = two_edge_disjoint_spanning_trees(g)
    if not verify_packing(g, outcome):
        return (f"packing outcome fails verification on n={n} edges={edges}", "invalid")
    if outcome.trees is not None:
        return (None, "trees")
    if exhaustive_pair_search(g) is not None:
        return (
            f"certificate issued but a disjoint pair exists on n={n} edges={edges}",
            "certificate",
        )
    if edge_connectivity(g) >= 4:
        return (f"4-edge-connected graph got a certificate: n={n} edges={edges}", "certificate")
    return (None, "certificate")


def sweep_packing(workers: int = 1, max_n: int = 6) -> SweepReport:
    """Tree packing vs exhaustive pair search on all connected graphs."""
    cases = [_case(g) for n in range(2, max_n + 1) for g in all_connected_graphs(n)]
    rep = SweepReport(universe=f"connected graphs n<={max_n}")
    for failure, tag in _run(_packing_case, cases, workers):
        rep.checked += 1
        rep.verdicts[tag] = rep.verdicts.get(tag, 0) + 1
        if failure:
            rep.disagreements.append(failure)
    return rep


def _factor_case(case: Case) -> str | None:
    n, edges = case
    g = Graph(n, edges)
    try:
        trace = connected_odd_factor(g)
    except NoTreePacking:
        return f"no tree packing on 4-edge-connected n={n} edges={edges}"
    rep = verify_connected_odd_factor(g, trace.result)
    if not rep.ok:
        return f"bad factor on n={n} edges={edges}: {rep}"
    if g.m <= ODD_FACTOR_EDGE_CAP:
        if find_connected_odd_factor_bruteforce(g) is None:
            return f"oracle denies any factor on n={n} edges={edges}"
    return None


def sweep_factor(seeded: int = 100, workers: int = 1) -> SweepReport:
    """Parity-repair factors on named graphs plus seeded 4-edge-connected ones."""
    named = [
        Graph(6, ((u, v) for u in range(6) for v in range(u + 1, 6))),
        Graph(8, ((u, v) for u in range(8) for v in range(u + 1, 8))),
        gen_complete_bipartite(4, 4),
        circulant(8, (1, 2)),
    ]
    cases = [_case(g) for g in named]
    grid = (6, 8, 10, 12)
    ps = (0.7, 0.85)

    def make(i: int) -> Case | None:
        n = grid[i % len(grid)]
        p = ps[(i // len(grid)) % len(ps)]
        g = gen_random(n, p, i)
        if is_connected(g) and edge_connectivity(g) >= 4:
            return _case(g)
        return None

    cases.extend(_seeded(make, seeded))
    rep = SweepReport(universe=f"named 4-edge-connected graphs plus {seeded} seeded")
    for failure in _run(_factor_case, cases, workers):
        rep.checked += 1
        if failure:
            rep.disagreements.append(failure)
        else:
            rep.verdicts["factor"] = rep.verdicts.get("factor", 0) + 1
    return rep


def _bipartition_case(case: Case) -> tuple[str | None, str]:
    n, edges = case
    g = Graph(n, edges)
    bp = bipartition(g)
    if bp is not None:
        want = bp.unordered()
        bad: list[str] = []

        def check(t):
            if tree_bipartition(t, n).unordered() != want:
                bad.append(f"tree {sorted(t)} disagrees on n={n} edges={edges}")
                return False
            return None

        enumerate_spanning_trees(g, check)
        return (bad[0] if bad else None, "bipartite")
    seen: set[frozenset[frozenset[int]]] = set()

    def collect(t):
        seen.add(tree_bipartition(t, n).unordered())
        return False if len(seen) >= 2 else None

    enumerate_spanning_trees(g, collect)
    if len(seen) < 2:
        return (f"non-bipartite graph with a forced partition: n={n} edges={edges}", "non-bipartite")
    return (None, "non-bipartite")


def sweep_bipartition(seeded: int = 200, workers: int = 1, max_n: int = 6) -> SweepReport:
    """Spanning trees of bipartite graphs all inherit the bipartition;
    non-bipartite graphs always exhibit two differing tree partitions."""
    cases = [_case(g) for n in range(2, max_n + 1) for g in all_connected_graphs(n)]
    ps = (0.3, 0.5, 0.7)

    def make(i: int) -> Case | None:
        g = gen_random(7, ps[i % len(ps)], i)
        if is_connected(g) and bipartition(g) is None:
            return _case(g)
        return None

    cases.extend(_seeded(make, seeded))
    rep = SweepReport(universe=f"connected graphs n<={max_n} plus {seeded} seeded non-bipartite n=7")
    for failure, tag in _run(_bipartition_case, cases, workers):
        rep.checked += 1
        rep.verdicts[tag] = rep.verdicts.get(tag, 0) + 1
        if failure:
            rep.disagreements.append(failure)
    return rep

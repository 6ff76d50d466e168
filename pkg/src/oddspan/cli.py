"""Command line front end: generate, decide, construct, verify, sweep.

Graph wire format is a plain edge list: an ``n m`` header, then m lines
``u v`` with 0-based vertex ids below n, LF separated, ``#`` starting a
comment that runs to end of line.  Certificates are line oriented too:
a ``VERDICT method`` header, then ``T u v`` witness edges, ``P name:a,b``
vertex parts, ``R reason [args]``, and ``C k`` counts.

Exit codes: 0 EXISTS or plain success, 1 NOT_EXISTS, 2 UNKNOWN,
64 usage, 65 bad input data, 70 internal invariant failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .dense_tree import odd_spanning_tree_dense
from .errors import (
    BadWitness,
    ConditionHolds,
    DegenerateClique,
    DiameterTooSmall,
    Disconnected,
    DuplicateEdge,
    EmptyGraph,
    ExhaustedCases,
    GreedyStalled,
    MinDegreeTooLow,
    NoTreePacking,
    NotTriangleFree,
    OddOrder,
    ParityArgument,
    ParseError,
    SelfLoop,
)
from .families import (
    find_nonexistence,
    gen_bridge_join,
    gen_complete,
    gen_complete_bipartite,
    gen_complete_bipartite_minus_edge,
    gen_c5k,
    gen_random,
    gen_random_split,
)
from .graph_core import (
    EdgeSet,
    Graph,
    complement,
    diameter,
    edge,
    edge_connectivity,
    is_connected,
    is_triangle_free,
)
from .odd_factor import connected_odd_factor
from .oracle import (
    ODD_TREE_VERTEX_CAP,
    find_odd_spanning_tree_bruteforce,
    verify_connected_odd_factor,
    verify_odd_spanning_tree,
)
from .split import double_star_in_complement, find_split_partition, split_no_tree_condition, split_odd_spanning_tree
from .sweep import (
    sweep_bipartition,
    sweep_dense,
    sweep_factor,
    sweep_packing,
    sweep_split,
    sweep_trifree,
)
from .trifree import trifree_complement_tree

EXISTS = "EXISTS"
NOT_EXISTS = "NOT_EXISTS"
UNKNOWN = "UNKNOWN"

_VERDICT_EXIT = {EXISTS: 0, NOT_EXISTS: 1, UNKNOWN: 2}

EX_USAGE = 64
EX_DATA = 65
EX_INTERNAL = 70


@dataclass(frozen=True)
class Certificate:
    """One verdict with a machine-checkable payload."""

    verdict: str
    method: str
    edges: EdgeSet | None = None
    parts: tuple[tuple[str, tuple[int, ...]], ...] = ()
    reason: str | None = None
    count: int | None = None
    verified: bool = False


def parse_graph(text: str) -> Graph:
    """Strict edge-list reader; rejects self loops and repeated edges."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))
    if not rows:
        raise ParseError(1, "missing 'n m' header")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(lineno, "header must be two integers 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(lineno, "header must be two integers 'n m'") from None
    if n < 0 or m < 0:
        raise ParseError(lineno, "negative count in header")
    if len(rows) - 1 != m:
        raise ParseError(lineno, f"header promises {m} edges, found {len(rows) - 1}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise ParseError(lineno, "edge line must be two integers 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, "edge line must be two integers 'u v'") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex id out of range 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"line {lineno}: self loop at {u}")
        e = edge(u, v)
        if e in seen:
            raise DuplicateEdge(f"line {lineno}: edge {e[0]} {e[1]} repeated")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def emit_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edge_set()))
    return "\n".join(lines) + "\n"


def emit_certificate(c: Certificate) -> str:
    # an EXISTS answer is only ever emitted once its witness re-verified
    assert c.verified or c.verdict in (NOT_EXISTS, UNKNOWN), "unverified EXISTS"
    lines = [f"{c.verdict} {c.method}"]
    lines.extend(f"T {u} {v}" for u, v in sorted(c.edges or ()))
    lines.extend(f"P {name}:{','.join(str(v) for v in vs)}" for name, vs in c.parts)
    if c.reason is not None:
        lines.append(f"R {c.reason}")
    if c.count is not None:
        lines.append(f"C {c.count}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    header: tuple[str, str] | None = None
    edges: set[tuple[int, int]] = set()
    parts: list[tuple[str, tuple[int, ...]]] = []
    reason: str | None = None
    count: int | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.strip()
        if not body:
            continue
        if header is None:
            bits = body.split()
            if len(bits) != 2 or bits[0] not in _VERDICT_EXIT:
                raise ParseError(lineno, "expected 'VERDICT method' header")
            header = (bits[0], bits[1])
            continue
        tag, _, rest = body.partition(" ")
        if tag == "T":
            bits = rest.split()
            if len(bits) != 2:
                raise ParseError(lineno, "T line must be 'T u v'")
            edges.add(edge(int(bits[0]), int(bits[1])))
        elif tag == "P":
            name, _, csv = rest.partition(":")
            vs = tuple(int(x) for x in csv.split(",") if x != "")
            parts.append((name, vs))
        elif tag == "R":
            reason = rest
        elif tag == "C":
            count = int(rest)
        else:
            raise ParseError(lineno, f"unknown certificate line tag {tag!r}")
    if header is None:
        raise ParseError(1, "empty certificate")
    return Certificate(
        verdict=header[0],
        method=header[1],
        edges=frozenset(edges) if edges else None,
        parts=tuple(parts),
        reason=reason,
        count=count,
    )


def _part(name: str, vs) -> tuple[str, tuple[int, ...]]:
    return (name, tuple(sorted(vs)))


def _tree_cert(g: Graph, method: str, tree: EdgeSet) -> Certificate:
    rep = verify_odd_spanning_tree(g, tree)
    assert rep.ok, f"constructed tree failed verification: {rep}"
    return Certificate(EXISTS, method, edges=tree, verified=True)


def _factor_cert(g: Graph, method: str, factor: EdgeSet) -> Certificate:
    rep = verify_connected_odd_factor(g, factor)
    assert rep.ok, f"constructed factor failed verification: {rep}"
    return Certificate(EXISTS, method, edges=factor, verified=True)


def _split_nonexistence(sp) -> Certificate:
    return Certificate(
        NOT_EXISTS,
        "split-criterion",
        parts=(_part("x", sp.x), _part("y", sp.y)),
        reason="split-condition",
    )


def decide(g: Graph) -> Certificate:
    """Escalate through the decision methods from cheap to exhaustive."""
    if g.n == 0:
        raise EmptyGraph("no vertices")
    if not is_connected(g):
        return Certificate(NOT_EXISTS, "disconnected", reason="disconnected")
    if g.n % 2:
        return Certificate(NOT_EXISTS, "odd-order", reason=f"odd-order {g.n}")
    why = find_nonexistence(g)
    if why is not None:
        if why.kind == "bipartite-even-parts":
            bp = why.witness
            return Certificate(
                NOT_EXISTS,
                why.kind,
                parts=(_part("left", bp.left), _part("right", bp.right)),
                reason=f"{why.kind} {len(bp.left)} {len(bp.right)}",
            )
        u, v = why.witness
        return Certificate(NOT_EXISTS, why.kind, reason=f"{why.kind} {u} {v}")
    sp = find_split_partition(g)
    if sp is not None and len(sp.y) >= 2:
        if split_no_tree_condition(g, sp):
            return _split_nonexistence(sp)
        return _tree_cert(g, "split-criterion", split_odd_spanning_tree(g, sp))
    h = complement(g)
    if is_triangle_free(h):
        try:
            decision = trifree_complement_tree(h)
        except ExhaustedCases:
            decision = None
        if decision is not None:
            if decision.exists:
                return _tree_cert(g, "trifree-complement", decision.tree)
            return Certificate(
                NOT_EXISTS,
                "trifree-complement",
                reason=f"excluded-family {decision.family}",
            )
    if g.min_degree() >= g.n // 2 + 1:
        return _tree_cert(g, "dense-min-degree", odd_spanning_tree_dense(g))
    if g.n <= ODD_TREE_VERTEX_CAP:
        tree = find_odd_spanning_tree_bruteforce(g)
        if tree is None:
            return Certificate(NOT_EXISTS, "oracle-exhaustive", reason="oracle-exhaustive")
        return _tree_cert(g, "oracle-exhaustive", tree)
    return Certificate(
        UNKNOWN, "oracle-capped", reason=f"size-cap {ODD_TREE_VERTEX_CAP}"
    )


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract here is 64
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EX_DATA) from None


def _load_graph(args) -> Graph:
    return parse_graph(_read_text(args.path))


def _workers() -> int:
    raw = os.environ.get("ODD_SPAN_THREADS", "").strip()
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def _emit(cert: Certificate) -> int:
    sys.stdout.write(emit_certificate(cert))
    return _VERDICT_EXIT[cert.verdict]


def _cmd_gen(args) -> int:
    fam = args.family

    def need(**kw):
        missing = [k for k, v in kw.items() if v is None]
        if missing:
            flags = ", ".join("--" + k for k in missing)
            print(f"oddspan gen: error: family {fam} requires {flags}", file=sys.stderr)
            raise SystemExit(EX_USAGE)

    if fam == "complete":
        need(n=args.n)
        g = gen_complete(args.n)
    elif fam == "complete-bipartite":
        need(s=args.s, t=args.t)
        g = gen_complete_bipartite(args.s, args.t)
    elif fam == "cbme":
        need(s=args.s, t=args.t)
        g = gen_complete_bipartite_minus_edge(args.s, args.t)
    elif fam == "c5k":
        need(k=args.k)
        g = gen_c5k(args.k)
    elif fam == "random":
        need(n=args.n)
        g = gen_random(args.n, args.p, args.seed)
    elif fam == "random-split":
        need(s=args.s, t=args.t)
        g, _ = gen_random_split(args.s, args.t, args.p, args.seed)
    else:
        assert fam == "bridge-complete"
        need(s=args.s, t=args.t)
        g = gen_bridge_join(gen_complete(args.s), gen_complete(args.t), 0, 0)
    sys.stdout.write(emit_graph(g))
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args)
    if args.method == "auto":
        return _emit(decide(g))
    if g.n == 0:
        raise EmptyGraph("no vertices")
    if args.method == "split":
        sp = find_split_partition(g)
        if sp is None:
            print("error: input is not a split graph", file=sys.stderr)
            return EX_DATA
        try:
            if split_no_tree_condition(g, sp):
                return _emit(_split_nonexistence(sp))
        except OddOrder:
            return _emit(Certificate(NOT_EXISTS, "odd-order", reason=f"odd-order {g.n}"))
        return _emit(_tree_cert(g, "split-criterion", split_odd_spanning_tree(g, sp)))
    if args.method == "trifree":
        h = complement(g)
        try:
            decision = trifree_complement_tree(h)
        except OddOrder:
            return _emit(Certificate(NOT_EXISTS, "odd-order", reason=f"odd-order {g.n}"))
        except NotTriangleFree:
            print("error: complement of input must be triangle-free", file=sys.stderr)
            return EX_DATA
        if decision.exists:
            return _emit(_tree_cert(g, "trifree-complement", decision.tree))
        return _emit(
            Certificate(
                NOT_EXISTS,
                "trifree-complement",
                reason=f"excluded-family {decision.family}",
            )
        )
    if args.method == "dense":
        try:
            tree = odd_spanning_tree_dense(g)
        except OddOrder:
            return _emit(Certificate(NOT_EXISTS, "odd-order", reason=f"odd-order {g.n}"))
        return _emit(_tree_cert(g, "dense-min-degree", tree))
    assert args.method == "oracle"
    if g.n > ODD_TREE_VERTEX_CAP:
        return _emit(
            Certificate(UNKNOWN, "oracle-capped", reason=f"size-cap {ODD_TREE_VERTEX_CAP}")
        )
    tree = find_odd_spanning_tree_bruteforce(g)
    if tree is None:
        return _emit(Certificate(NOT_EXISTS, "oracle-exhaustive", reason="oracle-exhaustive"))
    return _emit(_tree_cert(g, "oracle-exhaustive", tree))


def _cmd_construct(args) -> int:
    if args.strict and not args.factor:
        print("error: --strict only applies to --factor", file=sys.stderr)
        return EX_USAGE
    g = _load_graph(args)
    if g.n == 0:
        raise EmptyGraph("no vertices")
    if args.dense:
        try:
            tree = odd_spanning_tree_dense(g)
        except OddOrder:
            return _emit(Certificate(NOT_EXISTS, "odd-order", reason=f"odd-order {g.n}"))
        return _emit(_tree_cert(g, "dense-min-degree", tree))
    if args.split:
        sp = find_split_partition(g)
        if sp is None:
            print("error: input is not a split graph", file=sys.stderr)
            return EX_DATA
        try:
            tree = split_odd_spanning_tree(g, sp)
        except OddOrder:
            return _emit(Certificate(NOT_EXISTS, "odd-order", reason=f"odd-order {g.n}"))
        except Disconnected:
            return _emit(Certificate(NOT_EXISTS, "disconnected", reason="disconnected"))
        except DegenerateClique:
            print("error: clique side is a single vertex", file=sys.stderr)
            return EX_DATA
        except ConditionHolds:
            return _emit(_split_nonexistence(sp))
        return _emit(_tree_cert(g, "split-criterion", tree))
    if args.double_star:
        try:
            tree = double_star_in_complement(g)
        except OddOrder:
            return _emit(Certificate(NOT_EXISTS, "odd-order", reason=f"odd-order {g.n}"))
        return _emit(_tree_cert(complement(g), "double-star", tree))
    if args.trifree:
        h = complement(g)
        try:
            decision = trifree_complement_tree(h)
        except OddOrder:
            return _emit(Certificate(NOT_EXISTS, "odd-order", reason=f"odd-order {g.n}"))
        except NotTriangleFree:
            print("error: complement of input must be triangle-free", file=sys.stderr)
            return EX_DATA
        if decision.exists:
            return _emit(_tree_cert(g, "trifree-complement", decision.tree))
        return _emit(
            Certificate(
                NOT_EXISTS,
                "trifree-complement",
                reason=f"excluded-family {decision.family}",
            )
        )
    assert args.factor
    if not is_connected(g):
        return _emit(Certificate(NOT_EXISTS, "disconnected", reason="disconnected"))
    if args.strict:
        lam = edge_connectivity(g)
        if lam < 4:
            print(f"error: edge connectivity {lam} < 4", file=sys.stderr)
            return EX_DATA
    try:
        trace = connected_odd_factor(g)
    except OddOrder:
        return _emit(Certificate(NOT_EXISTS, "odd-order", reason=f"odd-order {g.n}"))
    except NoTreePacking as exc:
        cert = exc.cert
        parts = tuple(
            _part(f"part{i}", vs) for i, vs in enumerate(cert.parts)
        )
        return _emit(
            Certificate(
                UNKNOWN,
                "tree-packing",
                parts=parts,
                reason="no-tree-packing",
                count=cert.cross_edges,
            )
        )
    return _emit(_factor_cert(g, "parity-repair-factor", trace.result))


def _cmd_verify(args) -> int:
    g = _load_graph(args)
    cert = parse_certificate(_read_text(args.certificate))
    if cert.verdict != EXISTS or cert.edges is None:
        print("FAIL no-witness-edges")
        return 1
    if args.factor:
        rep = verify_connected_odd_factor(g, cert.edges)
    else:
        rep = verify_odd_spanning_tree(g, cert.edges)
    if rep.ok:
        print("OK")
        return 0
    where = "" if rep.vertex is None else f" {rep.vertex}"
    print(f"FAIL {rep.failure}{where}")
    return 1


def _cmd_complement(args) -> int:
    sys.stdout.write(emit_graph(complement(_load_graph(args))))
    return 0


def _cmd_info(args) -> int:
    g = _load_graph(args)
    lines = [f"n {g.n}", f"m {g.m}"]
    lines.append("degrees " + ",".join(str(g.degree(v)) for v in range(g.n)))
    conn = is_connected(g)
    lines.append(f"connected {'true' if conn else 'false'}")
    lines.append(f"edge-connectivity {edge_connectivity(g) if g.n else 0}")
    lines.append(f"diameter {diameter(g) if conn else 'inf'}")
    lines.append(f"split {'true' if find_split_partition(g) is not None else 'false'}")
    lines.append(f"triangle-free {'true' if is_triangle_free(g) else 'false'}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_sweep(args) -> int:
    workers = _workers()
    if args.dense:
        rep = sweep_dense(seeded=args.cap if args.cap is not None else 500,
                          workers=workers, max_n=args.n)
    elif args.split:
        rep = sweep_split(seeded=args.cap if args.cap is not None else 500,
                          workers=workers, max_n=args.n)
    elif args.trifree:
        rep = sweep_trifree(seeded=args.cap if args.cap is not None else 300,
                            workers=workers, max_n=args.n)
    elif args.packing:
        rep = sweep_packing(workers=workers, max_n=args.n)
    elif args.factor:
        rep = sweep_factor(seeded=args.cap if args.cap is not None else 100,
                           workers=workers)
    else:
        assert args.bipartition
        rep = sweep_bipartition(seeded=args.cap if args.cap is not None else 200,
                                workers=workers, max_n=args.n)
    sys.stdout.write("\n".join(rep.lines()) + "\n")
    return 0 if rep.ok else 1


def _build_parser() -> _Parser:
    top = _Parser(prog="oddspan", description=__doc__.split("\n\n")[0])
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[], help="emit a named graph family")
    p.add_argument("--family", required=True,
                   choices=["complete", "complete-bipartite", "cbme", "c5k",
                            "random", "random-split", "bridge-complete"])
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="decide whether an odd spanning tree exists")
    p.add_argument("path", nargs="?", default="-")
    p.add_argument("--odd-spanning-tree", action="store_true",
                   help="decide odd spanning tree existence (the default and only mode)")
    p.add_argument("--method", default="auto",
                   choices=["auto", "split", "trifree", "dense", "oracle"])
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="build a witness with one named method")
    p.add_argument("path", nargs="?", default="-")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--dense", action="store_true")
    mode.add_argument("--split", action="store_true")
    mode.add_argument("--double-star", action="store_true",
                      help="spanning double star of the complement of the input")
    mode.add_argument("--trifree", action="store_true")
    mode.add_argument("--factor", action="store_true")
    p.add_argument("--strict", action="store_true",
                   help="with --factor, require edge connectivity at least 4")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="re-verify a certificate against a graph")
    p.add_argument("path", nargs="?", default="-")
    p.add_argument("--certificate", required=True)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--tree", action="store_true")
    kind.add_argument("--factor", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("complement", help="emit the complement graph")
    p.add_argument("path", nargs="?", default="-")
    p.set_defaults(func=_cmd_complement)

    p = sub.add_parser("info", help="structural summary of a graph")
    p.add_argument("path", nargs="?", default="-")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("sweep", help="run an oracle cross-check universe")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--dense", action="store_true")
    what.add_argument("--split", action="store_true")
    what.add_argument("--trifree", action="store_true")
    what.add_argument("--packing", action="store_true")
    what.add_argument("--factor", action="store_true")
    what.add_argument("--bipartition", action="store_true")
    p.add_argument("--n", type=int, default=6, help="exhaustive universe size cap")
    p.add_argument("--cap", type=int, default=None, help="seeded sample size")
    p.set_defaults(func=_cmd_sweep)
    return top


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ParseError, SelfLoop, DuplicateEdge, ParityArgument, EmptyGraph,
            MinDegreeTooLow, DiameterTooSmall, NotTriangleFree, BadWitness,
            DegenerateClique, Disconnected, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATA
    except (GreedyStalled, ExhaustedCases, NoTreePacking, AssertionError) as exc:
        print(f"internal: {exc}", file=sys.stderr)
        return EX_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())

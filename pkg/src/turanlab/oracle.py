"""Exact generalised Turán numbers ex(n, H, F) by exhaustive enumeration.

Graphs are generated one isomorphism class at a time by canonical
augmentation (vertex addition). A child ``G`` obtained by adding vertex
``v`` to its parent is accepted iff ``v`` lies in the automorphism orbit of
the vertex carrying the highest canonical label of ``G``; duplicates from
the same parent are removed by certificate. Every ``F``-free graph has only
``F``-free induced subgraphs, so subtrees failing the pruner are cut.

Edge-maximal mode keeps only graphs to which no edge can be added without
creating ``F``. It returns the same value as the full mode because adding
edges never destroys a copy of ``H``; every ``F``-free graph extends to an
edge-maximal one with at least as many copies.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .canon import _Search, orbits, refine
from .errors import ArgumentError, CapacityError
from .graph import Graph, automorphism_count, canonical_form, count_embeddings, has_embedding
from . import graph6

MAX_N = 10
WITNESS_CAP = 16

Adj = tuple[int, ...]


def resolve_threads(threads: int | None = None) -> int:
    if threads is None:
        threads = int(os.environ.get("TURANLAB_THREADS", "1"))
    if threads < 1:
        raise ArgumentError("threads must be >= 1")
    return threads


class FreeOf:
    """Pruner: true for graphs with no copy of ``f``."""

    def __init__(self, f: Graph):
        self.f = f

    def __call__(self, g: Graph) -> bool:
        return not has_embedding(self.f, g)

    def __repr__(self) -> str:
        return f"FreeOf({graph6.encode(self.f)})"


def is_free(g: Graph, f: Graph) -> bool:
    return not has_embedding(f, g)


def _children(adj: Adj, pruner: Callable[[Graph], bool] | None) -> list[Adj]:
    n = len(adj)
    degs = [row.bit_count() for row in adj]
    full = (1 << (n + 1)) - 1
    kept: dict[tuple[int, ...], Adj] = {}
    for mask in range(1 << n):
        d = mask.bit_count()
        if any(degs[u] + (mask >> u & 1) > d for u in range(n)):
            continue
        child = tuple(adj[u] | ((mask >> u & 1) << n) for u in range(n)) + (mask,)
        if not refine(child, [full], [full])[-1] >> n & 1:
            continue
        if pruner is not None and not pruner(Graph(n + 1, child)):
            continue
        s = _Search(child).run()
        roots = orbits(n + 1, s.gens)
        if roots[s.best_lab[-1]] != roots[n]:
            continue
        if s.best_cert not in kept:
            kept[s.best_cert] = child
    return list(kept.values())


def _subtree(adj: Adj, n: int, pruner) -> Iterator[Adj]:
    if len(adj) == n:
        yield adj
        return
    for child in _children(adj, pruner):
        yield from _subtree(child, n, pruner)


def _shard_roots(n: int, pruner) -> list[Adj]:
    level = max(0, n - 2)
    return list(_subtree((), level, pruner))


def _check_n(n: int) -> None:
    if n > MAX_N:
        raise CapacityError(f"exhaustive enumeration supports n <= {MAX_N}, got {n}")
    if n < 0:
        raise ArgumentError("n must be >= 0")


def _enum_worker(args) -> list[Adj]:
    root, n, pruner = args
    return list(_subtree(root, n, pruner))


def _map_shards(worker, jobs: Sequence, threads: int) -> Iterable:
    if threads == 1 or len(jobs) <= 1:
        return map(worker, jobs)
    pool = ProcessPoolExecutor(max_workers=threads)

    def gen():
        try:
            yield from pool.map(worker, jobs)
        finally:
            pool.shutdown()

    return gen()


def enumerate_graphs(n: int, pruner: Callable[[Graph], bool] | None = None, threads: int | None = None) -> Iterator[Graph]:
    """Yield one graph per isomorphism class on ``n`` vertices passing ``pruner``.

    ``pruner`` must be hereditary (closed under deleting vertices). Output
    order is deterministic and independent of ``threads``.
    """
    _check_n(n)
    threads = resolve_threads(threads)
    roots = _shard_roots(n, pruner)
    for batch in _map_shards(_enum_worker, [(r, n, pruner) for r in roots], threads):
        for adj in batch:
            yield Graph(n, adj)


# ---------------------------------------------------------------- ex(n, H, F)


@dataclass
class OracleResult:
    value: int
    witnesses: list[str] = field(default_factory=list)
    enumerated: int = 0
    mode: str = "all"

    def witness_graphs(self) -> list[Graph]:
        return [graph6.decode(w) for w in self.witnesses]

    def to_dict(self) -> dict:
        return {"value": str(self.value), "witnesses": list(self.witnesses), "enumerated": self.enumerated, "mode": self.mode}


def _is_edge_maximal(g: Graph, f: Graph) -> bool:
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if not g.adj[u] >> v & 1 and not has_embedding(f, g.add_edge(u, v)):
                return False
    return True


def _merge_witnesses(a: list[str], b: Iterable[str]) -> list[str]:
    return sorted(set(a) | set(b))[:WITNESS_CAP]


def _oracle_worker(args):
    root, n, hs, f, maximal = args
    pruner = FreeOf(f)
    best = [-1] * len(hs)
    wits: list[list[str]] = [[] for _ in hs]
    seen = 0
    for adj in _subtree(root, n, pruner):
        g = Graph(n, adj)
        if maximal and not _is_edge_maximal(g, f):
            continue
        seen += 1
        form = None
        for i, h in enumerate(hs):
            c = count_embeddings(h, g)
            if c > best[i]:
                best[i] = c
                wits[i] = []
            if c == best[i]:
                if form is None:
                    form = canonical_form(g).decode("ascii")
                wits[i] = _merge_witnesses(wits[i], [form])
    return best, wits, seen


def ex_oracle_many(n: int, hs: Sequence[Graph], f: Graph, mode: str | None = None,
                   threads: int | None = None) -> list[OracleResult]:
    """ex(n, H, F) for several patterns ``H`` over one enumeration."""
    _check_n(n)
    if mode is None:
        mode = "all" if n <= 8 else "maximal-only"
    if mode not in ("all", "maximal-only"):
        raise ArgumentError(f"unknown oracle mode {mode!r}")
    for h in hs:
        if h.order > n:
            raise ArgumentError("pattern has more vertices than n")
    threads = resolve_threads(threads)
    pruner = FreeOf(f)
    roots = _shard_roots(n, pruner)
    jobs = [(r, n, list(hs), f, mode == "maximal-only") for r in roots]
    best = [-1] * len(hs)
    wits: list[list[str]] = [[] for _ in hs]
    seen = 0
    for b, w, s in _map_shards(_oracle_worker, jobs, threads):
        seen += s
        for i in range(len(hs)):
            if b[i] > best[i]:
                best[i], wits[i] = b[i], w[i]
            elif b[i] == best[i]:
                wits[i] = _merge_witnesses(wits[i], w[i])
    out = []
    for i, h in enumerate(hs):
        aut = automorphism_count(h)
        value = max(best[i], 0) // aut
        out.append(OracleResult(value, wits[i] if best[i] > 0 or seen else [], seen, mode))
    return out


def ex_oracle(n: int, h: Graph, f: Graph, mode: str | None = None, threads: int | None = None) -> OracleResult:
    """Exact maximum number of copies of ``h`` over ``f``-free ``n``-vertex graphs."""
    return ex_oracle_many(n, [h], f, mode, threads)[0]

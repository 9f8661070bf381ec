"""Small graphs as bitset adjacency rows, with exact counting and colouring.

Vertices are ``0..order-1``; ``adj[i]`` has bit ``j`` set iff ``ij`` is an
edge. All counts are Python ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ArgumentError, CapacityError

MAX_ORDER = 64


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise CapacityError(f"graph order {self.order} exceeds {MAX_ORDER}")
        if len(self.adj) != self.order:
            raise ArgumentError("adjacency has wrong number of rows")
        full = (1 << self.order) - 1
        for i, row in enumerate(self.adj):
            if row & ~full or row >> i & 1:
                raise ArgumentError(f"bad adjacency row {i}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ArgumentError(f"adjacency not symmetric at {i},{j}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if order > MAX_ORDER:
            raise CapacityError(f"graph order {order} exceeds {MAX_ORDER}")
        rows = [0] * order
        for u, v in edges:
            if u == v or not (0 <= u < order and 0 <= v < order):
                raise ArgumentError(f"bad edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, (0,) * order)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.order) for j in _bits(self.adj[i]) if i < j]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def add_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.order, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.order, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled so ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in _bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.order) if u != v])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` is renamed ``perm[v]``."""
        rows = [0] * self.order
        for v in range(self.order):
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.order, tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.order
        return Graph(self.order + other.order, self.adj + tuple(r << shift for r in other.adj))

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        seen = 0
        comps = []
        for s in range(self.order):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_bipartite(self) -> bool:
        return odd_girth(self) is None

    def bipartition(self) -> tuple[int, int] | None:
        """Two colour-class bitmasks of a proper 2-colouring, or None."""
        side = [-1] * self.order
        for s in range(self.order):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in _bits(self.adj[v]):
                    if side[u] < 0:
                        side[u] = 1 - side[v]
                        stack.append(u)
                    elif side[u] == side[v]:
                        return None
        a = sum(1 << v for v in range(self.order) if side[v] == 0)
        return a, ((1 << self.order) - 1) & ~a

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


# ---------------------------------------------------------------- counting


def _pattern_order(h: Graph) -> list[int]:
    # highest degree first, then greedily the vertex with most placed neighbours
    remaining = set(range(h.order))
    order: list[int] = []
    placed = 0
    while remaining:
        v = max(remaining, key=lambda u: ((h.adj[u] & placed).bit_count(), h.degree(u), -u))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def count_embeddings(h: Graph, g: Graph) -> int:
    """Number of injective maps V(h) -> V(g) sending edges to edges.

    Not induced: non-edges of ``h`` may map onto edges of ``g``.
    """
    if h.order > g.order:
        return 0
    if h.order == 0:
        return 1
    order = _pattern_order(h)
    pos = {v: i for i, v in enumerate(order)}
    # for each pattern position, the earlier positions it must be adjacent to
    back = [[pos[u] for u in _bits(h.adj[v]) if pos[u] < i] for i, v in enumerate(order)]
    gadj = g.adj
    full = (1 << g.order) - 1
    image = [0] * h.order
    last = h.order - 1

    def rec(i: int, used: int) -> int:
        cand = full & ~used
        for j in back[i]:
            cand &= gadj[image[j]]
        if i == last:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            image[i] = low.bit_length() - 1
            total += rec(i + 1, used | low)
            cand ^= low
        return total

    return rec(0, 0)


def has_embedding(h: Graph, g: Graph) -> bool:
    """True iff ``g`` contains ``h`` as a (not necessarily induced) subgraph."""
    if h.order > g.order:
        return False
    if h.order == 0:
        return True
    order = _pattern_order(h)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[u] for u in _bits(h.adj[v]) if pos[u] < i] for i, v in enumerate(order)]
    gadj = g.adj
    full = (1 << g.order) - 1
    image = [0] * h.order
    last = h.order - 1

    def rec(i: int, used: int) -> bool:
        cand = full & ~used
        for j in back[i]:
            cand &= gadj[image[j]]
        if i == last:
            return cand != 0
        while cand:
            low = cand & -cand
            image[i] = low.bit_length() - 1
            if rec(i + 1, used | low):
                return True
            cand ^= low
        return False

    return rec(0, 0)


def automorphism_count(g: Graph) -> int:
    from .canon import automorphism_group_order

    return automorphism_group_order(g.adj)


def count_copies(h: Graph, g: Graph) -> int:
    """Number of subgraphs of ``g`` isomorphic to ``h``."""
    emb = count_embeddings(h, g)
    aut = automorphism_count(h)
    q, rem = divmod(emb, aut)
    assert rem == 0, "embedding count not divisible by |Aut(H)|"
    return q


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: graph6 of the canonical relabelling."""
    from .canon import canonical_labeling
    from .graph6 import encode

    lab, _ = canonical_labeling(g.adj)
    perm = [0] * g.order
    for i, v in enumerate(lab):
        perm[v] = i
    return encode(g.relabel(perm)).encode("ascii")


# ---------------------------------------------------------------- colouring


def _greedy_clique(adj: Sequence[int], n: int) -> int:
    best = 0
    for start in range(n):
        cand = adj[start]
        size = 1
        while cand:
            v = max(_bits(cand), key=lambda u: (adj[u] & cand).bit_count())
            size += 1
            cand &= adj[v]
        best = max(best, size)
    return best


def _dsatur_greedy(adj: Sequence[int], n: int) -> int:
    colour = [-1] * n
    used = 0
    for _ in range(n):
        v = max(
            (u for u in range(n) if colour[u] < 0),
            key=lambda u: (len({colour[w] for w in _bits(adj[u]) if colour[w] >= 0}), adj[u].bit_count()),
        )
        taken = {colour[w] for w in _bits(adj[v])}
        c = 0
        while c in taken:
            c += 1
        colour[v] = c
        used = max(used, c + 1)
    return used


def _colourable(adj: Sequence[int], n: int, k: int) -> bool:
    colour = [-1] * n
    # per vertex: bitmask of colours already present among its neighbours
    seen = [0] * n

    def rec(done: int, ncol: int) -> bool:
        if done == n:
            return True
        best, best_key = -1, None
        for u in range(n):
            if colour[u] < 0:
                key = (seen[u].bit_count(), adj[u].bit_count())
                if best_key is None or key > best_key:
                    best, best_key = u, key
        v = best
        limit = min(k, ncol + 1)
        for c in range(limit):
            if seen[v] >> c & 1:
                continue
            colour[v] = c
            changed = []
            dead = False
            for w in _bits(adj[v]):
                if colour[w] < 0 and not seen[w] >> c & 1:
                    seen[w] |= 1 << c
                    changed.append(w)
                    if seen[w].bit_count() >= k:
                        dead = True
            if not dead and rec(done + 1, max(ncol, c + 1)):
                return True
            for w in changed:
                seen[w] &= ~(1 << c)
            colour[v] = -1
        return False

    return rec(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by clique bound, DSATUR bound and backtracking."""
    n = g.order
    if n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    if g.is_bipartite():
        return 2
    lo = max(3, _greedy_clique(g.adj, n))
    hi = _dsatur_greedy(g.adj, n)
    for k in range(lo, hi):
        if _colourable(g.adj, n, k):
            return k
    return hi


def color_critical_edges(g: Graph) -> list[tuple[int, int]]:
    chi = chromatic_number(g)
    return [e for e in g.edges() if chromatic_number(g.remove_edge(*e)) < chi]


def color_critical_vertices(g: Graph) -> list[int]:
    chi = chromatic_number(g)
    return [v for v in range(g.order) if chromatic_number(g.remove_vertex(v)) < chi]


def odd_girth(g: Graph) -> int | None:
    """Length of a shortest odd cycle, or None when ``g`` is bipartite."""
    best = None
    for s in range(g.order):
        dist = [-1] * g.order
        dist[s] = 0
        layer = [s]
        while layer:
            nxt = []
            for v in layer:
                for u in _bits(g.adj[v]):
                    if dist[u] < 0:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
                    elif dist[u] == dist[v]:
                        length = 2 * dist[v] + 1
                        if best is None or length < best:
                            best = length
            layer = nxt
    return best


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (p for i, p in enumerate(pairs) if mask >> i & 1))

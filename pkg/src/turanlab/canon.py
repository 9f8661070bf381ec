"""Canonical labelling and automorphism groups by partition refinement.

Individualisation-refinement search tree in the style of McKay's practical
graph isomorphism: the root partition is refined to an equitable one, a
non-singleton cell is chosen (first smallest), each of its vertices is
individualised in turn and the result refined again. Leaves are discrete
partitions; the canonical labelling is the leaf whose relabelled adjacency
is lexicographically greatest. Automorphisms are detected when two leaves
give the same relabelled adjacency and are used to prune equivalent
children; the group order is the product of first-path orbit sizes.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

Adj = Sequence[int]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def refine(adj: Adj, cells: list[int], splitters: list[int]) -> list[int]:
    """Refine an ordered partition (list of bitmasks) to an equitable one.

    Cells split by neighbour count into each splitter, in ascending count
    order, so the result depends only on the ordered partition's structure.
    """
    cells = list(cells)
    queue = deque(splitters)
    n_cells = len(cells)
    total = sum(c.bit_count() for c in cells)
    while queue and n_cells < total:
        splitter = queue.popleft()
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[int, int] = {}
            c = cell
            while c:
                low = c & -c
                k = (adj[low.bit_length() - 1] & splitter).bit_count()
                groups[k] = groups.get(k, 0) | low
                c ^= low
            if len(groups) == 1:
                out.append(cell)
                continue
            for k in sorted(groups):
                part = groups[k]
                out.append(part)
                queue.append(part)
            n_cells += len(groups) - 1
        cells = out
    return cells


def _initial_cells(n: int, colors: Sequence | None) -> list[int]:
    if n == 0:
        return []
    if colors is None:
        return [(1 << n) - 1]
    by_color: dict = {}
    for v, c in enumerate(colors):
        by_color[c] = by_color.get(c, 0) | (1 << v)
    return [by_color[c] for c in sorted(by_color)]


class _Search:
    def __init__(self, adj: Adj, colors: Sequence | None = None):
        self.adj = adj
        self.n = len(adj)
        self.first_lab: list[int] | None = None
        self.first_cert: tuple | None = None
        self.best_lab: list[int] | None = None
        self.best_cert: tuple | None = None
        self.first_path: list[int] = []
        self.gens: list[tuple[int, ...]] = []
        self.prefix: list[int] = []
        init = _initial_cells(self.n, colors)
        self.root = refine(adj, init, list(init))

    def run(self) -> "_Search":
        self._visit(self.root, 0, True)
        return self

    def _cert(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        for v in lab:
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << pos[u]
            rows.append(row)
        return tuple(rows)

    def _leaf(self, cells: list[int]) -> int | None:
        lab = [c.bit_length() - 1 for c in cells]
        cert = self._cert(lab)
        if self.first_lab is None:
            self.first_lab, self.first_cert = lab, cert
            self.best_lab, self.best_cert = lab, cert
            return None
        if cert == self.first_cert:
            self._add_gen(self.first_lab, lab)
            for i, (a, b) in enumerate(zip(self.prefix, self.first_path)):
                if a != b:
                    return i
            return None
        if cert == self.best_cert:
            self._add_gen(self.best_lab, lab)
        elif cert > self.best_cert:
            self.best_lab, self.best_cert = lab, cert
        return None

    def _add_gen(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        self.gens.append(tuple(perm))

    def _orbit_roots(self, fixed: Sequence[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if any(g[p] != p for p in fixed):
                continue
            for v in range(self.n):
                a, b = find(v), find(g[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def _visit(self, cells: list[int], depth: int, on_first: bool) -> int | None:
        target = None
        for c in cells:
            if c & (c - 1) and (target is None or c.bit_count() < target.bit_count()):
                target = c
        if target is None:
            return self._leaf(cells)
        idx = cells.index(target)
        explored: list[int] = []
        roots = None
        ngens = -1
        for v in _bits(target):
            if explored:
                if ngens != len(self.gens):
                    roots = self._orbit_roots(self.prefix)
                    ngens = len(self.gens)
                if any(roots[v] == roots[w] for w in explored):
                    continue
            explored.append(v)
            child_first = on_first and len(explored) == 1
            if child_first:
                self.first_path.append(v)
            bit = 1 << v
            child = cells[:idx] + [bit, target ^ bit] + cells[idx + 1:]
            child = refine(self.adj, child, [bit])
            self.prefix.append(v)
            jump = self._visit(child, depth + 1, child_first)
            self.prefix.pop()
            if jump is not None and jump < depth:
                return jump
        return None

    def group_order(self) -> int:
        order = 1
        for i, v in enumerate(self.first_path):
            roots = self._orbit_roots(self.first_path[:i])
            order *= sum(1 for u in range(self.n) if roots[u] == roots[v])
        return order


def canonical_labeling(adj: Adj) -> tuple[list[int], list[tuple[int, ...]]]:
    """Return ``(lab, generators)``.

    ``lab[i]`` is the vertex receiving canonical label ``i``; ``generators``
    generate the automorphism group (as permutations ``v -> g[v]``).
    """
    s = _Search(adj).run()
    return (s.best_lab or []), s.gens


def canonical_certificate(adj: Adj) -> tuple[int, ...]:
    s = _Search(adj).run()
    return s.best_cert or ()


def automorphism_group_order(adj: Adj, colors: Sequence | None = None) -> int:
    """Order of the (colour-preserving) automorphism group."""
    if len(adj) == 0:
        return 1
    return _Search(adj, colors).run().group_order()


def orbits(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (least vertex) for each vertex under ``gens``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]

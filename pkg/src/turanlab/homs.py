"""Homomorphisms, twin classes and exact embedding counts between blow-ups.

The blow-up counter never materialises the host. For a pattern blow-up with
classes of sizes ``t_c`` and a host blow-up with classes of sizes ``s_b``,
the number of injective edge-preserving maps is

    sum over m[c][b] of  prod_c multinomial(t_c; m[c][.]) * prod_b (s_b)_(L_b)

where ``L_b = sum_c m[c][b]`` and the sum ranges over distributions whose
supports send adjacent pattern classes to adjacent host classes. The
support structures and multinomial weights do not depend on the host sizes,
so they are collected once into a *load profile* ``{(L_b)_b: weight}``;
evaluating a host then costs one falling-factorial product per entry.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .canon import automorphism_group_order
from .constructions import BlowupSpec, GraphLike, as_spec, cycle
from .errors import ArgumentError, CapacityError
from .graph import Graph, _bits, chromatic_number, odd_girth

MAX_PATTERN_CLASSES = 16
MAX_HOST_CLASSES = 12
MAX_HOM_PATTERN = 32


# ---------------------------------------------------------------- homomorphisms


def hom_exists_with_fiber_caps(h: Graph, b: Graph, caps: Sequence[int | None]) -> tuple[int, ...] | None:
    """Lexicographically least homomorphism h -> b with ``|fiber(x)| <= caps[x]``.

    ``None`` in ``caps`` means unbounded. Returns the map as a tuple indexed
    by pattern vertex, or None if no such homomorphism exists.
    """
    if h.order > MAX_HOM_PATTERN:
        raise CapacityError(f"hom pattern order {h.order} exceeds {MAX_HOM_PATTERN}")
    if len(caps) != b.order:
        raise ArgumentError("caps must have one entry per target vertex")
    if h.order == 0:
        return ()
    left = [h.order + 1 if c is None else c for c in caps]
    image = [0] * h.order
    back = [[u for u in _bits(h.adj[v]) if u < v] for v in range(h.order)]
    full = (1 << b.order) - 1

    def rec(v: int) -> bool:
        if v == h.order:
            return True
        cand = full
        for u in back[v]:
            cand &= b.adj[image[u]]
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            cand ^= low
            if left[x] <= 0:
                continue
            left[x] -= 1
            image[v] = x
            if rec(v + 1):
                return True
            left[x] += 1
        return False

    return tuple(image) if rec(0) else None


def hom_exists(h: Graph, b: Graph) -> tuple[int, ...] | None:
    """Lexicographically least homomorphism h -> b, or None.

    ``h`` is a subgraph of some blow-up of ``b`` iff this is not None.
    """
    return hom_exists_with_fiber_caps(h, b, [None] * b.order)


def fibers(witness: Sequence[int], target_order: int) -> list[int]:
    out = [0] * target_order
    for x in witness:
        out[x] += 1
    return out


def longest_odd_cycle_target(f: Graph) -> int:
    """Largest odd L such that some blow-up of C_L contains ``f``."""
    if chromatic_number(f) != 3:
        raise ArgumentError("longest_odd_cycle_target needs a 3-chromatic graph")
    g = odd_girth(f)
    for length in range(g, 2, -2):
        if hom_exists(f, cycle(length)) is not None:
            return length
    raise AssertionError("3-chromatic graph with no homomorphism to K_3")


# ---------------------------------------------------------------- twins


def twin_classes(h: Graph) -> list[list[int]]:
    """Maximal sets of pairwise non-adjacent vertices with equal neighbourhoods."""
    groups: dict[int, list[int]] = {}
    for v in range(h.order):
        groups.setdefault(h.adj[v], []).append(v)
    return sorted(groups.values())


def reduce_twins(spec: BlowupSpec) -> BlowupSpec:
    """Merge twin base vertices; the materialised graph is unchanged up to isomorphism."""
    classes = twin_classes(spec.base)
    if len(classes) == spec.base.order:
        return spec
    base = spec.base.induced([c[0] for c in classes])
    return BlowupSpec(base, tuple(sum(spec.sizes[v] for v in c) for c in classes))


# ---------------------------------------------------------------- blow-up counting


def _compositions(t: int, parts: int):
    """Ordered tuples of ``parts`` positive ints summing to ``t``."""
    if parts == 1:
        yield (t,)
        return
    for first in range(1, t - parts + 2):
        for rest in _compositions(t - first, parts - 1):
            yield (first,) + rest


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


@lru_cache(maxsize=512)
def load_profile(hbase: Graph, hsizes: tuple[int, ...], gbase: Graph) -> dict[tuple[int, ...], int]:
    """Map from host-class load vectors to summed multinomial weights."""
    nh, ng = hbase.order, gbase.order
    # assign classes so that each has as many already-assigned neighbours as possible
    order: list[int] = []
    placed = 0
    remaining = list(range(nh))
    while remaining:
        c = max(remaining, key=lambda u: ((hbase.adj[u] & placed).bit_count(), hbase.adj[u].bit_count(), -u))
        remaining.remove(c)
        order.append(c)
        placed |= 1 << c
    common = {}
    full = (1 << ng) - 1

    def common_nbrs(mask: int) -> int:
        if mask not in common:
            acc = full
            for x in _bits(mask):
                acc &= gbase.adj[x]
            common[mask] = acc
        return common[mask]

    supports = [0] * nh
    fact = [factorial(i) for i in range(max(hsizes, default=0) + 1)]
    total: dict[tuple[int, ...], int] = defaultdict(int)

    def rec(i: int, dp: dict[tuple[int, ...], int]) -> None:
        if i == nh:
            for loads, w in dp.items():
                total[loads] += w
            return
        c = order[i]
        t = hsizes[c]
        allowed = full
        for d in _bits(hbase.adj[c]):
            if supports[d]:
                allowed &= common_nbrs(supports[d])
        for sub in _submasks(allowed):
            k = sub.bit_count()
            if k > t:
                continue
            targets = list(_bits(sub))
            comps = [(comp, fact[t] // prod(fact[m] for m in comp)) for comp in _compositions(t, k)]
            nxt: dict[tuple[int, ...], int] = defaultdict(int)
            for loads, w in dp.items():
                for comp, mult in comps:
                    new = list(loads)
                    for x, m in zip(targets, comp):
                        new[x] += m
                    nxt[tuple(new)] += w * mult
            supports[c] = sub
            rec(i + 1, nxt)
            supports[c] = 0

    rec(0, {(0,) * ng: 1})
    return dict(total)


def falling(s: int, k: int) -> int:
    """Falling factorial s (s-1) ... (s-k+1); zero when k > s >= 0."""
    if k > s:
        return 0
    out = 1
    for i in range(k):
        out *= s - i
    return out


def evaluate_profile(profile: dict[tuple[int, ...], int], sizes: Sequence[int]) -> int:
    cache: dict[tuple[int, int], int] = {}
    total = 0
    for loads, w in profile.items():
        term = w
        for s, k in zip(sizes, loads):
            if k:
                key = (s, k)
                if key not in cache:
                    cache[key] = falling(s, k)
                term *= cache[key]
                if not term:
                    break
        total += term
    return total


def _prepared(hspec: GraphLike, gspec: GraphLike) -> tuple[BlowupSpec, BlowupSpec]:
    h = reduce_twins(as_spec(hspec))
    g = reduce_twins(as_spec(gspec))
    if h.base.order > MAX_PATTERN_CLASSES:
        raise CapacityError(f"pattern has {h.base.order} twin classes (max {MAX_PATTERN_CLASSES})")
    if g.base.order > MAX_HOST_CLASSES:
        raise CapacityError(f"host has {g.base.order} twin classes (max {MAX_HOST_CLASSES})")
    return h, g


def count_embeddings_blowup(hspec: GraphLike, gspec: GraphLike) -> int:
    """Exact labelled count of the materialised pattern in the materialised host."""
    h, g = _prepared(hspec, gspec)
    return evaluate_profile(load_profile(h.base, h.sizes, g.base), g.sizes)


def blowup_automorphism_count(spec: GraphLike) -> int:
    """|Aut| of the materialised blow-up, computed on the twin-reduced base."""
    s = reduce_twins(as_spec(spec))
    return automorphism_group_order(s.base.adj, s.sizes) * prod(factorial(t) for t in s.sizes)


def count_copies_blowup(hspec: GraphLike, gspec: GraphLike) -> int:
    emb = count_embeddings_blowup(hspec, gspec)
    q, rem = divmod(emb, blowup_automorphism_count(hspec))
    assert rem == 0, "labelled count not divisible by automorphism count"
    return q


# ---------------------------------------------------------------- colourings


def count_proper_colorings(g: Graph, r: int) -> int:
    """Number of proper colourings V(g) -> {1..r} (not necessarily surjective).

    Frontier dynamic programme: vertices are added one at a time and only the
    colours of already-placed vertices with unplaced neighbours are kept.
    """
    n = g.order
    if n > 24:
        raise CapacityError("count_proper_colorings supports at most 24 vertices")
    order: list[int] = []
    placed = 0
    for _ in range(n):
        v = max(
            (u for u in range(n) if not placed >> u & 1),
            key=lambda u: ((g.adj[u] & placed).bit_count(), -u),
        )
        order.append(v)
        placed |= 1 << v
    states: dict[tuple[int, ...], int] = {(): 1}
    active: list[int] = []
    placed = 0
    for v in order:
        placed |= 1 << v
        nbr_idx = [i for i, u in enumerate(active) if g.adj[v] >> u & 1]
        extended = active + [v]
        keep = [i for i, u in enumerate(extended) if g.adj[u] & ~placed]
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for st, cnt in states.items():
            forbidden = {st[i] for i in nbr_idx}
            for c in range(r):
                if c in forbidden:
                    continue
                full = st + (c,)
                nxt[tuple(full[i] for i in keep)] += cnt
        states = nxt
        active = [extended[i] for i in keep]
    return sum(states.values())


def has_unique_r_coloring(g: Graph, r: int) -> bool:
    """True iff ``g`` has exactly one proper r-colouring up to renaming colours."""
    return count_proper_colorings(g, r) == factorial(r) and chromatic_number(g) == r

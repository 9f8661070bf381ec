"""Closed-form counts and thresholds, in exact integer arithmetic.

Binomials follow the convention C(n, k) = 0 whenever k > n or n < 0, so the
double-star count is total. Symmetric "a == b" cases are single terms, never
halves, so every value stays an integer.

The K_{a,b} goodness threshold a < b + 1/2 + sqrt(2b + 1/4) is evaluated
without square roots: with d = a - b >= 1 both sides of
d - 1/2 < sqrt(2b + 1/4) are positive, so squaring gives d^2 - d < 2b,
i.e. C(d, 2) < b. For d = 0 the inequality holds trivially.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Sequence

from .constructions import BlowupSpec, graph_power, path
from .errors import ArgumentError, PreconditionError


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def double_star_central_count(a: int, b: int, x: int, y: int) -> int:
    """Copies of S_{a,b} in K_{x,y} whose central edge is one fixed edge."""
    if a < 0 or b < 0 or x < 1 or y < 1:
        raise ArgumentError("need a, b >= 0 and x, y >= 1")
    first = binom(x - 1, a) * binom(y - 1, b)
    if a == b:
        return first
    return first + binom(y - 1, a) * binom(x - 1, b)


def central_edge_count_check(a: int, b: int, x: int, y: int) -> int:
    """Brute-force counterpart of :func:`double_star_central_count`.

    Enumerates every leaf placement around the fixed edge u-v of K_{x,y}
    (u on the x side, v on the y side) and counts distinct edge sets that
    form a double star with central edge uv.
    """
    if x + y > 14:
        raise ArgumentError("brute force limited to x + y <= 14")
    u, v = 0, x
    side_u = [w for w in range(x + y) if w >= x and w != v]  # neighbours of u
    side_v = [w for w in range(x) if w != u]  # neighbours of v
    seen = set()
    for leaves_u in combinations(side_u, a):
        for leaves_v in combinations(side_v, b):
            seen.add(frozenset([(u, v)] + [(u, w) for w in leaves_u] + [(v, w) for w in leaves_v]))
    # the roles may swap: a leaves on v and b leaves on u
    for leaves_v in combinations(side_v, a):
        for leaves_u in combinations(side_u, b):
            seen.add(frozenset([(u, v)] + [(u, w) for w in leaves_u] + [(v, w) for w in leaves_v]))
    return len(seen)


def count_kab_complete_bipartite(a: int, b: int, x: int, y: int) -> int:
    """Copies of K_{a,b} in K_{x,y}."""
    if a < 1 or b < 1:
        raise ArgumentError("need a, b >= 1")
    if a == b:
        return binom(x, a) * binom(y, a)
    return binom(x, a) * binom(y, b) + binom(x, b) * binom(y, a)


def count_clique_multipartite(k: int, sizes: Sequence[int]) -> int:
    """Copies of K_k in the complete multipartite graph: e_k(sizes)."""
    if k < 1:
        raise ArgumentError("need k >= 1")
    # e_j by the standard DP; row e[j] after processing each part
    e = [1] + [0] * k
    for s in sizes:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * s
    return e[k]


def ma_qiu_is_good(a: int, b: int) -> bool:
    """Whether a < b + 1/2 + sqrt(2b + 1/4), for a >= b >= 1."""
    if a < b:
        raise ArgumentError("ma_qiu_is_good expects a >= b")
    if b < 1:
        raise ArgumentError("need b >= 1")
    return a <= b or binom(a - b, 2) < b


def brown_sidorenko_balanced_ok(a: int, b: int) -> bool:
    """Whether b >= C(a - b, 2), for a >= b >= 1."""
    if a < b:
        raise ArgumentError("brown_sidorenko_balanced_ok expects a >= b")
    if b < 1:
        raise ArgumentError("need b >= 1")
    return b >= binom(a - b, 2)


def partite_bound(k: int, a: int, n: int) -> int:
    """n^(k-2) * floor(n^2/4)^a."""
    return n ** (k - 2) * (n * n // 4) ** a


def end_blown_params(spec: BlowupSpec, r: int) -> tuple[int, int]:
    """Recover ``(k, a)`` if ``spec`` is the end-blown (r-1)-th power of P_k."""
    k = spec.base.order
    if k < 3 or spec.base != graph_power(path(k), r - 1):
        raise PreconditionError("pattern is not an end-blown path power")
    a = spec.sizes[0]
    if spec.sizes != (a,) + (1,) * (k - 2) + (a,):
        raise PreconditionError("pattern sizes are not of the form [a, 1, ..., 1, a]")
    return k, a


def partite_upper_bound_labeled(hspec: BlowupSpec, n: int, r: int) -> int:
    """Upper bound on labelled copies of ``hspec`` in any complete r-partite n-vertex graph.

    Valid when the two end classes are forced into different parts: the
    middle vertices contribute at most n each, and two parts of sizes x, y
    with x + y <= n hold at most (x y)^a <= floor(n^2/4)^a placements.
    """
    from .homs import has_unique_r_coloring

    k, a = end_blown_params(hspec, r)
    if k % r == 1 or not has_unique_r_coloring(hspec.base, r):
        raise PreconditionError("ends not color-separated")
    return partite_bound(k, a, n)


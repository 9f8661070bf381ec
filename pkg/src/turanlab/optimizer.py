"""Best complete r-partite host for a pattern."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .constructions import BlowupSpec, GraphLike, balanced_sizes, clique
from .errors import ArgumentError, CapacityError
from .graph import Graph, chromatic_number
from .homs import _prepared, blowup_automorphism_count, evaluate_profile, load_profile

EXACT_LIMIT = 10 ** 6


@dataclass(frozen=True)
class PartitionSizes:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise ArgumentError("parts must be positive and weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def is_turan(self) -> bool:
        return max(self.parts) - min(self.parts) <= 1


@dataclass(frozen=True)
class Optimum:
    sizes: PartitionSizes
    count: int
    mode: str  # "exact" | "heuristic"


def partition_count(n: int, r: int) -> int:
    """Number of partitions of ``n`` into exactly ``r`` positive parts."""
    if n < r or r < 0:
        return 0
    # p[j][m]: partitions of m into exactly j parts; p(m, j) = p(m-1, j-1) + p(m-j, j)
    p = [[0] * (n + 1) for _ in range(r + 1)]
    p[0][0] = 1
    for j in range(1, r + 1):
        for m in range(j, n + 1):
            p[j][m] = p[j - 1][m - 1] + p[j][m - j]
    return p[r][n]


def partitions(n: int, r: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing r-tuples of positive ints summing to n, lexicographically decreasing."""
    if cap is None:
        cap = n
    if r == 1:
        if 1 <= n <= cap:
            yield (n,)
        return
    for first in range(min(cap, n - r + 1), 0, -1):
        if first * r < n:
            break
        for rest in partitions(n - first, r - 1, first):
            yield (first,) + rest


class _Counter:
    """Copies of a fixed pattern in blow(K_r, sizes), reusing one load profile."""

    def __init__(self, hspec: GraphLike, r: int):
        h, g = _prepared(hspec, BlowupSpec(clique(r), (1,) * r))
        self.profile = load_profile(h.base, h.sizes, clique(r))
        self.aut = blowup_automorphism_count(h)

    def __call__(self, sizes) -> int:
        return evaluate_profile(self.profile, sizes) // self.aut


def best_multipartite(hspec: GraphLike, n: int, r: int, mode: str = "exact") -> Optimum:
    """Complete r-partite n-vertex host with the most copies of ``hspec``.

    Ties go to the lexicographically greatest weakly decreasing size vector.
    """
    if r < 2 or n < r:
        raise ArgumentError("best_multipartite needs r >= 2 and n >= r")
    count = _Counter(hspec, r)
    if mode == "exact":
        if partition_count(n, r) > EXACT_LIMIT:
            raise CapacityError(f"{partition_count(n, r)} partitions exceed the exact-mode limit")
        best, best_val = None, -1
        for p in partitions(n, r):  # decreasing lex order, so strict > keeps the greatest
            v = count(p)
            if v > best_val:
                best, best_val = p, v
        return Optimum(PartitionSizes(best), best_val, "exact")
    if mode == "heuristic":
        return _hill_climb(count, n, r)
    raise ArgumentError(f"unknown mode {mode!r}")


def _seeds(n: int, r: int) -> list[tuple[int, ...]]:
    seeds = [balanced_sizes(n, r)]
    # geometric seeds: part i proportional to q^i for q = 1/2, 1/3, ...
    for j in range(8):
        q_num, q_den = 1, j + 2
        weights = [q_num ** i * q_den ** (r - 1 - i) for i in range(r)]
        total = sum(weights)
        parts = [max(1, n * w // total) for w in weights]
        parts[0] += n - sum(parts)
        if parts[0] < 1:
            continue
        seeds.append(tuple(sorted(parts, reverse=True)))
    return seeds


def _hill_climb(count, n: int, r: int) -> Optimum:
    best, best_val = None, -1
    for seed in _seeds(n, r):
        cur = seed
        val = count(cur)
        while True:
            step = None
            for i in range(r):
                for j in range(r):
                    if i == j or cur[i] <= 1:
                        continue
                    nxt = list(cur)
                    nxt[i] -= 1
                    nxt[j] += 1
                    nxt = tuple(sorted(nxt, reverse=True))
                    v = count(nxt)
                    if step is None or (v, nxt) > (step[1], step[0]):
                        step = (nxt, v)
            if step is None or step[1] <= val:
                break
            cur, val = step
        if val > best_val or (val == best_val and cur > best):
            best, best_val = cur, val
    return Optimum(PartitionSizes(best), best_val, "heuristic")


def is_weakly_good_at(hspec: GraphLike, f: Graph, n: int, mode: str | None = None, threads: int | None = None) -> dict:
    """Compare ex(n, H, F) with the best complete (chi(F)-1)-partite count."""
    from .constructions import as_spec, materialize
    from .oracle import ex_oracle

    r = chromatic_number(f) - 1
    h = hspec if isinstance(hspec, Graph) else materialize(as_spec(hspec))
    oracle = ex_oracle(n, h, f, mode=mode, threads=threads)
    best = best_multipartite(as_spec(hspec), n, r, "exact")
    status = "weakly good at n" if oracle.value == best.count else "gap at n"
    return {
        "status": status,
        "n": n,
        "r": r,
        "oracle_value": oracle.value,
        "multipartite_value": best.count,
        "multipartite_sizes": list(best.sizes.parts),
        "oracle_witnesses": oracle.witnesses,
    }

"""Finite, exactly checkable instances of the Turán-goodness claims.

The claims are asymptotic, so every run ends in one of four finite statuses:
``verified`` (an exact equality or inequality was checked at the given
parameters), ``gap_found`` (an exact certificate of separation),
``counterexample`` (a statement that should hold for every instance
failed) or ``inconclusive`` (evidence recorded, nothing asserted).

Host-comparison mode compares a pattern's count in the Turán graph with
its count in every complete bipartite host ``K_{x, n-x}`` and in a fixed
library of non-bipartite candidates: blow-ups of odd cycles ``C_L`` and of
their powers ``C_L^j`` (5 <= L <= 11, L <= n, j <= (L-3)/2) that admit no
homomorphism from ``F``, each with balanced class sizes and with every
"one heavy class" vector ``(s, ..., s, n - (L-1)s)``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import graph6
from .constructions import (
    BlowupSpec, GraphLike, as_spec, balanced_sizes, blown_path, clique, cycle,
    end_blown_path_power, graph_power, materialize, turan, unbalanced_cycle_power_host,
)
from .errors import ArgumentError, CapacityError, PreconditionError
from .formulas import (
    brown_sidorenko_balanced_ok, count_clique_multipartite, ma_qiu_is_good,
    partite_upper_bound_labeled,
)
from .graph import Graph, _bits, chromatic_number, color_critical_edges, color_critical_vertices
from .homs import (
    count_copies_blowup, count_embeddings_blowup, fibers, hom_exists,
    hom_exists_with_fiber_caps, longest_odd_cycle_target,
)
from .optimizer import best_multipartite
from .oracle import ex_oracle, ex_oracle_many

STATUSES = ("verified", "gap_found", "counterexample", "inconclusive")


@dataclass
class ClaimReport:
    claim: str
    params: dict
    status: str
    witness: dict | None = None
    elapsed_ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ArgumentError(f"unknown status {self.status!r}")

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
        }


def _spec_dict(spec: BlowupSpec) -> dict:
    return {"base": graph6.encode(spec.base), "sizes": [str(s) for s in spec.sizes]}


def _spec_from(d: dict) -> BlowupSpec:
    return BlowupSpec(graph6.decode(d["base"]), tuple(int(s) for s in d["sizes"]))


@dataclass
class GapCertificate:
    f: Graph
    r: int
    hspec: BlowupSpec
    host: BlowupSpec
    n: int
    host_labeled: int
    bound_labeled: int
    freeness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "F": graph6.encode(self.f),
            "r": self.r,
            "Hspec": _spec_dict(self.hspec),
            "hostSpec": _spec_dict(self.host),
            "n": str(self.n),
            "hostLabeled": str(self.host_labeled),
            "partiteBoundLabeled": str(self.bound_labeled),
            "freenessWitness": self.freeness,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GapCertificate":
        return cls(
            f=graph6.decode(d["F"]),
            r=int(d["r"]),
            hspec=_spec_from(d["Hspec"]),
            host=_spec_from(d["hostSpec"]),
            n=int(d["n"]),
            host_labeled=int(d["hostLabeled"]),
            bound_labeled=int(d["partiteBoundLabeled"]),
            freeness=dict(d["freenessWitness"]),
        )

    def revalidate(self) -> bool:
        """Recompute everything from scratch; True iff the certificate stands."""
        if sum(self.host.sizes) != self.n or chromatic_number(self.f) - 1 != self.r:
            return False
        if hom_exists(self.f, self.host.base) is not None:
            return False
        host = count_embeddings_blowup(self.hspec, self.host)
        bound = partite_upper_bound_labeled(self.hspec, self.n, self.r)
        return host == self.host_labeled and bound == self.bound_labeled and host > bound


def _report(claim: str, params: dict, start: float, status: str, witness: dict | None) -> ClaimReport:
    return ClaimReport(claim, params, status, witness, int((time.perf_counter() - start) * 1000))


def _g6(g: Graph) -> str:
    return graph6.encode(g)


def _require_three_chromatic(f: Graph) -> None:
    if chromatic_number(f) != 3:
        raise PreconditionError("F must be 3-chromatic")


# ---------------------------------------------------------------- Zykov


def verify_zykov(max_n: int, max_r: int, threads: int | None = None) -> ClaimReport:
    """ex(n, K_k, K_{r+1}) equals the K_k count of T(n, r) for every r <= n <= max_n, k <= r."""
    start = time.perf_counter()
    if max_n > 9:
        raise CapacityError("verify_zykov supports max_n <= 9")
    if max_r < 1:
        raise ArgumentError("max_r must be >= 1")
    rows = []
    bad = None
    for r in range(1, max_r + 1):
        for n in range(r, max_n + 1):
            ks = list(range(1, r + 1))
            results = ex_oracle_many(n, [clique(k) for k in ks], clique(r + 1), threads=threads)
            sizes = turan(n, r).sizes
            for k, res in zip(ks, results):
                formula = count_clique_multipartite(k, sizes)
                rows.append({"r": r, "k": k, "n": n, "oracle": str(res.value), "turan": str(formula)})
                if res.value != formula and bad is None:
                    bad = rows[-1]
    params = {"max_n": max_n, "max_r": max_r}
    if bad is not None:
        return _report("zykov", params, start, "counterexample", {"mismatch": bad, "table": rows})
    return _report("zykov", params, start, "verified", {"table": rows})


# ---------------------------------------------------------------- dominated bipartite core


def check_dominating_core(h: Graph, side_a: Sequence[int], side_b: Sequence[int]) -> bool:
    """Whether ``side_a`` x ``side_b`` spans a complete bipartite subgraph adjacent to every vertex."""
    a = sum(1 << v for v in side_a)
    b = sum(1 << v for v in side_b)
    if not a or not b or a & b:
        return False
    if any((h.adj[v] & b) != b for v in side_a):
        return False
    core = a | b
    return all(h.adj[v] & core for v in range(h.order))


def find_dominating_core(h: Graph) -> tuple[list[int], list[int]] | None:
    """First (by bitmask of the first side) dominating complete bipartite subgraph."""
    for a in range(1, 1 << h.order):
        common = (1 << h.order) - 1
        for v in _bits(a):
            common &= h.adj[v]
        if not common:
            continue
        side_a, side_b = list(_bits(a)), list(_bits(common))
        if check_dominating_core(h, side_a, side_b):
            return side_a, side_b
    return None


def verify_theorem_main_instance(hspec: GraphLike, f: Graph, n: int,
                                 core: tuple[Sequence[int], Sequence[int]] | None = None,
                                 mode: str | None = None, threads: int | None = None) -> ClaimReport:
    """ex(n, H, F) against the best complete bipartite count for a dominated-core bipartite H."""
    start = time.perf_counter()
    h = hspec if isinstance(hspec, Graph) else materialize(hspec)
    if not h.is_bipartite():
        raise PreconditionError("H must be bipartite")
    if core is None:
        core = find_dominating_core(h)
        if core is None:
            raise PreconditionError("H has no complete bipartite subgraph adjacent to every vertex")
    elif not check_dominating_core(h, core[0], core[1]):
        raise PreconditionError("declared core is not a complete bipartite subgraph adjacent to every vertex")
    _require_three_chromatic(f)
    if not color_critical_edges(f):
        raise PreconditionError("F must have a color-critical edge")
    if n > 10:
        raise CapacityError("oracle comparison needs n <= 10")
    oracle = ex_oracle(n, h, f, mode=mode, threads=threads)
    best = best_multipartite(as_spec(h), n, 2, "exact")
    witness = {
        "core": [list(core[0]), list(core[1])],
        "oracle_value": str(oracle.value),
        "bipartite_value": str(best.count),
        "bipartite_sizes": list(best.sizes.parts),
        "oracle_witnesses": oracle.witnesses,
    }
    params = {"H": _g6(h), "F": _g6(f), "n": n}
    status = "verified" if oracle.value == best.count else "inconclusive"
    return _report("theorem-main", params, start, status, witness)


# ---------------------------------------------------------------- end-blown path power separation


def _gamma(g) -> Fraction:
    if isinstance(g, str):
        return Fraction(g)
    if isinstance(g, (tuple, list)):
        return Fraction(int(g[0]), int(g[1]))
    return Fraction(g)


def find_gap_certificate(f: Graph, k: int, a_max: int, gamma_grid: Sequence, n_grid: Sequence[int],
                         path_order: int | None = None) -> tuple[GapCertificate | None, dict]:
    """Search ascending a, then gamma, then n for an exact separation certificate.

    The pattern is the (r-1)-th power of the ``path_order``-vertex path with
    both ends blown up to ``a``; the host is a blow-up of C_k^(r-1) with
    k-1 classes of floor(gamma n) and one class holding the rest.
    ``path_order`` defaults to k + 1: the path then wraps once around the
    cycle, so both end classes can land in the large host class. With
    ``path_order = k`` every homomorphism into C_k^(r-1) separates the two
    ends, and no certificate can exist.

    Returns ``(certificate or None, trace)`` where ``trace`` records the best
    ratio seen.
    """
    r = chromatic_number(f) - 1
    if r < 2:
        raise PreconditionError("F must be non-bipartite with chi(F) >= 3")
    if k <= f.order:
        raise PreconditionError(f"need k > |V(F)| = {f.order}")
    p = k + 1 if path_order is None else path_order
    if p % r == 1:
        raise PreconditionError(f"path order {p} is 1 mod {r}: ends not color-separated")
    base = graph_power(cycle(k), r - 1)
    if hom_exists(f, base) is not None:
        raise PreconditionError("F maps into the host base; blow-ups are not F-free")
    freeness = {"target": _g6(base), "hom_exists": False, "method": "exhaustive backtracking"}
    best = None
    for a in range(1, a_max + 1):
        hspec = end_blown_path_power(p, r, a)
        for g in gamma_grid:
            gamma = _gamma(g)
            for n in n_grid:
                try:
                    host = unbalanced_cycle_power_host(k, r, gamma.numerator, gamma.denominator, n)
                except ArgumentError:
                    continue
                hl = count_embeddings_blowup(hspec, host)
                bound = partite_upper_bound_labeled(hspec, n, r)
                if best is None or hl * best[1] > best[0] * bound:
                    best = (hl, bound, a, f"{gamma.numerator}/{gamma.denominator}", n)
                if hl > bound:
                    cert = GapCertificate(f, r, hspec, host, n, hl, bound, freeness)
                    return cert, _trace(best)
    return None, _trace(best)


def _trace(best) -> dict:
    if best is None:
        return {}
    hl, bound, a, gamma, n = best
    return {
        "a": a, "gamma": gamma, "n": str(n),
        "hostLabeled": str(hl), "partiteBoundLabeled": str(bound),
        "ratio_permille": str(hl * 1000 // bound),
    }


def verify_prop_main2_gap(f: Graph, k: int, a_max: int, gamma_grid: Sequence, n_grid: Sequence[int],
                          path_order: int | None = None) -> ClaimReport:
    start = time.perf_counter()
    cert, trace = find_gap_certificate(f, k, a_max, gamma_grid, n_grid, path_order)
    params = {
        "F": _g6(f), "k": k, "a_max": a_max,
        "gamma_grid": [f"{_gamma(g).numerator}/{_gamma(g).denominator}" for g in gamma_grid],
        "n_grid": [str(n) for n in n_grid],
        "path_order": k + 1 if path_order is None else path_order,
    }
    if cert is None:
        return _report("prop-main2", params, start, "inconclusive", {"best": trace})
    return _report("prop-main2", params, start, "gap_found", {"certificate": cert.to_dict()})


# ---------------------------------------------------------------- fibre-capped odd-cycle homomorphism


def verify_lemma_lemi(f: Graph) -> ClaimReport:
    """F maps to its longest odd-cycle target with some fibre of size <= 1."""
    start = time.perf_counter()
    _require_three_chromatic(f)
    if not color_critical_vertices(f):
        raise PreconditionError("F must have a color-critical vertex")
    length = longest_odd_cycle_target(f)
    target = cycle(length)
    params = {"F": _g6(f)}
    for x in range(length):
        caps = [1 if i == x else None for i in range(length)]
        w = hom_exists_with_fiber_caps(f, target, caps)
        if w is not None:
            witness = {"L": length, "capped_class": x, "map": list(w), "fibers": fibers(w, length)}
            return _report("lemma-lemi", params, start, "verified", witness)
    return _report("lemma-lemi", params, start, "counterexample", {"L": length})


# ---------------------------------------------------------------- host comparison


def odd_cycle_host_bases(f: Graph, n: int) -> list[Graph]:
    """The closed library of non-bipartite candidate host bases that are F-free."""
    bases = []
    for length in range(5, min(n, 11) + 1, 2):
        for j in range(1, (length - 3) // 2 + 1):
            base = graph_power(cycle(length), j)
            if hom_exists(f, base) is None:
                bases.append(base)
    return bases


def _library_size_vectors(order: int, n: int) -> list[tuple[int, ...]]:
    vecs = [balanced_sizes(n, order)]
    for s in range(1, (n - 1) // (order - 1) + 1):
        heavy = n - (order - 1) * s
        if heavy >= 1:
            vec = (s,) * (order - 1) + (heavy,)
            if vec not in vecs:
                vecs.append(vec)
    return vecs


def host_comparison(hspec: BlowupSpec, f: Graph, n: int) -> dict:
    """Turán count of ``hspec`` against every bipartite and library host."""
    turan_count = count_copies_blowup(hspec, turan(n, 2))
    best_other = None
    checked = 0
    for x in range(1, n // 2 + 1):
        host = BlowupSpec(clique(2), (n - x, x))
        c = count_copies_blowup(hspec, host)
        checked += 1
        if best_other is None or c > best_other[0]:
            best_other = (c, host)
    if n >= 5:
        for base in odd_cycle_host_bases(f, n):
            for sizes in _library_size_vectors(base.order, n):
                host = BlowupSpec(base, sizes)
                c = count_copies_blowup(hspec, host)
                checked += 1
                if c > best_other[0]:
                    best_other = (c, host)
    return {
        "turan_count": turan_count,
        "best_count": best_other[0],
        "best_host": best_other[1],
        "hosts_checked": checked,
    }


def _comparison_witness(cmp: dict) -> dict:
    return {
        "turan_count": str(cmp["turan_count"]),
        "best_count": str(cmp["best_count"]),
        "best_host": _spec_dict(cmp["best_host"]),
        "hosts_checked": cmp["hosts_checked"],
    }


def _require_critical_vertex_three_chromatic(f: Graph) -> None:
    _require_three_chromatic(f)
    if not color_critical_vertices(f):
        raise PreconditionError("F must have a color-critical vertex")


# ---------------------------------------------------------------- uniform blown even path


def verify_turg1_instance(ell: int, m: int, f: Graph, n: int, mode: str = "host",
                          threads: int | None = None) -> ClaimReport:
    """P_{2 ell}(m) at n: oracle mode (n <= 10) or host-comparison mode."""
    start = time.perf_counter()
    if ell < 1:
        raise ArgumentError("ell must be >= 1")
    _require_critical_vertex_three_chromatic(f)
    if m < f.order:
        raise PreconditionError(f"need m >= |V(F)| = {f.order}")
    hspec = blown_path(2 * ell, m, m, m)
    params = {"ell": ell, "m": m, "F": _g6(f), "n": n, "mode": mode}
    if n < hspec.total:
        raise ArgumentError("n is smaller than the pattern")
    turan_count = count_copies_blowup(hspec, turan(n, 2))
    if mode == "oracle":
        if n > 10:
            raise CapacityError("oracle mode needs n <= 10")
        oracle = ex_oracle(n, materialize(hspec), f, threads=threads)
        status = "verified" if oracle.value == turan_count else "inconclusive"
        witness = {"oracle_value": str(oracle.value), "turan_count": str(turan_count),
                   "oracle_witnesses": oracle.witnesses}
        return _report("turg1", params, start, status, witness)
    if mode != "host":
        raise ArgumentError(f"unknown mode {mode!r}")
    cmp = host_comparison(hspec, f, n)
    status = "verified" if cmp["turan_count"] >= cmp["best_count"] else "inconclusive"
    return _report("turg1", params, start, status, _comparison_witness(cmp))


# ---------------------------------------------------------------- blown even path with unequal ends


def verify_turg2_instance(k: int, m: int, a: int, b: int, f: Graph, n: int) -> ClaimReport:
    """P_{2k+2}(m, a, b) at n in host-comparison mode, with the threshold clauses recorded."""
    start = time.perf_counter()
    _require_three_chromatic(f)
    if not a >= b >= m >= f.order:
        raise PreconditionError(f"need a >= b >= m >= |V(F)| = {f.order}")
    if not brown_sidorenko_balanced_ok(a, b):
        raise PreconditionError(f"Brown-Sidorenko condition b >= C(a-b, 2) fails for a={a}, b={b}")
    if hom_exists(f, cycle(2 * k + 1)) is None:
        raise PreconditionError(f"F is not contained in any blow-up of C_{2 * k + 1}")
    critical_vertex = bool(color_critical_vertices(f))
    good = ma_qiu_is_good(a, b)
    hspec = blown_path(2 * k + 2, m, a, b)
    if n < hspec.total:
        raise ArgumentError("n is smaller than the pattern")
    cmp = host_comparison(hspec, f, n)
    witness = _comparison_witness(cmp)
    witness["clauses"] = {
        "brown_sidorenko": True,
        "ma_qiu": good,
        "color_critical_vertex": critical_vertex,
        "exact_claim_applies": good and critical_vertex,
    }
    if not good:
        witness["clauses"]["note"] = "ma_qiu threshold fails: only the asymptotic clause applies"
    params = {"k": k, "m": m, "a": a, "b": b, "F": _g6(f), "n": n}
    status = "verified" if cmp["turan_count"] >= cmp["best_count"] else "inconclusive"
    return _report("turg2", params, start, status, witness)


# ---------------------------------------------------------------- odd-cycle separation


def verify_main3_separation(f: Graph, m: int | None = None, a: int | None = None, b: int | None = None,
                            n: int | None = None) -> ClaimReport:
    """Odd-cycle separation: a C_{2k+1} blow-up beating every bipartite host."""
    start = time.perf_counter()
    _require_three_chromatic(f)
    length = longest_odd_cycle_target(f)
    k = (length - 1) // 2
    params = {"F": _g6(f), "m": m, "a": a, "b": b, "n": n, "k": k}
    if k == 1:
        return _report("main3", params, start, "verified", {"note": "no odd cycle shorter than C_3"})
    target = cycle(length)
    freeness = {}
    for ell in range(1, k):
        freeness[str(2 * ell + 1)] = hom_exists(cycle(2 * ell + 1), target) is None
    if not all(freeness.values()):
        return _report("main3", params, start, "counterexample", {"freeness": freeness})
    if None in (m, a, b, n):
        raise ArgumentError("main3 needs m, a, b and n")
    hspec = blown_path(2 * k + 2, m, a, b)
    if n < hspec.total:
        raise ArgumentError("n is smaller than the pattern")
    bip = best_multipartite(hspec, n, 2, "exact")
    best = None
    for s in range(1, (n - 1) // (length - 1) + 1):
        sizes = (s,) * (length - 1) + (n - (length - 1) * s,)
        c = count_copies_blowup(hspec, BlowupSpec(target, sizes))
        if best is None or c > best[0]:
            best = (c, sizes)
    witness = {
        "freeness": freeness,
        "bipartite_value": str(bip.count),
        "bipartite_sizes": list(bip.sizes.parts),
        "host_value": str(best[0]) if best else "0",
        "host": _spec_dict(BlowupSpec(target, best[1])) if best else None,
    }
    status = "gap_found" if best and best[0] > bip.count else "inconclusive"
    return _report("main3", params, start, status, witness)


# ---------------------------------------------------------------- conjecture probes


def conjecture_probe(hspec: GraphLike, f: Graph, n: int, mode: str | None = None,
                     threads: int | None = None) -> ClaimReport:
    """Record the oracle value next to the best multipartite value; asserts nothing."""
    start = time.perf_counter()
    if not color_critical_edges(f):
        raise PreconditionError("F must have a color-critical edge")
    if n > 10:
        raise CapacityError("conjecture_probe needs n <= 10")
    r = chromatic_number(f) - 1
    h = hspec if isinstance(hspec, Graph) else materialize(hspec)
    oracle = ex_oracle(n, h, f, mode=mode, threads=threads)
    best = best_multipartite(as_spec(h), n, r, "exact")
    witness = {
        "oracle_value": str(oracle.value),
        "multipartite_value": str(best.count),
        "multipartite_sizes": list(best.sizes.parts),
        "equal": oracle.value == best.count,
        "oracle_witnesses": oracle.witnesses,
    }
    params = {"H": _g6(h), "F": _g6(f), "n": n}
    return _report("conjecture-probe", params, start, "inconclusive", witness)

"""Graph families, blow-up descriptions (BlowupSpec) and the graph-expression grammar.

A :class:`BlowupSpec` is a base graph plus one positive class size per base
vertex. Class sizes may be astronomically large; counting on specs is done
by :mod:`turanlab.homs` without ever materialising the host.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import ArgumentError, CapacityError, ParseError
from .graph import MAX_ORDER, Graph, _bits
from . import graph6


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if len(self.sizes) != self.base.order:
            raise ArgumentError(
                f"size vector has length {len(self.sizes)}, base has {self.base.order} vertices"
            )
        if any(s < 1 for s in self.sizes):
            raise ArgumentError("blow-up class sizes must be >= 1")

    @classmethod
    def of(cls, g: Graph) -> "BlowupSpec":
        return cls(g, (1,) * g.order)

    @property
    def total(self) -> int:
        return sum(self.sizes)


GraphLike = Union[Graph, BlowupSpec]


def as_spec(x: GraphLike) -> BlowupSpec:
    return x if isinstance(x, BlowupSpec) else BlowupSpec.of(x)


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise CapacityError(f"graph order {n} exceeds {MAX_ORDER}")


# ---------------------------------------------------------------- families


def path(k: int) -> Graph:
    if k < 1:
        raise ArgumentError("path needs k >= 1")
    _check_order(k)
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise ArgumentError("cycle needs k >= 3")
    _check_order(k)
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def clique(r: int) -> Graph:
    if r < 1:
        raise ArgumentError("clique needs r >= 1")
    _check_order(r)
    full = (1 << r) - 1
    return Graph(r, tuple(full ^ (1 << i) for i in range(r)))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if any(s < 1 for s in sizes):
        raise ArgumentError("part sizes must be >= 1")
    return materialize(BlowupSpec(clique(len(sizes)), tuple(sizes))) if sizes else Graph.empty(0)


def biclique(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def star(a: int) -> Graph:
    """K_{1,a}; vertex 0 is the centre."""
    if a < 0:
        raise ArgumentError("star needs a >= 0")
    _check_order(a + 1)
    return Graph.from_edges(a + 1, ((0, i) for i in range(1, a + 1)))


def double_star(a: int, b: int) -> Graph:
    """S_{a,b}: central edge 0-1, leaves 2..a+1 on 0 and a+2..a+b+1 on 1."""
    if a < 0 or b < 0:
        raise ArgumentError("double star needs a, b >= 0")
    _check_order(a + b + 2)
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(a + b + 2, edges)


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def graph_power(g: Graph, k: int) -> Graph:
    """Join vertices at distance 1..k in ``g``."""
    if k < 1:
        raise ArgumentError("graph power needs k >= 1")
    rows = []
    for v in range(g.order):
        reach = frontier = 1 << v
        for _ in range(k):
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~reach
            if not frontier:
                break
            reach |= frontier
        rows.append(reach & ~(1 << v))
    return Graph(g.order, tuple(rows))


# ---------------------------------------------------------------- blow-ups


def balanced_sizes(n: int, r: int) -> tuple[int, ...]:
    q, rem = divmod(n, r)
    return tuple(q + 1 if i < rem else q for i in range(r))


def turan(n: int, r: int) -> BlowupSpec:
    if not 1 <= r <= n:
        raise ArgumentError(f"turan(n, r) needs 1 <= r <= n, got n={n}, r={r}")
    return BlowupSpec(clique(r), balanced_sizes(n, r))


def materialize(spec: BlowupSpec) -> Graph:
    """Materialise a blow-up; classes are consecutive ranges in base order."""
    total = spec.total
    _check_order(total)
    starts = []
    acc = 0
    for s in spec.sizes:
        starts.append(acc)
        acc += s
    class_mask = [((1 << s) - 1) << st for s, st in zip(spec.sizes, starts)]
    rows = []
    for b, s in enumerate(spec.sizes):
        row = 0
        for c in _bits(spec.base.adj[b]):
            row |= class_mask[c]
        rows.extend([row] * s)
    return Graph(total, tuple(rows))


def end_blown_path_power(k: int, r: int, a: int) -> BlowupSpec:
    """(r-1)-th power of the k-vertex path with both end vertices blown up to ``a``."""
    if k < 3 or r < 2 or a < 1:
        raise ArgumentError("end_blown_path_power needs k >= 3, r >= 2, a >= 1")
    base = graph_power(path(k), r - 1)
    return BlowupSpec(base, (a,) + (1,) * (k - 2) + (a,))


def blown_path(kk: int, m: int, a: int, b: int) -> BlowupSpec:
    """P_kk(m, a, b): path classes of size ``m``, end classes ``a`` and ``b``.

    With ``a == b == m`` this is the uniform blow-up P_kk(m).
    """
    if kk < 2 or kk % 2 or min(m, a, b) < 1:
        raise ArgumentError("blown_path needs even kk >= 2 and m, a, b >= 1")
    return BlowupSpec(path(kk), (a,) + (m,) * (kk - 2) + (b,))


def unbalanced_cycle_power_host(k: int, r: int, gamma_num: int, gamma_den: int, n: int) -> BlowupSpec:
    """Blow-up of C_k^(r-1): k-1 classes of floor(gamma*n), one class taking the rest."""
    gamma = Fraction(gamma_num, gamma_den)
    if k < 3 or r < 2:
        raise ArgumentError("host needs k >= 3, r >= 2")
    if not 0 < gamma < Fraction(1, k - 1):
        raise ArgumentError("host needs 0 < gamma < 1/(k-1)")
    if n < k * gamma.denominator:
        raise ArgumentError("host needs n >= k * gamma denominator")
    small = gamma.numerator * n // gamma.denominator
    big = n - (k - 1) * small
    if small < 1 or big < 1:
        raise ArgumentError("host class sizes must be positive")
    return BlowupSpec(graph_power(cycle(k), r - 1), (small,) * (k - 1) + (big,))


# ---------------------------------------------------------------- grammar

_G6_CHARS = frozenset(chr(c) for c in range(63, 127))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, at: int | None = None):
        off = len(self.text[: self.pos if at is None else at].encode("utf-8"))
        raise ParseError(msg, off)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def ints(self) -> list[int]:
        vals = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            vals.append(self.integer())
        return vals

    def expr(self):
        self.skip()
        start = self.pos
        if self.text.startswith("g6:", self.pos):
            self.pos += 3
            s = self.pos
            while self.pos < len(self.text) and self.text[self.pos] in _G6_CHARS:
                self.pos += 1
            try:
                return graph6.decode(self.text[s:self.pos])
            except ValueError as exc:
                self.error(f"bad graph6: {exc}", s)
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        name = self.text[start:self.pos]
        if not name:
            self.error("expected graph expression")
        self.expect("(")
        if name == "pow":
            inner = self.expr()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            if not isinstance(inner, Graph):
                self.error("pow() needs a graph, not a blow-up", start)
            return graph_power(inner, k)
        if name == "blow":
            inner = self.expr()
            self.expect(",")
            self.expect("[")
            at = self.pos
            sizes = self.ints()
            self.expect("]")
            self.expect(")")
            if not isinstance(inner, Graph):
                self.error("blow() needs a graph, not a blow-up", start)
            if len(sizes) != inner.order:
                self.error(f"size vector length {len(sizes)} != base order {inner.order}", at)
            if any(s < 1 for s in sizes):
                self.error("blow-up sizes must be >= 1", at)
            return BlowupSpec(inner, tuple(sizes))
        arity = {"path": 1, "cycle": 1, "clique": 1, "star": 1, "biclique": 2, "dstar": 2, "turan": 2}
        if name not in arity:
            self.error(f"unknown constructor {name!r}", start)
        args = self.ints()
        self.expect(")")
        if len(args) != arity[name]:
            self.error(f"{name}() takes {arity[name]} argument(s), got {len(args)}", start)
        fn = {
            "path": path, "cycle": cycle, "clique": clique, "star": star,
            "biclique": biclique, "dstar": double_star, "turan": turan,
        }[name]
        try:
            return fn(*args)
        except ArgumentError as exc:
            self.error(str(exc), start)


def parse_graph_expr(text: str) -> GraphLike:
    p = _Parser(text)
    result = p.expr()
    p.skip()
    if p.pos != len(text):
        p.error("trailing input")
    return result


def to_expr(x: GraphLike) -> str:
    """An expression that parses back to exactly ``x``."""
    if isinstance(x, BlowupSpec):
        return f"blow(g6:{graph6.encode(x.base)},[{','.join(map(str, x.sizes))}])"
    return f"g6:{graph6.encode(x)}"

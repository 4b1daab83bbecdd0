"""Labeled simple graphs on ``{1..d}`` and the combinatorics built directly on them.

Everything here speaks 1-indexed vertices.  Vertex-indexed data (colorings,
rank functions, labelings) is carried as a :class:`VertexMap`, a tuple whose
entry ``v - 1`` holds the value at vertex ``v`` and which can be called as
``m(v)``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_D = 10


class GraphError(ValueError):
    """Malformed graph, orientation, poset or labeling."""


class EnumerationCapError(ValueError):
    """An S_d-scale enumeration was requested above the configured cap."""


def check_cap(d: int, max_d: int | None) -> None:
    if max_d is not None and d > max_d:
        raise EnumerationCapError(
            f"d={d} exceeds the enumeration cap {max_d}; pass a larger max_d "
            "(or None) to accept the cost"
        )


class VertexMap(tuple):
    """Tuple of per-vertex values, callable with a 1-indexed vertex."""

    def __call__(self, v: int):
        if v < 1:
            raise IndexError(v)
        return self[v - 1]

    def as_dict(self) -> dict[int, int]:
        return {v: x for v, x in enumerate(self, start=1)}

    def __repr__(self) -> str:
        return f"VertexMap({tuple(self)!r})"


@dataclass(frozen=True)
class Graph:
    d: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.d!r}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.d and 1 <= v <= self.d):
                raise GraphError(f"edge {u} {v} has an endpoint outside 1..{self.d}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, d: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
        return cls(d, frozenset((int(u), int(v)) for u, v in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.d + 1)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """``adjacency[v]`` is the neighbour set of ``v``; index 0 is unused."""
        nbrs: list[set[int]] = [set() for _ in range(self.d + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Bit ``u`` of ``adjacency_masks[v]`` is set iff ``uv`` is an edge."""
        return tuple(sum(1 << u for u in nb) for nb in self.adjacency)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(u, v) for u, v in itertools.combinations(vs, 2))

    def is_connected(self) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.d

    def is_tree(self) -> bool:
        return len(self.edges) == self.d - 1 and self.is_connected()

    def relabel(self, mapping: Sequence[int]) -> Graph:
        """Image of the graph under ``v -> mapping[v - 1]``."""
        if sorted(mapping) != list(self.vertices):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph.from_edges(self.d, ((mapping[u - 1], mapping[v - 1]) for u, v in self.edges))

    def to_text(self) -> str:
        lines = [str(self.d)] + [f"{u} {v}" for u, v in self.sorted_edges]
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Graph(d={self.d}, edges={list(self.sorted_edges)})"


# -- parsing ---------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the plain-text graph format.

    Lines starting with ``#`` and blank lines are ignored.  The first data
    line is the vertex count, each later one is an edge ``u v``.  Repeated
    edges collapse; self-loops and out-of-range endpoints are rejected.
    """
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line.split()))
    if not data:
        raise GraphError("graph file has no vertex-count line")
    lineno, fields = data[0]
    if len(fields) != 1:
        raise GraphError(f"line {lineno}: expected a single vertex count")
    try:
        d = int(fields[0])
    except ValueError:
        raise GraphError(f"line {lineno}: vertex count {fields[0]!r} is not an integer") from None
    if d < 1:
        raise GraphError(f"line {lineno}: vertex count must be at least 1")
    edges = []
    for lineno, fields in data[1:]:
        if len(fields) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer endpoint") from None
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        if not (1 <= u <= d and 1 <= v <= d):
            raise GraphError(f"line {lineno}: endpoint outside 1..{d}")
        edges.append((u, v))
    return Graph.from_edges(d, edges)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- generators ------------------------------------------------------------


def _positive(*sizes: int) -> None:
    for s in sizes:
        if not isinstance(s, int) or s < 1:
            raise GraphError(f"size parameters must be positive integers, got {s!r}")


def empty_graph(d: int) -> Graph:
    _positive(d)
    return Graph.from_edges(d)


def path_graph(d: int) -> Graph:
    _positive(d)
    return Graph.from_edges(d, ((i, i + 1) for i in range(1, d)))


def cycle_graph(d: int) -> Graph:
    _positive(d)
    if d < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(d, [(i, i % d + 1) for i in range(1, d + 1)])


def star_graph(d: int) -> Graph:
    """Star on ``d`` vertices with centre 1."""
    _positive(d)
    return Graph.from_edges(d, ((1, i) for i in range(2, d + 1)))


def complete_graph(d: int) -> Graph:
    _positive(d)
    return Graph.from_edges(d, itertools.combinations(range(1, d + 1), 2))


def broom_graph(m: int, n: int) -> Graph:
    """B(m, n): the path ``1 - 2 - ... - n`` with ``m`` leaves ``n+1..n+m`` hung on ``n``."""
    _positive(m, n)
    edges = [(i, i + 1) for i in range(1, n)]
    edges += [(n, n + j) for j in range(1, m + 1)]
    return Graph.from_edges(m + n, edges)


BOWTIE_EDGES = ((1, 4), (1, 5), (4, 5), (2, 3), (2, 5), (3, 5))


def bowtie_graph() -> Graph:
    """Two triangles ``1 4 5`` and ``2 3 5`` sharing vertex 5."""
    return Graph.from_edges(5, BOWTIE_EDGES)


_GENERATORS = {
    "empty": (empty_graph, 1),
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "star": (star_graph, 1),
    "complete": (complete_graph, 1),
    "broom": (broom_graph, 2),
    "bowtie": (bowtie_graph, 0),
}


def generate(kind: str, *sizes: int) -> Graph:
    try:
        fn, arity = _GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}; choose from {sorted(_GENERATORS)}") from None
    if len(sizes) != arity:
        raise GraphError(f"{kind} takes {arity} size parameter(s), got {len(sizes)}")
    return fn(*sizes)


def all_graphs(d: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``[d]`` (``2**C(d,2)`` of them)."""
    pairs = list(itertools.combinations(range(1, d + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(d, (p for i, p in enumerate(pairs) if mask >> i & 1))


def random_graph(d: int, p: float = 0.5, rng: random.Random | None = None) -> Graph:
    rng = rng or random.Random()
    pairs = itertools.combinations(range(1, d + 1), 2)
    return Graph.from_edges(d, (e for e in pairs if rng.random() < p))


# -- colorings ---------------------------------------------------------------


def proper_colorings(G: Graph, n: int) -> Iterator[VertexMap]:
    """Proper colorings ``c: [d] -> [n]`` in lexicographic order of ``(c(1), ..., c(d))``."""
    d = G.d
    if n <= 0:
        return
    earlier = [sorted(u for u in G.adjacency[v] if u < v) for v in range(d + 1)]
    colors = [0] * (d + 1)

    def extend(v: int):
        if v > d:
            yield VertexMap(colors[1:])
            return
        taken = {colors[u] for u in earlier[v]}
        for c in range(1, n + 1):
            if c not in taken:
                colors[v] = c
                yield from extend(v + 1)
        colors[v] = 0

    yield from extend(1)


def is_proper(G: Graph, coloring: Sequence[int]) -> bool:
    return all(coloring[u - 1] != coloring[v - 1] for u, v in G.edges)


def chromatic_number(G: Graph) -> int:
    for n in range(1, G.d + 1):
        if next(proper_colorings(G, n), None) is not None:
            return n
    raise AssertionError("unreachable: d colors always suffice")


# -- chromatic polynomial --------------------------------------------------


@lru_cache(maxsize=None)
def _dc(k: int, edges: frozenset) -> tuple[int, ...]:
    if not edges:
        return (0,) * k + (1,)
    e = min(edges)
    u, v = e
    deleted = _dc(k, edges - {e})
    # contract v into u, then shift labels above v down by one
    merged = set()
    for a, b in edges - {e}:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            a, b = (a - (a > v), b - (b > v))
            merged.add((min(a, b), max(a, b)))
    contracted = _dc(k - 1, frozenset(merged))
    out = list(deleted)
    for i, c in enumerate(contracted):
        out[i] -= c
    return tuple(out)


def chromatic_polynomial_dc(G: Graph) -> tuple[int, ...]:
    """Integer coefficients (ascending in ``n``) of the chromatic polynomial, by deletion-contraction."""
    return _dc(G.d, G.edges)


def eval_int_poly(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# -- orientations ------------------------------------------------------------

Orientation = frozenset  # of directed pairs (tail, head)


def _reaches(succ: dict[int, set[int]], src: int, dst: int) -> bool:
    stack, seen = [src], {src}
    while stack:
        x = stack.pop()
        if x == dst:
            return True
        for y in succ[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def acyclic_orientations(G: Graph) -> list[Orientation]:
    """All acyclic orientations, branching on edges in sorted order (``u -> v`` before ``v -> u``)."""
    edges = G.sorted_edges
    succ: dict[int, set[int]] = {v: set() for v in G.vertices}
    arcs: list[tuple[int, int]] = []
    out: list[Orientation] = []

    def branch(i: int):
        if i == len(edges):
            out.append(frozenset(arcs))
            return
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            if not _reaches(succ, b, a):
                succ[a].add(b)
                arcs.append((a, b))
                branch(i + 1)
                arcs.pop()
                succ[a].discard(b)

    branch(0)
    return out


def reverse_orientation(rho: Orientation) -> Orientation:
    return frozenset((b, a) for a, b in rho)


def check_orientation(G: Graph, rho: Orientation) -> None:
    undirected = set()
    for a, b in rho:
        if not G.has_edge(a, b):
            raise GraphError(f"arc {a}->{b} is not an edge of the graph")
        undirected.add((min(a, b), max(a, b)))
    if len(undirected) != len(rho) or undirected != G.edges:
        raise GraphError("orientation must direct every edge exactly once")


# -- posets ------------------------------------------------------------------


class Poset:
    """Finite poset on ``{1..d}`` stored as transitively closed strict up-sets."""

    __slots__ = ("d", "above", "_hash")

    def __init__(self, d: int, relations: Iterable[tuple[int, int]] = ()):
        succ: list[set[int]] = [set() for _ in range(d + 1)]
        for a, b in relations:
            if not (1 <= a <= d and 1 <= b <= d):
                raise GraphError(f"relation {a} < {b} outside 1..{d}")
            if a == b:
                raise GraphError(f"relation {a} < {a} is not antisymmetric")
            succ[a].add(b)
        above: list[frozenset[int]] = [frozenset()] * (d + 1)
        for v in range(1, d + 1):
            seen: set[int] = set()
            stack = list(succ[v])
            while stack:
                x = stack.pop()
                if x == v:
                    raise GraphError("relations contain a cycle")
                if x not in seen:
                    seen.add(x)
                    stack.extend(succ[x])
            above[v] = frozenset(seen)
        self.d = d
        self.above = tuple(above)
        self._hash = hash((d, self.above))

    @classmethod
    def chain(cls, order: Sequence[int]) -> Poset:
        return cls(len(order), zip(order, order[1:]))

    @classmethod
    def antichain(cls, d: int) -> Poset:
        return cls(d)

    def lt(self, a: int, b: int) -> bool:
        return b in self.above[a]

    def le(self, a: int, b: int) -> bool:
        return a == b or b in self.above[a]

    @property
    def elements(self) -> range:
        return range(1, self.d + 1)

    def below(self, v: int) -> frozenset[int]:
        return frozenset(u for u in self.elements if v in self.above[u])

    def dual(self) -> Poset:
        return Poset(self.d, ((b, a) for a in self.elements for b in self.above[a]))

    def cover_relations(self) -> list[tuple[int, int]]:
        return [
            (a, b)
            for a in self.elements
            for b in self.above[a]
            if not any(b in self.above[c] for c in self.above[a])
        ]

    def is_natural(self, omega: Sequence[int]) -> bool:
        if sorted(omega) != list(self.elements):
            return False
        return all(omega[a - 1] < omega[b - 1] for a in self.elements for b in self.above[a])

    def __eq__(self, other):
        return isinstance(other, Poset) and self.d == other.d and self.above == other.above

    def __hash__(self):
        return self._hash

    def __repr__(self) -> str:
        return f"Poset(d={self.d}, covers={self.cover_relations()})"


@lru_cache(maxsize=4096)
def _closure(d: int, rho: Orientation) -> Poset:
    return Poset(d, rho)


def induced_poset(G: Graph, rho: Orientation) -> Poset:
    """Transitive closure of an acyclic orientation: ``i -> j`` gives ``i < j``."""
    check_orientation(G, rho)
    return _closure(G.d, frozenset(rho))


def rank_labeling(P: Poset) -> VertexMap:
    """Strip minimal elements batch by batch, numbering each batch in increasing label order."""
    remaining = set(P.elements)
    omega = [0] * P.d
    nxt = 1
    while remaining:
        batch = sorted(v for v in remaining if not any(v in P.above[u] for u in remaining))
        for v in batch:
            omega[v - 1] = nxt
            nxt += 1
        remaining.difference_update(batch)
    return VertexMap(omega)


def check_natural(P: Poset, omega: Sequence[int]) -> None:
    if not P.is_natural(omega):
        raise GraphError(f"labeling {tuple(omega)} is not a natural labeling of {P!r}")


def linear_extension_orders(P: Poset) -> Iterator[tuple[int, ...]]:
    """Orderings ``tau^{-1}(1), ..., tau^{-1}(d)`` of the elements, lexicographically."""
    d = P.d
    indeg = [0] * (d + 1)
    covers = [[] for _ in range(d + 1)]
    for a, b in P.cover_relations():
        covers[a].append(b)
        indeg[b] += 1
    order: list[int] = []

    def extend():
        if len(order) == d:
            yield tuple(order)
            return
        for v in range(1, d + 1):
            if indeg[v] == 0:
                indeg[v] = -1
                for w in covers[v]:
                    indeg[w] -= 1
                order.append(v)
                yield from extend()
                order.pop()
                for w in covers[v]:
                    indeg[w] += 1
                indeg[v] = 0

    yield from extend()


def linear_extensions(P: Poset, omega: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Jordan-Hoelder words ``omega o tau^{-1}`` of ``(P, omega)``."""
    check_natural(P, omega)
    for order in linear_extension_orders(P):
        yield tuple(omega[e - 1] for e in order)


def delta_stat(P: Poset) -> int:
    """Sum over elements of the vertex count of the longest chain starting there."""
    memo: dict[int, int] = {}

    def longest(t: int) -> int:
        if t not in memo:
            memo[t] = 1 + max((longest(u) for u in P.above[t]), default=0)
        return memo[t]

    return sum(longest(t) for t in P.elements)

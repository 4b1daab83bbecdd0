"""Rank functions and G-statistics of permutations, and the cone decomposition they induce.

A permutation is a tuple in one-line notation, ``pi[i - 1] = pi(i)``.  The
rank of ``pi(i)`` is one more than the largest rank among earlier entries
adjacent to it, which is the same as the longest chain of increasing
positions along edges ending at ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import DEFAULT_MAX_D, Graph, GraphError, VertexMap, check_cap

Permutation = tuple  # of ints, one-line notation
OrderedSetPartition = tuple  # of tuples of vertices


def check_permutation(pi: Sequence[int], d: int) -> tuple[int, ...]:
    pi = tuple(int(x) for x in pi)
    if sorted(pi) != list(range(1, d + 1)):
        raise GraphError(f"{list(pi)} is not a permutation of 1..{d}")
    return pi


def rank_of_permutation(G: Graph, pi: Sequence[int]) -> VertexMap:
    pi = check_permutation(pi, G.d)
    rk = [0] * (G.d + 1)
    for i, v in enumerate(pi):
        rk[v] = 1 + max((rk[u] for u in pi[:i] if G.has_edge(u, v)), default=0)
    return VertexMap(rk[1:])


def check_partition(blocks: Sequence[Sequence[int]], d: int) -> tuple[tuple[int, ...], ...]:
    blocks = tuple(tuple(b) for b in blocks)
    flat = [v for b in blocks for v in b]
    if any(not b for b in blocks) or sorted(flat) != list(range(1, d + 1)):
        raise GraphError("blocks must be nonempty, disjoint and cover 1..d")
    return blocks


def rank_of_partition(G: Graph, blocks: Sequence[Sequence[int]]) -> VertexMap:
    """Vertex count of a longest path ending at each vertex that visits blocks of increasing index."""
    blocks = check_partition(blocks, G.d)
    rk = [0] * (G.d + 1)
    done: list[int] = []
    for block in blocks:
        for v in block:
            rk[v] = 1 + max((rk[u] for u in done if G.has_edge(u, v)), default=0)
        done.extend(block)
    return VertexMap(rk[1:])


@dataclass(frozen=True)
class GStatProfile:
    asc: frozenset[int]
    des: frozenset[int]
    maj: int

    @property
    def ascnum(self) -> int:
        return len(self.asc)

    @property
    def desnum(self) -> int:
        return len(self.des)


def _is_ascent(rk: VertexMap, a: int, b: int) -> bool:
    ra, rb = rk(a), rk(b)
    return ra < rb or (ra == rb and a < b)


def g_ascents(G: Graph, pi: Sequence[int]) -> tuple[int, ...]:
    rk = rank_of_permutation(G, pi)
    return tuple(i for i in range(1, G.d) if _is_ascent(rk, pi[i - 1], pi[i]))


def g_statistics(G: Graph, pi: Sequence[int]) -> GStatProfile:
    asc = frozenset(g_ascents(G, pi))
    des = frozenset(range(1, G.d)) - asc
    return GStatProfile(asc, des, sum(des))


def descents(word: Sequence[int]) -> frozenset[int]:
    """Ordinary descent set of a word."""
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def ascents(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] < word[i])


def major_index(word: Sequence[int]) -> int:
    return sum(descents(word))


def g_sequence(G: Graph, pi: Sequence[int]) -> OrderedSetPartition:
    """Cut ``pi`` after every G-ascent; blocks keep the order they have in ``pi``."""
    pi = check_permutation(pi, G.d)
    cuts = (0,) + g_ascents(G, pi) + (G.d,)
    return tuple(pi[a:b] for a, b in zip(cuts, cuts[1:]))


def g_sequence_coloring(G: Graph, pi: Sequence[int]) -> VertexMap:
    w = [0] * G.d
    for j, block in enumerate(g_sequence(G, pi), start=1):
        for v in block:
            w[v - 1] = j
    return VertexMap(w)


def format_partition(blocks: OrderedSetPartition) -> str:
    return "/".join("".join(map(str, b)) if max(b) < 10 else ",".join(map(str, b)) for b in blocks)


# -- the cones -------------------------------------------------------------------


def _check_point(G: Graph, a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(a)
    if len(a) != G.d + 1:
        raise ValueError(f"lattice point needs {G.d + 1} coordinates, got {len(a)}")
    return a


def cone_contains(G: Graph, pi: Sequence[int], a: Sequence[int]) -> bool:
    """Membership in ``0 < a_pi(1) <= ... <= a_pi(d) < a_(d+1)``, strict exactly at G-ascents."""
    a = _check_point(G, a)
    pi = check_permutation(pi, G.d)
    return _in_cone(pi, set(g_ascents(G, pi)), a)


def _in_cone(pi: Sequence[int], asc, a: Sequence[int]) -> bool:
    xs = [a[v - 1] for v in pi]
    if xs[0] <= 0 or xs[-1] >= a[-1]:
        return False
    for i in range(1, len(xs)):
        lo, hi = xs[i - 1], xs[i]
        if hi < lo or (i in asc and hi == lo):
            return False
    return True


def in_homogenized_region(G: Graph, a: Sequence[int]) -> bool:
    a = _check_point(G, a)
    top = a[-1]
    if any(not 0 < x < top for x in a[:-1]):
        return False
    return all(a[u - 1] != a[v - 1] for u, v in G.edges)


def locate_point(G: Graph, a: Sequence[int]) -> Permutation:
    """The unique permutation whose cone contains the integer point ``a``."""
    a = _check_point(G, a)
    if not in_homogenized_region(G, a):
        raise ValueError(f"{a} is not a point of the proper-coloring region of {G!r}")
    values = sorted(set(a[:-1]))
    blocks = [[v for v in G.vertices if a[v - 1] == b] for b in values]
    rk = rank_of_partition(G, blocks)
    pi: list[int] = []
    for block in blocks:
        pi.extend(sorted(block, key=lambda v: (rk(v), v), reverse=True))
    return tuple(pi)


# -- walking all of S_d ----------------------------------------------------------


def iter_ascent_sets(G: Graph, max_d: int | None = DEFAULT_MAX_D) -> Iterator[tuple[Permutation, tuple[int, ...]]]:
    """Yield ``(pi, asc_G(pi))`` for every ``pi`` in S_d, lexicographically.

    Ranks and ascents of a prefix never depend on what comes later, so they
    are computed once per prefix rather than once per permutation.
    """
    check_cap(G.d, max_d)
    d = G.d
    masks = G.adjacency_masks
    rank = [0] * (d + 1)
    word: list[int] = []
    asc: list[int] = []

    def grow(placed: int):
        i = len(word)
        if i == d:
            yield tuple(word), tuple(asc)
            return
        prev = word[-1] if word else 0
        for v in range(1, d + 1):
            bit = 1 << v
            if placed & bit:
                continue
            nb = masks[v] & placed
            r = 0
            while nb:
                low = nb & -nb
                ru = rank[low.bit_length() - 1]
                if ru > r:
                    r = ru
                nb ^= low
            r += 1
            rank[v] = r
            word.append(v)
            up = bool(prev) and (rank[prev] < r or (rank[prev] == r and prev < v))
            if up:
                asc.append(i)
            yield from grow(placed | bit)
            if up:
                asc.pop()
            word.pop()

    yield from grow(0)


def all_permutations(d: int) -> Iterator[Permutation]:
    return itertools.permutations(range(1, d + 1))

"""Minimum sum colorings, the G-major index polynomial, and base-k graph fingerprints."""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .genfunc import brute_chi, powers
from .graph import DEFAULT_MAX_D, Graph, GraphError, VertexMap
from .gstats import iter_ascent_sets
from .qpoly import QPoly


@dataclass(frozen=True)
class MinSumResult:
    sigma: int
    witnesses: tuple[VertexMap, ...]

    @property
    def count(self) -> int:
        return len(self.witnesses)


def min_sum_coloring(G: Graph) -> MinSumResult:
    """All proper colorings minimising the sum of colors.

    Palette ``1..d`` always suffices.  A branch is cut once the partial sum
    plus one per uncolored vertex already exceeds the best total found.
    """
    d = G.d
    earlier = [sorted(u for u in G.adjacency[v] if u < v) for v in range(d + 1)]
    colors = [0] * (d + 1)
    best = [d * d + 1]
    found: list[VertexMap] = []

    def extend(v: int, partial: int):
        if partial + (d - v + 1) > best[0]:
            return
        if v > d:
            if partial < best[0]:
                best[0] = partial
                found.clear()
            found.append(VertexMap(colors[1:]))
            return
        taken = {colors[u] for u in earlier[v]}
        for c in range(1, d + 1):
            if c not in taken:
                colors[v] = c
                extend(v + 1, partial + c)
        colors[v] = 0

    extend(1, 0)
    return MinSumResult(best[0], tuple(found))


def min_ascent_weight(G: Graph, max_d: int | None = DEFAULT_MAX_D) -> tuple[int, int]:
    """Minimum of ``d + sum_{j in asc_G(pi)} (d - j)`` over S_d, and how many ``pi`` attain it."""
    d = G.d
    counts = Counter(d + sum(d - j for j in asc) for _, asc in iter_ascent_sets(G, max_d))
    low = min(counts)
    return low, counts[low]


def g_major_polynomial(G: Graph, max_d: int | None = DEFAULT_MAX_D) -> QPoly:
    half = comb(G.d, 2)
    return QPoly(Counter(half - sum(asc) for _, asc in iter_ascent_sets(G, max_d)))


class TreeDegreeBounds(NamedTuple):
    lower: int
    upper: int
    actual: int


def tree_degree_bounds(T: Graph, max_d: int | None = DEFAULT_MAX_D) -> TreeDegreeBounds:
    if T.d < 2 or not T.is_tree():
        raise GraphError("tree degree bounds need a tree on at least 2 vertices")
    d = T.d
    top = comb(d + 1, 2)
    return TreeDegreeBounds(top - (3 * d) // 2, top - d - 1, g_major_polynomial(T, max_d).degree)


# -- fingerprints --------------------------------------------------------------------

DIGEST_ALG = "sha256"


@dataclass(frozen=True)
class Fingerprint:
    """``chi(G, (k, k^2, ..., k^d), d - 1)``: one monomial per proper ``(d-1)``-coloring."""

    d: int
    k: int
    poly: QPoly

    @property
    def digest(self) -> str:
        canon = json.dumps(self.poly.to_json()["terms"], separators=(",", ":"))
        return hashlib.new(DIGEST_ALG, canon.encode()).hexdigest()

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "poly": self.poly.to_json(),
            "digest": self.digest,
            "digest_alg": DIGEST_ALG,
        }


def fingerprint(G: Graph, k: int | None = None) -> Fingerprint:
    d = G.d
    k = d if k is None else k
    if d < 2:
        raise GraphError("fingerprints need at least 2 vertices")
    if k < d:
        raise GraphError(f"base k={k} must be at least d={d}")
    return Fingerprint(d, k, brute_chi(G, powers(k, d), d - 1))


def distinguish(G: Graph, H: Graph, k: int | None = None) -> bool:
    """True iff the two fingerprints coincide, which happens iff ``G == H`` as labeled graphs."""
    if G.d != H.d:
        raise GraphError(f"graphs have different vertex counts ({G.d} and {H.d})")
    return fingerprint(G, k).poly == fingerprint(H, k).poly

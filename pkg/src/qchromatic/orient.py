"""Acyclic orientations, linear extensions, and the bijection with permutations.

A permutation ``pi`` orients every edge from smaller to larger rank; with a
natural labeling ``omega`` of the induced poset, ``omega o pi`` is a
Jordan-Hoelder word of that poset.  Every (orientation, word) pair arises
from exactly one permutation.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

from .genfunc import brute_chi, check_linear_form
from .graph import (
    Graph,
    GraphError,
    Orientation,
    Poset,
    VertexMap,
    acyclic_orientations,
    check_natural,
    induced_poset,
    linear_extension_orders,
    linear_extensions,
    rank_labeling,
    reverse_orientation,
)
from .gstats import ascents, check_permutation, major_index, rank_of_permutation
from .qpoly import QPoly, ZNumerator

LabelingScheme = Callable[[Graph, Orientation], VertexMap]


def rank_scheme(G: Graph, rho: Orientation) -> VertexMap:
    return rank_labeling(induced_poset(G, rho))


class RandomScheme:
    """A natural labeling per orientation, drawn as a random linear extension.

    The draw is seeded from ``(seed, rho)`` so each orientation always gets the
    same labeling.
    """

    def __init__(self, seed: int):
        self.seed = seed

    def __call__(self, G: Graph, rho: Orientation) -> VertexMap:
        P = induced_poset(G, rho)
        rng = random.Random(f"{self.seed}:{sorted(rho)}")
        remaining = set(P.elements)
        omega = [0] * P.d
        for label in range(1, P.d + 1):
            free = sorted(v for v in remaining if not (P.below(v) & remaining))
            v = rng.choice(free)
            omega[v - 1] = label
            remaining.discard(v)
        return VertexMap(omega)

    def __repr__(self) -> str:
        return f"RandomScheme({self.seed})"


class PrimedScheme:
    """``omega'_rho = s o omega_{reverse(rho)}`` with ``s(i) = d + 1 - i``."""

    def __init__(self, base: LabelingScheme):
        self.base = base

    def __call__(self, G: Graph, rho: Orientation) -> VertexMap:
        omega = self.base(G, reverse_orientation(rho))
        return VertexMap(G.d + 1 - x for x in omega)


def scheme_from_name(name: str) -> LabelingScheme:
    if name == "rank":
        return rank_scheme
    if name.startswith("random:"):
        try:
            return RandomScheme(int(name.split(":", 1)[1]))
        except ValueError:
            pass
    raise ValueError(f"unknown labeling scheme {name!r}; use 'rank' or 'random:SEED'")


@dataclass(frozen=True)
class OrientationPair:
    rho: Orientation
    sigma: tuple[int, ...]


def pi_rank_orientation(G: Graph, pi: Sequence[int]) -> Orientation:
    rk = rank_of_permutation(G, pi)
    return frozenset((u, v) if rk(u) < rk(v) else (v, u) for u, v in G.edges)


def phi(G: Graph, pi: Sequence[int], scheme: LabelingScheme = rank_scheme) -> OrientationPair:
    pi = check_permutation(pi, G.d)
    rho = pi_rank_orientation(G, pi)
    omega = scheme(G, rho)
    return OrientationPair(rho, tuple(omega(v) for v in pi))


def _inverse_labeling(omega: Sequence[int]) -> list[int]:
    inv = [0] * (len(omega) + 1)
    for v, label in enumerate(omega, start=1):
        inv[label] = v
    return inv


def _extension_order(P: Poset, omega: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """Recover ``tau^{-1}`` from a word, checking it is a Jordan-Hoelder word."""
    if sorted(sigma) != list(P.elements):
        raise GraphError(f"{list(sigma)} is not a word on 1..{P.d}")
    inv = _inverse_labeling(omega)
    order = tuple(inv[s] for s in sigma)
    pos = {v: i for i, v in enumerate(order)}
    for a in P.elements:
        for b in P.above[a]:
            if pos[a] > pos[b]:
                raise GraphError(f"{list(sigma)} is not a linear extension word: {a} < {b} violated")
    return order


def phi_inverse(G: Graph, rho: Orientation, sigma: Sequence[int], scheme: LabelingScheme = rank_scheme) -> tuple[int, ...]:
    P = induced_poset(G, rho)
    omega = scheme(G, rho)
    check_natural(P, omega)
    return _extension_order(P, omega, tuple(sigma))


def orientation_pairs(G: Graph, scheme: LabelingScheme = rank_scheme):
    """Every ``(rho, sigma)`` with ``sigma`` a Jordan-Hoelder word of ``(G_rho, omega_rho)``."""
    for rho in acyclic_orientations(G):
        omega = scheme(G, rho)
        for sigma in linear_extensions(induced_poset(G, rho), omega):
            yield OrientationPair(rho, sigma)


def numerator_double_sum(G: Graph, scheme: LabelingScheme = rank_scheme) -> ZNumerator:
    d = G.d
    acc: dict[int, Counter] = {}
    for pair in orientation_pairs(G, scheme):
        asc = ascents(pair.sigma)
        acc.setdefault(len(asc) + 1, Counter())[d + sum(d - j for j in asc)] += 1
    return ZNumerator(d, {i: QPoly(c) for i, c in acc.items()})


def reverse_pair(G: Graph, rho: Orientation, sigma: Sequence[int], scheme: LabelingScheme = rank_scheme) -> OrientationPair:
    """``(rho, sigma) -> (reverse(rho), op(sigma))`` with ``op(sigma) = omega'_{rev rho} o tau^{-1} o s``.

    The image is a word of ``G_{rev rho}`` under ``PrimedScheme(scheme)``;
    applying this with the primed scheme undoes it.
    """
    d = G.d
    P = induced_poset(G, rho)
    omega = scheme(G, rho)
    check_natural(P, omega)
    order = _extension_order(P, omega, tuple(sigma))
    rev = reverse_orientation(rho)
    # omega'_{rev rho} = s o omega_rho
    op = tuple(d + 1 - omega[order[d - i] - 1] for i in range(1, d + 1))
    return OrientationPair(rev, op)


# -- order polytopes ---------------------------------------------------------------


def _chain_heights(P: Poset) -> dict[int, int]:
    """Number of elements on a longest chain strictly above each element."""
    heights: dict[int, int] = {}
    for v in reversed(next(linear_extension_orders(P))):
        heights[v] = max((1 + heights[u] for u in P.above[v]), default=0)
    return heights


def order_polytope_ehr_open(P: Poset, lam: Sequence[int], n: int) -> QPoly:
    """``sum q^(lam . m)`` over integers ``0 < m_i < n`` with ``m_i < m_j`` whenever ``i < j`` in ``P``."""
    if n < 1:
        raise ValueError("dilation factor must be at least 1")
    lam = check_linear_form(lam, P.d)
    order = next(linear_extension_orders(P))
    below = {v: tuple(P.below(v)) for v in P.elements}
    # leave room for the longest chain still to be placed above v
    ceiling = {v: n - 1 - h for v, h in _chain_heights(P).items()}
    m: dict[int, int] = {}
    acc: Counter[int] = Counter()

    def place(k: int, weight: int):
        if k == len(order):
            acc[weight] += 1
            return
        v = order[k]
        lo = 1 + max((m[u] for u in below[v]), default=0)
        for x in range(lo, ceiling[v] + 1):
            m[v] = x
            place(k + 1, weight + lam[v - 1] * x)

    place(0, 0)
    return QPoly(acc)


def verify_qehrhart_lemma(G: Graph, lam: Sequence[int], n: int) -> bool:
    lhs = brute_chi(G, lam, n)
    rhs = QPoly()
    for rho in acyclic_orientations(G):
        rhs = rhs + order_polytope_ehr_open(induced_poset(G, rho), lam, n + 1)
    return lhs == rhs


def w_poly(P: Poset, omega: Sequence[int]) -> QPoly:
    """Major-index generating polynomial of the Jordan-Hoelder words of ``(P, omega)``."""
    return QPoly(Counter(major_index(w) for w in linear_extensions(P, omega)))

"""Identity checks run by ``qchromatic verify`` on a single graph.

Each check returns a :class:`CheckResult`; a failing one carries a
counterexample description.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Sequence

from .apps import g_major_polynomial, min_ascent_weight, min_sum_coloring
from .genfunc import (
    brute_chi,
    numerator_ones,
    palindromicity_check,
    series_chi,
    symmetry_check,
    weighted_exponent_check,
)
from .graph import DEFAULT_MAX_D, Graph, acyclic_orientations, delta_stat, induced_poset
from .gstats import ascents, cone_contains, descents, g_statistics, in_homogenized_region, iter_ascent_sets, locate_point
from .orient import (
    LabelingScheme,
    PrimedScheme,
    numerator_double_sum,
    orientation_pairs,
    phi,
    phi_inverse,
    rank_scheme,
    reverse_pair,
    verify_qehrhart_lemma,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


@dataclass
class Context:
    G: Graph
    lam: tuple[int, ...]
    scheme: LabelingScheme = rank_scheme
    trunc: int = 4
    max_d: int | None = DEFAULT_MAX_D
    max_points: int = 2000


def _lattice_points(G: Graph, max_points: int, seed: int = 0):
    """Points of the proper-coloring region at the largest height ``<= 6`` that keeps the box small."""
    d = G.d
    height = 6
    while height > 2 and (height - 1) ** d > 50 * max_points:
        height -= 1
    box = itertools.product(range(1, height), repeat=d)
    points = [p + (height,) for p in box if in_homogenized_region(G, p + (height,))]
    if len(points) > max_points:
        points = random.Random(seed).sample(points, max_points)
    return height, points


def check_decomposition(ctx: Context) -> CheckResult:
    G = ctx.G
    height, points = _lattice_points(G, ctx.max_points)
    for a in points:
        # a cone can only contain a if its permutation sorts the coordinates weakly
        values = sorted(set(a[:-1]))
        blocks = [[v for v in G.vertices if a[v - 1] == b] for b in values]
        hits = []
        for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
            pi = tuple(itertools.chain.from_iterable(parts))
            if cone_contains(G, pi, a):
                hits.append(pi)
        found = locate_point(G, a)
        if len(hits) != 1 or hits[0] != found:
            return CheckResult("decomposition", False, f"point {a}: cones {hits}, locate_point gave {found}")
    return CheckResult("decomposition", True, f"{len(points)} lattice points at height {height}, each in exactly one cone")


def check_oracle(ctx: Context) -> CheckResult:
    series = series_chi(ctx.G, ctx.lam, ctx.trunc, ctx.max_d)
    for n, s in enumerate(series):
        b = brute_chi(ctx.G, ctx.lam, n)
        if s != b:
            return CheckResult("oracle", False, f"n={n}: generating function {s} vs enumeration {b}")
    return CheckResult("oracle", True, f"series matches brute force for n=0..{ctx.trunc}, lambda={list(ctx.lam)}")


def check_weighted_exponent(ctx: Context) -> CheckResult:
    for pi, _ in iter_ascent_sets(ctx.G, ctx.max_d):
        if not weighted_exponent_check(ctx.G, pi, ctx.lam):
            return CheckResult("weighted-exponent", False, f"pi={list(pi)}")
    return CheckResult("weighted-exponent", True, f"all {factorial(ctx.G.d)} permutations")


def check_bijection(ctx: Context) -> CheckResult:
    G, scheme = ctx.G, ctx.scheme
    images = {}
    for pi, _ in iter_ascent_sets(G, ctx.max_d):
        pair = phi(G, pi, scheme)
        if pair in images:
            return CheckResult("bijection", False, f"pi={list(pi)} and {list(images[pair])} share an image")
        images[pair] = pi
        if phi_inverse(G, pair.rho, pair.sigma, scheme) != pi:
            return CheckResult("bijection", False, f"phi_inverse(phi({list(pi)})) != pi")
        if scheme is rank_scheme and descents(pair.sigma) != g_statistics(G, pi).des:
            return CheckResult("bijection", False, f"pi={list(pi)}: des(sigma)={sorted(descents(pair.sigma))}")
    pairs = list(orientation_pairs(G, scheme))
    if len(pairs) != factorial(G.d) or set(pairs) != set(images):
        return CheckResult("bijection", False, f"{len(pairs)} orientation/extension pairs, expected {factorial(G.d)}")
    return CheckResult("bijection", True, f"{len(pairs)} pairs, round trip and descent sets agree")


def check_reversal(ctx: Context) -> CheckResult:
    G, d = ctx.G, ctx.G.d
    primed = PrimedScheme(ctx.scheme)
    for pair in orientation_pairs(G, ctx.scheme):
        image = reverse_pair(G, pair.rho, pair.sigma, ctx.scheme)
        back = reverse_pair(G, image.rho, image.sigma, primed)
        if back != pair:
            return CheckResult("reversal", False, f"not an involution at sigma={list(pair.sigma)}")
        if ascents(pair.sigma) != {d - i for i in ascents(image.sigma)}:
            return CheckResult("reversal", False, f"ascent sets not reflected at sigma={list(pair.sigma)}")
    return CheckResult("reversal", True, "involution with reflected ascent sets")


def check_double_sum(ctx: Context) -> CheckResult:
    a = numerator_double_sum(ctx.G, ctx.scheme)
    b = numerator_ones(ctx.G, ctx.max_d)
    if a != b:
        return CheckResult("double-sum", False, f"orientation sum {a.coeffs} vs permutation sum {b.coeffs}")
    return CheckResult("double-sum", True, "orientation/extension numerator equals the permutation numerator")


def check_qehrhart(ctx: Context) -> CheckResult:
    top = min(ctx.trunc, 3)
    for n in range(top + 1):
        if not verify_qehrhart_lemma(ctx.G, ctx.lam, n):
            return CheckResult("qehrhart", False, f"n={n}")
    return CheckResult("qehrhart", True, f"order-polytope sum equals chi for n=0..{top}")


def check_symmetry(ctx: Context) -> CheckResult:
    ok = symmetry_check(ctx.G, ctx.max_d)
    return CheckResult("symmetry", ok, "the three numerator forms coincide" if ok else "numerator forms differ")


def check_palindromicity(ctx: Context) -> CheckResult:
    ok = palindromicity_check(ctx.G, ctx.max_d)
    return CheckResult("palindromicity", ok, "a_i and chi(q,n), n<=d+2, are shifted palindromic" if ok else "a shifted palindrome fails")


def check_degree_law(ctx: Context) -> CheckResult:
    G = ctx.G
    res = min_sum_coloring(G)
    poly = g_major_polynomial(G, ctx.max_d)
    low, attained = min_ascent_weight(G, ctx.max_d)
    expected = comb(G.d + 1, 2) - res.sigma
    if poly.degree != expected or poly.leading_coefficient != res.count or (low, attained) != (res.sigma, res.count):
        return CheckResult(
            "degree-law",
            False,
            f"degree {poly.degree} (expected {expected}), leading {poly.leading_coefficient}, "
            f"min sum {res.sigma} x{res.count}, min ascent weight {low} x{attained}",
        )
    deltas = [delta_stat(induced_poset(G, rho)) for rho in acyclic_orientations(G)]
    if min(deltas) != res.sigma:
        return CheckResult("degree-law", False, f"min delta over orientations {min(deltas)} != {res.sigma}")
    return CheckResult("degree-law", True, f"degree {poly.degree} = C({G.d + 1},2) - {res.sigma}, leading {res.count}")


SUITES: dict[str, Callable[[Context], CheckResult]] = {
    "decomposition": check_decomposition,
    "oracle": check_oracle,
    "weighted-exponent": check_weighted_exponent,
    "bijection": check_bijection,
    "reversal": check_reversal,
    "double-sum": check_double_sum,
    "qehrhart": check_qehrhart,
    "symmetry": check_symmetry,
    "palindromicity": check_palindromicity,
    "degree-law": check_degree_law,
}


def run_suites(ctx: Context, names: Sequence[str] | None = None) -> list[CheckResult]:
    names = list(SUITES) if not names else list(names)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)}")
    return [SUITES[n](ctx) for n in names]

"""The twelve acceptance criteria, each at its stated tolerance and time budget.

Every test records a PASS/FAIL line that shows up in the pytest terminal
summary.  Running this file directly prints the same lines.
"""

import itertools
import random
import time
from math import comb, factorial

import networkx as nx

from qchromatic.apps import fingerprint, g_major_polynomial, min_sum_coloring, tree_degree_bounds
from qchromatic.genfunc import (
    brute_chi,
    chi_tilde,
    chung_graham,
    chung_graham_eval,
    leading_coeff_formula,
    numerator_ones,
    palindromicity_check,
    series_chi,
    symmetry_check,
)
from qchromatic.graph import (
    Graph,
    acyclic_orientations,
    all_graphs,
    broom_graph,
    chromatic_polynomial_dc,
    complete_graph,
    delta_stat,
    empty_graph,
    eval_int_poly,
    induced_poset,
    path_graph,
    random_graph,
    rank_labeling,
    star_graph,
)
from qchromatic.gstats import all_permutations, cone_contains, descents, g_statistics, in_homogenized_region, locate_point
from qchromatic.orient import (
    RandomScheme,
    numerator_double_sum,
    orientation_pairs,
    phi,
    phi_inverse,
    verify_qehrhart_lemma,
    w_poly,
)
from qchromatic.qpoly import ONE, ZERO, q, qrat_reduce

from .acceptance_report import criterion

SEED = 20240601


def graphs_upto(d):
    for k in range(1, d + 1):
        yield from all_graphs(k)


def sampled_graphs(count, d_max, seed, d_min=1):
    rng = random.Random(seed)
    return [random_graph(rng.randint(d_min, d_max), rng.choice((0.25, 0.5, 0.75)), rng) for _ in range(count)]


def all_trees(d):
    for T in nx.nonisomorphic_trees(d):
        yield Graph.from_edges(d, [(u + 1, v + 1) for u, v in T.edges])


def test_criterion_01_numerator_reproduction():
    with criterion(1) as v:
        start = time.perf_counter()
        expected_numerators = {
            "edgeless": (empty_graph(4), {1: q**4, 2: 3 * q**7 + 5 * q**6 + 3 * q**5, 3: 3 * q**9 + 5 * q**8 + 3 * q**7, 4: q**10}),
            # the star claim is taken verbatim from the criterion
            "star": (star_graph(4), {2: 2 * q**6, 3: 4 * q**9 + 6 * q**8 + 4 * q**7, 4: 8 * q**10}),
            "K4": (complete_graph(4), {4: 24 * q**10}),
        }
        for name, (G, expected) in expected_numerators.items():
            got = numerator_ones(G).coeffs
            v.check(got == expected, f"{name}: got {{{', '.join(f'{i}: {p}' for i, p in got.items())}}}")
        v.check(time.perf_counter() - start < 1.0, "numerators took over 1s")
        if numerator_ones(path_graph(4)).coeffs == expected_numerators["star"][1]:
            v.note("the stated star numerator is the numerator of the path 1-2-3-4")

        start = time.perf_counter()
        target = {2: q**7 + q**5, 3: 5 * q**9 + 4 * q**8 + 5 * q**7, 4: 8 * q**10}
        pairs = list(itertools.combinations(range(1, 5), 2))
        trees = [Graph.from_edges(4, es) for es in itertools.combinations(pairs, 3)]
        trees = [T for T in trees if T.is_tree()]
        matches = [T for T in trees if numerator_ones(T).coeffs == target]
        v.check(bool(matches), "no 4-vertex tree matches the target numerator")
        v.check(time.perf_counter() - start < 5.0, "tree search took over 5s")
        kinds = {"star" if max(len(T.neighbors(x)) for x in T.vertices) == 3 else "path" for T in matches}
        v.note(f"target numerator matched by {len(matches)} of {len(trees)} labeled trees, all {'/'.join(sorted(kinds))}")


def test_criterion_02_chi_tilde_two_path():
    with criterion(2, budget=1.0) as v:
        G = path_graph(2)
        lead = qrat_reduce(2 * q**2, ONE + q)
        ct = chi_tilde(G)
        v.check(ct.coefficients == (qrat_reduce(ZERO, ONE), -lead, lead), f"coefficients {[str(c) for c in ct.coefficients]}")
        v.check(leading_coeff_formula(G) == lead, f"leading formula {leading_coeff_formula(G)}")
        v.note("c = (0, -2q^2/(1+q), 2q^2/(1+q))")


def test_criterion_03_chung_graham():
    with criterion(3, budget=60.0) as v:
        count = 0
        for G in graphs_upto(5):
            counts = chung_graham(G)
            P = chromatic_polynomial_dc(G)
            for n in range(7):
                if not v.check(chung_graham_eval(counts, G.d, n) == eval_int_poly(P, n), f"{G!r} n={n}"):
                    return
            count += 1
        v.note(f"{count} graphs, n=0..6")


def test_criterion_04_cone_decomposition():
    with criterion(4, budget=60.0) as v:
        points = 0
        for G in graphs_upto(4):
            perms = list(all_permutations(G.d))
            for a in itertools.product(range(1, 6), repeat=G.d):
                p = a + (6,)
                if not in_homogenized_region(G, p):
                    continue
                hits = [pi for pi in perms if cone_contains(G, pi, p)]
                if not v.check(len(hits) == 1 and hits[0] == locate_point(G, p), f"{G!r} point {p}: {hits}"):
                    return
                points += 1
        v.note(f"{points} lattice points over all graphs with d<=4")


def test_criterion_05_weighted_oracle():
    with criterion(5, budget=60.0) as v:
        rng = random.Random(SEED + 5)
        for G in sampled_graphs(50, 5, SEED + 5):
            lam = tuple(rng.randint(1, 5) for _ in range(G.d))
            series = series_chi(G, lam, 4)
            for n in range(5):
                if not v.check(series[n] == brute_chi(G, lam, n), f"{G!r} lam={lam} n={n}"):
                    return
        v.note("50 random (G, lambda), n<=4")


def test_criterion_06_bijection():
    with criterion(6, budget=120.0) as v:
        for G in sampled_graphs(20, 6, SEED + 6, d_min=2):
            images = {}
            for pi in all_permutations(G.d):
                pair = phi(G, pi)
                images[pair] = pi
                v.check(phi_inverse(G, pair.rho, pair.sigma) == pi, f"{G!r}: round trip fails at {pi}")
                v.check(descents(pair.sigma) == g_statistics(G, pi).des, f"{G!r}: descents differ at {pi}")
            pairs = set(orientation_pairs(G))
            v.check(len(images) == factorial(G.d) and pairs == set(images), f"{G!r}: {len(pairs)} pairs vs {factorial(G.d)}")
            if v.failures:
                return
        v.note("20 random graphs, d<=6")


def test_criterion_07_double_sum():
    with criterion(7) as v:
        graphs = sampled_graphs(40, 5, SEED + 7)
        for i, G in enumerate(graphs):
            N = numerator_ones(G)
            v.check(numerator_double_sum(G) == N, f"{G!r}: rank scheme")
            v.check(numerator_double_sum(G, RandomScheme(SEED + i)) == N, f"{G!r}: random scheme")
        v.note(f"{len(graphs)} graphs, rank and seeded random labelings")


def test_criterion_08_qehrhart():
    with criterion(8) as v:
        rng = random.Random(SEED + 8)
        graphs = sampled_graphs(35, 5, SEED + 8)
        for G in graphs:
            lam = tuple(rng.randint(1, 3) for _ in range(G.d))
            for n in range(4):
                v.check(verify_qehrhart_lemma(G, lam, n), f"{G!r} lam={lam} n={n}")
        v.note(f"{len(graphs)} graphs, lambda<=3, n<=3")


def test_criterion_09_symmetry_palindromicity():
    with criterion(9) as v:
        graphs = sampled_graphs(60, 6, SEED + 9)
        for G in graphs:
            v.check(symmetry_check(G), f"{G!r}: symmetry")
            v.check(palindromicity_check(G), f"{G!r}: palindromicity")
        v.note(f"{len(graphs)} graphs, d<=6, chi(q,n) for n<=d+2 included")


def test_criterion_10_min_sum_laws():
    with criterion(10) as v:
        for G in sampled_graphs(60, 6, SEED + 10):
            res = min_sum_coloring(G)
            poly = g_major_polynomial(G)
            v.check(poly.degree == comb(G.d + 1, 2) - res.sigma, f"{G!r}: degree")
            v.check(poly.leading_coefficient == res.count, f"{G!r}: leading coefficient")
        trees = 0
        for d in range(2, 9):
            degrees = {}
            for T in all_trees(d):
                b = tree_degree_bounds(T)
                v.check(b.lower <= b.actual <= b.upper, f"{T!r}: degree {b.actual} outside [{b.lower},{b.upper}]")
                degrees[T.edges] = b.actual
                trees += 1
            top = comb(d + 1, 2)
            star, path = star_graph(d), path_graph(d)
            v.check(min_sum_coloring(star).sigma == d + 1, f"star d={d}: sigma")
            v.check(min_sum_coloring(path).sigma == (3 * d) // 2, f"path d={d}: sigma")
            v.check(g_major_polynomial(star).degree == top - d - 1 == max(degrees.values()), f"star d={d}: not the max degree")
            v.check(g_major_polynomial(path).degree == top - (3 * d) // 2 == min(degrees.values()), f"path d={d}: not the min degree")
            for b in range(d // 2):
                B = broom_graph(d - 2 * b - 1, 2 * b + 1)
                v.check(min_sum_coloring(B).sigma == d + 1 + b, f"broom d={d} b={b}")
        v.note(f"60 sampled graphs; {trees} trees d<=8; brooms d<=8")


def test_criterion_11_fingerprints():
    with criterion(11, budget=10.0) as v:
        for d, k in ((3, 3), (4, 4)):
            prints = [fingerprint(G, k).poly for G in all_graphs(d)]
            v.check(len(prints) == 2 ** comb(d, 2) and len(set(prints)) == len(prints), f"d={d}: collisions")
        v.note("8 graphs on [3] and 64 on [4] pairwise distinct")


def test_criterion_12_stanley_delta():
    with criterion(12) as v:
        posets = 0
        for G in graphs_upto(5):
            top = comb(G.d + 1, 2)
            deltas = []
            for rho in acyclic_orientations(G):
                P = induced_poset(G, rho)
                W = w_poly(P, rank_labeling(P))
                delta = delta_stat(P)
                deltas.append(delta)
                v.check(W.degree == top - delta and W.leading_coefficient == 1, f"{G!r} {sorted(rho)}")
                posets += 1
            v.check(min(deltas) == min_sum_coloring(G).sigma, f"{G!r}: min delta {min(deltas)}")
            if v.failures:
                return
        v.note(f"{posets} induced posets over all graphs with d<=5")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

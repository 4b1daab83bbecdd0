import itertools
import random
from collections import Counter
from math import comb, factorial

import pytest

from qchromatic.genfunc import brute_chi, numerator_ones, ones
from qchromatic.graph import (
    GraphError,
    Poset,
    acyclic_orientations,
    all_graphs,
    complete_graph,
    delta_stat,
    empty_graph,
    generate,
    induced_poset,
    path_graph,
    rank_labeling,
    star_graph,
)
from qchromatic.gstats import all_permutations, ascents, descents, g_statistics, major_index
from qchromatic.orient import (
    OrientationPair,
    PrimedScheme,
    RandomScheme,
    numerator_double_sum,
    order_polytope_ehr_open,
    orientation_pairs,
    phi,
    phi_inverse,
    pi_rank_orientation,
    rank_scheme,
    reverse_pair,
    scheme_from_name,
    verify_qehrhart_lemma,
    w_poly,
)
from qchromatic.qpoly import ZERO, QPoly, q

from .helpers import small_graphs

EDGE = path_graph(2)
BOWTIE = generate("bowtie")


def brute_open_ehr(P, lam, n):
    acc = Counter()
    for m in itertools.product(range(1, n), repeat=P.d):
        if all(m[a - 1] < m[b - 1] for a in P.elements for b in P.above[a]):
            acc[sum(w * x for w, x in zip(lam, m))] += 1
    return QPoly(acc)


def test_rank_orientation_examples():
    rho = pi_rank_orientation(BOWTIE, (3, 1, 2, 5, 4))
    assert rho == {(1, 4), (1, 5), (5, 4), (3, 2), (2, 5), (3, 5)}
    assert pi_rank_orientation(EDGE, (1, 2)) == {(1, 2)}
    assert pi_rank_orientation(empty_graph(3), (2, 3, 1)) == frozenset()


def test_phi_examples():
    pi = (3, 1, 2, 5, 4)
    pair = phi(BOWTIE, pi)
    eta = rank_labeling(induced_poset(BOWTIE, pair.rho))
    assert (eta(1), eta(3), eta(2), eta(5), eta(4)) == (1, 2, 3, 4, 5)
    assert pair.sigma == (2, 1, 3, 4, 5)
    assert descents(pair.sigma) == g_statistics(BOWTIE, pi).des == {1}
    pair = phi(EDGE, (2, 1))
    assert pair.rho == {(2, 1)} and pair.sigma == (1, 2)
    pair = phi(empty_graph(2), (2, 1))
    assert pair.sigma == (2, 1) and descents(pair.sigma) == {1}


def test_phi_inverse_examples():
    G = star_graph(4)
    assert all(phi_inverse(G, *_as_args(phi(G, pi))) == pi for pi in all_permutations(4))
    assert phi_inverse(EDGE, frozenset({(2, 1)}), (1, 2)) == (2, 1)
    assert phi_inverse(empty_graph(2), frozenset(), (1, 2)) == (1, 2)


def _as_args(pair: OrientationPair):
    return pair.rho, pair.sigma


def test_phi_inverse_rejects_non_extension():
    with pytest.raises(GraphError):
        phi_inverse(EDGE, frozenset({(2, 1)}), (2, 1))
    with pytest.raises(GraphError):
        phi_inverse(EDGE, frozenset({(2, 1)}), (1, 1))


def test_bijection_and_descents():
    for G in small_graphs(5, sample=10):
        images = [phi(G, pi) for pi in all_permutations(G.d)]
        assert len(set(images)) == factorial(G.d)
        assert set(images) == set(orientation_pairs(G))
        for pi, pair in zip(all_permutations(G.d), images):
            assert descents(pair.sigma) == g_statistics(G, pi).des


def test_bijection_under_random_scheme():
    scheme = RandomScheme(17)
    for G in small_graphs(5, sample=5):
        images = {phi(G, pi, scheme): pi for pi in all_permutations(G.d)}
        assert len(images) == factorial(G.d)
        assert all(phi_inverse(G, p.rho, p.sigma, scheme) == pi for p, pi in images.items())


def test_schemes_are_natural_and_stable():
    G = BOWTIE
    for scheme in (rank_scheme, RandomScheme(1), RandomScheme(2), PrimedScheme(rank_scheme)):
        for rho in acyclic_orientations(G):
            omega = scheme(G, rho)
            assert induced_poset(G, rho).is_natural(omega)
            assert scheme(G, rho) == omega


def test_scheme_names():
    assert scheme_from_name("rank") is rank_scheme
    assert scheme_from_name("random:5").seed == 5
    for bad in ("random:x", "primed", ""):
        with pytest.raises(ValueError):
            scheme_from_name(bad)


def test_double_sum_examples():
    assert numerator_double_sum(complete_graph(4)).coeffs == {4: 24 * q**10}
    assert numerator_double_sum(star_graph(4)) == numerator_ones(star_graph(4))
    assert numerator_double_sum(EDGE).coeffs == {2: 2 * q**3}


def test_double_sum_scheme_independence():
    for G in small_graphs(5, sample=8):
        N = numerator_ones(G)
        assert numerator_double_sum(G) == N
        assert numerator_double_sum(G, RandomScheme(G.d * 31 + len(G.edges))) == N


def test_reversal_involution_all_small():
    for d in range(1, 5):
        for G in all_graphs(d):
            primed = PrimedScheme(rank_scheme)
            for pair in orientation_pairs(G):
                image = reverse_pair(G, pair.rho, pair.sigma)
                assert image.sigma in set(
                    p.sigma for p in orientation_pairs(G, primed) if p.rho == image.rho
                )
                assert reverse_pair(G, image.rho, image.sigma, primed) == pair
                assert ascents(pair.sigma) == {d - i for i in ascents(image.sigma)}


def test_reversal_edge():
    pair = reverse_pair(EDGE, frozenset({(1, 2)}), (1, 2))
    assert pair.rho == {(2, 1)} and ascents(pair.sigma) == {1}


def test_reversal_bowtie_ascents():
    for pair in orientation_pairs(BOWTIE):
        image = reverse_pair(BOWTIE, pair.rho, pair.sigma)
        assert ascents(pair.sigma) == {5 - i for i in ascents(image.sigma)}


def test_reversal_gives_major_index_form():
    # reflected ascents turn sum(d - j) into sum(j)
    for G in small_graphs(5, sample=4):
        d = G.d
        lhs = Counter(d + sum(d - j for j in ascents(p.sigma)) for p in orientation_pairs(G))
        rhs = Counter(d + sum(ascents(reverse_pair(G, p.rho, p.sigma).sigma)) for p in orientation_pairs(G))
        assert lhs == rhs


def test_open_ehrhart_examples():
    assert order_polytope_ehr_open(Poset.antichain(1), (1,), 3) == q + q**2
    assert order_polytope_ehr_open(Poset.chain([1, 2]), (1, 1), 3) == q**3
    assert order_polytope_ehr_open(Poset.chain([1, 2]), (1, 1), 2) == ZERO


def test_open_ehrhart_against_box():
    rng = random.Random(9)
    for G in small_graphs(4):
        for rho in acyclic_orientations(G)[:3]:
            P = induced_poset(G, rho)
            lam = tuple(rng.randint(1, 3) for _ in range(P.d))
            for n in range(1, 5):
                assert order_polytope_ehr_open(P, lam, n) == brute_open_ehr(P, lam, n)


def test_qehrhart_edge():
    parts = [order_polytope_ehr_open(induced_poset(EDGE, rho), (1, 1), 3) for rho in acyclic_orientations(EDGE)]
    assert parts == [q**3, q**3]
    assert verify_qehrhart_lemma(EDGE, (1, 1), 2)
    assert brute_chi(EDGE, (1, 1), 2) == sum(parts, ZERO)


def test_qehrhart_sampled():
    rng = random.Random(4)
    for G in small_graphs(5, sample=6, exhaustive_upto=3):
        lam = tuple(rng.randint(1, 3) for _ in range(G.d))
        assert all(verify_qehrhart_lemma(G, lam, n) for n in range(4))


def test_w_poly_examples():
    assert w_poly(Poset.antichain(2), (1, 2)) == 1 + q
    assert w_poly(Poset.chain([1, 2, 3]), (1, 2, 3)) == QPoly.constant(1)


def test_w_poly_degree_law():
    for G in small_graphs(5, sample=6):
        top = comb(G.d + 1, 2)
        for rho in acyclic_orientations(G):
            P = induced_poset(G, rho)
            W = w_poly(P, rank_labeling(P))
            assert W.degree == top - delta_stat(P)
            assert W.leading_coefficient == 1


def test_w_poly_matches_brute_major_index():
    P = Poset(4, [(1, 2), (1, 3), (4, 3)])
    omega = (1, 3, 4, 2)
    words = {
        tuple(omega[v - 1] for v in order)
        for order in itertools.permutations(P.elements)
        if all(order.index(a) < order.index(b) for a in P.elements for b in P.above[a])
    }
    assert w_poly(P, omega) == QPoly(Counter(major_index(w) for w in words))

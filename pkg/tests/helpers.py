"""Shared graph samples for the test-suite."""

import random

from qchromatic.graph import all_graphs, random_graph


def small_graphs(max_d, sample=40, seed=2024, exhaustive_upto=4):
    """Every graph on up to ``exhaustive_upto`` vertices, then ``sample`` random ones per larger d."""
    out = []
    rng = random.Random(seed)
    for d in range(1, max_d + 1):
        if d <= exhaustive_upto:
            out.extend(all_graphs(d))
        else:
            out.extend(random_graph(d, rng.choice((0.3, 0.5, 0.7)), rng) for _ in range(sample))
    return out

"""Exact q-chromatic polynomials, their generating functions, and G-statistics."""

from .graph import (
    DEFAULT_MAX_D,
    EnumerationCapError,
    Graph,
    GraphError,
    Poset,
    VertexMap,
    acyclic_orientations,
    chromatic_number,
    chromatic_polynomial_dc,
    delta_stat,
    generate,
    induced_poset,
    linear_extensions,
    parse_graph,
    proper_colorings,
    rank_labeling,
)
from .qpoly import QPoly, QRat, ZNumerator, qbinomial, qfactorial, qint, qrat_reduce, series_coeffs

__version__ = "0.1.0"

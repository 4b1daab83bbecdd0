"""q-chromatic polynomials and their generating functions.

``chi(G, lam, n)`` sums ``q^(lam . c)`` over proper colorings ``c: [d] -> [n]``.
Its generating function in ``z`` is a sum over S_d of rational terms, one
per permutation, built from the G-ascents of that permutation.  For the
all-ones form every term shares the denominator ``prod_{i=0}^{d}(1 - q^i z)``
and the numerator's z-coefficients are the polynomials ``a_i(q)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .graph import DEFAULT_MAX_D, Graph, GraphError, chromatic_number, proper_colorings
from .gstats import check_permutation, g_ascents, g_sequence_coloring, iter_ascent_sets
from .qpoly import (
    ONE,
    ZERO,
    QPoly,
    QRat,
    ZNumerator,
    is_shifted_palindromic,
    qbinomial,
    qfactorial,
    qint,
    qrat_reduce,
    series_coeffs,
)

LinearForm = tuple  # of positive ints, lam[v - 1] is the weight of v


def check_linear_form(lam: Sequence[int], d: int) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) != d:
        raise GraphError(f"linear form needs {d} entries, got {len(lam)}")
    if any(x <= 0 for x in lam):
        raise GraphError("linear form entries must be positive")
    return lam


def ones(d: int) -> LinearForm:
    return (1,) * d


def powers(k: int, d: int) -> LinearForm:
    """``(k, k^2, ..., k^d)``."""
    return tuple(k**i for i in range(1, d + 1))


def brute_chi(G: Graph, lam: Sequence[int], n: int) -> QPoly:
    """Direct sum over the proper ``n``-colorings."""
    lam = check_linear_form(lam, G.d)
    acc: Counter[int] = Counter()
    for c in proper_colorings(G, n):
        acc[sum(w * x for w, x in zip(lam, c))] += 1
    return QPoly(acc)


@dataclass(frozen=True)
class PermTerm:
    """One permutation's summand ``q^alpha z^(ascnum+1) / prod_s (1 - q^s z)``."""

    perm: tuple[int, ...]
    alpha: int
    ascnum: int
    partial_sums: tuple[int, ...]


def _perm_term(pi, asc, lam) -> PermTerm:
    d = len(pi)
    # tail[j] = lam_pi(j+1) + ... + lam_pi(d)
    tail = [0] * (d + 1)
    for j in range(d - 1, -1, -1):
        tail[j] = tail[j + 1] + lam[pi[j] - 1]
    alpha = tail[0] + sum(tail[j] for j in asc)
    return PermTerm(pi, alpha, len(asc), tuple(tail[d - i] for i in range(d + 1)))


def perm_terms(G: Graph, lam: Sequence[int], max_d: int | None = DEFAULT_MAX_D) -> list[PermTerm]:
    lam = check_linear_form(lam, G.d)
    return [_perm_term(pi, asc, lam) for pi, asc in iter_ascent_sets(G, max_d)]


def _geometric_tail(partial_sums: Sequence[int], upto: int) -> list[QPoly]:
    """First ``upto + 1`` z-coefficients of ``1 / prod_s (1 - q^s z)``."""
    series = [ONE] + [ZERO] * upto
    for s in partial_sums:
        step = QPoly.monomial(s)
        for m in range(1, upto + 1):
            series[m] = series[m] + step * series[m - 1]
    return series


def series_chi(G: Graph, lam: Sequence[int], upto: int, max_d: int | None = DEFAULT_MAX_D) -> list[QPoly]:
    """``chi(G, lam, 0..upto)`` from the permutation-sum generating function."""
    if upto < 0:
        raise ValueError("upto must be non-negative")
    grouped = Counter((t.alpha, t.ascnum, t.partial_sums) for t in perm_terms(G, lam, max_d))
    out = [ZERO] * (upto + 1)
    for (alpha, ascnum, sums), mult in grouped.items():
        shift = ascnum + 1
        if shift > upto:
            continue
        tail = _geometric_tail(sums, upto - shift)
        head = QPoly.monomial(alpha, mult)
        for m, t in enumerate(tail):
            out[m + shift] = out[m + shift] + head * t
    return out


def weighted_exponent_check(G: Graph, pi: Sequence[int], lam: Sequence[int]) -> bool:
    """The summand exponent equals the ``lam``-weighted G-sequence coloring."""
    lam = check_linear_form(lam, G.d)
    pi = check_permutation(pi, G.d)
    term = _perm_term(pi, g_ascents(G, pi), lam)
    w = g_sequence_coloring(G, pi)
    return term.alpha == sum(lam[v - 1] * w(v) for v in G.vertices)


def _ones_exponent(d: int, asc) -> int:
    return d + sum(d - j for j in asc)


def numerator_ones(G: Graph, max_d: int | None = DEFAULT_MAX_D) -> ZNumerator:
    """``a_i(q) = sum of q^(d + sum_{j in asc}(d - j))`` over ``pi`` with ``ascnum + 1 = i``."""
    d = G.d
    acc: dict[int, Counter] = {}
    for _, asc in iter_ascent_sets(G, max_d):
        acc.setdefault(len(asc) + 1, Counter())[_ones_exponent(d, asc)] += 1
    return ZNumerator(d, {i: QPoly(c) for i, c in acc.items()})


def chi_ones_qbinom(G: Graph, n: int, numerator: ZNumerator | None = None) -> QPoly:
    """``sum_{j=0}^{d-xi} [n+j choose d]_q a_{d-j}(q)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    N = numerator or numerator_ones(G)
    d = G.d
    xi = chromatic_number(G)
    acc = ZERO
    for j in range(d - xi + 1):
        acc = acc + qbinomial(n + j, d) * N[d - j]
    return acc


def chung_graham(G: Graph, max_d: int | None = DEFAULT_MAX_D) -> dict[int, int]:
    """Number of permutations with each G-descent count."""
    counts: Counter[int] = Counter()
    for _, asc in iter_ascent_sets(G, max_d):
        counts[G.d - 1 - len(asc)] += 1
    return dict(sorted(counts.items()))


def chung_graham_eval(counts: dict[int, int], d: int, n: int) -> int:
    return sum(c * comb(n + j, d) for j, c in counts.items())


# -- the [n]_q-basis polynomial -------------------------------------------------


@dataclass(frozen=True)
class ChiTilde:
    """``chi(G, 1, n) = sum_k coefficients[k] * ([n]_q)^k``."""

    coefficients: tuple[QRat, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> QRat:
        return self.coefficients[-1]

    def evaluate(self, n: int) -> QRat:
        x = QRat.coerce(qint(n))
        acc = QRat.coerce(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def to_json(self) -> dict:
        return {"coefficients": [c.to_json() for c in self.coefficients]}


def _poly_mul_linear(p: list[QRat], root: QRat) -> list[QRat]:
    """``p(x) * (x - root)`` in coefficient form."""
    out = [QRat.coerce(0)] * (len(p) + 1)
    for k, c in enumerate(p):
        out[k + 1] = out[k + 1] + c
        out[k] = out[k] - c * root
    return out


def chi_tilde(G: Graph, max_d: int | None = DEFAULT_MAX_D) -> ChiTilde:
    """Interpolate ``chi(G, 1, n)`` at ``n = 0..d`` against ``x = [n]_q`` over Q(q).

    Newton divided differences on the nodes ``[0]_q, ..., [d]_q``; node
    differences ``[i]_q - [j]_q = q^j [i-j]_q`` never vanish.
    """
    d = G.d
    values = series_coeffs(numerator_ones(G, max_d), d)
    nodes = [QRat.coerce(qint(n)) for n in range(d + 1)]
    table = [QRat.coerce(v) for v in values]
    newton = [table[0]]
    for level in range(1, d + 1):
        table = [
            (table[i + 1] - table[i]) / (nodes[i + level] - nodes[i])
            for i in range(len(table) - 1)
        ]
        newton.append(table[0])
    coeffs = [newton[d]]
    for k in range(d - 1, -1, -1):
        coeffs = _poly_mul_linear(coeffs, nodes[k])
        coeffs[0] = coeffs[0] + newton[k]
    return ChiTilde(tuple(coeffs))


def leading_coeff_formula(G: Graph, max_d: int | None = DEFAULT_MAX_D) -> QRat:
    """``(sum_pi q^(d + maj_G(pi))) / [d]_q!``, reduced."""
    d = G.d
    total = d * (d - 1) // 2
    acc: Counter[int] = Counter()
    for _, asc in iter_ascent_sets(G, max_d):
        acc[d + total - sum(asc)] += 1
    return qrat_reduce(QPoly(acc), qfactorial(d))


# -- symmetry ------------------------------------------------------------------------


def numerator_variants(G: Graph, max_d: int | None = DEFAULT_MAX_D) -> tuple[ZNumerator, ZNumerator, ZNumerator]:
    """The numerator written with ``sum(d-j)``, with ``sum(j)``, and with ``C(d+1,2) - maj_G``."""
    d = G.d
    top = comb(d + 1, 2)
    half = comb(d, 2)
    forms: tuple[dict, dict, dict] = ({}, {}, {})
    for _, asc in iter_ascent_sets(G, max_d):
        i = len(asc) + 1
        maj = half - sum(asc)
        exps = (_ones_exponent(d, asc), d + sum(asc), top - maj)
        for form, e in zip(forms, exps):
            form.setdefault(i, Counter())[e] += 1
    return tuple(ZNumerator(d, {i: QPoly(c) for i, c in f.items()}) for f in forms)


def symmetry_check(G: Graph, max_d: int | None = DEFAULT_MAX_D) -> bool:
    a, b, c = numerator_variants(G, max_d)
    return a == b == c


def palindromicity_check(G: Graph, max_d: int | None = DEFAULT_MAX_D) -> bool:
    """Every ``a_i`` is palindromic about ``d(i+1)/2`` and every nonzero ``chi(G,1,n)``, ``n <= d+2``, about ``d(n+1)/2``."""
    d = G.d
    N = numerator_ones(G, max_d)
    if not all(is_shifted_palindromic(a, d * (i + 1)) for i, a in N.coeffs.items()):
        return False
    for n, chi in enumerate(series_coeffs(N, d + 2)):
        if chi and not is_shifted_palindromic(chi, d * (n + 1)):
            return False
    return True

"""Exact polynomials in ``q``, their fractions, and q-analogues of integers.

:class:`QPoly` is a sparse map from exponent to integer coefficient.  Both
are Python ints, so huge exponents (base-``k`` fingerprints) cost nothing
extra.  :class:`QRat` is an element of Q(q) kept in lowest terms with
primitive integer numerator and denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence


class QPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        acc: dict[int, int] = {}
        for e, c in items:
            e, c = int(e), int(c)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> QPoly:
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> QPoly:
        return cls({0: c})

    @classmethod
    def coerce(cls, x) -> QPoly:
        if isinstance(x, QPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        return NotImplemented

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """``(exponent, coefficient)`` pairs, ascending by exponent."""
        return tuple(self._terms.items())

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Highest exponent; ``-1`` for the zero polynomial."""
        return next(reversed(self._terms)) if self._terms else -1

    @property
    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no lowest term")
        return next(iter(self._terms))

    @property
    def leading_coefficient(self) -> int:
        return self._terms[self.degree] if self._terms else 0

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, c)
        return g

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = QPoly.coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return QPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = QPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = QPoly.coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self._terms.items()})
        other = QPoly.coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return QPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = QPoly.constant(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, e: int) -> QPoly:
        """Multiply by ``q**e``; ``e`` may be negative if every exponent stays >= 0."""
        if self._terms and self.low_degree + e < 0:
            raise ValueError(f"shift by {e} produces a negative exponent")
        return QPoly({x + e: c for x, c in self._terms.items()})

    def divmod(self, divisor: QPoly) -> tuple[QPoly, QPoly]:
        """Division with remainder; requires the divisor's leading coefficient to divide evenly."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self._terms)
        quo: dict[int, int] = {}
        dd, lc = divisor.degree, divisor.leading_coefficient
        while rem:
            top = max(rem)
            if top < dd:
                break
            c = rem[top]
            if c % lc:
                raise ValueError("division is not exact over the integers")
            f, s = c // lc, top - dd
            quo[s] = f
            for e, dc in divisor._terms.items():
                k = e + s
                v = rem.get(k, 0) - f * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return QPoly(quo), QPoly(rem)

    def exact_div(self, divisor: QPoly) -> QPoly:
        quo, rem = self.divmod(divisor)
        if rem:
            raise ValueError("polynomial division leaves a remainder")
        return quo

    def __call__(self, x):
        """Evaluate at an int or Fraction."""
        return sum((c * x**e for e, c in self._terms.items()), 0 * x)

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def reciprocal(self, total: int) -> QPoly:
        """``q**total * p(1/q)``."""
        return QPoly({total - e: c for e, c in self._terms.items()})

    # -- comparison and display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [[str(e), str(c)] for e, c in self._terms.items()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> QPoly:
        return cls((int(e), int(c)) for e, c in obj["terms"])


q = QPoly.monomial(1)
ZERO = QPoly()
ONE = QPoly.constant(1)


# -- q-analogues ---------------------------------------------------------------


def qint(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    if n < 0:
        raise ValueError("q-integer of a negative number")
    return QPoly({e: 1 for e in range(n)})


@lru_cache(maxsize=None)
def qfactorial(d: int) -> QPoly:
    if d < 0:
        raise ValueError("q-factorial of a negative number")
    return ONE if d == 0 else qfactorial(d - 1) * qint(d)


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> QPoly:
    """Gaussian binomial by exact division of q-factorials; zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    return qfactorial(n).exact_div(qfactorial(k) * qfactorial(n - k))


def is_shifted_palindromic(p: QPoly, total: int) -> bool:
    """True iff the coefficients of ``q^e`` and ``q^(total-e)`` always agree."""
    return all(total - e >= 0 and p.coefficient(total - e) == c for e, c in p.terms)


# -- dense Q[q] helpers for gcd -----------------------------------------------


def _dense(p: QPoly, offset: int) -> list[Fraction]:
    out = [Fraction(0)] * (p.degree - offset + 1)
    for e, c in p.terms:
        out[e - offset] = Fraction(c)
    return out


def _trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b):
        f = a[-1] / lb
        s = len(a) - len(b)
        for i, c in enumerate(b):
            a[s + i] -= f * c
        a.pop()
        _trim(a)
    return a


def _primitive_from_dense(a: list[Fraction], offset: int = 0) -> QPoly:
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    p = QPoly({i + offset: int(c * den) for i, c in enumerate(a)})
    g = p.content()
    p = QPoly({e: c // g for e, c in p.terms})
    return -p if p.leading_coefficient < 0 else p


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Primitive gcd with positive leading coefficient (the gcd in Q[q], cleared to Z[q])."""
    if a.is_zero() and b.is_zero():
        return ZERO
    if a.is_zero():
        return _primitive_from_dense(_dense(b, 0))
    if b.is_zero():
        return _primitive_from_dense(_dense(a, 0))
    # pull out the common power of q so the dense part stays short
    shift = min(a.low_degree, b.low_degree)
    x = _trim(_dense(a, a.low_degree))
    y = _trim(_dense(b, b.low_degree))
    while y:
        x, y = y, _dense_rem(x, y)
    return _primitive_from_dense(x, shift)


@dataclass(frozen=True)
class QRat:
    """Reduced element of Q(q); build through :func:`qrat_reduce` or the arithmetic."""

    num: QPoly
    den: QPoly = field(default=ONE)

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def coerce(cls, x) -> QRat:
        if isinstance(x, QRat):
            return x
        if isinstance(x, (int, QPoly)):
            return qrat_reduce(QPoly.coerce(x), ONE)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        return qrat_reduce(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> QRat:
        return QRat(-self.num, self.den)

    def __sub__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        return qrat_reduce(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        return qrat_reduce(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRat.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, QPoly)):
            other = QRat.coerce(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return Fraction(self.num(x)) / self.den(x)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        n = str(self.num)
        if len(self.num) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: Mapping) -> QRat:
        return qrat_reduce(QPoly.from_json(obj["num"]), QPoly.from_json(obj["den"]))


def qrat_reduce(num: QPoly, den: QPoly) -> QRat:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return QRat(ZERO, ONE)
    g = poly_gcd(num, den)
    num, den = num.exact_div(g), den.exact_div(g)
    c = math.gcd(num.content(), den.content())
    if den.leading_coefficient < 0:
        c = -c
    if c != 1:
        num = QPoly({e: x // c for e, x in num.terms})
        den = QPoly({e: x // c for e, x in den.terms})
    return QRat(num, den)


# -- numerators over (1-z)(1-qz)...(1-q^d z) ----------------------------------


@dataclass(frozen=True)
class ZNumerator:
    """``sum_i a_i(q) z^i`` sitting over ``prod_{i=0}^{d} (1 - q^i z)``."""

    d: int
    coeffs: Mapping[int, QPoly]

    def __post_init__(self):
        clean = {int(i): p for i, p in sorted(self.coeffs.items()) if not p.is_zero()}
        if any(i < 0 for i in clean):
            raise ValueError("negative z-exponent")
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, i: int) -> QPoly:
        return self.coeffs.get(i, ZERO)

    def __eq__(self, other):
        if not isinstance(other, ZNumerator):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.d, tuple(self.coeffs.items())))

    def at_q_one(self) -> dict[int, int]:
        return {i: p.eval_at_one() for i, p in self.coeffs.items()}

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "numerator": {str(i): p.to_json() for i, p in self.coeffs.items()},
            "denominator": "prod_{i=0}^{d} (1-q^i z)",
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> ZNumerator:
        return cls(int(obj["d"]), {int(i): QPoly.from_json(p) for i, p in obj["numerator"].items()})


def series_coeffs(N: ZNumerator, upto: int) -> list[QPoly]:
    """Coefficients of ``z^0 .. z^upto`` in ``N / prod_{i=0}^{d}(1 - q^i z)``.

    Uses ``1/prod(1 - q^i z) = sum_m [d+m choose d]_q z^m``.
    """
    if upto < 0:
        raise ValueError("upto must be non-negative")
    out = []
    for n in range(upto + 1):
        acc = ZERO
        for i, a in N.coeffs.items():
            if i <= n:
                acc = acc + qbinomial(N.d + n - i, N.d) * a
        out.append(acc)
    return out

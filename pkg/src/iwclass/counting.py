"""Exact counts of IW, SIW and AIW matrices from primitive class data.

Every class of size ``n`` is a multiset of primitive classes, and the
reciprocal automorphism orders multiply, so

    Z(t) = 1 + sum_n |IW(n)| t^n / (2^(2n) n!^2) = exp(sum_A t^size / |Aut(A)|)

where the sum runs over primitive H-classes.  The symmetric analogue uses
``2^n n!`` and SAut orders of primitive SH-classes, plus one term
``t^(2 size) / |TAut|`` per primitive TH-class for the double blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Optional, Sequence


class IncompleteDataError(ValueError):
    """Primitive data do not cover every size up to the requested one."""


@dataclass(frozen=True)
class RationalSeries:
    """Power series truncated after ``t^degree``."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def zero(cls, degree: int) -> "RationalSeries":
        return cls((Fraction(0),) * (degree + 1))

    @classmethod
    def one(cls, degree: int) -> "RationalSeries":
        return cls((Fraction(1),) + (Fraction(0),) * degree)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Fraction]], degree: int) -> "RationalSeries":
        c = [Fraction(0)] * (degree + 1)
        for power, value in terms:
            if 0 <= power <= degree:
                c[power] += Fraction(value)
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        d = min(self.degree, other.degree)
        return RationalSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(d + 1)))

    def __neg__(self) -> "RationalSeries":
        return RationalSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        d = min(self.degree, other.degree)
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs[: d + 1]):
            if a:
                for j in range(d + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return RationalSeries(tuple(out))


def series_exp(s: RationalSeries) -> RationalSeries:
    """Formal exponential, via ``n g_n = sum_k k f_k g_(n-k)``."""
    if s.coeffs[0] != 0:
        raise ValueError("exp needs a series with zero constant term")
    f = s.coeffs
    g = [Fraction(0)] * (s.degree + 1)
    g[0] = Fraction(1)
    for n in range(1, s.degree + 1):
        g[n] = sum((k * f[k] * g[n - k] for k in range(1, n + 1)), Fraction(0)) / n
    return RationalSeries(tuple(g))


def _check_complete(n: int, covered: Optional[int]) -> None:
    if covered is not None and covered < n:
        raise IncompleteDataError(f"primitive data cover sizes up to {covered}, need {n}")


def class_cardinality(aut_order: int, n: int) -> int:
    """``2^(2n) n!^2 / |Aut|``; a remainder means the group is wrong."""
    total = 2 ** (2 * n) * factorial(n) ** 2
    q, r = divmod(total, aut_order)
    if r:
        from .structure import ConsistencyError

        raise ConsistencyError(f"|Aut| = {aut_order} does not divide {total}")
    return q


def characteristic_series(primitive: Sequence[tuple[int, int]], n: int) -> RationalSeries:
    """``Z`` truncated at ``t^n`` from ``(size, |Aut|)`` per primitive H-class."""
    pz = RationalSeries.from_terms(((m, Fraction(1, a)) for m, a in primitive), n)
    return series_exp(pz)


def count_iw(primitive: Sequence[tuple[int, int]], n: int, covered: Optional[int] = None) -> int:
    """``|IW(n, k)|`` from ``(size, |Aut|)`` of every primitive H-class."""
    _check_complete(n, covered)
    z = characteristic_series(primitive, n)
    value = z[n] * 2 ** (2 * n) * factorial(n) ** 2
    if value.denominator != 1:
        raise ArithmeticError("non-integral count; primitive data are inconsistent")
    return value.numerator


def symmetric_series(
    ordinary: Sequence[tuple[int, int]],
    symmetric: Sequence[tuple[int, int]],
    n: int,
) -> RationalSeries:
    """``Z^S`` (or ``Z^A``) truncated at ``t^n``.

    ``ordinary`` holds ``(size, order)`` per primitive TH-class: ``|TAut|`` for a
    class equivalent to its transpose, ``|Aut|`` for a non-symmetric pair.
    ``symmetric`` holds ``(size, |SAut|)`` per primitive SH-class.
    """
    terms = [(m, Fraction(1, s)) for m, s in symmetric]
    terms += [(2 * m, Fraction(1, t)) for m, t in ordinary]
    return series_exp(RationalSeries.from_terms(terms, n))


def count_sym_iw(
    ordinary: Sequence[tuple[int, int]],
    symmetric: Sequence[tuple[int, int]],
    n: int,
    sign: int = 1,
    covered: Optional[int] = None,
) -> int:
    """``|SIW(n, k)|`` for ``sign=1`` or ``|AIW(n, k)|`` for ``sign=-1``.

    The caller passes SH data of the matching sign; ``sign`` only enables the
    odd-size shortcut for the anti-symmetric case.
    """
    _check_complete(n, covered)
    if sign == -1 and n % 2:
        return 0
    z = symmetric_series(ordinary, symmetric, n)
    value = z[n] * 2 ** n * factorial(n)
    if value.denominator != 1:
        raise ArithmeticError("non-integral count; symmetric data are inconsistent")
    return value.numerator


# ---------------------------------------------------------------------------
# Adapters from library objects
# ---------------------------------------------------------------------------

def library_counting_data(library) -> list[tuple[int, int]]:
    return [(r.size, r.aut_order) for r in library.records()]


def library_symmetric_data(library, sym_data) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Split primitive data into the two argument lists of :func:`count_sym_iw`."""
    ordinary = []
    symmetric = []
    for rec in library.records():
        if rec.symmetric_class:
            ordinary.append((rec.size, 2 * rec.aut_order))
        elif rec.name < rec.th_partner:
            ordinary.append((rec.size, rec.aut_order))
        for s in sym_data[rec.name].sym.saut_orders:
            symmetric.append((rec.size, s))
    return ordinary, symmetric


def primitive_fraction(library, n: int) -> Fraction:
    total = count_iw(library_counting_data(library), n)
    prim = sum(class_cardinality(r.aut_order, n) for r in library.by_size.get(n, []))
    return Fraction(prim, total)

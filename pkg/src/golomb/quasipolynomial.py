"""Quasipolynomials over exact rationals, built by per-residue interpolation.

A quasipolynomial of period p is p ordinary polynomials, one per residue
class of the argument mod p. Evaluation uses the non-negative residue
convention, so negative arguments land in the residue class the
reciprocity identity expects (with p = 12, t = -1 selects residue 11).

The counting quasipolynomial for Golomb gap vectors with m entries is
produced here by interpolating brute-force counts: degree m-1, period
taken from the vertex denominator bound unless overridden, samples at
t = 1 .. period*m. Its value at 0 and at negative arguments are outputs of
the interpolated object, never inputs; the raw count at 0 is simply 0,
while the quasipolynomial value at 0 is the number of cells of the
subdivided simplex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from golomb.arrangement import period_bound
from golomb.errors import (
    InconsistentValuesError,
    InsufficientPointsError,
    LeadingCoefficientError,
)
from golomb.golomb_graph import _region_data, multiplicity
from golomb.ratpoly import (
    Poly,
    format_fraction,
    lagrange,
    parse_fraction,
    poly_degree,
    poly_eval,
)
from golomb.rulers import count_golomb_rulers


@dataclass(frozen=True)
class Quasipolynomial:
    period: int
    constituents: tuple[Poly, ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        if len(self.constituents) != self.period:
            raise ValueError("need exactly one constituent per residue class")
        if any(len(c) == 0 for c in self.constituents):
            raise ValueError("constituents must be nonempty coefficient tuples")

    def evaluate(self, t: int) -> Fraction:
        """Value at any integer t; t % period is never negative in Python, so
        negative arguments pick the intended residue class."""
        return poly_eval(self.constituents[t % self.period], t)

    @property
    def degree(self) -> int:
        return max(poly_degree(c) for c in self.constituents)

    def minimal_period(self) -> int:
        """Smallest divisor p of the stored period such that constituents
        agreeing mod p are identical. Minimal for the stored data; nothing
        is claimed about periods the data cannot see."""
        for p in range(1, self.period + 1):
            if self.period % p:
                continue
            if all(self.constituents[r] == self.constituents[r % p] for r in range(self.period)):
                return p
        return self.period

    def to_json_dict(self) -> dict:
        return {
            "period": self.period,
            "constituents": [[format_fraction(c) for c in poly] for poly in self.constituents],
        }

    @classmethod
    def from_json_dict(cls, data) -> "Quasipolynomial":
        if not isinstance(data, dict) or "period" not in data or "constituents" not in data:
            raise ValueError("expected an object with 'period' and 'constituents'")
        constituents = tuple(
            tuple(parse_fraction(c) for c in poly) for poly in data["constituents"]
        )
        return cls(data["period"], constituents)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Quasipolynomial":
        return cls.from_json_dict(json.loads(text))


def interpolate(values: Mapping[int, int], degree: int, period: int) -> Quasipolynomial:
    """Per-residue interpolation of counting data under a degree and period
    hypothesis.

    Every residue class mod period needs at least degree+1 samples, all with
    t >= 1. Surplus samples must lie on the class polynomial, otherwise the
    hypothesis is rejected; either failure names the offending class.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if period < 1:
        raise ValueError("period must be >= 1")
    if any(t < 1 for t in values):
        raise ValueError("sample arguments must be >= 1")
    constituents = []
    for r in range(period):
        pts = sorted((t, v) for t, v in values.items() if t % period == r)
        if len(pts) < degree + 1:
            raise InsufficientPointsError(r, len(pts), degree + 1)
        coeffs = lagrange(pts[: degree + 1], degree)
        for t, v in pts[degree + 1 :]:
            predicted = poly_eval(coeffs, t)
            if predicted != v:
                raise InconsistentValuesError(r, t, predicted, v)
        constituents.append(coeffs)
    return Quasipolynomial(period, tuple(constituents))


def golomb_quasipolynomial(
    m: int, period_hint: int | None = None, *, budget: int | None = None
) -> Quasipolynomial:
    """Counting quasipolynomial for Golomb gap vectors with m entries.

    Interpolates exhaustive counts at t = 1 .. period*m on degree m-1, with
    the period taken from the vertex denominator bound unless a hint is
    given, then verifies that every constituent has leading coefficient
    1/(m-1)!.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if period_hint is not None and period_hint < 1:
        raise ValueError("period hint must be >= 1")
    period = period_hint if period_hint is not None else period_bound(m)
    values = {t: count_golomb_rulers(m, t, budget=budget) for t in range(1, period * m + 1)}
    q = interpolate(values, m - 1, period)
    expected = Fraction(1, factorial(m - 1))
    for r, coeffs in enumerate(q.constituents):
        if coeffs[-1] != expected:
            raise LeadingCoefficientError(
                f"residue {r}: leading coefficient {format_fraction(coeffs[-1])}, "
                f"expected {format_fraction(expected)}; wrong period hypothesis or a counting bug"
            )
    return q


@dataclass(frozen=True)
class ReciprocityRow:
    t: int
    lhs: Fraction  # (-1)^(m-1) * q(-t)
    rhs: int       # multiplicity-weighted ruler count, or the cell count at t=0

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class GolombReciprocityReport:
    m: int
    rows: tuple[ReciprocityRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)


def _compositions(total: int, parts: int):
    """Non-negative integer vectors of the given length and sum."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head, *rest)


def reciprocity_check_golomb(
    m: int, t_values: Iterable[int], *, budget: int | None = None
) -> GolombReciprocityReport:
    """For each t >= 1 compare (-1)^(m-1) q(-t) with the sum of multiplicities
    over all non-negative gap vectors of total t; for t = 0 compare against
    the number of admissible orientations (the cell count)."""
    q = golomb_quasipolynomial(m, budget=budget)
    sign = (-1) ** (m - 1)
    rows = []
    for t in t_values:
        if t < 0:
            raise ValueError("t values must be >= 0")
        lhs = sign * q.evaluate(-t)
        if t == 0:
            rhs = len(_region_data(m, budget)[0])
        else:
            rhs = sum(multiplicity(z, budget=budget) for z in _compositions(t, m))
        rows.append(ReciprocityRow(t, lhs, rhs))
    return GolombReciprocityReport(m, tuple(rows))

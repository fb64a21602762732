"""Exact-coefficient polynomials in a single quantity variable.

Coefficients are stored constant-term first, so ``coefficients[k]`` is the
weight of ``q**k``.  Trailing zeros are stripped on construction, which makes
equality a comparison of canonical coefficient tuples.  Total revenue, total
cost and influence curves are all represented this way.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import InvariantError


class Polynomial:
    """A real polynomial, closed under differentiation and exact to evaluate."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[float] = ()):
        coeffs = [float(c) for c in coefficients]
        if not all(math.isfinite(c) for c in coeffs):
            raise InvariantError("polynomial coefficients must be finite")
        while coeffs and coeffs[-1] == 0.0:
            coeffs.pop()
        self.coefficients: tuple[float, ...] = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree of the canonical form; the zero polynomial has degree -1."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, q: float) -> float:
        # Horner's scheme, highest power first.
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * q + c
        return acc

    def derivative(self) -> "Polynomial":
        """Coefficient-wise exact differentiation (power rule)."""
        return Polynomial(
            k * c for k, c in enumerate(self.coefficients) if k >= 1
        )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return Polynomial(
            (a[k] if k < len(a) else 0.0) + (b[k] if k < len(b) else 0.0)
            for k in range(n)
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return Polynomial(
            (a[k] if k < len(a) else 0.0) - (b[k] if k < len(b) else 0.0)
            for k in range(n)
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coefficients)!r})"


def as_polynomial(value: "Polynomial | Sequence[float]") -> Polynomial:
    """Coerce a coefficient sequence (constant term first) to a Polynomial."""
    if isinstance(value, Polynomial):
        return value
    return Polynomial(value)

"""Exact integer Laurent polynomials in one named variable.

Value type for all invariants in this package (variables ``a``, ``x``, ``n``).
Coefficients are arbitrary-precision integers; zero coefficients are never
stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class LaurentPoly:
    """Immutable Laurent polynomial; ``terms`` sorted by descending exponent."""

    var: str
    terms: tuple[tuple[int, int], ...]  # (exponent, coefficient)

    def __post_init__(self) -> None:
        exps = [e for e, _ in self.terms]
        if exps != sorted(exps, reverse=True):
            raise ValueError("terms must be sorted by descending exponent")
        if len(set(exps)) != len(exps):
            raise ValueError("duplicate exponents")
        if any(c == 0 for _, c in self.terms):
            raise ValueError("zero coefficients must not be stored")

    @classmethod
    def from_dict(cls, var: str, coeffs: Mapping[int, int]) -> LaurentPoly:
        terms = tuple(sorted(((e, c) for e, c in coeffs.items() if c != 0), reverse=True))
        return cls(var, terms)

    @classmethod
    def zero(cls, var: str) -> LaurentPoly:
        return cls(var, ())

    @classmethod
    def monomial(cls, var: str, exponent: int, coefficient: int = 1) -> LaurentPoly:
        if coefficient == 0:
            return cls.zero(var)
        return cls(var, ((exponent, coefficient),))

    @classmethod
    def const(cls, var: str, value: int) -> LaurentPoly:
        return cls.monomial(var, 0, value)

    def _check_var(self, other: LaurentPoly) -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        self._check_var(other)
        coeffs = dict(self.terms)
        for e, c in other.terms:
            coeffs[e] = coeffs.get(e, 0) + c
        return LaurentPoly.from_dict(self.var, coeffs)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.var, tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        self._check_var(other)
        coeffs: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                coeffs[e] = coeffs.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(self.var, coeffs)

    def scale(self, factor: int) -> LaurentPoly:
        if factor == 0:
            return LaurentPoly.zero(self.var)
        return LaurentPoly(self.var, tuple((e, c * factor) for e, c in self.terms))

    def shift(self, delta: int) -> LaurentPoly:
        """Multiply by var**delta."""
        return LaurentPoly(self.var, tuple((e + delta, c) for e, c in self.terms))

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers not supported")
        result = LaurentPoly.const(self.var, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        """Highest exponent with a nonzero coefficient; None for the zero poly."""
        return self.terms[0][0] if self.terms else None

    @property
    def min_degree(self) -> int | None:
        return self.terms[-1][0] if self.terms else None

    def coefficient(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def __call__(self, value):
        return sum(c * value**e for e, c in self.terms)

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms):
            sign = "-" if c < 0 else ("+" if i else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{self.var}" if e == 1 else f"{head}{self.var}^{e}"
            parts.append(sign + body)
        return "".join(parts)

"""Exact arithmetic in Z[√-5] for bounded divisibility certificates.

Membership in a principal filter is only ever certified positively (an
explicit exponent and cofactor) or left open up to the bound; the norm
gives cheap refutations of single divisibilities, never of membership.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadBound, DivisionByZero, ZeroElement


@dataclass(frozen=True)
class QuadInt:
    """a + b√-5 with exact integer coordinates."""

    a: int
    b: int

    def __add__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(
            self.a * other.a - 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b)

    def __pow__(self, n: int) -> "QuadInt":
        acc = QuadInt(1, 0)
        base = self
        for _ in range(n):
            acc = acc * base
        return acc

    def conj(self) -> "QuadInt":
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a + 5 * self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1  # exactly ±1

    @classmethod
    def from_int(cls, n: int) -> "QuadInt":
        return cls(n, 0)

    def __repr__(self) -> str:
        return f"{self.a}{self.b:+}√-5"


ZERO = QuadInt(0, 0)
ONE = QuadInt(1, 0)


def divides(g: QuadInt, f: QuadInt) -> bool:
    """Exact test: f·conj(g)/norm(g) must have integer coordinates."""
    if g.is_zero():
        raise DivisionByZero("division by the zero element")
    n = g.norm()
    prod = f * g.conj()
    return prod.a % n == 0 and prod.b % n == 0


def exact_quotient(g: QuadInt, f: QuadInt) -> QuadInt:
    if g.is_zero():
        raise DivisionByZero("division by the zero element")
    n = g.norm()
    prod = f * g.conj()
    if prod.a % n or prod.b % n:
        raise ZeroElement(f"{g!r} does not divide {f!r}")
    return QuadInt(prod.a // n, prod.b // n)


def norm_refutes(g: QuadInt, f: QuadInt) -> bool:
    """Necessary-condition oracle: if norm(g) ∤ norm(f) then g ∤ f."""
    if g.is_zero():
        raise DivisionByZero("division by the zero element")
    return f.norm() % g.norm() != 0


@dataclass(frozen=True)
class Member:
    """g divides f^exponent, with the exact cofactor as witness."""

    exponent: int
    witness: QuadInt


@dataclass(frozen=True)
class UnknownUpTo:
    """No certificate found for any exponent up to the bound; membership
    stays undecided (never claimed false)."""

    bound: int


def member_bounded(g: QuadInt, f: QuadInt, bound: int) -> Member | UnknownUpTo:
    """Search the smallest n ≤ bound with g | f^n."""
    if f.is_zero():
        raise ZeroElement("principal element must be nonzero")
    if g.is_zero():
        raise DivisionByZero("membership of zero is never certified")
    if bound < 1:
        raise BadBound(f"bound must be at least 1, got {bound}", bound=bound)
    power = ONE
    for n in range(1, bound + 1):
        power = power * f
        if divides(g, power):
            return Member(n, exact_quotient(g, power))
    return UnknownUpTo(bound)

"""Sphere links S^3 + S^3 -> S^6 and knots S^3 -> S^6 as integer data.

A link class is its tuple ``(lambda1, lambda2, r1, r2)`` of linking
coefficients and Haefliger invariants; realizable tuples are exactly those
with ``lambda1 = lambda2 (mod 2)``.  Component-wise connected sum is
coordinate-wise addition.  The PL classes keep only the two linking
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "ParityError",
    "KnotClass",
    "LinkClass",
    "PLLinkClass",
    "LINK_BASIS",
    "PL_LINK_BASIS",
    "linkclass_new",
    "knot_sum",
    "lambda_of_sum",
    "pl_forget",
    "knot_stabilizer_check",
]


class ParityError(ValueError):
    """Integer data that no embedding realizes (an odd linking-coefficient sum)."""


# Z-bases of {(a, b, c, d) : a = b mod 2} and of its PL shadow.
LINK_BASIS = ((1, 1, 0, 0), (0, 2, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
PL_LINK_BASIS = ((1, 1), (0, 2))


@dataclass(frozen=True, order=True)
class KnotClass:
    r: int = 0

    def __add__(self, other: "KnotClass") -> "KnotClass":
        return KnotClass(self.r + other.r)

    def __neg__(self) -> "KnotClass":
        return KnotClass(-self.r)

    @property
    def is_trivial(self) -> bool:
        return self.r == 0


@dataclass(frozen=True, order=True)
class LinkClass:
    lambda1: int = 0
    lambda2: int = 0
    r1: int = 0
    r2: int = 0

    def __post_init__(self):
        if (self.lambda1 - self.lambda2) % 2:
            raise ParityError(
                f"linking coefficients {self.lambda1}, {self.lambda2} differ in parity; "
                "no link S^3 + S^3 -> S^6 has them"
            )

    @classmethod
    def from_tuple(cls, t: Sequence[int]) -> "LinkClass":
        t = tuple(t)
        if len(t) != 4:
            raise ValueError(f"link class needs 4 integers, got {len(t)}")
        return cls(*(int(x) for x in t))

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.lambda1, self.lambda2, self.r1, self.r2)

    def __iter__(self):
        return iter(self.as_tuple())

    def __add__(self, other: "LinkClass") -> "LinkClass":
        return LinkClass(
            self.lambda1 + other.lambda1,
            self.lambda2 + other.lambda2,
            self.r1 + other.r1,
            self.r2 + other.r2,
        )

    def __neg__(self) -> "LinkClass":
        return LinkClass(-self.lambda1, -self.lambda2, -self.r1, -self.r2)

    def __sub__(self, other: "LinkClass") -> "LinkClass":
        return self + (-other)

    @property
    def is_trivial(self) -> bool:
        return self.as_tuple() == (0, 0, 0, 0)

    @property
    def is_unlinked(self) -> bool:
        return self.lambda1 == 0 and self.lambda2 == 0

    def component_knots(self) -> tuple[KnotClass, KnotClass]:
        return KnotClass(self.r1), KnotClass(self.r2)

    def __str__(self):
        return str(self.as_tuple())


@dataclass(frozen=True, order=True)
class PLLinkClass:
    lambda1: int = 0
    lambda2: int = 0

    def __post_init__(self):
        if (self.lambda1 - self.lambda2) % 2:
            raise ParityError(f"PL linking coefficients {self.lambda1}, {self.lambda2} differ in parity")

    def as_tuple(self) -> tuple[int, int]:
        return (self.lambda1, self.lambda2)

    def __iter__(self):
        return iter(self.as_tuple())

    def __add__(self, other: "PLLinkClass") -> "PLLinkClass":
        return PLLinkClass(self.lambda1 + other.lambda1, self.lambda2 + other.lambda2)

    def __neg__(self) -> "PLLinkClass":
        return PLLinkClass(-self.lambda1, -self.lambda2)

    def __sub__(self, other: "PLLinkClass") -> "PLLinkClass":
        return self + (-other)

    @property
    def is_unlinked(self) -> bool:
        return self.lambda1 == 0 and self.lambda2 == 0


def linkclass_new(a: int, b: int, c: int, d: int) -> LinkClass:
    return LinkClass(a, b, c, d)


def knot_sum(rA: KnotClass, rB: KnotClass, lamAB: int, lamBA: int) -> KnotClass:
    """Haefliger invariant of the connected sum of two disjoint knots.

    ``lamAB`` and ``lamBA`` are the linking coefficients of A around B and
    of B around A; their sum is even for any actual pair of knots.
    """
    s = lamAB + lamBA
    if s % 2:
        raise ParityError(f"lambda(A,B) + lambda(B,A) = {s} is odd")
    return KnotClass(rA.r + rB.r + s // 2)


def lambda_of_sum(lamAC: int, lamAB: int) -> int:
    """``lambda(A # B, C)`` from ``lambda(A, C)`` and ``lambda(A, B)``.

    Only the left argument is additive; ``lambda(A, B # C)`` cannot be
    computed from pairwise data (Borromean rings give 2 from zeros).
    """
    return lamAC + lamAB


def pl_forget(g: LinkClass) -> PLLinkClass:
    return PLLinkClass(g.lambda1, g.lambda2)


def knot_stabilizer_check(d: int, rg: KnotClass | int) -> bool:
    """Whether tying in the knot ``rg`` fixes a knotted 3-manifold whose
    Whitney invariant has divisibility ``d``."""
    if d < 0:
        raise ValueError("divisibility is non-negative")
    r = rg.r if isinstance(rg, KnotClass) else int(rg)
    if d == 0:
        return r == 0
    return r % d == 0

"""The three matrix spaces and their group-theoretic constants."""

from __future__ import annotations

from dataclasses import dataclass

GENERAL = "general"
SYMMETRIC = "symmetric"
SKEW = "skew"
KINDS = (GENERAL, SYMMETRIC, SKEW)


@dataclass(frozen=True)
class MatrixSpace:
    """General(m, n) with m >= n, Symmetric(n) or Skew(n).

    For general matrices the group is GL_m x GL_n and characters are keyed
    by pairs (delta, lambda) with len(delta) == m and len(lambda) == n.
    """

    kind: str
    n: int
    m: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown matrix space {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.kind == GENERAL:
            if self.m < self.n:
                raise ValueError(f"general matrices need m >= n, got m={self.m}, n={self.n}")
        elif self.m not in (0, self.n):
            raise ValueError(f"{self.kind} matrices take a single size n")

    @property
    def arity(self) -> int:
        return 2 if self.kind == GENERAL else 1

    @property
    def half(self) -> int:
        """floor(n/2), the number of skew rank strata minus one."""
        return self.n // 2

    @property
    def lengths(self) -> tuple[int, ...]:
        return (self.m, self.n) if self.kind == GENERAL else (self.n,)

    @property
    def fourier_twist(self) -> tuple[int, ...]:
        """Det power per factor in lambda -> d - reverse(lambda)."""
        if self.kind == SYMMETRIC:
            return (self.n + 1,)
        if self.kind == SKEW:
            return (self.n - 1,)
        return (self.n, self.m)

    def label(self) -> str:
        if self.kind == GENERAL:
            return f"General({self.m},{self.n})"
        return f"{self.kind.capitalize()}({self.n})"


def General(m: int, n: int) -> MatrixSpace:
    return MatrixSpace(GENERAL, n, m)


def Symmetric(n: int) -> MatrixSpace:
    return MatrixSpace(SYMMETRIC, n)


def Skew(n: int) -> MatrixSpace:
    return MatrixSpace(SKEW, n)

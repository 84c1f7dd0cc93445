"""Independent evaluation of characters as exact rational numbers.

A character is checked by evaluating it at random points with distinct
nonzero rational coordinates. Schur characters are computed as a ratio of
alternants, never through straightening, so agreement is real evidence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Sequence

from .grothendieck import VirtualRep

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
POOL = tuple(Fraction(p) for p in PRIMES) + tuple(Fraction(-p) for p in PRIMES) + tuple(
    Fraction(1, p) for p in PRIMES
)


@dataclass(frozen=True)
class EvalPoint:
    coords: tuple

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if any(c == 0 for c in coords):
            raise ValueError("coordinates must be nonzero")
        if len(set(coords)) != len(coords):
            raise ValueError("coordinates must be pairwise distinct")
        object.__setattr__(self, "coords", coords)

    def __len__(self):
        return len(self.coords)


def random_point(n: int, rng: random.Random) -> EvalPoint:
    return EvalPoint(tuple(rng.sample(POOL, n)))


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    out = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        out *= p
        for i in range(col + 1, n):
            f = a[i][col] / p
            if f:
                for j in range(col, n):
                    a[i][j] -= f * a[col][j]
    return sign * out


def alternant(exponents: Sequence[int], p: EvalPoint) -> Fraction:
    return det([[x ** e for e in exponents] for x in p.coords])


def schur_eval(lam: Sequence[int], p: EvalPoint) -> Fraction:
    """Bialternant det(x_i^(lam_j + n - j)) / det(x_i^(n - j)).

    Any integer vector is accepted; non-dominant input gives the signed
    value that straightening predicts.
    """
    n = len(lam)
    if len(p) != n:
        raise ValueError(f"point has {len(p)} coordinates, weight has {n}")
    top = alternant([lam[j] + n - 1 - j for j in range(n)], p)
    # the Vandermonde in closed form
    vdm = prod((p.coords[i] - p.coords[j] for i, j in combinations(range(n), 2)), start=Fraction(1))
    return top / vdm


def elementary(k: int, values: Sequence[Fraction]) -> Fraction:
    return sum((prod(c, start=Fraction(1)) for c in combinations(values, k)), start=Fraction(0))


def pkr_eval(k: int, r: int, p: EvalPoint) -> Fraction:
    """p_{k,r} at p, as e_k(x_1^r, ..., x_n^r)."""
    return elementary(k, [x ** r for x in p.coords])


def vrep_eval(M: VirtualRep, points) -> Fraction:
    """Evaluate M; ``points`` is one EvalPoint, or a pair for two factors."""
    if isinstance(points, EvalPoint):
        points = (points,)
    if len(points) != M.arity:
        raise ValueError("one evaluation point per factor is required")
    total = Fraction(0)
    for key, mult in M.items():
        parts = (key,) if M.arity == 1 else key
        total += mult * prod((schur_eval(w, pt) for w, pt in zip(parts, points)), start=Fraction(1))
    return total


def equal_by_eval(a: VirtualRep, b: VirtualRep, trials: int = 5, seed: int = 0) -> bool:
    """Probabilistic equality at ``trials`` seeded random points."""
    if a.lengths != b.lengths:
        raise ValueError("characters have different weight lengths")
    if a.windows != b.windows:
        raise ValueError("characters are exact on different windows")
    rng = random.Random(seed)
    for _ in range(trials):
        pts = tuple(random_point(n, rng) for n in a.lengths)
        if vrep_eval(a, pts) != vrep_eval(b, pts):
            return False
    return True


# -- exact polynomial mode (needs sympy) --------------------------------------


def expand(M: VirtualRep):
    """M as an exact Laurent polynomial in sympy (single factor, n <= 3)."""
    import sympy

    if M.arity != 1:
        raise ValueError("polynomial mode handles one factor")
    n = M.lengths[0]
    if n > 3:
        raise ValueError("polynomial mode is limited to n <= 3")
    xs = sympy.symbols(f"x1:{n + 1}")
    vdm = sympy.Matrix(n, n, lambda i, j: xs[i] ** (n - 1 - j)).det()
    total = sympy.Integer(0)
    for lam, mult in M.items():
        num = sympy.Matrix(n, n, lambda i, j: xs[i] ** (lam[j] + n - 1 - j)).det()
        total += mult * sympy.cancel(num / vdm)
    return sympy.expand(sympy.cancel(total)), xs


def equal_by_expansion(a: VirtualRep, b: VirtualRep) -> bool:
    import sympy

    pa, _ = expand(a)
    pb, _ = expand(b)
    return sympy.simplify(pa - pb) == 0

"""Weights of GL_n, straightening, and the subset/partition combinatorics.

A weight is a plain tuple of ints. Indices in the public helpers are
1-based, matching the usual notation lambda_1 >= ... >= lambda_n.
"""

from __future__ import annotations

from enum import IntEnum
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterator, NamedTuple, Optional, Sequence

Weight = tuple[int, ...]
Subset = tuple[int, ...]


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    @classmethod
    def of(cls, x: int) -> "Parity":
        return cls.ODD if x % 2 else cls.EVEN

    def flip(self) -> "Parity":
        return Parity.EVEN if self else Parity.ODD

    def matches(self, x: int) -> bool:
        return x % 2 == self.value


class Term(NamedTuple):
    """Nonzero straightened value: ``sign * S_weight``."""

    sign: int
    weight: Weight


# Zero is represented by ``None``.
StraightenResult = Optional[Term]


def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def is_partition(lam: Sequence[int]) -> bool:
    return is_dominant(lam) and (len(lam) == 0 or lam[-1] >= 0)


def ge_at(lam: Sequence[int], s: int, c: int) -> bool:
    """``lam_s >= c`` with lam_s = +inf for s <= 0 and -inf for s > n."""
    if s <= 0:
        return True
    if s > len(lam):
        return False
    return lam[s - 1] >= c


def le_at(lam: Sequence[int], s: int, c: int) -> bool:
    """``lam_s <= c`` with the same infinity conventions as :func:`ge_at`."""
    if s <= 0:
        return False
    if s > len(lam):
        return True
    return lam[s - 1] <= c


def delta(n: int) -> Weight:
    return tuple(range(n - 1, -1, -1))


def straighten(lam: Sequence[int]) -> StraightenResult:
    """Normalize ``S_lam`` to ``sign * S_dominant`` (or zero).

    Uses the staircase rule: sort ``lam + delta`` decreasingly and subtract
    ``delta`` again. A repeated entry in ``lam + delta`` gives zero.
    """
    n = len(lam)
    v = [lam[i] + n - 1 - i for i in range(n)]
    if len(set(v)) < n:
        return None
    inversions = 0
    for i in range(n):
        vi = v[i]
        for j in range(i + 1, n):
            if vi < v[j]:
                inversions += 1
    v.sort(reverse=True)
    return Term(-1 if inversions % 2 else 1, tuple(v[i] - (n - 1 - i) for i in range(n)))


def conjugate(mu: Sequence[int], length: Optional[int] = None) -> tuple[int, ...]:
    """Transpose of the Young diagram of ``mu``.

    Without ``length`` trailing zeros are dropped; with it the result is
    padded (or must fit) to exactly ``length`` entries.
    """
    if any(p < 0 for p in mu):
        raise ValueError(f"not a partition: {tuple(mu)}")
    width = max(mu, default=0)
    conj = [sum(1 for p in mu if p >= i) for i in range(1, width + 1)]
    if length is None:
        return tuple(conj)
    if len(conj) > length:
        raise ValueError(f"conjugate of {tuple(mu)} has more than {length} parts")
    return tuple(conj) + (0,) * (length - len(conj))


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def partitions_in_box(a: int, b: int) -> Iterator[tuple[int, ...]]:
    """All partitions with exactly ``a`` entries (zeros allowed), each <= b."""
    for c in combinations_with_replacement(range(b, -1, -1), a):
        yield c


def dominant_weights(n: int, lo: int, hi: int) -> Iterator[Weight]:
    """Dominant weights with lo <= lam_n and lam_1 <= hi, lexicographically descending."""
    if lo > hi:
        return
    yield from combinations_with_replacement(range(hi, lo - 1, -1), n)


# -- subsets of [n] -------------------------------------------------------


def subsets(n: int, k: int) -> Iterator[Subset]:
    return combinations(range(1, n + 1), k)


def complement(subset: Sequence[int], n: int) -> Subset:
    chosen = set(subset)
    return tuple(i for i in range(1, n + 1) if i not in chosen)


def subset_from_partition(mu: Sequence[int], k: int, n: int) -> Subset:
    """I = {mu_k + 1, mu_{k-1} + 2, ..., mu_1 + k} for mu in P(k, n-k)."""
    mu = tuple(mu)
    if len(mu) > k:
        if any(mu[k:]):
            raise ValueError(f"{mu} has more than {k} nonzero parts")
        mu = mu[:k]
    mu = mu + (0,) * (k - len(mu))
    if not is_partition(mu):
        raise ValueError(f"not a partition: {mu}")
    if k and mu[0] > n - k:
        raise ValueError(f"{mu} does not fit in a {k}x{n - k} box")
    return tuple(mu[k - t] + t for t in range(1, k + 1))


def partition_from_subset(subset: Sequence[int], n: int) -> tuple[int, ...]:
    """Inverse of :func:`subset_from_partition`; returns k entries."""
    items = tuple(subset)
    k = len(items)
    if list(items) != sorted(set(items)) or (k and (items[0] < 1 or items[-1] > n)):
        raise ValueError(f"{items} is not an increasing subset of [{n}]")
    return tuple(items[t - 1] - t for t in range(k, 0, -1))


def lambda_split(lam: Sequence[int], subset: Sequence[int]) -> tuple[Weight, Weight]:
    """Return (lambda^1(I), lambda^2(I)).

    Entry t of the concatenation is ``t + lam_{i_t} - i_t``, where
    i_1 < ... < i_k lists I and i_{k+1} < ... < i_n lists its complement.
    """
    n = len(lam)
    order = tuple(subset) + complement(subset, n)
    vals = tuple(t + lam[i - 1] - i for t, i in enumerate(order, start=1))
    k = len(subset)
    return vals[:k], vals[k:]


def lambda_rI(lam: Sequence[int], r: int, subset: Sequence[int]) -> Weight:
    first, second = lambda_split(lam, subset)
    return tuple(x + r for x in first) + second


def sign_sigma(subset: Sequence[int], n: int) -> int:
    """Sign of the permutation t -> i_t (I listed first, then its complement)."""
    order = tuple(subset) + complement(subset, n)
    inv = sum(1 for a in range(n) for b in range(a + 1, n) if order[a] > order[b])
    return -1 if inv % 2 else 1


def shift_by_subset(lam: Sequence[int], r: int, subset: Sequence[int]) -> Weight:
    """``lam + (r^I)``."""
    out = list(lam)
    for i in subset:
        out[i - 1] += r
    return tuple(out)


# -- parity-constrained partition counts ----------------------------------


def binom(x: int, y: int) -> int:
    """Binomial coefficient, zero when y < 0 or x < y."""
    if y < 0 or x < y:
        return 0
    return comb(x, y)


def count_Phj(h: Parity, j: Parity, a: int, b: int) -> int:
    """|{mu in P(a, b): every mu_i = h, every mu'_i = j (mod 2)}|."""
    if not isinstance(h, Parity) or not isinstance(j, Parity):
        raise TypeError("parities must be Parity values")
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    # Only the zero partition fits; the closed forms misbehave here.
    if a == 0:
        return 1 if (b == 0 or j == Parity.EVEN) else 0
    if b == 0:
        return 1 if h == Parity.EVEN else 0
    if h == Parity.EVEN and j == Parity.EVEN:
        return binom(a // 2 + b // 2, b // 2)
    if h == Parity.EVEN and j == Parity.ODD:
        return binom((a - 1) // 2 + b // 2, b // 2) if b % 2 == 0 else 0
    if h == Parity.ODD and j == Parity.EVEN:
        return binom(a // 2 + (b - 1) // 2, (b - 1) // 2) if a % 2 == 0 else 0
    if a % 2 == 1 and b % 2 == 1:
        return binom((a - 1) // 2 + (b - 1) // 2, (b - 1) // 2)
    return 0


def enumerate_Phj(h: Parity, j: Parity, a: int, b: int) -> list[tuple[int, ...]]:
    """Brute-force listing of P^{h,j}(a, b)."""
    out = []
    for mu in partitions_in_box(a, b):
        if all(h.matches(p) for p in mu) and all(j.matches(p) for p in conjugate(mu, b)):
            out.append(mu)
    return out

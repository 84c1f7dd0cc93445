"""Euler characteristics on Grassmannians and pushforward characters.

Only the Euler-characteristic shadows of the geometry are computed: Bott's
theorem reduces each of them to straightening a concatenated weight.
"""

from __future__ import annotations

from functools import partial
from typing import Optional, Sequence

from .grothendieck import VirtualRep, Window, limit_mult, pkr, space_windows, window_keys
from .parallel import ordered_map
from .spaces import GENERAL, SKEW, SYMMETRIC, MatrixSpace
from .weights import Parity, StraightenResult, conjugate, is_dominant, partitions_in_box, straighten

VARIANTS = ("M0", "M1", "plain")


def bott_chi(alpha: Sequence[int], beta: Sequence[int], n: int) -> StraightenResult:
    """chi(G(k, V), S_alpha Q (x) S_beta R) as a signed irreducible (or zero)."""
    if len(alpha) + len(beta) != n:
        raise ValueError(f"lengths {len(alpha)} + {len(beta)} != {n}")
    if not (is_dominant(alpha) and is_dominant(beta)):
        raise ValueError("alpha and beta must each be dominant")
    return straighten(tuple(alpha) + tuple(beta))


def chi_forms(k: int, n: int, r: int, i: int) -> VirtualRep:
    """chi(G(k, V), Omega^i(r)): one term per mu in P(k, n-k) with |mu| = i."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if not 0 <= i <= k * (n - k):
        raise ValueError(f"need 0 <= i <= {k * (n - k)}, got i={i}")
    out: dict = {}
    for mu in partitions_in_box(k, n - k):
        if sum(mu) != i:
            continue
        alpha = tuple(r - mu[k - 1 - t] for t in range(k))
        beta = conjugate(mu, n - k)
        term = bott_chi(alpha, beta, n)
        if term is not None:
            out[term.weight] = out.get(term.weight, 0) + term.sign
    return VirtualRep(out, Window(), (n,))


def pkr_from_forms(k: int, n: int, r: int) -> VirtualRep:
    """Alternating sum of chi_forms over i."""
    total = VirtualRep.zero((n,))
    for i in range(k * (n - k) + 1):
        term = chi_forms(k, n, r, i)
        total = total + (term if i % 2 == 0 else -term)
    return total


def pkr_direct(k: int, n: int, r: int) -> VirtualRep:
    return pkr(n, k, r)


def pushforward_sign(space: MatrixSpace, k: int) -> int:
    if space.kind == SYMMETRIC:
        e = k * (space.n - k)
    elif space.kind == GENERAL:
        e = k * (space.m - space.n)
    else:
        e = 0  # 2k(n - 2k) is even
    return -1 if e % 2 else 1


def variant_parity(space: MatrixSpace, k: int, variant: str) -> Optional[Parity]:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if space.kind == SYMMETRIC:
        if variant == "plain":
            raise ValueError("symmetric matrices need variant M0 or M1")
        return Parity.of(k + 1 if variant == "M0" else k)
    if variant != "plain":
        raise ValueError(f"{space.kind} matrices use the plain variant")
    return None


def _signed_limit(key, k, space, parity, sign):
    return sign * limit_mult(key, k, space, parity)


def pushforward_euler(
    space: MatrixSpace, k: int, variant: str, windows, jobs: Optional[int] = None
) -> VirtualRep:
    """Signed stabilized limit of p_{k,r} (x) E, weight by weight, on a window.

    For skew-symmetric matrices k counts pairs (the Grassmannian is G(2k, V)).
    """
    parity = variant_parity(space, k, variant)
    top = space.half if space.kind == SKEW else space.n
    if not 0 <= k <= top:
        raise ValueError(f"need 0 <= k <= {top}, got k={k}")
    ws = space_windows(space, windows)
    keys = window_keys(space, ws)
    fn = partial(_signed_limit, k=k, space=space, parity=parity, sign=pushforward_sign(space, k))
    mults = ordered_map(fn, keys, jobs)
    return VirtualRep(dict(zip(keys, mults)), ws, space.lengths)

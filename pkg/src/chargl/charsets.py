"""Membership and windowed enumeration for the named sets of dominant weights.

Every predicate reads its defining inequalities through :func:`ge_at` and
:func:`le_at`, so indices outside 1..n follow the infinity conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence

from .grothendieck import VirtualRep, _general_E, _single_E, space_windows
from .spaces import GENERAL, SKEW, SYMMETRIC, MatrixSpace
from .weights import Parity, Weight, dominant_weights, ge_at, is_dominant, le_at

TAGS = ("C1", "C2", "Chj", "Z", "Y", "A", "B", "E", "Sdet", "Ssdet", "SsdetHalf", "SPf")

# Sets whose keys are pairs (delta, lambda) on general matrices.
_PAIR_KEYED = {"A", "Sdet"}


@dataclass(frozen=True)
class CharSetId:
    tag: str
    space: MatrixSpace
    s: Optional[int] = None
    h: Optional[Parity] = None
    j: Optional[Parity] = None

    def __post_init__(self):
        tag, sp = self.tag, self.space
        if tag not in TAGS:
            raise ValueError(f"unknown weight set {tag!r}")
        needs_s = tag in ("C1", "C2", "Chj", "Z", "Y", "A", "B")
        if needs_s != (self.s is not None):
            raise ValueError(f"{tag} {'requires' if needs_s else 'takes no'} index s")
        if tag == "Chj":
            if not isinstance(self.h, Parity) or not isinstance(self.j, Parity):
                raise ValueError("Chj needs Parity values h and j")
        elif self.h is not None or self.j is not None:
            raise ValueError(f"{tag} takes no parities")
        if tag in ("C1", "C2", "Ssdet", "SsdetHalf") and sp.kind != SYMMETRIC:
            raise ValueError(f"{tag} lives on symmetric matrices")
        if tag in ("A", "Sdet") and sp.kind != GENERAL:
            raise ValueError(f"{tag} lives on general matrices")
        if tag in ("B", "SPf") and sp.kind != SKEW:
            raise ValueError(f"{tag} lives on skew-symmetric matrices")
        if tag in ("Chj", "Z", "Y") and sp.kind == GENERAL:
            raise ValueError(f"{tag} is a set of GL_n weights")
        if tag == "Sdet" and sp.m != sp.n:
            raise ValueError("S_det needs square matrices")
        if tag == "SPf" and sp.n % 2:
            raise ValueError("the Pfaffian needs even n")
        top = sp.half if tag == "B" else sp.n
        if needs_s and not 0 <= self.s <= top:
            raise ValueError(f"{tag} needs 0 <= s <= {top}, got {self.s}")

    @property
    def pair_keyed(self) -> bool:
        return self.tag in _PAIR_KEYED or (self.tag == "E" and self.space.kind == GENERAL)

    def label(self) -> str:
        if self.tag == "Chj":
            return f"C^{{{int(self.h)},{int(self.j)}}}({self.s})"
        if self.s is not None:
            return f"{self.tag}({self.s})"
        return self.tag


def C1(s, space):
    return CharSetId("C1", space, s)


def C2(s, space):
    return CharSetId("C2", space, s)


def _parities(lam: Sequence[int], lo: int, hi: int, parity: int) -> bool:
    """lam_i = parity (mod 2) for lo <= i <= hi (1-based, clipped)."""
    return all((lam[i - 1] - parity) % 2 == 0 for i in range(max(lo, 1), min(hi, len(lam)) + 1))


def in_C1(lam, s):
    n = len(lam)
    # lambda_{s+2} (not s+1) is as intended: this set is the union of two Z-strata.
    return _parities(lam, 1, n, s + 1) and ge_at(lam, s, s + 1) and le_at(lam, s + 2, s + 1)


def in_C2(lam, s):
    n = len(lam)
    return (
        _parities(lam, 1, s, s + 1)
        and _parities(lam, s + 1, n, s)
        and ge_at(lam, s, s + 1)
        and le_at(lam, s + 1, s)
    )


def in_Z(lam, s):
    return ge_at(lam, s, s + 1) and le_at(lam, s + 1, s + 1)


def in_Chj(lam, h, j, s):
    return in_Z(lam, s) and _parities(lam, 1, s, h) and _parities(lam, s + 1, len(lam), j)


def in_Y(lam, u):
    return ge_at(lam, u, u - 1) and le_at(lam, u + 1, u - 1)


def in_A(lam, s, m):
    n = len(lam)
    return ge_at(lam, s, s + m - n) and le_at(lam, s + 1, s)


def companion_A(lam: Sequence[int], s: int, m: int, n: int) -> Weight:
    """The GL_m weight paired with lam in the character of A_s."""
    if len(lam) != n:
        raise ValueError("weight length does not match n")
    if not (is_dominant(lam) and in_A(lam, s, m)):
        raise ValueError(f"{tuple(lam)} is not in A({s};{m},{n})")
    d = m - n
    return tuple(x - d for x in lam[:s]) + (s,) * d + tuple(lam[s:])


def _paired(lam, start, stop):
    """lam_{2i-1+start} == lam_{2i+start} for the pairs inside [start+1, stop]."""
    return all(lam[i - 1] == lam[i] for i in range(start + 1, stop, 2))


def in_B(lam, s):
    n = len(lam)
    if n % 2 == 0:
        return _paired(lam, 0, n) and ge_at(lam, 2 * s, 2 * s - 1) and le_at(lam, 2 * s + 1, 2 * s)
    # odd n: the middle coordinate 2s+1 is pinned to 2s.
    return (
        lam[2 * s] == 2 * s
        and _paired(lam, 0, 2 * s)
        and _paired(lam, 2 * s + 1, n)
    )


def in_paired(lam):
    return len(lam) % 2 == 0 and _paired(lam, 0, len(lam))


def in_Cj_aux(lam, j: Parity, n: int):
    """Auxiliary set C^j: every entry = n + 1 + j (mod 2)."""
    return is_dominant(lam) and all((x - (n + 1 + j)) % 2 == 0 for x in lam)


def in_Cj_geq(lam, j: Parity, n: int):
    """C^j_{>= n+1}: C^j with last entry at least n + 1."""
    return in_Cj_aux(lam, j, n) and (not lam or lam[-1] >= n + 1)


def in_B_aux(lam):
    """lam_{2i-1} == lam_{2i} for every pair."""
    return is_dominant(lam) and len(lam) % 2 == 0 and _paired(lam, 0, len(lam))


def in_B_geq(lam, n: int):
    """B_{>= n-1}: paired entries at least n - 1, last entry n - 1 when n is odd."""
    if not is_dominant(lam):
        return False
    L = len(lam)
    if n % 2:
        if not L or lam[-1] != n - 1:
            return False
        pairs = L - 1
    else:
        pairs = L
    return pairs % 2 == 0 and all(lam[i] == lam[i + 1] >= n - 1 for i in range(0, pairs, 2))


def member(cid: CharSetId, key) -> bool:
    """Membership of a dominant weight (or weight pair) in the set ``cid``.

    A-sets take the GL_n weight; E and S_det on general matrices take pairs.
    """
    sp = cid.space
    tag = cid.tag
    if tag == "Sdet" or (tag == "E" and sp.kind == GENERAL):
        first, second = key
        if len(first) != sp.m or len(second) != sp.n:
            raise ValueError("weight lengths do not match the space")
        if not (is_dominant(first) and is_dominant(second)):
            raise ValueError(f"non-dominant key {key!r}")
        if tag == "Sdet":
            return first == second
        return _general_E(first, second, sp.m, sp.n)
    lam = key
    if len(lam) != sp.n:
        raise ValueError(f"weight {tuple(lam)} does not have length {sp.n}")
    if not is_dominant(lam):
        raise ValueError(f"non-dominant weight {tuple(lam)}")
    if tag == "C1":
        return in_C1(lam, cid.s)
    if tag == "C2":
        return in_C2(lam, cid.s)
    if tag == "Chj":
        return in_Chj(lam, cid.h, cid.j, cid.s)
    if tag == "Z":
        return in_Z(lam, cid.s)
    if tag == "Y":
        return in_Y(lam, cid.s)
    if tag == "A":
        return in_A(lam, cid.s, sp.m)
    if tag == "B":
        return in_B(lam, cid.s)
    if tag == "E":
        return _single_E(lam, sp)
    if tag == "Ssdet":
        return all(x % 2 == 0 for x in lam)
    if tag == "SsdetHalf":
        return all(x % 2 == 1 for x in lam)
    if tag == "SPf":
        return in_paired(lam)
    raise AssertionError(tag)


def enumerate_set(cid: CharSetId, windows) -> VirtualRep:
    """All weights of ``cid`` inside the window(s), multiplicity one each.

    On general matrices ``windows`` may be one Window (used for both
    factors) or a pair (GL_m window, GL_n window).
    """
    sp = cid.space
    ws = space_windows(sp, windows)
    m, n = sp.m, sp.n
    out = {}
    if sp.arity == 1:
        w = ws[0]
        for lam in dominant_weights(n, int(w.lo), int(w.hi)):
            if member(cid, lam):
                out[lam] = 1
        return VirtualRep(out, ws, (n,))
    w1, w2 = ws
    for lam in dominant_weights(n, int(w2.lo), int(w2.hi)):
        if cid.tag == "A":
            if not in_A(lam, cid.s, m):
                continue
            first = companion_A(lam, cid.s, m, n)
        elif cid.tag == "Sdet":
            first = lam
        else:
            if lam[-1] < m:
                continue
            first = tuple(x - m + n for x in lam) + (n,) * (m - n)
        if w1.contains(first):
            out[(first, lam)] = 1
    return VirtualRep(out, ws, (m, n))


# -- the torus example ----------------------------------------------------


def torus_DI(subset: Sequence[int], e: Sequence[int]) -> bool:
    """Exponent e lies in D_I iff e_i >= 0 exactly for i in I (1-based)."""
    chosen = set(subset)
    return all((x >= 0) == (i in chosen) for i, x in enumerate(e, start=1))


def torus_enumerate(subset: Sequence[int], N: int, box: int) -> Iterator[tuple[int, ...]]:
    """Exponents of D_I inside {-box..box}^N, lexicographically."""
    chosen = set(subset)
    ranges = [range(0, box + 1) if i in chosen else range(-box, 0) for i in range(1, N + 1)]
    yield from product(*ranges)


# -- partition laws ---------------------------------------------------------


def partition_violations(cids: Sequence[CharSetId], weights, ambient=None, cover: bool = True) -> list:
    """Weights (in the ambient set) lying in zero or several of the sets.

    With ``cover=False`` only overlaps count, so this checks disjointness.
    Returns (weight, labels of the sets containing it) pairs.
    """
    out = []
    for lam in weights:
        if ambient is not None and not ambient(lam):
            continue
        hits = [c.label() for c in cids if member(c, lam)]
        if len(hits) > 1 or (cover and not hits):
            out.append((lam, hits))
    return out


def family(tag: str, space: MatrixSpace) -> list:
    """Every set of an indexed family, e.g. Z(0), ..., Z(n)."""
    top = space.half if tag == "B" else space.n
    return [CharSetId(tag, space, s) for s in range(top + 1)]


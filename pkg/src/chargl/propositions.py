"""Closed-form limits of p_{k,r} (x) E and their verification on windows.

The right-hand sides are evaluated one weight at a time as
sum_s coefficient(s) * [weight in set_s]. Symmetric coefficients come from
parity-constrained partition counts; the binomial tables are derived views.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from typing import Optional

from .charsets import in_A, in_B, in_B_geq, in_Cj_aux, in_Cj_geq, companion_A
from .euler import pushforward_sign
from .grothendieck import limit_mult, space_windows, window_keys
from .parallel import ordered_map
from .spaces import GENERAL, SKEW, SYMMETRIC, MatrixSpace
from .weights import (
    Parity,
    binom,
    conjugate,
    count_Phj,
    is_dominant,
    lambda_split,
    partitions_in_box,
    sign_sigma,
    subsets,
)


def z_index(lam) -> int:
    """The unique s with lam_s >= s + 1 >= lam_{s+1}."""
    s = 0
    while s < len(lam) and lam[s] >= s + 2:
        s += 1
    return s


def _j_class(k: int, parity: Parity) -> Parity:
    # r = k + 1 + j (mod 2)
    return Parity.of(parity - k - 1)


def symmetric_coefficient(n: int, k: int, j: Parity, h: Parity, s: int) -> int:
    """Signed coefficient of C^{h,j}_s in the symmetric limit for class j."""
    if s < n - k:
        return 0
    P = count_Phj(Parity.of(n - k + j - h), Parity.of(s + 1 - h), k - n + s, n - k)
    return -P if ((n - k) * h) % 2 else P


def _rhs_symmetric(lam, k, parity, n):
    j = _j_class(k, parity)
    s = z_index(lam)
    if s < n - k:
        return 0
    if any(not j.matches(x) for x in lam[s:]):
        return 0
    if s == 0:
        # Both parities h describe the same set here; count it once, with
        # the parity s + 1 that every C^1_s / C^2_s uses on the first block.
        h = Parity.ODD
    else:
        h = Parity.of(lam[0])
        if any(not h.matches(x) for x in lam[:s]):
            return 0
    return symmetric_coefficient(n, k, j, h, s)


def _rhs_general(key, k, m, n):
    first, second = tuple(key[0]), tuple(key[1])
    d = m - n
    total = 0
    for s in range(n - k, n + 1):
        # cheap rejection on the tail before building the companion weight
        if first[s + d:] != second[s:] or any(x != s for x in first[s:s + d]):
            continue
        if in_A(second, s, m) and companion_A(second, s, m, n) == first:
            c = binom(s, s - n + k)
            total += -c if ((m - n) * (n - k - s)) % 2 else c
    return total


def _rhs_skew(lam, k, n):
    half = n // 2
    return sum(binom(s, half - k) for s in range(half - k, half + 1) if in_B(lam, s))


def rhs_mult(key, k: int, parity: Optional[Parity], space: MatrixSpace) -> int:
    """Multiplicity of ``key`` in the closed-form right-hand side.

    ``parity`` is the class of r (symmetric matrices only). For
    skew-symmetric matrices k counts pairs.
    """
    if space.kind == SYMMETRIC:
        if not isinstance(parity, Parity):
            raise ValueError("symmetric matrices need the parity class of r")
        if not 0 <= k <= space.n:
            raise ValueError(f"need 0 <= k <= {space.n}")
        return _rhs_symmetric(key, k, parity, space.n)
    if parity is not None:
        raise ValueError(f"{space.kind} matrices take no parity class")
    if space.kind == GENERAL:
        if not 0 <= k <= space.n:
            raise ValueError(f"need 0 <= k <= {space.n}")
        return _rhs_general(key, k, space.m, space.n)
    if not 0 <= k <= space.half:
        raise ValueError(f"need 0 <= k <= {space.half}")
    return _rhs_skew(key, k, space.n)


def lhs_mult(key, k: int, parity: Optional[Parity], space: MatrixSpace) -> int:
    """Signed stabilized limit, the left-hand side."""
    return pushforward_sign(space, k) * limit_mult(key, k, space, parity)


# -- coefficient tables for symmetric matrices ------------------------------


def symmetric_terms(n: int, k: int, parity: Parity) -> dict:
    """Nonzero coefficients {(h, s): c} of the C^{h,j}_s expansion."""
    j = _j_class(k, parity)
    out = {}
    for s in range(max(n - k, 0), n + 1):
        hs = [Parity.ODD] if s == 0 else [j, j.flip()]
        for h in hs:
            c = symmetric_coefficient(n, k, j, h, s)
            if c:
                out[(h, s)] = c
    return out


def c_basis_coefficients(n: int, k: int, parity: Parity) -> dict:
    """Regroup the C^{h,j} expansion into {("C1" | "C2", s): c}.

    Uses C^1_t = C^{t+1,t+1}_t + C^{t+1,t+1}_{t+1} and C^2_s = C^{s+1,s}_s.
    Raises ValueError if the coefficients do not pair up.
    """
    j = _j_class(k, parity)
    out = {}
    halves: dict = {}
    for (h, s), c in symmetric_terms(n, k, parity).items():
        if h != j:
            if not j.matches(s):
                raise ValueError(f"unexpected term C^{{{int(h)},{int(j)}}}_{s}")
            out[("C2", s)] = c
        else:
            t = s if Parity.of(s + 1) == j else s - 1
            halves.setdefault(t, {})[s] = c
    for t in sorted(halves):
        got = halves[t]
        low = got.get(t, 0)
        high = got.get(t + 1, 0) if t + 1 <= n else low
        if t < 0 or low != high:
            raise ValueError(f"C^1_{t} halves carry {low} and {high}")
        out[("C1", t)] = low
    return out


def _printed_binom(x2: int, y2: int):
    """C(x2/2, y2/2), or None when the top argument is negative."""
    x, y = x2 // 2, y2 // 2
    if x < 0:
        return None
    return binom(x, y)


def printed_coefficients(n: int, k: int, parity: Parity) -> dict:
    """The binomial table as printed, {("C1" | "C2", s): c or None}.

    None marks an entry whose binomial has a negative argument.
    """
    d = n - k
    j = _j_class(k, parity)
    out = {}
    if j == Parity.EVEN:
        if d % 2 == 0:
            for s in range(d, n + 1):
                if s % 2 == 0:
                    out[("C2", s)] = _printed_binom(s - 2, d - 2)
            for s in range(d + 1, n + 1):
                if s % 2 == 1:
                    out[("C1", s)] = _printed_binom(s - 1, d)
        else:
            for s in range(d, n + 1):
                if s % 2 == 1:
                    out[("C1", s)] = _printed_binom(s - 1, d - 1)
            for s in range(d + 1, n + 1):
                if s % 2 == 0:
                    c = _printed_binom(s - 2, d - 1)
                    out[("C2", s)] = None if c is None else -c
    else:
        if d % 2 == 0:
            for s in range(d, n + 1):
                if s % 2 == 0:
                    out[("C1", s)] = _printed_binom(s, d)
        else:
            for s in range(d, n + 1):
                if s % 2 == 1:
                    out[("C2", s)] = _printed_binom(s - 1, d - 1)
    return out


# -- subset collections for symmetric matrices -----------------------------


def P_lambda(lam, k: int, j: Parity) -> list:
    """Subsets I of size k with lambda^1(I) in C^{k+1+j}, lambda^2(I) in C^0_{>=n+1}."""
    n = len(lam)
    out = []
    for subset in subsets(n, k):
        first, second = lambda_split(lam, subset)
        if in_Cj_aux(first, Parity.of(k + 1 + j), n) and in_Cj_geq(second, Parity.EVEN, n):
            out.append(subset)
    return out


def signed_P_lambda(lam, k: int, j: Parity) -> int:
    return sum(sign_sigma(subset, len(lam)) for subset in P_lambda(lam, k, j))


def skew_subsets(lam, k: int) -> list:
    """Subsets I of size 2k with lambda^1(I) paired and lambda^2(I) in B_{>=n-1}."""
    n = len(lam)
    out = []
    for subset in subsets(n, 2 * k):
        first, second = lambda_split(lam, subset)
        if is_dominant(first) and all(first[i] == first[i + 1] for i in range(0, 2 * k, 2)) and in_B_geq(second, n):
            out.append(subset)
    return out


def skew_box_partitions(k: int, n: int, s: int) -> list:
    """mu in P(2k, n-2k) with even conjugate parts, mu'_{n-2k} = 2m - 2s,
    and mu_i even for i > 2m - 2s (n = 2m)."""
    if n % 2:
        raise ValueError("defined for even n")
    m = n // 2
    b = n - 2 * k
    out = []
    for mu in partitions_in_box(2 * k, b):
        conj = conjugate(mu, b)
        if any(c % 2 for c in conj):
            continue
        if b and conj[b - 1] != 2 * m - 2 * s:
            continue
        if any(mu[i - 1] % 2 for i in range(2 * m - 2 * s + 1, 2 * k + 1)):
            continue
        out.append(mu)
    return out


# -- verification ----------------------------------------------------------


@dataclass
class PropReport:
    space: MatrixSpace
    k: int
    parity: Optional[Parity]
    windows: tuple
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.mismatches else "fail"

    def to_dict(self) -> dict:
        def key_json(key):
            if self.space.arity == 1:
                return list(key)
            return [list(key[0]), list(key[1])]

        return {
            "identity": "limit",
            "space": self.space.label(),
            "k": self.k,
            "parity": None if self.parity is None else int(self.parity),
            "window": [w.to_list() for w in self.windows],
            "checked": self.checked,
            "status": self.status,
            "mismatches": [
                {"weight": key_json(key), "lhs": lhs, "rhs": rhs} for key, lhs, rhs in self.mismatches
            ],
        }


def _both_sides(key, k, parity, space):
    return lhs_mult(key, k, parity, space), rhs_mult(key, k, parity, space)


def verify(
    space: MatrixSpace, k: int, parity: Optional[Parity], windows, jobs: Optional[int] = None
) -> PropReport:
    """Compare both sides for every dominant key in the window."""
    ws = space_windows(space, windows)
    keys = window_keys(space, ws)
    fn = partial(_both_sides, k=k, parity=parity, space=space)
    results = ordered_map(fn, keys, jobs)
    report = PropReport(space, k, parity, ws, checked=len(keys))
    for key, (lhs, rhs) in zip(keys, results):
        if lhs != rhs:
            report.mismatches.append((key, lhs, rhs))
    return report


def parameter_grid(space: MatrixSpace) -> list:
    """All (k, parity) pairs for which the limit identity is stated."""
    if space.kind == SYMMETRIC:
        return [(k, p) for k in range(space.n + 1) for p in (Parity.EVEN, Parity.ODD)]
    top = space.half if space.kind == SKEW else space.n
    return [(k, None) for k in range(top + 1)]


def verify_all(space: MatrixSpace, windows, jobs: Optional[int] = None) -> list:
    return [verify(space, k, p, windows, jobs) for k, p in parameter_grid(space)]

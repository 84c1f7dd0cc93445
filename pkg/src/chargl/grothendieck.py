"""Virtual representations: windowed characters, p_{k,r} tensoring, limits.

A :class:`VirtualRep` stores finitely many multiplicities together with a
window per group factor. Inside the window every stored multiplicity is the
true one; outside it nothing is stored.

Limits are never taken on truncated maps. :func:`limit_mult` evaluates the
exact multiplicity of one irreducible for a sequence of r values until it
stabilizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .spaces import GENERAL, SKEW, SYMMETRIC, MatrixSpace
from .weights import Parity, Weight, conjugate, dominant_weights, is_dominant, is_partition, straighten, subsets

BiWeight = tuple[Weight, Weight]
Key = Union[Weight, BiWeight]


class StabilizationFailure(RuntimeError):
    """Raised when a multiplicity does not become constant in r."""

    def __init__(self, key, k, message):
        super().__init__(message)
        self.key = key
        self.k = k

    def __reduce__(self):
        return (type(self), (self.key, self.k, str(self)))


@dataclass(frozen=True)
class Window:
    """Weights with lo <= lam_n and lam_1 <= hi. Bounds may be infinite."""

    lo: float = -math.inf
    hi: float = math.inf

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")

    @classmethod
    def full(cls) -> "Window":
        return cls()

    def contains(self, lam: Sequence[int]) -> bool:
        return not lam or (self.lo <= lam[-1] and lam[0] <= self.hi)

    def intersect(self, other: "Window") -> "Window":
        return Window(max(self.lo, other.lo), min(self.hi, other.hi))

    def shift(self, lo_by: float, hi_by: float) -> "Window":
        return Window(self.lo + lo_by, self.hi + hi_by)

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.lo) and math.isfinite(self.hi)

    def to_list(self) -> list:
        return [None if math.isinf(x) else int(x) for x in (self.lo, self.hi)]

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _windows(windows) -> tuple[Window, ...]:
    if isinstance(windows, Window):
        return (windows,)
    return tuple(windows)


def key_in_windows(key: Key, windows: Sequence[Window]) -> bool:
    if len(windows) == 1:
        return windows[0].contains(key)
    return all(w.contains(part) for w, part in zip(windows, key))


def _key_parts(key: Key, arity: int) -> tuple[Weight, ...]:
    return (key,) if arity == 1 else key


def sort_keys(keys: Iterable[Key]) -> list[Key]:
    return sorted(keys, reverse=True)


class VirtualRep:
    """Finitely supported integer combination of irreducibles, valid on a window.

    ``windows`` holds one :class:`Window` per group factor, so its length is
    the arity (1 for GL_n, 2 for GL_m x GL_n). Keys are weight tuples, or
    pairs of weight tuples when the arity is 2.
    """

    __slots__ = ("_entries", "windows", "lengths")

    def __init__(self, entries: Mapping[Key, int], windows=Window(), lengths: Optional[Sequence[int]] = None):
        self.windows = _windows(windows)
        arity = len(self.windows)
        if arity not in (1, 2):
            raise ValueError("arity must be 1 or 2")
        clean = {}
        for key, mult in entries.items():
            if mult == 0:
                continue
            parts = _key_parts(key, arity)
            if len(parts) != arity:
                raise ValueError(f"key {key!r} does not match arity {arity}")
            if not all(is_dominant(p) for p in parts):
                raise ValueError(f"non-dominant key {key!r}")
            if not key_in_windows(key, self.windows):
                raise ValueError(f"key {key!r} outside window")
            clean[key] = int(mult)
        if lengths is None:
            if not clean:
                raise ValueError("weight lengths are required for an empty VirtualRep")
            lengths = tuple(len(p) for p in _key_parts(next(iter(clean)), arity))
        self.lengths = tuple(lengths)
        if len(self.lengths) != arity:
            raise ValueError("lengths must have one entry per factor")
        for key in clean:
            if tuple(len(p) for p in _key_parts(key, arity)) != self.lengths:
                raise ValueError(f"key {key!r} has the wrong length")
        self._entries = clean

    @classmethod
    def truncate(cls, entries: Mapping[Key, int], windows, lengths=None) -> "VirtualRep":
        """Like the constructor, but silently drops keys outside the window."""
        ws = _windows(windows)
        return cls({k: v for k, v in entries.items() if key_in_windows(k, ws)}, ws, lengths)

    @classmethod
    def zero(cls, lengths: Sequence[int], windows=None) -> "VirtualRep":
        if windows is None:
            windows = tuple(Window() for _ in lengths)
        return cls({}, windows, lengths)

    @property
    def arity(self) -> int:
        return len(self.windows)

    @property
    def window(self) -> Window:
        if self.arity != 1:
            raise AttributeError("use .windows for a two-factor VirtualRep")
        return self.windows[0]

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def __getitem__(self, key: Key) -> int:
        if not key_in_windows(key, self.windows):
            raise KeyError(f"{key!r} is outside the window of exactness")
        return self._entries.get(key, 0)

    def get(self, key: Key, default: int = 0) -> int:
        return self._entries.get(key, default)

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(sort_keys(self._entries))

    def items(self) -> list[tuple[Key, int]]:
        return [(k, self._entries[k]) for k in sort_keys(self._entries)]

    def __eq__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return (self.windows, self.lengths, self._entries) == (other.windows, other.lengths, other._entries)

    def __hash__(self):
        return hash((self.windows, self.lengths, frozenset(self._entries.items())))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.items()[:6])
        more = ", ..." if len(self) > 6 else ""
        ws = ", ".join(str(w) for w in self.windows)
        return f"VirtualRep({{{body}{more}}}, windows=({ws}))"

    def _check_compatible(self, other: "VirtualRep"):
        if self.arity != other.arity or self.lengths != other.lengths:
            raise ValueError(
                f"incompatible virtual representations: lengths {self.lengths} vs {other.lengths}"
            )

    def restrict(self, windows) -> "VirtualRep":
        ws = tuple(a.intersect(b) for a, b in zip(self.windows, _windows(windows)))
        return VirtualRep.truncate(self._entries, ws, self.lengths)

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        self._check_compatible(other)
        ws = tuple(a.intersect(b) for a, b in zip(self.windows, other.windows))
        out: dict = {}
        for src in (self._entries, other._entries):
            for key, mult in src.items():
                if key_in_windows(key, ws):
                    out[key] = out.get(key, 0) + mult
        return VirtualRep(out, ws, self.lengths)

    def scale(self, c: int) -> "VirtualRep":
        return VirtualRep({k: c * v for k, v in self._entries.items()}, self.windows, self.lengths)

    def __rmul__(self, c: int) -> "VirtualRep":
        return self.scale(c)

    def __neg__(self) -> "VirtualRep":
        return self.scale(-1)

    def __sub__(self, other: "VirtualRep") -> "VirtualRep":
        return self + (-other)

    def is_multiplicity_free(self) -> bool:
        return all(v == 1 for v in self._entries.values())


def add(a: VirtualRep, b: VirtualRep) -> VirtualRep:
    return a + b


def scale(c: int, a: VirtualRep) -> VirtualRep:
    return a.scale(c)


# -- p_{k,r} tensoring ----------------------------------------------------


def pkr(n: int, k: int, r: int) -> VirtualRep:
    """p_{k,r}(W) = sum over |I| = k of S_{(r^I)} W, straightened."""
    out: dict = {}
    for subset in subsets(n, k):
        term = straighten(tuple(r if i + 1 in subset else 0 for i in range(n)))
        if term is not None:
            out[term.weight] = out.get(term.weight, 0) + term.sign
    return VirtualRep(out, Window(), (n,))


def _tensor_weight(lam: Weight, k: int, r: int, out: dict, mult: int):
    n = len(lam)
    for subset in subsets(n, k):
        shifted = list(lam)
        for i in subset:
            shifted[i - 1] += r
        term = straighten(shifted)
        if term is not None:
            out[term.weight] = out.get(term.weight, 0) + mult * term.sign


def tensor_pkr(M: VirtualRep, k: int, r: int, factor: int = 0) -> VirtualRep:
    """p_{k,r}(W) tensor M, acting on group factor ``factor``.

    Every S_lam contributes sum_I S_{lam + (r^I)}. An output weight nu can
    only come from keys lam with lam_1 <= nu_1 - min(r, 0) and
    lam_n >= nu_n - max(r, 0), so the window shrinks by exactly that much.
    """
    n = M.lengths[factor]
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= {n}, got k={k}")
    if k == 0:
        return M
    win = M.windows[factor]
    if k == n:
        new_win = win.shift(r, r)
    else:
        new_win = win.shift(max(r, 0), min(r, 0))
    if new_win.lo > new_win.hi:
        raise ValueError(f"window {win} too small to tensor by p_({k},{r})")
    windows = list(M.windows)
    windows[factor] = new_win
    out: dict = {}
    if M.arity == 1:
        for lam, mult in M._entries.items():
            _tensor_weight(lam, k, r, out, mult)
    else:
        for key, mult in M._entries.items():
            partial: dict = {}
            _tensor_weight(key[factor], k, r, partial, mult)
            for nu, c in partial.items():
                new_key = (nu, key[1]) if factor == 0 else (key[0], nu)
                out[new_key] = out.get(new_key, 0) + c
    return VirtualRep.truncate(out, tuple(windows), M.lengths)


# -- the character E = det(U) (x) Sym(U) ------------------------------------


def mult_in_E(key: Key, space: MatrixSpace) -> int:
    """Multiplicity (0 or 1) of an irreducible in det(U) (x) Sym(U)."""
    if space.kind == GENERAL:
        first, second = key
        if len(first) != space.m or len(second) != space.n:
            raise ValueError("weight lengths do not match the space")
        if not (is_dominant(first) and is_dominant(second)):
            raise ValueError(f"non-dominant key {key!r}")
        return int(_general_E(first, second, space.m, space.n))
    if len(key) != space.n:
        raise ValueError("weight length does not match the space")
    if not is_dominant(key):
        raise ValueError(f"non-dominant weight {key!r}")
    return int(_single_E(key, space))


def _general_E(first: Sequence[int], second: Sequence[int], m: int, n: int) -> bool:
    # Cauchy: Sym(W1 (x) W2) = sum_mu S_mu W1 (x) S_mu W2, det = S_{n^m} (x) S_{m^n}.
    if first[-1] < n or second[-1] < m:
        return False
    for i in range(n):
        if first[i] - n != second[i] - m:
            return False
    return all(first[i] == n for i in range(n, m))


def _single_E(lam: Sequence[int], space: MatrixSpace) -> bool:
    n = space.n
    if space.kind == SYMMETRIC:
        # det(Sym^2) = det^{n+1}; Sym(Sym^2 W) has all parts even.
        return lam[-1] >= n + 1 and all((x - n - 1) % 2 == 0 for x in lam)
    mu = tuple(x - (n - 1) for x in lam)
    if not is_partition(mu):
        return False
    return all(c % 2 == 0 for c in conjugate(mu))


def _subset_terms(lam: Weight, k: int, r: int) -> list[tuple[int, Weight]]:
    out = []
    for subset in subsets(len(lam), k):
        shifted = list(lam)
        for i in subset:
            shifted[i - 1] += r
        term = straighten(shifted)
        if term is not None:
            out.append(term)
    return out


def mult_pkr_E(key: Key, k: int, r: int, space: MatrixSpace) -> int:
    """Exact multiplicity of ``key`` in p_{k,r}(V) (x) E for one value of r.

    ``k`` is the subset size, i.e. the Grassmannian G(k, V). For general
    matrices both factors are tensored, p_{k,r}(V_1) (x) p_{k,r}(V_2) (x) E.
    Uses <S_lam, p_{k,r}(V) (x) E> = <S_lam (x) p_{k,r}(W), E>.
    """
    if space.kind == GENERAL:
        first, second = key
        if not 0 <= k <= space.n:
            raise ValueError(f"need 0 <= k <= n={space.n}")
        # Both sides shift total size by k*r, and E pairs sizes |a| - nm = |b| - mn.
        if sum(first) != sum(second):
            return 0
        ts1 = _subset_terms(first, k, r)
        if not ts1:
            return 0
        ts2 = _subset_terms(second, k, r)
        total = 0
        m, n = space.m, space.n
        for s1, w1 in ts1:
            for s2, w2 in ts2:
                if _general_E(w1, w2, m, n):
                    total += s1 * s2
        return total
    if not 0 <= k <= space.n:
        raise ValueError(f"need 0 <= k <= n={space.n}")
    total = 0
    for sign, w in _subset_terms(key, k, r):
        if _single_E(w, space):
            total += sign
    return total


# -- limits in r ----------------------------------------------------------


def stabilization_start(key: Key, space: MatrixSpace) -> int:
    """First r tried by :func:`limit_mult`.

    Past this value every lam(r, I) is dominant and the last entry of any
    r-shifted block clears the bottom of E, so membership depends only on
    the parity of r.
    """
    parts = _key_parts(key, space.arity)
    entries = [x for p in parts for x in p]
    top, bottom = max(entries), min(entries)
    big = max(space.lengths)
    return (top - bottom) + 2 * big + 4 + max(0, big + 1 - bottom)


def limit_mult(
    key: Key,
    k: int,
    space: MatrixSpace,
    parity: Optional[Parity] = None,
    r_max: Optional[int] = None,
) -> int:
    """Stable value of <key, p_{k,r}(V) (x) E> as r grows.

    For symmetric matrices ``parity`` (the class of r mod 2) is required.
    For skew-symmetric matrices ``k`` counts pairs: the tensor factor is
    p_{2k,r}(V).
    """
    if space.kind == SYMMETRIC:
        if parity is None:
            raise ValueError("symmetric matrices need the parity class of r")
    elif parity is not None:
        raise ValueError(f"{space.kind} matrices take no parity class")
    subset_size = 2 * k if space.kind == SKEW else k
    if space.kind == SKEW and not 0 <= k <= space.half:
        raise ValueError(f"need 0 <= k <= {space.half}")
    if subset_size == 0:
        return mult_pkr_E(key, 0, 0, space)
    if space.kind == GENERAL and sum(key[0]) != sum(key[1]):
        return 0  # the pairing with E preserves |first| - |second| for every r
    step = 2 if parity is not None else 1

    def fix(r: int) -> int:
        if parity is not None and not parity.matches(r):
            r += 1
        return r

    r = fix(stabilization_start(key, space))
    limit = max(1024 * space.n, 4 * r) if r_max is None else r_max
    while True:
        a = mult_pkr_E(key, subset_size, r, space)
        b = mult_pkr_E(key, subset_size, r + step, space)
        if a == b:
            return a
        r = fix(2 * r)
        if r > limit:
            raise StabilizationFailure(
                key, k, f"multiplicity of {key} still varies at r={r} (k={k}, {space.label()})"
            )


# -- Fourier transform ----------------------------------------------------


def _dual_twist(lam: Weight, d: int) -> Weight:
    return tuple(d - x for x in reversed(lam))


def fourier_key(key: Key, space: MatrixSpace) -> Key:
    twists = space.fourier_twist
    if space.arity == 1:
        return _dual_twist(key, twists[0])
    return (_dual_twist(key[0], twists[0]), _dual_twist(key[1], twists[1]))


def fourier_windows(windows: Sequence[Window], space: MatrixSpace) -> tuple[Window, ...]:
    return tuple(Window(d - w.hi, d - w.lo) for d, w in zip(space.fourier_twist, windows))


def fourier(M: VirtualRep, space: MatrixSpace) -> VirtualRep:
    """M -> det(U^*) (x) M^*, i.e. S_lam -> S_{d - reverse(lam)} factorwise."""
    if M.arity != space.arity or M.lengths != space.lengths:
        raise ValueError(f"character does not live on {space.label()}")
    out = {fourier_key(key, space): mult for key, mult in M._entries.items()}
    return VirtualRep(out, fourier_windows(M.windows, space), M.lengths)


def space_windows(space: MatrixSpace, windows) -> tuple[Window, ...]:
    """Normalize a window argument to one bounded Window per factor."""
    ws = _windows(windows)
    if space.arity == 2 and len(ws) == 1:
        ws = ws * 2
    if len(ws) != space.arity:
        raise ValueError("window count does not match the space")
    for w in ws:
        if not w.bounded:
            raise ValueError("a bounded window is required")
    return ws


def window_keys(space: MatrixSpace, windows) -> list[Key]:
    """Every dominant key inside the windows, lexicographically descending."""
    ws = space_windows(space, windows)
    if space.arity == 1:
        return list(dominant_weights(space.n, int(ws[0].lo), int(ws[0].hi)))
    firsts = list(dominant_weights(space.m, int(ws[0].lo), int(ws[0].hi)))
    seconds = list(dominant_weights(space.n, int(ws[1].lo), int(ws[1].hi)))
    return [(a, b) for a in firsts for b in seconds]


def from_predicate(
    predicate: Callable[[Key], bool], keys: Iterable[Key], windows, lengths
) -> VirtualRep:
    return VirtualRep({k: 1 for k in keys if predicate(k)}, windows, lengths)

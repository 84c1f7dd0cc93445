"""Simple equivariant D-modules on matrix spaces, through their characters.

Support and local-system labels are inert metadata. Everything checked
here is a statement about weight multiplicities on a finite window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .charsets import CharSetId, companion_A, enumerate_set, member
from .grothendieck import VirtualRep, Window, fourier, fourier_windows, space_windows
from .spaces import GENERAL, SKEW, SYMMETRIC, MatrixSpace

FAMILIES = {GENERAL: "A", SKEW: "B", SYMMETRIC: "C"}


@dataclass(frozen=True)
class DModuleId:
    space: MatrixSpace
    family: str
    s: int
    j: Optional[int] = None

    def __post_init__(self):
        sp = self.space
        want = FAMILIES[sp.kind]
        if self.family != want:
            raise ValueError(f"{sp.label()} carries family {want}, not {self.family!r}")
        top = sp.half if self.family == "B" else sp.n
        if not 0 <= self.s <= top:
            raise ValueError(f"family {self.family} needs 0 <= s <= {top}, got {self.s}")
        if self.family == "C":
            if self.j not in (1, 2):
                raise ValueError("family C needs j in {1, 2}")
            if self.s == sp.n and self.j == 2:
                # C^1_n and C^2_n are the same module
                object.__setattr__(self, "j", 1)
        elif self.j is not None:
            raise ValueError(f"family {self.family} takes no j")

    @property
    def label(self) -> str:
        if self.family == "C":
            return f"C^{self.j}_{self.s}"
        return f"{self.family}_{self.s}"

    @property
    def support(self) -> str:
        sp = self.space
        if self.family == "A":
            return f"M_{sp.n - self.s}"
        if self.family == "B":
            return f"M^skew_{sp.half - self.s}"
        if self.s == sp.n:
            return "{0}"
        return f"M^symm_{sp.n - self.s}"

    @property
    def local_system(self) -> str:
        if self.family == "C" and self.s < self.space.n and (self.j - self.s) % 2 == 1:
            return "1/2"
        return "trivial"

    def charset(self) -> CharSetId:
        if self.family == "A":
            return CharSetId("A", self.space, self.s)
        if self.family == "B":
            return CharSetId("B", self.space, self.s)
        return CharSetId("C1" if self.j == 1 else "C2", self.space, self.s)

    def to_dict(self) -> dict:
        return {
            "module": self.label,
            "family": self.family,
            "s": self.s,
            "j": self.j,
            "support": self.support,
            "local_system": self.local_system,
        }


def simple_modules(space: MatrixSpace) -> list[DModuleId]:
    """All simple equivariant D-modules on the space, C^j_n listed once."""
    fam = FAMILIES[space.kind]
    if fam == "A":
        return [DModuleId(space, "A", s) for s in range(space.n + 1)]
    if fam == "B":
        return [DModuleId(space, "B", s) for s in range(space.half + 1)]
    out = []
    for s in range(space.n + 1):
        for j in (1, 2):
            if s == space.n and j == 2:
                continue
            out.append(DModuleId(space, "C", s, j))
    return out


def module_from_label(space: MatrixSpace, label: str) -> DModuleId:
    for mod in simple_modules(space):
        if mod.label == label:
            return mod
    raise ValueError(f"no module {label!r} on {space.label()}")


def character(mod: DModuleId, windows) -> VirtualRep:
    return enumerate_set(mod.charset(), windows)


# -- composition series ----------------------------------------------------


def _localization_sets(space: MatrixSpace) -> list:
    """(name, ambient set, module parts) for each decomposition identity."""
    out = []
    if space.kind == GENERAL:
        if space.m == space.n:
            out.append(("S_det", CharSetId("Sdet", space), simple_modules(space)))
    elif space.kind == SYMMETRIC:
        n = space.n
        even = [DModuleId(space, "C", 0, 2)] + [DModuleId(space, "C", s, 1) for s in range(1, n + 1, 2)]
        odd = [DModuleId(space, "C", s, 1) for s in range(0, n + 1, 2)]
        out.append(("S_sdet", CharSetId("Ssdet", space), even))
        out.append(("S_sdet*sdet^(1/2)", CharSetId("SsdetHalf", space), odd))
    elif space.n % 2 == 0:
        out.append(("S_Pf", CharSetId("SPf", space), simple_modules(space)))
    return out


def _key_json(key, arity):
    return list(key) if arity == 1 else [list(key[0]), list(key[1])]


def composition_report(space: MatrixSpace, windows) -> dict:
    """Check each localization equals the sum of its factors, each once."""
    ws = space_windows(space, windows)
    identities = []
    for name, ambient, parts in _localization_sets(space):
        whole = enumerate_set(ambient, ws)
        total = VirtualRep.zero(space.lengths, ws)
        for mod in parts:
            total = total + character(mod, ws)
        first = None
        for key in sorted(set(whole.entries) | set(total.entries), reverse=True):
            if whole.get(key) != 1 or total.get(key) != 1:
                first = {"weight": _key_json(key, space.arity), "expected": whole.get(key), "got": total.get(key)}
                break
        identities.append(
            {
                "identity": f"{name} = " + " + ".join(m.label for m in parts),
                "checked": len(whole),
                "status": "pass" if first is None else "fail",
                "first_failure": first,
            }
        )
    return {
        "space": space.label(),
        "window": [w.to_list() for w in ws],
        "status": "pass" if all(i["status"] == "pass" for i in identities) else "fail",
        "identities": identities,
    }


# -- Fourier transform -----------------------------------------------------


def claimed_fourier_maps(space: MatrixSpace) -> dict:
    """The two candidate index maps for symmetric matrices, in canonical labels.

    "C1_to_n-s-1" sends C^1_s to C^1_{n-s-1} and C^2_s to C^2_{n-s};
    "C1_to_n-s" sends C^1_s to C^1_{n-s} and C^2_s to C^2_{n-s-1}.
    """
    if space.kind != SYMMETRIC:
        return {}
    n = space.n

    def lab(s, j):
        return DModuleId(space, "C", s, j).label

    first = {}
    second = {}
    for s in range(n + 1):
        if s <= n - 1:
            first[lab(s, 1)] = lab(n - s - 1, 1)
            second[lab(s, 2)] = lab(n - s - 1, 2)
        first.setdefault(lab(s, 2), lab(n - s, 2))
        second.setdefault(lab(s, 1), lab(n - s, 1))
    return {"C1_to_n-s-1": first, "C1_to_n-s": second}


def fourier_permutation(space: MatrixSpace, windows) -> dict:
    """Match the transform of every simple character against all of them."""
    ws = space_windows(space, windows)
    image_ws = fourier_windows(ws, space)
    mods = simple_modules(space)
    targets = [(mod, character(mod, image_ws)) for mod in mods]
    table = []
    for mod in mods:
        image = fourier(character(mod, ws), space)
        hits = [t.label for t, ch in targets if ch == image]
        table.append(
            {
                "module": mod.label,
                "image": hits[0] if len(hits) == 1 else None,
                "matches": hits,
            }
        )
    images = [row["image"] for row in table]
    bijective = None not in images and len(set(images)) == len(mods)
    return {
        "space": space.label(),
        "window": [w.to_list() for w in ws],
        "table": table,
        "bijective": bijective,
        "claimed": claimed_fourier_maps(space),
    }


# -- b-functions -----------------------------------------------------------


@dataclass(frozen=True)
class BFunction:
    name: str
    roots: tuple

    def __post_init__(self):
        if any(r >= 0 for r in self.roots):
            raise ValueError("b-function roots are negative")

    def degree(self) -> int:
        return len(self.roots)

    def __call__(self, x) -> Fraction:
        out = Fraction(1)
        for r in self.roots:
            out *= Fraction(x) - r
        return out

    def to_dict(self) -> dict:
        return {"name": self.name, "roots": [str(r) for r in self.roots]}


def bfunction(space: MatrixSpace) -> BFunction:
    n = space.n
    if space.kind == SYMMETRIC:
        return BFunction("sdet", tuple(-Fraction(1 + i, 2) for i in range(1, n + 1)))
    if space.kind == GENERAL:
        if space.m != n:
            raise ValueError("the determinant needs square matrices")
        return BFunction("det", tuple(Fraction(-i) for i in range(1, n + 1)))
    if n % 2:
        raise ValueError("the Pfaffian needs even n")
    return BFunction("Pf", tuple(Fraction(-(2 * i - 1)) for i in range(1, n // 2 + 1)))


# -- SL-invariant sections -------------------------------------------------


def sl_invariant_levels(mod: DModuleId, window: Window) -> list[int]:
    """Levels c in the window with (c^n) in the character.

    On general matrices c is the GL_n level; it counts when some
    ((c1^m), (c^n)) with c1 in the window lies in the character.
    """
    sp = mod.space
    cid = mod.charset()
    lo, hi = int(window.lo), int(window.hi)
    out = []
    for c in range(lo, hi + 1):
        if sp.arity == 1:
            if member(cid, (c,) * sp.n):
                out.append(c)
        elif any(_general_has(cid, sp, c1, c) for c1 in range(lo, hi + 1)):
            out.append(c)
    return out


def _general_has(cid, sp, c1, c):
    second = (c,) * sp.n
    if not member(cid, second):
        return False
    return companion_A(second, cid.s, sp.m, sp.n) == (c1,) * sp.m

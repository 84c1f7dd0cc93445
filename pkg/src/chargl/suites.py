"""Verification suites shared by the command line and the tests.

Every check yields a JSON-ready record with a ``status`` of pass, fail or
info. Info records carry computed facts that are not asserted.
"""

from __future__ import annotations

import random
from typing import Iterator, Optional

from . import charsets, dmodchar, euler, oracle, propositions
from .grothendieck import VirtualRep, Window, pkr, space_windows, tensor_pkr
from .spaces import GENERAL, SKEW, SYMMETRIC, MatrixSpace
from .weights import Parity, count_Phj, dominant_weights, enumerate_Phj, sign_sigma, straighten

SUITES = ("propositions", "composition", "levasseur", "partitions", "lemmas", "oracle")


def _record(suite, identity, ok, checked=None, first_failure=None, **extra):
    rec = {"suite": suite, "identity": identity, "status": "pass" if ok else "fail"}
    if checked is not None:
        rec["checked"] = checked
    rec["first_failure"] = first_failure
    rec.update(extra)
    return rec


def _json_key(key):
    if key and isinstance(key[0], tuple):
        return [list(p) for p in key]
    return list(key)


def run_propositions(space, windows, k=None, parity=None, jobs=None) -> Iterator[dict]:
    grid = propositions.parameter_grid(space)
    if k is not None:
        grid = [(kk, p) for kk, p in grid if kk == k]
    if parity is not None:
        grid = [(kk, p) for kk, p in grid if p == parity]
    if not grid:
        raise ValueError("no (k, parity) pair matches the selection")
    for kk, p in grid:
        rep = propositions.verify(space, kk, p, windows, jobs)
        d = rep.to_dict()
        first = d["mismatches"][0] if d["mismatches"] else None
        label = f"limit identity k={kk}" + ("" if p is None else f" r={int(p)} mod 2")
        yield _record("propositions", label, rep.status == "pass", rep.checked, first, mismatches=len(rep.mismatches))


def run_composition(space, windows) -> Iterator[dict]:
    rep = dmodchar.composition_report(space, windows)
    if not rep["identities"]:
        yield {"suite": "composition", "identity": "no localization identity on this space", "status": "info"}
    for ident in rep["identities"]:
        yield _record("composition", ident["identity"], ident["status"] == "pass", ident["checked"], ident["first_failure"])
    # distinct simple characters never share a weight
    mods = dmodchar.simple_modules(space)
    seen: dict = {}
    clash = None
    for mod in mods:
        for key in dmodchar.character(mod, windows).entries:
            if key in seen and clash is None:
                clash = {"weight": _json_key(key), "modules": [seen[key], mod.label]}
            seen[key] = mod.label
    yield _record("composition", "simple characters are pairwise disjoint", clash is None, len(seen), clash)


def run_levasseur(space, window: Window) -> Iterator[dict]:
    for mod in dmodchar.simple_modules(space):
        levels = dmodchar.sl_invariant_levels(mod, window)
        if space.kind == SYMMETRIC and mod.j == 2 and 1 <= mod.s <= space.n - 1:
            yield _record("levasseur", f"{mod.label} has no SL-invariant level", not levels, levels=levels)
        elif mod.family == "B" or (mod.family == "A" and space.m == space.n):
            yield _record("levasseur", f"{mod.label} has an SL-invariant level", bool(levels), levels=levels)
        else:
            yield {"suite": "levasseur", "identity": f"SL-invariant levels of {mod.label}", "status": "info", "levels": levels}


def _weights(space, window):
    return list(dominant_weights(space.n, int(window.lo), int(window.hi)))


def run_partitions(space, window: Window) -> Iterator[dict]:
    weights = _weights(space, window)

    def rec(name, viol, checked):
        first = None if not viol else {"weight": list(viol[0][0]), "sets": viol[0][1]}
        return _record("partitions", name, not viol, checked, first)

    if space.kind != GENERAL:
        for tag in ("Z", "Y"):
            viol = charsets.partition_violations(charsets.family(tag, space), weights)
            yield rec(f"{tag}(0..{space.n}) partition the dominant weights", viol, len(weights))
    if space.kind == GENERAL:
        fam = charsets.family("A", space)
        cover = space.m == space.n
        viol = charsets.partition_violations(fam, weights, cover=cover)
        what = "partition" if cover else "are disjoint on"
        yield rec(f"A(0..{space.n}) {what} the GL_n weights", viol, len(weights))
        if not cover:
            missed = [w for w in weights if not any(charsets.member(c, w) for c in fam)]
            yield {
                "suite": "partitions",
                "identity": "GL_n weights outside every A(s)",
                "status": "info",
                "count": len(missed),
                "example": list(missed[0]) if missed else None,
            }
    if space.kind == SKEW:
        fam = charsets.family("B", space)
        if space.n % 2 == 0:
            viol = charsets.partition_violations(fam, weights, ambient=charsets.in_paired)
            yield rec(f"B(0..{space.half}) partition the paired weights", viol, len(weights))
        else:
            viol = charsets.partition_violations(fam, weights, cover=False)
            yield rec(f"B(0..{space.half}) are disjoint", viol, len(weights))
    if space.kind == SYMMETRIC:
        n = space.n
        bad = None
        for t in range(n + 1):
            h = Parity.of(t + 1)
            c1 = charsets.CharSetId("C1", space, t)
            c2 = charsets.CharSetId("C2", space, t)
            for lam in weights:
                low = charsets.in_Chj(lam, h, h, t)
                high = t + 1 <= n and charsets.in_Chj(lam, h, h, t + 1)
                ok = charsets.member(c1, lam) == (low or high) and not (low and high)
                ok = ok and charsets.member(c2, lam) == charsets.in_Chj(lam, h, h.flip(), t)
                if not ok:
                    bad = {"weight": list(lam), "s": t}
                    break
            if bad:
                break
        yield _record("partitions", "C^1_s, C^2_s split into C^{h,j} strata", bad is None, len(weights), bad)


def run_lemmas(space, window: Window) -> Iterator[dict]:
    n = space.n
    bad = None
    cases = 0
    for nn in range(1, min(n, 5) + 1):
        for k in range(nn + 1):
            for r in range(7):
                cases += 1
                if euler.pkr_from_forms(k, nn, r) != pkr(nn, k, r) and bad is None:
                    bad = {"n": nn, "k": k, "r": r}
    yield _record("lemmas", "p_{k,r} equals the alternating sum of twisted forms", bad is None, cases, bad)

    bad = None
    cases = 0
    for h in Parity:
        for j in Parity:
            for a in range(11):
                for b in range(11):
                    cases += 1
                    if count_Phj(h, j, a, b) != len(enumerate_Phj(h, j, a, b)) and bad is None:
                        bad = {"h": int(h), "j": int(j), "a": a, "b": b}
    yield _record("lemmas", "parity-constrained partition counts", bad is None, cases, bad)

    if space.kind == SYMMETRIC:
        yield from _symmetric_lemmas(space, window)
    if space.kind == SKEW and n % 2 == 0:
        bad = None
        cases = 0
        for k in range(n // 2 + 1):
            for s in range(n // 2 - k, n // 2 + 1):
                for mu in propositions.skew_box_partitions(k, n, s):
                    cases += 1
                    if sum(mu) % 2 and bad is None:
                        bad = {"k": k, "s": s, "mu": list(mu)}
        yield _record("lemmas", "skew box partitions have even size", bad is None, cases, bad)


def _symmetric_lemmas(space, window):
    n = space.n
    bad_table = None
    undefined = []
    for k in range(n + 1):
        for p in Parity:
            cb = propositions.c_basis_coefficients(n, k, p)
            for key, val in propositions.printed_coefficients(n, k, p).items():
                if val is None:
                    undefined.append({"k": k, "parity": int(p), "term": list(key), "computed": cb.get(key, 0)})
                elif cb.get(key, 0) != val and bad_table is None:
                    bad_table = {"k": k, "parity": int(p), "term": list(key), "printed": val, "computed": cb.get(key, 0)}
            extra = [key for key in cb if key not in propositions.printed_coefficients(n, k, p)]
            if extra and bad_table is None:
                bad_table = {"k": k, "parity": int(p), "unprinted": [list(x) for x in extra]}
    yield _record("lemmas", "binomial tables agree with partition counts where defined", bad_table is None,
                  first_failure=bad_table, undefined=undefined)

    if n > 5:
        return
    weights = _weights(space, window)
    bad_cancel = None
    bad_biject = None
    checked = 0
    for lam in weights:
        s = propositions.z_index(lam)
        mixed = any((lam[i] - lam[i + 1]) % 2 for i in range(max(s - 1, 0)))
        for k in range(1, n + 1):
            for j in Parity:
                checked += 1
                if mixed:
                    if propositions.signed_P_lambda(lam, k, j) != 0 and bad_cancel is None:
                        bad_cancel = {"weight": list(lam), "k": k, "j": int(j)}
                    continue
                if s < n - k or any(not j.matches(x) for x in lam[s:]):
                    continue
                hs = [Parity.of(lam[0])] if s else list(Parity)
                for h in hs:
                    Ps = propositions.P_lambda(lam, k, j)
                    want = count_Phj(Parity.of(n - k + j - h), Parity.of(s + 1 - h), k - n + s, n - k)
                    sign = -1 if ((n - k) * (k + h)) % 2 else 1
                    ok = len(Ps) == want and all(sign_sigma(I, n) == sign for I in Ps)
                    if not ok and bad_biject is None:
                        bad_biject = {"weight": list(lam), "k": k, "j": int(j), "h": int(h), "size": len(Ps), "count": want}
    yield _record("lemmas", "mixed-parity weights cancel in the signed subset sum", bad_cancel is None, checked, bad_cancel)
    yield _record("lemmas", "subset collections match parity-constrained partitions", bad_biject is None, checked, bad_biject)


def run_oracle(space, seed: int = 0, instances: int = 200, points: int = 5) -> Iterator[dict]:
    rng = random.Random(seed)
    top = min(space.n, 4)
    bad = {"straighten": None, "pieri": None, "generalized pieri": None}
    for _ in range(instances):
        n = rng.randint(1, top)
        lam = tuple(rng.randint(-6, 6) for _ in range(n))
        pts = [oracle.random_point(n, rng) for _ in range(points)]
        term = straighten(lam)
        for pt in pts:
            lhs = oracle.schur_eval(lam, pt)
            rhs = 0 if term is None else term.sign * oracle.schur_eval(term.weight, pt)
            if lhs != rhs and bad["straighten"] is None:
                bad["straighten"] = {"weight": list(lam)}
        dom = tuple(sorted(lam, reverse=True))
        k = rng.randint(0, n)
        r = rng.randint(0, 5)
        single = VirtualRep({dom: 1}, Window(), (n,))
        pieri = tensor_pkr(single, k, 1)
        gen = tensor_pkr(single, k, r)
        for pt in pts:
            s_lam = oracle.schur_eval(dom, pt)
            if oracle.elementary(k, pt.coords) * s_lam != oracle.vrep_eval(pieri, pt) and bad["pieri"] is None:
                bad["pieri"] = {"weight": list(dom), "k": k}
            if oracle.pkr_eval(k, r, pt) * s_lam != oracle.vrep_eval(gen, pt) and bad["generalized pieri"] is None:
                bad["generalized pieri"] = {"weight": list(dom), "k": k, "r": r}
    for name, first in bad.items():
        yield _record("oracle", f"{name} agrees with bialternant evaluation", first is None, instances, first, seed=seed)


def run_suite(name, space: MatrixSpace, windows, *, k=None, parity: Optional[Parity] = None,
              jobs=None, seed: int = 0) -> Iterator[dict]:
    """Run one suite (or "all"). Single-factor checks use the GL_n window."""
    ws = space_windows(space, windows)
    window = ws[-1]
    if name == "all":
        for sub in SUITES:
            yield from run_suite(sub, space, ws, k=k, parity=parity, jobs=jobs, seed=seed)
        return
    if name == "propositions":
        yield from run_propositions(space, ws, k, parity, jobs)
    elif name == "composition":
        yield from run_composition(space, ws)
    elif name == "levasseur":
        yield from run_levasseur(space, window)
    elif name == "partitions":
        yield from run_partitions(space, window)
    elif name == "lemmas":
        yield from run_lemmas(space, window)
    elif name == "oracle":
        yield from run_oracle(space, seed)
    else:
        raise ValueError(f"unknown suite {name!r}")

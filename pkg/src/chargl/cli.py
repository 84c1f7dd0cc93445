"""Command-line front end.

Every command writes records (JSON Lines by default) followed by one
summary record. Exit codes: 0 success, 2 invalid parameters, 3 a check
failed, 4 a multiplicity failed to stabilize.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional

from . import charsets, dmodchar, euler, propositions, suites
from .grothendieck import StabilizationFailure, Window
from .parallel import default_jobs
from .spaces import GENERAL, SKEW, SYMMETRIC, MatrixSpace
from .weights import Parity

EXIT_OK, EXIT_INVALID, EXIT_FAIL, EXIT_UNSTABLE = 0, 2, 3, 4


class InvalidConfig(ValueError):
    pass


# -- output ----------------------------------------------------------------


class Writer:
    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self._header = None

    def record(self, rec: dict):
        if self.fmt == "jsonl":
            self.out.write(json.dumps(rec, separators=(",", ":")) + "\n")
            return
        cols = list(rec)
        if cols != self._header:
            self.out.write("\t".join(cols) + "\n")
            self._header = cols
        self.out.write("\t".join(_tsv_cell(rec[c]) for c in cols) + "\n")

    def summary(self, rec: dict):
        if self.fmt == "jsonl":
            self.record({"summary": rec})
        else:
            self.out.write("#summary\t" + json.dumps(rec, separators=(",", ":")) + "\n")


def _tsv_cell(v) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v, separators=(",", ":"))


def _key_json(key, arity: int):
    return list(key) if arity == 1 else [list(key[0]), list(key[1])]


# -- argument handling -----------------------------------------------------


def parse_window(text: str) -> Window:
    m = re.fullmatch(r"\s*(-?\d+)\s*:\s*(-?\d+)\s*", text or "")
    if not m:
        raise InvalidConfig(f"window must look like lo:hi, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise InvalidConfig(f"empty window {text!r}")
    return Window(lo, hi)


def _space(args) -> MatrixSpace:
    if args.n is None:
        raise InvalidConfig("--n is required")
    try:
        if args.space == GENERAL:
            if args.m is None:
                raise InvalidConfig("--m is required for general matrices")
            return MatrixSpace(GENERAL, args.n, args.m)
        if args.m is not None and args.m != args.n:
            raise InvalidConfig(f"--m is not used for {args.space} matrices")
        return MatrixSpace(args.space, args.n)
    except InvalidConfig:
        raise
    except ValueError as exc:
        raise InvalidConfig(str(exc))


def _windows(args, space, required=True):
    if args.window is None:
        if required:
            raise InvalidConfig("--window lo:hi is required")
        return None
    w = parse_window(args.window)
    if space.arity == 2:
        wm = parse_window(args.window_m) if getattr(args, "window_m", None) else w
        return (wm, w)
    return (w,)


def _parity(text) -> Optional[Parity]:
    if text is None:
        return None
    if text in ("0", "even"):
        return Parity.EVEN
    if text in ("1", "odd"):
        return Parity.ODD
    raise InvalidConfig(f"parity must be 0/even or 1/odd, got {text!r}")


def _preprocess(argv):
    """Let option values start with '-', as in ``--window -4:6``."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in ("--window", "--window-m") and i + 1 < len(argv) and re.fullmatch(r"-\d.*", argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def _add_space(p, need_n=True):
    p.add_argument("--space", choices=(GENERAL, SYMMETRIC, SKEW), required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int, required=need_n)


def _add_common(p, window=True):
    if window:
        p.add_argument("--window", help="lo:hi bounds for the weights")
        p.add_argument("--window-m", help="separate lo:hi for the GL_m factor")
    p.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chargl", description="Characters of equivariant D-modules on matrix spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("character", help="list the weights of a simple character")
    _add_space(p)
    _add_common(p)
    p.add_argument("--family", choices=("A", "B", "C"), required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--j", type=int)

    p = sub.add_parser("verify", help="run a verification suite")
    _add_space(p)
    _add_common(p)
    p.add_argument("--suite", choices=suites.SUITES + ("all",), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--parity", help="class of r mod 2 (symmetric matrices)")
    p.add_argument("--jobs", type=int)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("fourier", help="match Fourier transforms of the simple characters")
    _add_space(p)
    _add_common(p)

    p = sub.add_parser("bfunction", help="roots of the b-function")
    _add_space(p)
    _add_common(p, window=False)

    p = sub.add_parser("limit", help="signed stabilized limit of p_{k,r} (x) E")
    _add_space(p)
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", choices=euler.VARIANTS)
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("torus", help="the torus example: sign patterns of exponents")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--subset", help="comma-separated 1-based indices; lists its exponents")
    p.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
    return parser


# -- commands --------------------------------------------------------------


def cmd_character(args, w: Writer) -> int:
    space = _space(args)
    ws = _windows(args, space)
    try:
        mod = dmodchar.DModuleId(space, args.family, args.s, args.j)
    except ValueError as exc:
        raise InvalidConfig(str(exc))
    ch = dmodchar.character(mod, ws)
    for key, mult in ch.items():
        w.record({"weight": _key_json(key, space.arity), "mult": mult})
    summary = mod.to_dict()
    summary.update({"space": space.label(), "window": [x.to_list() for x in ws], "count": len(ch)})
    w.summary(summary)
    return EXIT_OK


def cmd_verify(args, w: Writer) -> int:
    space = _space(args)
    ws = _windows(args, space)
    parity = _parity(args.parity)
    if parity is not None and space.kind != SYMMETRIC:
        raise InvalidConfig("--parity applies to symmetric matrices only")
    if args.k is not None:
        ks = {k for k, _ in propositions.parameter_grid(space)}
        if args.k not in ks:
            raise InvalidConfig(f"k={args.k} is out of range for {space.label()}")
    passed = failed = info = 0
    try:
        for rec in suites.run_suite(args.suite, space, ws, k=args.k, parity=parity, jobs=args.jobs, seed=args.seed):
            w.record(rec)
            if rec["status"] == "pass":
                passed += 1
            elif rec["status"] == "fail":
                failed += 1
            else:
                info += 1
    except InvalidConfig:
        raise
    except ValueError as exc:
        raise InvalidConfig(str(exc))
    except StabilizationFailure as exc:
        w.summary({"suite": args.suite, "status": "unstable", "weight": _key_json(exc.key, space.arity),
                   "k": exc.k, "message": str(exc)})
        return EXIT_UNSTABLE
    status = "pass" if failed == 0 else "fail"
    w.summary({"suite": args.suite, "space": space.label(), "window": [x.to_list() for x in ws],
               "passed": passed, "failed": failed, "info": info, "status": status})
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_fourier(args, w: Writer) -> int:
    space = _space(args)
    ws = _windows(args, space)
    rep = dmodchar.fourier_permutation(space, ws)
    for row in rep["table"]:
        w.record(row)
    w.summary({"space": rep["space"], "window": rep["window"], "bijective": rep["bijective"],
               "claimed": rep["claimed"]})
    return EXIT_OK if rep["bijective"] else EXIT_FAIL


def cmd_bfunction(args, w: Writer) -> int:
    space = _space(args)
    try:
        b = dmodchar.bfunction(space)
    except ValueError as exc:
        raise InvalidConfig(str(exc))
    for r in b.roots:
        w.record({"root": str(r), "mult": 1})
    w.summary({"space": space.label(), "name": b.name, "degree": b.degree()})
    return EXIT_OK


def cmd_limit(args, w: Writer) -> int:
    space = _space(args)
    ws = _windows(args, space)
    variant = args.variant or ("M0" if space.kind == SYMMETRIC else "plain")
    try:
        euler.variant_parity(space, args.k, variant)
        top = space.half if space.kind == SKEW else space.n
        if not 0 <= args.k <= top:
            raise ValueError(f"need 0 <= k <= {top}")
    except ValueError as exc:
        raise InvalidConfig(str(exc))
    try:
        ch = euler.pushforward_euler(space, args.k, variant, ws, args.jobs)
    except StabilizationFailure as exc:
        w.summary({"status": "unstable", "weight": _key_json(exc.key, space.arity), "message": str(exc)})
        return EXIT_UNSTABLE
    for key, mult in ch.items():
        w.record({"weight": _key_json(key, space.arity), "mult": mult})
    w.summary({"space": space.label(), "k": args.k, "variant": variant, "sign": euler.pushforward_sign(space, args.k),
               "window": [x.to_list() for x in ws], "count": len(ch)})
    return EXIT_OK


def cmd_torus(args, w: Writer) -> int:
    N, box = args.N, args.box
    if N < 1 or box < 0:
        raise InvalidConfig("need N >= 1 and box >= 0")
    if args.subset is not None:
        try:
            subset = tuple(int(x) for x in args.subset.split(",") if x.strip())
        except ValueError:
            raise InvalidConfig(f"bad subset {args.subset!r}")
        if any(not 1 <= i <= N for i in subset) or len(set(subset)) != len(subset):
            raise InvalidConfig(f"subset must hold distinct indices in 1..{N}")
        count = 0
        for e in charsets.torus_enumerate(sorted(subset), N, box):
            w.record({"exponent": list(e)})
            count += 1
        w.summary({"N": N, "box": box, "subset": sorted(subset), "count": count})
        return EXIT_OK
    from itertools import combinations

    total = 0
    for k in range(N + 1):
        for subset in combinations(range(1, N + 1), k):
            size = sum(1 for _ in charsets.torus_enumerate(subset, N, box))
            total += size
            w.record({"subset": list(subset), "size": size})
    ok = total == (2 * box + 1) ** N
    w.summary({"N": N, "box": box, "total": total, "box_size": (2 * box + 1) ** N, "partition": ok})
    return EXIT_OK if ok else EXIT_FAIL


def _resolve_jobs(args):
    if not hasattr(args, "jobs"):
        return
    if args.jobs is None:
        try:
            args.jobs = default_jobs()
        except ValueError as exc:
            raise InvalidConfig(str(exc))
    if args.jobs < 1:
        raise InvalidConfig("--jobs must be positive")


COMMANDS = {
    "character": cmd_character,
    "verify": cmd_verify,
    "fourier": cmd_fourier,
    "bfunction": cmd_bfunction,
    "limit": cmd_limit,
    "torus": cmd_torus,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_preprocess(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    w = Writer(args.format, out)
    try:
        _resolve_jobs(args)
        return COMMANDS[args.command](args, w)
    except InvalidConfig as exc:
        print(f"chargl: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entry() -> None:
    sys.exit(main())

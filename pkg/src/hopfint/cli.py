"""Command-line front end.

Exit status: 0 success, 1 a mathematical check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from . import endo, integrals as I
from .builtins import BUILTIN_NAMES, builtin
from .diagram import builtin_diagram, evaluate, parse_diagram
from .errors import InputError, MathError, TheoremViolation
from .hopf import HopfAlgebra, dump_algebra, read_algebra, verify_axioms
from .scalars import FieldSpec
from .suite import check_paper


class _Out:
    def __init__(self, stream=None):
        self.stream = stream or sys.stdout
        env = os.environ.get("HOPFINT_COLOR")
        isatty = getattr(self.stream, "isatty", lambda: False)()
        self.color = env != "0" and (env == "1" or isatty)

    def write(self, text: str = "") -> None:
        self.stream.write(text + "\n")

    def status(self, ok: bool) -> str:
        word = "PASS" if ok else "FAIL"
        if not self.color:
            return word
        return f"\033[{32 if ok else 31}m{word}\033[0m"

    def json(self, obj) -> None:
        self.stream.write(json.dumps(obj, ensure_ascii=False, sort_keys=False) + "\n")


def _matrix_lines(M: np.ndarray) -> list[str]:
    cells = [[str(x) for x in row] for row in M]
    if not cells:
        return []
    width = max(len(c) for row in cells for c in row)
    return ["  " + " ".join(c.rjust(width) for c in row) for row in cells]


def _nested(arr: np.ndarray):
    return np.vectorize(str, otypes=[object])(np.asarray(arr, dtype=object)).tolist()


_SYM = {(side, where): I.IntegralSpace(side, where, []).symbol for side in I.SIDES for where in I.WHERE}


def _load(path: str, verify: bool = True) -> HopfAlgebra:
    return read_algebra(path, verify=verify)


# commands


def cmd_verify(args, out: _Out) -> int:
    H = _load(args.file, verify=False)
    rep = verify_axioms(H)
    if args.machine:
        out.json(rep.to_dict())
    else:
        out.write(f"{H.name} over {H.field}, dim {H.n}")
        for c in rep.checks:
            line = f"  {c.code} {c.name}: {out.status(c.passed)}"
            if not c.passed:
                line += f" at {list(c.counterexample or ())} ({c.detail})"
            out.write(line)
        if not rep.passed:
            out.write(f"axiom failed: {', '.join(f'{c.code} {c.name}' for c in rep.failures())}")
    return 0 if rep.passed else 1


def cmd_integrals(args, out: _Out) -> int:
    H = _load(args.file)
    spaces = [I.integral_space(H, side, where) for where in I.WHERE for side in I.SIDES]
    pairs = []
    status = 0
    for lam_side, Lam_side in (("right", "left"), ("right", "right")):
        try:
            pairs.append(I.normalized_pair(H, lam_side, Lam_side))
        except TheoremViolation as exc:
            pairs.append(exc)
            status = 1
    if args.machine:
        out.json({
            "algebra": H.name,
            "field": str(H.field),
            "spaces": [
                {"symbol": sp.symbol, "side": sp.side, "where": sp.where, "dim": sp.dim, "basis": [_nested(v) for v in sp.basis]}
                for sp in spaces
            ],
            "pairs": [
                {"error": str(p)} if isinstance(p, Exception) else
                {"sides": list(p.sides), "lambda": _nested(p.lam), "Lambda": _nested(p.Lam), "pairing": str(p.pairing)}
                for p in pairs
            ],
        })
        return status
    out.write(f"{H.name} over {H.field}, dim {H.n}")
    for sp in spaces:
        basis = ", ".join(H.label(v, dual=sp.where == "dual") for v in sp.basis)
        out.write(f"  {sp.symbol} ({sp.side} {sp.where}): dim {sp.dim}, basis {{{basis}}}")
    for p in pairs:
        if isinstance(p, Exception):
            out.write(f"  pair: {p}")
        else:
            out.write(
                f"  pair λ∈{_SYM[p.sides[0], 'dual']}, Λ∈{_SYM[p.sides[1], 'algebra']}: λ = {H.label(p.lam, dual=True)}, "
                f"Λ = {H.label(p.Lam)}, λ(Λ) = {p.pairing}"
            )
    return status


def cmd_kuperberg(args, out: _Out) -> int:
    H = _load(args.file)
    P, Q = I.kuperberg_P(H), I.trace_Q(H)
    tr = endo.trace(P)
    if args.machine:
        out.json({"algebra": H.name, "field": str(H.field), "P": _nested(P), "Q": _nested(Q), "trace_P": str(tr)})
    else:
        out.write("P =")
        for line in _matrix_lines(P):
            out.write(line)
        out.write("Q =")
        for line in _matrix_lines(Q):
            out.write(line)
        out.write(f"tr P = {tr}")
    return 0


def cmd_check_paper(args, out: _Out) -> int:
    H = _load(args.file, verify=False)
    rep = check_paper(H)
    if args.machine:
        out.json(rep.to_dict())
    else:
        out.write(f"{H.name} over {H.field}, dim {H.n}")
        width = max(len(r.id) for r in rep.results)
        for r in rep.results:
            line = f"  {r.id.ljust(width)}  {out.status(r.passed)}"
            if r.counterexample is not None:
                line += f" at {list(r.counterexample)}"
            if r.detail:
                line += f"  {r.detail}"
            out.write(line)
        failed = rep.failures()
        out.write(f"{len(rep.results) - len(failed)}/{len(rep.results)} identities hold")
    return 0 if rep.passed else 1


def _read_diagram(spec: str):
    if spec.startswith("builtin:") and not Path(spec).exists():
        return builtin_diagram(spec.split(":", 1)[1])
    return parse_diagram(Path(spec).read_text(encoding="utf-8"))


def _read_binding(H: HopfAlgebra, text: str) -> tuple[str, np.ndarray]:
    if "=" not in text:
        raise InputError(f"binding {text!r} is not of the form name=FILE")
    name, path = text.split("=", 1)
    try:
        rows = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(f"{path}: expected a JSON array of rows")
    return name, H.field.array([[H.field(str(x)) for x in row] for row in rows])


def cmd_eval(args, out: _Out) -> int:
    H = _load(args.algebra, verify=False)
    d = _read_diagram(args.diagram)
    bindings = dict(_read_binding(H, b) for b in args.bindings)
    tv = evaluate(H, d, bindings)
    if args.machine:
        out.json({"diagram": d.name, "inputs": tv.inputs, "outputs": tv.outputs, "tensor": tv.to_nested()})
    elif tv.inputs == tv.outputs == 0:
        out.write(str(tv.scalar))
    else:
        out.write(f"{d.name} : {tv.inputs} -> {tv.outputs}")
        for line in _matrix_lines(tv.as_matrix()):
            out.write(line)
    return 0


def cmd_builtin(args, out: _Out) -> int:
    F = FieldSpec.parse(args.field)
    H = builtin(args.name, F, args.n)
    out.stream.write(dump_algebra(H))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfint", description="Exact integrals and tensor diagrams for finite-dimensional Hopf algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--machine", action="store_true", help="emit one JSON document")
        return p

    add("verify", cmd_verify, "check the Hopf algebra axioms").add_argument("file")
    add("integrals", cmd_integrals, "bases of the four integral spaces and normalized pairs").add_argument("file")
    add("kuperberg", cmd_kuperberg, "print P, Q and tr P").add_argument("file")
    add("check-paper", cmd_check_paper, "run every integral identity and diagram cross-check").add_argument("file")
    p = add("eval", cmd_eval, "evaluate a diagram file")
    p.add_argument("algebra")
    p.add_argument("diagram", help="diagram file, or builtin:NAME")
    p.add_argument("bindings", nargs="*", metavar="name=ENDOFILE")
    p = add("builtin", cmd_builtin, "emit a builtin algebra document")
    p.add_argument("name", help=", ".join(BUILTIN_NAMES))
    p.add_argument("--field", default="rational", help="rational or prime:P")
    p.add_argument("--n", type=int, default=None, help="Taft parameter")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    out = _Out()
    try:
        return args.func(args, out)
    except MathError as exc:
        print(f"hopfint: {exc}", file=sys.stderr)
        return 1
    except (InputError, OSError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        print(f"hopfint: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

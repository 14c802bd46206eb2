"""Hopf algebras given by structure constants.

Index layout (0-based, shared by every module):

* ``m[l, i, j]``     coefficient of a_l in a_i a_j
* ``delta[l, i, j]`` coefficient of a_i ⊗ a_j in Δ(a_l)
* ``s[i, j]``        coefficient of a_i in s(a_j)
* ``unit[i]``        coordinates of 1_A
* ``counit[j]``      ε(a_j)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Any, Sequence

import numpy as np

from . import linalg
from .errors import AlgebraFormatError, AxiomError, DimensionError
from .scalars import FieldSpec, ScalarParseError, parse_scalar


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    name: str
    field: FieldSpec
    basis: tuple[str, ...]
    m: np.ndarray
    delta: np.ndarray
    s: np.ndarray
    unit: np.ndarray
    counit: np.ndarray

    def __post_init__(self):
        n = len(self.basis)
        if n == 0:
            raise DimensionError("dimension must be positive")
        if len(set(self.basis)) != n:
            raise DimensionError("basis labels must be distinct")
        shapes = {
            "m": (self.m, (n, n, n)),
            "delta": (self.delta, (n, n, n)),
            "s": (self.s, (n, n)),
            "unit": (self.unit, (n,)),
            "counit": (self.counit, (n,)),
        }
        for label, (arr, shape) in shapes.items():
            if np.shape(arr) != shape:
                raise DimensionError(f"{label} has shape {np.shape(arr)}, expected {shape}")
            object.__setattr__(self, label, _freeze(self.field.coerce_array(np.asarray(arr, dtype=object))))
        object.__setattr__(self, "basis", tuple(self.basis))

    @property
    def n(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"HopfAlgebra({self.name!r}, n={self.n}, field={self.field})"

    # elements

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.n)
        v[i] = self.field.one
        return v

    def dual_basis(self, i: int) -> np.ndarray:
        return self.basis_vector(i)

    def element(self, terms: dict[str, Any]) -> np.ndarray:
        """Vector from ``{label: coefficient}``, e.g. ``{"x": 1, "gx": -1}``."""
        v = self.field.zeros(self.n)
        for label, c in terms.items():
            v[self.basis.index(label)] += self.field(c)
        return v

    def covector(self, terms: dict[str, Any]) -> np.ndarray:
        return self.element(terms)

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return linalg.contract("lij,i,j->l", self.m, x, y)

    def coproduct(self, x: np.ndarray) -> np.ndarray:
        """Δ(x) as an n×n array of coefficients of a_i ⊗ a_j."""
        return linalg.contract("lij,l->ij", self.delta, x)

    def antipode(self, x: np.ndarray) -> np.ndarray:
        return self.s @ x

    def eps(self, x: np.ndarray):
        return self.counit @ x

    def tensor_mul(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Product in A⊗A of two n×n coefficient arrays."""
        return linalg.contract("pq,rt,xpr,yqt->xy", X, Y, self.m, self.m)

    @cached_property
    def s_inv(self) -> np.ndarray:
        return _freeze(linalg.inverse(self.s, self.field))

    def label(self, v: np.ndarray, dual: bool = False) -> str:
        """Human-readable linear combination, e.g. ``x - gx``."""
        parts = []
        for c, b in zip(v, self.basis):
            if c == 0:
                continue
            name = b + "*" if dual else b
            if name.startswith("-"):
                name = f"({name})"
            if c == 1:
                term = name
            elif c == -1:
                term = "-" + name
            else:
                term = f"{c}·{name}"
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def same_structure(h: HopfAlgebra, k: HopfAlgebra) -> bool:
    """Equal structure constants and field (names and labels ignored)."""
    if h.field != k.field or h.n != k.n:
        return False
    return all(
        linalg.arrays_equal(getattr(h, a), getattr(k, a))
        for a in ("m", "delta", "s", "unit", "counit")
    )


# axioms


@dataclass
class AxiomCheck:
    code: str
    name: str
    passed: bool
    counterexample: tuple[int, ...] | None = None
    detail: str = ""


@dataclass
class AxiomReport:
    algebra: str
    checks: list[AxiomCheck] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, code: str) -> AxiomCheck:
        for c in self.checks:
            if c.code == code:
                return c
        raise KeyError(code)

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "passed": self.passed,
            "checks": [
                {
                    "id": c.code,
                    "name": c.name,
                    "status": "pass" if c.passed else "fail",
                    "counterexample": list(c.counterexample) if c.counterexample else None,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


def _compare(pairs: list[tuple[str, np.ndarray, np.ndarray]]) -> tuple[bool, tuple | None, str]:
    for what, lhs, rhs in pairs:
        bad = linalg.first_mismatch(lhs, rhs)
        if bad is not None:
            return False, bad, what
    return True, None, ""


def verify_axioms(H: HopfAlgebra) -> AxiomReport:
    """Check the seven axiom families exhaustively over basis index tuples."""
    F = H.field
    n = H.n
    m, d, s, u, e = H.m, H.delta, H.s, H.unit, H.counit
    ident = F.identity(n)
    report = AxiomReport(H.name)

    def add(code, name, pairs):
        ok, idx, what = _compare(pairs)
        report.checks.append(AxiomCheck(code, name, ok, idx, what))

    # (a_i a_j) a_k = a_i (a_j a_k), indexed [i, j, k, u]
    add("A1", "associativity", [(
        "m(m⊗1) = m(1⊗m)",
        linalg.contract("lij,ulk->ijku", m, m),
        linalg.contract("uil,ljk->ijku", m, m),
    )])
    add("A2", "unit", [
        ("m(1_A⊗η) = 1_A", linalg.contract("lij,j->li", m, u), ident),
        ("m(η⊗1_A) = 1_A", linalg.contract("lij,i->lj", m, u), ident),
    ])
    # indexed [x, i, j, k]
    add("A3", "coassociativity", [(
        "(Δ⊗1)Δ = (1⊗Δ)Δ",
        linalg.contract("xlk,lij->xijk", d, d),
        linalg.contract("xil,ljk->xijk", d, d),
    )])
    add("A4", "counit", [
        ("(ε⊗1)Δ = 1_A", linalg.contract("lij,i->jl", d, e), ident),
        ("(1⊗ε)Δ = 1_A", linalg.contract("lij,j->il", d, e), ident),
    ])
    # Δ(a_i a_j)[x, y] vs Δ(a_i)Δ(a_j)[x, y], indexed [i, j, x, y]
    lhs = linalg.contract("lij,lxy->ijxy", m, d)
    rhs = linalg.contract("ipq,jrt,xpr,yqt->ijxy", d, d, m, m)
    add("A5", "coproduct is an algebra map", [
        ("Δ(ab) = Δ(a)Δ(b)", lhs, rhs),
        ("Δ(1) = 1⊗1", linalg.contract("l,lxy->xy", u, d), np.multiply.outer(u, u)),
    ])
    add("A6", "counit is an algebra map", [
        ("ε(ab) = ε(a)ε(b)", linalg.contract("lij,l->ij", m, e), np.multiply.outer(e, e)),
        ("ε(1) = 1", np.array([e @ u], dtype=object), np.array([F.one], dtype=object)),
    ])
    # (s⋆1)[x, l] and (1⋆s)[x, l]
    eta_eps = np.multiply.outer(u, e)
    add("A7", "antipode", [
        ("s⋆1 = η∘ε", linalg.contract("lij,ki,xkj->xl", d, s, m), eta_eps),
        ("1⋆s = η∘ε", linalg.contract("lij,kj,xik->xl", d, s, m), eta_eps),
    ])
    if report.checks[-1].passed and not linalg.is_invertible(s):
        report.checks[-1] = AxiomCheck("A7", "antipode", False, None, "antipode matrix is singular")
    return report


def require_axioms(H: HopfAlgebra) -> HopfAlgebra:
    report = verify_axioms(H)
    if not report.passed:
        bad = report.failures()[0]
        raise AxiomError(
            f"{bad.name} axiom failed for {H.name} ({bad.detail}) at indices {bad.counterexample}",
            report,
        )
    return H


# derived algebras


def dual(H: HopfAlgebra) -> HopfAlgebra:
    """H* on the dual basis: product from Δ, coproduct from m, antipode sᵀ."""
    return HopfAlgebra(
        name=f"dual({H.name})",
        field=H.field,
        basis=tuple(b + "*" for b in H.basis),
        m=H.delta.copy(),
        delta=H.m.copy(),
        s=H.s.T.copy(),
        unit=H.counit.copy(),
        counit=H.unit.copy(),
    )


def variant(H: HopfAlgebra, which: str) -> HopfAlgebra:
    """A^op, A^cop or A^opcop."""
    if which not in ("op", "cop", "opcop", "id"):
        raise ValueError(f"unknown variant {which!r}")
    if which == "id":
        return H
    flip_m = which in ("op", "opcop")
    flip_d = which in ("cop", "opcop")
    return HopfAlgebra(
        name=f"{H.name}^{which}",
        field=H.field,
        basis=H.basis,
        m=H.m.transpose(0, 2, 1).copy() if flip_m else H.m.copy(),
        delta=H.delta.transpose(0, 2, 1).copy() if flip_d else H.delta.copy(),
        s=H.s.copy() if which == "opcop" else H.s_inv.copy(),
        unit=H.unit.copy(),
        counit=H.counit.copy(),
    )


# file format


def _coeff(raw: Any, F: FieldSpec, where: str):
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise AlgebraFormatError(f"{where}: coefficient must be a string or integer, got {raw!r}")
    try:
        return parse_scalar(str(raw), F)
    except (ScalarParseError, ZeroDivisionError) as exc:
        raise AlgebraFormatError(f"{where}: {exc}") from None


def _sparse(entries: Any, rank: int, n: int, F: FieldSpec, key: str) -> np.ndarray:
    if not isinstance(entries, list):
        raise AlgebraFormatError(f"{key} must be a list of sparse entries")
    out = F.zeros((n,) * rank)
    for pos, entry in enumerate(entries):
        where = f"{key}[{pos}]"
        if not isinstance(entry, list) or len(entry) != rank + 1:
            raise AlgebraFormatError(f"{where}: expected {rank} indices and a coefficient")
        idx = entry[:rank]
        for i in idx:
            if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < n:
                raise AlgebraFormatError(f"{where}: index {i!r} out of range 0..{n - 1}")
        out[tuple(idx)] += _coeff(entry[rank], F, where)
    return out


def _dense_vector(values: Any, n: int, F: FieldSpec, key: str) -> np.ndarray:
    if not isinstance(values, list) or len(values) != n:
        raise AlgebraFormatError(f"{key} must list exactly {n} coefficients")
    return F.array([_coeff(v, F, f"{key}[{i}]") for i, v in enumerate(values)])


def algebra_from_dict(doc: dict, verify: bool = True) -> HopfAlgebra:
    if not isinstance(doc, dict):
        raise AlgebraFormatError("algebra document must be a JSON object")
    missing = [k for k in ("name", "field", "dim", "basis", "m", "delta", "s", "unit", "counit") if k not in doc]
    if missing:
        raise AlgebraFormatError(f"missing fields: {', '.join(missing)}")
    try:
        F = FieldSpec.from_json(doc["field"]) if isinstance(doc["field"], dict) else FieldSpec.parse(str(doc["field"]))
    except ValueError as exc:
        raise AlgebraFormatError(f"field: {exc}") from None
    n = doc["dim"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise AlgebraFormatError(f"dim must be a positive integer, got {n!r}")
    basis = doc["basis"]
    if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) for b in basis):
        raise AlgebraFormatError(f"basis must be a list of {n} strings")
    if len(set(basis)) != n:
        raise AlgebraFormatError("basis labels must be distinct")
    H = HopfAlgebra(
        name=str(doc["name"]),
        field=F,
        basis=tuple(basis),
        m=_sparse(doc["m"], 3, n, F, "m"),
        delta=_sparse(doc["delta"], 3, n, F, "delta"),
        s=_sparse(doc["s"], 2, n, F, "s"),
        unit=_dense_vector(doc["unit"], n, F, "unit"),
        counit=_dense_vector(doc["counit"], n, F, "counit"),
    )
    return require_axioms(H) if verify else H


def load_algebra(document: str | dict, verify: bool = True) -> HopfAlgebra:
    """Parse an algebra document (JSON text or already-decoded dict)."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise AlgebraFormatError(f"invalid JSON: {exc}") from None
    return algebra_from_dict(document, verify=verify)  # type: ignore[arg-type]


def read_algebra(path: str, verify: bool = True) -> HopfAlgebra:
    with open(path, encoding="utf-8") as fh:
        return load_algebra(fh.read(), verify=verify)


def _entries(arr: np.ndarray) -> list[list]:
    return [[*map(int, idx), str(v)] for idx, v in np.ndenumerate(arr) if v != 0]


def algebra_to_dict(H: HopfAlgebra) -> dict:
    return {
        "name": H.name,
        "field": H.field.to_json(),
        "dim": H.n,
        "basis": list(H.basis),
        "m": _entries(H.m),
        "delta": _entries(H.delta),
        "s": _entries(H.s),
        "unit": [str(v) for v in H.unit],
        "counit": [str(v) for v in H.counit],
    }


def dump_algebra(H: HopfAlgebra) -> str:
    """Deterministic JSON text, one sparse entry per line."""
    doc = algebra_to_dict(H)
    lines = ["{"]
    keys = list(doc)
    for k, key in enumerate(keys):
        comma = "," if k < len(keys) - 1 else ""
        value = doc[key]
        if key in ("m", "delta", "s") and value:
            lines.append(f"  {json.dumps(key)}: [")
            for e, entry in enumerate(value):
                sep = "," if e < len(value) - 1 else ""
                lines.append(f"    {json.dumps(entry, ensure_ascii=False)}{sep}")
            lines.append(f"  ]{comma}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def basis_labels(H: HopfAlgebra, idx: Sequence[int]) -> list[str]:
    return [H.basis[i] for i in idx]

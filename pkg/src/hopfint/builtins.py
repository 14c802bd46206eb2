"""Builtin example algebras: group algebras, Sweedler's algebra, Taft algebras."""

from __future__ import annotations

import itertools
from typing import Callable, Hashable, Sequence

import numpy as np

from . import linalg
from .errors import UnknownBuiltinError
from .hopf import HopfAlgebra, require_axioms
from .scalars import QQ, FieldSpec

GROUPS = ("c2", "c4", "c2c2", "c8", "s3", "d4", "q8")
BUILTIN_NAMES = ("trivial", *(f"group:{g}" for g in GROUPS), "sweedler", "taft")


def group_algebra(
    name: str,
    labels: Sequence[str],
    table: Sequence[Sequence[int]],
    field: FieldSpec = QQ,
    verify: bool = True,
) -> HopfAlgebra:
    """k[G] from a Cayley table ``table[i][j] = index of g_i g_j``.

    The table is not checked for being a group beyond locating a two-sided
    identity and inverses; associativity failures show up in the axiom report.
    """
    n = len(labels)
    F = field
    try:
        e = next(i for i in range(n) if all(table[i][j] == j and table[j][i] == j for j in range(n)))
    except StopIteration:
        raise ValueError(f"{name}: Cayley table has no identity") from None
    m = F.zeros((n, n, n))
    delta = F.zeros((n, n, n))
    s = F.zeros((n, n))
    for i in range(n):
        delta[i, i, i] = F.one
        for j in range(n):
            m[table[i][j], i, j] = F.one
        inv = [j for j in range(n) if table[i][j] == e]
        if not inv:
            raise ValueError(f"{name}: element {labels[i]} has no inverse")
        s[inv[0], i] = F.one
    unit = F.zeros(n)
    unit[e] = F.one
    counit = F.array([1] * n)
    H = HopfAlgebra(name, F, tuple(labels), m, delta, s, unit, counit)
    return require_axioms(H) if verify else H


def _table(elements: list[Hashable], op: Callable) -> list[list[int]]:
    index = {g: i for i, g in enumerate(elements)}
    return [[index[op(a, b)] for b in elements] for a in elements]


def _cyclic(k: int) -> tuple[list[str], list[list[int]]]:
    labels = ["e", "a"] + [f"a^{i}" for i in range(2, k)]
    return labels[:k], _table(list(range(k)), lambda a, b: (a + b) % k)


def _klein() -> tuple[list[str], list[list[int]]]:
    els = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return ["e", "a", "b", "ab"], _table(els, lambda x, y: (x[0] ^ y[0], x[1] ^ y[1]))


def _s3() -> tuple[list[str], list[list[int]]]:
    # permutations of {1,2,3} in one-line notation; (στ)(i) = σ(τ(i))
    els = [(1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2)]
    labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
    return labels, _table(els, lambda a, b: tuple(a[b[i] - 1] for i in range(3)))


def _d4() -> tuple[list[str], list[list[int]]]:
    # r^i s^j with s r = r^-1 s
    els = [(i, j) for j in range(2) for i in range(4)]
    labels = ["e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"]
    return labels, _table(els, lambda a, b: ((a[0] + (-1) ** a[1] * b[0]) % 4, a[1] ^ b[1]))


_QUAT = {  # unit products without sign: (x, y) -> (sign, z)
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _q8() -> tuple[list[str], list[list[int]]]:
    els = [(sg, u) for u in "1ijk" for sg in (1, -1)]
    labels = [("" if sg == 1 else "-") + u for sg, u in els]

    def op(a, b):
        sg, u = _QUAT[(a[1], b[1])]
        return (a[0] * b[0] * sg, u)

    return labels, _table(els, op)


_GROUP_TABLES: dict[str, Callable[[], tuple[list[str], list[list[int]]]]] = {
    "c2": lambda: _cyclic(2),
    "c4": lambda: _cyclic(4),
    "c8": lambda: _cyclic(8),
    "c2c2": _klein,
    "s3": _s3,
    "d4": _d4,
    "q8": _q8,
}


def primitive_root_of_unity(n: int, field: FieldSpec):
    """Smallest ω in 2..p-1 of multiplicative order exactly n."""
    if field.kind != "prime":
        raise ValueError("roots of unity are only searched in prime fields")
    p = field.p
    if (p - 1) % n != 0:  # type: ignore[operator]
        raise ValueError(f"no primitive root of unity of order {n} in GF({p}): {n} does not divide {p - 1}")
    for w in range(2, p):  # type: ignore[arg-type]
        if pow(w, n, p) == 1 and all(pow(w, k, p) != 1 for k in range(1, n)):
            return field(w)
    raise ValueError(f"no primitive root of unity of order {n} in GF({p})")


def _monomial(a: int, b: int) -> str:
    g = "" if a == 0 else ("g" if a == 1 else f"g^{a}")
    x = "" if b == 0 else ("x" if b == 1 else f"x^{b}")
    return (g + x) or "1"


def taft_algebra(n: int, omega, field: FieldSpec, name: str | None = None, verify: bool = True) -> HopfAlgebra:
    """Taft algebra T_n(ω): basis g^a x^b (index a + n·b), g^n = 1, x^n = 0, xg = ω gx."""
    F = field
    omega = F(omega)
    N = n * n

    def idx(a: int, b: int) -> int:
        return a % n + n * b

    labels = [_monomial(a, b) for b in range(n) for a in range(n)]
    m = F.zeros((N, N, N))
    # g^a x^b · g^c x^d = ω^{bc} g^{a+c} x^{b+d}
    for a, b, c, d in itertools.product(range(n), repeat=4):
        if b + d < n:
            m[idx(a + c, b + d), idx(a, b), idx(c, d)] = omega ** (b * c)

    unit = F.zeros(N)
    unit[idx(0, 0)] = F.one
    counit = F.zeros(N)
    for a in range(n):
        counit[idx(a, 0)] = F.one

    def vec(i: int) -> np.ndarray:
        v = F.zeros(N)
        v[i] = F.one
        return v

    def mul(x, y):
        return linalg.contract("lij,i,j->l", m, x, y)

    def tmul(X, Y):
        return linalg.contract("pq,rt,xpr,yqt->xy", X, Y, m, m)

    one, g, x = vec(idx(0, 0)), vec(idx(1, 0)), vec(idx(0, 1))
    dg = np.multiply.outer(g, g)
    dx = np.multiply.outer(x, one) + np.multiply.outer(g, x)
    sg = vec(idx(n - 1, 0))
    sx = -mul(vec(idx(n - 1, 0)), x)

    delta = F.zeros((N, N, N))
    s = F.zeros((N, N))
    for a in range(n):
        for b in range(n):
            D = np.multiply.outer(one, one)
            for _ in range(a):
                D = tmul(D, dg)
            for _ in range(b):
                D = tmul(D, dx)
            delta[idx(a, b)] = D
            # s is an anti-homomorphism: s(g^a x^b) = s(x)^b s(g)^a
            S = one
            for _ in range(b):
                S = mul(S, sx)
            for _ in range(a):
                S = mul(S, sg)
            s[:, idx(a, b)] = S
    H = HopfAlgebra(name or f"taft({n})", F, tuple(labels), m, delta, s, unit, counit)
    return require_axioms(H) if verify else H


def sweedler(field: FieldSpec = QQ) -> HopfAlgebra:
    if field.characteristic == 2:
        raise ValueError("Sweedler's algebra needs characteristic different from 2")
    return taft_algebra(2, -1, field, name="sweedler")


def taft(n: int, field: FieldSpec) -> HopfAlgebra:
    if n < 2:
        raise ValueError("taft requires n >= 2")
    if field.kind != "prime":
        raise ValueError("taft(n) is only available over GF(p) with n | p-1")
    return taft_algebra(n, primitive_root_of_unity(n, field), field)


def trivial(field: FieldSpec = QQ) -> HopfAlgebra:
    one = field.array
    return HopfAlgebra(
        "trivial", field, ("1",),
        one([[[1]]]), one([[[1]]]), one([[1]]), one([1]), one([1]),
    )


def builtin(name: str, field: FieldSpec = QQ, n: int | None = None) -> HopfAlgebra:
    """One of :data:`BUILTIN_NAMES`; ``n`` is the Taft parameter."""
    if name == "trivial":
        return trivial(field)
    if name.startswith("group:"):
        key = name.split(":", 1)[1]
        if key not in _GROUP_TABLES:
            raise UnknownBuiltinError(f"unknown group {key!r}; known: {', '.join(GROUPS)}")
        labels, table = _GROUP_TABLES[key]()
        return group_algebra(name, labels, table, field)
    if name == "sweedler":
        return sweedler(field)
    if name == "taft":
        if n is None:
            raise ValueError("taft requires the parameter n")
        return taft(n, field)
    raise UnknownBuiltinError(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def group_table(key: str) -> tuple[list[str], list[list[int]]]:
    """Labels and Cayley table of a builtin group."""
    return _GROUP_TABLES[key]()

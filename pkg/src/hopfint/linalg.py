"""Exact Gaussian elimination on object arrays of field elements.

Every routine works for any field whose elements support ``+ - * /`` and
compare equal to ``0``; no pivoting heuristics are needed because the
arithmetic is exact.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DimensionError
from .scalars import Residue


def _nonzero_mask(a: np.ndarray) -> np.ndarray:
    return np.array([x != 0 for x in a.flat], dtype=bool).reshape(a.shape)


def rref(mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = np.array(mat, dtype=object, copy=True)
    if a.ndim != 2:
        raise DimensionError("rref expects a matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        inv = 1 / a[r, c]
        a[r] = a[r] * inv
        for i in range(rows):
            if i != r and a[i, c] != 0:
                a[i] = a[i] - a[i, c] * a[r]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat: np.ndarray) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat)[1])


def nullspace(mat: np.ndarray, field) -> list[np.ndarray]:
    """Basis of ``{x : mat @ x = 0}`` in canonical form.

    The basis vectors are the rows of the reduced echelon form of the
    nullspace, so each has a leading 1 at its first nonzero coordinate and
    the result does not depend on how the system was written down.
    """
    mat = np.asarray(mat, dtype=object)
    cols = mat.shape[1]
    if mat.shape[0] == 0:
        basis = [field.identity(cols)[i] for i in range(cols)]
    else:
        r, pivots = rref(mat)
        free = [c for c in range(cols) if c not in pivots]
        basis = []
        for f in free:
            v = field.zeros(cols)
            v[f] = field.one
            for row, pc in enumerate(pivots):
                v[pc] = -r[row, f]
            basis.append(v)
    return canonical_basis(basis, field)


def canonical_basis(vectors: list[np.ndarray], field) -> list[np.ndarray]:
    """Reduced echelon basis of the span of ``vectors``."""
    if not vectors:
        return []
    r, pivots = rref(np.array(vectors, dtype=object))
    return [r[i] for i in range(len(pivots))]


def inverse(mat: np.ndarray, field) -> np.ndarray:
    n, m = mat.shape
    if n != m:
        raise DimensionError("only square matrices can be inverted")
    aug = np.concatenate([np.asarray(mat, dtype=object), field.identity(n)], axis=1)
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return r[:, n:]


def is_invertible(mat: np.ndarray) -> bool:
    return mat.shape[0] == mat.shape[1] and rank(mat) == mat.shape[0]


def rank_factorization(mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``mat = cols @ rows`` with ``cols`` n×r and ``rows`` r×m, r = rank.

    ``cols`` are the pivot columns of ``mat`` and ``rows`` the nonzero rows of
    its reduced echelon form, so r is minimal.
    """
    r, pivots = rref(mat)
    return np.asarray(mat, dtype=object)[:, pivots], r[: len(pivots)]


def matrix_power(mat: np.ndarray, k: int, field) -> np.ndarray:
    if k < 0:
        return matrix_power(inverse(mat, field), -k, field)
    result = field.identity(mat.shape[0])
    base = mat
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def matrix_order(mat: np.ndarray, field, limit: int = 10_000) -> int:
    """Smallest k >= 1 with ``mat**k == 1``; raises if none up to ``limit``."""
    ident = field.identity(mat.shape[0])
    cur = mat
    for k in range(1, limit + 1):
        if arrays_equal(cur, ident):
            return k
        cur = cur @ mat
    raise ValueError(f"matrix order exceeds {limit}")


def arrays_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return first_mismatch(a, b) is None and np.shape(a) == np.shape(b)


def first_mismatch(a: np.ndarray, b: np.ndarray) -> tuple[int, ...] | None:
    """Index of the first differing entry, or None when the arrays agree."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")
    for idx in np.ndindex(a.shape):
        if a[idx] != b[idx]:
            return tuple(int(i) for i in idx)
    return None


def is_zero(a: np.ndarray) -> bool:
    return not _nonzero_mask(np.asarray(a, dtype=object)).any()


def scalar_multiple(a: np.ndarray, b: np.ndarray):
    """Return c with ``a == c * b`` if one exists (b nonzero), else None."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    nz = np.argwhere(_nonzero_mask(b))
    if len(nz) == 0:
        return None
    idx = tuple(nz[0])
    c = a[idx] / b[idx]
    return c if arrays_equal(a, c * b) else None


# Contractions.  Over GF(p) the work is done on machine integers and reduced
# once at the end; over the rationals numpy's object loops call mpq directly.

_INT64_LIMIT = 2 ** 62


def _prime_of(ops) -> int | None:
    for op in ops:
        arr = np.asarray(op, dtype=object)
        if arr.size:
            x = arr.flat[0]
            return x.p if type(x) is Residue else None
    return None


_value = np.frompyfunc(lambda r: r.value if type(r) is Residue else r, 1, 1)


def _to_ints(arr: np.ndarray, dtype) -> np.ndarray:
    arr = np.asarray(arr, dtype=object)
    return _value(arr).astype(dtype) if arr.ndim else np.asarray(_value(arr), dtype=dtype)


def _from_ints(arr, p: int) -> np.ndarray:
    arr = np.asarray(arr)
    out = np.empty(arr.shape, dtype=object)
    flat = out.reshape(-1)
    for k, v in enumerate(arr.reshape(-1).tolist()):
        flat[k] = Residue._raw(v % p, p)
    return out


def _letters(spec: str, ops) -> dict[str, int]:
    ins = spec.split("->")[0].split(",")
    dims: dict[str, int] = {}
    for term, op in zip(ins, ops):
        for ch, d in zip(term.strip(), np.shape(op)):
            dims[ch] = d
    return dims


def contract(spec: str, *ops) -> np.ndarray:
    """``np.einsum`` for exact scalars, with a fast integer path over GF(p)."""
    p = _prime_of(ops)
    if p is None:
        return np.einsum(spec, *ops, optimize="greedy" if len(ops) > 2 else False)
    bound = (p - 1) ** len(ops) * math.prod(_letters(spec, ops).values())
    dtype = np.int64 if bound < _INT64_LIMIT else object
    res = np.einsum(spec, *(_to_ints(o, dtype) for o in ops), optimize="greedy" if len(ops) > 2 else False)
    return _from_ints(res, p)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact matrix (or matrix-vector) product."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    p = _prime_of((a, b))
    if p is None:
        return a @ b
    inner = a.shape[-1] if a.ndim else 1
    dtype = np.int64 if (p - 1) ** 2 * max(inner, 1) < _INT64_LIMIT else object
    return _from_ints(_to_ints(a, dtype) @ _to_ints(b, dtype), p)


def tensordot(a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    p = _prime_of((a, b))
    if p is None:
        return np.asarray(np.tensordot(a, b, axes=axes), dtype=object)
    inner = math.prod(a.shape[i] for i in axes[0])
    dtype = np.int64 if (p - 1) ** 2 * max(inner, 1) < _INT64_LIMIT else object
    return _from_ints(np.tensordot(_to_ints(a, dtype), _to_ints(b, dtype), axes=axes), p)

"""Linear maps on A and A⊗A.

An endomorphism is an n×n object array ``f`` with ``f(a_j) = Σ_i f[i, j] a_i``.
Endomorphisms of A⊗A are n²×n² arrays on the basis a_i⊗a_k with flat index
``i*n + k``.  Covectors act as row vectors: ``p(v) = p @ v``.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import DimensionError
from .hopf import HopfAlgebra


def _check_vec(H: HopfAlgebra, v: np.ndarray, what: str = "vector") -> None:
    if np.shape(v) != (H.n,):
        raise DimensionError(f"{what} has shape {np.shape(v)}, expected ({H.n},)")


def _check_endo(H: HopfAlgebra, f: np.ndarray) -> None:
    if np.shape(f) != (H.n, H.n):
        raise DimensionError(f"endomorphism has shape {np.shape(f)}, expected ({H.n}, {H.n})")


def identity(H: HopfAlgebra) -> np.ndarray:
    return H.field.identity(H.n)


def eta_eps(H: HopfAlgebra) -> np.ndarray:
    """η∘ε, the unit of the convolution algebra."""
    return np.multiply.outer(H.unit, H.counit)


def left_mul(H: HopfAlgebra, a: np.ndarray) -> np.ndarray:
    """ℓ(a): b ↦ ab."""
    _check_vec(H, a)
    return linalg.contract("lij,i->lj", H.m, a)


def right_mul(H: HopfAlgebra, a: np.ndarray) -> np.ndarray:
    """r(a): b ↦ ba."""
    _check_vec(H, a)
    return linalg.contract("lji,i->lj", H.m, a)


def left_hit(H: HopfAlgebra, p: np.ndarray) -> np.ndarray:
    """ℓ(p): a ↦ p⇀a = a_(1) p(a_(2))."""
    _check_vec(H, p, "covector")
    return linalg.contract("lij,j->il", H.delta, p)


def right_hit(H: HopfAlgebra, p: np.ndarray) -> np.ndarray:
    """r(p): a ↦ a↼p = p(a_(1)) a_(2)."""
    _check_vec(H, p, "covector")
    return linalg.contract("lij,i->jl", H.delta, p)


def hit_dual(H: HopfAlgebra, a: np.ndarray, p: np.ndarray, side: str) -> np.ndarray:
    """a⇀p = p∘r(a) (``side="left"``) or p↼a = p∘ℓ(a) (``side="right"``)."""
    _check_vec(H, a)
    _check_vec(H, p, "covector")
    if side == "left":
        return p @ right_mul(H, a)
    if side == "right":
        return p @ left_mul(H, a)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def dual_mul(H: HopfAlgebra, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Product pq in A*: (pq)(a) = p(a_(1)) q(a_(2))."""
    return linalg.contract("lij,i,j->l", H.delta, p, q)


def dual_coproduct(H: HopfAlgebra, p: np.ndarray) -> np.ndarray:
    """Δ(p) as coefficients c[i, j] of α_i ⊗ α_j, where p(ab) = Σ c[i,j] α_i(a) α_j(b)."""
    return linalg.contract("lij,l->ij", H.m, p)


def dual_antipode(H: HopfAlgebra, p: np.ndarray) -> np.ndarray:
    """S(p) = p∘s."""
    return p @ H.s


def convolution(H: HopfAlgebra, f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """(f⋆g)(a) = f(a_(1)) g(a_(2))."""
    _check_endo(H, f)
    _check_endo(H, g)
    return linalg.contract("lij,pi,qj,xpq->xl", H.delta, f, g, H.m)


def trace(f: np.ndarray):
    f = np.asarray(f, dtype=object)
    if f.ndim != 2 or f.shape[0] != f.shape[1]:
        raise DimensionError("trace needs a square matrix")
    total = f[0, 0]
    for i in range(1, f.shape[0]):
        total = total + f[i, i]
    return total


def rank_one(H: HopfAlgebra, p: np.ndarray, a: np.ndarray) -> np.ndarray:
    """p⊗a as the endomorphism b ↦ p(b) a."""
    _check_vec(H, p, "covector")
    _check_vec(H, a)
    return np.multiply.outer(a, p)


def tensor_endo(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    if f.shape != g.shape or f.ndim != 2 or f.shape[0] != f.shape[1]:
        raise DimensionError("tensor_endo needs two square matrices of equal size")
    return np.kron(f, g)


def partial_trace_left(M: np.ndarray) -> np.ndarray:
    """(tr⊗1)(M): result[i, j] = Σ_k M[(k, i), (k, j)]."""
    N = M.shape[0]
    n = int(round(N ** 0.5))
    if M.shape != (N, N) or n * n != N:
        raise DimensionError(f"expected an n²×n² matrix, got shape {M.shape}")
    blocks = M.reshape(n, n, n, n)
    out = blocks[0, :, 0, :].copy()
    for k in range(1, n):
        out = out + blocks[k, :, k, :]
    return out


def power(H: HopfAlgebra, f: np.ndarray, k: int) -> np.ndarray:
    """Composition power f^k (negative k uses the inverse)."""
    return linalg.matrix_power(f, k, H.field)


def vectorize(f: np.ndarray) -> np.ndarray:
    """Row-major flattening: index i*n + j holds f[i, j]."""
    return f.reshape(-1).copy()


def unvectorize(v: np.ndarray, n: int) -> np.ndarray:
    return v.reshape(n, n).copy()

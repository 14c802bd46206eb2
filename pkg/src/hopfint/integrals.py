"""Integrals, cointegrals and the trace constructions built from them.

Naming: ``algebra`` integrals live in A (Λ with aΛ = ε(a)Λ or Λa = ε(a)Λ),
``dual`` integrals live in A* (λ with a_(1)λ(a_(2)) = λ(a)1 for left,
λ(a_(1))a_(2) = λ(a)1 for right).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import endo, linalg
from .errors import DimensionError, MathError, TheoremViolation
from .hopf import HopfAlgebra, variant

SIDES = ("left", "right")
WHERE = ("algebra", "dual")


@dataclass
class IntegralSpace:
    side: str
    where: str
    basis: list[np.ndarray]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def symbol(self) -> str:
        s = "ℓ" if self.side == "left" else "r"
        return f"∫_{s}" if self.where == "algebra" else f"∫^{s}"


@dataclass
class IntegralPair:
    lam: np.ndarray
    Lam: np.ndarray
    sides: tuple[str, str]  # (side of λ in A*, side of Λ in A)
    pairing: object


def _system(H: HopfAlgebra, side: str, where: str) -> np.ndarray:
    """Coefficient matrix whose nullspace is the requested integral space."""
    n = H.n
    ident = H.field.identity(n)
    if where == "algebra":
        mul = endo.right_mul if side == "right" else endo.left_mul
        blocks = [mul(H, H.basis_vector(j)) - H.counit[j] * ident for j in range(n)]
        return np.concatenate(blocks, axis=0)
    # dual right: Σ_i Δ[l,i,j] λ_i - λ_l u_j = 0   (rows (l, j))
    # dual left:  Σ_j Δ[l,i,j] λ_j - λ_l u_i = 0   (rows (l, i))
    d = H.delta if side == "right" else H.delta.transpose(0, 2, 1)
    rows = H.field.zeros((n, n, n))
    for l in range(n):
        for j in range(n):
            rows[l, j, :] = d[l, :, j]
            rows[l, j, l] = rows[l, j, l] - H.unit[j]
    return rows.reshape(n * n, n)


def integral_space(H: HopfAlgebra, side: str, where: str) -> IntegralSpace:
    """Exact basis (reduced echelon form) of ∫_ℓ, ∫_r, ∫^ℓ or ∫^r."""
    if side not in SIDES or where not in WHERE:
        raise ValueError(f"bad integral space ({side!r}, {where!r})")
    return IntegralSpace(side, where, linalg.nullspace(_system(H, side, where), H.field))


def is_integral(H: HopfAlgebra, v: np.ndarray, side: str, where: str) -> bool:
    return linalg.is_zero(_system(H, side, where) @ v)


def integral(H: HopfAlgebra, side: str, where: str) -> np.ndarray:
    """The canonical representative; raises if the space is not one-dimensional."""
    space = integral_space(H, side, where)
    if space.dim != 1:
        raise TheoremViolation(f"{space.symbol} has dimension {space.dim}, expected 1")
    return space.basis[0]


def normalize_pair(
    H: HopfAlgebra, lam: np.ndarray, Lam: np.ndarray, sides: tuple[str, str] = ("right", "right")
) -> IntegralPair:
    """Rescale λ (never Λ) so that λ(Λ) = 1."""
    if not is_integral(H, lam, sides[0], "dual") or linalg.is_zero(lam):
        raise MathError(f"λ is not a nonzero {sides[0]} integral of A*")
    if not is_integral(H, Lam, sides[1], "algebra") or linalg.is_zero(Lam):
        raise MathError(f"Λ is not a nonzero {sides[1]} integral of A")
    pairing = lam @ Lam
    if pairing == 0:
        raise TheoremViolation(f"λ(Λ) = 0 for λ ∈ ∫^{sides[0][0]}, Λ ∈ ∫_{sides[1][0]}")
    return IntegralPair(lam / pairing, Lam, sides, H.field.one)


def normalized_pair(H: HopfAlgebra, lam_side: str = "right", Lam_side: str = "right") -> IntegralPair:
    return normalize_pair(
        H, integral(H, lam_side, "dual"), integral(H, Lam_side, "algebra"), (lam_side, Lam_side)
    )


def kuperberg_P(H: HopfAlgebra) -> np.ndarray:
    """P[i, j] = Σ m[l,w,j] s[u,l] Δ[u,v,i] s[w,v]."""
    return linalg.contract("lwj,ul,uvi,wv->ij", H.m, H.s, H.delta, H.s)


def trace_Q(H: HopfAlgebra) -> np.ndarray:
    """Q[i, j] = Σ m[l,w,j] Δ[l,i,v] s[u,v] s[w,u]."""
    return linalg.contract("lwj,liv,uv,wu->ij", H.m, H.delta, H.s, H.s)


def trace_Q_from_traces(H: HopfAlgebra) -> np.ndarray:
    """Q[i, j] = tr(r(a_j)∘s²∘r(α_i)), one trace per entry."""
    s2 = H.s @ H.s
    out = H.field.zeros((H.n, H.n))
    for i in range(H.n):
        rp = endo.right_hit(H, H.dual_basis(i))
        for j in range(H.n):
            out[i, j] = endo.trace(endo.right_mul(H, H.basis_vector(j)) @ s2 @ rp)
    return out


@dataclass
class IntCointReport:
    passed: bool
    condition: str | None = None
    counterexample: tuple[int, ...] | None = None


def is_integral_cointegral(H: HopfAlgebra, M: np.ndarray) -> IntCointReport:
    """Check M(a_(1))⊗a_(2) = M(a)⊗1 and M(a)b = ε(b)M(a) on all basis elements.

    Counterexample indices are (l, x, y) for the first condition (a = a_l,
    coefficient of a_x⊗a_y) and (b, x, j) for the second.
    """
    if np.shape(M) != (H.n, H.n):
        raise DimensionError("M must be an n×n matrix")
    lhs = linalg.contract("liy,xi->lxy", H.delta, M)
    rhs = linalg.contract("xl,y->lxy", M, H.unit)
    bad = linalg.first_mismatch(lhs, rhs)
    if bad is not None:
        return IntCointReport(False, "M(a_(1))⊗a_(2) = M(a)⊗1", bad)
    for b in range(H.n):
        rb = endo.right_mul(H, H.basis_vector(b))
        bad = linalg.first_mismatch(rb @ M, H.counit[b] * M)
        if bad is not None:
            return IntCointReport(False, "M(a)b = ε(b)M(a)", (b, *bad))
    return IntCointReport(True)


def is_integral_cointegral_operators(H: HopfAlgebra, M: np.ndarray) -> IntCointReport:
    """Same conditions in operator form: M∘ℓ(p) = p(1)M and r(b)∘M = ε(b)M."""
    for i in range(H.n):
        p = H.dual_basis(i)
        bad = linalg.first_mismatch(M @ endo.left_hit(H, p), (p @ H.unit) * M)
        if bad is not None:
            return IntCointReport(False, "M∘ℓ(p) = p(1)M", (i, *bad))
    for b in range(H.n):
        bad = linalg.first_mismatch(endo.right_mul(H, H.basis_vector(b)) @ M, H.counit[b] * M)
        if bad is not None:
            return IntCointReport(False, "r(b)∘M = ε(b)M", (b, *bad))
    return IntCointReport(True)


def decompose_integral_cointegral(H: HopfAlgebra, M: np.ndarray) -> list[tuple[np.ndarray, np.ndarray]]:
    """Minimal factorization M = Σ λ_k⊗Λ_k, checking λ_k ∈ ∫^r and Λ_k ∈ ∫_r."""
    if linalg.is_zero(M):
        raise MathError("cannot decompose the zero map")
    cols, rows = linalg.rank_factorization(M)
    factors = [(rows[k].copy(), cols[:, k].copy()) for k in range(rows.shape[0])]
    for k, (lam, Lam) in enumerate(factors):
        if not is_integral(H, lam, "right", "dual"):
            raise TheoremViolation(f"factor {k}: λ is not a right integral of A*")
        if not is_integral(H, Lam, "right", "algebra"):
            raise TheoremViolation(f"factor {k}: Λ is not a right integral of A")
    return factors


# ladders
#
# Element-level maps (inputs a⊗b = top⊗bottom, outputs top⊗bottom):
#   1: a b_(1) ⊗ b_(2)     2: a b_(2) ⊗ b_(1)     3: b_(1) a ⊗ b_(2)     4: b_(2) a ⊗ b_(1)
# The inverted versions put s on the strand b_(k) that feeds the product.
# In ladders 2-4 one or both strands point right-to-left, so ladders placed
# side by side compose along the direction of each strand.  ``ladder`` returns
# the matrix in the left-to-right frame, where reversed strands are transposed;
# in that frame concatenation is ordinary composition.

LADDER_SHAPES = {
    # which: (Δ output that goes up, vertical strand is m's left factor, top reversed, bottom reversed)
    1: (0, False, False, False),
    2: (1, False, False, True),
    3: (0, True, True, False),
    4: (1, True, True, True),
}


def ladder_map(H: HopfAlgebra, which: int, inverted: bool = False) -> np.ndarray:
    """Element-level ladder as an n^4 tensor T[top_out, bot_out, top_in, bot_in]."""
    if which not in LADDER_SHAPES:
        raise ValueError("ladder index must be 1, 2, 3 or 4")
    up, vertical_left, _, _ = LADDER_SHAPES[which]
    d = H.delta if up == 0 else H.delta.transpose(0, 2, 1)  # d[b, up, onward]
    if inverted:
        d = linalg.contract("bvw,uv->buw", d, H.s)
    m = H.m if vertical_left else H.m.transpose(0, 2, 1)  # m[out, vertical, horizontal]
    # T[t, o, a, b] = Σ_v d[b, v, o] m[t, v, a]
    return linalg.contract("bvo,tva->toab", d, m)


def ladder(H: HopfAlgebra, which: int, inverted: bool = False) -> np.ndarray:
    """Ladder as an n²×n² matrix acting left-to-right (see module comment)."""
    T = ladder_map(H, which, inverted)
    _, _, top_rev, bot_rev = LADDER_SHAPES[which]
    # M[rt, rb, lt, lb]; forward strand: left = input, right = output
    perm_src = {
        (False, False): "toab",
        (False, True): "tbao",
        (True, False): "aotb",
        (True, True): "abto",
    }[(top_rev, bot_rev)]
    M = linalg.contract(f"toab->{perm_src}", T)
    n = H.n
    return M.reshape(n * n, n * n)


def ladder_as_endo2(H: HopfAlgebra, which: int, inverted: bool = False) -> np.ndarray:
    n = H.n
    return ladder_map(H, which, inverted).reshape(n * n, n * n)


# antipode and Frobenius map from integrals


def antipode_from_integrals(H: HopfAlgebra, pair: IntegralPair) -> np.ndarray:
    """The map a ↦ Λ↼(a⇀λ)."""
    if pair.lam @ pair.Lam != 1:
        raise MathError("integral pair is not normalized")
    if not is_integral(H, pair.lam, "right", "dual") or not is_integral(H, pair.Lam, "right", "algebra"):
        raise MathError("antipode formula needs λ ∈ ∫^r and Λ ∈ ∫_r")
    out = H.field.zeros((H.n, H.n))
    for j in range(H.n):
        q = endo.hit_dual(H, H.basis_vector(j), pair.lam, "left")
        out[:, j] = endo.right_hit(H, q) @ pair.Lam
    return out


def frobenius_map(H: HopfAlgebra, lam: np.ndarray) -> np.ndarray:
    """Matrix F with F[i, j] = (λ↼s(a_j))(a_i)."""
    if linalg.is_zero(lam) or not is_integral(H, lam, "right", "dual"):
        raise MathError("λ must be a nonzero right integral of A*")
    out = H.field.zeros((H.n, H.n))
    for j in range(H.n):
        out[:, j] = endo.hit_dual(H, H.antipode(H.basis_vector(j)), lam, "right")
    return out


def frobenius_identities(H: HopfAlgebra, lam: np.ndarray) -> dict[str, tuple[int, ...] | None]:
    """First counterexample (or None) for f(ab) = f(b)↼s(a) and f(a↼p) = f(a)p."""
    F = frobenius_map(H, lam)
    f = lambda v: F @ v  # noqa: E731
    res: dict[str, tuple[int, ...] | None] = {"f(ab) = f(b)↼s(a)": None, "f(a↼p) = f(a)p": None}
    for i in range(H.n):
        a = H.basis_vector(i)
        for j in range(H.n):
            b = H.basis_vector(j)
            lhs = f(H.mul(a, b))
            rhs = endo.hit_dual(H, H.antipode(a), f(b), "right")
            if linalg.first_mismatch(lhs, rhs) is not None:
                res["f(ab) = f(b)↼s(a)"] = (i, j)
                break
        if res["f(ab) = f(b)↼s(a)"]:
            break
    for i in range(H.n):
        a = H.basis_vector(i)
        for j in range(H.n):
            p = H.dual_basis(j)
            lhs = f(endo.right_hit(H, p) @ a)
            rhs = endo.dual_mul(H, f(a), p)
            if linalg.first_mismatch(lhs, rhs) is not None:
                res["f(a↼p) = f(a)p"] = (i, j)
                break
        if res["f(a↼p) = f(a)p"]:
            break
    return res


# the trace map E on End(A)


def cal_E(H: HopfAlgebra, which: str = "id") -> np.ndarray:
    """Matrix of f ↦ E(f) on row-major vectorized End(A).

    E(f) is defined by p(E(f)(a)) = tr(ℓ(a)∘f∘r(p)), with ℓ and r taken in
    the requested variant of H.  Row index x*n + j ↔ α_x(E(f)(a_j)); column
    index i*n + k ↔ f[i, k]; tr(ℓ(a_j) E_ik r(α_x)) = (r(α_x) ℓ(a_j))[k, i].
    """
    K = variant(H, which)
    n = H.n
    E = H.field.zeros((n, n, n, n))
    for x in range(n):
        rp = endo.right_hit(K, K.dual_basis(x))
        for j in range(n):
            prod = rp @ endo.left_mul(K, K.basis_vector(j))
            E[x, j] = prod.T
    return E.reshape(n * n, n * n)


def apply_cal_E(H: HopfAlgebra, f: np.ndarray, which: str = "id", E: np.ndarray | None = None) -> np.ndarray:
    if E is None:
        E = cal_E(H, which)
    return linalg.matmul(E, endo.vectorize(f)).reshape(H.n, H.n)


def cal_E_by_trace(H: HopfAlgebra, f: np.ndarray, which: str = "id") -> np.ndarray:
    """E(f) straight from the defining trace, entry by entry."""
    K = variant(H, which)
    out = H.field.zeros((H.n, H.n))
    for x in range(H.n):
        rp = endo.right_hit(K, K.dual_basis(x))
        for j in range(H.n):
            out[x, j] = endo.trace(endo.left_mul(K, K.basis_vector(j)) @ f @ rp)
    return out


def bullet_element(H: HopfAlgebra, f: np.ndarray, a: np.ndarray) -> np.ndarray:
    """f•a = r(a_(1))∘f∘r(s(a_(2)))."""
    D = H.coproduct(a)
    out = H.field.zeros((H.n, H.n))
    for i, j in zip(*np.nonzero(np.vectorize(bool, otypes=[bool])(D))):
        out = out + D[i, j] * (
            endo.right_mul(H, H.basis_vector(i)) @ f @ endo.right_mul(H, H.antipode(H.basis_vector(j)))
        )
    return out


def bullet_functional(H: HopfAlgebra, f: np.ndarray, p: np.ndarray) -> np.ndarray:
    """f•p = ℓ(S(p_(2)))∘f∘ℓ(p_(1)), with S(q) = q∘s."""
    C = endo.dual_coproduct(H, p)
    out = H.field.zeros((H.n, H.n))
    for i, j in zip(*np.nonzero(np.vectorize(bool, otypes=[bool])(C))):
        out = out + C[i, j] * (
            endo.left_hit(H, endo.dual_antipode(H, H.dual_basis(j))) @ f @ endo.left_hit(H, H.dual_basis(i))
        )
    return out


def bullet_actions(H: HopfAlgebra, f: np.ndarray, x: np.ndarray, kind: str = "element") -> np.ndarray:
    """Right actions of A (``kind="element"``) and A* (``kind="functional"``) on End(A)."""
    if kind == "element":
        return bullet_element(H, f, x)
    if kind == "functional":
        return bullet_functional(H, f, x)
    raise ValueError(f"kind must be 'element' or 'functional', not {kind!r}")


def cal_Q_big(H: HopfAlgebra) -> np.ndarray:
    """The endomorphism a⊗b ↦ s(s(ab)_(1)) ⊗ s(ab)_(2) of A⊗A."""
    n = H.n
    # c[l, i, k] = coefficient of a_l in s(a_i a_k)
    c = linalg.contract("lq,qik->lik", H.s, H.m)
    # Δ(s(a_i a_k))[p, y], then s on the left factor
    T = linalg.contract("xp,lpy,lik->xyik", H.s, H.delta, c)
    return T.reshape(n * n, n * n)

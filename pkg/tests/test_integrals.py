import random

import numpy as np
import pytest

from hopfint import endo, integrals as I, linalg
from hopfint.builtins import builtin, sweedler, taft, trivial
from hopfint.errors import MathError, TheoremViolation
from hopfint.scalars import GF, QQ

GF7 = GF(7)
SW = sweedler(QQ)
C2 = builtin("group:c2", QQ)
TRIV = trivial(QQ)
ALGEBRAS = [TRIV, SW, C2, builtin("group:c4", QQ), builtin("group:s3", GF7), builtin("group:d4", QQ), taft(3, GF7)]


def _rand_endo(H, rng):
    return H.field.array([[H.field.random(rng) for _ in range(H.n)] for _ in range(H.n)])


def _same_line(space, v):
    return space.dim == 1 and linalg.scalar_multiple(space.basis[0], v) is not None


def test_integral_spaces_small_examples():
    for where in I.WHERE:
        for side in I.SIDES:
            assert I.integral_space(TRIV, side, where).basis[0].tolist() == [1]
            assert _same_line(I.integral_space(C2, side, where), C2.element({"e": 1, "a": 1} if where == "algebra" else {"e": 1}))
    assert _same_line(I.integral_space(SW, "right", "algebra"), SW.element({"x": 1, "gx": -1}))
    assert _same_line(I.integral_space(SW, "left", "algebra"), SW.element({"x": 1, "gx": 1}))
    assert _same_line(I.integral_space(SW, "right", "dual"), SW.dual_basis(2))


def test_integral_space_matches_brute_force_over_gf3():
    # every vector of GF(3)^4 is tested against the defining condition
    F = GF(3)
    H = sweedler(F)
    hits = []
    for coords in np.ndindex(*(3,) * 4):
        v = F.array(list(coords))
        ok = all(linalg.arrays_equal(H.mul(v, H.basis_vector(j)), H.counit[j] * v) for j in range(4))
        if ok:
            hits.append(v)
    space = I.integral_space(H, "right", "algebra")
    assert len(hits) == 3 ** space.dim
    assert all(I.is_integral(H, v, "right", "algebra") for v in hits)


def test_integral_symbols():
    assert [I.IntegralSpace(s, w, []).symbol for w in I.WHERE for s in I.SIDES] == ["∫_ℓ", "∫_r", "∫^ℓ", "∫^r"]
    with pytest.raises(ValueError):
        I.integral_space(SW, "up", "algebra")


def test_normalize_pair():
    lam, Lam = SW.dual_basis(2), SW.element({"x": 1, "gx": -1})
    pair = I.normalize_pair(SW, lam, Lam)
    assert linalg.arrays_equal(pair.lam, lam) and pair.lam @ pair.Lam == 1
    pair = I.normalize_pair(SW, 2 * lam, Lam)
    assert linalg.arrays_equal(pair.lam, lam)
    assert linalg.arrays_equal(pair.Lam, Lam)
    C8 = builtin("group:c8", QQ)
    pair = I.normalize_pair(C8, C8.dual_basis(0), C8.field.array([1] * 8))
    assert pair.lam @ pair.Lam == 1
    with pytest.raises(MathError):
        I.normalize_pair(SW, SW.counit, Lam)


@pytest.mark.parametrize("H", ALGEBRAS, ids=lambda H: H.name)
def test_P_and_Q_are_rank_one(H):
    P = I.kuperberg_P(H)
    pair = I.normalized_pair(H, "right", "right")
    assert linalg.arrays_equal(P, endo.rank_one(H, pair.lam, pair.Lam))
    Q = I.trace_Q(H)
    qpair = I.normalized_pair(H, "right", "left")
    assert linalg.arrays_equal(Q, endo.rank_one(H, qpair.lam, qpair.Lam))
    assert linalg.arrays_equal(Q, I.trace_Q_from_traces(H))


def test_P_Q_examples():
    assert I.kuperberg_P(TRIV).tolist() == [[1]] and I.trace_Q(TRIV).tolist() == [[1]]
    x_star = SW.dual_basis(2)
    assert linalg.arrays_equal(I.kuperberg_P(SW), endo.rank_one(SW, x_star, SW.element({"x": 1, "gx": -1})))
    assert linalg.arrays_equal(I.trace_Q(SW), endo.rank_one(SW, x_star, SW.element({"x": 1, "gx": 1})))


@pytest.mark.parametrize("H", ALGEBRAS, ids=lambda H: H.name)
def test_integral_cointegral_checks(H):
    P = I.kuperberg_P(H)
    assert I.is_integral_cointegral(H, P).passed
    assert I.is_integral_cointegral_operators(H, P).passed
    assert I.is_integral_cointegral(H, 3 * P).passed
    if H.n > 1:
        rep = I.is_integral_cointegral(H, endo.identity(H))
        assert not rep.passed and rep.counterexample is not None
        assert not I.is_integral_cointegral_operators(H, endo.identity(H)).passed


def test_decomposition():
    P = I.kuperberg_P(SW)
    ((lam, Lam),) = I.decompose_integral_cointegral(SW, P)
    assert linalg.scalar_multiple(lam, SW.dual_basis(2)) is not None
    assert linalg.scalar_multiple(Lam, SW.element({"x": 1, "gx": -1})) is not None
    assert linalg.arrays_equal(endo.rank_one(SW, lam, Lam), P)
    ((lam3, Lam3),) = I.decompose_integral_cointegral(SW, 3 * P)
    assert lam3 @ Lam3 == 3 * (lam @ Lam)
    ((e, one),) = I.decompose_integral_cointegral(TRIV, I.kuperberg_P(TRIV))
    assert e @ one == 1
    with pytest.raises(MathError):
        I.decompose_integral_cointegral(SW, QQ.zeros((4, 4)))
    with pytest.raises(TheoremViolation):
        I.decompose_integral_cointegral(SW, endo.identity(SW))


@pytest.mark.parametrize("H", ALGEBRAS, ids=lambda H: H.name)
def test_ladders_invert_each_other(H):
    ident = H.field.identity(H.n**2)
    for which in (1, 2, 3, 4):
        L, Linv = I.ladder(H, which), I.ladder(H, which, True)
        assert linalg.arrays_equal(L @ Linv, ident)
        assert linalg.arrays_equal(Linv @ L, ident)
        assert linalg.rank(I.ladder_as_endo2(H, which)) == H.n**2
        if H.n == 1:
            assert linalg.arrays_equal(L, ident)
    # with both strands forward the frame is the element-level one
    assert linalg.arrays_equal(I.ladder_as_endo2(H, 1) @ I.ladder_as_endo2(H, 1, True), ident)


def test_antipode_from_integrals_examples():
    pair = I.normalize_pair(SW, SW.dual_basis(2), SW.element({"x": 1, "gx": -1}))
    assert linalg.arrays_equal(I.antipode_from_integrals(SW, pair), SW.s)
    C4 = builtin("group:c4", QQ)
    pair = I.normalize_pair(C4, C4.dual_basis(0), C4.field.array([1] * 4))
    S = I.antipode_from_integrals(C4, pair)
    inverse = [[0, 0, 0, 0] for _ in range(4)]
    for j in range(4):
        inverse[(4 - j) % 4][j] = 1
    assert S.tolist() == inverse
    assert I.antipode_from_integrals(TRIV, I.normalized_pair(TRIV)).tolist() == [[1]]


@pytest.mark.parametrize("H", ALGEBRAS, ids=lambda H: H.name)
def test_frobenius_map(H):
    lam = I.integral(H, "right", "dual")
    F = I.frobenius_map(H, lam)
    assert linalg.rank(F) == H.n
    assert all(v is None for v in I.frobenius_identities(H, lam).values())
    if H.n == 1:
        assert F.tolist() == [[1]]
    with pytest.raises(MathError):
        I.frobenius_map(H, H.field.zeros(H.n))


@pytest.mark.parametrize("H", ALGEBRAS[:5], ids=lambda H: H.name)
def test_cal_E(H):
    E = I.cal_E(H)
    assert linalg.rank(E) == H.n**2
    for i in range(H.n):
        p = H.dual_basis(i)
        for j in range(H.n):
            a = H.basis_vector(j)
            want = endo.left_hit(H, p) @ endo.right_mul(H, a)
            assert linalg.arrays_equal(I.apply_cal_E(H, endo.rank_one(H, p, a), E=E), want)
    f = _rand_endo(H, random.Random(3))
    assert linalg.arrays_equal(I.apply_cal_E(H, f, E=E), I.cal_E_by_trace(H, f))
    if H.n == 1:
        assert E.tolist() == [[1]]


@pytest.mark.parametrize("H", ALGEBRAS[:5], ids=lambda H: H.name)
def test_bullet_actions(H):
    s_minus2 = endo.power(H, H.s, -2)
    for i in range(H.n):
        a, p = H.basis_vector(i), H.dual_basis(i)
        assert linalg.arrays_equal(I.bullet_actions(H, s_minus2, a), H.counit[i] * s_minus2)
        assert linalg.arrays_equal(I.bullet_actions(H, s_minus2, p, "functional"), (p @ H.unit) * s_minus2)
    f = _rand_endo(H, random.Random(5))
    assert linalg.arrays_equal(I.bullet_actions(H, f, H.unit), f)
    with pytest.raises(ValueError):
        I.bullet_actions(H, f, H.unit, "both")


@pytest.mark.parametrize("H", ALGEBRAS, ids=lambda H: H.name)
def test_cal_Q_partial_trace(H):
    assert linalg.arrays_equal(endo.partial_trace_left(I.cal_Q_big(H)), I.kuperberg_P(H))


def test_cal_Q_on_c2_by_element_map():
    assert I.cal_Q_big(TRIV).tolist() == [[1]]
    # a⊗b ↦ g⊗g with g = (ab)⁻¹, so column (i, k) is the basis tensor at (i·k, i·k)
    Q = I.cal_Q_big(C2)
    want = QQ.zeros((4, 4))
    for i in range(2):
        for k in range(2):
            g = (i + k) % 2
            want[g * 2 + g, i * 2 + k] = 1
    assert linalg.arrays_equal(Q, want)

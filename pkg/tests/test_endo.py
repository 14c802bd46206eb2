import random

import pytest
from hypothesis import given, settings, strategies as st

from hopfint import endo, linalg
from hopfint.builtins import builtin, sweedler
from hopfint.errors import DimensionError
from hopfint.scalars import GF, QQ

GF7 = GF(7)
SW = sweedler(QQ)
C2 = builtin("group:c2", QQ)
ALGEBRAS = [SW, C2, builtin("group:s3", GF7), builtin("group:q8", QQ), sweedler(GF7)]


def _rand_vec(H, rng):
    return H.field.array([H.field.random(rng) for _ in range(H.n)])


def _rand_endo(H, rng):
    return H.field.array([[H.field.random(rng) for _ in range(H.n)] for _ in range(H.n)])


seeds = st.integers(0, 2**32)


def test_multiplication_operators():
    for H in ALGEBRAS:
        assert linalg.arrays_equal(endo.left_mul(H, H.unit), endo.identity(H))
        assert linalg.arrays_equal(endo.right_mul(H, H.unit), endo.identity(H))
    a = C2.element({"a": 1})
    assert endo.right_mul(C2, a).tolist() == [[0, 1], [1, 0]]
    x = SW.element({"x": 1})
    L = endo.left_mul(SW, x)
    assert linalg.is_zero(L @ L)


def test_hit_operators():
    for H in ALGEBRAS:
        assert linalg.arrays_equal(endo.left_hit(H, H.counit), endo.identity(H))
        assert linalg.arrays_equal(endo.right_hit(H, H.counit), endo.identity(H))
    assert endo.right_hit(C2, C2.dual_basis(0)).tolist() == [[1, 0], [0, 0]]


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_left_and_right_hits_commute(seed):
    rng = random.Random(seed)
    for H in ALGEBRAS:
        p, q = _rand_vec(H, rng), _rand_vec(H, rng)
        lp, rq = endo.left_hit(H, p), endo.right_hit(H, q)
        assert linalg.arrays_equal(lp @ rq, rq @ lp)


def test_hit_dual():
    rng = random.Random(1)
    for H in ALGEBRAS:
        p = _rand_vec(H, rng)
        assert linalg.arrays_equal(endo.hit_dual(H, H.unit, p, "left"), p)
        assert linalg.arrays_equal(endo.hit_dual(H, H.unit, p, "right"), p)
    G = builtin("group:s3", QQ)
    for j in range(G.n):
        assert linalg.arrays_equal(endo.hit_dual(G, G.basis_vector(j), G.counit, "left"), G.counit)
    # (g⇀x*)(b) = x*(bg): b = x gives xg = -gx, b = gx gives gxg = -x
    g = SW.element({"g": 1})
    assert endo.hit_dual(SW, g, SW.dual_basis(2), "left").tolist() == [0, 0, 0, -1]
    with pytest.raises(ValueError):
        endo.hit_dual(SW, g, SW.counit, "middle")


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_convolution_laws(seed):
    rng = random.Random(seed)
    for H in ALGEBRAS[:3]:
        f, g, h = (_rand_endo(H, rng) for _ in range(3))
        ee = endo.eta_eps(H)
        assert linalg.arrays_equal(endo.convolution(H, f, ee), f)
        assert linalg.arrays_equal(endo.convolution(H, ee, f), f)
        assert linalg.arrays_equal(
            endo.convolution(H, endo.convolution(H, f, g), h), endo.convolution(H, f, endo.convolution(H, g, h))
        )


def test_antipode_is_convolution_inverse_of_identity():
    for H in ALGEBRAS:
        ident = endo.identity(H)
        assert linalg.arrays_equal(endo.convolution(H, H.s, ident), endo.eta_eps(H))
        assert linalg.arrays_equal(endo.convolution(H, ident, H.s), endo.eta_eps(H))
    # g ↦ g² on C2 sends both elements to e
    sq = endo.convolution(C2, endo.identity(C2), endo.identity(C2))
    assert sq.tolist() == [[1, 1], [0, 0]]


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_trace_properties(seed):
    rng = random.Random(seed)
    for H in ALGEBRAS[:3]:
        f, g = _rand_endo(H, rng), _rand_endo(H, rng)
        p, a = _rand_vec(H, rng), _rand_vec(H, rng)
        assert endo.trace(endo.identity(H)) == H.n
        assert endo.trace(endo.rank_one(H, p, a)) == p @ a
        assert endo.trace(f @ g) == endo.trace(g @ f)
        assert linalg.rank(endo.rank_one(H, p, a)) <= 1


def test_rank_one_examples():
    for H in ALGEBRAS:
        assert linalg.arrays_equal(endo.rank_one(H, H.counit, H.unit), endo.eta_eps(H))
    M = endo.rank_one(SW, SW.dual_basis(2), SW.element({"x": 1, "gx": -1}))
    assert M[:, 2].tolist() == [0, 0, 1, -1]
    assert linalg.is_zero(M[:, [0, 1, 3]])


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_tensor_and_partial_trace(seed):
    rng = random.Random(seed)
    H = SW
    f, g = _rand_endo(H, rng), _rand_endo(H, rng)
    assert linalg.arrays_equal(endo.partial_trace_left(endo.tensor_endo(f, g)), endo.trace(f) * g)
    id2 = H.field.identity(H.n**2)
    assert linalg.arrays_equal(endo.tensor_endo(endo.identity(H), endo.identity(H)), id2)
    assert linalg.arrays_equal(endo.partial_trace_left(id2), H.n * endo.identity(H))


def test_dimension_errors():
    with pytest.raises(DimensionError):
        endo.left_mul(SW, C2.unit)
    with pytest.raises(DimensionError):
        endo.rank_one(SW, SW.counit, C2.unit)
    with pytest.raises(DimensionError):
        endo.convolution(SW, endo.identity(C2), endo.identity(SW))
    with pytest.raises(DimensionError):
        endo.partial_trace_left(QQ.zeros((3, 3)))
    with pytest.raises(DimensionError):
        endo.trace(QQ.zeros((2, 3)))


def test_vectorize_round_trip():
    f = QQ.array([[1, 2], [3, 4]])
    assert endo.vectorize(f).tolist() == [1, 2, 3, 4]
    assert linalg.arrays_equal(endo.unvectorize(endo.vectorize(f), 2), f)
    assert linalg.arrays_equal(endo.power(SW, SW.s, -1), SW.s_inv)

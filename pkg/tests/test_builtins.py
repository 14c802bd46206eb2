import itertools

import pytest

from hopfint import linalg
from hopfint.builtins import (
    BUILTIN_NAMES,
    GROUPS,
    builtin,
    group_table,
    primitive_root_of_unity,
    sweedler,
    taft,
    taft_algebra,
    trivial,
)
from hopfint.errors import AxiomError, UnknownBuiltinError
from hopfint.scalars import GF, QQ

ORDERS = {"c2": 2, "c4": 4, "c2c2": 4, "c8": 8, "s3": 6, "d4": 8, "q8": 8}


@pytest.mark.parametrize("g", GROUPS)
def test_cayley_tables_are_groups(g):
    labels, t = group_table(g)
    n = len(labels)
    assert n == ORDERS[g]
    for a, b, c in itertools.product(range(n), repeat=3):
        assert t[t[a][b]][c] == t[a][t[b][c]]
    for row in t:
        assert sorted(row) == list(range(n))
    assert t[0] == list(range(n))


def test_group_presentations():
    labels, t = group_table("q8")
    ix = {lab: k for k, lab in enumerate(labels)}
    mul = lambda a, b: labels[t[ix[a]][ix[b]]]  # noqa: E731
    assert mul("i", "i") == mul("j", "j") == mul("k", "k") == mul(mul("i", "j"), "k") == "-1"
    labels, t = group_table("d4")
    ix = {lab: k for k, lab in enumerate(labels)}
    mul = lambda a, b: labels[t[ix[a]][ix[b]]]  # noqa: E731
    assert mul(mul("s", "r"), "s") == "r^3"
    abelian = {g for g in GROUPS if all(group_table(g)[1][a][b] == group_table(g)[1][b][a]
                                        for a in range(ORDERS[g]) for b in range(ORDERS[g]))}
    assert abelian == {"c2", "c4", "c2c2", "c8"}


def test_primitive_roots():
    assert primitive_root_of_unity(3, GF(7)) == 2
    assert primitive_root_of_unity(2, GF(7)) == 6
    assert primitive_root_of_unity(6, GF(7)) == 3
    with pytest.raises(ValueError):
        primitive_root_of_unity(3, GF(5))


def test_sweedler_relations():
    H = sweedler(QQ)
    g, x = H.element({"g": 1}), H.element({"x": 1})
    assert linalg.arrays_equal(H.mul(g, g), H.element({"1": 1}))
    assert linalg.is_zero(H.mul(x, x))
    assert linalg.arrays_equal(H.mul(x, g), -H.mul(g, x))
    assert H.n == 4 and H.basis == ("1", "g", "x", "gx")


def test_taft_relations_over_gf7():
    H = taft(3, GF(7))
    w = primitive_root_of_unity(3, GF(7))
    g, x = H.element({"g": 1}), H.element({"x": 1})
    assert linalg.arrays_equal(H.mul(x, g), w * H.mul(g, x))
    assert linalg.is_zero(H.mul(x, H.mul(x, x)))
    assert H.n == 9


@pytest.mark.parametrize("F", [QQ, GF(7)])
def test_all_builtins_construct(F):
    for name in BUILTIN_NAMES:
        if name == "taft":
            continue
        H = builtin(name, F)
        assert H.n == (1 if name == "trivial" else 4 if name == "sweedler" else ORDERS[name.split(":")[1]])
    assert trivial(F).n == 1


def test_builtin_errors():
    with pytest.raises(UnknownBuiltinError):
        builtin("group:a5")
    with pytest.raises(UnknownBuiltinError):
        builtin("nonsense")
    with pytest.raises(ValueError):
        taft(3, GF(5))
    with pytest.raises(ValueError):
        taft(3, QQ)
    with pytest.raises(ValueError):
        sweedler(GF(2))
    with pytest.raises(ValueError):
        builtin("taft", GF(7))


def test_non_root_of_unity_breaks_the_axioms():
    # ω = 2 has order 3 in GF(7), so it is not a valid parameter for n = 2
    with pytest.raises(AxiomError):
        taft_algebra(2, 2, GF(7))

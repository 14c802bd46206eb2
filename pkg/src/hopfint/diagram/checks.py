"""Diagram/algebra cross-checks reported by ``check_paper``."""

from __future__ import annotations

import random
from typing import Callable

import numpy as np

from .. import endo, integrals as I, linalg
from ..errors import HopfintError
from ..hopf import HopfAlgebra
from .ast import cut_wire
from .evaluate import diagrams_equal, evaluate, evaluate_naive
from .library import builtin_diagram, builtin_diagram_names, ladder_composite

AXIOM_PAIRS = (
    ("assoc", "assoc_lhs", "assoc_rhs"),
    ("coassoc", "coassoc_lhs", "coassoc_rhs"),
    ("bialg", "bialg_lhs", "bialg_rhs"),
    ("antipode_left", "antipode_left", "unit_law"),
    ("antipode_right", "antipode_right", "unit_law"),
    ("unit_left", "unit_left", "identity"),
    ("unit_right", "unit_right", "identity"),
    ("counit_left", "counit_left", "identity"),
    ("counit_right", "counit_right", "identity"),
)


def intcoint_diagrams_hold(H: HopfAlgebra, M: np.ndarray) -> bool:
    """Integral-and-cointegral test through the two diagram equations."""
    b = {"P": M}
    return diagrams_equal(H, builtin_diagram("intcoint_co_lhs"), builtin_diagram("intcoint_co_rhs"), b) and diagrams_equal(
        H, builtin_diagram("intcoint_mul_lhs"), builtin_diagram("intcoint_mul_rhs"), b
    )


def _bindings(H: HopfAlgebra, rng: random.Random) -> dict:
    n = H.n
    f = H.field.array([[H.field.random(rng) for _ in range(n)] for _ in range(n)])
    return {"f": f, "P": I.kuperberg_P(H)}


def diagram_checks(H: HopfAlgebra, seed: int = 0) -> list:
    from ..suite import FAIL, PASS, CheckResult

    rng = random.Random(seed)
    binds = _bindings(H, rng)
    results: list[CheckResult] = []

    def run(check_id: str, fn: Callable[[], tuple[bool, str]]) -> None:
        try:
            ok, detail = fn()
            results.append(CheckResult(check_id, PASS if ok else FAIL, None, detail))
        except (HopfintError, ZeroDivisionError, ValueError) as exc:
            results.append(CheckResult(check_id, FAIL, None, f"{type(exc).__name__}: {exc}"))

    def matrix_of(name: str) -> np.ndarray:
        return evaluate(H, builtin_diagram(name), binds).as_matrix()

    run("diagram.P_matches_contraction", lambda: (linalg.arrays_equal(matrix_of("P"), I.kuperberg_P(H)), ""))
    run("diagram.Q_matches_contraction", lambda: (linalg.arrays_equal(matrix_of("Q"), I.trace_Q(H)), ""))
    run("diagram.calQ_matches_map", lambda: (linalg.arrays_equal(matrix_of("calQ"), I.cal_Q_big(H)), ""))
    run(
        "diagram.calQ_partial_trace_is_P",
        lambda: (evaluate(H, builtin_diagram("calQ")).partial_trace() == evaluate(H, builtin_diagram("P")), ""),
    )
    for label, lhs, rhs in AXIOM_PAIRS:
        run(f"diagram.axiom.{label}", lambda lhs=lhs, rhs=rhs: (
            diagrams_equal(H, builtin_diagram(lhs), builtin_diagram(rhs)), f"{lhs} = {rhs}"))

    ident2 = evaluate(H, builtin_diagram("identity2"))
    for k in range(1, 5):

        def ladder_ok(k=k) -> tuple[bool, str]:
            for inv in (False, True):
                got = evaluate(H, builtin_diagram(f"ladder{k}{'_inv' if inv else ''}")).entries
                if not linalg.arrays_equal(got, I.ladder_map(H, k, inv)):
                    return False, f"ladder{k}{'_inv' if inv else ''} differs from the element formula"
            for inverse_first in (False, True):
                if evaluate(H, ladder_composite(k, inverse_first)) != ident2:
                    return False, f"composite ({'inverse first' if inverse_first else 'ladder first'}) is not the identity"
            return True, ""

        run(f"diagram.ladder{k}", ladder_ok)

    run(
        "diagram.trace_endo",
        lambda: (evaluate(H, builtin_diagram("trace_endo"), binds).scalar == endo.trace(binds["f"]), ""),
    )

    def loop_cut() -> tuple[bool, str]:
        for name in builtin_diagram_names():
            d = builtin_diagram(name)
            direct = evaluate(H, d, binds)
            for wi in d.cycle_wires():
                if evaluate(H, cut_wire(d, wi), binds).partial_trace() != direct:
                    return False, f"{name}: cutting wire {wi}"
        return True, ""

    run("diagram.loop_cut_trace", loop_cut)

    def greedy_naive() -> tuple[bool, str]:
        for name in builtin_diagram_names():
            d = builtin_diagram(name)
            if evaluate(H, d, binds) != evaluate_naive(H, d, binds):
                return False, name
        for k in range(1, 5):
            for inverse_first in (False, True):
                d = ladder_composite(k, inverse_first)
                if evaluate(H, d) != evaluate_naive(H, d):
                    return False, d.name
        return True, ""

    run("diagram.greedy_equals_naive", greedy_naive)

    def diagrams_vs_tensors() -> tuple[bool, str]:
        P = binds["P"]
        candidates = [P, 3 * P, binds["f"], endo.identity(H), endo.eta_eps(H)]
        lam = H.field.array([H.field.random(rng) for _ in range(H.n)])
        candidates.append(endo.rank_one(H, lam, I.integral(H, "right", "algebra")))
        candidates.append(endo.rank_one(H, I.integral(H, "right", "dual"), H.unit))
        for k, M in enumerate(candidates):
            if intcoint_diagrams_hold(H, M) != I.is_integral_cointegral(H, M).passed:
                return False, f"candidate {k}"
        return True, ""

    run("diagram.intcoint_agrees_with_tensors", diagrams_vs_tensors)
    return results

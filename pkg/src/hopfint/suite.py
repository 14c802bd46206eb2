"""The full identity suite: every integral/cointegral statement checked exhaustively.

``check_suite`` covers the algebraic identities; ``check_paper`` adds the
axiom report and the diagram/algebra cross-checks.  Each entry records the
first counterexample (basis indices) when it fails.  Exceptions raised while
evaluating an entry are recorded as failures of that entry only.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Callable

import numpy as np

from . import endo, integrals as I, linalg
from .errors import HopfintError
from .hopf import HopfAlgebra, verify_axioms

PASS, FAIL = "pass", "fail"


@dataclass
class CheckResult:
    id: str
    status: str
    counterexample: tuple[int, ...] | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class SuiteReport:
    algebra: str
    field: str
    dim: int
    results: list[CheckResult] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, check_id: str) -> CheckResult:
        for r in self.results:
            if r.id == check_id:
                return r
        raise KeyError(check_id)

    def ids(self) -> list[str]:
        return [r.id for r in self.results]

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def extend(self, other: "SuiteReport") -> None:
        self.results.extend(other.results)

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "field": self.field,
            "dim": self.dim,
            "passed": self.passed,
            "checks": [
                {
                    "id": r.id,
                    "status": r.status,
                    "counterexample": list(r.counterexample) if r.counterexample is not None else None,
                    "detail": r.detail,
                }
                for r in self.results
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=False)

    def to_text(self) -> str:
        """One line per identity: id, status, counterexample indices."""
        width = max((len(r.id) for r in self.results), default=0)
        lines = []
        for r in self.results:
            line = f"{r.id.ljust(width)}  {r.status.upper()}"
            if r.counterexample is not None:
                line += f"  at {list(r.counterexample)}"
            if r.detail:
                line += f"  ({r.detail})"
            lines.append(line)
        return "\n".join(lines)


def _mismatch(a, b) -> tuple[int, ...] | None:
    return linalg.first_mismatch(a, b)


class _Context:
    """Quantities shared by several checks, computed on first use."""

    def __init__(self, H: HopfAlgebra, seed: int = 0):
        self.H = H
        self.F = H.field
        self.rng = random.Random(seed)

    @cached_property
    def P(self):
        return I.kuperberg_P(self.H)

    @cached_property
    def Q(self):
        return I.trace_Q(self.H)

    @cached_property
    def pair_right(self) -> I.IntegralPair:
        return I.normalized_pair(self.H, "right", "right")

    @cached_property
    def pair_left(self) -> I.IntegralPair:
        return I.normalized_pair(self.H, "right", "left")

    @cached_property
    def E(self):
        return I.cal_E(self.H, "id")

    @cached_property
    def s2(self):
        return self.H.s @ self.H.s

    @cached_property
    def s_minus2(self):
        return self.H.s_inv @ self.H.s_inv

    @cached_property
    def calP(self):
        return I.apply_cal_E(self.H, self.s_minus2, E=self.E)

    def random_endo(self):
        n = self.H.n
        return self.F.array([[self.F.random(self.rng) for _ in range(n)] for _ in range(n)])


_CHECKS: list[tuple[str, Callable[[_Context], tuple[bool, tuple | None, str]]]] = []


def _check(check_id: str):
    def register(fn):
        _CHECKS.append((check_id, fn))
        return fn

    return register


def _ok(bad: tuple | None, detail: str = "") -> tuple[bool, tuple | None, str]:
    return bad is None, bad, detail


# uniqueness and pairings

for _side in ("left", "right"):
    for _where in ("algebra", "dual"):

        def _dim(c: _Context, side=_side, where=_where):
            space = I.integral_space(c.H, side, where)
            return space.dim == 1, None, f"dim {space.symbol} = {space.dim}"

        _check(f"uniqueness.{_where}_{_side}")(_dim)


@_check("pairing.right_dual_left_algebra")
def _pair_sec2(c: _Context):
    lam, Lam = I.integral(c.H, "right", "dual"), I.integral(c.H, "left", "algebra")
    v = lam @ Lam
    return v != 0, None, f"λ(Λ) = {v}"


@_check("pairing.right_dual_right_algebra")
def _pair_sec4(c: _Context):
    lam, Lam = I.integral(c.H, "right", "dual"), I.integral(c.H, "right", "algebra")
    v = lam @ Lam
    return v != 0, None, f"λ(Λ) = {v}"


@_check("lambda.ab1_b2_swap")
def _lambda_swap(c: _Context):
    H = c.H
    lam = I.integral(H, "right", "dual")
    Lm = linalg.contract("l,lxi->xi", lam, H.m)  # λ(a_x a_i)
    lhs = linalg.contract("yij,xi->xyj", H.delta, Lm)
    rhs = linalg.contract("xij,iy,kj->xyk", H.delta, Lm, H.s_inv)
    return _ok(_mismatch(lhs, rhs))


@_check("trace.r_s2_r_pairing")
def _trace_r_s2_r(c: _Context):
    pair = c.pair_left
    traces = I.trace_Q_from_traces(c.H)  # [i, j] = tr(r(a_j)∘s²∘r(α_i))
    return _ok(_mismatch(traces, np.multiply.outer(pair.Lam, pair.lam)))


@_check("Q.contraction_equals_traces")
def _q_contraction(c: _Context):
    return _ok(_mismatch(c.Q, I.trace_Q_from_traces(c.H)))


@_check("Q.rank_one_right_dual_left_algebra")
def _q_rank_one(c: _Context):
    pair = c.pair_left
    return _ok(_mismatch(c.Q, endo.rank_one(c.H, pair.lam, pair.Lam)))


@_check("Q.idempotent")
def _q_idem(c: _Context):
    return _ok(_mismatch(c.Q @ c.Q, c.Q))


@_check("P.integral_cointegral")
def _p_intcoint(c: _Context):
    rep = I.is_integral_cointegral(c.H, c.P)
    return rep.passed, rep.counterexample, rep.condition or ""


@_check("P.trace_one")
def _p_trace(c: _Context):
    t = endo.trace(c.P)
    return t == 1, None, f"tr P = {t}"


@_check("P.rank_one_right_dual_right_algebra")
def _p_rank_one(c: _Context):
    pair = c.pair_right
    return _ok(_mismatch(c.P, endo.rank_one(c.H, pair.lam, pair.Lam)))


@_check("P.idempotent")
def _p_idem(c: _Context):
    return _ok(_mismatch(c.P @ c.P, c.P))


@_check("P.minimal_decomposition")
def _p_decomp(c: _Context):
    factors = I.decompose_integral_cointegral(c.H, c.P)
    return len(factors) == 1, None, f"r = {len(factors)}"


@_check("antipode.left_to_right_integrals")
def _s_left_right(c: _Context):
    H = c.H
    Lam_l = I.integral(H, "left", "algebra")
    return I.is_integral(H, H.antipode(Lam_l), "right", "algebra"), None, ""


for _k in (1, 2, 3, 4):

    def _ladder(c: _Context, which=_k):
        H = c.H
        A, B = I.ladder(H, which, False), I.ladder(H, which, True)
        ident = c.F.identity(H.n * H.n)
        bad = _mismatch(linalg.matmul(B, A), ident)
        if bad is not None:
            return False, bad, "inverse after ladder"
        return _ok(_mismatch(linalg.matmul(A, B), ident), "ladder after inverse")

    _check(f"ladder.{_k}")(_ladder)


@_check("operators.r_a_l_p")
def _r_a_l_p(c: _Context):
    H = c.H
    for i in range(H.n):
        a = H.basis_vector(i)
        Da = H.coproduct(a)
        for j in range(H.n):
            p = H.dual_basis(j)
            lhs = endo.right_mul(H, a) @ endo.left_hit(H, p)
            mid = endo.convolution(H, endo.identity(H), endo.rank_one(H, p, a))
            rhs = c.F.zeros((H.n, H.n))
            for x, y in zip(*np.nonzero(np.vectorize(bool, otypes=[bool])(Da))):
                q = endo.hit_dual(H, H.antipode(H.basis_vector(y)), p, "left")
                rhs = rhs + Da[x, y] * (endo.left_hit(H, q) @ endo.right_mul(H, H.basis_vector(x)))
            if _mismatch(lhs, mid) is not None or _mismatch(lhs, rhs) is not None:
                return False, (i, j), ""
    return True, None, ""


@_check("operators.r_p_r_a")
def _r_p_r_a(c: _Context):
    H = c.H
    for i in range(H.n):
        a = H.basis_vector(i)
        Da = H.coproduct(a)
        for j in range(H.n):
            p = H.dual_basis(j)
            lhs = endo.right_hit(H, endo.hit_dual(H, a, p, "left"))
            rhs = c.F.zeros((H.n, H.n))
            rp = endo.right_hit(H, p)
            for x, y in zip(*np.nonzero(np.vectorize(bool, otypes=[bool])(Da))):
                rhs = rhs + Da[x, y] * (
                    endo.right_mul(H, H.antipode(H.basis_vector(y))) @ rp @ endo.right_mul(H, H.basis_vector(x))
                )
            if _mismatch(lhs, rhs) is not None:
                return False, (i, j), ""
    return True, None, ""


@_check("E.rank_one_image")
def _e_rank_one(c: _Context):
    H = c.H
    for j in range(H.n):
        p = H.dual_basis(j)
        lp = endo.left_hit(H, p)
        for i in range(H.n):
            a = H.basis_vector(i)
            got = I.apply_cal_E(H, endo.rank_one(H, p, a), E=c.E)
            if _mismatch(got, lp @ endo.right_mul(H, a)) is not None:
                return False, (j, i), "E(α_j⊗a_i) ≠ ℓ(α_j)∘r(a_i)"
    return True, None, ""


@_check("E.matches_defining_trace")
def _e_trace(c: _Context):
    f = c.random_endo()
    return _ok(_mismatch(I.apply_cal_E(c.H, f, E=c.E), I.cal_E_by_trace(c.H, f)))


@_check("E.invertible")
def _e_inv(c: _Context):
    r = linalg.rank(c.E)
    return r == c.H.n ** 2, None, f"rank {r} of {c.H.n ** 2}"


@_check("E.l_p_r_a_span")
def _e_span(c: _Context):
    H = c.H
    vecs = [
        endo.vectorize(endo.left_hit(H, H.dual_basis(j)) @ endo.right_mul(H, H.basis_vector(i)))
        for j in range(H.n)
        for i in range(H.n)
    ]
    r = linalg.rank(np.array(vecs, dtype=object))
    return r == H.n ** 2, None, f"rank {r} of {H.n ** 2}"


def _intertwine_fs(c: _Context):
    return [c.random_endo(), c.random_endo(), c.s_minus2, endo.identity(c.H)]


@_check("E.intertwine_element")
def _e_c(c: _Context):
    H = c.H
    for k, f in enumerate(_intertwine_fs(c)):
        Ef = I.apply_cal_E(H, f, E=c.E)
        for i in range(H.n):
            a = H.basis_vector(i)
            lhs = endo.right_mul(H, a) @ Ef
            rhs = I.apply_cal_E(H, I.bullet_element(H, f, a), E=c.E)
            if _mismatch(lhs, rhs) is not None:
                return False, (k, i), "r(a)∘E(f) ≠ E(f•a)"
    return True, None, ""


@_check("E.intertwine_functional")
def _e_d(c: _Context):
    H = c.H
    for k, f in enumerate(_intertwine_fs(c)):
        Ef = I.apply_cal_E(H, f, E=c.E)
        for j in range(H.n):
            p = H.dual_basis(j)
            lhs = Ef @ endo.left_hit(H, p)
            rhs = I.apply_cal_E(H, I.bullet_functional(H, f, p), E=c.E)
            if _mismatch(lhs, rhs) is not None:
                return False, (k, j), "E(f)∘ℓ(p) ≠ E(f•p)"
    return True, None, ""


@_check("bullet.s_minus2_element")
def _bullet_element(c: _Context):
    H = c.H
    for i in range(H.n):
        if _mismatch(I.bullet_element(H, c.s_minus2, H.basis_vector(i)), H.counit[i] * c.s_minus2) is not None:
            return False, (i,), ""
    return True, None, ""


@_check("bullet.s_minus2_functional")
def _bullet_functional(c: _Context):
    H = c.H
    for j in range(H.n):
        p = H.dual_basis(j)
        if _mismatch(I.bullet_functional(H, c.s_minus2, p), (p @ H.unit) * c.s_minus2) is not None:
            return False, (j,), ""
    return True, None, ""


@_check("calP.integral_cointegral")
def _calp_ic(c: _Context):
    rep = I.is_integral_cointegral(c.H, c.calP)
    return rep.passed, rep.counterexample, rep.condition or ""


@_check("calP.trace_nonzero")
def _calp_tr(c: _Context):
    t = endo.trace(c.calP)
    return t != 0, None, f"tr E(s⁻²) = {t}"


@_check("calP.E_trace_nonzero")
def _calp_etr(c: _Context):
    t = endo.trace(I.apply_cal_E(c.H, c.calP, E=c.E))
    return t != 0, None, f"tr E(E(s⁻²)) = {t}"


@_check("calP.E_opcop_is_trace_times_eta_eps")
def _calp_opcop(c: _Context):
    H = c.H
    img = I.apply_cal_E(H, c.calP, "opcop")
    t = endo.trace(c.calP)
    ok = linalg.arrays_equal(img, t * endo.eta_eps(H)) and not linalg.is_zero(img)
    return ok, None, f"E_opcop(E(s⁻²)) = {linalg.scalar_multiple(img, endo.eta_eps(H))}·η∘ε, tr = {t}"


@_check("calP.minimal_decomposition")
def _calp_decomp(c: _Context):
    factors = I.decompose_integral_cointegral(c.H, c.calP)
    return len(factors) == 1, None, f"r = {len(factors)}"


@_check("P.trace_s_l_s_r")
def _p_trace_s_l_s_r(c: _Context):
    H = c.H
    for i in range(H.n):
        lp = endo.left_hit(H, H.dual_basis(i))
        for j in range(H.n):
            t = endo.trace(H.s @ lp @ H.s @ endo.right_mul(H, H.basis_vector(j)))
            if t != c.P[i, j]:
                return False, (i, j), ""
    return True, None, ""


@_check("P.trace_l_sa_s2_l")
def _p_trace_l_sa_s2_l(c: _Context):
    H = c.H
    for i in range(H.n):
        lp = endo.left_hit(H, H.dual_basis(i))
        for j in range(H.n):
            t = endo.trace(endo.left_mul(H, H.antipode(H.basis_vector(j))) @ c.s2 @ lp)
            if t != c.P[i, j]:
                return False, (i, j), ""
    return True, None, ""


@_check("P.equals_Ecop_s2_s")
def _p_equals_ecop(c: _Context):
    return _ok(_mismatch(I.apply_cal_E(c.H, c.s2, "cop") @ c.H.s, c.P))


@_check("calQ.partial_trace_is_P")
def _calq(c: _Context):
    return _ok(_mismatch(endo.partial_trace_left(I.cal_Q_big(c.H)), c.P))


@_check("antipode.from_integrals")
def _antipode_from_integrals(c: _Context):
    return _ok(_mismatch(I.antipode_from_integrals(c.H, c.pair_right), c.H.s))


@_check("frobenius.bijective")
def _frob_bij(c: _Context):
    r = linalg.rank(I.frobenius_map(c.H, c.pair_right.lam))
    return r == c.H.n, None, f"rank {r} of {c.H.n}"


@_check("frobenius.module_identities")
def _frob_identities(c: _Context):
    res = I.frobenius_identities(c.H, c.pair_right.lam)
    for name, bad in res.items():
        if bad is not None:
            return False, bad, name
    return True, None, ""


def _run(checks, c: _Context, report: SuiteReport) -> SuiteReport:
    for check_id, fn in checks:
        try:
            ok, bad, detail = fn(c)
            report.results.append(CheckResult(check_id, PASS if ok else FAIL, bad, detail))
        except (HopfintError, ZeroDivisionError, ValueError) as exc:
            report.results.append(CheckResult(check_id, FAIL, None, f"{type(exc).__name__}: {exc}"))
    return report


def check_ids() -> list[str]:
    return [cid for cid, _ in _CHECKS]


def check_suite(H: HopfAlgebra, seed: int = 0) -> SuiteReport:
    """Run every integral identity exhaustively over basis / dual-basis tuples."""
    return _run(_CHECKS, _Context(H, seed), SuiteReport(H.name, str(H.field), H.n))


def axiom_results(H: HopfAlgebra) -> list[CheckResult]:
    rep = verify_axioms(H)
    return [
        CheckResult(f"axiom.{c.code}", PASS if c.passed else FAIL, c.counterexample, c.name if c.passed else f"{c.name}: {c.detail}")
        for c in rep.checks
    ]


def check_paper(H: HopfAlgebra, seed: int = 0) -> SuiteReport:
    """Axioms, the identity suite and all diagram/algebra cross-checks."""
    from .diagram.checks import diagram_checks

    report = SuiteReport(H.name, str(H.field), H.n)
    report.results.extend(axiom_results(H))
    report.extend(check_suite(H, seed))
    report.results.extend(diagram_checks(H, seed))
    return report

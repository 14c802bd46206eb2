"""The thirteen acceptance criteria, exact, on the full builtin corpus.

Run under pytest (a summary line per criterion is printed at the end) or
directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import sys
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from corpus import corpus, tag  # noqa: E402

from hopfint import endo, integrals as I, linalg  # noqa: E402
from hopfint.builtins import sweedler  # noqa: E402
from hopfint.cli import main as cli_main  # noqa: E402
from hopfint.hopf import HopfAlgebra, algebra_to_dict, dual, variant, verify_axioms  # noqa: E402
from hopfint.scalars import QQ  # noqa: E402
from hopfint.suite import check_paper  # noqa: E402


@lru_cache(maxsize=None)
def report(H: HopfAlgebra):
    return check_paper(H)


def _entries(H: HopfAlgebra, prefixes: tuple[str, ...]) -> list[str]:
    rep = report(H)
    hits = [r for r in rep.results if r.id.startswith(prefixes)]
    assert hits, f"no report entries for {prefixes}"
    return [f"{tag(H)}: {r.id} {r.detail}".rstrip() for r in hits if not r.passed]


def _over_corpus(check) -> list[str]:
    failures: list[str] = []
    for H in corpus():
        failures += check(H)
    return failures


# criteria as functions of one algebra, returning failure descriptions


def c01_axioms(H):
    out = []
    for label, K in (("A", H), ("dual", dual(H)), ("op", variant(H, "op")), ("cop", variant(H, "cop"))):
        rep = verify_axioms(K)
        out += [f"{tag(H)} {label}: {c.code} {c.name}" for c in rep.failures()]
    return out


def c02_trace_P(H):
    t = endo.trace(I.kuperberg_P(H))
    return [] if t == 1 else [f"{tag(H)}: tr P = {t}"]


def c03_uniqueness(H):
    out = []
    for where in I.WHERE:
        for side in I.SIDES:
            sp = I.integral_space(H, side, where)
            if sp.dim != 1:
                out.append(f"{tag(H)}: dim {sp.symbol} = {sp.dim}")
    return out


def c04_P_rank_one(H):
    P = I.kuperberg_P(H)
    pair = I.normalized_pair(H, "right", "right")
    out = []
    if not (I.is_integral(H, pair.lam, "right", "dual") and I.is_integral(H, pair.Lam, "right", "algebra")):
        out.append(f"{tag(H)}: pair not in (∫^r, ∫_r)")
    if pair.lam @ pair.Lam != 1:
        out.append(f"{tag(H)}: λ(Λ) ≠ 1")
    if not linalg.arrays_equal(P, endo.rank_one(H, pair.lam, pair.Lam)):
        out.append(f"{tag(H)}: P ≠ λ⊗Λ")
    if not linalg.arrays_equal(P @ P, P):
        out.append(f"{tag(H)}: P² ≠ P")
    return out


def c05_Q(H):
    Q = I.trace_Q(H)
    pair = I.normalized_pair(H, "right", "left")
    out = []
    if not linalg.arrays_equal(Q, I.trace_Q_from_traces(H)):
        out.append(f"{tag(H)}: contraction ≠ trace formula")
    if not linalg.arrays_equal(Q, endo.rank_one(H, pair.lam, pair.Lam)):
        out.append(f"{tag(H)}: Q ≠ λ⊗Λ")
    return out


def c06_lambda_and_trace(H):
    return _entries(H, ("lambda.", "trace."))


def c07_ladders(H):
    return _entries(H, ("ladder.",))


def c08_trace_map(H):
    return _entries(H, ("E.", "bullet.", "calP.integral_cointegral", "calP.trace_nonzero", "P.trace_s_l_s_r", "P.trace_l_sa_s2_l", "P.equals_Ecop_s2_s"))


def c09_calQ(H):
    ok = linalg.arrays_equal(endo.partial_trace_left(I.cal_Q_big(H)), I.kuperberg_P(H))
    return [] if ok else [f"{tag(H)}: (tr⊗1)(𝒬) ≠ P"]


def c10_frobenius(H):
    return _entries(H, ("frobenius.", "antipode.from_integrals"))


def c11_diagrams(H):
    return _entries(H, ("diagram.",))


def c12_decomposition(H):
    out = []
    P = I.kuperberg_P(H)
    calP = I.apply_cal_E(H, endo.power(H, H.s, -2))
    for label, M in (("P", P), ("3P", 3 * P), ("E(s⁻²)", calP), ("Q", I.trace_Q(H))):
        if not I.is_integral_cointegral(H, M).passed:
            if label != "Q":
                out.append(f"{tag(H)}: {label} is not an integral and cointegral")
            continue
        factors = I.decompose_integral_cointegral(H, M)  # raises on a misplaced factor
        if len(factors) != 1:
            out.append(f"{tag(H)}: {label} decomposes with r = {len(factors)}")
    return out


def perturbed_sweedler() -> HopfAlgebra:
    H = sweedler(QQ)
    return HopfAlgebra("sweedler_sinv", H.field, H.basis, H.m, H.delta, H.s_inv, H.unit, H.counit)


def c13_negative_control(tmp_dir: Path) -> list[str]:
    H = perturbed_sweedler()
    out = []
    if not c04_P_rank_one(H):
        out.append("criterion 4 still passes with s replaced by s⁻¹")
    doc = algebra_to_dict(H)
    path = tmp_dir / "sweedler_sinv.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code = cli_main(["check-paper", "--machine", str(path)])
    if code != 1:
        out.append(f"check-paper exited {code}, expected 1")
    return out


# pytest entry points; the names feed the per-criterion summary


def test_criterion_01_axioms():
    failures = _over_corpus(c01_axioms)
    assert not failures, failures


def test_criterion_02_trace_P_is_one():
    failures = _over_corpus(c02_trace_P)
    assert not failures, failures


def test_criterion_03_uniqueness():
    failures = _over_corpus(c03_uniqueness)
    assert not failures, failures


def test_criterion_04_P_equals_lambda_Lambda():
    failures = _over_corpus(c04_P_rank_one)
    assert not failures, failures


def test_criterion_05_Q_forms_agree():
    failures = _over_corpus(c05_Q)
    assert not failures, failures


def test_criterion_06_lambda_and_trace_identities():
    failures = _over_corpus(c06_lambda_and_trace)
    assert not failures, failures


def test_criterion_07_ladders():
    failures = _over_corpus(c07_ladders)
    assert not failures, failures


def test_criterion_08_trace_map():
    failures = _over_corpus(c08_trace_map)
    assert not failures, failures


def test_criterion_09_calQ_partial_trace():
    failures = _over_corpus(c09_calQ)
    assert not failures, failures


def test_criterion_10_frobenius():
    failures = _over_corpus(c10_frobenius)
    assert not failures, failures


def test_criterion_11_diagram_agreement():
    failures = _over_corpus(c11_diagrams)
    assert not failures, failures


def test_criterion_12_minimal_decomposition():
    failures = _over_corpus(c12_decomposition)
    assert not failures, failures


def test_criterion_13_negative_control(tmp_path, capsys):
    failures = c13_negative_control(tmp_path)
    capsys.readouterr()
    assert not failures, failures


CRITERIA = [
    (1, "axioms", c01_axioms),
    (2, "trace P is one", c02_trace_P),
    (3, "uniqueness", c03_uniqueness),
    (4, "P equals lambda Lambda", c04_P_rank_one),
    (5, "Q forms agree", c05_Q),
    (6, "lambda and trace identities", c06_lambda_and_trace),
    (7, "ladders", c07_ladders),
    (8, "trace map", c08_trace_map),
    (9, "calQ partial trace", c09_calQ),
    (10, "frobenius", c10_frobenius),
    (11, "diagram agreement", c11_diagrams),
    (12, "minimal decomposition", c12_decomposition),
]


if __name__ == "__main__":
    import contextlib
    import io
    import tempfile

    failed = 0
    for k, name, fn in CRITERIA:
        bad = _over_corpus(fn)
        failed += bool(bad)
        print(f"criterion {k:2d} {name}: {'FAIL' if bad else 'PASS'}")
        for line in bad[:5]:
            print(f"    {line}")
    with tempfile.TemporaryDirectory() as tmp, contextlib.redirect_stdout(io.StringIO()):
        bad = c13_negative_control(Path(tmp))
    failed += bool(bad)
    print(f"criterion 13 negative control: {'FAIL' if bad else 'PASS'}")
    sys.exit(1 if failed else 0)

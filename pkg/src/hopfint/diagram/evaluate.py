"""Exact evaluation of diagrams against a Hopf algebra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .. import linalg
from ..errors import DiagramError, EvaluationError, HopfintError
from ..hopf import HopfAlgebra
from .ast import DiagramAST
from .plan import ContractionPlan, Network, Term, network, plan as make_plan


@dataclass(frozen=True, eq=False)
class TensorValue:
    """A map A^⊗inputs → A^⊗outputs; axes are (out1..outq, in1..inp)."""

    inputs: int
    outputs: int
    n: int
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (self.n,) * (self.inputs + self.outputs):
            raise ValueError(f"entries have shape {self.entries.shape}")

    @property
    def shape(self) -> tuple[int, ...]:
        return self.entries.shape

    def as_matrix(self) -> np.ndarray:
        return self.entries.reshape(self.n ** self.outputs, self.n ** self.inputs)

    @property
    def scalar(self):
        if self.inputs or self.outputs:
            raise ValueError("only a 0 -> 0 diagram has a scalar value")
        return self.entries[()]

    def __eq__(self, other):
        if not isinstance(other, TensorValue):
            return NotImplemented
        return (self.inputs, self.outputs, self.n) == (other.inputs, other.outputs, other.n) and linalg.arrays_equal(
            self.entries, other.entries
        )

    def to_nested(self):
        """Nested lists of scalar literals (a bare literal for 0 -> 0)."""
        return np.vectorize(str, otypes=[object])(self.entries).tolist()

    def partial_trace(self, out_k: int = 1, in_k: int = 1) -> "TensorValue":
        """Join free output ``out_k`` to free input ``in_k`` and sum."""
        if not (1 <= out_k <= self.outputs and 1 <= in_k <= self.inputs):
            raise ValueError("no such free ports")
        t = np.trace(self.entries, axis1=out_k - 1, axis2=self.outputs + in_k - 1)
        return TensorValue(self.inputs - 1, self.outputs - 1, self.n, np.asarray(t, dtype=object))


def _node_tensor(H: HopfAlgebra, term: Term, bindings: Mapping[str, np.ndarray]) -> np.ndarray:
    k = term.kind
    if k == "m":
        return H.m
    if k == "delta":
        return H.delta.transpose(1, 2, 0)
    if k == "s":
        return H.s
    if k == "sinv":
        return H.s_inv
    if k == "eta":
        return H.unit
    if k == "eps":
        return H.counit
    if k == "id":
        return H.field.identity(H.n)
    if k == "endo":
        if term.endo not in bindings:
            raise EvaluationError(f"missing binding for endo:{term.endo}")
        return bindings[term.endo]  # type: ignore[index]
    raise DiagramError(f"unknown node kind {k!r}")


def _check_bindings(H: HopfAlgebra, bindings: Mapping[str, object] | None) -> dict[str, np.ndarray]:
    out = {}
    for name, f in (bindings or {}).items():
        arr = np.asarray(f, dtype=object)
        if arr.shape != (H.n, H.n):
            raise EvaluationError(f"binding {name!r} has shape {arr.shape}, expected ({H.n}, {H.n})")
        try:
            out[name] = H.field.coerce_array(arr)
        except (HopfintError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise EvaluationError(f"binding {name!r}: {exc}") from exc
    return out


def _finish(H: HopfAlgebra, d: DiagramAST, net: Network, tensor, labels: tuple[int, ...]) -> TensorValue:
    want = net.out_labels + net.in_labels
    if sorted(labels) != sorted(want):
        raise EvaluationError("internal error: free labels do not match")
    arr = np.asarray(tensor, dtype=object)
    if arr.ndim:
        arr = arr.transpose([labels.index(x) for x in want])
    return TensorValue(d.inputs, d.outputs, H.n, H.field.coerce_array(arr))


def evaluate(
    H: HopfAlgebra,
    d: DiagramAST,
    bindings: Mapping[str, object] | None = None,
    plan: ContractionPlan | None = None,
) -> TensorValue:
    """Contract the network along the greedy plan (or a supplied one)."""
    binds = _check_bindings(H, bindings)
    net = network(d)
    tensors = {i: _node_tensor(H, t, binds) for i, t in enumerate(net.terms)}
    labels = {i: t.labels for i, t in enumerate(net.terms)}
    p = plan or make_plan(net, H.n)
    for st in p.steps:
        a = tensors.pop(st.left)
        la = labels.pop(st.left)
        if st.op == "trace":
            (lab,) = st.labels
            i, j = (k for k, x in enumerate(la) if x == lab)
            tensors[st.result] = np.asarray(np.trace(a, axis1=i, axis2=j), dtype=object)
            labels[st.result] = tuple(x for x in la if x != lab)
            continue
        b = tensors.pop(st.right)  # type: ignore[arg-type]
        lb = labels.pop(st.right)  # type: ignore[arg-type]
        if st.op == "outer":
            tensors[st.result] = np.multiply.outer(a, b)
            labels[st.result] = la + lb
        else:
            ax_a = [la.index(x) for x in st.labels]
            ax_b = [lb.index(x) for x in st.labels]
            tensors[st.result] = linalg.tensordot(a, b, (ax_a, ax_b))
            labels[st.result] = tuple(x for x in la if x not in st.labels) + tuple(x for x in lb if x not in st.labels)
    if p.final is None:
        return TensorValue(d.inputs, d.outputs, H.n, H.field.coerce_array(np.asarray(H.field.one, dtype=object)))
    return _finish(H, d, net, tensors[p.final], labels[p.final])


def evaluate_naive(H: HopfAlgebra, d: DiagramAST, bindings: Mapping[str, object] | None = None) -> TensorValue:
    """Reference evaluation: explicit sum over all consistent wire-label assignments.

    Independent of the planner and of tensordot.  Each node contributes only
    its nonzero entries, so the search is a backtracking join.
    """
    binds = _check_bindings(H, bindings)
    net = network(d)
    F = H.field
    free = net.out_labels + net.in_labels
    result = F.zeros((H.n,) * len(free))
    if not net.terms:
        result[()] = F.one
        return TensorValue(d.inputs, d.outputs, H.n, result)

    order = _join_order(net)
    assigned: set[int] = set()
    tables = []
    for ti in order:
        term = net.terms[ti]
        T = np.asarray(_node_tensor(H, term, binds), dtype=object)
        key_pos = [k for k, x in enumerate(term.labels) if x in assigned]
        index: dict[tuple, list] = {}
        for idx, v in np.ndenumerate(T):
            if not v:
                continue
            vals: dict[int, int] = {}
            if any(vals.setdefault(lab, i) != i for lab, i in zip(term.labels, idx)):
                continue  # a self-loop needs equal indices on both ends
            index.setdefault(tuple(idx[k] for k in key_pos), []).append((idx, v))
        tables.append((term.labels, [term.labels[k] for k in key_pos], index))
        assigned.update(term.labels)

    values = [0] * net.n_labels

    def walk(depth: int, acc) -> None:
        if depth == len(tables):
            pos = tuple(values[x] for x in free)
            result[pos] = result[pos] + acc
            return
        labs, keys, index = tables[depth]
        for idx, v in index.get(tuple(values[x] for x in keys), ()):
            for lab, i in zip(labs, idx):
                values[lab] = i
            walk(depth + 1, acc * v)

    walk(0, F.one)
    return TensorValue(d.inputs, d.outputs, H.n, result)


def _join_order(net: Network) -> list[int]:
    """Declaration order, but prefer terms connected to ones already placed."""
    remaining = list(range(len(net.terms)))
    placed: list[int] = []
    seen: set[int] = set()
    while remaining:
        pick = next((t for t in remaining if seen & set(net.terms[t].labels)), remaining[0])
        remaining.remove(pick)
        placed.append(pick)
        seen.update(net.terms[pick].labels)
    return placed


def diagrams_equal(
    H: HopfAlgebra, d1: DiagramAST, d2: DiagramAST, bindings: Mapping[str, object] | None = None
) -> bool:
    if d1.arity != d2.arity:
        raise DiagramError(f"arity mismatch: {d1.inputs} -> {d1.outputs} vs {d2.inputs} -> {d2.outputs}")
    return evaluate(H, d1, bindings) == evaluate(H, d2, bindings)

"""Tensor-network view of a diagram and greedy contraction planning."""

from __future__ import annotations

from dataclasses import dataclass

from .ast import DiagramAST, Port


@dataclass(frozen=True)
class Term:
    """One tensor of the network: a node (or an identity for a free-to-free wire).

    ``labels`` lists the wire label of each axis, outputs first, then inputs.
    """

    name: str
    kind: str
    endo: str | None
    labels: tuple[int, ...]


@dataclass(frozen=True)
class Network:
    terms: tuple[Term, ...]
    out_labels: tuple[int, ...]
    in_labels: tuple[int, ...]
    n_labels: int


def network(d: DiagramAST) -> Network:
    """Label every wire and attach labels to node axes."""
    src_of: dict[Port, int] = {}
    dst_of: dict[Port, int] = {}
    for i, w in enumerate(d.wires):
        src_of[w.src] = i
        dst_of[w.dst] = i
    terms = []
    for nd in d.nodes:
        labels = tuple(src_of[Port(nd.id, p)] for p in nd.outputs) + tuple(dst_of[Port(nd.id, p)] for p in nd.inputs)
        terms.append(Term(nd.id, nd.kind, nd.endo, labels))

    n_labels = len(d.wires)
    in_label: dict[int, int] = {}
    for i, w in enumerate(d.wires):
        if w.src.is_free and w.dst.is_free:
            # a bare strand becomes an identity tensor with its own input label
            terms.append(Term(f"<{w.src.name}->{w.dst.name}>", "id", None, (i, n_labels)))
            in_label[w.src.number] = n_labels
            n_labels += 1
        elif w.src.is_free:
            in_label[w.src.number] = i
    out_labels = tuple(dst_of[Port(None, f"out{k}")] for k in range(1, d.outputs + 1))
    in_labels = tuple(in_label[k] for k in range(1, d.inputs + 1))
    return Network(tuple(terms), out_labels, in_labels, n_labels)


@dataclass(frozen=True)
class Step:
    """One planned operation.

    ``op`` is ``trace`` (sum a repeated label inside one tensor), ``contract``
    (pairwise contraction over shared labels) or ``outer`` (disjoint pair).
    Operands and result are intermediate ids; leaves are numbered by term.
    """

    op: str
    left: int
    right: int | None
    labels: tuple[int, ...]
    result: int
    order: int
    cost: int


@dataclass(frozen=True)
class ContractionPlan:
    steps: tuple[Step, ...]
    n: int
    final: int | None  # id of the last intermediate, None for an empty network
    final_labels: tuple[int, ...]

    @property
    def max_order(self) -> int:
        return max((s.order for s in self.steps), default=0)

    @property
    def total_cost(self) -> int:
        return sum(s.cost for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def _after_trace(labels: tuple[int, ...], lab: int) -> tuple[int, ...]:
    return tuple(x for x in labels if x != lab)


def _merge(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    shared = tuple(x for x in a if x in b)
    result = tuple(x for x in a if x not in shared) + tuple(x for x in b if x not in shared)
    return shared, result


def plan(d: DiagramAST | Network, n: int) -> ContractionPlan:
    """Deterministic greedy plan.

    Repeated labels inside one tensor (self-loops) are traced first.  Then the
    pair of intermediates sharing at least one label whose result has the
    smallest order is contracted; ties go to the pair containing the
    earliest-declared nodes.  Disconnected pieces are joined by outer
    products at the end.  Step cost is ``n ** order`` of the result.
    """
    net = d if isinstance(d, Network) else network(d)
    items: dict[int, tuple[tuple[int, ...], int]] = {i: (t.labels, i) for i, t in enumerate(net.terms)}
    next_id = len(net.terms)
    steps: list[Step] = []

    for i in list(items):
        labels, rank = items[i]
        cur = i
        for lab in sorted({x for x in labels if labels.count(x) > 1}, key=labels.index):
            labels = _after_trace(labels, lab)
            steps.append(Step("trace", cur, None, (lab,), next_id, len(labels), n ** len(labels)))
            del items[cur]
            items[next_id] = (labels, rank)
            cur = next_id
            next_id += 1

    while len(items) > 1:
        best = None
        keys = sorted(items, key=lambda k: items[k][1])
        for ai, a in enumerate(keys):
            for b in keys[ai + 1:]:
                shared, result = _merge(items[a][0], items[b][0])
                if not shared:
                    continue
                key = (len(result), items[a][1], items[b][1])
                if best is None or key < best[0]:
                    best = (key, a, b, shared, result)
        if best is None:
            a, b = keys[0], keys[1]
            shared, result = (), items[a][0] + items[b][0]
            op = "outer"
        else:
            _, a, b, shared, result = best
            op = "contract"
        rank = min(items[a][1], items[b][1])
        steps.append(Step(op, a, b, shared, next_id, len(result), n ** len(result)))
        del items[a], items[b]
        items[next_id] = (result, rank)
        next_id += 1

    if not items:
        return ContractionPlan(tuple(steps), n, None, ())
    (final, (labels, _)), = items.items()
    return ContractionPlan(tuple(steps), n, final, labels)

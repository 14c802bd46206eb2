"""Diagram syntax tree and structural validation."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

import networkx as nx

from ..errors import DiagramError

# kind -> (input ports, output ports)
KINDS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "m": (("in1", "in2"), ("out",)),
    "delta": (("in",), ("out1", "out2")),
    "s": (("in",), ("out",)),
    "sinv": (("in",), ("out",)),
    "eta": ((), ("out",)),
    "eps": (("in",), ()),
    "id": (("in",), ("out",)),
    "endo": (("in",), ("out",)),
}

FREE_PORT = re.compile(r"^(in|out)(\d+)$")
IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Node:
    id: str
    kind: str
    endo: str | None = None  # binding name for kind "endo"
    line: int = 0

    @property
    def inputs(self) -> tuple[str, ...]:
        return KINDS[self.kind][0]

    @property
    def outputs(self) -> tuple[str, ...]:
        return KINDS[self.kind][1]

    @property
    def kind_text(self) -> str:
        return f"endo:{self.endo}" if self.kind == "endo" else self.kind

    def __eq__(self, other):
        if not isinstance(other, Node):
            return NotImplemented
        return (self.id, self.kind, self.endo) == (other.id, other.kind, other.endo)

    def __hash__(self):
        return hash((self.id, self.kind, self.endo))


@dataclass(frozen=True)
class Port:
    """A node port (``node`` set) or a free diagram port (``node`` is None, ``name`` like ``in2``)."""

    node: str | None
    name: str

    @property
    def is_free(self) -> bool:
        return self.node is None

    @property
    def number(self) -> int:
        m = FREE_PORT.match(self.name)
        if not (self.is_free and m):
            raise ValueError(f"{self} is not a free port")
        return int(m.group(2))

    def __str__(self) -> str:
        return self.name if self.node is None else f"{self.node}.{self.name}"


@dataclass(frozen=True)
class Wire:
    src: Port
    dst: Port
    line: int = 0

    def __eq__(self, other):
        if not isinstance(other, Wire):
            return NotImplemented
        return (self.src, self.dst) == (other.src, other.dst)

    def __hash__(self):
        return hash((self.src, self.dst))

    def __str__(self) -> str:
        return f"{self.src} -> {self.dst}"


@dataclass(frozen=True)
class DiagramAST:
    name: str
    inputs: int
    outputs: int
    nodes: tuple[Node, ...]
    wires: tuple[Wire, ...]
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._index.update({nd.id: nd for nd in self.nodes})

    @property
    def arity(self) -> tuple[int, int]:
        return self.inputs, self.outputs

    def node(self, node_id: str) -> Node:
        return self._index[node_id]

    def internal_wires(self) -> list[Wire]:
        return [w for w in self.wires if not w.src.is_free and not w.dst.is_free]

    def input_wire(self, k: int) -> Wire:
        return next(w for w in self.wires if w.src.is_free and w.src.number == k)

    def output_wire(self, k: int) -> Wire:
        return next(w for w in self.wires if w.dst.is_free and w.dst.number == k)

    def endo_names(self) -> list[str]:
        return sorted({nd.endo for nd in self.nodes if nd.kind == "endo"})  # type: ignore[type-var]

    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        for nd in self.nodes:
            g.add_node(nd.id, kind=nd.kind_text)
        for w in self.internal_wires():
            g.add_edge(w.src.node, w.dst.node, ports=(w.src.name, w.dst.name))
        return g

    def cycles(self) -> list[list[str]]:
        """Directed cycles as lists of node ids (each rotated to start at its first-declared node)."""
        rank = {nd.id: i for i, nd in enumerate(self.nodes)}
        found = []
        for cyc in nx.simple_cycles(nx.DiGraph(self.graph())):
            k = min(range(len(cyc)), key=lambda i: rank[cyc[i]])
            found.append(cyc[k:] + cyc[:k])
        return sorted(found, key=lambda c: [rank[x] for x in c])

    def cycle_wires(self) -> list[int]:
        """Indices of wires lying on some directed cycle."""
        g = nx.DiGraph(self.graph())
        comp = {}
        for i, scc in enumerate(nx.strongly_connected_components(g)):
            for v in scc:
                comp[v] = i
        out = []
        for i, w in enumerate(self.wires):
            if w.src.is_free or w.dst.is_free:
                continue
            if w.src.node == w.dst.node or comp[w.src.node] == comp[w.dst.node]:
                out.append(i)
        return out

    @property
    def has_cycle(self) -> bool:
        return bool(self.cycle_wires())

    def isomorphic(self, other: "DiagramAST") -> bool:
        """Same network up to renaming node ids (free port numbers must match)."""
        if self.arity != other.arity:
            return False

        def labelled(d: DiagramAST) -> nx.MultiDiGraph:
            g = d.graph()
            for w in d.wires:
                if w.src.is_free or w.dst.is_free:
                    a = w.src.node if not w.src.is_free else w.src.name
                    b = w.dst.node if not w.dst.is_free else w.dst.name
                    for free in (w.src, w.dst):
                        if free.is_free:
                            g.add_node(free.name, kind=free.name)
                    g.add_edge(a, b, ports=(w.src.name, w.dst.name))
            return g

        return nx.is_isomorphic(
            labelled(self),
            labelled(other),
            node_match=lambda x, y: x["kind"] == y["kind"],
            edge_match=lambda x, y: sorted(e["ports"] for e in x.values()) == sorted(e["ports"] for e in y.values()),
        )

    def format(self) -> str:
        return format_diagram(self)

    def __str__(self) -> str:
        return format_diagram(self)


def format_diagram(d: DiagramAST) -> str:
    lines = [f"diagram {d.name} : {d.inputs} -> {d.outputs}"]
    lines += [f"node {nd.id} {nd.kind_text}" for nd in d.nodes]
    lines += [f"wire {w}" for w in d.wires]
    return "\n".join(lines) + "\n"


def _where(line: int) -> str:
    return f" (line {line})" if line else ""


def validate(d: DiagramAST) -> DiagramAST:
    """Check the structural invariants; raise :class:`DiagramError` on the first violation."""
    if d.inputs < 0 or d.outputs < 0:
        raise DiagramError("arity counts must be non-negative")
    seen_ids: set[str] = set()
    for nd in d.nodes:
        if not IDENT.match(nd.id):
            raise DiagramError(f"invalid node id {nd.id!r}{_where(nd.line)}")
        if FREE_PORT.match(nd.id):
            raise DiagramError(f"node id {nd.id!r} is reserved for free ports{_where(nd.line)}")
        if nd.id in seen_ids:
            raise DiagramError(f"duplicate node id {nd.id!r}{_where(nd.line)}")
        if nd.kind not in KINDS:
            raise DiagramError(f"unknown node kind {nd.kind!r}{_where(nd.line)}")
        if (nd.kind == "endo") != bool(nd.endo):
            raise DiagramError(f"node {nd.id!r}: endo nodes need a name, other kinds take none{_where(nd.line)}")
        seen_ids.add(nd.id)

    used: dict[Port, Wire] = {}
    for w in d.wires:
        for port, direction in ((w.src, "out"), (w.dst, "in")):
            if port.is_free:
                m = FREE_PORT.match(port.name)
                if not m:
                    raise DiagramError(f"unknown free port {port.name!r}{_where(w.line)}")
                # a free input feeds the diagram, so it appears as a wire source
                expect = "in" if direction == "out" else "out"
                if m.group(1) != expect:
                    raise DiagramError(f"free port {port.name} cannot be a wire {'source' if direction == 'out' else 'target'}{_where(w.line)}")
                limit = d.inputs if expect == "in" else d.outputs
                if not 1 <= int(m.group(2)) <= limit:
                    raise DiagramError(f"free port {port.name} out of range for arity {d.inputs} -> {d.outputs}{_where(w.line)}")
            else:
                if port.node not in seen_ids:
                    raise DiagramError(f"unknown node {port.node!r}{_where(w.line)}")
                nd = d.node(port.node)  # type: ignore[arg-type]
                ports = nd.outputs if direction == "out" else nd.inputs
                if port.name not in ports:
                    role = "output" if direction == "out" else "input"
                    raise DiagramError(f"{nd.kind_text} node {nd.id!r} has no {role} port {port.name!r}{_where(w.line)}")
            if port in used:
                raise DiagramError(f"port used twice: {port}{_where(w.line)}")
            used[port] = w

    for nd in d.nodes:
        for name in nd.inputs + nd.outputs:
            if Port(nd.id, name) not in used:
                raise DiagramError(f"dangling port {nd.id}.{name}{_where(nd.line)}")
    for prefix, count in (("in", d.inputs), ("out", d.outputs)):
        for k in range(1, count + 1):
            if Port(None, f"{prefix}{k}") not in used:
                raise DiagramError(f"free-port numbering gap: {prefix}{k} is never used")
    return d


def make_diagram(name: str, inputs: int, outputs: int, nodes, wires) -> DiagramAST:
    """Build and validate a diagram from ``(id, kind)`` pairs and ``"src -> dst"`` strings."""
    node_objs = []
    for nid, kind in nodes:
        if kind.startswith("endo:"):
            node_objs.append(Node(nid, "endo", kind[5:]))
        else:
            node_objs.append(Node(nid, kind))
    wire_objs = []
    for text in wires:
        src, dst = (part.strip() for part in text.split("->"))
        wire_objs.append(Wire(_port(src), _port(dst)))
    return validate(DiagramAST(name, inputs, outputs, tuple(node_objs), tuple(wire_objs)))


def _port(text: str) -> Port:
    if "." in text:
        node, name = text.split(".", 1)
        return Port(node, name)
    return Port(None, text)


def cut_wire(d: DiagramAST, index: int) -> DiagramAST:
    """Cut internal wire ``index`` into a new free output ``out1`` and input ``in1``.

    Existing free ports shift up by one.  Tracing the result over
    (out1, in1) gives back the original diagram.
    """
    w = d.wires[index]
    if w.src.is_free or w.dst.is_free:
        raise DiagramError("only internal wires can be cut")

    def shift(p: Port) -> Port:
        if not p.is_free:
            return p
        m = FREE_PORT.match(p.name)
        return Port(None, f"{m.group(1)}{int(m.group(2)) + 1}")  # type: ignore[union-attr]

    wires = []
    for i, x in enumerate(d.wires):
        if i == index:
            wires.append(Wire(x.src, Port(None, "out1"), x.line))
            wires.append(Wire(Port(None, "in1"), x.dst, x.line))
        else:
            wires.append(replace(x, src=shift(x.src), dst=shift(x.dst)))
    return validate(DiagramAST(f"{d.name}_cut{index}", d.inputs + 1, d.outputs + 1, d.nodes, tuple(wires)))

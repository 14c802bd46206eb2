"""Builtin diagrams: axioms, the P and Q traces, ladders and the cut P network."""

from __future__ import annotations

from functools import lru_cache

from ..errors import UnknownBuiltinError
from ..integrals import LADDER_SHAPES
from .ast import DiagramAST, make_diagram
from .parser import parse_diagram

_TEXT = {
    "P": """
diagram P : 1 -> 1
node m m
node s1 s
node d delta
node s2 s
wire in1 -> m.in2
wire m.out -> s1.in
wire s1.out -> d.in
wire d.out1 -> s2.in
wire s2.out -> m.in1
wire d.out2 -> out1
""",
    "Q": """
diagram Q : 1 -> 1
node m m
node d delta
node s1 s
node s2 s
wire in1 -> m.in2
wire m.out -> d.in
wire d.out1 -> out1
wire d.out2 -> s1.in
wire s1.out -> s2.in
wire s2.out -> m.in1
""",
    # P with the s2 -> m.in1 arrow cut: the new pair is out1/in1
    "calQ": """
diagram calQ : 2 -> 2
node m m
node s1 s
node d delta
node s2 s
wire in2 -> m.in2
wire m.out -> s1.in
wire s1.out -> d.in
wire d.out1 -> s2.in
wire s2.out -> out1
wire in1 -> m.in1
wire d.out2 -> out2
""",
    "assoc_lhs": """
diagram assoc_lhs : 3 -> 1
node m1 m
node m2 m
wire in1 -> m1.in1
wire in2 -> m1.in2
wire m1.out -> m2.in1
wire in3 -> m2.in2
wire m2.out -> out1
""",
    "assoc_rhs": """
diagram assoc_rhs : 3 -> 1
node m1 m
node m2 m
wire in2 -> m1.in1
wire in3 -> m1.in2
wire in1 -> m2.in1
wire m1.out -> m2.in2
wire m2.out -> out1
""",
    "coassoc_lhs": """
diagram coassoc_lhs : 1 -> 3
node d1 delta
node d2 delta
wire in1 -> d1.in
wire d1.out1 -> d2.in
wire d2.out1 -> out1
wire d2.out2 -> out2
wire d1.out2 -> out3
""",
    "coassoc_rhs": """
diagram coassoc_rhs : 1 -> 3
node d1 delta
node d2 delta
wire in1 -> d1.in
wire d1.out1 -> out1
wire d1.out2 -> d2.in
wire d2.out1 -> out2
wire d2.out2 -> out3
""",
    "bialg_lhs": """
diagram bialg_lhs : 2 -> 2
node m m
node d delta
wire in1 -> m.in1
wire in2 -> m.in2
wire m.out -> d.in
wire d.out1 -> out1
wire d.out2 -> out2
""",
    "bialg_rhs": """
diagram bialg_rhs : 2 -> 2
node da delta
node db delta
node m1 m
node m2 m
wire in1 -> da.in
wire in2 -> db.in
wire da.out1 -> m1.in1
wire db.out1 -> m1.in2
wire da.out2 -> m2.in1
wire db.out2 -> m2.in2
wire m1.out -> out1
wire m2.out -> out2
""",
    "antipode_left": """
diagram antipode_left : 1 -> 1
node d delta
node s s
node m m
wire in1 -> d.in
wire d.out1 -> s.in
wire s.out -> m.in1
wire d.out2 -> m.in2
wire m.out -> out1
""",
    "antipode_right": """
diagram antipode_right : 1 -> 1
node d delta
node s s
node m m
wire in1 -> d.in
wire d.out1 -> m.in1
wire d.out2 -> s.in
wire s.out -> m.in2
wire m.out -> out1
""",
    # η∘ε, the unit of the convolution algebra
    "unit_law": """
diagram unit_law : 1 -> 1
node e eps
node u eta
wire in1 -> e.in
wire u.out -> out1
""",
    "trace_endo": """
diagram trace_endo : 0 -> 0
node f endo:f
wire f.out -> f.in
""",
    # extras used by the cross-checks
    "identity": "diagram identity : 1 -> 1 { wire in1 -> out1 }",
    "identity2": "diagram identity2 : 2 -> 2 { wire in1 -> out1; wire in2 -> out2 }",
    "unit_left": """
diagram unit_left : 1 -> 1
node u eta
node m m
wire u.out -> m.in1
wire in1 -> m.in2
wire m.out -> out1
""",
    "unit_right": """
diagram unit_right : 1 -> 1
node u eta
node m m
wire in1 -> m.in1
wire u.out -> m.in2
wire m.out -> out1
""",
    "counit_left": """
diagram counit_left : 1 -> 1
node d delta
node e eps
wire in1 -> d.in
wire d.out1 -> e.in
wire d.out2 -> out1
""",
    "counit_right": """
diagram counit_right : 1 -> 1
node d delta
node e eps
wire in1 -> d.in
wire d.out1 -> out1
wire d.out2 -> e.in
""",
    "trace_s": """
diagram trace_s : 0 -> 0
node s s
wire s.out -> s.in
""",
    # both halves of the integral-and-cointegral condition for an endo P
    "intcoint_co_lhs": """
diagram intcoint_co_lhs : 1 -> 2
node d delta
node f endo:P
wire in1 -> d.in
wire d.out1 -> f.in
wire f.out -> out1
wire d.out2 -> out2
""",
    "intcoint_co_rhs": """
diagram intcoint_co_rhs : 1 -> 2
node f endo:P
node u eta
wire in1 -> f.in
wire f.out -> out1
wire u.out -> out2
""",
    "intcoint_mul_lhs": """
diagram intcoint_mul_lhs : 2 -> 1
node f endo:P
node m m
wire in1 -> f.in
wire f.out -> m.in1
wire in2 -> m.in2
wire m.out -> out1
""",
    "intcoint_mul_rhs": """
diagram intcoint_mul_rhs : 2 -> 1
node f endo:P
node e eps
wire in1 -> f.in
wire f.out -> out1
wire in2 -> e.in
""",
}

REQUIRED = (
    "P", "Q", "assoc_lhs", "assoc_rhs", "coassoc_lhs", "coassoc_rhs", "bialg_lhs", "bialg_rhs",
    "antipode_left", "antipode_right", "unit_law",
    *(f"ladder{k}" for k in range(1, 5)), *(f"ladder{k}_inv" for k in range(1, 5)),
    "calQ", "trace_endo",
)


def ladder_diagram(which: int, inverted: bool = False) -> DiagramAST:
    """Element form of a ladder: in1 = a (top), in2 = b (bottom); out1 top, out2 bottom.

    The coproduct sits on the bottom strand and sends one output up the
    vertical strand into the product on the top strand.
    """
    up, vertical_left, _, _ = LADDER_SHAPES[which]
    up_port, on_port = ("out1", "out2") if up == 0 else ("out2", "out1")
    v_in, h_in = ("in1", "in2") if vertical_left else ("in2", "in1")
    nodes = [("d", "delta"), ("m", "m")]
    wires = [f"in2 -> d.in", f"d.{on_port} -> out2", f"in1 -> m.{h_in}", "m.out -> out1"]
    if inverted:
        nodes.append(("v", "s"))
        wires += [f"d.{up_port} -> v.in", f"v.out -> m.{v_in}"]
    else:
        wires.append(f"d.{up_port} -> m.{v_in}")
    name = f"ladder{which}_inv" if inverted else f"ladder{which}"
    return make_diagram(name, 2, 2, nodes, wires)


def ladder_composite(which: int, inverse_first: bool) -> DiagramAST:
    """Two ladders placed side by side, left X then right Y, glued along both strands.

    A forward strand runs X → Y; a reversed strand runs Y → X.  With one of
    X, Y inverted the composite is the identity: in1 → out1 on the top
    strand and in2 → out2 on the bottom.
    """
    _, _, top_rev, bot_rev = LADDER_SHAPES[which]
    X = ladder_diagram(which, inverted=inverse_first)
    Y = ladder_diagram(which, inverted=not inverse_first)
    nodes, wires = [], []
    for tag, D in (("x", X), ("y", Y)):
        nodes += [(f"{tag}{nd.id}", nd.kind_text) for nd in D.nodes]

    def rename(tag: str, p) -> str:
        return f"{tag}{p.node}.{p.name}"

    # per strand: (free input side, free output side); k = 1 top, 2 bottom
    for k, rev in ((1, top_rev), (2, bot_rev)):
        first, second = ("y", Y), ("x", X)
        if not rev:
            first, second = ("x", X), ("y", Y)
        # the strand enters `first`, continues into `second`
        w_in = first[1].input_wire(k)
        w_mid_src = first[1].output_wire(k)
        w_mid_dst = second[1].input_wire(k)
        w_out = second[1].output_wire(k)
        wires.append(f"in{k} -> {rename(first[0], w_in.dst)}")
        wires.append(f"{rename(first[0], w_mid_src.src)} -> {rename(second[0], w_mid_dst.dst)}")
        wires.append(f"{rename(second[0], w_out.src)} -> out{k}")
    for tag, D in (("x", X), ("y", Y)):
        for w in D.internal_wires():
            wires.append(f"{rename(tag, w.src)} -> {rename(tag, w.dst)}")
    name = f"ladder{which}_{'inv_then' if inverse_first else 'then_inv'}"
    return make_diagram(name, 2, 2, nodes, wires)


@lru_cache(maxsize=None)
def builtin_diagram(name: str) -> DiagramAST:
    if name in _TEXT:
        return parse_diagram(_TEXT[name])
    for k in range(1, 5):
        if name == f"ladder{k}":
            return ladder_diagram(k)
        if name == f"ladder{k}_inv":
            return ladder_diagram(k, inverted=True)
    raise UnknownBuiltinError(f"unknown builtin diagram {name!r}")


def builtin_diagram_names() -> list[str]:
    return list(REQUIRED) + [k for k in _TEXT if k not in REQUIRED]


def diagram_text(name: str) -> str:
    """Source text of a builtin (regenerated from the tree for the ladders)."""
    if name in _TEXT:
        return _TEXT[name].lstrip("\n")
    return builtin_diagram(name).format()

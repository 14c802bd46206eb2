"""Tensor-diagram language: parse, validate, plan and evaluate."""

from .ast import KINDS, DiagramAST, Node, Port, Wire, cut_wire, format_diagram, make_diagram, validate
from .evaluate import TensorValue, diagrams_equal, evaluate, evaluate_naive
from .library import builtin_diagram, builtin_diagram_names, diagram_text, ladder_composite, ladder_diagram
from .parser import parse_diagram, tokenize
from .plan import ContractionPlan, Step, network, plan

__all__ = [
    "KINDS", "DiagramAST", "Node", "Port", "Wire", "cut_wire", "format_diagram", "make_diagram", "validate",
    "TensorValue", "diagrams_equal", "evaluate", "evaluate_naive",
    "builtin_diagram", "builtin_diagram_names", "diagram_text", "ladder_composite", "ladder_diagram",
    "parse_diagram", "tokenize", "ContractionPlan", "Step", "network", "plan",
]

"""Line-oriented netlist format.

::

    # half adder
    INPUT A B
    OUTPUT S C
    XOR A B -> S ANC a [c1=1 c2=1 c12=1]
    AND A B -> C
    CLAMP A 1

Two-input gates: NAND AND OR NOR ANDN1 ANDN2 ORN1 ORN2 (optional ``c1= c2=
c12=`` parameters) and XOR EQUIV (which also need ``ANC wire``). Others:
``COPY w1 w2 ... wk``, ``NOT a -> y``, ``CONST0 -> y``, ``CONST1 -> y``.
Square brackets around parameters are optional. Any wire that is neither an
input nor an output is an ancilla.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import (
    ArityError,
    DuplicateClampError,
    NetlistError,
    NetlistSyntaxError,
    UndeclaredOutputError,
)

NAND_ORBIT_KINDS = ("NAND", "AND", "OR", "NOR", "ANDN1", "ANDN2", "ORN1", "ORN2")
XOR_KINDS = ("XOR", "EQUIV")
PARAM_KINDS = NAND_ORBIT_KINDS + XOR_KINDS
ALL_KINDS = PARAM_KINDS + ("COPY", "NOT", "CONST0", "CONST1")
_ARITY = {**{k: 2 for k in PARAM_KINDS}, "NOT": 1, "CONST0": 0, "CONST1": 0}
_PARAM_NAMES = ("c1", "c2", "c12")
_WIRE_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_.]*$")


@dataclass(frozen=True)
class GateInstance:
    kind: str
    inputs: tuple[str, ...]
    output: str | None = None
    ancilla: str | None = None
    params: tuple[float, float, float] | None = None
    line: int | None = field(default=None, compare=False)

    def wires(self) -> tuple[str, ...]:
        out = self.inputs
        if self.output is not None:
            out += (self.output,)
        if self.ancilla is not None:
            out += (self.ancilla,)
        return out

    def to_text(self) -> str:
        if self.kind == "COPY":
            return "COPY " + " ".join(self.inputs)
        parts = [self.kind, *self.inputs, "->", self.output]
        if self.ancilla is not None:
            parts += ["ANC", self.ancilla]
        if self.params is not None:
            parts.append("[" + " ".join(f"{k}={v!r}" for k, v in zip(_PARAM_NAMES, self.params)) + "]")
        return " ".join(parts)


@dataclass
class Netlist:
    inputs: list[str] = field(default_factory=list)
    outputs: list[str] = field(default_factory=list)
    gates: list[GateInstance] = field(default_factory=list)
    clamps: dict[str, int] = field(default_factory=dict)

    def wires(self) -> list[str]:
        """Spin order: inputs, then other wires by first use, then outputs."""
        io = set(self.inputs) | set(self.outputs)
        internal: dict[str, None] = {}
        for g in self.gates:
            for w in g.wires():
                if w not in io:
                    internal.setdefault(w)
        return list(self.inputs) + list(internal) + list(self.outputs)

    def roles(self) -> dict[str, str]:
        ins, outs = set(self.inputs), set(self.outputs)
        return {w: "input" if w in ins else "output" if w in outs else "ancilla"
                for w in self.wires()}

    def ancillas(self) -> list[str]:
        return [w for w, r in self.roles().items() if r == "ancilla"]

    def with_clamps(self, clamps: dict[str, int]) -> "Netlist":
        merged = dict(self.clamps)
        known = set(self.wires())
        for w, b in clamps.items():
            if w not in known:
                raise NetlistError(f"clamp on unknown wire {w!r}")
            if b not in (0, 1):
                raise NetlistError(f"clamp value for {w!r} must be 0 or 1")
            if merged.get(w, b) != b:
                raise DuplicateClampError(f"wire {w!r} clamped to both 0 and 1")
            merged[w] = b
        return Netlist(list(self.inputs), list(self.outputs), list(self.gates), merged)

    def to_text(self) -> str:
        lines = []
        if self.inputs:
            lines.append("INPUT " + " ".join(self.inputs))
        if self.outputs:
            lines.append("OUTPUT " + " ".join(self.outputs))
        lines += [g.to_text() for g in self.gates]
        lines += [f"CLAMP {w} {b}" for w, b in self.clamps.items()]
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.to_text()


def _check_wire(tok: str, lineno: int, col: int) -> str:
    if not _WIRE_RE.match(tok) or tok.upper() in ("->", "ANC"):
        raise NetlistSyntaxError(f"bad wire name {tok!r}", lineno, col)
    return tok


def _tokens(line: str):
    """(column, token) pairs, 1-based columns; brackets become whitespace."""
    out = []
    for m in re.finditer(r"[^\s\[\]]+", line):
        out.append((m.start() + 1, m.group()))
    return out


def _parse_gate(kind: str, toks, lineno: int) -> GateInstance:
    if kind == "COPY":
        wires = tuple(_check_wire(t, lineno, c) for c, t in toks)
        if len(wires) < 2:
            raise ArityError("COPY needs at least two wires", lineno)
        return GateInstance("COPY", wires, line=lineno)

    words = [t for _, t in toks]
    if "->" not in words:
        raise NetlistSyntaxError(f"{kind} line is missing '->'", lineno)
    arrow = words.index("->")
    inputs = tuple(_check_wire(t, lineno, c) for c, t in toks[:arrow])
    if len(inputs) != _ARITY[kind]:
        raise ArityError(f"{kind} takes {_ARITY[kind]} input(s), got {len(inputs)}", lineno)
    rest = toks[arrow + 1:]
    if not rest:
        raise NetlistSyntaxError(f"{kind} line has no output wire", lineno)
    output = _check_wire(rest[0][1], lineno, rest[0][0])
    rest = rest[1:]

    ancilla = None
    if rest and rest[0][1].upper() == "ANC":
        if len(rest) < 2:
            raise NetlistSyntaxError("ANC needs a wire name", lineno, rest[0][0])
        ancilla = _check_wire(rest[1][1], lineno, rest[1][0])
        rest = rest[2:]
    if kind in XOR_KINDS and ancilla is None:
        raise ArityError(f"{kind} needs an ancilla wire (ANC name)", lineno)
    if kind not in XOR_KINDS and ancilla is not None:
        raise ArityError(f"{kind} takes no ancilla", lineno)

    params = None
    if rest:
        if kind not in PARAM_KINDS:
            raise NetlistSyntaxError(f"{kind} takes no parameters", lineno, rest[0][0])
        given = {}
        for col, tok in rest:
            key, eq, val = tok.partition("=")
            if not eq or key not in _PARAM_NAMES or key in given:
                raise NetlistSyntaxError(f"bad parameter {tok!r}", lineno, col)
            try:
                given[key] = float(val)
            except ValueError:
                raise NetlistSyntaxError(f"bad number in {tok!r}", lineno, col) from None
        params = tuple(given.get(k, 1.0) for k in _PARAM_NAMES)
    return GateInstance(kind, inputs, output, ancilla, params, line=lineno)


def parse_netlist(source: str) -> Netlist:
    """Parse and structurally validate netlist text."""
    net = Netlist()
    declared: set[str] = set()
    clamp_lines: list[tuple[str, int, int]] = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        col, head = toks[0]
        key = head.upper()
        args = toks[1:]
        if key in ("INPUT", "OUTPUT"):
            if not args:
                raise NetlistSyntaxError(f"{key} needs at least one wire", lineno, col)
            for c, t in args:
                w = _check_wire(t, lineno, c)
                if w in declared:
                    raise NetlistError(f"wire {w!r} declared twice", lineno, c)
                declared.add(w)
                (net.inputs if key == "INPUT" else net.outputs).append(w)
        elif key == "CLAMP":
            if len(args) != 2 or args[1][1] not in ("0", "1"):
                raise NetlistSyntaxError("CLAMP takes a wire and 0 or 1", lineno, col)
            w = _check_wire(args[0][1], lineno, args[0][0])
            clamp_lines.append((w, int(args[1][1]), lineno))
        elif key in ALL_KINDS:
            net.gates.append(_parse_gate(key, args, lineno))
        else:
            raise NetlistSyntaxError(f"unknown statement {head!r}", lineno, col)

    driven: dict[str, int] = {}
    for g in net.gates:
        if g.output is None:
            continue
        if g.output in driven:
            raise NetlistError(f"wire {g.output!r} is driven twice "
                               f"(first on line {driven[g.output]})", g.line)
        if g.output in net.inputs:
            raise NetlistError(f"gate drives input wire {g.output!r}", g.line)
        driven[g.output] = g.line
    referenced = {w for g in net.gates for w in g.wires()}
    for w in net.outputs:
        if w not in referenced:
            raise UndeclaredOutputError(f"output {w!r} is not connected to any gate")

    known = set(net.wires())
    for w, b, lineno in clamp_lines:
        if w not in known:
            raise NetlistError(f"clamp on unknown wire {w!r}", lineno)
        if net.clamps.get(w, b) != b:
            raise DuplicateClampError(f"wire {w!r} clamped to both 0 and 1", lineno)
        net.clamps[w] = b
    return net

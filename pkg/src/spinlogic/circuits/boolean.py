"""Plain Boolean evaluation of a netlist, independent of any Hamiltonian."""
from __future__ import annotations

from ..symmetry import TABLES
from .netlist import NAND_ORBIT_KINDS, XOR_KINDS, Netlist


class InconsistentCircuit(ValueError):
    pass


def evaluate_netlist(net: Netlist, inputs: dict[str, int]) -> dict[str, int]:
    """Propagate input bits through the gates until nothing changes.

    Returns every wire whose value is forced. XOR ancillas are not part of the
    Boolean semantics and stay unassigned.
    """
    values = {w: int(b) for w, b in inputs.items()}
    for w, b in net.clamps.items():
        if values.get(w, b) != b:
            raise InconsistentCircuit(f"input {w}={values[w]} contradicts clamp {b}")
        values[w] = b

    def put(w, b):
        if values.get(w, b) != b:
            raise InconsistentCircuit(f"wire {w} forced to both values")
        changed = w not in values
        values[w] = b
        return changed

    changed = True
    while changed:
        changed = False
        for g in net.gates:
            if g.kind in NAND_ORBIT_KINDS or g.kind in XOR_KINDS:
                a, b = g.inputs
                if a in values and b in values:
                    changed |= put(g.output, TABLES[g.kind](values[a], values[b]))
            elif g.kind == "NOT":
                if g.inputs[0] in values:
                    changed |= put(g.output, 1 - values[g.inputs[0]])
            elif g.kind in ("CONST0", "CONST1"):
                changed |= put(g.output, int(g.kind == "CONST1"))
            elif g.kind == "COPY":
                known = [values[w] for w in g.inputs if w in values]
                if known:
                    for w in g.inputs:
                        changed |= put(w, known[0])
    return values

"""Lower a netlist to a circuit Hamiltonian: one spin per wire, one term block per gate."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .. import gates as G
from ..errors import CompileError, MappingError
from ..poly import SpinPolynomial, dumps, embed, evaluate, from_dict, to_dict
from ..symmetry import TABLES, stabilizer
from .netlist import NAND_ORBIT_KINDS, XOR_KINDS, GateInstance, Netlist, parse_netlist


@dataclass(frozen=True)
class Placement:
    gate_id: int
    kind: str
    wires: tuple[str, ...]
    spins: tuple[int, ...]
    params: tuple[float, float, float] | None
    stabilizer_order: int
    ground_energy: float

    @property
    def n_params(self) -> int:
        return 0 if self.params is None else len(self.params)

    def to_dict(self) -> dict:
        return {
            "gate": self.kind,
            "wires": list(self.wires),
            "spins": list(self.spins),
            "params": None if self.params is None else [float(v) for v in self.params],
            "stabilizer_order": self.stabilizer_order,
            "ground_energy": float(self.ground_energy),
        }

    @classmethod
    def from_dict(cls, gate_id: int, d: dict) -> "Placement":
        params = d.get("params")
        return cls(gate_id, d["gate"], tuple(d["wires"]), tuple(d["spins"]),
                   None if params is None else tuple(float(v) for v in params),
                   int(d["stabilizer_order"]), float(d["ground_energy"]))


@dataclass
class CompiledCircuit:
    netlist: Netlist
    hamiltonian: SpinPolynomial
    wires: list[str]
    roles: dict[str, str]
    placements: list[Placement]
    ground_energy_expected: float
    wire_index: dict[str, int] = field(init=False)

    def __post_init__(self):
        self.wire_index = {w: i for i, w in enumerate(self.wires)}
        if self.hamiltonian.n_spins != len(self.wires):
            raise CompileError("hamiltonian size does not match wire count")

    @property
    def n_spins(self) -> int:
        return self.hamiltonian.n_spins

    @property
    def clamps(self) -> dict[str, int]:
        return dict(self.netlist.clamps)

    def wires_with_role(self, role: str) -> list[str]:
        return [w for w in self.wires if self.roles[w] == role]

    @property
    def inputs(self) -> list[str]:
        return list(self.netlist.inputs)

    @property
    def outputs(self) -> list[str]:
        return list(self.netlist.outputs)

    @property
    def ancillas(self) -> list[str]:
        return self.wires_with_role("ancilla")

    def links(self) -> list[tuple[int, int]]:
        """Spin pairs with a nonzero net two-spin coefficient."""
        return [k for k, c in self.hamiltonian.items() if len(k) == 2]

    def n_links(self) -> int:
        return len(self.links())

    def with_clamps(self, clamps: dict[str, int]) -> "CompiledCircuit":
        """Same circuit with extra input/output clamps added to the Hamiltonian."""
        net = self.netlist.with_clamps(clamps)
        h = self.hamiltonian
        for w, b in clamps.items():
            if self.netlist.clamps.get(w) == b:
                continue
            h = h + embed(G.clamp(b), [self.wire_index[w]], self.n_spins)
        return CompiledCircuit(net, h, list(self.wires), dict(self.roles),
                               list(self.placements), self.ground_energy_expected)

    def to_dict(self) -> dict:
        d = to_dict(self.hamiltonian, self.wires)
        d["roles"] = {w: self.roles[w] for w in self.wires}
        d["clamps"] = dict(self.netlist.clamps)
        d["ground_energy_expected"] = float(self.ground_energy_expected)
        d["placements"] = [p.to_dict() for p in self.placements]
        d["netlist"] = self.netlist.to_text()
        return d

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "CompiledCircuit":
        h, wires = from_dict(d)
        net = parse_netlist(d["netlist"])
        return cls(net, h, wires, dict(d["roles"]),
                   [Placement.from_dict(i, p) for i, p in enumerate(d["placements"])],
                   float(d["ground_energy_expected"]))

    @classmethod
    def from_json(cls, text: str) -> "CompiledCircuit":
        return cls.from_dict(json.loads(text))


# per-gate lowering --------------------------------------------------------------

def _local(g: GateInstance, default_params) -> tuple[SpinPolynomial, tuple | None, int, float]:
    """Local polynomial (spins in ``g.wires()`` order), params, stabilizer order, ground energy."""
    if g.kind in NAND_ORBIT_KINDS:
        p = G.NandParams(*(g.params or default_params))
        return (G.gate_by_name(g.kind, p), p.as_tuple(),
                len(stabilizer(TABLES[g.kind])), -(p.c1 + p.c2 + p.c12))
    if g.kind in XOR_KINDS:
        p = G.XorParams(*(g.params or default_params))
        return (G.gate_by_name(g.kind, p), p.as_tuple(),
                len(stabilizer(TABLES[g.kind])), G.xor_ground_energy(p))
    if g.kind == "COPY":
        k = len(g.inputs)
        h = G.k_copy(k)
        return h, None, 2, -k * (k - 1) / 2
    if g.kind == "NOT":
        h = SpinPolynomial(2, {(): 1.0, (0, 1): 1.0})
        return h, None, 2, 0.0
    if g.kind in ("CONST0", "CONST1"):
        sign = -1.0 if g.kind == "CONST0" else 1.0
        return SpinPolynomial(1, {(): 1.0, (0,): sign}), None, 1, 0.0
    raise CompileError(f"unknown gate kind {g.kind!r}")  # pragma: no cover


def compile_netlist(net: Netlist | str, params=(1.0, 1.0, 1.0)) -> CompiledCircuit:
    """Sum the embedded gate and clamp Hamiltonians of ``net``.

    ``params`` is the ``(c1, c2, c12)`` default for parameterized gates that
    do not set their own. A gate whose wires repeat (``NAND t t -> c``) has
    those spins identified.
    """
    if isinstance(net, str):
        net = parse_netlist(net)
    wires = net.wires()
    index = {w: i for i, w in enumerate(wires)}
    n = len(wires)
    h = SpinPolynomial.zero(n)
    placements = []
    expected = 0.0
    for gid, g in enumerate(net.gates):
        if g.kind in XOR_KINDS and g.ancilla is None:
            raise CompileError(f"{g.kind} on line {g.line} needs an ancilla wire; "
                               "the two-local form uses four spins")
        local, p, stab, e0 = _local(g, params)
        spins = tuple(index[w] for w in g.wires())
        try:
            placed = embed(local, spins, n)
        except MappingError:
            placed = embed(local, spins, n, allow_merge=True)
            e0 = _merged_ground(local, spins)
        h = h + placed
        expected += e0
        placements.append(Placement(gid, g.kind, g.wires(), spins, p, stab, e0))
    for w, b in net.clamps.items():
        h = h + embed(G.clamp(b), [index[w]], n)
    return CompiledCircuit(net, h, wires, net.roles(), placements, expected)


def _merged_ground(local: SpinPolynomial, spins: tuple[int, ...]) -> float:
    # minimum over local states whose tied spins agree
    groups: dict[int, list[int]] = {}
    for i, s in enumerate(spins):
        groups.setdefault(s, []).append(i)
    best = None
    for bits in itertools.product((0, 1), repeat=len(groups)):
        word = 0
        for b, members in zip(bits, groups.values()):
            for i in members:
                word |= b << i
        e = evaluate(local, word)
        best = e if best is None else min(best, e)
    return best


def free_parameter_count(c: CompiledCircuit) -> int:
    return sum(p.n_params for p in c.placements)

"""Exhaustive check that a compiled circuit's ground space is its truth table."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from ..poly import DEFAULT_CAP, TIE_TOL, energies
from .boolean import InconsistentCircuit, evaluate_netlist
from .compiler import CompiledCircuit

Bits = tuple[int, ...]


@dataclass(frozen=True)
class Counterexample:
    inputs: Bits
    assignment: str
    energy: float
    reason: str


@dataclass
class VerificationReport:
    passed: bool
    ground_energy: float
    expected_ground_energy: float
    inputs: list[str]
    outputs: list[str]
    table: dict[Bits, Bits] = field(default_factory=dict)
    oracle: dict[Bits, Bits] = field(default_factory=dict)
    ground_counts: dict[Bits, int] = field(default_factory=dict)
    ancilla_map: dict[Bits, dict[str, int]] = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)

    def format(self) -> str:
        lines = [f"{'PASS' if self.passed else 'FAIL'}  ground energy {self.ground_energy:g} "
                 f"(expected {self.expected_ground_energy:g})",
                 " ".join(self.inputs) + " -> " + " ".join(self.outputs)]
        for x in sorted(self.oracle):
            got = self.table.get(x)
            got_s = "".join(map(str, got)) if got is not None else "?"
            mark = "" if got == self.oracle[x] else "   <-- expected " + "".join(map(str, self.oracle[x]))
            lines.append("".join(map(str, x)) + " -> " + got_s + mark)
        for ce in self.counterexamples:
            lines.append(f"counterexample: inputs {''.join(map(str, ce.inputs))} "
                         f"state {ce.assignment} energy {ce.energy:g}: {ce.reason}")
        return "\n".join(lines)


def _bits_of(words: np.ndarray, spins: list[int]) -> np.ndarray:
    # rows of bits for the given spins, first spin first
    return np.stack([(words >> s) & 1 for s in spins], axis=-1) if spins else \
        np.zeros((len(words), 0), dtype=np.int64)


def verify(c: CompiledCircuit, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Compare the exact ground space with the Boolean evaluation of the netlist.

    Checks the ground energy against the sum of gate ground energies, that
    every admissible input pattern has at least one ground state, and that
    the ground states project onto the oracle's outputs.
    """
    e = energies(c.hamiltonian, cap=cap)
    exact = np.issubdtype(e.dtype, np.integer)
    emin = e.min()
    ground = np.flatnonzero(e == emin if exact else e <= emin + TIE_TOL)
    gmin = int(emin) if exact else float(emin)

    in_spins = [c.wire_index[w] for w in c.inputs]
    out_spins = [c.wire_index[w] for w in c.outputs]
    anc = c.ancillas
    anc_spins = [c.wire_index[w] for w in anc]
    gin = _bits_of(ground, in_spins)
    gout = _bits_of(ground, out_spins)
    ganc = _bits_of(ground, anc_spins)

    report = VerificationReport(True, gmin, c.ground_energy_expected, c.inputs, c.outputs)
    if abs(gmin - c.ground_energy_expected) > TIE_TOL:
        report.passed = False
        w = int(ground[0])
        report.counterexamples.append(Counterexample(
            tuple(int(b) for b in gin[0]), _word_bits(w, c.n_spins), gmin,
            "ground energy differs from the sum of gate ground energies"))

    by_input: dict[Bits, list[int]] = {}
    for row, x in enumerate(map(tuple, gin.tolist())):
        by_input.setdefault(x, []).append(row)

    clamps = c.clamps
    for x in itertools.product((0, 1), repeat=len(in_spins)):
        assigned = dict(zip(c.inputs, x))
        if any(clamps.get(w, b) != b for w, b in assigned.items()):
            continue
        try:
            vals = evaluate_netlist(c.netlist, assigned)
        except InconsistentCircuit:
            continue
        if any(clamps.get(w, vals.get(w)) != vals.get(w) for w in clamps):
            continue
        expect = tuple(vals[w] for w in c.outputs)
        report.oracle[x] = expect
        rows = by_input.get(x, [])
        report.ground_counts[x] = len(rows)
        if not rows:
            report.passed = False
            word = _best_with_inputs(e, in_spins, x)
            report.counterexamples.append(Counterexample(
                x, _word_bits(word, c.n_spins), _num(e[word]),
                "input pattern has no ground state"))
            continue
        outs = {tuple(gout[r].tolist()) for r in rows}
        report.table[x] = next(iter(outs)) if len(outs) == 1 else None
        for r in rows:
            if tuple(gout[r].tolist()) != expect:
                report.passed = False
                report.counterexamples.append(Counterexample(
                    x, _word_bits(int(ground[r]), c.n_spins), gmin,
                    "ground state output disagrees with Boolean evaluation"))
                break
        first = rows[0]
        report.ancilla_map[x] = {w: int(b) for w, b in zip(anc, ganc[first].tolist())}

    admissible = set(report.oracle)
    stray = [r for x, rows in by_input.items() if x not in admissible for r in rows]
    if stray:
        report.passed = False
        r = stray[0]
        report.counterexamples.append(Counterexample(
            tuple(gin[r].tolist()), _word_bits(int(ground[r]), c.n_spins), gmin,
            "ground state with inputs excluded by clamps"))
    return report


def _num(v):
    return int(v) if float(v).is_integer() else float(v)


def _word_bits(word: int, n: int) -> str:
    return "".join(str((word >> k) & 1) for k in range(n))


def _best_with_inputs(e: np.ndarray, in_spins: list[int], x: Bits) -> int:
    words = np.arange(len(e), dtype=np.int64)
    mask = np.ones(len(e), dtype=bool)
    for s, b in zip(in_spins, x):
        mask &= ((words >> s) & 1) == b
    cand = np.flatnonzero(mask)
    return int(cand[np.argmin(e[cand])])

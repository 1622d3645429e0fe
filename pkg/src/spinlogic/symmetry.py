"""Spin permutations and flips acting on Hamiltonians and truth tables.

An element is stored in normal form ``(perm, mask)``: spin ``i`` is first
negated when ``mask[i]`` is set and then moved to position ``perm[i]``. On a
polynomial this sends ``s_i`` to ``(-1)**mask[i] * s_perm[i]``; on bit
strings it sends bit ``b_i`` to position ``perm[i]`` with value
``b_i ^ mask[i]``. Both actions agree: the ground states of ``g(H)`` are the
images of the ground states of ``H``.

Products follow operator notation. ``g * h`` applies ``h`` first, and the
word ``"F1.F2.R12"`` is ``F1 * F2 * R12``. Generator labels are 1-based
(``F1`` negates spin 0, ``R12`` swaps spins 0 and 1).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, PartitionError, RoleError
from .poly import SpinPolynomial


@dataclass(frozen=True, order=True)
class SymmetryOp:
    perm: tuple[int, ...]
    mask: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"{self.perm} is not a permutation of range({n})")
        if len(self.mask) != n or any(m not in (0, 1) for m in self.mask):
            raise ValueError(f"bad flip mask {self.mask} for {n} spins")

    @property
    def n_spins(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "SymmetryOp":
        return cls(tuple(range(n)), (0,) * n)

    @classmethod
    def flip(cls, *spins: int, n: int) -> "SymmetryOp":
        mask = [0] * n
        for s in spins:
            mask[s] ^= 1
        return cls(tuple(range(n)), tuple(mask))

    @classmethod
    def swap(cls, i: int, j: int, n: int) -> "SymmetryOp":
        perm = list(range(n))
        perm[i], perm[j] = j, i
        return cls(tuple(perm), (0,) * n)

    def __mul__(self, other: "SymmetryOp") -> "SymmetryOp":
        if not isinstance(other, SymmetryOp):
            return NotImplemented
        if other.n_spins != self.n_spins:
            raise DimensionError("composing operations on different spin counts")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n_spins))
        mask = tuple(other.mask[i] ^ self.mask[other.perm[i]] for i in range(self.n_spins))
        return SymmetryOp(perm, mask)

    def inverse(self) -> "SymmetryOp":
        n = self.n_spins
        perm = [0] * n
        mask = [0] * n
        for i, p in enumerate(self.perm):
            perm[p] = i
            mask[p] = self.mask[i]
        return SymmetryOp(tuple(perm), tuple(mask))

    def order(self) -> int:
        e = SymmetryOp.identity(self.n_spins)
        g, k = self, 1
        while g != e:
            g, k = g * self, k + 1
        return k

    def extend(self, n: int) -> "SymmetryOp":
        """Same operation on ``n`` spins, acting trivially on the extra ones."""
        if n < self.n_spins:
            raise DimensionError(f"cannot shrink {self.n_spins}-spin operation to {n}")
        extra = range(self.n_spins, n)
        return SymmetryOp(self.perm + tuple(extra), self.mask + (0,) * len(extra))

    def apply_bits(self, bits: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.n_spins
        for i, b in enumerate(bits):
            out[self.perm[i]] = b ^ self.mask[i]
        return tuple(out)

    def apply_word(self, word: int) -> int:
        bits = [(word >> k) & 1 for k in range(self.n_spins)]
        return sum(b << k for k, b in enumerate(self.apply_bits(bits)))

    def __call__(self, h: SpinPolynomial) -> SpinPolynomial:
        return apply_to_hamiltonian(self, h)

    def label(self) -> str:
        """Readable product of generators, e.g. ``F1.F3.R12``."""
        n = self.n_spins
        # factor as (flips) * (permutation) so the label parses back to self
        flips = self * SymmetryOp(self.perm, (0,) * n).inverse()
        parts = [f"F{i + 1}" for i, m in enumerate(flips.mask) if m]
        seen = set()
        for i in range(n):
            if i in seen or self.perm[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j + 1)
                j = self.perm[j]
            parts.append("P(" + ",".join(map(str, cyc)) + ")" if len(cyc) > 2
                         else f"R{cyc[0]}{cyc[1]}")
        return ".".join(parts) if parts else "e"

    def __str__(self):
        return self.label()


_GEN_RE = re.compile(r"^(?:F(\d)|R(\d)(\d)|e)$")


def parse_word(word: str, n: int = 3) -> SymmetryOp:
    """Reduce a generator word such as ``"F1.F2.R12"`` to normal form."""
    g = SymmetryOp.identity(n)
    word = word.strip()
    if not word:
        return g
    for tok in word.split("."):
        m = _GEN_RE.match(tok.strip())
        if not m:
            raise ValueError(f"unknown generator {tok!r}")
        if m.group(1):
            k = int(m.group(1)) - 1
            if not 0 <= k < n:
                raise ValueError(f"{tok} outside {n} spins")
            g = g * SymmetryOp.flip(k, n=n)
        elif m.group(2):
            i, j = int(m.group(2)) - 1, int(m.group(3)) - 1
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"{tok} outside {n} spins")
            g = g * SymmetryOp.swap(i, j, n)
    return g


def apply_to_hamiltonian(g: SymmetryOp, h: SpinPolynomial) -> SpinPolynomial:
    if g.n_spins != h.n_spins:
        if g.n_spins < h.n_spins:
            g = g.extend(h.n_spins)
        else:
            raise DimensionError(f"{g.n_spins}-spin operation on {h.n_spins}-spin polynomial")
    out = []
    for subset, c in h.items():
        sign = sum(g.mask[i] for i in subset) & 1
        out.append(([g.perm[i] for i in subset], -c if sign else c))
    return SpinPolynomial(h.n_spins, out)


# truth tables ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class TruthTable:
    """Single-output Boolean function; row ``r`` holds f(x) where x_0 is the MSB of r."""

    n_inputs: int
    outputs: tuple[int, ...]

    def __post_init__(self):
        if len(self.outputs) != 1 << self.n_inputs:
            raise ValueError(f"need {1 << self.n_inputs} outputs, got {len(self.outputs)}")
        if any(b not in (0, 1) for b in self.outputs):
            raise ValueError("outputs must be bits")

    @classmethod
    def from_bits(cls, bits: str | Sequence[int]) -> "TruthTable":
        vals = tuple(int(b) for b in bits)
        n = max(len(vals).bit_length() - 1, 0)
        return cls(n, vals)

    @classmethod
    def from_function(cls, fn, n_inputs: int) -> "TruthTable":
        return cls(n_inputs, tuple(int(fn(*row_bits(r, n_inputs))) & 1
                                   for r in range(1 << n_inputs)))

    def __call__(self, *inputs: int) -> int:
        return self.outputs[row_index(inputs)]

    def rows(self):
        for r, z in enumerate(self.outputs):
            yield row_bits(r, self.n_inputs), z

    def ground_bits(self) -> set[str]:
        """Bit strings (inputs then output) that a Hamiltonian embedding must make ground."""
        return {"".join(map(str, x)) + str(z) for x, z in self.rows()}

    @property
    def name(self) -> str | None:
        return TABLE_NAMES.get(self)

    def __str__(self):
        return "".join(map(str, self.outputs))


def row_bits(r: int, n: int) -> tuple[int, ...]:
    return tuple((r >> (n - 1 - i)) & 1 for i in range(n))


def row_index(bits: Sequence[int]) -> int:
    r = 0
    for b in bits:
        r = (r << 1) | int(b)
    return r


TABLES: dict[str, TruthTable] = {
    name: TruthTable(2, tuple(int(c) for c in bits))
    for name, bits in [
        ("ZERO", "0000"), ("ONE", "1111"),
        ("COPY", "0011"), ("NOT", "1100"), ("COPY2", "0101"), ("NOT2", "1010"),
        ("AND", "0001"), ("OR", "0111"), ("NAND", "1110"), ("NOR", "1000"),
        ("ANDN1", "0100"), ("ANDN2", "0010"), ("ORN1", "1101"), ("ORN2", "1011"),
        ("XOR", "0110"), ("EQUIV", "1001"),
    ]
}
TABLE_NAMES = {t: n for n, t in TABLES.items()}


def lookup_table(spec: str) -> TruthTable:
    """Table from a gate name (``"NAND"``) or an output vector (``"1110"``)."""
    key = spec.strip().upper()
    if key in TABLES:
        return TABLES[key]
    if key and set(key) <= {"0", "1"} and (len(key) & (len(key) - 1)) == 0:
        return TruthTable.from_bits(key)
    raise ValueError(f"not a table name or bit vector: {spec!r}")


def all_tables(n_inputs: int = 2) -> list[TruthTable]:
    size = 1 << n_inputs
    return [TruthTable(n_inputs, row_bits(v, size)) for v in range(1 << size)]


def apply_to_table(g: SymmetryOp, t: TruthTable) -> TruthTable:
    n = t.n_inputs
    if g.n_spins != n + 1:
        raise DimensionError(f"{g.n_spins}-spin operation on a {n}-input table")
    if g.perm[n] != n:
        raise PartitionError(f"{g.label()} moves the output spin")
    out = [0] * (1 << n)
    for x, z in t.rows():
        image = g.apply_bits(x + (z,))
        out[row_index(image[:n])] = image[n]
    return TruthTable(n, tuple(out))


def table_from_ground_bits(bits: Iterable[str], n_inputs: int,
                           output: int | None = None) -> TruthTable | None:
    """Read a single-output table off a ground space, or ``None`` if it is not a function.

    Spins ``0..n_inputs-1`` are inputs and ``output`` (default ``n_inputs``)
    is the output; any further spins are ancillas and are projected out.
    Every input row must appear exactly once after projection.
    """
    out_pos = n_inputs if output is None else output
    seen: dict[int, set[int]] = {}
    for b in bits:
        x = tuple(int(c) for c in b[:n_inputs])
        seen.setdefault(row_index(x), set()).add(int(b[out_pos]))
    if len(seen) != 1 << n_inputs or any(len(v) != 1 for v in seen.values()):
        return None
    return TruthTable(n_inputs, tuple(next(iter(seen[r])) for r in range(1 << n_inputs)))


# the group -------------------------------------------------------------------

R12 = SymmetryOp.swap(0, 1, 3)
F1 = SymmetryOp.flip(0, n=3)
F2 = SymmetryOp.flip(1, n=3)
F3 = SymmetryOp.flip(2, n=3)
E = SymmetryOp.identity(3)
GENERATORS = (R12, F1, F3)


def closure(generators: Iterable[SymmetryOp]) -> tuple[SymmetryOp, ...]:
    gens = list(generators)
    if not gens:
        return ()
    found = {SymmetryOp.identity(gens[0].n_spins)}
    frontier = list(found)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = g * a
                if b not in found:
                    found.add(b)
                    nxt.append(b)
        frontier = nxt
    return tuple(sorted(found))


_GROUP: tuple[SymmetryOp, ...] | None = None


def group_elements() -> tuple[SymmetryOp, ...]:
    """The 16 elements generated by R12, F1 and F3 on three spins, sorted."""
    global _GROUP
    if _GROUP is None:
        _GROUP = closure(GENERATORS)
    return _GROUP


@dataclass(frozen=True)
class Orbit:
    representative: TruthTable
    members: tuple[TruthTable, ...]
    stabilizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)


def orbit_of(t: TruthTable) -> tuple[TruthTable, ...]:
    return tuple(sorted({apply_to_table(g, t) for g in group_elements()}))


def orbits() -> list[Orbit]:
    """Partition of the 16 two-input tables, ordered by smallest member."""
    remaining = set(all_tables(2))
    out = []
    while remaining:
        rep = min(remaining)
        members = orbit_of(rep)
        remaining -= set(members)
        out.append(Orbit(rep, members, len(stabilizer(rep))))
    return out


def stabilizer(t: TruthTable) -> tuple[SymmetryOp, ...]:
    return tuple(g for g in group_elements() if apply_to_table(g, t) == t)


def transporter(src: TruthTable, dst: TruthTable) -> SymmetryOp | None:
    """First group element (in a fixed order preferring pure flips) mapping ``src`` to ``dst``."""
    for g in sorted(group_elements(), key=lambda g: (g.perm != (0, 1, 2), g)):
        if apply_to_table(g, src) == dst:
            return g
    return None


# circuit-level symmetries -------------------------------------------------------

def circuit_symmetry_bound(circuit) -> int:
    """Product of per-gate stabilizer orders: a lower bound on the circuit's symmetry group."""
    return math.prod(p.stabilizer_order for p in circuit.placements)


def ancilla_flip(circuit, wire: str) -> SpinPolynomial:
    """Negate one ancilla spin in every gate term of a compiled circuit."""
    if wire not in circuit.wire_index:
        raise RoleError(f"unknown wire {wire!r}")
    if circuit.roles[wire] != "ancilla":
        raise RoleError(f"wire {wire!r} is an {circuit.roles[wire]}, not an ancilla")
    h = circuit.hamiltonian
    return apply_to_hamiltonian(SymmetryOp.flip(circuit.wire_index[wire], n=h.n_spins), h)

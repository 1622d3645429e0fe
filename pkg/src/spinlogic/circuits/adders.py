"""Half, full and ripple-carry adder netlists in two gate vocabularies.

``"all-nand"`` uses only NAND gates; ``"standard"`` uses XOR, AND and OR.
The all-NAND full adder keeps both half-adder carry wires even though the
carry-out reads only the internal NAND outputs; that is what gives it nine
ancillas and the 38-gate four-bit ripple adder.
"""
from __future__ import annotations

from .netlist import GateInstance, Netlist

VARIANTS = ("all-nand", "standard")


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return variant


def _gate(kind, inputs, output, ancilla=None):
    return GateInstance(kind, tuple(inputs), output, ancilla)


def _half_adder_gates(variant, a, b, s, c, tag=""):
    if variant == "standard":
        return [_gate("XOR", (a, b), s, f"a{tag}"), _gate("AND", (a, b), c)]
    t, u, v = f"t{tag}", f"u{tag}", f"v{tag}"
    return [
        _gate("NAND", (a, b), t),
        _gate("NAND", (a, t), u),
        _gate("NAND", (b, t), v),
        _gate("NAND", (u, v), s),
        _gate("NAND", (t, t), c),
    ]


def _full_adder_gates(variant, a, b, cin, s, cout, tag=""):
    s1, c1, c2 = f"S1{tag}", f"c1{tag}", f"c2{tag}"
    first = _half_adder_gates(variant, a, b, s1, c1, f"1{tag}")
    second = _half_adder_gates(variant, s1, cin, s, c2, f"2{tag}")
    if variant == "standard":
        last = _gate("OR", (c1, c2), cout)
    else:
        last = _gate("NAND", (f"t1{tag}", f"t2{tag}"), cout)
    return first + second + [last]


def half_adder(variant: str = "standard") -> Netlist:
    """Inputs ``A B``, outputs sum ``S`` and carry ``C``."""
    variant = _check_variant(variant)
    return Netlist(["A", "B"], ["S", "C"], _half_adder_gates(variant, "A", "B", "S", "C"))


def full_adder(variant: str = "standard") -> Netlist:
    """Inputs ``A B Cin``, outputs ``S Cout``."""
    variant = _check_variant(variant)
    return Netlist(["A", "B", "Cin"], ["S", "Cout"],
                   _full_adder_gates(variant, "A", "B", "Cin", "S", "Cout"))


def ripple_adder(n_bits: int, variant: str = "standard") -> Netlist:
    """``n_bits`` adder: one half adder on bit 0, full adders above it.

    Inputs ``A0..A{n-1} B0..B{n-1}`` (bit 0 least significant), outputs
    ``S0..S{n-1}`` and the final carry ``C{n-1}``. With ``n_bits=1`` this is
    the half adder with indexed wire names.
    """
    variant = _check_variant(variant)
    if n_bits < 1:
        raise ValueError("n_bits must be >= 1")
    a = [f"A{i}" for i in range(n_bits)]
    b = [f"B{i}" for i in range(n_bits)]
    s = [f"S{i}" for i in range(n_bits)]
    c = [f"C{i}" for i in range(n_bits)]
    gates = _half_adder_gates(variant, a[0], b[0], s[0], c[0], "_0")
    for i in range(1, n_bits):
        gates += _full_adder_gates(variant, a[i], b[i], c[i - 1], s[i], c[i], f"_{i}")
    return Netlist(a + b, s + [c[-1]], gates)


def adder_io(n_bits: int) -> tuple[list[str], list[str], list[str]]:
    """Wire names of the two summands (LSB first) and the result (LSB first, carry last)."""
    return ([f"A{i}" for i in range(n_bits)], [f"B{i}" for i in range(n_bits)],
            [f"S{i}" for i in range(n_bits)] + [f"C{n_bits - 1}"])

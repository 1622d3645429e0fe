"""Gate Hamiltonians whose ground space is a gate's truth table.

Spin roles are positional: inputs first, then the output, then any ancilla.
For two-input gates that is ``(x, y, z)`` on spins 0, 1, 2 and, for the
two-local XOR family, an ancilla on spin 3.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GateLookupError, ParameterError
from .poly import SpinPolynomial, embed
from .symmetry import (
    TABLES,
    SymmetryOp,
    TruthTable,
    apply_to_hamiltonian,
    orbit_of,
    transporter,
)


def _s(*idx, n, c=1.0):
    return SpinPolynomial.spin(*idx, n_spins=n, coeff=c)


def _one(n):
    return SpinPolynomial.constant(1.0, n)


def _check_finite(**vals):
    for k, v in vals.items():
        if not math.isfinite(float(v)):
            raise ParameterError(f"{k}={v!r} is not finite")


@dataclass(frozen=True)
class NandParams:
    c1: float = 1.0
    c2: float = 1.0
    c12: float = 1.0

    def __post_init__(self):
        _check_finite(c1=self.c1, c2=self.c2, c12=self.c12)
        for k in ("c1", "c2", "c12"):
            if not getattr(self, k) > 0:
                raise ParameterError(f"{k} must be > 0, got {getattr(self, k)!r}")

    def as_tuple(self):
        return (self.c1, self.c2, self.c12)


@dataclass(frozen=True)
class XorParams:
    c1: float = 1.0
    c2: float = 1.0
    c12: float = 1.0

    def __post_init__(self):
        _check_finite(c1=self.c1, c2=self.c2, c12=self.c12)
        for k in ("c1", "c2", "c12"):
            if not getattr(self, k) > 0.5:
                raise ParameterError(f"{k} must be > 1/2, got {getattr(self, k)!r}")

    def as_tuple(self):
        return (self.c1, self.c2, self.c12)


@dataclass(frozen=True)
class OrbitPoint:
    """Which of the NAND spins are negated: input 1, input 2, output."""

    negate_in1: int = 0
    negate_in2: int = 0
    negate_out: int = 0

    def __post_init__(self):
        for v in (self.negate_in1, self.negate_in2, self.negate_out):
            if v not in (0, 1):
                raise ParameterError(f"orbit indicators must be 0 or 1, got {v!r}")

    def as_tuple(self):
        return (self.negate_in1, self.negate_in2, self.negate_out)

    def as_op(self) -> SymmetryOp:
        return SymmetryOp((0, 1, 2), self.as_tuple())


@dataclass(frozen=True)
class SwapSymmetricCoeffs:
    """Coefficients of the general input/output-swap-symmetric four-spin Hamiltonian.

    ``r_z`` multiplies ``M_z = s0 + s1 + s2``, ``r_zz`` multiplies
    ``M_zz = s0 s1 + s0 s2 + s1 s2``, and the ancilla couples as
    ``s3 (r_4 + r_z4 M_z)``.
    """

    r_z: float
    r_zz: float
    r_4: float
    r_z4: float

    @classmethod
    def from_vector(cls, vec) -> "SwapSymmetricCoeffs":
        """Parse the vector notation ``[r_zz, r_z, r_4, r_z4]``.

        The pair coupling comes first, so ``[1, -1, -2, 2]`` means
        ``r_zz = 1`` and ``r_z = -1``. Read that way it embeds XOR under the
        ``x = (1 - s) / 2`` convention.
        """
        r_zz, r_z, r_4, r_z4 = (float(v) for v in vec)
        return cls(r_z=r_z, r_zz=r_zz, r_4=r_4, r_z4=r_z4)

    def as_vector(self):
        return [self.r_zz, self.r_z, self.r_4, self.r_z4]


# NAND and its orbit ---------------------------------------------------------

def nand3local() -> SpinPolynomial:
    """NAND with a genuine three-spin term: ``2 + (1 + s0 + s1 - s0 s1) s2``."""
    n = 3
    return 2 * _one(n) + (_one(n) + _s(0, n=n) + _s(1, n=n) - _s(0, 1, n=n)) * _s(2, n=n)


def nand_family(p: NandParams = NandParams()) -> SpinPolynomial:
    """Two-local NAND Hamiltonian with three free positive parameters.

    ``(c1 s0 + c2 s1)(1 + s2) + (c1 + c2) s2 + c12 (s0 s1 + s0 s2 + s1 s2)``.
    Ground energy is ``-(c1 + c2 + c12)``.
    """
    if not isinstance(p, NandParams):
        p = NandParams(*p)
    n = 3
    c1, c2, c12 = p.as_tuple()
    return ((_s(0, n=n, c=c1) + _s(1, n=n, c=c2)) * (_one(n) + _s(2, n=n))
            + _s(2, n=n, c=c1 + c2)
            + (_s(0, 1, n=n) + _s(0, 2, n=n) + _s(1, 2, n=n)) * c12)


def nand_energy_levels(p: NandParams) -> dict[str, float]:
    """Closed-form energies of the NAND family keyed by state.

    ``"degen"`` is the shared energy of the four truth-table states.
    """
    c1, c2, c12 = p.as_tuple()
    return {
        "degen": -c1 - c2 - c12,
        "000": 3 * (c1 + c2 + c12),
        "010": 3 * c1 - c2 - c12,
        "100": 3 * c2 - c1 - c12,
        "111": 3 * c12 - c1 - c2,
    }


def nand_orbit(p: NandParams = NandParams(), o: OrbitPoint = OrbitPoint()) -> SpinPolynomial:
    """Sign-decorated NAND family; ``o`` picks the point on the NPN orbit.

    Negating input ``k`` multiplies every term containing spin ``k`` by -1,
    so the ground space is the NAND table with those bits complemented.
    """
    if not isinstance(p, NandParams):
        p = NandParams(*p)
    if not isinstance(o, OrbitPoint):
        o = OrbitPoint(*o)
    n = 3
    c1, c2, c12 = p.as_tuple()
    a, b, z = ((-1) ** v for v in o.as_tuple())
    return ((_s(0, n=n, c=a * c1) + _s(1, n=n, c=b * c2)) * (_one(n) + _s(2, n=n, c=z))
            + _s(2, n=n, c=z * (c1 + c2))
            + _s(0, 1, n=n, c=a * b * c12)
            + _s(0, 2, n=n, c=a * z * c12)
            + _s(1, 2, n=n, c=b * z * c12))


def orbit_ground_energy_formula(p: NandParams, o: OrbitPoint) -> float:
    """Closed form often quoted for the orbit's ground energy as a function of ``o``.

    Exhaustive evaluation shows the true ground energy is
    ``-(c1 + c2 + c12)`` at every orbit point (sign flips permute states and
    cannot change the spectrum). This closed form agrees with that only at
    ``o`` in {000, 100, 010, 111}; use :func:`spinlogic.poly.spectrum` when
    the value matters.
    """
    c1, c2, c12 = p.as_tuple()
    a, b, z = ((-1) ** v for v in o.as_tuple())
    return (c12 * (a * b - a * z - b * z)
            - (c1 + c2) * z
            + (1 - z) * (a * c1 + b * c2))


# XOR ------------------------------------------------------------------------

def xor3local() -> SpinPolynomial:
    """``-s0 s1 s2``: ground states have an even number of 1 bits, i.e. z = x XOR y."""
    return _s(0, 1, 2, n=3, c=-1.0)


def swap_symmetric(r: SwapSymmetricCoeffs) -> SpinPolynomial:
    n = 4
    mz = _s(0, n=n) + _s(1, n=n) + _s(2, n=n)
    mzz = _s(0, 1, n=n) + _s(0, 2, n=n) + _s(1, 2, n=n)
    return mz * r.r_z + mzz * r.r_zz + _s(3, n=n) * (_one(n) * r.r_4 + mz * r.r_z4)


def xor_polynomial(c1: float, c2: float, c12: float) -> SpinPolynomial:
    """The XOR family without the parameter-domain check.

    Only :func:`xor_family` guarantees an XOR ground space; this exists so the
    failure below the bound can be examined.
    """
    h = embed(_raw_nor(c1, c2, c12), [0, 1, 3], 4)
    return h - _s(2, n=4) + _s(0, 2, n=4) + _s(1, 2, n=4) + _s(2, 3, n=4, c=2.0)


def _raw_nor(c1, c2, c12):
    # nand_family with all three spins negated, without the domain check
    n = 3
    return ((_s(0, n=n, c=-c1) + _s(1, n=n, c=-c2)) * (_one(n) - _s(2, n=n))
            - _s(2, n=n, c=c1 + c2)
            + (_s(0, 1, n=n) + _s(0, 2, n=n) + _s(1, 2, n=n)) * c12)


def xor_family(p: XorParams = XorParams()) -> SpinPolynomial:
    """Two-local XOR on (x, y, z, ancilla); valid for every parameter above 1/2.

    The ancilla settles to NOR(x, y) in the ground space. Ground energy is
    ``-(c1 + c2 + c12) - 1``.
    """
    if not isinstance(p, XorParams):
        p = XorParams(*p)
    return xor_polynomial(*p.as_tuple())


def xor_ground_energy(p: XorParams) -> float:
    return -(p.c1 + p.c2 + p.c12) - 1.0


# copy, constants, clamps ------------------------------------------------------

def k_copy(k: int) -> SpinPolynomial:
    """``-sum_{i<j} s_i s_j`` on ``k`` spins; ground space is all-0 and all-1."""
    if k < 2:
        raise ParameterError(f"k-COPY needs k >= 2, got {k}")
    return SpinPolynomial(k, {(i, j): -1.0 for i in range(k) for j in range(i + 1, k)})


def clamp(bit_value: int) -> SpinPolynomial:
    """One-spin penalty: 0 when the spin holds ``bit_value``, 1 otherwise."""
    if bit_value not in (0, 1):
        raise ParameterError(f"clamp value must be 0 or 1, got {bit_value!r}")
    sign = 1.0 if bit_value == 1 else -1.0
    return SpinPolynomial(1, {(): 0.5, (0,): 0.5 * sign})


# lookup by name -------------------------------------------------------------------

def _zero3():
    return _one(3) - _s(2, n=3)


def _copy3():
    return _one(3) - _s(0, 2, n=3)


NAND_ORBIT = frozenset(orbit_of(TABLES["NAND"]))
XOR_ORBIT = frozenset(orbit_of(TABLES["XOR"]))
GATE_NAMES = ("ZERO", "ONE", "COPY", "NOT", "AND", "OR", "NAND", "NOR",
              "ANDN1", "ANDN2", "ORN1", "ORN2", "XOR", "EQUIV")


def orbit_point_for(table: TruthTable) -> OrbitPoint:
    """Flip pattern that carries NAND to ``table`` (which must lie on its orbit)."""
    g = transporter(TABLES["NAND"], table)
    if g is None or g.perm != (0, 1, 2):
        raise GateLookupError(f"{table} is not on the NAND orbit")
    return OrbitPoint(*g.mask)


def hamiltonian_for_table(table: TruthTable, params=None) -> SpinPolynomial:
    """A Hamiltonian embedding any of the 16 two-input tables.

    The orbit's representative Hamiltonian is carried over by a group
    element; NAND-orbit tables use the flip-decorated family directly.
    """
    if table.n_inputs != 2:
        raise GateLookupError("only two-input tables have a gate Hamiltonian")
    if table in NAND_ORBIT:
        p = params if params is not None else NandParams()
        if not isinstance(p, NandParams):
            p = NandParams(*p)
        return nand_orbit(p, orbit_point_for(table))
    if table in XOR_ORBIT:
        p = params if params is not None else XorParams()
        if not isinstance(p, XorParams):
            p = XorParams(*p)
        g = transporter(TABLES["XOR"], table)
        return apply_to_hamiltonian(g.extend(4), xor_family(p))
    if params is not None:
        raise ParameterError(f"gate {table.name or table} takes no parameters")
    for rep, h in ((TABLES["ZERO"], _zero3()), (TABLES["COPY"], _copy3())):
        g = transporter(rep, table)
        if g is not None:
            return apply_to_hamiltonian(g, h)
    raise GateLookupError(f"no Hamiltonian for table {table}")  # pragma: no cover


def gate_by_name(name: str, params=None) -> SpinPolynomial:
    key = name.strip().upper()
    if key not in TABLES:
        raise GateLookupError(f"unknown gate {name!r}; expected one of {', '.join(GATE_NAMES)}")
    return hamiltonian_for_table(TABLES[key], params)

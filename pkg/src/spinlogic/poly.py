"""Diagonal spin Hamiltonians as sparse multilinear polynomials.

A Hamiltonian on ``n`` spins is stored as a map from sorted spin-index tuples
to real coefficients; the empty tuple is the identity (constant offset).
Spin ``k`` has eigenvalue ``s_k = +1`` when its bit is 0 and ``-1`` when its
bit is 1, i.e. ``x_k = (1 - s_k) / 2``.

Bit strings are written with spin 0 first, so ``"001"`` means spins 0 and 1
are up (bit 0) and spin 2 is down (bit 1).
"""
from __future__ import annotations

import json
import math
import numbers
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import CapacityError, DimensionError, MappingError

DEFAULT_CAP = 24
TIE_TOL = 1e-9
_CHUNK_BITS = 20

Subset = tuple[int, ...]


def _canonical_subset(subset) -> Subset:
    out = tuple(sorted(int(i) for i in subset))
    if len(set(out)) != len(out):
        raise MappingError(f"repeated spin index in term {out}")
    return out


class SpinPolynomial:
    """Immutable multilinear polynomial in the spin variables.

    Parameters
    ----------
    n_spins : int
        Number of spins the polynomial acts on.
    terms : mapping or iterable of (subset, coeff), optional
        Subsets are iterables of spin indices. Like terms are collected and
        zero coefficients are dropped.
    """

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n_spins: int, terms=None):
        if n_spins < 0:
            raise DimensionError("n_spins must be non-negative")
        self._n = int(n_spins)
        acc: dict[Subset, float] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for subset, coeff in items:
                key = _canonical_subset(subset)
                if key and key[-1] >= self._n or (key and key[0] < 0):
                    raise DimensionError(f"term {key} outside {self._n} spins")
                acc[key] = acc.get(key, 0.0) + float(coeff)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k] != 0.0}
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, n_spins: int) -> "SpinPolynomial":
        return cls(n_spins)

    @classmethod
    def constant(cls, value: float, n_spins: int) -> "SpinPolynomial":
        return cls(n_spins, {(): value})

    @classmethod
    def spin(cls, *indices: int, n_spins: int, coeff: float = 1.0) -> "SpinPolynomial":
        """The monomial ``coeff * s_i * s_j * ...``."""
        return cls(n_spins, {indices: coeff})

    # accessors -------------------------------------------------------------

    @property
    def n_spins(self) -> int:
        return self._n

    @property
    def terms(self) -> dict[Subset, float]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, *indices: int) -> float:
        return self._terms.get(tuple(sorted(indices)), 0.0)

    @property
    def offset(self) -> float:
        return self._terms.get((), 0.0)

    @property
    def max_weight(self) -> int:
        return max((len(k) for k in self._terms), default=0)

    def is_integral(self) -> bool:
        return all(float(c).is_integer() for c in self._terms.values())

    def __len__(self):
        return len(self._terms)

    # algebra ---------------------------------------------------------------

    def _check_same(self, other: "SpinPolynomial"):
        if self._n != other._n:
            raise DimensionError(f"spin count mismatch: {self._n} vs {other._n}")

    def __add__(self, other):
        if isinstance(other, numbers.Real):
            other = SpinPolynomial.constant(other, self._n)
        if not isinstance(other, SpinPolynomial):
            return NotImplemented
        self._check_same(other)
        return SpinPolynomial(self._n, list(self.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1.0)

    def __sub__(self, other):
        if isinstance(other, numbers.Real):
            return self + (-other)
        if not isinstance(other, SpinPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return self.scale(other)
        if not isinstance(other, SpinPolynomial):
            return NotImplemented
        self._check_same(other)
        # s_k^2 = 1, so a product of monomials keeps the symmetric difference
        out: dict[Subset, float] = {}
        for a, ca in self.items():
            sa = set(a)
            for b, cb in other.items():
                key = tuple(sorted(sa.symmetric_difference(b)))
                out[key] = out.get(key, 0.0) + ca * cb
        return SpinPolynomial(self._n, out)

    __rmul__ = __mul__

    def scale(self, factor: float) -> "SpinPolynomial":
        return SpinPolynomial(self._n, {k: c * factor for k, c in self.items()})

    def __eq__(self, other):
        if not isinstance(other, SpinPolynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, tuple(self._terms.items())))
        return self._hash

    def isclose(self, other: "SpinPolynomial", atol: float = TIE_TOL) -> bool:
        if self._n != other._n:
            return False
        keys = set(self._terms) | set(other._terms)
        return all(abs(self.coeff(*k) - other.coeff(*k)) <= atol for k in keys)

    def __repr__(self):
        return f"SpinPolynomial({self._n}, {self._terms!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for subset, c in self.items():
            mono = "".join(f"s{i}" for i in subset)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_fmt(mag)}*{mono}"
            else:
                body = _fmt(mag)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    # evaluation ------------------------------------------------------------

    def __call__(self, assignment) -> float:
        return evaluate(self, assignment)


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(x)


@dataclass(frozen=True)
class Assignment:
    """Joint configuration of ``n_spins`` spins; bit ``k`` of ``word`` is spin ``k``."""

    n_spins: int
    word: int

    def __post_init__(self):
        if self.word < 0 or self.word >> self.n_spins:
            raise DimensionError(f"word {self.word} has bits above {self.n_spins} spins")

    @classmethod
    def from_bits(cls, bits: str | Sequence[int]) -> "Assignment":
        vals = [int(b) for b in bits]
        if any(v not in (0, 1) for v in vals):
            raise ValueError(f"not a bit string: {bits!r}")
        return cls(len(vals), sum(v << k for k, v in enumerate(vals)))

    @classmethod
    def from_spins(cls, spins: Sequence[int]) -> "Assignment":
        return cls.from_bits([(1 - int(s)) // 2 for s in spins])

    def bit(self, k: int) -> int:
        return (self.word >> k) & 1

    def bits(self) -> tuple[int, ...]:
        return tuple(self.bit(k) for k in range(self.n_spins))

    def spins(self) -> tuple[int, ...]:
        return tuple(1 - 2 * b for b in self.bits())

    def to_bits(self) -> str:
        return "".join(str(b) for b in self.bits())

    def __str__(self):
        return self.to_bits()


def _as_assignment(a, n: int) -> Assignment:
    if isinstance(a, Assignment):
        return a
    if isinstance(a, (int, np.integer)):
        return Assignment(n, int(a))
    return Assignment.from_bits(a)


def evaluate(h: SpinPolynomial, a) -> float:
    """Energy of assignment ``a`` (an :class:`Assignment`, bit string or word)."""
    a = _as_assignment(a, h.n_spins)
    if a.n_spins != h.n_spins:
        raise DimensionError(f"assignment has {a.n_spins} spins, polynomial {h.n_spins}")
    total = 0.0
    for subset, c in h.items():
        parity = 0
        for k in subset:
            parity ^= (a.word >> k) & 1
        total += -c if parity else c
    return total


def add(h1: SpinPolynomial, h2: SpinPolynomial) -> SpinPolynomial:
    return h1 + h2


def scale(h: SpinPolynomial, factor: float) -> SpinPolynomial:
    return h.scale(factor)


def embed(h: SpinPolynomial, mapping: Sequence[int], target_n: int,
          allow_merge: bool = False) -> SpinPolynomial:
    """Relabel spin ``i`` of ``h`` as spin ``mapping[i]`` of a ``target_n`` spin system.

    With ``allow_merge`` several source spins may share a target spin; they
    are identified and repeated factors cancel (``s * s = 1``). This is how a
    gate with both inputs tied to one wire is placed.
    """
    mapping = [int(m) for m in mapping]
    if len(mapping) != h.n_spins:
        raise MappingError(f"mapping has {len(mapping)} entries for {h.n_spins} spins")
    if any(m < 0 or m >= target_n for m in mapping):
        raise MappingError(f"mapping {mapping} outside {target_n} target spins")
    if not allow_merge and len(set(mapping)) != len(mapping):
        raise MappingError(f"mapping {mapping} is not injective")
    out: dict[Subset, float] = {}
    for subset, c in h.items():
        targets: set[int] = set()
        for i in subset:
            targets ^= {mapping[i]}
        key = tuple(sorted(targets))
        out[key] = out.get(key, 0.0) + c
    return SpinPolynomial(target_n, out)


# exhaustive enumeration -----------------------------------------------------

def _term_arrays(h: SpinPolynomial, exact: bool):
    masks = np.array([sum(1 << i for i in s) for s, _ in h.items()], dtype=np.int64)
    dtype = np.int64 if exact else np.float64
    coeffs = np.array([c for _, c in h.items()], dtype=dtype)
    return masks, coeffs


def _chunk_energies(masks, coeffs, start: int, stop: int, exact: bool):
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.zeros(stop - start, dtype=np.int64 if exact else np.float64)
    for m, c in zip(masks, coeffs):
        if m == 0:
            out += c
            continue
        parity = np.bitwise_count(idx & m) & 1
        out += c * (1 - 2 * parity.astype(out.dtype))
    return out


def _check_cap(h: SpinPolynomial, cap: int):
    if h.n_spins > cap:
        raise CapacityError(
            f"{h.n_spins} spins exceeds the enumeration cap of {cap}; "
            "use spinlogic.solver.anneal instead")


def energies(h: SpinPolynomial, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Energy of every assignment, indexed by word. Integer dtype when exact."""
    _check_cap(h, cap)
    exact = h.is_integral()
    masks, coeffs = _term_arrays(h, exact)
    return _chunk_energies(masks, coeffs, 0, 1 << h.n_spins, exact)


@dataclass(frozen=True)
class Spectrum:
    """Distinct energy levels with multiplicities, ascending."""

    n_spins: int
    levels: tuple[tuple[float, int], ...]
    ground_states: tuple[Assignment, ...]

    @property
    def ground_energy(self) -> float:
        return self.levels[0][0]

    @property
    def degeneracy(self) -> int:
        return self.levels[0][1]

    def as_dict(self) -> dict[float, int]:
        return dict(self.levels)

    def ground_bits(self) -> set[str]:
        return {a.to_bits() for a in self.ground_states}


def _scan_chunk(masks, coeffs, start, stop, exact):
    e = _chunk_energies(masks, coeffs, start, stop, exact)
    vals, counts = np.unique(e, return_counts=True)
    emin = e.min()
    thresh = emin if exact else emin + TIE_TOL
    cand = np.flatnonzero(e <= thresh)
    return vals, counts, cand + start, e[cand]


def spectrum(h: SpinPolynomial, cap: int = DEFAULT_CAP, threads: int = 1) -> Spectrum:
    """Exhaustive spectrum of ``h``.

    Ties are exact for integer coefficients and grouped with absolute
    tolerance 1e-9 otherwise. ``threads`` splits the assignment range; the
    result does not depend on it.
    """
    _check_cap(h, cap)
    exact = h.is_integral()
    masks, coeffs = _term_arrays(h, exact)
    total = 1 << h.n_spins
    step = 1 << _CHUNK_BITS
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    work = lambda b: _scan_chunk(masks, coeffs, b[0], b[1], exact)  # noqa: E731
    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, bounds))
    else:
        parts = [work(b) for b in bounds]

    vals = np.concatenate([p[0] for p in parts])
    counts = np.concatenate([p[1] for p in parts])
    order = np.argsort(vals, kind="stable")
    vals, counts = vals[order], counts[order]
    levels: list[list] = []
    for v, c in zip(vals.tolist(), counts.tolist()):
        if levels and (v == levels[-1][0] if exact else v - levels[-1][0] <= TIE_TOL):
            levels[-1][1] += c
        else:
            levels.append([v, c])
    ground = levels[0][0]
    thresh = ground if exact else ground + TIE_TOL
    words = np.concatenate([p[2] for p in parts])
    cand_e = np.concatenate([p[3] for p in parts])
    words = np.sort(words[cand_e <= thresh])
    conv = int if exact else float
    return Spectrum(
        n_spins=h.n_spins,
        levels=tuple((conv(e), int(c)) for e, c in levels),
        ground_states=tuple(Assignment(h.n_spins, int(w)) for w in words),
    )


def ground_space_bits(h: SpinPolynomial, cap: int = DEFAULT_CAP) -> set[str]:
    return spectrum(h, cap=cap).ground_bits()


# serialization ----------------------------------------------------------------

def default_wires(n: int) -> list[str]:
    return [f"s{i}" for i in range(n)]


def to_dict(h: SpinPolynomial, wires: Sequence[str] | None = None) -> dict:
    wires = list(wires) if wires is not None else default_wires(h.n_spins)
    if len(wires) != h.n_spins:
        raise DimensionError(f"{len(wires)} wire names for {h.n_spins} spins")
    return {
        "n_spins": h.n_spins,
        "wires": wires,
        "terms": [{"spins": list(s), "coeff": float(c)} for s, c in h.items()],
    }


def from_dict(data: dict) -> tuple[SpinPolynomial, list[str]]:
    n = int(data["n_spins"])
    h = SpinPolynomial(n, [(t["spins"], float(t["coeff"])) for t in data["terms"]])
    wires = list(data.get("wires") or default_wires(n))
    return h, wires


def dumps(obj: dict) -> str:
    """Stable JSON text used for every artifact the package writes."""
    for v in _walk_floats(obj):
        if not math.isfinite(v):
            raise ValueError("non-finite coefficient cannot be serialized")
    return json.dumps(obj, indent=2) + "\n"


def _walk_floats(obj):
    if isinstance(obj, float):
        yield obj
    elif isinstance(obj, dict):
        for v in obj.values():
            yield from _walk_floats(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _walk_floats(v)


def to_json(h: SpinPolynomial, wires: Iterable[str] | None = None) -> str:
    return dumps(to_dict(h, None if wires is None else list(wires)))


def from_json(text: str) -> tuple[SpinPolynomial, list[str]]:
    return from_dict(json.loads(text))
